use satskein::linkfile::{load, LinkFile};
use satskein::run;
use satskein_core::corpus;
use satskein_core::diagram::LinkDiagram;
use satskein_core::eigen::delta_kauffman;
use satskein_core::ring::Characteristic::Zero;
use serde_json::Value;

fn sk(args: &[&str]) -> satskein::Output {
    run(std::iter::once("satskein").chain(args.iter().copied()))
}

#[test]
fn json_round_trip_on_corpus() {
    for (name, d) in corpus::all() {
        let file = LinkFile::from_diagram(name, &d);
        let text = file.to_json();
        let back = LinkFile::parse(&text, name).unwrap();
        assert_eq!(back, file, "{name}");
        assert_eq!(back.to_json(), text, "{name}");
        assert_eq!(LinkDiagram::from_pd(&back.to_pd()).unwrap(), d, "{name}");
        assert_eq!(sk(&["corpus", "show", name]).stdout, format!("{text}\n"));
    }
}

#[test]
fn link_files_load_from_disk() {
    let dir = std::env::temp_dir().join(format!("satskein-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("trefoil.json");
    std::fs::write(&path, sk(&["corpus", "show", "trefoil"]).stdout).unwrap();
    let path = path.to_str().unwrap();
    let (name, d) = load(path).unwrap();
    assert_eq!((name.as_str(), d), ("trefoil", corpus::get("trefoil").unwrap()));
    assert_eq!(sk(&["skein", "homfly", path]).stdout, sk(&["skein", "homfly", "corpus:trefoil"]).stdout);

    let broken = dir.join("broken.json");
    std::fs::write(&broken, r#"{"name":"x","components":1,"crossings":[[1,2,3,4]],"component_of_edge":{"1":1}}"#).unwrap();
    assert!(load(broken.to_str().unwrap()).is_err());
    std::fs::write(&broken, "{").unwrap();
    assert!(load(broken.to_str().unwrap()).is_err());
    assert!(load("corpus:nope").is_err());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn canonical_values() {
    let dk = format!("{}\n", delta_kauffman(Zero));
    assert_eq!(sk(&["eigen", "c", "--partition", "0"]).stdout, dk);
    let out = sk(&["skein", "kauffman", "corpus:unknot"]);
    assert_eq!((out.code, out.stdout), (0, dk));
    assert_eq!(sk(&["skein", "adjoint", "corpus:empty"]).stdout, "1\n");
}

#[test]
fn errors_exit_nonzero() {
    let out = sk(&["skein", "homfly", "corpus:trefoil", "--max-crossings", "2"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("budget"), "{}", out.stderr);
    for bad in [&["frobnicate"][..], &["skein", "jones", "corpus:unknot"], &["eigen", "c"], &["expand", "--partition", "x"]] {
        let out = sk(bad);
        assert_eq!(out.code, 2, "{bad:?}");
        assert!(out.stderr.contains("Usage"), "{bad:?}");
    }
    assert_eq!(sk(&["expand", "--partition", "0"]).code, 1);
    assert_eq!(sk(&["verify", "main", "corpus:unknot", "--partition", "3"]).code, 1);
    assert_eq!(sk(&["verify", "main", "corpus:unknot", "--component", "2", "--partition", "2"]).code, 1);
    assert_eq!(sk(&["--help"]).code, 0);
}

#[test]
fn reports_as_text_and_json() {
    let out = sk(&["verify", "rudolph", "corpus:hopf_plus"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.ends_with("overall pass\n"), "{}", out.stdout);
    let out = sk(&["verify", "rudolph", "corpus:trefoil", "--json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["passed"], Value::Bool(true));
    assert_eq!(v["records"][0]["crossings"], 3);

    let out = sk(&["verify", "eigen-consistency", "--max-r", "2", "--json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 9);
    assert_eq!(out.code, 0);

    let out = sk(&["eigen", "table", "--max-size", "4", "--mod2", "--check-distinct"]);
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 12 + 1);
    let v: Value = serde_json::from_str(lines[12]).unwrap();
    assert_eq!((v["partitions"].clone(), v["passed"].clone()), (Value::from(12), Value::Bool(true)));
}

#[test]
fn expansion_as_json() {
    let out = sk(&["expand", "--partition", "2,1"]);
    assert_eq!(out.code, 0);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["rho"], "2");
    assert_eq!(v["inner"]["rho"], "1");
    assert_eq!(v["inner"]["terms"].as_array().unwrap().len(), 3);
    assert_eq!(v["words"][0]["word"], "l^3");
    let v: Value = serde_json::from_str(&sk(&["expand", "--partition", "2", "--rho", "1"]).stdout).unwrap();
    assert_eq!(v["terms"][2]["coeff"], "1");
    assert_eq!(sk(&["expand", "--partition", "2", "--rho", "0"]).code, 1);
}

#[test]
fn corpus_listing() {
    let out = sk(&["corpus", "list"]);
    let names: Vec<&str> = out.stdout.lines().map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(names, ["empty", "unknot", "unlink2", "hopf_plus", "hopf_minus", "trefoil", "figure_eight"]);
    assert!(out.stdout.contains("hopf_minus\tcomponents=2\tcrossings=2\twrithe=-2"));
}
