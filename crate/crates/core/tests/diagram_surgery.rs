use proptest::prelude::*;
use satskein_core::corpus;
use satskein_core::diagram::{DiagramError, DiagramIssue, LinkDiagram, PdCode};

fn hopf() -> LinkDiagram {
    corpus::get("hopf_plus").unwrap()
}

fn signs(d: &LinkDiagram) -> Vec<i64> {
    (0..d.crossing_count()).map(|x| d.sign(x)).collect()
}

#[test]
fn validation_reports() {
    let u = LinkDiagram::unknot().validate().unwrap();
    assert_eq!((u.components, u.crossings, u.writhe), (1, 0, 0));
    let h = hopf().validate().unwrap();
    assert_eq!((h.components, h.crossings, h.writhe), (2, 2, 2));
    assert_eq!(h.self_writhe, vec![0, 0]);
    assert_eq!(hopf().linking_number(1, 2).unwrap(), 1);
    assert_eq!(corpus::get("hopf_minus").unwrap().linking_number(1, 2).unwrap(), -1);
    assert_eq!(corpus::get("trefoil").unwrap().validate().unwrap().writhe, -3);
    assert_eq!(corpus::get("figure_eight").unwrap().validate().unwrap().writhe, 0);
}

#[test]
fn malformed_codes_are_rejected() {
    let mut code = hopf().to_pd();
    code.crossings[1][0] = 9;
    code.component_of_edge.insert(9, 2);
    match LinkDiagram::from_pd(&code) {
        Err(DiagramError::Invalid(issues)) => {
            assert!(issues.iter().any(|i| matches!(i, DiagramIssue::EdgeCount { edge: 9, count: 1 })))
        }
        other => panic!("accepted a dangling edge: {other:?}"),
    }
    let lonely = PdCode { components: 1, ..PdCode::default() };
    assert!(LinkDiagram::from_pd(&lonely).is_err());
}

#[test]
fn pd_round_trip_on_corpus() {
    for (name, d) in corpus::all() {
        let back = LinkDiagram::from_pd(&d.to_pd()).unwrap();
        assert_eq!(back, d, "{name}");
        assert_eq!(back.to_pd(), d.to_pd(), "{name}");
    }
}

#[test]
fn cable_examples() {
    let u2 = LinkDiagram::unknot().cable(1, 2).unwrap();
    assert_eq!((u2.component_count(), u2.crossing_count()), (2, 0));
    let h2 = hopf().cable(1, 2).unwrap();
    assert_eq!((h2.component_count(), h2.crossing_count()), (3, 4));
    h2.validate().unwrap();
    assert_eq!(hopf().cable(1, 1).unwrap(), hopf());
    assert_eq!(hopf().cable(1, 0), Err(DiagramError::ZeroWidth));
    assert_eq!(hopf().cable(3, 2), Err(DiagramError::NoComponent(3)));
}

#[test]
fn cable_count_formula() {
    for (name, d) in corpus::all() {
        for comp in 1..=d.component_count() {
            let (own, mixed) = d.crossing_census(comp).unwrap();
            for n in 1..=3usize {
                let c = d.cable(comp, n).unwrap();
                c.validate().unwrap();
                let expected = d.crossing_count() + (n * n - 1) * own + (n - 1) * mixed;
                assert_eq!(c.crossing_count(), expected, "{name} comp {comp} n {n}");
                // Deleting the new copies brings back the original.
                let mut back = c.clone();
                for extra in (d.component_count() + 1..=c.component_count()).rev() {
                    back = back.delete_component(extra).unwrap();
                }
                assert_eq!(back.crossing_count(), d.crossing_count(), "{name}");
            }
        }
    }
}

#[test]
fn meridian_examples() {
    let (u, id) = LinkDiagram::unknot().track_site(1, None).unwrap();
    let m1 = u.insert_meridian(id).unwrap();
    assert_eq!((m1.component_count(), m1.crossing_count()), (2, 2));
    assert_eq!(m1.linking_number(1, 2).unwrap().abs(), 1);
    assert_eq!(m1.delete_component(2).unwrap(), LinkDiagram::unknot());

    let (h, id) = hopf().track_site(1, None).unwrap();
    let wide = h.cable(1, 2).unwrap();
    assert_eq!(wide.bundle_width(id).unwrap(), 2);
    let one = wide.insert_meridian(id).unwrap();
    assert_eq!(one.crossing_count(), wide.crossing_count() + 4);
    let report = one.validate().unwrap();
    assert_eq!(report.self_writhe[3], 0);
    assert_eq!(one.delete_component(4).unwrap(), wide);

    let two = one.insert_meridian(id).unwrap();
    two.validate().unwrap();
    assert_eq!(two.linking_number(4, 5).unwrap(), 0);
    let mut rest = two.clone();
    for c in [3, 2, 1] {
        rest = rest.delete_component(c).unwrap();
    }
    let left = rest.validate().unwrap();
    assert_eq!((left.components, left.crossings), (2, 0));
}

#[test]
fn reversal_examples() {
    let h = hopf();
    assert_eq!(signs(&h.reverse(&[1, 2]).unwrap()), vec![1, 1]);
    assert_eq!(signs(&h.reverse(&[1]).unwrap()), vec![-1, -1]);
    assert_eq!(h.reverse(&[2]).unwrap().reverse(&[2]).unwrap(), h);
}

#[test]
fn deletion_examples() {
    for c in [1, 2] {
        let d = hopf().delete_component(c).unwrap();
        assert_eq!(d, LinkDiagram::unknot());
    }
    let t = corpus::get("trefoil").unwrap();
    let u = t.disjoint_union(&hopf());
    assert_eq!(u.delete_component(3).unwrap().delete_component(2).unwrap(), t);
    assert_eq!(u.delete_component(1).unwrap(), hopf());
}

#[test]
fn canonical_codes() {
    let h = hopf();
    let relabeled = PdCode {
        components: 2,
        crossings: vec![[1, 4, 2, 3], [4, 1, 3, 2]],
        component_of_edge: [(1, 1), (2, 1), (3, 2), (4, 2)].into_iter().collect(),
        free_loops: Default::default(),
    };
    let r = LinkDiagram::from_pd(&relabeled).unwrap();
    assert_eq!(r.validate().unwrap().writhe, 2);
    assert_eq!(r.canonical_code(), h.canonical_code());
    assert_ne!(h.canonical_code(), LinkDiagram::unlink(2).canonical_code());
    assert_ne!(h.canonical_code(), corpus::get("hopf_minus").unwrap().canonical_code());
    assert_eq!(h.canonical_code(), hopf().canonical_code());
}

#[derive(Clone, Debug)]
enum Op {
    Cable(usize, usize),
    Meridian,
    Reverse(usize),
    Curl(usize, bool, bool),
    Union(usize),
    Delete(usize),
}

fn op_strategy() -> impl Strategy<Value = Op> {
    prop_oneof![
        (0usize..4, 1usize..3).prop_map(|(c, n)| Op::Cable(c, n)),
        Just(Op::Meridian),
        (0usize..4).prop_map(Op::Reverse),
        (0usize..4, any::<bool>(), any::<bool>()).prop_map(|(c, p, o)| Op::Curl(c, p, o)),
        (0usize..7).prop_map(Op::Union),
        (0usize..4).prop_map(Op::Delete),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn surgeries_stay_valid(start in 0usize..7, ops in prop::collection::vec(op_strategy(), 1..5)) {
        let corpus = corpus::all();
        let (mut d, mut id) = corpus[start].1.track_site(1, None).unwrap_or_else(|_| {
            LinkDiagram::unknot().track_site(1, None).unwrap()
        });
        for op in ops {
            let k = d.component_count();
            if k == 0 || d.crossing_count() > 40 {
                break;
            }
            let pick = |c: usize| c % k + 1;
            let before = d.clone();
            d = match op {
                Op::Cable(c, n) => d.cable(pick(c), n).unwrap(),
                Op::Meridian => {
                    let m = d.insert_meridian(id).unwrap();
                    let back = m.delete_component(m.component_count()).unwrap();
                    prop_assert_eq!(&back, &before);
                    m
                }
                Op::Reverse(c) => {
                    let r = d.reverse(&[pick(c)]).unwrap();
                    // Only crossings between the reversed component and the rest flip.
                    let own = before.passages(pick(c)).unwrap();
                    for x in 0..d.crossing_count() {
                        let hits = own.iter().filter(|p| p.crossing == x).count();
                        let flipped = r.sign(x) != before.sign(x);
                        prop_assert_eq!(flipped, hits == 1);
                    }
                    prop_assert_eq!(r.reverse(&[pick(c)]).unwrap(), before.clone());
                    r
                }
                Op::Curl(c, p, o) => {
                    let comp = pick(c);
                    let m = d.passages(comp).unwrap().len();
                    let at = if m == 0 { 0 } else { c % m };
                    let curled = d.add_curl(comp, at, p, o).unwrap();
                    prop_assert_eq!(curled.writhe(), d.writhe() + if p { 1 } else { -1 });
                    curled
                }
                Op::Union(i) => d.disjoint_union(&corpus[i].1),
                Op::Delete(c) => {
                    if k == 1 {
                        continue;
                    }
                    let comp = pick(c);
                    if d.bundle_components(id).unwrap().contains(&comp) {
                        continue;
                    }
                    let out = d.delete_component(comp).unwrap();
                    prop_assert_eq!(out.component_count(), k - 1);
                    out
                }
            };
            d.validate().unwrap();
            if d.bundle_width(id).is_err() {
                let fresh = d.track_site(1, None).unwrap();
                d = fresh.0;
                id = fresh.1;
            }
        }
    }
}
