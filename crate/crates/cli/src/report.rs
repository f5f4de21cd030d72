//! JSON renderings of core reports. Ring elements go out in canonical text.

use satskein_core::annulus::ExpansionPlan;
use satskein_core::eigen::DistinctReport;
use satskein_core::ring::RingElem;
use satskein_core::verify::{VandermondeSolution, VerificationReport};
use serde_json::{json, Value};

fn text(x: &RingElem) -> String {
    x.to_string()
}

fn solve_json(sol: &Option<VandermondeSolution>) -> Value {
    match sol {
        None => Value::Null,
        Some(sol) => json!({
            "eigenvalues": sol.eigenvalues.iter().map(|(m, c)| json!([m.to_string(), text(c)])).collect::<Vec<_>>(),
            "solution": sol.solution.iter().map(|(m, x)| json!([m.to_string(), text(x)])).collect::<Vec<_>>(),
            "predicted": text(&sol.predicted),
        }),
    }
}

pub fn verification(r: &VerificationReport) -> Value {
    json!({
        "link": r.link,
        "partitions": r.partitions.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "induction_n": r.induction_n,
        "records": r.records.iter().map(|rec| json!({
            "r": rec.r,
            "components": rec.components,
            "crossings": rec.crossings,
            "kauffman": text(&rec.kauffman),
            "adjoint_mod2": text(&rec.adjoint_mod2),
            "kauffman_bar": text(&rec.kauffman_bar),
            "passed": rec.passed,
        })).collect::<Vec<_>>(),
        "assembled_kauffman": r.assembled_kauffman.as_ref().map(text),
        "assembled_homfly": r.assembled_homfly.as_ref().map(text),
        "kauffman_solve": solve_json(&r.kauffman_solve),
        "homfly_solve": solve_json(&r.homfly_solve),
        "checks": r.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed})).collect::<Vec<_>>(),
        "passed": r.passed(),
    })
}

pub fn distinct(r: &DistinctReport) -> Value {
    json!({
        "max_size": r.max_size,
        "partitions": r.partitions,
        "comparisons": r.comparisons,
        "collision": r.collision.as_ref().map(|(a, b)| [a.to_string(), b.to_string()]),
        "passed": r.passed(),
    })
}

pub fn plan(p: &ExpansionPlan) -> Value {
    json!({
        "target": p.target.to_string(),
        "rho": p.rho.to_string(),
        "terms": p.terms.iter().map(|(a, r)| json!({"r": r, "coeff": text(a)})).collect::<Vec<_>>(),
        "scale": text(&p.scale),
        "total_scale": text(&p.total_scale()),
        "words": p.words().iter().map(|(c, w)| json!({"word": w.to_string(), "coeff": text(c)})).collect::<Vec<_>>(),
        "inner": p.inner.as_deref().map(plan),
    })
}
