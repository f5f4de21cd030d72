//! Rudolph's relation between the adjoint Homfly and Kauffman polynomials,
//! and its extension to a satellite decorated by a partition of size two.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::diagram::{DiagramError, LinkDiagram};
use crate::eigen::{c_of, delta_homfly, delta_kauffman, s_of, x_poly, EigenError};
use crate::partition::Partition;
use crate::ring::{Characteristic, RingElem, RingError};
use crate::skein::{EvalConfig, Evaluator, SkeinError};

const C0: Characteristic = Characteristic::Zero;
const C2: Characteristic = Characteristic::Two;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("expected one partition per component ({components}), got {given}")]
    PartitionCount { components: usize, given: usize },
    #[error("only one component of size two with the rest of size one is supported, got {0}")]
    Scope(String),
    #[error("meridian eigenvalues {0} and {1} coincide")]
    NotDistinct(Partition, Partition),
    #[error(transparent)]
    Skein(#[from] SkeinError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// One named comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), passed }
    }
}

/// Invariants of one diagram on both sides of Rudolph's relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RudolphRecord {
    /// Meridian count, when the diagram is one of the `L^(r)`.
    pub r: Option<u32>,
    pub components: usize,
    pub crossings: usize,
    pub kauffman: RingElem,
    /// Adjoint Homfly polynomial reduced mod 2.
    pub adjoint_mod2: RingElem,
    /// Kauffman polynomial reduced mod 2 and squared.
    pub kauffman_bar: RingElem,
    pub passed: bool,
}

/// Values recovered by solving the Vandermonde system
/// `value^(r) = sum_mu e_mu^r x_mu` from `r = 0, 1, 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VandermondeSolution {
    pub eigenvalues: Vec<(Partition, RingElem)>,
    pub solution: Vec<(Partition, RingElem)>,
    /// `value^(3)` predicted from the solution.
    pub predicted: RingElem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub link: String,
    pub partitions: Vec<Partition>,
    /// `sum (|lambda| - 1)` over the components.
    pub induction_n: u32,
    pub records: Vec<RudolphRecord>,
    /// Satellite Kauffman invariant assembled from the `L^(r)`.
    pub assembled_kauffman: Option<RingElem>,
    /// Satellite adjoint-type Homfly invariant, mod 2.
    pub assembled_homfly: Option<RingElem>,
    pub kauffman_solve: Option<VandermondeSolution>,
    pub homfly_solve: Option<VandermondeSolution>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn new(link: &str, partitions: Vec<Partition>) -> Self {
        let induction_n = partitions.iter().map(|p| p.size().saturating_sub(1)).sum();
        VerificationReport {
            link: link.into(),
            partitions,
            induction_n,
            records: Vec::new(),
            assembled_kauffman: None,
            assembled_homfly: None,
            kauffman_solve: None,
            homfly_solve: None,
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed) && self.checks.iter().all(|c| c.passed)
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.partitions.iter().map(|p| format!("({p})")).collect();
        writeln!(f, "link {} partitions {} N={}", self.link, parts.join(" "), self.induction_n)?;
        for rec in &self.records {
            match rec.r {
                Some(r) => write!(f, "  r={r}")?,
                None => write!(f, "  diagram")?,
            }
            writeln!(
                f,
                " components={} crossings={} rudolph {}",
                rec.components,
                rec.crossings,
                mark(rec.passed)
            )?;
            writeln!(f, "    D = {}", rec.kauffman)?;
            writeln!(f, "    P mod 2 = {:?}", rec.adjoint_mod2)?;
        }
        if let Some(d) = &self.assembled_kauffman {
            writeln!(f, "  assembled D = {d}")?;
        }
        if let Some(p) = &self.assembled_homfly {
            writeln!(f, "  assembled P = {p:?}")?;
        }
        for (label, solve) in [("d", &self.kauffman_solve), ("p", &self.homfly_solve)] {
            if let Some(sol) = solve {
                for (mu, x) in &sol.solution {
                    writeln!(f, "  {label}_({mu}) = {x:?}")?;
                }
            }
        }
        for c in &self.checks {
            writeln!(f, "  {} {}", mark(c.passed), c.name)?;
        }
        write!(f, "overall {}", mark(self.passed()))
    }
}

fn rudolph_record(ev: &mut Evaluator, d: &LinkDiagram, r: Option<u32>) -> Result<RudolphRecord, VerifyError> {
    let kauffman = ev.kauffman(d)?;
    let adjoint_mod2 = ev.adjoint_homfly(d)?.to_mod2()?;
    let kauffman_bar = kauffman.to_mod2()?.bar()?;
    let passed = adjoint_mod2 == kauffman_bar;
    Ok(RudolphRecord {
        r,
        components: d.component_count(),
        crossings: d.crossing_count(),
        kauffman,
        adjoint_mod2,
        kauffman_bar,
        passed,
    })
}

/// Compares the adjoint Homfly polynomial mod 2 with the Kauffman polynomial
/// mod 2 under `v -> v^2, s -> s^2`.
pub fn verify_rudolph(d: &LinkDiagram, link: &str, cfg: &EvalConfig) -> Result<VerificationReport, VerifyError> {
    let mut ev = Evaluator::new(cfg.clone());
    let mut report = VerificationReport::new(link, vec![Partition::from_parts(&[1]); d.component_count()]);
    report.records.push(rudolph_record(&mut ev, d, None)?);
    Ok(report)
}

/// Which components of `L^(r)` play which role (1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrLayout {
    pub longitudes: [usize; 2],
    pub meridians: Vec<usize>,
}

/// Two parallel copies of component `comp` encircled by `r` meridians.
pub fn build_lr(d: &LinkDiagram, comp: usize, r: u32) -> Result<(LinkDiagram, LrLayout), VerifyError> {
    let (tracked, id) = d.track_site(comp, None)?;
    let mut out = tracked.cable(comp, 2)?;
    let copy = out.component_count();
    let mut meridians = Vec::with_capacity(r as usize);
    for _ in 0..r {
        out = out.insert_meridian(id)?;
        meridians.push(out.component_count());
    }
    Ok((out, LrLayout { longitudes: [comp, copy], meridians }))
}

/// Solves `values[r] = sum_j e_j^r x_j` for `r < e.len()` by elimination.
fn vandermonde_solve(e: &[RingElem], values: &[RingElem]) -> Result<Vec<RingElem>, VerifyError> {
    let n = e.len();
    let mut rows: Vec<Vec<RingElem>> = (0..n)
        .map(|r| {
            let mut row: Vec<RingElem> = e.iter().map(|x| x.pow(r as u32)).collect();
            row.push(values[r].clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !rows[i][col].is_zero()).ok_or(RingError::DivisionByZero { op: "solve" })?;
        rows.swap(col, pivot);
        let inv = rows[col][col].inverse()?;
        rows[col] = rows[col].iter().map(|x| x * &inv).collect();
        for i in 0..n {
            if i != col && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                let pivot_row = rows[col].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * p);
                }
            }
        }
    }
    Ok(rows.into_iter().map(|mut row| row.pop().expect("augmented column")).collect())
}

fn solve_and_predict(
    mus: &[Partition],
    eigen: Vec<RingElem>,
    values: &[RingElem],
) -> Result<VandermondeSolution, VerifyError> {
    let solution = vandermonde_solve(&eigen, &values[..3])?;
    let chr = values[0].characteristic();
    let predicted = eigen
        .iter()
        .zip(&solution)
        .fold(RingElem::zero(chr), |acc, (c, x)| &acc + &(&c.pow(3) * x));
    Ok(VandermondeSolution {
        eigenvalues: mus.iter().cloned().zip(eigen).collect(),
        solution: mus.iter().cloned().zip(solution).collect(),
        predicted,
    })
}

/// Checks the satellite relation for one component decorated by a partition
/// of size two, with every other component decorated by `(1)`.
///
/// `L^(r)` is built for `r = 0..=3`; each is a Rudolph instance, the
/// combination `sum a_r L^(r)` with `sum a_r t^r = X(t)` is assembled on both
/// sides and compared, and the Vandermonde systems on both sides are solved
/// independently and checked against the deleted-component invariants and the
/// `r = 3` values.
pub fn verify_main(
    d: &LinkDiagram,
    link: &str,
    lambdas: &[Partition],
    cfg: &EvalConfig,
) -> Result<VerificationReport, VerifyError> {
    if lambdas.len() != d.component_count() {
        return Err(VerifyError::PartitionCount { components: d.component_count(), given: lambdas.len() });
    }
    let one = Partition::from_parts(&[1]);
    let big: Vec<usize> = (0..lambdas.len()).filter(|&i| lambdas[i] != one).collect();
    if big.is_empty() {
        let mut report = verify_rudolph(d, link, cfg)?;
        report.partitions = lambdas.to_vec();
        return Ok(report);
    }
    if big.len() > 1 || lambdas[big[0]].size() != 2 {
        let parts: Vec<String> = lambdas.iter().map(|p| format!("({p})")).collect();
        return Err(VerifyError::Scope(parts.join(" ")));
    }
    let comp = big[0] + 1;
    let lambda = &lambdas[big[0]];
    let x = x_poly(lambda, &one)?;
    let mus: Vec<Partition> = one.neighbors().into_iter().collect();
    for (i, a) in mus.iter().enumerate() {
        for b in &mus[i + 1..] {
            if c_of(a, C2) == c_of(b, C2) {
                return Err(VerifyError::NotDistinct(a.clone(), b.clone()));
            }
        }
    }

    let mut report = VerificationReport::new(link, lambdas.to_vec());
    let mut ev = Evaluator::new(cfg.clone());
    for r in 0..=3 {
        let (lr, _) = build_lr(d, comp, r)?;
        report.records.push(rudolph_record(&mut ev, &lr, Some(r))?);
    }
    let ds: Vec<RingElem> = report.records.iter().map(|rec| rec.kauffman.clone()).collect();
    let ps: Vec<RingElem> = report.records.iter().map(|rec| rec.adjoint_mod2.clone()).collect();

    // Assemble both sides with the expansion coefficients.
    let scale = x.scale(C0);
    let d_sum = x.coeffs.iter().zip(&ds).fold(RingElem::zero(C0), |acc, (a, v)| &acc + &(a * v));
    let d_assembled = d_sum.checked_div(&scale)?;
    let mut p_sum = RingElem::zero(C2);
    for (a, v) in x.coeffs.iter().zip(&ps) {
        p_sum = &p_sum + &(&a.to_mod2()?.bar()? * v);
    }
    let p_assembled = p_sum.checked_div(&scale.to_mod2()?.bar()?)?;
    report
        .checks
        .push(Check::new("assembled P equals bar(D)", p_assembled == d_assembled.to_mod2()?.bar()?));

    // Independent route: eliminate on the eigenvalue systems.
    let rest = d.delete_component(comp)?;
    let rest_kauffman = ev.kauffman(&rest)?;
    let rest_adjoint = ev.adjoint_homfly(&rest)?.to_mod2()?;
    let k_eigen: Vec<RingElem> = mus.iter().map(|m| c_of(m, C0)).collect();
    let h_eigen = k_eigen.iter().map(|c| c.to_mod2()?.bar()).collect::<Result<Vec<_>, _>>()?;
    let ksol = solve_and_predict(&mus, k_eigen, &ds)?;
    let hsol = solve_and_predict(&mus, h_eigen, &ps)?;
    let at = |sol: &VandermondeSolution, mu: &Partition| {
        sol.solution.iter().find(|(m, _)| m == mu).map(|(_, x)| x.clone()).expect("mu solved")
    };
    let empty = Partition::empty();
    report.checks.push(Check::new("kauffman r=3 predicted", ksol.predicted == ds[3]));
    report.checks.push(Check::new("kauffman d_phi equals deleted component", at(&ksol, &empty) == rest_kauffman));
    report.checks.push(Check::new(
        format!("kauffman d_({lambda}) equals assembled D"),
        at(&ksol, lambda) == d_assembled,
    ));
    report.checks.push(Check::new("homfly r=3 predicted", hsol.predicted == ps[3]));
    report.checks.push(Check::new("homfly p_phi equals deleted component", at(&hsol, &empty) == rest_adjoint));
    report.checks.push(Check::new(
        format!("homfly p_({lambda}) equals assembled P"),
        at(&hsol, lambda) == p_assembled,
    ));
    report.assembled_kauffman = Some(d_assembled);
    report.assembled_homfly = Some(p_assembled);
    report.kauffman_solve = Some(ksol);
    report.homfly_solve = Some(hsol);
    Ok(report)
}

/// Meridians around a single unknotted strand against the eigenvalues:
/// `delta_K c_(1)^r` for the Kauffman polynomial, and `delta_H s^r` for the
/// Homfly polynomial with the meridians oriented either way.
pub fn eigen_consistency(max_r: u32, cfg: &EvalConfig) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new("unknot", vec![Partition::from_parts(&[1])]);
    let mut ev = Evaluator::new(cfg.clone());
    let one = Partition::from_parts(&[1]);
    let empty = Partition::empty();
    let (c1, s_with, s_against) = (c_of(&one, C0), s_of(&one, &empty, C0), s_of(&empty, &one, C0));
    let (dk, dh) = (delta_kauffman(C0), delta_homfly(C0));
    for r in 0..=max_r {
        let (lr, layout) = build_lr_single(r)?;
        let k = ev.kauffman(&lr)?;
        report.checks.push(Check::new(format!("kauffman r={r}"), k == &dk * &c1.pow(r)));
        let h = ev.homfly(&lr)?;
        report.checks.push(Check::new(format!("homfly r={r} meridians with"), h == &dh * &s_with.pow(r)));
        let flipped = lr.reverse(&layout)?;
        let h = ev.homfly(&flipped)?;
        report.checks.push(Check::new(format!("homfly r={r} meridians against"), h == &dh * &s_against.pow(r)));
    }
    Ok(report)
}

/// The unknot with `r` meridians, and the meridian components.
fn build_lr_single(r: u32) -> Result<(LinkDiagram, Vec<usize>), VerifyError> {
    let (mut d, id) = LinkDiagram::unknot().track_site(1, None)?;
    let mut meridians = Vec::new();
    for _ in 0..r {
        d = d.insert_meridian(id)?;
        meridians.push(d.component_count());
    }
    Ok((d, meridians))
}
