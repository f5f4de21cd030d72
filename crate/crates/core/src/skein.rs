//! Framed Homfly and Dubrovnik (Kauffman) polynomials by resolution trees.
//!
//! Homfly: `P(X+) - P(X-) = z P(X0)`, a positive curl is `v^-1`, the empty
//! diagram is 1. Kauffman: `D(X) - D(Y) = z (D(=) - D(||))` for the two
//! unoriented smoothings, same curl and empty-diagram rules. Here `z = s - s^-1`.
//!
//! The evaluator simplifies (curls, Reidemeister II bigons, split pieces,
//! components lying entirely above or below the rest), resolves clasps first,
//! and otherwise drives the diagram towards a descending one. Connected pieces
//! are memoized on their canonical code.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::diagram::{DiagramError, LinkDiagram, Pd};
use crate::ring::{Characteristic, LaurentPoly, RingElem};

const C0: Characteristic = Characteristic::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalConfig {
    pub max_crossings: usize,
    pub memo_enabled: bool,
    /// Accepted for interface compatibility; evaluation is single-threaded.
    pub parallelism: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { max_crossings: 24, memo_enabled: true, parallelism: 1 }
    }
}

impl EvalConfig {
    pub fn with_budget(max_crossings: usize) -> Self {
        EvalConfig { max_crossings, ..Self::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("diagram has {crossings} crossings, budget is {budget}")]
    BudgetExceeded { crossings: usize, budget: usize },
    #[error("adjoint term for components {subset:?} has {crossings} crossings, budget is {budget}")]
    AdjointBudget { subset: Vec<usize>, crossings: usize, budget: usize },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Flavor {
    Homfly,
    Kauffman,
}

/// `num / z^k`: skein values only ever need powers of `z` downstairs.
#[derive(Clone, Debug)]
struct ZPoly {
    num: LaurentPoly,
    k: u32,
}

impl ZPoly {
    fn zero() -> Self {
        ZPoly { num: LaurentPoly::zero(C0), k: 0 }
    }

    fn one() -> Self {
        ZPoly { num: LaurentPoly::one(C0), k: 0 }
    }

    fn to_elem(&self) -> RingElem {
        RingElem::over_quantum(self.num.clone(), 1, self.k)
    }
}

/// Resolution-tree evaluator with memo tables that persist across calls.
#[derive(Clone, Debug, Default)]
pub struct Evaluator {
    cfg: EvalConfig,
    memo: BTreeMap<(Flavor, Vec<u32>), ZPoly>,
    zpow: Vec<LaurentPoly>,
}

impl Evaluator {
    pub fn new(cfg: EvalConfig) -> Self {
        let z = LaurentPoly::s(C0) - LaurentPoly::monomial(1, 0, -1, C0);
        Evaluator { cfg, memo: BTreeMap::new(), zpow: vec![LaurentPoly::one(C0), z] }
    }

    pub fn config(&self) -> &EvalConfig {
        &self.cfg
    }

    /// Number of memoized connected pieces.
    pub fn memo_size(&self) -> usize {
        self.memo.len()
    }

    fn check_budget(&self, d: &LinkDiagram) -> Result<(), SkeinError> {
        let crossings = d.crossing_count();
        if crossings > self.cfg.max_crossings {
            return Err(SkeinError::BudgetExceeded { crossings, budget: self.cfg.max_crossings });
        }
        Ok(())
    }

    pub fn homfly(&mut self, d: &LinkDiagram) -> Result<RingElem, SkeinError> {
        self.check_budget(d)?;
        Ok(self.eval(&d.to_internal(), Flavor::Homfly).to_elem())
    }

    pub fn kauffman(&mut self, d: &LinkDiagram) -> Result<RingElem, SkeinError> {
        self.check_budget(d)?;
        Ok(self.eval(&d.to_internal(), Flavor::Kauffman).to_elem())
    }

    pub fn evaluate(&mut self, d: &LinkDiagram, flavor: Flavor) -> Result<RingElem, SkeinError> {
        match flavor {
            Flavor::Homfly => self.homfly(d),
            Flavor::Kauffman => self.kauffman(d),
        }
    }

    /// `sum over subsets S of (-1)^(k-|S|) P(antiparallel 2-cable of S)`.
    pub fn adjoint_homfly(&mut self, d: &LinkDiagram) -> Result<RingElem, SkeinError> {
        let terms = adjoint_terms(d)?;
        for (subset, term, _) in &terms {
            if term.crossing_count() > self.cfg.max_crossings {
                return Err(SkeinError::AdjointBudget {
                    subset: subset.clone(),
                    crossings: term.crossing_count(),
                    budget: self.cfg.max_crossings,
                });
            }
        }
        let mut total = ZPoly::zero();
        for (_, term, negative) in &terms {
            let mut val = self.eval(&term.to_internal(), Flavor::Homfly);
            if *negative {
                val.num = -val.num;
            }
            total = self.add(&total, &val);
        }
        Ok(total.to_elem())
    }

    // ---- value arithmetic ----

    fn z_pow(&mut self, k: u32) -> &LaurentPoly {
        while self.zpow.len() <= k as usize {
            let next = &self.zpow[self.zpow.len() - 1] * &self.zpow[1];
            self.zpow.push(next);
        }
        &self.zpow[k as usize]
    }

    fn add(&mut self, a: &ZPoly, b: &ZPoly) -> ZPoly {
        if a.num.is_zero() {
            return b.clone();
        }
        if b.num.is_zero() {
            return a.clone();
        }
        let k = a.k.max(b.k);
        let an = if a.k < k { &a.num * self.z_pow(k - a.k) } else { a.num.clone() };
        let bn = if b.k < k { &b.num * self.z_pow(k - b.k) } else { b.num.clone() };
        ZPoly { num: an + bn, k }
    }

    fn sub(&mut self, a: &ZPoly, b: &ZPoly) -> ZPoly {
        let neg = ZPoly { num: -&b.num, k: b.k };
        self.add(a, &neg)
    }

    fn mul(&self, a: &ZPoly, b: &ZPoly) -> ZPoly {
        ZPoly { num: &a.num * &b.num, k: a.k + b.k }
    }

    /// Multiplies by `sign * z`.
    fn times_z(&mut self, a: &ZPoly, sign: i32) -> ZPoly {
        let num = if sign < 0 { -&a.num } else { a.num.clone() };
        if a.k > 0 {
            ZPoly { num, k: a.k - 1 }
        } else {
            ZPoly { num: &num * self.z_pow(1), k: 0 }
        }
    }

    fn delta(flavor: Flavor) -> ZPoly {
        let mut num = LaurentPoly::monomial(1, -1, 0, C0) - LaurentPoly::v(C0);
        if flavor == Flavor::Kauffman {
            num = num + LaurentPoly::s(C0) - LaurentPoly::monomial(1, 0, -1, C0);
        }
        ZPoly { num, k: 1 }
    }

    // ---- evaluation ----

    fn eval(&mut self, pd: &Pd, flavor: Flavor) -> ZPoly {
        let (pd, vpow) = simplify(pd.clone());
        let mut acc = ZPoly { num: LaurentPoly::monomial(1, vpow, 0, C0), k: 0 };
        let delta = Self::delta(flavor);
        for _ in 0..pd.loops() {
            acc = self.mul(&acc, &delta);
        }
        for piece in pd.pieces() {
            let val = self.eval_piece(&piece, flavor);
            acc = self.mul(&acc, &val);
        }
        acc
    }

    /// A connected, simplified diagram without free loops.
    fn eval_piece(&mut self, pd: &Pd, flavor: Flavor) -> ZPoly {
        if pd.n() == 0 {
            return ZPoly::one();
        }
        let key = if self.cfg.memo_enabled {
            let key = (flavor, pd.canonical_code(flavor == Flavor::Homfly));
            if let Some(v) = self.memo.get(&key) {
                return v.clone();
            }
            Some(key)
        } else {
            None
        };
        let val = self.resolve(pd, flavor);
        if let Some(key) = key {
            self.memo.insert(key, val.clone());
        }
        val
    }

    fn resolve(&mut self, pd: &Pd, flavor: Flavor) -> ZPoly {
        let (comp, k) = pd.components();
        if k >= 2 {
            if let Some(c) = layered_component(pd, &comp, k) {
                let keep: Vec<bool> = (0..k).map(|i| i == c).collect();
                let rest: Vec<bool> = keep.iter().map(|b| !b).collect();
                let top = self.eval(&pd.keep_components(&comp, &keep), flavor);
                let bottom = self.eval(&pd.keep_components(&comp, &rest), flavor);
                return self.mul(&top, &bottom);
            }
        }
        if let Some(b) = pd.bigons().first() {
            return self.resolve_at(pd, b.x1, flavor);
        }
        if k >= 2 {
            self.unlayer(pd, flavor)
        } else {
            self.descend(pd, flavor)
        }
    }

    /// Switch-and-smooth at one crossing.
    fn resolve_at(&mut self, pd: &Pd, x: usize, flavor: Flavor) -> ZPoly {
        let switched = self.eval(&pd.switch(x), flavor);
        let extra = self.smoothing_terms(pd, x, flavor);
        self.add(&switched, &extra)
    }

    /// `D(X) - D(X switched)`, in terms of smoothings.
    fn smoothing_terms(&mut self, pd: &Pd, x: usize, flavor: Flavor) -> ZPoly {
        match flavor {
            Flavor::Homfly => {
                let s0 = self.eval(&pd.smooth_oriented(x), flavor);
                self.times_z(&s0, pd.sign(x))
            }
            Flavor::Kauffman => {
                let a = self.eval(&pd.smooth_unoriented(x, true), flavor);
                let b = self.eval(&pd.smooth_unoriented(x, false), flavor);
                let diff = self.sub(&a, &b);
                self.times_z(&diff, 1)
            }
        }
    }

    /// Lifts one component above (or below) everything else, switching its
    /// wrong crossings one at a time.
    fn unlayer(&mut self, pd: &Pd, flavor: Flavor) -> ZPoly {
        let (comp, k) = pd.components();
        let mut under = vec![0usize; k];
        let mut over = vec![0usize; k];
        for x in 0..pd.n() {
            let (u, o) = (comp[x][0], comp[x][1]);
            if u != o {
                under[u] += 1;
                over[o] += 1;
            }
        }
        let c = (0..k).min_by_key(|&c| (under[c].min(over[c]), c)).unwrap();
        let lift = under[c] <= over[c];
        // Components are found by traversal, so follow `c` through an edge label.
        let label = (0..pd.n())
            .find_map(|x| (0..4).find(|&p| comp[x][p] == c).map(|p| pd.xs()[x].e[p]))
            .unwrap();
        let mut acc = ZPoly::zero();
        let mut cur = pd.clone();
        loop {
            let (comp, k) = cur.components();
            let c = component_of_label(&cur, &comp, label);
            let bad = (0..cur.n()).find(|&x| {
                let (u, o) = (comp[x][0], comp[x][1]);
                u != o && if lift { u == c } else { o == c }
            });
            let Some(x) = bad else {
                let rest = self.eval(&cur, flavor);
                return self.add(&acc, &rest);
            };
            let extra = self.smoothing_terms(&cur, x, flavor);
            acc = self.add(&acc, &extra);
            cur = cur.switch(x);
            if cur.bigons().iter().any(|b| b.is_rii()) || {
                let (comp, k2) = cur.components();
                debug_assert_eq!(k, k2);
                layered_component(&cur, &comp, k2).is_some()
            } {
                let rest = self.eval(&cur, flavor);
                return self.add(&acc, &rest);
            }
        }
    }

    /// Makes a knot diagram descending from the best basepoint.
    fn descend(&mut self, pd: &Pd, flavor: Flavor) -> ZPoly {
        let oriented = flavor == Flavor::Homfly;
        let mut best: Option<Vec<usize>> = None;
        for x in 0..pd.n() {
            for p in 0..4 {
                if oriented && !pd.incoming(x, p) {
                    continue;
                }
                let bad = pd.descending_defects(x, p);
                if best.as_ref().is_none_or(|b| bad.len() < b.len()) {
                    best = Some(bad);
                }
            }
        }
        let mut acc = ZPoly::zero();
        let mut cur = pd.clone();
        for x in best.unwrap() {
            let extra = self.smoothing_terms(&cur, x, flavor);
            acc = self.add(&acc, &extra);
            cur = cur.switch(x);
            if cur.bigons().iter().any(|b| b.is_rii()) {
                let rest = self.eval(&cur, flavor);
                return self.add(&acc, &rest);
            }
        }
        let mut unknot = Self::delta(flavor);
        unknot.num = unknot.num.shift(-cur.writhe(), 0);
        self.add(&acc, &unknot)
    }
}

fn component_of_label(pd: &Pd, comp: &[[usize; 4]], label: u32) -> usize {
    for (x, xi) in pd.xs().iter().enumerate() {
        for p in 0..4 {
            if xi.e[p] == label {
                return comp[x][p];
            }
        }
    }
    unreachable!("label present")
}

/// A component that passes over (or under) at all its crossings with others.
fn layered_component(pd: &Pd, comp: &[[usize; 4]], k: usize) -> Option<usize> {
    let mut under = vec![0usize; k];
    let mut over = vec![0usize; k];
    for x in 0..pd.n() {
        let (u, o) = (comp[x][0], comp[x][1]);
        if u != o {
            under[u] += 1;
            over[o] += 1;
        }
    }
    (0..k).find(|&c| under[c] + over[c] > 0 && (under[c] == 0 || over[c] == 0))
}

/// Removes curls and Reidemeister II bigons; returns the diagram and the
/// power of `v` collected from curls.
fn simplify(mut pd: Pd) -> (Pd, i32) {
    let mut vpow = 0;
    loop {
        if let Some((x, i)) = pd.find_curl() {
            let (next, sign) = pd.remove_curl(x, i);
            vpow -= sign;
            pd = next;
            continue;
        }
        if let Some(b) = pd.bigons().into_iter().find(|b| b.is_rii()) {
            pd = pd.remove_rii(&b);
            continue;
        }
        return (pd, vpow);
    }
}

/// The edge-labelled pieces of every term in the adjoint expansion:
/// `(components kept, 1-based; diagram; sign is negative)`.
pub fn adjoint_terms(d: &LinkDiagram) -> Result<Vec<(Vec<usize>, LinkDiagram, bool)>, SkeinError> {
    let k = d.component_count();
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u64..(1u64 << k) {
        let subset: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        let mut term = d.clone();
        for c in (1..=k).rev() {
            if !subset.contains(&c) {
                term = term.delete_component(c)?;
            }
        }
        for i in 1..=subset.len() {
            term = term.cable(i, 2)?;
            let copy = term.component_count();
            term = term.reverse(&[copy])?;
        }
        out.push((subset.clone(), term, (k - subset.len()) % 2 == 1));
    }
    Ok(out)
}

pub fn homfly(d: &LinkDiagram, cfg: &EvalConfig) -> Result<RingElem, SkeinError> {
    Evaluator::new(cfg.clone()).homfly(d)
}

pub fn kauffman(d: &LinkDiagram, cfg: &EvalConfig) -> Result<RingElem, SkeinError> {
    Evaluator::new(cfg.clone()).kauffman(d)
}

pub fn adjoint_homfly(d: &LinkDiagram, cfg: &EvalConfig) -> Result<RingElem, SkeinError> {
    Evaluator::new(cfg.clone()).adjoint_homfly(d)
}

/// The values around one crossing and whether the skein relation holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub flavor: Flavor,
    pub crossing: usize,
    pub values: Vec<(String, RingElem)>,
    pub holds: bool,
}

/// Evaluates a diagram, its switch and its smoothing(s) at `crossing`, each
/// with a fresh memo, and checks the relation.
pub fn skein_relation_probe(
    d: &LinkDiagram,
    crossing: usize,
    flavor: Flavor,
    cfg: &EvalConfig,
) -> Result<ProbeReport, SkeinError> {
    if crossing >= d.crossing_count() {
        return Err(SkeinError::Diagram(DiagramError::NoPassage { comp: 0, passage: crossing }));
    }
    if d.crossing_count() > cfg.max_crossings {
        return Err(SkeinError::BudgetExceeded { crossings: d.crossing_count(), budget: cfg.max_crossings });
    }
    let pd = d.to_internal();
    let fresh = |p: &Pd| Evaluator::new(cfg.clone()).eval(p, flavor).to_elem();
    let z = RingElem::from_poly(LaurentPoly::s(C0) - LaurentPoly::monomial(1, 0, -1, C0));
    let here = fresh(&pd);
    let switched = fresh(&pd.switch(crossing));
    let mut values = vec![(String::from("diagram"), here.clone()), (String::from("switched"), switched.clone())];
    let rhs = match flavor {
        Flavor::Homfly => {
            let s0 = fresh(&pd.smooth_oriented(crossing));
            values.push((String::from("smoothed"), s0.clone()));
            let sign = RingElem::integer(pd.sign(crossing) as i64, C0);
            &(&sign * &z) * &s0
        }
        Flavor::Kauffman => {
            let a = fresh(&pd.smooth_unoriented(crossing, true));
            let b = fresh(&pd.smooth_unoriented(crossing, false));
            values.push((String::from("smoothed_a"), a.clone()));
            values.push((String::from("smoothed_b"), b.clone()));
            &z * &(&a - &b)
        }
    };
    let holds = &here - &switched == rhs;
    Ok(ProbeReport { flavor, crossing, values, holds })
}
