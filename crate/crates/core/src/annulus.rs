//! The skeins of the annulus in their eigenvector bases: branching rules,
//! meridian maps, and the longitude-meridian expansion of `y_lambda`.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::diagram::{DiagramError, LinkDiagram};
use crate::eigen::{c_of, x_poly, EigenError};
use crate::partition::Partition;
use crate::ring::{Characteristic, RingElem};

const C0: Characteristic = Characteristic::Zero;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AnnulusError {
    #[error("the empty partition has no longitude-meridian expansion")]
    EmptyPartition,
    #[error("bad longitude-meridian word: {0}")]
    Word(String),
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Finite combination of the Kauffman basis elements `y_lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AnnulusVecK {
    coeffs: BTreeMap<Partition, RingElem>,
}

impl AnnulusVecK {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `y_lambda` with coefficient 1.
    pub fn basis(lambda: Partition) -> Self {
        Self::zero().plus_term(lambda, RingElem::one(C0))
    }

    pub fn plus_term(mut self, lambda: Partition, c: RingElem) -> Self {
        let sum = match self.coeffs.remove(&lambda) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(lambda, sum);
        }
        self
    }

    pub fn coeff(&self, lambda: &Partition) -> RingElem {
        self.coeffs.get(lambda).cloned().unwrap_or_else(|| RingElem::zero(C0))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &RingElem)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        other.coeffs.iter().fold(self.clone(), |acc, (p, c)| acc.plus_term(p.clone(), c.clone()))
    }

    pub fn scale(&self, c: &RingElem) -> Self {
        self.coeffs.iter().fold(Self::zero(), |acc, (p, a)| acc.plus_term(p.clone(), a * c))
    }

    /// Multiplication by the core curve: `y_rho y_1 = sum over rho+ ∪ rho- of y_mu`.
    pub fn branch_mul_y1(&self) -> Self {
        let mut out = Self::zero();
        for (rho, c) in &self.coeffs {
            for mu in rho.neighbors() {
                out = out.plus_term(mu, c.clone());
            }
        }
        out
    }

    /// `r` applications of the meridian map, diagonal with eigenvalues `c_mu`.
    pub fn meridian_act(&self, r: u32) -> Self {
        self.coeffs
            .iter()
            .fold(Self::zero(), |acc, (mu, a)| acc.plus_term(mu.clone(), a * &c_of(mu, C0).pow(r)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// Further parallel longitudes.
    L,
    /// Meridians around everything so far.
    M,
}

/// A longitude-meridian diagram: powers of `l` and `m` read from the
/// innermost curve outwards, e.g. `l^2m^3lm`. The innermost longitude carries
/// `y_slot`, every other curve `y_1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LMWord {
    letters: Vec<(Letter, u32)>,
    pub slot: Partition,
}

impl LMWord {
    /// The bare core curve.
    pub fn core(slot: Partition) -> Self {
        LMWord { letters: Vec::new(), slot }
    }

    pub fn letters(&self) -> &[(Letter, u32)] {
        &self.letters
    }

    /// Appends `letter^k` on the outside, merging with a trailing equal letter.
    pub fn push(mut self, letter: Letter, k: u32) -> Self {
        if k == 0 {
            return self;
        }
        match self.letters.last_mut() {
            Some((l, e)) if *l == letter => *e += k,
            _ => self.letters.push((letter, k)),
        }
        self
    }

    /// Number of longitudes, counting the core curve once.
    pub fn longitudes(&self) -> u32 {
        let extra: u32 = self.letters.iter().filter(|(l, _)| *l == Letter::L).map(|(_, k)| k).sum();
        // `l^k` at the start means k parallel copies of the core, not k more.
        match self.letters.first() {
            Some((Letter::L, _)) => extra,
            _ => extra + 1,
        }
    }

    pub fn meridians(&self) -> u32 {
        self.letters.iter().filter(|(l, _)| *l == Letter::M).map(|(_, k)| k).sum()
    }
}

impl fmt::Display for LMWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            f.write_str("l")?;
        }
        for (letter, k) in &self.letters {
            f.write_str(if *letter == Letter::L { "l" } else { "m" })?;
            if *k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

/// Parses words such as `l^2m^3lm`; the slot defaults to `(1)`.
impl FromStr for LMWord {
    type Err = AnnulusError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || AnnulusError::Word(text.into());
        let mut word = LMWord::core(Partition::from_parts(&[1]));
        let mut chars = text.trim().chars().peekable();
        if text.trim() == "l" {
            return Ok(word);
        }
        while let Some(c) = chars.next() {
            let letter = match c {
                'l' => Letter::L,
                'm' => Letter::M,
                _ => return Err(bad()),
            };
            let mut k = 1;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                k = digits.parse().map_err(|_| bad())?;
                if k == 0 {
                    return Err(bad());
                }
            }
            if word.letters.last().is_some_and(|(l, _)| *l == letter) {
                return Err(bad());
            }
            word = word.push(letter, k);
        }
        if word.letters.is_empty() {
            return Err(bad());
        }
        Ok(word)
    }
}

/// How to write `X(c_lambda) y_lambda` as a combination of two parallel
/// longitudes, one decorated by `y_rho`, encircled by `r` meridians.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionPlan {
    pub target: Partition,
    pub rho: Partition,
    /// `(a_r, r)` with `sum a_r t^r = X(t)`.
    pub terms: Vec<(RingElem, u32)>,
    /// `X(c_lambda)`.
    pub scale: RingElem,
    /// Expansion of the `y_rho` slot when `|rho| > 1`.
    pub inner: Option<Box<ExpansionPlan>>,
}

impl ExpansionPlan {
    /// A single core curve: nothing to expand.
    pub fn is_trivial(&self) -> bool {
        self.terms.is_empty()
    }

    /// Product of the scales of this plan and all nested ones.
    pub fn total_scale(&self) -> RingElem {
        let inner = self.inner.as_ref().map(|p| p.total_scale()).unwrap_or_else(|| RingElem::one(C0));
        &self.scale * &inner
    }

    /// Fully expanded words with coefficients, one per choice of meridian
    /// count at each level, outermost level varying slowest.
    pub fn words(&self) -> Vec<(RingElem, LMWord)> {
        if self.is_trivial() {
            return vec![(RingElem::one(C0), LMWord::core(self.target.clone()))];
        }
        let inner = match &self.inner {
            Some(p) => p.words(),
            None => vec![(RingElem::one(C0), LMWord::core(self.rho.clone()))],
        };
        let mut out = Vec::new();
        for (a, r) in &self.terms {
            for (b, w) in &inner {
                let w = if w.letters.is_empty() {
                    w.clone().push(Letter::L, 2)
                } else {
                    w.clone().push(Letter::L, 1)
                };
                out.push((a * b, w.push(Letter::M, *r)));
            }
        }
        for (_, w) in &mut out {
            w.slot = Partition::from_parts(&[1]);
        }
        out
    }

    /// Number of nested levels with terms.
    pub fn depth(&self) -> usize {
        if self.is_trivial() {
            0
        } else {
            1 + self.inner.as_ref().map_or(0, |p| p.depth())
        }
    }
}

/// Default choice: remove a cell from the last row.
pub fn default_rho(lambda: &Partition) -> Partition {
    let mut parts = lambda.parts().to_vec();
    if let Some(last) = parts.last_mut() {
        *last -= 1;
        if *last == 0 {
            parts.pop();
        }
    }
    Partition::new(parts).expect("removing from the last row keeps a partition")
}

pub fn expand_ylambda(lambda: &Partition, rho: Option<&Partition>) -> Result<ExpansionPlan, AnnulusError> {
    if lambda.is_empty() {
        return Err(AnnulusError::EmptyPartition);
    }
    let one = RingElem::one(C0);
    if lambda.size() == 1 {
        return Ok(ExpansionPlan {
            target: lambda.clone(),
            rho: Partition::empty(),
            terms: Vec::new(),
            scale: one,
            inner: None,
        });
    }
    let rho = rho.cloned().unwrap_or_else(|| default_rho(lambda));
    let x = x_poly(lambda, &rho)?;
    let scale = x.scale(C0);
    let terms = x.coeffs.iter().cloned().zip(0u32..).collect();
    let inner = if rho.size() > 1 { Some(Box::new(expand_ylambda(&rho, None)?)) } else { None };
    Ok(ExpansionPlan { target: lambda.clone(), rho, terms, scale, inner })
}

/// Evaluates a plan in the annulus: the result should be `total_scale * y_lambda`.
pub fn realize_symbolic(plan: &ExpansionPlan) -> AnnulusVecK {
    if plan.is_trivial() {
        return AnnulusVecK::basis(plan.target.clone());
    }
    let slot = match &plan.inner {
        Some(inner) => realize_symbolic(inner),
        None => AnnulusVecK::basis(plan.rho.clone()),
    };
    let pair = slot.branch_mul_y1();
    plan.terms
        .iter()
        .fold(AnnulusVecK::zero(), |acc, (a, r)| acc.add(&pair.meridian_act(*r).scale(a)))
}

/// One honest diagram produced from a plan.
#[derive(Clone, Debug)]
pub struct RealizedTerm {
    pub coeff: RingElem,
    /// Meridian counts, outermost level first.
    pub meridians: Vec<u32>,
    pub word: LMWord,
    pub diagram: LinkDiagram,
}

/// Replaces the decoration of component `comp` (1-based) by the plan's
/// longitudes and meridians. Summing `coeff * invariant(diagram)` gives the
/// plan's total scale times the invariant of the `y_lambda`-decorated link.
pub fn realize_diagrams(
    d: &LinkDiagram,
    comp: usize,
    plan: &ExpansionPlan,
) -> Result<Vec<RealizedTerm>, AnnulusError> {
    let mut levels = Vec::new();
    let mut cur = Some(plan);
    while let Some(p) = cur {
        if p.is_trivial() {
            break;
        }
        levels.push(p);
        cur = p.inner.as_deref();
    }
    if levels.is_empty() {
        d.passages(comp)?;
        return Ok(vec![RealizedTerm {
            coeff: RingElem::one(C0),
            meridians: Vec::new(),
            word: LMWord::core(plan.target.clone()),
            diagram: d.clone(),
        }]);
    }
    // Each level doubles the leftmost strand of the previous level's bundle.
    let (mut base, mut id) = d.track_site(comp, None)?;
    let mut bundles = Vec::with_capacity(levels.len());
    for level in 0..levels.len() {
        if level > 0 {
            let (next, sub) = base.track_sub_bundle(id, &[0])?;
            base = next;
            id = sub;
        }
        bundles.push(id);
        let strand = base.bundle_components(id)?[0];
        base = base.cable(strand, 2)?;
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; levels.len()];
    loop {
        let mut coeff = RingElem::one(C0);
        let mut diagram = base.clone();
        let mut meridians = Vec::with_capacity(levels.len());
        for (level, &i) in choice.iter().enumerate() {
            let (a, r) = &levels[level].terms[i];
            coeff = &coeff * a;
            meridians.push(*r);
            for _ in 0..*r {
                diagram = diagram.insert_meridian(bundles[level])?;
            }
        }
        let mut word = LMWord::core(Partition::from_parts(&[1])).push(Letter::L, 2);
        for (level, r) in meridians.iter().enumerate().rev() {
            if level + 1 < meridians.len() {
                word = word.push(Letter::L, 1);
            }
            word = word.push(Letter::M, *r);
        }
        out.push(RealizedTerm { coeff, meridians, word, diagram });
        // Advance the mixed-radix counter, innermost level fastest.
        let mut level = levels.len();
        loop {
            if level == 0 {
                return Ok(out);
            }
            level -= 1;
            choice[level] += 1;
            if choice[level] < levels[level].terms.len() {
                break;
            }
            choice[level] = 0;
        }
    }
}

/// Direction of the core curve multiplied onto a Homfly basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    With,
    Against,
}

/// Formal integer combination of the Homfly basis elements `Q_{alpha,beta}`.
pub type HomflyVec = BTreeMap<(Partition, Partition), i64>;

/// `Q_{alpha,beta}` times the core curve in the given sense.
pub fn homfly_branching_expand(alpha: &Partition, beta: &Partition, sense: Sense) -> HomflyVec {
    let mut out = HomflyVec::new();
    let mut bump = |a: Partition, b: Partition| *out.entry((a, b)).or_insert(0) += 1;
    match sense {
        Sense::With => {
            alpha.plus().into_iter().for_each(|mu| bump(mu, beta.clone()));
            beta.minus().into_iter().for_each(|nu| bump(alpha.clone(), nu));
        }
        Sense::Against => {
            beta.plus().into_iter().for_each(|mu| bump(alpha.clone(), mu));
            alpha.minus().into_iter().for_each(|nu| bump(nu, beta.clone()));
        }
    }
    out
}

fn mul_core(v: &HomflyVec, sense: Sense) -> HomflyVec {
    let mut out = HomflyVec::new();
    for ((a, b), c) in v {
        for (key, k) in homfly_branching_expand(a, b, sense) {
            *out.entry(key).or_insert(0) += c * k;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HsrReport {
    pub rho: Partition,
    /// `R_rho R_1` in the basis `Q_{alpha,beta}`.
    pub product: HomflyVec,
    /// Off-diagonal multiplicities `n_{alpha,beta}` with `alpha < beta`.
    pub pairs: Vec<(Partition, Partition, i64)>,
    /// First term that does not fit the expected shape.
    pub offending: Option<(Partition, Partition, i64)>,
}

impl HsrReport {
    pub fn passed(&self) -> bool {
        self.offending.is_none()
    }
}

/// Expands `R_rho R_1 = Q_{rho,rho}(Q_{1,0} Q_{0,1} - 1)` and checks it equals
/// `sum_{mu in rho+ ∪ rho-} R_mu + 2|rho-| R_rho + sum n (Q_{a,b} + Q_{b,a})`
/// with each `n` equal to 0 or 1.
pub fn hsr_structure_check(rho: &Partition) -> HsrReport {
    let mut v = HomflyVec::new();
    v.insert((rho.clone(), rho.clone()), 1);
    let mut product = mul_core(&mul_core(&v, Sense::With), Sense::Against);
    *product.entry((rho.clone(), rho.clone())).or_insert(0) -= 1;
    product.retain(|_, c| *c != 0);

    let mut expected_diag: BTreeMap<Partition, i64> = rho.neighbors().into_iter().map(|m| (m, 1)).collect();
    let twice_minus = 2 * rho.minus().len() as i64;
    if twice_minus != 0 {
        *expected_diag.entry(rho.clone()).or_insert(0) += twice_minus;
    }
    let mut offending = None;
    let mut pairs = Vec::new();
    for ((a, b), &c) in &product {
        if a == b {
            if expected_diag.get(a).copied().unwrap_or(0) != c && offending.is_none() {
                offending = Some((a.clone(), b.clone(), c));
            }
        } else if a < b {
            let mirror = product.get(&(b.clone(), a.clone())).copied().unwrap_or(0);
            if (mirror != c || !(0..=1).contains(&c)) && offending.is_none() {
                offending = Some((a.clone(), b.clone(), c));
            }
            pairs.push((a.clone(), b.clone(), c));
        } else if !product.contains_key(&(b.clone(), a.clone())) && offending.is_none() {
            offending = Some((a.clone(), b.clone(), c));
        }
    }
    for (mu, &c) in &expected_diag {
        if product.get(&(mu.clone(), mu.clone())).copied().unwrap_or(0) != c && offending.is_none() {
            offending = Some((mu.clone(), mu.clone(), 0));
        }
    }
    HsrReport { rho: rho.clone(), product, pairs, offending }
}
