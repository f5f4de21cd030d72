//! Eigenvalues of the meridian maps on the skeins of the annulus.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::partition::Partition;
use crate::ring::{Characteristic, LaurentPoly, RingElem};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EigenError {
    #[error("rho must be lambda minus one cell")]
    RhoNotBelowLambda,
}

fn z() -> LaurentPoly {
    let chr = Characteristic::Zero;
    LaurentPoly::s(chr) - LaurentPoly::monomial(1, 0, -1, chr)
}

fn reduce(x: RingElem, chr: Characteristic) -> RingElem {
    match chr {
        Characteristic::Zero => x,
        Characteristic::Two => x.to_mod2().expect("quantum denominators survive reduction"),
    }
}

/// `(v^-1 - v)/(s - s^-1)`, the Homfly value of the unknot.
pub fn delta_homfly(chr: Characteristic) -> RingElem {
    let c0 = Characteristic::Zero;
    let num = LaurentPoly::monomial(1, -1, 0, c0) - LaurentPoly::v(c0);
    reduce(RingElem::over_quantum(num, 1, 1), chr)
}

/// `delta_homfly + 1`, the Kauffman value of the unknot.
pub fn delta_kauffman(chr: Characteristic) -> RingElem {
    delta_homfly(chr) + RingElem::one(chr)
}

/// `(s - s^-1)(v^-1 C_lambda(s^2) - v C_mu(s^-2)) + delta_homfly`.
pub fn s_of(lambda: &Partition, mu: &Partition, chr: Characteristic) -> RingElem {
    let up = lambda.content_polynomial().substitute(1, 2).shift(-1, 0);
    let down = mu.content_polynomial().substitute(1, -2).shift(1, 0);
    let poly = &z() * &(up - down);
    reduce(RingElem::from_poly(poly) + delta_homfly(Characteristic::Zero), chr)
}

/// Kauffman meridian eigenvalue on `y_lambda`.
pub fn c_of(lambda: &Partition, chr: Characteristic) -> RingElem {
    reduce(s_of(lambda, lambda, Characteristic::Zero) + RingElem::one(Characteristic::Zero), chr)
}

/// Adjoint meridian eigenvalue on `Q_{lambda,mu}`: `s_{lambda,mu} s_{mu,lambda} - 1`.
pub fn adjoint_eigenvalue(lambda: &Partition, mu: &Partition, chr: Characteristic) -> RingElem {
    let c0 = Characteristic::Zero;
    let e = &s_of(lambda, mu, c0) * &s_of(mu, lambda, c0) - RingElem::one(c0);
    reduce(e, chr)
}

/// Outcome of comparing all `c_lambda` for `|lambda| <= max_size` mod 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctReport {
    pub max_size: u32,
    pub partitions: usize,
    pub comparisons: usize,
    pub collision: Option<(Partition, Partition)>,
}

impl DistinctReport {
    pub fn passed(&self) -> bool {
        self.collision.is_none()
    }
}

pub fn check_distinct(max_size: u32) -> DistinctReport {
    let table = EigenTable::new(max_size, Characteristic::Two);
    let entries: Vec<_> = table.entries.iter().collect();
    let mut comparisons = 0;
    let mut collision = None;
    'outer: for (i, (la, ca)) in entries.iter().enumerate() {
        for (mu, cm) in &entries[i + 1..] {
            comparisons += 1;
            if ca == cm {
                collision = Some(((*la).clone(), (*mu).clone()));
                break 'outer;
            }
        }
    }
    DistinctReport { max_size, partitions: entries.len(), comparisons, collision }
}

/// All `c_lambda` up to a given size, in one characteristic.
#[derive(Clone, Debug)]
pub struct EigenTable {
    pub chr: Characteristic,
    pub max_size: u32,
    entries: BTreeMap<Partition, RingElem>,
}

impl EigenTable {
    pub fn new(max_size: u32, chr: Characteristic) -> Self {
        let entries = (0..=max_size)
            .flat_map(Partition::of_size)
            .map(|p| {
                let c = c_of(&p, chr);
                (p, c)
            })
            .collect();
        EigenTable { chr, max_size, entries }
    }

    pub fn get(&self, lambda: &Partition) -> Option<&RingElem> {
        self.entries.get(lambda)
    }

    /// The entry, computed and cached if beyond the covered sizes.
    pub fn get_or_compute(&mut self, lambda: &Partition) -> RingElem {
        let chr = self.chr;
        self.entries.entry(lambda.clone()).or_insert_with(|| c_of(lambda, chr)).clone()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &RingElem)> {
        self.entries.iter()
    }
}

/// `X(t) = prod_{mu in rho+ ∪ rho-, mu != lambda} (t - c_mu)`, coefficients ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPoly {
    pub lambda: Partition,
    pub rho: Partition,
    pub roots: Vec<Partition>,
    pub coeffs: Vec<RingElem>,
}

pub fn x_poly(lambda: &Partition, rho: &Partition) -> Result<XPoly, EigenError> {
    if !lambda.minus().contains(rho) {
        return Err(EigenError::RhoNotBelowLambda);
    }
    let c0 = Characteristic::Zero;
    let roots: Vec<Partition> = rho.neighbors().into_iter().filter(|mu| mu != lambda).collect();
    let mut coeffs = vec![RingElem::one(c0)];
    for mu in &roots {
        let c = c_of(mu, c0);
        // Multiply by (t - c).
        let mut next = vec![RingElem::zero(c0); coeffs.len() + 1];
        for (i, a) in coeffs.iter().enumerate() {
            next[i + 1] = &next[i + 1] + a;
            next[i] = &next[i] - &(a * &c);
        }
        coeffs = next;
    }
    Ok(XPoly { lambda: lambda.clone(), rho: rho.clone(), roots, coeffs })
}

impl XPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation; `t` fixes the characteristic of the result.
    pub fn eval(&self, t: &RingElem) -> RingElem {
        let chr = t.characteristic();
        self.coeffs_in(chr)
            .iter()
            .rev()
            .fold(RingElem::zero(chr), |acc, a| &(&acc * t) + a)
    }

    /// Coefficients reduced to `chr`.
    pub fn coeffs_in(&self, chr: Characteristic) -> Vec<RingElem> {
        self.coeffs.iter().map(|a| reduce(a.clone(), chr)).collect()
    }

    /// `X(c_lambda)`, the factor the longitude-meridian expansion scales `y_lambda` by.
    pub fn scale(&self, chr: Characteristic) -> RingElem {
        self.eval(&c_of(&self.lambda, chr))
    }
}
