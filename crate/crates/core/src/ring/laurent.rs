use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::RingError;

/// Coefficient domain of a polynomial: the integers or the field with two elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Characteristic {
    Zero,
    Two,
}

/// Exponent pair `(deg_v, deg_s)`.
pub type Exponents = (i32, i32);

/// Integer (or mod-2) Laurent polynomial in `v` and `s`.
///
/// Terms are kept sorted by `(deg_v, deg_s)` with no zero coefficient stored.
/// In characteristic two every stored coefficient is `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    chr: Characteristic,
    terms: Vec<(Exponents, BigInt)>,
}

fn reduce_coeff(chr: Characteristic, c: BigInt) -> Option<BigInt> {
    match chr {
        Characteristic::Zero => (!c.is_zero()).then_some(c),
        Characteristic::Two => c.is_odd().then(BigInt::one),
    }
}

impl LaurentPoly {
    pub fn zero(chr: Characteristic) -> Self {
        LaurentPoly { chr, terms: Vec::new() }
    }

    pub fn one(chr: Characteristic) -> Self {
        Self::monomial(1, 0, 0, chr)
    }

    pub fn constant(c: i64, chr: Characteristic) -> Self {
        Self::monomial(c, 0, 0, chr)
    }

    pub fn monomial(c: i64, deg_v: i32, deg_s: i32, chr: Characteristic) -> Self {
        Self::from_terms([((deg_v, deg_s), BigInt::from(c))], chr)
    }

    /// The variable `v`.
    pub fn v(chr: Characteristic) -> Self {
        Self::monomial(1, 1, 0, chr)
    }

    /// The variable `s`.
    pub fn s(chr: Characteristic) -> Self {
        Self::monomial(1, 0, 1, chr)
    }

    /// Collects terms, combining repeated exponents and dropping zeros.
    pub fn from_terms<I>(terms: I, chr: Characteristic) -> Self
    where
        I: IntoIterator<Item = (Exponents, BigInt)>,
    {
        let mut acc: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        let terms = acc
            .into_iter()
            .filter_map(|(e, c)| reduce_coeff(chr, c).map(|c| (e, c)))
            .collect();
        LaurentPoly { chr, terms }
    }

    /// Builds from already sorted, merged terms; only zero coefficients are dropped.
    fn from_sorted(terms: Vec<(Exponents, BigInt)>, chr: Characteristic) -> Self {
        let terms = terms
            .into_iter()
            .filter_map(|(e, c)| reduce_coeff(chr, c).map(|c| (e, c)))
            .collect();
        LaurentPoly { chr, terms }
    }

    pub fn characteristic(&self) -> Characteristic {
        self.chr
    }

    pub fn terms(&self) -> &[(Exponents, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// Returns the coefficient and exponents if `self` is a single term.
    pub fn as_monomial(&self) -> Option<(&BigInt, Exponents)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((c, *e)),
            _ => None,
        }
    }

    pub fn coeff(&self, e: Exponents) -> BigInt {
        match self.terms.binary_search_by(|(t, _)| t.cmp(&e)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// True when no term involves `v`.
    pub fn is_univariate_s(&self) -> bool {
        self.terms.iter().all(|((dv, _), _)| *dv == 0)
    }

    /// Lowest `(deg_v, deg_s)` taken independently over all terms.
    pub fn min_exponents(&self) -> Option<Exponents> {
        let mut it = self.terms.iter().map(|(e, _)| *e);
        let first = it.next()?;
        Some(it.fold(first, |(a, b), (c, d)| (a.min(c), b.min(d))))
    }

    pub fn max_exponents(&self) -> Option<Exponents> {
        let mut it = self.terms.iter().map(|(e, _)| *e);
        let first = it.next()?;
        Some(it.fold(first, |(a, b), (c, d)| (a.max(c), b.max(d))))
    }

    fn check(&self, other: &Self) -> Result<(), RingError> {
        if self.chr == other.chr {
            Ok(())
        } else {
            Err(RingError::MixedCharacteristic)
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    out.push((a[i].0, c));
                    i += 1;
                    j += 1;
                }
            }
        }
        Self::from_sorted(out, self.chr)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.chr);
        }
        if self.terms.len() < other.terms.len() {
            return other.mul_unchecked(self);
        }
        if let Some((c, (dv, ds))) = other.as_monomial() {
            let terms = self
                .terms
                .iter()
                .map(|((a, b), x)| ((a + dv, b + ds), x * c))
                .collect();
            return Self::from_sorted(terms, self.chr);
        }
        let (lo_a, hi_a) = (self.min_exponents().unwrap(), self.max_exponents().unwrap());
        let (lo_b, hi_b) = (other.min_exponents().unwrap(), other.max_exponents().unwrap());
        let lo = (lo_a.0 + lo_b.0, lo_a.1 + lo_b.1);
        let width_v = (hi_a.0 + hi_b.0 - lo.0 + 1) as usize;
        let width_s = (hi_a.1 + hi_b.1 - lo.1 + 1) as usize;
        if width_v.saturating_mul(width_s) <= 1 << 16 {
            // dense accumulation
            let mut acc = alloc::vec![BigInt::zero(); width_v * width_s];
            for ((a, b), x) in &self.terms {
                for ((c, d), y) in &other.terms {
                    let iv = (a + c - lo.0) as usize;
                    let is = (b + d - lo.1) as usize;
                    acc[iv * width_s + is] += x * y;
                }
            }
            let terms = acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| {
                    let e = ((k / width_s) as i32 + lo.0, (k % width_s) as i32 + lo.1);
                    (e, c)
                })
                .collect();
            Self::from_sorted(terms, self.chr)
        } else {
            let mut acc: BTreeMap<Exponents, BigInt> = BTreeMap::new();
            for ((a, b), x) in &self.terms {
                for ((c, d), y) in &other.terms {
                    *acc.entry((a + c, b + d)).or_insert_with(BigInt::zero) += x * y;
                }
            }
            Self::from_sorted(acc.into_iter().collect(), self.chr)
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(self.chr);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// Multiplies by the unit `v^dv s^ds`.
    pub fn shift(&self, dv: i32, ds: i32) -> Self {
        LaurentPoly {
            chr: self.chr,
            terms: self.terms.iter().map(|((a, b), c)| ((a + dv, b + ds), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_sorted(self.terms.iter().map(|(e, x)| (*e, x * c)).collect(), self.chr)
    }

    /// Substitutes `v -> v^kv`, `s -> s^ks`.
    pub fn substitute(&self, kv: i32, ks: i32) -> Self {
        Self::from_terms(
            self.terms.iter().map(|((a, b), c)| ((a * kv, b * ks), c.clone())),
            self.chr,
        )
    }

    /// Coefficient-wise reduction to characteristic two.
    pub fn to_mod2(&self) -> Self {
        Self::from_sorted(self.terms.clone(), Characteristic::Two)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert_eq!(self.chr, d.chr, "div_exact across characteristics");
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.chr));
        }
        if let Some((c, (dv, ds))) = d.as_monomial() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, x) in &self.terms {
                let (q, r) = x.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                terms.push(((e.0 - dv, e.1 - ds), q));
            }
            return Some(Self::from_sorted(terms, self.chr));
        }
        if d.is_univariate_s() {
            return self.div_exact_by_s_poly(d);
        }
        self.div_exact_general(d)
    }

    /// Slice-wise division when the divisor involves only `s`.
    fn div_exact_by_s_poly(&self, d: &Self) -> Option<Self> {
        let divisor: Vec<(i32, BigInt)> = d.terms.iter().map(|((_, b), c)| (*b, c.clone())).collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.terms.len() {
            let dv = self.terms[i].0 .0;
            let mut j = i;
            while j < self.terms.len() && self.terms[j].0 .0 == dv {
                j += 1;
            }
            let slice: Vec<(i32, BigInt)> =
                self.terms[i..j].iter().map(|((_, b), c)| (*b, c.clone())).collect();
            let q = univariate_div_exact(&slice, &divisor, self.chr)?;
            out.extend(q.into_iter().map(|(b, c)| ((dv, b), c)));
            i = j;
        }
        Some(Self::from_sorted(out, self.chr))
    }

    fn div_exact_general(&self, d: &Self) -> Option<Self> {
        let (lead_e, lead_c) = d.terms.last().map(|(e, c)| (*e, c.clone()))?;
        // Lex order on pairs is not a well-order, so the quotient's exponents
        // are boxed in coordinatewise from the degree ranges.
        let (lo, hi) = (self.min_exponents()?, self.max_exponents()?);
        let (dlo, dhi) = (d.min_exponents()?, d.max_exponents()?);
        let qlo = (lo.0 - dlo.0, lo.1 - dlo.1);
        let qhi = (hi.0 - dhi.0, hi.1 - dhi.1);
        let mut rem = self.clone();
        let mut quotient: Vec<(Exponents, BigInt)> = Vec::new();
        while let Some((e, c)) = rem.terms.last().cloned() {
            let qe = (e.0 - lead_e.0, e.1 - lead_e.1);
            if qe.0 < qlo.0 || qe.0 > qhi.0 || qe.1 < qlo.1 || qe.1 > qhi.1 {
                return None;
            }
            let (qc, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return None;
            }
            let qc = match self.chr {
                Characteristic::Zero => qc,
                Characteristic::Two => BigInt::one(),
            };
            let term = LaurentPoly::from_sorted(alloc::vec![(qe, qc.clone())], self.chr);
            rem = rem.merge(&d.mul_unchecked(&term), true);
            quotient.push((qe, qc));
        }
        quotient.reverse();
        Some(Self::from_sorted(quotient, self.chr))
    }
}

fn univariate_div_exact(
    num: &[(i32, BigInt)],
    den: &[(i32, BigInt)],
    chr: Characteristic,
) -> Option<Vec<(i32, BigInt)>> {
    let (dlo, dhi) = (den[0].0, den[den.len() - 1].0);
    let (nlo, nhi) = (num[0].0, num[num.len() - 1].0);
    if nhi - nlo < dhi - dlo {
        return None;
    }
    let qlo = nlo - dlo;
    let qhi = nhi - dhi;
    let dw = (dhi - dlo) as usize;
    let mut rem: Vec<BigInt> = alloc::vec![BigInt::zero(); (nhi - nlo + 1) as usize];
    for (e, c) in num {
        rem[(e - nlo) as usize] = c.clone();
    }
    let mut dense_den: Vec<BigInt> = alloc::vec![BigInt::zero(); dw + 1];
    for (e, c) in den {
        dense_den[(e - dlo) as usize] = c.clone();
    }
    let lead = dense_den[dw].clone();
    let clean = |c: &BigInt| match chr {
        Characteristic::Zero => c.is_zero(),
        Characteristic::Two => c.is_even(),
    };
    let qlen = (qhi - qlo + 1) as usize;
    let mut q: Vec<BigInt> = alloc::vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let top = k + dw;
        let c = core::mem::take(&mut rem[top]);
        if clean(&c) {
            continue;
        }
        let qc = match chr {
            Characteristic::Zero => {
                let (qc, r) = c.div_rem(&lead);
                if !r.is_zero() {
                    return None;
                }
                qc
            }
            Characteristic::Two => BigInt::one(),
        };
        for (i, dc) in dense_den.iter().enumerate().take(dw) {
            if !dc.is_zero() {
                rem[k + i] -= &qc * dc;
            }
        }
        q[k] = qc;
    }
    if !rem.iter().all(clean) {
        return None;
    }
    Some(
        q.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as i32 + qlo, c))
            .collect(),
    )
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::from_sorted(self.terms.iter().map(|(e, c)| (*e, -c)).collect(), self.chr)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics if the operands have different characteristics.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("mixed characteristics")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

fn write_var(out: &mut String, name: &str, e: i32, first: &mut bool) {
    use core::fmt::Write;
    if e == 0 {
        return;
    }
    if !*first {
        out.push('*');
    }
    let _ = write!(out, "{name}^{e}");
    *first = false;
}

/// Canonical text: terms by ascending `(deg_v, deg_s)`, each `c*v^a*s^b`,
/// unit coefficients and zero exponents omitted, joined by ` + `.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mut body = String::new();
            let mut first = true;
            write_var(&mut body, "v", *a, &mut first);
            write_var(&mut body, "s", *b, &mut first);
            if body.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                f.write_str(&body)?;
            } else if c.is_negative() && c.magnitude().is_one() {
                write!(f, "-{body}")?;
            } else {
                write!(f, "{c}*{body}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.chr {
            Characteristic::Zero => write!(f, "{self}"),
            Characteristic::Two => write!(f, "[{self}]_2"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Characteristic::*;

    fn z(s: i32) -> LaurentPoly {
        LaurentPoly::monomial(1, 0, s, Zero)
    }

    #[test]
    fn difference_of_squares() {
        let a = z(1) - z(-1);
        let b = z(1) + z(-1);
        assert_eq!(&a * &b, z(2) - z(-2));
    }

    #[test]
    fn additive_identity() {
        let p = LaurentPoly::monomial(3, -2, 5, Zero) + LaurentPoly::v(Zero);
        assert_eq!(&p + &LaurentPoly::zero(Zero), p);
    }

    #[test]
    fn frobenius_kills_cross_term() {
        let a = LaurentPoly::monomial(1, -1, 0, Two) - LaurentPoly::v(Two);
        let sq = &a * &a;
        let expect = LaurentPoly::monomial(1, -2, 0, Two) + LaurentPoly::monomial(1, 2, 0, Two);
        assert_eq!(sq, expect);
    }

    #[test]
    fn mixed_characteristics_rejected() {
        let a = LaurentPoly::one(Zero);
        let b = LaurentPoly::one(Two);
        assert_eq!(a.checked_add(&b), Err(RingError::MixedCharacteristic));
        assert_eq!(a.checked_mul(&b), Err(RingError::MixedCharacteristic));
    }

    #[test]
    fn exact_division() {
        let a = z(1) - z(-1);
        let b = z(1) + z(-1) + LaurentPoly::v(Zero);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!((&p + &LaurentPoly::one(Zero)).div_exact(&a), None);
    }

    #[test]
    fn rendering() {
        let p = LaurentPoly::monomial(-1, 1, 0, Zero)
            + LaurentPoly::monomial(1, -1, 0, Zero)
            + LaurentPoly::monomial(3, 0, 2, Zero)
            + LaurentPoly::constant(-2, Zero);
        assert_eq!(p.to_string(), "v^-1 + -2 + 3*s^2 + -v^1");
        assert_eq!(LaurentPoly::zero(Zero).to_string(), "0");
        assert_eq!(LaurentPoly::constant(-1, Zero).to_string(), "-1");
    }

    #[test]
    fn inexact_bivariate_division_terminates() {
        // v + s does not divide v*s + 1; the remainder's lead keeps sliding in s.
        let d = LaurentPoly::v(Zero) + LaurentPoly::s(Zero);
        let n = LaurentPoly::monomial(1, 1, 1, Zero) + LaurentPoly::one(Zero);
        assert_eq!(n.div_exact(&d), None);
        let q = LaurentPoly::monomial(2, 1, -3, Zero) - LaurentPoly::s(Zero);
        assert_eq!((&q * &d).div_exact(&d), Some(q));
    }
}
