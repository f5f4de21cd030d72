use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Characteristic, LaurentPoly, RingError};

/// Element of the fraction ring: a Laurent polynomial over a denominator.
///
/// The denominator is held factored as `prod Phi_d(s)^e_d * general`, where
/// `Phi_d` is the `d`-th cyclotomic polynomial in `s`. Every `s^r - s^-r` is a
/// monomial times such a product, so the denominators produced by eigenvalues
/// and skein evaluation never need the `general` part; it only appears after
/// dividing by an arbitrary element. Equality is decided by cross-multiplying.
#[derive(Clone)]
pub struct RingElem {
    num: LaurentPoly,
    cyclo: BTreeMap<u32, u32>,
    general: LaurentPoly,
}

/// `Phi_d(s)` via `prod_{k | d} (s^k - 1)^{mu(d/k)}`.
fn cyclotomic(d: u32, chr: Characteristic) -> LaurentPoly {
    let s_pow_minus_one =
        |k: u32| LaurentPoly::monomial(1, 0, k as i32, Characteristic::Zero) - LaurentPoly::one(Characteristic::Zero);
    let mut up = LaurentPoly::one(Characteristic::Zero);
    let mut down = LaurentPoly::one(Characteristic::Zero);
    for k in 1..=d {
        if !d.is_multiple_of(k) {
            continue;
        }
        match mobius(d / k) {
            1 => up = &up * &s_pow_minus_one(k),
            -1 => down = &down * &s_pow_minus_one(k),
            _ => {}
        }
    }
    let phi = up.div_exact(&down).expect("cyclotomic quotient is exact");
    match chr {
        Characteristic::Zero => phi,
        Characteristic::Two => phi.to_mod2(),
    }
}

fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// A denominator split into a unit to multiply the numerator by, cyclotomic
/// exponents, and whatever is left.
struct FactoredDen {
    unit: LaurentPoly,
    cyclo: BTreeMap<u32, u32>,
    general: LaurentPoly,
}

fn factor_denominator(p: &LaurentPoly) -> FactoredDen {
    let chr = p.characteristic();
    let (mv, ms) = p.min_exponents().expect("nonzero denominator");
    let mut rest = p.shift(-mv, -ms);
    let mut unit = LaurentPoly::monomial(1, -mv, -ms, chr);
    let mut cyclo = BTreeMap::new();
    {
        // Phi_d has degree phi(d) >= sqrt(d/2), so d beyond 2 deg^2 cannot divide.
        let deg = rest.max_exponents().map(|e| e.1).unwrap_or(0) as u32;
        let mut d = 1;
        let bound = 2 * deg * deg + 2;
        while d <= bound && rest.max_exponents().map(|e| e.1).unwrap_or(0) > 0 {
            let phi = cyclotomic(d, chr);
            while let Some(q) = rest.div_exact(&phi) {
                rest = q;
                *cyclo.entry(d).or_insert(0) += 1;
            }
            d += 1;
        }
    }
    if let Some((c, e)) = rest.as_monomial() {
        if e == (0, 0) && c.magnitude().is_one() {
            unit = unit.scale(c);
            rest = LaurentPoly::one(chr);
        }
    }
    let lead_negative = rest.terms().last().map(|(_, c)| c.is_negative()).unwrap_or(false);
    if lead_negative {
        rest = -rest;
        unit = -unit;
    }
    FactoredDen { unit, cyclo, general: rest }
}

fn content(p: &LaurentPoly) -> BigInt {
    p.terms().iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
}

impl RingElem {
    pub fn zero(chr: Characteristic) -> Self {
        Self::from_poly(LaurentPoly::zero(chr))
    }

    pub fn one(chr: Characteristic) -> Self {
        Self::from_poly(LaurentPoly::one(chr))
    }

    pub fn integer(c: i64, chr: Characteristic) -> Self {
        Self::from_poly(LaurentPoly::constant(c, chr))
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        let chr = num.characteristic();
        RingElem { num, cyclo: BTreeMap::new(), general: LaurentPoly::one(chr) }
    }

    /// `num / den`, reduced.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, RingError> {
        if num.characteristic() != den.characteristic() {
            return Err(RingError::MixedCharacteristic);
        }
        if den.is_zero() {
            return Err(RingError::DivisionByZero { op: "new" });
        }
        let f = factor_denominator(&den);
        let mut out = RingElem { num: &num * &f.unit, cyclo: f.cyclo, general: f.general };
        out.normalize();
        Ok(out)
    }

    /// `(s^r - s^-r)^e` in the denominator of `num`.
    pub fn over_quantum(num: LaurentPoly, r: u32, e: u32) -> Self {
        let chr = num.characteristic();
        let mut cyclo = BTreeMap::new();
        for d in 1..=2 * r {
            if (2 * r).is_multiple_of(d) {
                cyclo.insert(d, e);
            }
        }
        let mut out = RingElem {
            num: num.shift(0, (r * e) as i32),
            cyclo,
            general: LaurentPoly::one(chr),
        };
        out.normalize();
        out
    }

    pub fn characteristic(&self) -> Characteristic {
        self.num.characteristic()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is a product of the `s^r - s^-r` (up to a unit).
    pub fn has_quantum_denominator(&self) -> bool {
        self.general.is_one()
    }

    /// Denominator rendered as `s^-m * prod Phi_d(s)^e_d * general`, with
    /// `m` half the cyclotomic degree so that `s - s^-1` renders symmetrically.
    pub fn denominator(&self) -> LaurentPoly {
        let (cyc, m) = self.cyclo_product();
        &cyc.shift(0, -m) * &self.general
    }

    /// Numerator matching [`RingElem::denominator`].
    pub fn numerator(&self) -> LaurentPoly {
        let (_, m) = self.cyclo_product();
        self.num.shift(0, -m)
    }

    fn cyclo_product(&self) -> (LaurentPoly, i32) {
        let chr = self.characteristic();
        let mut p = LaurentPoly::one(chr);
        for (&d, &e) in &self.cyclo {
            p = &p * &cyclotomic(d, chr).pow(e);
        }
        let deg = p.max_exponents().map(|e| e.1).unwrap_or(0);
        (p, deg / 2)
    }

    fn den_poly(&self) -> LaurentPoly {
        let (cyc, _) = self.cyclo_product();
        &cyc * &self.general
    }

    fn normalize(&mut self) {
        let chr = self.characteristic();
        if self.num.is_zero() {
            self.cyclo.clear();
            self.general = LaurentPoly::one(chr);
            return;
        }
        if !self.general.is_one() {
            if let Some(q) = self.num.div_exact(&self.general) {
                self.num = q;
                self.general = LaurentPoly::one(chr);
            } else if let Some((c, (0, 0))) = self.general.as_monomial() {
                let g = content(&self.num).gcd(c);
                if !g.is_one() {
                    self.num = self.num.div_exact(&LaurentPoly::from_terms([((0, 0), g.clone())], chr)).unwrap();
                    self.general = LaurentPoly::from_terms([((0, 0), c / &g)], chr);
                }
            }
        }
        let ds: alloc::vec::Vec<u32> = self.cyclo.keys().copied().collect();
        for d in ds {
            let phi = cyclotomic(d, chr);
            let e = self.cyclo.get_mut(&d).unwrap();
            while *e > 0 {
                match self.num.div_exact(&phi) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.cyclo.retain(|_, e| *e > 0);
    }

    fn check(&self, other: &Self) -> Result<(), RingError> {
        if self.characteristic() == other.characteristic() {
            Ok(())
        } else {
            Err(RingError::MixedCharacteristic)
        }
    }

    fn cyclo_cofactor(&self, target: &BTreeMap<u32, u32>) -> LaurentPoly {
        let chr = self.characteristic();
        let mut p = LaurentPoly::one(chr);
        for (&d, &e) in target {
            let have = self.cyclo.get(&d).copied().unwrap_or(0);
            if e > have {
                p = &p * &cyclotomic(d, chr).pow(e - have);
            }
        }
        p
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Self {
        let mut cyclo = self.cyclo.clone();
        for (&d, &e) in &other.cyclo {
            let slot = cyclo.entry(d).or_insert(0);
            *slot = (*slot).max(e);
        }
        let mut a = &self.num * &self.cyclo_cofactor(&cyclo);
        let mut b = &other.num * &other.cyclo_cofactor(&cyclo);
        let general = if self.general == other.general {
            self.general.clone()
        } else {
            a = &a * &other.general;
            b = &b * &self.general;
            &self.general * &other.general
        };
        let num = if negate { &a - &b } else { &a + &b };
        let mut out = RingElem { num, cyclo, general };
        out.normalize();
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        Ok(self.add_signed(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        Ok(self.add_signed(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let mut cyclo = self.cyclo.clone();
        for (&d, &e) in &other.cyclo {
            *cyclo.entry(d).or_insert(0) += e;
        }
        let mut out = RingElem {
            num: &self.num * &other.num,
            cyclo,
            general: &self.general * &other.general,
        };
        out.normalize();
        Ok(out)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        if other.is_zero() {
            return Err(RingError::DivisionByZero { op: "div" });
        }
        let f = factor_denominator(&other.num);
        let mut cyclo = self.cyclo.clone();
        for (&d, &e) in &f.cyclo {
            *cyclo.entry(d).or_insert(0) += e;
        }
        let mut out = RingElem {
            num: &(&self.num * &other.den_poly()) * &f.unit,
            cyclo,
            general: &self.general * &f.general,
        };
        out.normalize();
        Ok(out)
    }

    pub fn inverse(&self) -> Result<Self, RingError> {
        Self::one(self.characteristic()).checked_div(self)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(self.characteristic());
        for _ in 0..n {
            result = &result * self;
        }
        result
    }

    /// Coefficient-wise reduction mod 2 of a characteristic-zero element.
    pub fn to_mod2(&self) -> Result<Self, RingError> {
        if self.characteristic() != Characteristic::Zero {
            return Err(RingError::WrongCharacteristic { op: "to_mod2", expected: 0 });
        }
        let general = self.general.to_mod2();
        if general.is_zero() {
            return Err(RingError::DenominatorVanishesMod2);
        }
        let mut out = RingElem { num: self.num.to_mod2(), cyclo: self.cyclo.clone(), general };
        out.normalize();
        Ok(out)
    }

    /// The substitution `v -> v^2, s -> s^2`; in characteristic two this is squaring.
    pub fn bar(&self) -> Result<Self, RingError> {
        if self.characteristic() != Characteristic::Two {
            return Err(RingError::WrongCharacteristic { op: "bar", expected: 2 });
        }
        // Phi_d(s^2) = Phi_2d(s) for even d, Phi_d(s) Phi_2d(s) for odd d.
        let mut cyclo = BTreeMap::new();
        for (&d, &e) in &self.cyclo {
            *cyclo.entry(2 * d).or_insert(0) += e;
            if d % 2 == 1 {
                *cyclo.entry(d).or_insert(0) += e;
            }
        }
        let mut out = RingElem {
            num: self.num.substitute(2, 2),
            cyclo,
            general: self.general.substitute(2, 2),
        };
        out.normalize();
        Ok(out)
    }
}

impl PartialEq for RingElem {
    fn eq(&self, other: &Self) -> bool {
        if self.characteristic() != other.characteristic() {
            return false;
        }
        if self.general.is_one() && other.general.is_one() && self.cyclo == other.cyclo {
            return self.num == other.num;
        }
        &self.num * &other.den_poly() == &other.num * &self.den_poly()
    }
}

impl Eq for RingElem {}

impl From<LaurentPoly> for RingElem {
    fn from(p: LaurentPoly) -> Self {
        RingElem::from_poly(p)
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem { num: -&self.num, cyclo: self.cyclo.clone(), general: self.general.clone() }
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

macro_rules! elem_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&RingElem> for &RingElem {
            type Output = RingElem;
            /// Panics if the operands have different characteristics.
            fn $method(self, rhs: &RingElem) -> RingElem {
                self.$checked(rhs).expect("mixed characteristics")
            }
        }
        impl $tr<RingElem> for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: RingElem) -> RingElem {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RingElem> for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: &RingElem) -> RingElem {
                (&self).$method(rhs)
            }
        }
    };
}

elem_binop!(Add, add, checked_add);
elem_binop!(Sub, sub, checked_sub);
elem_binop!(Mul, mul, checked_mul);

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.denominator();
        if den.is_one() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "({})/({})", self.numerator(), den)
        }
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic() {
            Characteristic::Zero => write!(f, "{self}"),
            Characteristic::Two => write!(f, "[{self}]_2"),
        }
    }
}
