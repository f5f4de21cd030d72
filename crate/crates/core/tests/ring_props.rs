use proptest::prelude::*;
use satskein_core::ring::{Characteristic, Characteristic::*, LaurentPoly, RingElem, RingError};

fn poly_strategy(chr: Characteristic) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -2i32..=2, -2i32..=2), 0..5).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(LaurentPoly::zero(chr), |acc, (c, a, b)| acc + LaurentPoly::monomial(c, a, b, chr))
    })
}

/// `num / (s^r - s^-r)^e` in characteristic zero.
fn elem_strategy() -> impl Strategy<Value = RingElem> {
    (poly_strategy(Zero), 1u32..=3, 0u32..=2).prop_map(|(num, r, e)| RingElem::over_quantum(num, r, e))
}

fn elem2_strategy() -> impl Strategy<Value = RingElem> {
    elem_strategy().prop_map(|a| a.to_mod2().unwrap())
}

fn s(k: i32) -> LaurentPoly {
    LaurentPoly::monomial(1, 0, k, Zero)
}

fn v(k: i32) -> LaurentPoly {
    LaurentPoly::monomial(1, k, 0, Zero)
}

proptest! {
    #[test]
    fn poly_ring_axioms(a in poly_strategy(Zero), b in poly_strategy(Zero), c in poly_strategy(Zero)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn char2_poly_has_unit_coefficients(a in poly_strategy(Two), b in poly_strategy(Two)) {
        let p = &a * &b;
        prop_assert!(p.terms().iter().all(|(_, c)| *c == 1.into()));
        prop_assert!((&p + &p).is_zero());
    }

    #[test]
    fn exact_division_recovers_factor(a in poly_strategy(Zero), b in poly_strategy(Zero)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn frac_field_axioms(a in elem_strategy(), b in elem_strategy(), c in elem_strategy()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
            prop_assert_eq!(&b * &b.inverse().unwrap(), RingElem::one(Zero));
        }
    }

    #[test]
    fn equality_is_cross_multiplication(a in poly_strategy(Zero), b in poly_strategy(Zero), k in poly_strategy(Zero)) {
        prop_assume!(!b.is_zero() && !k.is_zero());
        // a/b and (ak)/(bk) are the same element however the denominators look.
        let x = RingElem::new(a.clone(), b.clone()).unwrap();
        let y = RingElem::new(&a * &k, &b * &k).unwrap();
        prop_assert_eq!(&x, &y);
        prop_assert_eq!(&y, &x);
        let z = RingElem::new(&(&a * &k) * &k, &(&b * &k) * &k).unwrap();
        prop_assert_eq!(&x, &z);
    }

    #[test]
    fn reduction_commutes_with_arithmetic(a in elem_strategy(), b in elem_strategy()) {
        let (a2, b2) = (a.to_mod2().unwrap(), b.to_mod2().unwrap());
        prop_assert_eq!((&a + &b).to_mod2().unwrap(), &a2 + &b2);
        prop_assert_eq!((&a - &b).to_mod2().unwrap(), &a2 - &b2);
        prop_assert_eq!((&a * &b).to_mod2().unwrap(), &a2 * &b2);
    }

    #[test]
    fn bar_is_squaring(a in elem2_strategy(), b in elem2_strategy()) {
        prop_assert_eq!(a.bar().unwrap(), &a * &a);
        prop_assert_eq!((&a + &b).bar().unwrap(), &a.bar().unwrap() + &b.bar().unwrap());
        prop_assert_eq!((&a * &b).bar().unwrap(), &a.bar().unwrap() * &b.bar().unwrap());
    }
}

#[test]
fn mod2_examples() {
    let p: RingElem = (LaurentPoly::monomial(2, 1, 0, Zero) + s(1)).into();
    assert_eq!(p.to_mod2().unwrap(), RingElem::from_poly(LaurentPoly::s(Two)));
    let z: RingElem = (s(1) - s(-1)).into();
    let z_plus = RingElem::from_poly((s(1) + s(-1)).to_mod2());
    assert_eq!(z.to_mod2().unwrap(), z_plus);
    assert_eq!(
        RingElem::from_poly(LaurentPoly::v(Zero)).bar(),
        Err(RingError::WrongCharacteristic { op: "bar", expected: 2 })
    );
}

#[test]
fn bar_examples() {
    let vs = RingElem::from_poly((v(1) + s(1)).to_mod2());
    assert_eq!(vs.bar().unwrap(), RingElem::from_poly((v(2) + s(2)).to_mod2()));
    let delta = RingElem::new(v(-1) - v(1), s(1) - s(-1)).unwrap().to_mod2().unwrap();
    let barred = RingElem::new((v(-2) - v(2)).to_mod2(), (s(2) - s(-2)).to_mod2()).unwrap();
    assert_eq!(delta.bar().unwrap(), barred);
}

#[test]
fn canonical_rendering() {
    let delta = RingElem::new(v(-1) - v(1), s(1) - s(-1)).unwrap();
    assert_eq!(delta.to_string(), "(v^-1 + -v^1)/(-s^-1 + s^1)");
    let p: RingElem = (LaurentPoly::monomial(3, -1, 2, Zero) - LaurentPoly::one(Zero)).into();
    assert_eq!(p.to_string(), "3*v^-1*s^2 + -1");
}
