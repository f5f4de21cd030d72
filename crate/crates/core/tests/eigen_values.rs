use satskein_core::eigen::*;
use satskein_core::partition::Partition;
use satskein_core::ring::{Characteristic::*, LaurentPoly, RingElem};

fn p(parts: &[u32]) -> Partition {
    Partition::from_parts(parts)
}

fn mono(c: i64, a: i32, b: i32) -> RingElem {
    LaurentPoly::monomial(c, a, b, Zero).into()
}

fn z() -> RingElem {
    &mono(1, 0, 1) - &mono(1, 0, -1)
}

fn delta() -> RingElem {
    (&mono(1, -1, 0) - &mono(1, 1, 0)).checked_div(&z()).unwrap()
}

/// The eigenvalue straight from the cell contents.
fn c_from_cells(lambda: &Partition) -> RingElem {
    let up = lambda.contents().fold(RingElem::zero(Zero), |acc, c| &acc + &mono(1, -1, 2 * c));
    let down = lambda.contents().fold(RingElem::zero(Zero), |acc, c| &acc + &mono(1, 1, -2 * c));
    &(&(&z() * &(&up - &down)) + &delta()) + &RingElem::one(Zero)
}

#[test]
fn small_eigenvalues_by_hand() {
    let one = RingElem::one(Zero);
    let vinv_minus_v = &mono(1, -1, 0) - &mono(1, 1, 0);
    assert_eq!(c_of(&Partition::empty(), Zero), &delta() + &one);
    assert_eq!(c_of(&p(&[1]), Zero), &(&(&z() * &vinv_minus_v) + &delta()) + &one);
    let c2 = &z() * &(&(&mono(1, -1, 0) + &mono(1, -1, 2)) - &(&mono(1, 1, 0) + &mono(1, 1, -2)));
    assert_eq!(c_of(&p(&[2]), Zero), &(&c2 + &delta()) + &one);
    assert_eq!(s_of(&Partition::empty(), &Partition::empty(), Zero), delta());
    assert_eq!(s_of(&p(&[1]), &Partition::empty(), Zero), &(&z() * &mono(1, -1, 0)) + &delta());
    assert_eq!(s_of(&p(&[1]), &p(&[1]), Zero), &(&z() * &vinv_minus_v) + &delta());
    assert_eq!(delta_kauffman(Zero), c_of(&Partition::empty(), Zero));
}

#[test]
fn eigenvalues_match_cell_formula() {
    for lambda in Partition::enumerate(6).unwrap() {
        assert_eq!(c_of(&lambda, Zero), c_from_cells(&lambda), "{lambda}");
    }
}

#[test]
fn kauffman_eigenvalue_is_diagonal_homfly_plus_one() {
    for lambda in Partition::enumerate(8).unwrap() {
        assert_eq!(c_of(&lambda, Zero), &s_of(&lambda, &lambda, Zero) + &RingElem::one(Zero), "{lambda}");
    }
}

#[test]
fn adjoint_eigenvalue_is_bar_mod_two() {
    for lambda in Partition::enumerate(6).unwrap() {
        let lhs = adjoint_eigenvalue(&lambda, &lambda, Two);
        assert_eq!(lhs, c_of(&lambda, Two).bar().unwrap(), "{lambda}");
    }
    let (one, e) = (p(&[1]), Partition::empty());
    let prod = &s_of(&one, &e, Zero) * &s_of(&e, &one, Zero);
    assert_eq!(adjoint_eigenvalue(&one, &e, Zero), &prod - &RingElem::one(Zero));
    assert_eq!(adjoint_eigenvalue(&e, &e, Zero), &(&delta() * &delta()) - &RingElem::one(Zero));
}

#[test]
fn distinct_mod_two() {
    let r0 = check_distinct(0);
    assert!(r0.passed());
    assert_eq!(r0.partitions, 1);
    let r4 = check_distinct(4);
    assert!(r4.passed());
    assert_eq!(r4.partitions, 12);
    let r8 = check_distinct(8);
    assert!(r8.passed(), "{:?}", r8.collision);
    assert_eq!((r8.partitions, r8.comparisons), (67, 67 * 66 / 2));
}

#[test]
fn table_entries_recompute() {
    let mut t = EigenTable::new(4, Two);
    for (lambda, c) in t.iter() {
        assert_eq!(*c, c_of(lambda, Two));
    }
    let big = p(&[3, 2, 1]);
    assert!(t.get(&big).is_none());
    assert_eq!(t.get_or_compute(&big), c_of(&big, Two));
}

#[test]
fn x_poly_roots_and_scale() {
    for lambda in Partition::enumerate(4).unwrap().into_iter().filter(|l| !l.is_empty()) {
        for rho in lambda.minus() {
            let x = x_poly(&lambda, &rho).unwrap();
            assert_eq!(x.degree(), rho.neighbors().len() - 1);
            for mu in rho.neighbors() {
                let value = x.eval(&c_of(&mu, Zero));
                assert_eq!(value.is_zero(), mu != lambda, "{lambda} {rho} {mu}");
            }
            assert!(!x.scale(Two).is_zero(), "X(c_lambda) vanishes mod 2 for {lambda}");
            assert_eq!(x.scale(Two), x.scale(Zero).to_mod2().unwrap());
        }
    }
    let x = x_poly(&p(&[1, 1]), &p(&[1])).unwrap();
    assert_eq!(x.roots, vec![Partition::empty(), p(&[2])]);
    let x = x_poly(&p(&[3]), &p(&[2])).unwrap();
    assert_eq!(x.roots, vec![p(&[1]), p(&[2, 1])]);
    // Coefficients expand (t - c_a)(t - c_b).
    let (ca, cb) = (c_of(&p(&[1]), Zero), c_of(&p(&[2, 1]), Zero));
    assert_eq!(x.coeffs, vec![&ca * &cb, -(&ca + &cb), RingElem::one(Zero)]);
}
