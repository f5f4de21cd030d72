use satskein_core::corpus;
use satskein_core::eigen::{c_of, delta_homfly, delta_kauffman, s_of};
use satskein_core::partition::Partition;
use satskein_core::ring::{Characteristic::Zero, LaurentPoly, RingElem};
use satskein_core::skein::{homfly, kauffman, EvalConfig};

fn poly(terms: &[(i64, i32, i32)]) -> RingElem {
    terms
        .iter()
        .fold(LaurentPoly::zero(Zero), |acc, &(c, a, b)| acc + LaurentPoly::monomial(c, a, b, Zero))
        .into()
}

fn z() -> RingElem {
    poly(&[(1, 0, 1), (-1, 0, -1)])
}

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

#[test]
fn empty_and_unknot() {
    let empty = corpus::get("empty").unwrap();
    assert_eq!(homfly(&empty, &cfg()).unwrap(), RingElem::one(Zero));
    assert_eq!(kauffman(&empty, &cfg()).unwrap(), RingElem::one(Zero));
    let unknot = corpus::get("unknot").unwrap();
    assert_eq!(homfly(&unknot, &cfg()).unwrap(), delta_homfly(Zero));
    assert_eq!(kauffman(&unknot, &cfg()).unwrap(), delta_kauffman(Zero));
}

#[test]
fn hopf_links_match_hand_resolution() {
    let d = delta_homfly(Zero);
    let dk = delta_kauffman(Zero);
    let vinv = poly(&[(1, -1, 0)]);
    let v = poly(&[(1, 1, 0)]);
    // One switch unlinks, one smoothing leaves an unknot with a curl.
    let plus = &(&d * &d) + &(&(&z() * &vinv) * &d);
    let minus = &(&d * &d) - &(&(&z() * &v) * &d);
    let hp = corpus::get("hopf_plus").unwrap();
    let hm = corpus::get("hopf_minus").unwrap();
    assert_eq!(homfly(&hp, &cfg()).unwrap(), plus);
    assert_eq!(homfly(&hm, &cfg()).unwrap(), minus);
    let one = Partition::from_parts(&[1]);
    assert_eq!(plus, &d * &s_of(&one, &Partition::empty(), Zero));
    let kd = &(&dk * &dk) + &(&(&z() * &(&vinv - &v)) * &dk);
    assert_eq!(kauffman(&hp, &cfg()).unwrap(), kd);
    assert_eq!(kauffman(&hm, &cfg()).unwrap(), kd);
    assert_eq!(kd, &dk * &c_of(&one, Zero));
}

#[test]
fn knots_match_tabulated_homfly() {
    let d = delta_homfly(Zero);
    let z2 = &z() * &z();
    // Table trefoil has three negative crossings; framed value is delta * v^-w * P.
    let tref = &d * &(&poly(&[(2, 1, 0), (-1, -1, 0)]) + &(&z2 * &poly(&[(1, 1, 0)])));
    assert_eq!(homfly(&corpus::get("trefoil").unwrap(), &cfg()).unwrap(), tref);
    let fig8 = &d * &(&poly(&[(1, -2, 0), (-1, 0, 0), (1, 2, 0)]) - &z2);
    assert_eq!(homfly(&corpus::get("figure_eight").unwrap(), &cfg()).unwrap(), fig8);
}
