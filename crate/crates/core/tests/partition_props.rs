use std::collections::BTreeSet;

use proptest::prelude::*;
use satskein_core::partition::Partition;
use satskein_core::ring::{Characteristic::Zero, LaurentPoly};

/// Partitions of `n` from all compositions of `n`, sorted and deduplicated.
fn brute_force(n: u32) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    if n == 0 {
        out.insert(Vec::new());
        return out;
    }
    // A composition of n is a subset of the n-1 cut points.
    for mask in 0u32..(1 << (n - 1)) {
        let mut parts = Vec::new();
        let mut run = 1;
        for i in 0..n - 1 {
            if mask >> i & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(parts);
    }
    out
}

fn partition_strategy(max: u32) -> impl Strategy<Value = Partition> {
    let all: Vec<Partition> = Partition::enumerate(max as i64).unwrap();
    prop::sample::select(all)
}

#[test]
fn enumeration_matches_compositions() {
    for n in 0..=10 {
        let ours: BTreeSet<Vec<u32>> = Partition::of_size(n).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(ours, brute_force(n), "size {n}");
    }
    assert_eq!(Partition::of_size(6).len(), 11);
    let upto8 = Partition::enumerate(8).unwrap();
    assert_eq!(upto8.len(), 67);
    let mut sorted = upto8.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted, upto8);
    assert!(Partition::enumerate(-1).is_err());
}

#[test]
fn frobenius_holds_for_all_small_partitions() {
    for p in Partition::enumerate(10).unwrap() {
        let (arms, legs) = p.frobenius();
        assert_eq!(Partition::from_frobenius(&arms, &legs).unwrap(), p);
        assert!(p.frobenius_identity_check(), "{p}");
        // Independent check of the identity from the cell list.
        let z = LaurentPoly::s(Zero) - LaurentPoly::monomial(1, 0, -1, Zero);
        let lhs = p.cells().fold(LaurentPoly::zero(Zero), |acc, (i, j)| {
            acc + &z * &LaurentPoly::monomial(1, 0, 2 * (j as i32 - i as i32), Zero)
        });
        let rhs = arms.iter().zip(&legs).fold(LaurentPoly::zero(Zero), |acc, (&a, &b)| {
            acc + LaurentPoly::monomial(1, 0, 2 * a as i32 + 1, Zero)
                - LaurentPoly::monomial(1, 0, -2 * b as i32 - 1, Zero)
        });
        assert_eq!(lhs, rhs, "{p}");
    }
}

#[test]
fn neighbor_duality() {
    let all = Partition::enumerate(9).unwrap();
    for rho in all.iter().filter(|p| p.size() <= 8) {
        let distinct: BTreeSet<u32> = rho.parts().iter().copied().collect();
        assert_eq!(rho.plus().len(), distinct.len() + 1);
        for mu in rho.plus() {
            assert!(mu.minus().contains(rho));
        }
    }
    for mu in &all {
        for rho in mu.minus() {
            assert!(rho.plus().contains(mu));
        }
    }
}

proptest! {
    #[test]
    fn content_polynomial_counts_cells(p in partition_strategy(10)) {
        let c = p.content_polynomial();
        let total: i64 = c.terms().iter().map(|(_, k)| i64::try_from(k).unwrap()).sum();
        prop_assert_eq!(total, p.size() as i64);
    }

    #[test]
    fn text_round_trip(p in partition_strategy(10)) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn order_is_by_size_first(a in partition_strategy(7), b in partition_strategy(7)) {
        if a.size() < b.size() {
            prop_assert!(a < b);
        }
    }
}
