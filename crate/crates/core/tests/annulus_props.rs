use satskein_core::annulus::*;
use satskein_core::diagram::LinkDiagram;
use satskein_core::eigen::{c_of, x_poly};
use satskein_core::partition::Partition;
use satskein_core::ring::{Characteristic::Zero, RingElem};

fn p(parts: &[u32]) -> Partition {
    Partition::from_parts(parts)
}

fn one() -> RingElem {
    RingElem::one(Zero)
}

#[test]
fn branching_and_meridians() {
    let y1 = AnnulusVecK::basis(p(&[1]));
    let prod = y1.branch_mul_y1();
    let keys: Vec<_> = prod.iter().map(|(k, _)| k.clone()).collect();
    assert_eq!(keys, vec![Partition::empty(), p(&[2]), p(&[1, 1])]);
    assert!(prod.iter().all(|(_, c)| *c == one()));
    assert_eq!(AnnulusVecK::basis(Partition::empty()).branch_mul_y1(), y1);

    let m = prod.meridian_act(2);
    for (mu, c) in m.iter() {
        let e = c_of(mu, Zero);
        assert_eq!(*c, &e * &e, "{mu}");
    }
    assert_eq!(prod.meridian_act(0), prod);
    assert!(prod.add(&prod.scale(&-one())).is_zero());
}

#[test]
fn plan_shapes() {
    assert_eq!(expand_ylambda(&Partition::empty(), None), Err(AnnulusError::EmptyPartition));
    let trivial = expand_ylambda(&p(&[1]), None).unwrap();
    assert!(trivial.is_trivial());
    assert_eq!(trivial.depth(), 0);
    assert_eq!(trivial.words().len(), 1);
    assert_eq!(trivial.words()[0].1.to_string(), "l");

    let two = expand_ylambda(&p(&[2]), None).unwrap();
    assert_eq!((two.rho.clone(), two.depth(), two.terms.len()), (p(&[1]), 1, 3));
    let words: Vec<String> = two.words().iter().map(|(_, w)| w.to_string()).collect();
    assert_eq!(words, vec!["l^2", "l^2m", "l^2m^2"]);
    let x = x_poly(&p(&[2]), &p(&[1])).unwrap();
    assert_eq!(two.scale, x.scale(Zero));
    assert_eq!(two.scale, x.eval(&c_of(&p(&[2]), Zero)));

    let nested = expand_ylambda(&p(&[2, 1]), None).unwrap();
    assert_eq!((nested.rho.clone(), nested.depth()), (p(&[2]), 2));
    let words = nested.words();
    assert_eq!(words.len(), nested.terms.len() * 3);
    assert_eq!(words[0].1.to_string(), "l^3");
    assert_eq!(words[1].1.to_string(), "l^2ml");
    assert_eq!(words.last().unwrap().1.to_string(), format!("l^2m^2lm^{}", nested.terms.len() - 1));
    assert_eq!(nested.total_scale(), &nested.scale * &two.scale);
}

#[test]
fn symbolic_realization_is_diagonal() {
    for lambda in Partition::enumerate(4).unwrap().into_iter().filter(|l| !l.is_empty()) {
        for rho in lambda.minus() {
            let plan = expand_ylambda(&lambda, Some(&rho)).unwrap();
            let got = realize_symbolic(&plan);
            let want = AnnulusVecK::basis(lambda.clone()).scale(&plan.total_scale());
            assert_eq!(got, want, "{lambda} via {rho}");
            assert!(!plan.total_scale().is_zero());
        }
    }
}

#[test]
fn realized_diagrams_on_small_links() {
    let plan = expand_ylambda(&p(&[2]), None).unwrap();
    let terms = realize_diagrams(&LinkDiagram::unknot(), 1, &plan).unwrap();
    let shape: Vec<_> = terms.iter().map(|t| (t.diagram.component_count(), t.diagram.crossing_count())).collect();
    assert_eq!(shape, vec![(2, 0), (3, 4), (4, 8)]);
    for (t, (a, r)) in terms.iter().zip(&plan.terms) {
        assert_eq!((&t.coeff, t.meridians.clone()), (a, vec![*r]));
        t.diagram.validate().unwrap();
    }
    let hopf = satskein_core::corpus::get("hopf_plus").unwrap();
    let terms = realize_diagrams(&hopf, 1, &plan).unwrap();
    assert_eq!((terms[0].diagram.component_count(), terms[0].diagram.crossing_count()), (3, 4));
    assert!(realize_diagrams(&hopf, 3, &plan).is_err());

    let nested = expand_ylambda(&p(&[2, 1]), None).unwrap();
    let terms = realize_diagrams(&LinkDiagram::unknot(), 1, &nested).unwrap();
    assert_eq!(terms.len(), nested.words().len());
    for (t, (c, w)) in terms.iter().zip(nested.words()) {
        assert_eq!((&t.coeff, &t.word), (&c, &w));
        let ms: u32 = t.meridians.iter().sum();
        assert_eq!(t.diagram.component_count() as u32, 3 + ms);
    }
}

#[test]
fn homfly_branching_examples() {
    let (e, a) = (Partition::empty(), p(&[1]));
    let up = homfly_branching_expand(&e, &e, Sense::With);
    assert_eq!(up.into_iter().collect::<Vec<_>>(), vec![((a.clone(), e.clone()), 1)]);
    let right = homfly_branching_expand(&a, &e, Sense::With);
    assert_eq!(right.len(), 2);
    assert!(right.contains_key(&(p(&[2]), e.clone())) && right.contains_key(&(p(&[1, 1]), e.clone())));
    let back = homfly_branching_expand(&a, &e, Sense::Against);
    let keys: Vec<_> = back.keys().cloned().collect();
    assert_eq!(keys, vec![(e.clone(), e.clone()), (a.clone(), a.clone())]);
}

#[test]
fn hsr_structure_for_small_partitions() {
    let r = hsr_structure_check(&p(&[1]));
    assert!(r.passed());
    assert_eq!(r.product.get(&(p(&[1]), p(&[1]))), Some(&2));
    assert_eq!(r.product.get(&(Partition::empty(), Partition::empty())), Some(&1));
    for rho in Partition::enumerate(4).unwrap() {
        let r = hsr_structure_check(&rho);
        assert!(r.passed(), "{rho}: {:?}", r.offending);
        assert!(r.pairs.iter().all(|(a, b, n)| a < b && (0..=1).contains(n)));
    }
}

#[test]
fn word_text() {
    let w: LMWord = "l^2m^3lm".parse().unwrap();
    assert_eq!((w.longitudes(), w.meridians()), (3, 4));
    assert_eq!(w.to_string(), "l^2m^3lm");
    let built = LMWord::core(p(&[1])).push(Letter::L, 2).push(Letter::M, 0).push(Letter::M, 3).push(Letter::L, 1);
    assert_eq!(built.to_string(), "l^2m^3l");
    for bad in ["", "ll", "l^0", "x", "m^2m"] {
        assert!(bad.parse::<LMWord>().is_err(), "{bad}");
    }
}
