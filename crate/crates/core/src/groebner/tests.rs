use super::*;
use crate::field::{PrimeField, Rationals};
use crate::rational::Rational;

fn ring(names: &[&str]) -> Ring<Rationals> {
    PolyRing::new(Rationals, names.iter().map(|s| s.to_string()).collect(), MonomialOrder::DegRevLex)
}

fn ideal(r: &Ring<Rationals>, gens: &[&str]) -> Ideal<Rationals> {
    Ideal::new(r, gens.iter().map(|g| MultiPoly::parse(r, g).unwrap()).collect()).unwrap()
}

fn opts() -> GbOptions {
    GbOptions::default()
}

#[test]
fn trivial_bases() {
    let r = PolyRing::new(Rationals, vec!["x".into()], MonomialOrder::Lex);
    let i = Ideal::new(&r, vec![MultiPoly::parse(&r, "x^2 - 1").unwrap(), MultiPoly::parse(&r, "x - 1").unwrap()]).unwrap();
    let rep = groebner(&i, &MonomialOrder::Lex, &opts()).unwrap();
    let shown: Vec<String> = rep.basis.iter().map(|g| g.to_string()).collect();
    assert_eq!(shown, vec!["x - 1"]);
    let u = Ideal::unit(&r);
    assert!(groebner(&u, &MonomialOrder::DegRevLex, &opts()).unwrap().is_unit());
}

#[test]
fn normal_form_examples() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x"]);
    let b = i.basis(&opts()).unwrap();
    assert!(normal_form(&MultiPoly::parse(&r, "x*y").unwrap(), &b).unwrap().is_zero());
    assert_eq!(normal_form(&MultiPoly::parse(&r, "x*y + y^2").unwrap(), &b).unwrap().to_string(), "y^2");
}

#[test]
fn elimination_examples() {
    let r = ring(&["x", "y", "z"]);
    let e = eliminate(&ideal(&r, &["x - y"]), &[0], &opts()).unwrap();
    assert!(e.gens().is_empty());
    let e = eliminate(&ideal(&r, &["x - y", "y - z"]), &[1], &opts()).unwrap();
    let expected = Ideal::new(e.ring(), vec![MultiPoly::parse(e.ring(), "x - z").unwrap()]).unwrap();
    assert!(e.same_ideal(&expected, &opts()).unwrap());
    let same = eliminate(&ideal(&r, &["x^2 - y", "y*z - 1"]), &[], &opts()).unwrap();
    assert!(same.same_ideal(&ideal(&r, &["x^2 - y", "y*z - 1"]).to_ring(same.ring()).unwrap(), &opts()).unwrap());
}

#[test]
fn saturation_examples_all_strategies() {
    let r = ring(&["x", "y"]);
    for s in [SaturationStrategy::Sequential, SaturationStrategy::Rabinowitsch, SaturationStrategy::IteratedColon] {
        let sat = saturate(&ideal(&r, &["x*y"]), &MultiPoly::var(&r, 0), s, &opts()).unwrap();
        assert!(sat.same_ideal(&ideal(&r, &["y"]), &opts()).unwrap(), "{s:?}");
        let sat = saturate(&ideal(&r, &["x^2"]), &MultiPoly::var(&r, 1), s, &opts()).unwrap();
        assert!(sat.same_ideal(&ideal(&r, &["x^2"]), &opts()).unwrap(), "{s:?}");
    }
}

#[test]
fn saturation_of_affine_ideal_agrees() {
    // positive-dimensional, non-homogeneous: exercises the homogenizing route
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x*y - x", "x*z^2 - x*z", "y^2*z - z"]);
    let f = MultiPoly::parse(&r, "x*z").unwrap();
    let a = saturate(&i, &f, SaturationStrategy::Sequential, &opts()).unwrap();
    let b = saturate(&i, &f, SaturationStrategy::Rabinowitsch, &opts()).unwrap();
    let c = saturate(&i, &f, SaturationStrategy::IteratedColon, &opts()).unwrap();
    assert!(a.same_ideal(&b, &opts()).unwrap());
    assert!(a.same_ideal(&c, &opts()).unwrap());
    let again = saturate(&a, &f, SaturationStrategy::Sequential, &opts()).unwrap();
    assert!(again.same_ideal(&a, &opts()).unwrap());
}

#[test]
fn unit_tests_of_ideals() {
    let r = ring(&["x"]);
    assert!(is_unit_ideal(&ideal(&r, &["x", "x + 1"]), &opts()).unwrap());
    assert!(!is_unit_ideal(&ideal(&r, &["x"]), &opts()).unwrap());
}

#[test]
fn dimension_and_degree_examples() {
    let r = ring(&["x", "y"]);
    assert_eq!(dimension_and_degree(&ideal(&r, &["x"]), &opts()).unwrap(), (1, 1));
    assert_eq!(dimension_and_degree(&ideal(&r, &["x^2", "x*y"]), &opts()).unwrap(), (1, 1));
    // twisted cubic: dimension 2 affine cone, degree 3
    let r = ring(&["a", "b", "c", "d"]);
    let tc = ideal(&r, &["a*c - b^2", "b*d - c^2", "a*d - b*c"]);
    assert_eq!(dimension_and_degree(&tc, &opts()).unwrap(), (2, 3));
}

#[test]
fn budget_exhaustion_is_reported() {
    let r = ring(&["a", "b", "c", "d"]);
    let i = ideal(&r, &["a*c - b^2", "b*d - c^2", "a*d - b*c"]);
    let o = GbOptions::with_budget(Budget::unlimited().with_max_pairs(1));
    assert!(matches!(groebner(&i, &MonomialOrder::Lex, &o), Err(GbError::BudgetExhausted { .. })));
    let flag = Arc::new(AtomicBool::new(true));
    let o = GbOptions::with_budget(Budget::unlimited().with_cancel(flag));
    assert!(matches!(groebner(&i, &MonomialOrder::Lex, &o), Err(GbError::Cancelled)));
}

#[test]
fn prime_field_basis() {
    let f = PrimeField::new(2).unwrap();
    let r = PolyRing::new(f, vec!["x".into(), "y".into()], MonomialOrder::DegRevLex);
    let i = Ideal::new(&r, vec![MultiPoly::parse(&r, "x^2 + y").unwrap(), MultiPoly::parse(&r, "x*y + 1").unwrap()]).unwrap();
    let rep = groebner(&i, &MonomialOrder::DegRevLex, &opts()).unwrap();
    for g in &rep.basis {
        assert!(g.leading_coeff().map(|c| *c == 1).unwrap());
    }
    assert!(check_buchberger(&rep.basis));
}

/// Every S-polynomial of the basis reduces to zero.
pub(crate) fn check_buchberger<F: Field>(basis: &[MultiPoly<F>]) -> bool {
    if basis.is_empty() {
        return true;
    }
    let k = basis[0].field().clone();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (a, b) = (&basis[i], &basis[j]);
            let l = a.leading_monomial().unwrap().lcm(b.leading_monomial().unwrap());
            let sa = a.mul_monomial(&l.div(a.leading_monomial().unwrap()).unwrap()).scale(&k.inv(a.leading_coeff().unwrap()).unwrap());
            let sb = b.mul_monomial(&l.div(b.leading_monomial().unwrap()).unwrap()).scale(&k.inv(b.leading_coeff().unwrap()).unwrap());
            if !normal_form(&sa.sub(&sb), basis).unwrap().is_zero() {
                return false;
            }
        }
    }
    true
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn poly_strategy(r: Ring<Rationals>) -> impl Strategy<Value = MultiPoly<Rationals>> {
        proptest::collection::vec((proptest::collection::vec(0u16..3, 3), -3i64..4), 1..4).prop_map(move |ts| {
            MultiPoly::from_terms(&r, ts.into_iter().map(|(e, c)| (Monomial::from_exponents(e), Rational::from_int(c))).collect())
        })
    }

    fn r3() -> Ring<Rationals> {
        ring(&["x", "y", "z"])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn basis_properties(gens in proptest::collection::vec(poly_strategy(r3()), 1..4),
                            mult in proptest::collection::vec(poly_strategy(r3()), 3)) {
            let r = gens[0].ring().clone();
            let i = Ideal::new(&r, gens.clone()).unwrap();
            let o = GbOptions::with_budget(Budget::unlimited().with_max_pairs(2000));
            let Ok(rep) = groebner(&i, &MonomialOrder::DegRevLex, &o) else { return Ok(()); };
            prop_assert!(check_buchberger(&rep.basis));
            for g in &rep.basis { prop_assert!(g.validate().is_ok()); }
            // idempotence
            let again = groebner(&Ideal::new(&r, rep.basis.clone()).unwrap(), &MonomialOrder::DegRevLex, &o).unwrap();
            prop_assert_eq!(&again.basis, &rep.basis);
            // membership of random combinations
            let mut comb = MultiPoly::zero(&r);
            for (g, m) in gens.iter().zip(mult.iter()) { comb = comb.add(&g.mul(m)); }
            prop_assert!(normal_form(&comb, &rep.basis).unwrap().is_zero());
            // generators reduce to zero
            for g in &gens { prop_assert!(normal_form(g, &rep.basis).unwrap().is_zero()); }
        }
    }
}
