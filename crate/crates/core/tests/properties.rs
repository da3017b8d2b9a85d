use std::collections::BTreeSet;
use std::sync::Arc;

use covsys_core::arith::Ratio;
use covsys_core::ideal::{element_norm, primes_above};
use covsys_core::{random_system, CrtContext, FieldElement, GenerationLimits, IdealLattice, Limits, NumberField};
use proptest::prelude::*;

fn fields() -> Vec<Arc<NumberField>> {
    let mut v = vec![Arc::new(NumberField::rationals())];
    for d in [-1, -5, 2, -3] {
        v.push(Arc::new(NumberField::quadratic(d).unwrap()));
    }
    v
}

fn field_strategy() -> impl Strategy<Value = Arc<NumberField>> {
    (0..5usize).prop_map(|k| fields()[k].clone())
}

/// A nonzero ideal with one or two small generators, so norms stay modest.
fn ideal_in(field: &Arc<NumberField>, raw: &[[i64; 2]]) -> IdealLattice {
    let n = field.degree();
    let mut gens: Vec<FieldElement> = raw.iter().map(|g| FieldElement(g[..n].to_vec())).collect();
    if gens.iter().all(FieldElement::is_zero) {
        gens.push(field.integer(1));
    }
    IdealLattice::from_generators(field, &gens).unwrap()
}

fn gens() -> impl Strategy<Value = Vec<[i64; 2]>> {
    prop::collection::vec([-7i64..=7, -7i64..=7], 1..=2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn norm_is_multiplicative(f in field_strategy(), a in gens(), b in gens()) {
        let i = ideal_in(&f, &a);
        let j = ideal_in(&f, &b);
        prop_assert_eq!(i.product(&j).unwrap().norm(), i.norm() * j.norm());
    }

    #[test]
    fn principal_norm_matches_element_norm(f in field_strategy(), a in [-9i64..=9, -9i64..=9]) {
        let x = FieldElement(a[..f.degree()].to_vec());
        prop_assume!(!x.is_zero());
        let i = IdealLattice::principal(&f, &x).unwrap();
        prop_assert_eq!(i.norm(), element_norm(&f, &x).unwrap());
    }

    #[test]
    fn sum_intersection_identity(f in field_strategy(), a in gens(), b in gens()) {
        let i = ideal_in(&f, &a);
        let j = ideal_in(&f, &b);
        let lhs = i.intersect(&j).unwrap().product(&i.sum(&j).unwrap()).unwrap();
        prop_assert_eq!(lhs, i.product(&j).unwrap());
    }

    #[test]
    fn product_distributes_over_sum(f in field_strategy(), a in gens(), b in gens(), c in gens()) {
        let i = ideal_in(&f, &a);
        let j = ideal_in(&f, &b);
        let k = ideal_in(&f, &c);
        let lhs = i.product(&j.sum(&k).unwrap()).unwrap();
        let rhs = i.product(&j).unwrap().sum(&i.product(&k).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn factorization_round_trips(f in field_strategy(), a in gens()) {
        let i = ideal_in(&f, &a);
        let fac = i.factor(&Limits::default()).unwrap();
        prop_assert_eq!(fac.product().unwrap(), i.clone());
        for (p, e) in fac.factors() {
            prop_assert_eq!(i.valuation(p).unwrap(), *e);
            prop_assert!(*e > 0);
        }
    }

    #[test]
    fn divides_matches_valuations(f in field_strategy(), a in gens(), b in gens()) {
        let l = Limits::default();
        let i = ideal_in(&f, &a);
        let j = ideal_in(&f, &b);
        let fi = i.factor(&l).unwrap();
        let fj = j.factor(&l).unwrap();
        let by_vals = fi.factors().iter().all(|(p, e)| fj.exponent(p) >= *e);
        prop_assert_eq!(i.divides(&j).unwrap(), by_vals);
    }

    #[test]
    fn residues_form_a_complete_system(f in field_strategy(), a in gens()) {
        let i = ideal_in(&f, &a);
        prop_assume!(i.norm() <= 150);
        let res = i.residues(&Limits::default()).unwrap();
        prop_assert_eq!(res.len() as u64, i.norm());
        prop_assert!(res[0].is_zero());
        for x in 0..res.len() {
            for y in x + 1..res.len() {
                prop_assert!(!i.congruent(&res[x], &res[y]).unwrap());
            }
        }
    }

    #[test]
    fn crt_maps_are_injective(f in field_strategy(), a in gens()) {
        let i = ideal_in(&f, &a);
        prop_assume!(i.norm() > 1 && i.norm() <= 500);
        let ctx = CrtContext::build(&i, &Limits::default()).unwrap();
        let res = i.residues(&Limits::default()).unwrap();
        let images: BTreeSet<Vec<u64>> = res.iter().map(|x| ctx.map_f(x).unwrap()).collect();
        let bar: BTreeSet<Vec<u64>> = res.iter().map(|x| ctx.map_f_bar(x).unwrap()).collect();
        prop_assert_eq!(images.len(), res.len());
        prop_assert_eq!(bar.len(), res.len());
        prop_assert_eq!(ctx.bounds_f().iter().product::<u64>(), i.norm());
        prop_assert_eq!(ctx.bounds_f_bar().iter().product::<u64>(), i.norm());
    }

    #[test]
    fn generated_systems_are_exact(k in 0..5usize, seed in any::<u64>(), steps in 0..12usize) {
        let l = Limits::default();
        let f = fields()[k].clone();
        let mut pool = primes_above(&f, 2, &l).unwrap();
        pool.extend(primes_above(&f, 3, &l).unwrap());
        let gen = GenerationLimits { max_modulus_norm: 2_000, max_classes: 32, limits: l };
        let g = random_system(&f, seed, steps, &pool, &gen).unwrap();
        let sys = g.system;
        prop_assert!(sys.verify_exact().unwrap().is_exact());
        prop_assert_eq!(sys.density().unwrap(), Ratio::ONE);
        prop_assert!(sys.modulus().norm() <= 2_000);
    }
}

#[test]
fn uniformizer_choice_does_not_change_the_partition_shape() {
    let l = Limits::default();
    let f = Arc::new(NumberField::quadratic(-5).unwrap());
    let p2 = &primes_above(&f, 2, &l).unwrap()[0];
    let modulus = p2.ideal.pow(3).unwrap();
    let square = p2.ideal.pow(2).unwrap();
    let a = CrtContext::build(&modulus, &l).unwrap();
    // any element of P \ P^2 works; try a handful and compare the f images of
    // each class mod P^2
    let candidates: Vec<FieldElement> = (-4..=4)
        .flat_map(|x| (-4..=4).map(move |y| FieldElement(vec![x, y])))
        .filter(|t| p2.ideal.contains(t).unwrap() && !square.contains(t).unwrap())
        .take(5)
        .collect();
    assert!(!candidates.is_empty());
    for t in candidates {
        let b = CrtContext::with_uniformizers(&modulus, &l, &[t]).unwrap();
        for r in square.residues(&l).unwrap() {
            let fixed = |ctx: &CrtContext| ctx.map_f(&r).unwrap()[..2].to_vec();
            // the first two digits are determined by the class mod P^2 in both
            // contexts, so equal classes give equal prefixes
            for s in modulus.residues(&l).unwrap() {
                if square.congruent(&r, &s).unwrap() {
                    assert_eq!(a.map_f(&s).unwrap()[..2], fixed(&a)[..]);
                    assert_eq!(b.map_f(&s).unwrap()[..2], fixed(&b)[..]);
                }
            }
        }
    }
}
