//! Invariants on random small inputs.

use std::sync::Arc;

use mixedmult_core::hilbert::{GradedPresentation, StableRegion};
use mixedmult_core::monomial::MonomialIdeal;
use mixedmult_core::multiplicities::default_fit_options;
use mixedmult_core::multiplicities::{samuel_multiplicity, staircase_volume_multiplicity};
use mixedmult_core::polytope::{mixed_volume, LatticePolytope, Point};
use mixedmult_core::RingContext;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn points(n: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec(prop::collection::vec(0i64..4, n), 1..6)
}

fn polytope(n: usize) -> impl Strategy<Value = LatticePolytope> {
    points(n).prop_map(move |p| LatticePolytope::from_points(n, &p).unwrap())
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

fn gens(n: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    let nonconstant = prop::collection::vec(0u32..4, n).prop_filter("a unit generator", |e| e.iter().any(|&x| x > 0));
    prop::collection::vec(nonconstant, 1..5)
}

/// An m-primary ideal: random generators plus pure powers.
fn primary(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    (gens(n), prop::collection::vec(1u32..5, n)).prop_map(move |(mut g, powers)| {
        for (i, a) in powers.into_iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = a;
            g.push(e);
        }
        MonomialIdeal::new(Arc::new(RingContext::standard(n)), g).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mixed_volume_is_symmetric_and_normalized(p in polytope(2), q in polytope(2)) {
        let pq = mixed_volume(&[p.clone(), q.clone()]).unwrap();
        prop_assert_eq!(&pq, &mixed_volume(&[q, p.clone()]).unwrap());
        prop_assert_eq!(mixed_volume(&[p.clone(), p.clone()]).unwrap(), p.volume() * int(2));
    }

    #[test]
    fn mixed_volume_is_multilinear(p in polytope(2), r in polytope(2), q in polytope(2), a in 1i64..3, b in 1i64..3) {
        let combined = p.dilate(a).minkowski_sum(&r.dilate(b)).unwrap();
        let lhs = mixed_volume(&[combined, q.clone()]).unwrap();
        let rhs = mixed_volume(&[p, q.clone()]).unwrap() * int(a) + mixed_volume(&[r, q]).unwrap() * int(b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_volume_is_monotone(p in points(3), extra in points(3), q in polytope(3), r in polytope(3)) {
        let small = LatticePolytope::from_points(3, &p).unwrap();
        let big = LatticePolytope::from_points(3, &[p, extra].concat()).unwrap();
        prop_assert!(mixed_volume(&[small, q.clone(), r.clone()]).unwrap() <= mixed_volume(&[big, q, r]).unwrap());
    }

    #[test]
    fn alexandrov_fenchel_in_the_plane(p in polytope(2), q in polytope(2)) {
        let pq = mixed_volume(&[p.clone(), q.clone()]).unwrap();
        let pp = mixed_volume(&[p.clone(), p]).unwrap();
        let qq = mixed_volume(&[q.clone(), q]).unwrap();
        prop_assert!(&pq * &pq >= pp * qq);
    }

    #[test]
    fn colon_and_intersection(g in gens(3), h in gens(3), f in prop::collection::vec(0u32..3, 3)) {
        let ring = Arc::new(RingContext::standard(3));
        let i = MonomialIdeal::new(ring.clone(), g).unwrap();
        let j = MonomialIdeal::new(ring.clone(), h).unwrap();
        let colon = i.colon_monomial(&f).unwrap();
        prop_assert!(colon.contains_ideal(&i));
        let back = colon.product(&MonomialIdeal::new(ring, vec![f]).unwrap()).unwrap();
        prop_assert!(i.contains_ideal(&back));
        let meet = i.intersect(&j).unwrap();
        prop_assert!(i.contains_ideal(&meet) && j.contains_ideal(&meet));
        prop_assert!(meet.contains_ideal(&i.product(&j).unwrap()));
        let sum = i.sum(&j).unwrap();
        prop_assert!(sum.contains_ideal(&i) && sum.contains_ideal(&j));
        prop_assert_eq!(i.colon(&j).unwrap().product(&j).map(|p| i.contains_ideal(&p)).unwrap(), true);
    }

    #[test]
    fn saturation_is_idempotent(g in gens(3)) {
        let ring = Arc::new(RingContext::standard(3));
        let i = MonomialIdeal::new(ring.clone(), g).unwrap();
        let m = MonomialIdeal::maximal(ring);
        let s = i.saturate(&m).unwrap();
        prop_assert!(s.contains_ideal(&i));
        prop_assert_eq!(s.saturate(&m).unwrap(), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn samuel_multiplicity_fits(i in primary(2), k in 2u32..4) {
        let e = samuel_multiplicity(&i).unwrap();
        prop_assert_eq!(e, staircase_volume_multiplicity(&i).unwrap());
        prop_assert_eq!(samuel_multiplicity(&i.power(k)).unwrap(), i64::from(k * k) * e);
    }

    #[test]
    fn samuel_multiplicity_reverses_inclusion(i in primary(2), j in primary(2)) {
        let both = i.intersect(&j).unwrap();
        prop_assert!(samuel_multiplicity(&both).unwrap() >= samuel_multiplicity(&i).unwrap());
    }

    #[test]
    fn hilbert_fit_extends_past_its_window(g in gens(3), extra in 0u32..20) {
        let i = MonomialIdeal::new(Arc::new(RingContext::standard(3)), g).unwrap();
        let p = GradedPresentation::new(i).unwrap();
        let fit = p.hilbert_polynomial(&default_fit_options(1)).unwrap();
        let StableRegion::Corner { corner } = &fit.polynomial.region else { unreachable!("standard grading") };
        let u = corner[0] + 40 + extra;
        let direct = p.hilbert_function(&[u], &[u]).unwrap().get(&[u]).unwrap();
        prop_assert_eq!(fit.polynomial.eval(&[u]), int(direct as i64));
        prop_assert_eq!(fit.polynomial.degree().finite().map(i64::from), p.total_degree().unwrap().finite().map(i64::from));
    }
}
