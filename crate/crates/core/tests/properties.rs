use gwgr::charclass::{series_inverse, GradedRingSpec, RingSeries};
use gwgr::numerics::{int, BigRational};
use gwgr::sympoly::{
    gradient_matches_relations, hessian_class, lg_potential, lg_potential_via_log, relation_polys, MultiPoly,
};
use proptest::prelude::*;

fn grassmannian(max_k: u32) -> impl Strategy<Value = (u32, u32)> {
    (2..=max_k).prop_flat_map(|k| (1..k, Just(k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn potential_two_constructions_agree((r, k) in grassmannian(10)) {
        prop_assert_eq!(lg_potential(r, k).unwrap(), lg_potential_via_log(r, k).unwrap());
    }

    #[test]
    fn gradient_is_minus_relation((r, k) in grassmannian(8)) {
        prop_assert!(gradient_matches_relations(r, k, -1).unwrap());
    }

    #[test]
    fn grading((r, k) in grassmannian(7)) {
        prop_assert_eq!(lg_potential(r, k).unwrap().homogeneous_degree(), Some(k + 1));
        for (i, y) in relation_polys(r, k).unwrap().iter().enumerate() {
            prop_assert!(y.is_zero() || y.homogeneous_degree() == Some(i as u32 + 1));
        }
        prop_assert_eq!(hessian_class(r, k).unwrap().homogeneous_degree(), Some(r * (k + 1) - r * (r + 1)));
    }

    #[test]
    fn specialization_to_roots((r, k) in grassmannian(6).prop_filter("r <= 3", |(r, _)| *r <= 3)) {
        let n = r as usize;
        let q: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::var(n, i)).collect();
        // e_i(q) as products over subsets
        let mut e = vec![MultiPoly::one(n)];
        for qi in &q {
            let mut next = e.clone();
            next.push(MultiPoly::zero(n));
            for j in 1..next.len() {
                next[j] = &next[j] + &(&e[j - 1] * qi);
            }
            e = next;
        }
        let w = lg_potential(r, k).unwrap().compose(&e[1..]);
        let power_sum = q.iter().fold(MultiPoly::zero(n), |acc, qi| &acc + &qi.pow(k + 1));
        prop_assert_eq!(w, power_sum.scale(&BigRational::new(1.into(), (k + 1).into())));
    }

    #[test]
    fn series_inverse_is_an_involution(coeffs in proptest::collection::vec((-5i64..=5, -5i64..=5), 12)) {
        let ring = GradedRingSpec::new(&[("a", 1), ("b", 1)])
            .nilpotent("a", 7)
            .nilpotent("b", 2)
            .top_degree(7)
            .evaluate(&[("a", 6), ("b", 1)], int(1))
            .build()
            .unwrap();
        let (a, b) = (ring.gen("a"), ring.gen("b"));
        let mut terms = vec![ring.one()];
        for &(x, y) in &coeffs {
            terms.push(&a.scale(&int(x)) + &b.scale(&int(y)));
        }
        let c = RingSeries::new(&ring, terms, 12);
        let s = series_inverse(&c).unwrap();
        prop_assert_eq!(s.mul(&c), RingSeries::one(&ring, 12));
        prop_assert_eq!(series_inverse(&s).unwrap(), c);
    }
}
