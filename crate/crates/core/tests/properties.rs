//! Property tests over the exact layer: algebraic identities of the matrix
//! operations, Hermite round trips, Farey neighbor laws, and wire-format
//! stability.

use proptest::prelude::*;

use period_hecke::{
    farey, left_neighbor, left_neighbor_scan, lev, x_m, CosetTable, ExtRational, FormalSum, Mat2,
};

fn word(letters: &[u8]) -> Mat2 {
    let t_inv = Mat2::T.inv_unimodular().unwrap();
    letters.iter().fold(Mat2::I, |acc, &l| {
        acc.mul(match l % 3 {
            0 => &Mat2::S,
            1 => &Mat2::T,
            _ => &t_inv,
        })
    })
}

prop_compose! {
    /// Random unimodular matrix, determinant +1 or -1.
    fn arb_pm_unimodular()(letters in prop::collection::vec(any::<u8>(), 0..10), flip in any::<bool>()) -> Mat2 {
        let w = word(&letters);
        if flip {
            w.mul(&Mat2::new(1, 0, 0, -1))
        } else {
            w
        }
    }
}

prop_compose! {
    /// Random matrix with positive determinant: unimodular word times an
    /// upper-triangular stretch.
    fn arb_posdet()(letters in prop::collection::vec(any::<u8>(), 0..8), d in 1i64..6, pick in any::<prop::sample::Index>()) -> Mat2 {
        let xs = x_m(d);
        word(&letters).mul(&xs[pick.index(xs.len())])
    }
}

prop_compose! {
    fn arb_rational()(num in -300i64..=300, den in 0i64..=300) -> ExtRational {
        if num == 0 && den == 0 {
            ExtRational::ZERO
        } else {
            ExtRational::new(num, den)
        }
    }
}

proptest! {
    #[test]
    fn inverse_antihomomorphism(x in arb_pm_unimodular(), y in arb_pm_unimodular()) {
        let lhs = x.mul(&y).inv_unimodular().unwrap();
        let rhs = y.inv_unimodular().unwrap().mul(&x.inv_unimodular().unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(x.mul(&x.inv_unimodular().unwrap()), Mat2::I);
    }

    #[test]
    fn moebius_action_composes(x in arb_posdet(), y in arb_posdet(), q in arb_rational()) {
        // The action lives on the one-point compactification, so the two
        // infinities are compared as a single point.
        let direct = x.mul(&y).act(q);
        let chained = x.act(y.act(q));
        prop_assert!(direct.projectively_eq(&chained), "{} vs {}", direct, chained);
        for q in [ExtRational::INFINITY, ExtRational::NEG_INFINITY] {
            prop_assert!(x.mul(&y).act(q).projectively_eq(&x.act(y.act(q))));
        }
    }

    #[test]
    fn hermite_round_trip(m in arb_posdet()) {
        prop_assume!(m.det() <= 50);
        let (g, u) = m.hnf_upper().unwrap();
        prop_assert_eq!(g.det(), 1);
        prop_assert!(u.is_x_m());
        prop_assert_eq!(u.det(), m.det());
        prop_assert_eq!(g.mul(&u), m);
    }

    #[test]
    fn hermite_is_canonical(g in arb_pm_unimodular(), d in 1i64..8, pick in any::<prop::sample::Index>()) {
        // Left-translating by a unimodular matrix never changes the
        // upper-triangular representative.
        prop_assume!(g.det() == 1);
        let xs = x_m(d);
        let u0 = xs[pick.index(xs.len())];
        let (_, u) = g.mul(&u0).hnf_upper().unwrap();
        prop_assert_eq!(u, u0);
    }

    #[test]
    fn canonicalization_is_idempotent(coeffs in prop::collection::vec((-4i64..=4, 0u8..12, 0u8..12), 0..16)) {
        let mats = [
            Mat2::I, Mat2::S, Mat2::T, Mat2::T_PRIME,
            Mat2::new(1, 0, 0, 2), Mat2::new(1, 1, 0, 2), Mat2::new(2, 0, 0, 1),
            Mat2::new(2, 0, 1, 1), Mat2::new(2, -1, 1, 0), Mat2::new(3, -2, 2, -1),
            Mat2::new(1, 2, 0, 3), Mat2::new(3, 0, 2, 1),
        ];
        let sum = FormalSum::from_terms(coeffs.iter().map(|&(c, i, _)| (c, mats[i as usize])));
        let again = FormalSum::from_terms(sum.terms().iter().copied());
        prop_assert_eq!(&again, &sum);
        // canonical form: strictly increasing matrices, no zero coefficients
        prop_assert!(sum.terms().windows(2).all(|w| w[0].1 < w[1].1));
        prop_assert!(sum.terms().iter().all(|&(c, _)| c != 0));
    }

    #[test]
    fn left_neighbor_matches_scan(num in -80i64..=80, den in 0i64..=80) {
        prop_assume!(num != 0 || den != 0);
        let q = ExtRational::new(num, den);
        prop_assume!(q != ExtRational::NEG_INFINITY);
        let fast = left_neighbor(q).unwrap();
        prop_assert_eq!(fast, left_neighbor_scan(q).unwrap());
        if lev(q) >= 1 {
            prop_assert!(lev(fast) < lev(q));
        }
    }

    #[test]
    fn farey_membership_is_exact(n in 1i64..=25) {
        let f = farey::farey_sequence(n).unwrap();
        // strictly increasing, bounded by the infinities
        prop_assert!(f.entries().windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(f.entries()[0], ExtRational::NEG_INFINITY);
        prop_assert_eq!(*f.entries().last().unwrap(), ExtRational::INFINITY);
        // membership agrees with the defining bound on numerator and denominator
        for &q in f.entries() {
            prop_assert!(q.num().abs() <= n && q.den() <= n);
        }
        let count = (0..=n)
            .flat_map(|v| (-n..=n).map(move |u| (u, v)))
            .filter(|&(u, v)| (u != 0 || v != 0) && num_integer::Integer::gcd(&u, &v) == 1 && (v > 0 || u.abs() == 1))
            .count();
        prop_assert_eq!(f.entries().len(), count);
    }

    #[test]
    fn coset_index_matches_membership(letters in prop::collection::vec(any::<u8>(), 0..12), n in 1i64..=12) {
        let g = word(&letters);
        let table = CosetTable::new(n).unwrap();
        prop_assert_eq!(table.coset_index(&g), table.coset_index_by_membership(&g));
    }

    #[test]
    fn wire_formats_round_trip(x in arb_posdet(), num in -50i64..=50, den in 0i64..=50, coeffs in prop::collection::vec(-3i64..=3, 0..6)) {
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Mat2>(&json).unwrap(), x);

        if num != 0 || den != 0 {
            let q = ExtRational::new(num, den);
            let json = serde_json::to_string(&q).unwrap();
            prop_assert_eq!(serde_json::from_str::<ExtRational>(&json).unwrap(), q);
        }

        let sum = FormalSum::from_terms(
            coeffs.iter().enumerate().map(|(i, &c)| (c, Mat2::new(1, i as i64, 0, 7))),
        );
        let json = serde_json::to_string(&sum).unwrap();
        prop_assert_eq!(serde_json::from_str::<FormalSum>(&json).unwrap(), sum);
    }
}
