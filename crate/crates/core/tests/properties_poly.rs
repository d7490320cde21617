use circsurf::poly::{count_real_roots, gcd, int, rat, resultant, Interval, MultiPoly, QPoly, Rational, UniPoly};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn poly(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), small_rat()), 1..=max_terms)
        .prop_map(move |terms| MultiPoly::from_terms(nvars, terms).unwrap())
}

fn nonzero_poly(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    poly(nvars, max_exp, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_vanishes_iff_common_factor(a in nonzero_poly(2, 2, 4), b in nonzero_poly(2, 2, 4), c in nonzero_poly(2, 2, 3), plant in any::<bool>()) {
        let t = 1;
        let (p, q) = if plant && c.degree_in(t).unwrap_or(0) > 0 { (&a * &c, &b * &c) } else { (a.clone(), b.clone()) };
        prop_assume!(p.degree_in(t).unwrap_or(0) > 0 && q.degree_in(t).unwrap_or(0) > 0);
        let r = resultant(&UniPoly::from_multi(&p, t), &UniPoly::from_multi(&q, t)).unwrap();
        let common = gcd(&p, &q).degree_in(t).unwrap_or(0) > 0;
        prop_assert_eq!(r.is_zero(), common);
    }

    #[test]
    fn homogeneous_parts_reassemble(f in poly(3, 3, 8)) {
        let mut sum = MultiPoly::zero(3);
        for (_, part) in f.homogeneous_components() {
            sum += &part;
        }
        prop_assert_eq!(sum, f);
    }

    #[test]
    fn translate_round_trip(f in poly(3, 3, 6), v in prop::collection::vec(small_rat(), 3)) {
        let neg: Vec<Rational> = v.iter().map(|x| -x).collect();
        let back = f.translate(&v).unwrap().translate(&neg).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn exact_divide_recovers_factor(f in poly(3, 2, 5), g in nonzero_poly(3, 2, 4)) {
        let prod = &f * &g;
        prop_assert_eq!(prod.exact_divide(&g).unwrap(), Some(f));
    }

    #[test]
    fn sturm_count_matches_sign_changes(roots in prop::collection::btree_set(-6i64..=6, 0..=4), with_complex in any::<bool>()) {
        // distinct integer roots are separated by at least 1
        let mut p = QPoly::one();
        for r in &roots {
            p = &p * &QPoly::new(vec![int(-2 * r - 1), int(2)]);
        }
        if with_complex {
            p = &p * &QPoly::from_ints(&[1, 0, 1]);
        }
        let sturm = count_real_roots(&p, &Interval::all()).unwrap();
        // brute force on a grid offset from the roots (which sit at k + 1/2)
        let grid: Vec<Rational> = (-80..=80).map(|k| rat(2 * k + 1, 20)).collect();
        let changes = grid.windows(2).filter(|w| p.sign_at(&w[0]) * p.sign_at(&w[1]) < 0).count();
        prop_assert_eq!(sturm, changes);
        prop_assert_eq!(sturm, roots.len());
    }
}
