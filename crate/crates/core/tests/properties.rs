use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use repst::bounds::{amgm_check, dim_lower_bound, lemma_scan};
use repst::deligne::{dim_x, omega_m_eigenvalue, pieri_h0};
use repst::exactalg::{series_exp_log_pow, to_binomial_basis, SeriesFn};
use repst::groupalg::{gamma_ratio_coeff, stirling_hilbert_coeff};
use repst::partitions::enumerate_partitions;
use repst::schurweyl::{tensor_power_hilbert, UnitalHilbert};
use repst::snoracle::{central_eigenvalue_classical, hook_dim};
use repst::{CycleType, Partition, Poly, Rational, Series};

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..=max_deg + 1).prop_map(Poly::from_coeffs)
}

fn partition(max_size: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=max_size.max(1), 0..=max_size as usize)
        .prop_filter_map("too large", move |v| {
            let p = Partition::from_unsorted(v);
            (p.size() <= max_size).then_some(p)
        })
}

fn cycle_type(max_support: u32) -> impl Strategy<Value = CycleType> {
    prop::collection::vec(2u32..=max_support.max(2), 0..=3)
        .prop_map(CycleType::from_cycle_lengths)
        .prop_filter("support too large", move |r| r.support() <= max_support)
}

/// Unital series in two variables with small integer coefficients.
fn unital_series() -> impl Strategy<Value = Series> {
    prop::collection::vec(((0u32..=3, 0u32..=3), -4i64..=4), 0..6).prop_map(|terms| {
        let mut s = Series::one(vec![3, 3]);
        for ((a, b), c) in terms {
            if a + b > 0 {
                s.add_term(vec![a, b], Poly::from_ints(&[c]));
            }
        }
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn binomial_basis_round_trip(p in poly(12)) {
        prop_assert_eq!(to_binomial_basis(&p).to_monomial(), p);
    }

    #[test]
    fn power_series_at_integer_rank(h in unital_series(), n in 0u32..=6) {
        let s = series_exp_log_pow(&h, SeriesFn::PowT, &Poly::t()).unwrap();
        let mut want = Series::one(vec![3, 3]);
        for _ in 0..n {
            want = want.mul(&h);
        }
        prop_assert!(s.eval_t(n.into()).same_terms(&want));
    }

    #[test]
    fn exp_inverts_log(h in unital_series()) {
        let l = series_exp_log_pow(&h, SeriesFn::Log, &Poly::zero()).unwrap();
        let back = series_exp_log_pow(&l, SeriesFn::Exp, &Poly::zero()).unwrap();
        prop_assert!(back.same_terms(&h));
    }

    #[test]
    fn pieri_dimension_identity(lambda in partition(8)) {
        let lhs = &Poly::t_plus(-1) * &dim_x(&lambda).unwrap();
        prop_assert_eq!(lhs, pieri_h0(&lambda).dimension().unwrap());
    }

    #[test]
    fn pieri_is_symmetric(lambda in partition(7)) {
        for (mu, c) in pieri_h0(&lambda).iter() {
            prop_assert_eq!(pieri_h0(mu).multiplicity(&lambda), c);
        }
    }

    #[test]
    fn dimension_matches_hook_formula(lambda in partition(6), extra in 0u32..=14) {
        let n = lambda.size() + lambda.first_row() + extra;
        prop_assume!(n <= 20);
        let d = dim_x(&lambda).unwrap();
        prop_assert_eq!(d.eval_integer(n.into()), Some(hook_dim(&lambda.pad(n.into()).unwrap())));
    }

    #[test]
    fn central_eigenvalue_matches_oracle(lambda in partition(4), rho in cycle_type(5), n in 0u32..=10) {
        prop_assume!(n >= (lambda.size() + lambda.first_row()).max(rho.support()));
        let omega = omega_m_eigenvalue(&rho, &lambda).unwrap();
        let want = central_eigenvalue_classical(n, &rho, &lambda.pad(n.into()).unwrap()).unwrap();
        prop_assert_eq!(omega.eval_int(n.into()), want);
    }

    #[test]
    fn tensor_power_at_integer_rank(h in prop::collection::vec(0u64..=3, 0..4), n in 0u32..=5) {
        let mut coeffs = vec![1u64];
        coeffs.extend(h);
        let hil = UnitalHilbert::from_u64(&coeffs).unwrap();
        let s = tensor_power_hilbert(&hil, 5);
        prop_assert!(s.eval_t(n.into()).same_terms(&hil.to_series(5).pow_int(n)));
    }

    #[test]
    fn lower_bound_holds(n in 1u32..=18, pick in any::<prop::sample::Index>()) {
        let parts = enumerate_partitions(n).unwrap();
        let mu = pick.get(&parts);
        prop_assert!(Rational::from_integer(hook_dim(mu)) >= dim_lower_bound(n, mu).unwrap());
    }

    #[test]
    fn amgm_holds(mu in partition(12)) {
        prop_assert!(amgm_check(&mu).pass());
    }

    #[test]
    fn lemma_scan_filter_is_consistent(k in 0u32..=3, n in 1u32..=12, c in 1i64..=20) {
        for mu in lemma_scan(&Rational::from_integer(c.into()), k, n).unwrap() {
            prop_assert!(mu.first_row() + k < n && mu.first_column() + k < n);
        }
    }
}

/// `e_m(1, ..., n-1)` by summing over `m`-subsets.
fn elementary_brute(n: u32, m: u32) -> BigInt {
    fn go(start: u32, end: u32, m: u32) -> BigInt {
        if m == 0 {
            return BigInt::one();
        }
        (start..end).map(|k| BigInt::from(k) * go(k + 1, end, m - 1)).sum()
    }
    if n == 0 {
        return if m == 0 { BigInt::one() } else { BigInt::zero() };
    }
    go(1, n, m)
}

#[test]
fn stirling_coefficients_beyond_interpolation_nodes() {
    for m in 0..=6u32 {
        let p = stirling_hilbert_coeff(m);
        for n in 2 * m + 1..=13 {
            assert_eq!(p.eval_integer(n.into()), Some(elementary_brute(n, m)), "m={m} n={n}");
        }
        assert_eq!(gamma_ratio_coeff(m), p, "m={m}");
    }
}

#[test]
fn lemma_scan_is_empty_in_window() {
    for n in 10..=15 {
        assert!(lemma_scan(&Rational::one(), 1, n).unwrap().is_empty(), "n={n}");
    }
}
