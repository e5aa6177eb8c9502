//! Hilbert series of the associated graded group algebra `gr C[S_t]`.
//!
//! At integer rank `t = n` the series is `prod_{k=0}^{n-1} (1 + k x)`, so the
//! coefficient of `x^m` is the elementary symmetric polynomial
//! `e_m(1, ..., n-1)`. For complex `t` it is the asymptotic expansion of
//! `x^t Gamma(1/x + t) / Gamma(1/x)`. Both routes are implemented and must
//! agree coefficient by coefficient.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactalg::{binomial, series_exp_log_pow, BinomialPoly, Poly, Rational, Series, SeriesFn};

/// `e_m(1, ..., n-1)`, read off `prod_{k<n} (1 + k x)` in integers.
pub fn elementary_of_range(n: u32, m: u32) -> BigInt {
    let mut coeffs = vec![BigInt::one()];
    for k in 1..n {
        coeffs.push(BigInt::zero());
        for j in (1..coeffs.len()).rev() {
            let prev = coeffs[j - 1].clone();
            coeffs[j] += prev * k;
        }
    }
    coeffs.get(m as usize).cloned().unwrap_or_default()
}

/// The `x^m` coefficient of the Hilbert series, as the unique polynomial of
/// degree at most `2m` through `e_m(1, ..., n-1)` at `n = 0, ..., 2m`.
pub fn stirling_hilbert_coeff(m: u32) -> Poly {
    // Newton forward differences at 0 give the binomial-basis coefficients.
    let mut values: Vec<Rational> = (0..=2 * m)
        .map(|n| Rational::from_integer(elementary_of_range(n, m)))
        .collect();
    let mut newton = Vec::with_capacity(values.len());
    while !values.is_empty() {
        newton.push(values[0].clone());
        values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    BinomialPoly::from_coeffs(newton).to_monomial()
}

/// Bernoulli numbers `B_0..=B_n` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        if k == 0 {
            b.push(Rational::one());
            continue;
        }
        let s: Rational = (0..k)
            .map(|j| Rational::from_integer(binomial(k as u64 + 1, j as u64)) * &b[j])
            .sum();
        b.push(-s / Rational::from_integer(BigInt::from(k + 1)));
    }
    b
}

/// Bernoulli polynomial `B_n(t) = sum_k binom(n, k) B_k t^{n-k}`.
pub fn bernoulli_poly(n: usize, numbers: &[Rational]) -> Poly {
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (k, bk) in numbers.iter().enumerate().take(n + 1) {
        coeffs[n - k] = Rational::from_integer(binomial(n as u64, k as u64)) * bk;
    }
    Poly::from_coeffs(coeffs)
}

/// Coefficients of `x^0..=x^m_max` in `x^t Gamma(1/x + t) / Gamma(1/x)`.
///
/// From the Stirling series for `log Gamma`,
/// `log(x^t Gamma(1/x + t)/Gamma(1/x)) = sum_{k>=1} (-1)^{k+1} (B_{k+1}(t) - B_{k+1}) / (k (k+1)) x^k`,
/// which is then exponentiated as a truncated series.
pub fn gamma_ratio_table(m_max: u32) -> Vec<Poly> {
    let numbers = bernoulli_numbers(m_max as usize + 1);
    let mut log = Series::zero(vec![m_max]);
    for k in 1..=m_max as usize {
        let diff = &bernoulli_poly(k + 1, &numbers) - &Poly::constant(numbers[k + 1].clone());
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let scale = Rational::new(BigInt::from(sign), BigInt::from(k * (k + 1)));
        log.add_term(vec![k as u32], diff.scale(&scale));
    }
    let series = series_exp_log_pow(&log, SeriesFn::Exp, &Poly::zero())
        .expect("the log series has no constant term");
    (0..=m_max)
        .map(|m| series.coefficient(&[m]).expect("within bounds"))
        .collect()
}

pub fn gamma_ratio_coeff(m: u32) -> Poly {
    gamma_ratio_table(m).pop().expect("table has m + 1 entries")
}

/// `m -> x^m` coefficient of the Hilbert series; entry 0 is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct HilbertCoefficientTable {
    pub entries: BTreeMap<u32, Poly>,
}

impl HilbertCoefficientTable {
    /// Built by interpolation.
    pub fn stirling(m_max: u32) -> Self {
        HilbertCoefficientTable {
            entries: (0..=m_max).map(|m| (m, stirling_hilbert_coeff(m))).collect(),
        }
    }

    /// Built from the Gamma-ratio expansion.
    pub fn gamma(m_max: u32) -> Self {
        HilbertCoefficientTable {
            entries: gamma_ratio_table(m_max)
                .into_iter()
                .enumerate()
                .map(|(m, p)| (m as u32, p))
                .collect(),
        }
    }
}

/// Why the Hilbert series is never evaluated at `x = 1`.
pub fn order_remark_note() -> &'static str {
    "Note: the coefficients above come from an asymptotic expansion in x. \
     Setting x = 1 in x^t Gamma(1/x + t)/Gamma(1/x) would return Gamma(1 + t), \
     which is t! at nonnegative integer t, but the expansion has zero radius \
     of convergence, so that value says nothing about the series. This tool \
     only reports coefficients and never evaluates at x = 1."
}
