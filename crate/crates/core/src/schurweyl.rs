//! Complex tensor powers `V^{(x) t}` of a unital vector space `(V, 1)`.
//!
//! Covers the Hilbert series `h(x)^t`, the graded decomposition
//! `gr V^{(x) t} = S V̄ (x) (sum_lambda S^lambda V̄ (x) X_lambda)` at the
//! level of dimensions, the degree-one filtration piece, the candidate
//! reducibility points of the parabolic Verma modules `M(t - |lambda|, lambda)`,
//! and the interlacing branching rule.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::deligne::dim_x;
use crate::error::{Error, Result};
use crate::exactalg::{int, is_integer, series_exp_log_pow, Poly, Rational, Series, SeriesFn};
use crate::partitions::{partitions_up_to, Partition};

/// Hilbert series of a nonnegatively graded unital space whose degree-zero
/// part is spanned by the unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitalHilbert {
    coeffs: Vec<BigInt>,
}

impl UnitalHilbert {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.first() != Some(&BigInt::one()) {
            return Err(Error::BadConstantTerm {
                expected: "1",
                found: coeffs.first().map_or("0".into(), ToString::to_string),
            });
        }
        if coeffs.iter().any(|c| *c < BigInt::zero()) {
            return Err(Error::Parse("Hilbert series coefficients must be nonnegative".into()));
        }
        Ok(UnitalHilbert { coeffs })
    }

    pub fn from_u64(coeffs: &[u64]) -> Result<Self> {
        UnitalHilbert::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 + d x`: the unit plus `V̄` of dimension `d` in degree one.
    pub fn ungraded(bar_dim: u64) -> Self {
        UnitalHilbert {
            coeffs: vec![BigInt::one(), BigInt::from(bar_dim)],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `dim V = h(1)`.
    pub fn total_dim(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn to_series(&self, degree: u32) -> Series {
        let c: Vec<Rational> = self.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect();
        Series::univariate(degree, &c)
    }
}

/// `h(x)^t` up to degree `degree`, coefficients in `Q[t]`.
pub fn tensor_power_hilbert(h: &UnitalHilbert, degree: u32) -> Series {
    series_exp_log_pow(&h.to_series(degree), SeriesFn::PowT, &Poly::t())
        .expect("unital Hilbert series have constant term 1")
}

/// Dimension of the Schur functor `S^lambda` on a `d`-dimensional space:
/// `prod (d + content) / hook`, zero when `lambda` has more than `d` rows.
pub fn schur_dim_principal(lambda: &Partition, d: u64) -> BigInt {
    let hooks = lambda.hook_lengths();
    let v = hooks.iter().fold(Rational::one(), |acc, (cell, &h)| {
        let content = cell.col as i64 - cell.row as i64;
        acc * Rational::new(BigInt::from(d as i64 + content), BigInt::from(h))
    });
    debug_assert!(is_integer(&v));
    v.to_integer()
}

/// Outcome of [`graded_decomposition_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedReport {
    pub check: String,
    pub d: u64,
    #[serde(rename = "D")]
    pub degree: u32,
    pub pass: bool,
    #[serde(rename = "firstFailure")]
    pub first_failure: Option<u32>,
}

/// Checks `[x^k] (1 + d x)^t = [x^k] (1 - x)^{-d} sum_lambda dim S^lambda(C^d) x^{|lambda|} dim X_lambda`
/// as polynomials in `t` for every `k <= degree`.
pub fn graded_decomposition_check(d: u64, degree: u32) -> Result<GradedReport> {
    let bounds = vec![degree];
    let lhs = tensor_power_hilbert(&UnitalHilbert::ungraded(d), degree);

    let one_minus_x = Series::univariate(degree, &[int(1), int(-1)]);
    let sym = series_exp_log_pow(&one_minus_x, SeriesFn::PowT, &Poly::constant(int(-(d as i64))))?;
    let mut schur_part = Series::zero(bounds);
    for lambda in partitions_up_to(degree)? {
        let s = schur_dim_principal(&lambda, d);
        if s.is_zero() {
            continue;
        }
        let term = dim_x(&lambda)?.scale(&Rational::from_integer(s));
        schur_part.add_term(vec![lambda.size()], term);
    }
    let rhs = sym.mul(&schur_part);

    let first_failure = (0..=degree).find(|&k| lhs.coefficient(&[k]).ok() != rhs.coefficient(&[k]).ok());
    Ok(GradedReport {
        check: "graded-decomposition".into(),
        d,
        degree,
        pass: first_failure.is_none(),
        first_failure,
    })
}

/// `dim F_1 V^{(x) t} = dim V + (dim V - 1)(t - 1)`.
pub fn filtration_degree1_dim(v: u64) -> Poly {
    assert!(v >= 1, "dim V must be at least 1");
    let v = v as i64;
    &Poly::constant(int(v)) + &Poly::t_plus(-1).scale(&int(v - 1))
}

/// Highest weight data `(t - |lambda|, lambda)` for `gl(V)`, `dim V = N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VermaWeightSpec {
    lambda: Partition,
    dim_v: u32,
}

impl VermaWeightSpec {
    pub fn new(lambda: Partition, dim_v: u32) -> Result<Self> {
        if dim_v == 0 || lambda.len() + 1 > dim_v as usize {
            return Err(Error::SizeMismatch(format!(
                "{} has {} rows; dim V = {dim_v} allows at most {}",
                lambda.pretty(),
                lambda.len(),
                dim_v.saturating_sub(1)
            )));
        }
        Ok(VermaWeightSpec { lambda, dim_v })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn dim_v(&self) -> u32 {
        self.dim_v
    }
}

/// A solution `t = |lambda| + lambda_i + m - i` of the singular-vector
/// condition for the root `e_1 - e_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ReducibilityCandidate {
    pub t: u64,
    pub i: u32,
    pub m: u64,
}

/// Every `(t, i, m)` with `1 <= i <= N - 1`, `m >= 1`,
/// `lambda_{i-1} >= lambda_i + m` (no constraint for `i = 1`) and
/// `0 <= t = |lambda| + lambda_i + m - i <= t_max`.
///
/// This is a necessary condition only: a reducible `M(t - |lambda|, lambda)`
/// has `t` among the returned values, not conversely.
pub fn verma_reducibility_candidates(spec: &VermaWeightSpec, t_max: u64) -> BTreeSet<ReducibilityCandidate> {
    let lambda = &spec.lambda;
    let size = lambda.size() as i64;
    let t_max = t_max as i64;
    let mut out = BTreeSet::new();
    for i in 1..spec.dim_v as usize {
        let li = lambda.part(i) as i64;
        let base = size + li - i as i64;
        let max_m = if i == 1 {
            t_max - base
        } else {
            lambda.part(i - 1) as i64 - li
        };
        for m in 1..=max_m {
            let t = base + m;
            if (0..=t_max).contains(&t) {
                out.insert(ReducibilityCandidate {
                    t: t as u64,
                    i: i as u32,
                    m: m as u64,
                });
            }
        }
    }
    out
}

/// The distinct `t` values of [`verma_reducibility_candidates`].
pub fn candidate_ranks(spec: &VermaWeightSpec, t_max: u64) -> BTreeSet<u64> {
    verma_reducibility_candidates(spec, t_max)
        .into_iter()
        .map(|c| c.t)
        .collect()
}

/// A value of the rank parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankValue {
    Exact(Rational),
    /// A symbolic rank known not to be an integer.
    NonInteger,
}

/// `true` when `E_lambda` is guaranteed irreducible at rank `t`: `t` is not
/// a nonnegative integer, or it is one that no singular vector can reach.
/// `false` means reducibility is not excluded.
pub fn is_irreducible_guaranteed(t: &RankValue, spec: &VermaWeightSpec) -> bool {
    let t = match t {
        RankValue::NonInteger => return true,
        RankValue::Exact(r) => r,
    };
    if !is_integer(t) || *t < Rational::zero() {
        return true;
    }
    let Ok(n) = u64::try_from(t.to_integer()) else {
        return true;
    };
    !candidate_ranks(spec, n).contains(&n)
}

/// Every `mu` with at most `N - 1` rows and `|mu| <= size_bound` such that
/// `mu_i >= lambda_i >= mu_{i+1}` for all `i >= 1`.
pub fn interlace_branch(lambda: &Partition, dim_v: u32, size_bound: u32) -> Result<Vec<Partition>> {
    let spec = VermaWeightSpec::new(lambda.clone(), dim_v)?;
    let rows = spec.dim_v as usize - 1;
    let mut out = Vec::new();
    if rows == 0 {
        if lambda.is_empty() {
            out.push(Partition::empty());
        }
        return Ok(out);
    }
    fn go(
        lambda: &Partition,
        row: usize,
        rows: usize,
        budget: i64,
        prefix: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row > rows {
            out.push(Partition::from_unsorted(prefix.clone()));
            return;
        }
        let lo = lambda.part(row) as i64;
        let hi = if row == 1 { budget } else { lambda.part(row - 1) as i64 };
        for v in lo..=hi.min(budget) {
            prefix.push(v as u32);
            go(lambda, row + 1, rows, budget - v, prefix, out);
            prefix.pop();
        }
    }
    go(lambda, 1, rows, size_bound as i64, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}
