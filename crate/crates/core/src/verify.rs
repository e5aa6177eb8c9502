//! Verification suites tying the interpolation formulas to the classical
//! oracle and to each other.
//!
//! Each suite runs a family of independent checks in parallel and returns a
//! [`SuiteReport`] listing every failure. Library errors raised while
//! checking (for instance a non-exact division) are recorded as failures,
//! not propagated, so one bad case never hides the rest.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{amgm_check, bound_sweep, lemma_scan};
use crate::deligne::{
    class_size_poly, dim_x, frob_coefficient, frob_coefficient_in, integer_valued_certificate,
    jm_eigenvalue_with, omega_m_eigenvalue, pieri_h0,
};
use crate::error::{Error, Result};
use crate::exactalg::{binomial_poly, factorial, int, Poly, Rational};
use crate::groupalg::{elementary_of_range, gamma_ratio_table, stirling_hilbert_coeff};
use crate::limits::Limits;
use crate::partitions::{partitions_up_to, ContentConvention, Partition};
use crate::schurweyl::{
    candidate_ranks, filtration_degree1_dim, graded_decomposition_check, interlace_branch,
    schur_dim_principal, tensor_power_hilbert, UnitalHilbert, VermaWeightSpec,
};
use crate::snoracle::{central_eigenvalue_classical, hook_dim, mn_character, CycleType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Oracle,
    Pieri,
    Stirling,
    Bounds,
    Graded,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Oracle, Suite::Pieri, Suite::Stirling, Suite::Bounds, Suite::Graded];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Pieri => "pieri",
            Suite::Stirling => "stirling",
            Suite::Bounds => "bounds",
            Suite::Graded => "graded",
        }
    }
}

/// Sweep ranges. `None` selects the suite's default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyParams {
    /// Largest `|lambda|` (oracle, pieri) or degree bound `D` (graded).
    pub max_size: Option<u32>,
    /// Largest integer rank `n`.
    pub max_n: Option<u32>,
    /// Smallest integer rank `n` (oracle only).
    pub min_n: Option<u32>,
    /// Largest cycle support `m` (oracle) or Hilbert degree `m` (stirling).
    pub max_m: Option<u32>,
    pub convention: ContentConvention,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckFailure {
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub checks: usize,
    pub failures: Vec<CheckFailure>,
}

impl SuiteReport {
    fn from_outcomes(suite: Suite, outcomes: Vec<Outcome>) -> SuiteReport {
        let checks = outcomes.len();
        let failures: Vec<CheckFailure> = outcomes.into_iter().filter_map(|o| o.err()).collect();
        SuiteReport {
            suite: suite.name().into(),
            pass: failures.is_empty(),
            checks,
            failures,
        }
    }

    pub fn failures_in<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a CheckFailure> {
        self.failures.iter().filter(move |f| f.check == check)
    }
}

type Outcome = std::result::Result<(), CheckFailure>;

fn outcome(check: &str, ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(CheckFailure {
            check: check.into(),
            detail: detail(),
        })
    }
}

fn errored(check: &str, e: Error) -> Outcome {
    Err(CheckFailure {
        check: check.into(),
        detail: e.to_string(),
    })
}

fn lift(check: &str, r: Result<Vec<Outcome>>) -> Vec<Outcome> {
    r.unwrap_or_else(|e| vec![errored(check, e)])
}

pub fn run_suite(suite: Suite, params: &VerifyParams) -> Result<SuiteReport> {
    match suite {
        Suite::Oracle => oracle_suite(params),
        Suite::Pieri => pieri_suite(params),
        Suite::Stirling => stirling_suite(params),
        Suite::Bounds => bounds_suite(params),
        Suite::Graded => graded_suite(params),
    }
}

fn check_limits(params: &VerifyParams) -> Result<()> {
    let l = Limits::get();
    if let Some(v) = params.max_size {
        Limits::check("max-size", v, l.max_size)?;
    }
    if let Some(v) = params.max_n {
        Limits::check("max-n", v, l.max_n)?;
    }
    if let Some(v) = params.max_m {
        Limits::check("max-m", v, l.max_m)?;
    }
    Ok(())
}

/// `max(|lambda| + lambda_1, m)`: the first rank where the padded diagram
/// exists and the class fits.
pub fn first_valid_rank(lambda: &Partition, rho: &CycleType) -> u32 {
    (lambda.size() + lambda.first_row()).max(rho.support())
}

fn dimension_checks(lambda: &Partition, max_n: u32) -> Result<Vec<Outcome>> {
    let d = dim_x(lambda)?;
    let mut out = Vec::new();
    for n in lambda.size() + lambda.first_row()..=max_n {
        let want = Rational::from_integer(hook_dim(&lambda.pad(n.into())?));
        let got = d.eval_int(n.into());
        out.push(outcome("dimension", got == want, || {
            format!("dim X{} at n={n}: {got} vs hook formula {want}", lambda.pretty())
        }));
    }
    Ok(out)
}

fn central_checks(lambda: &Partition, rho: &CycleType, min_n: u32, max_n: u32) -> Result<Vec<Outcome>> {
    let omega = omega_m_eigenvalue(rho, lambda)?;
    let frob = frob_coefficient(lambda, rho);
    let mut out = Vec::new();
    for n in first_valid_rank(lambda, rho).max(min_n)..=max_n {
        let padded = lambda.pad(n.into())?;
        let want = central_eigenvalue_classical(n, rho, &padded)?;
        let got = omega.eval_int(n.into());
        out.push(outcome("central-eigenvalue", got == want, || {
            format!("Omega[{rho}] on X{} at n={n}: {got} vs classical {want}", lambda.pretty())
        }));
        let chi = Rational::from_integer(mn_character(&padded, rho)?);
        let c = frob.eval_int(n.into());
        out.push(outcome("character", c == chi, || {
            format!("c[{}, {rho}] at n={n}: {c} vs character {chi}", lambda.pretty())
        }));
    }
    Ok(out)
}

fn jm_checks(lambda: &Partition, convention: ContentConvention, min_n: u32, max_n: u32) -> Result<Vec<Outcome>> {
    let transposition = CycleType::single_cycle(2);
    let jm = jm_eigenvalue_with(lambda, convention);
    let mut out = Vec::new();
    for n in first_valid_rank(lambda, &transposition).max(min_n)..=max_n {
        let want = central_eigenvalue_classical(n, &transposition, &lambda.pad(n.into())?)?;
        let got = jm.eval_int(n.into());
        out.push(outcome("jm-eigenvalue", got == want, || {
            format!("JM on X{} at n={n}: {got} vs classical {want}", lambda.pretty())
        }));
    }
    let omega = omega_m_eigenvalue(&transposition, lambda)?;
    out.push(outcome("jm-equals-omega", omega == jm, || {
        format!("X{}: Omega[1] = {omega}, JM = {jm}", lambda.pretty())
    }));
    Ok(out)
}

fn certificate(check: &str, what: String, p: &Poly) -> Outcome {
    match integer_valued_certificate(p) {
        Ok(_) => Ok(()),
        Err(e) => Err(CheckFailure {
            check: check.into(),
            detail: format!("{what}: {e}"),
        }),
    }
}

/// Dimension sweep, central-element and character sweeps, Jucys-Murphy
/// agreement, and integer-valuedness certificates.
///
/// Defaults: `|lambda| <= 4`, `m(rho) <= 5`, `n <= 10`; the dimension sweep
/// uses `|lambda| <= max(max_size, 6)` and `n <= max(max_n, 20)` only when
/// those are left at their defaults.
pub fn oracle_suite(params: &VerifyParams) -> Result<SuiteReport> {
    check_limits(params)?;
    let max_size = params.max_size.unwrap_or(4);
    let max_n = params.max_n.unwrap_or(10);
    let min_n = params.min_n.unwrap_or(0);
    let max_m = params.max_m.unwrap_or(5);
    let dim_size = params.max_size.unwrap_or(6);
    let dim_n = params.max_n.unwrap_or(20);

    let lambdas = partitions_up_to(max_size)?;
    let rhos = CycleType::all_with_support_up_to(max_m);
    let mut outcomes: Vec<Outcome> = partitions_up_to(dim_size)?
        .par_iter()
        .flat_map_iter(|l| lift("dimension", dimension_checks(l, dim_n)))
        .collect();

    let pairs: Vec<(&Partition, &CycleType)> =
        lambdas.iter().flat_map(|l| rhos.iter().map(move |r| (l, r))).collect();
    outcomes.par_extend(
        pairs
            .par_iter()
            .flat_map_iter(|(l, r)| lift("central-eigenvalue", central_checks(l, r, min_n, max_n))),
    );
    outcomes.par_extend(
        lambdas
            .par_iter()
            .flat_map_iter(|l| lift("jm-eigenvalue", jm_checks(l, params.convention, min_n, max_n))),
    );
    outcomes.par_extend(lambdas.par_iter().flat_map_iter(|l| {
        let mut v = vec![match dim_x(l) {
            Ok(d) => certificate("integer-valued", format!("dim X{}", l.pretty()), &d),
            Err(e) => errored("integer-valued", e),
        }];
        for r in &rhos {
            v.push(match omega_m_eigenvalue(r, l) {
                Ok(p) => certificate("integer-valued", format!("Omega[{r}] on X{}", l.pretty()), &p),
                Err(e) => errored("integer-valued", e),
            });
        }
        v
    }));
    outcomes.extend(
        rhos.iter()
            .map(|r| certificate("integer-valued", format!("class size [{r}]"), &class_size_poly(r))),
    );
    // Variable-count stability on a smaller window.
    outcomes.par_extend(
        pairs
            .par_iter()
            .filter(|(l, r)| l.size() <= 4 && r.support() <= 4)
            .map(|(l, r)| {
                let a = frob_coefficient_in(l, r, l.len());
                let b = frob_coefficient_in(l, r, l.len() + 1);
                outcome("variable-count", a == b, || {
                    format!("c[{}, {r}] with {} vs {} variables: {a} vs {b}", l.pretty(), l.len(), l.len() + 1)
                })
            }),
    );
    Ok(SuiteReport::from_outcomes(Suite::Oracle, outcomes))
}

/// `(t - 1) dim X_lambda = sum c_mu dim X_mu` and the symmetry of the rule,
/// for `|lambda| <= max_size` (default 8).
pub fn pieri_suite(params: &VerifyParams) -> Result<SuiteReport> {
    check_limits(params)?;
    let max_size = params.max_size.unwrap_or(8);
    let lambdas = partitions_up_to(max_size)?;
    let h0 = Poly::t_plus(-1);
    let mut outcomes: Vec<Outcome> = lambdas
        .par_iter()
        .map(|l| {
            let lhs = &h0 * &dim_x(l).map_err(|e| errored("pieri-dimension", e).unwrap_err())?;
            let rhs = pieri_h0(l)
                .dimension()
                .map_err(|e| errored("pieri-dimension", e).unwrap_err())?;
            outcome("pieri-dimension", lhs == rhs, || {
                format!("X{}: (t-1) dim = {lhs}, decomposition gives {rhs}", l.pretty())
            })
        })
        .collect();
    outcomes.par_extend(lambdas.par_iter().flat_map_iter(|l| {
        let d = pieri_h0(l);
        d.iter()
            .filter(|(mu, _)| mu.size() <= max_size)
            .map(|(mu, c)| {
                let back = pieri_h0(mu).multiplicity(l);
                outcome("pieri-symmetry", back == c, || {
                    format!("X{} has X{} x{c}, but X{} has X{} x{back}", l.pretty(), mu.pretty(), mu.pretty(), l.pretty())
                })
            })
            .collect::<Vec<_>>()
    }));
    Ok(SuiteReport::from_outcomes(Suite::Pieri, outcomes))
}

/// Interpolated Hilbert coefficients of `gr C[S_t]` against `e_m(1..n-1)`,
/// the Gamma-ratio route, row sums `n!`, and integrality.
/// Defaults: `m <= 6`, `n <= 13`, row sums for `n <= 9`.
pub fn stirling_suite(params: &VerifyParams) -> Result<SuiteReport> {
    check_limits(params)?;
    let max_m = params.max_m.unwrap_or(6);
    let max_n = params.max_n.unwrap_or(13);
    let table: Vec<Poly> = (0..=max_m).into_par_iter().map(stirling_hilbert_coeff).collect();
    let gamma = gamma_ratio_table(max_m);
    let mut outcomes = Vec::new();
    for (m, p) in table.iter().enumerate() {
        let m = m as u32;
        for n in 0..=max_n.max(2 * m) {
            let want = Rational::from_integer(elementary_of_range(n, m));
            let got = p.eval_int(n.into());
            outcomes.push(outcome("stirling-values", got == want, || {
                format!("m={m}, n={n}: {got} vs e_m = {want}")
            }));
        }
        outcomes.push(outcome("stirling-degree", p.degree() == Some(2 * m as usize), || {
            format!("m={m}: degree {:?}", p.degree())
        }));
        outcomes.push(outcome("gamma-agreement", gamma[m as usize] == *p, || {
            format!("m={m}: interpolation {p} vs Gamma expansion {}", gamma[m as usize])
        }));
        outcomes.push(certificate("integer-valued", format!("Hilbert coefficient m={m}"), p));
    }
    // Row sums need every m < n, so they use their own table.
    let row_n = 9.min(max_n);
    let full: Vec<Poly> = (0..row_n).into_par_iter().map(stirling_hilbert_coeff).collect();
    for n in 1..=row_n {
        let s: Rational = full.iter().take(n as usize).map(|p| p.eval_int(n.into())).sum();
        let want = Rational::from_integer(factorial(n.into()));
        outcomes.push(outcome("row-sum", s == want, || format!("n={n}: {s} vs n! = {want}")));
    }
    Ok(SuiteReport::from_outcomes(Suite::Stirling, outcomes))
}

/// `dim pi_mu >= binom(n,d)(d/n)^d` for `n <= max_n` (default 18),
/// the AM-GM chain for `n <= 12`, and `lemma_scan(1, 1, n)` empty for
/// `10 <= n <= 15`.
pub fn bounds_suite(params: &VerifyParams) -> Result<SuiteReport> {
    check_limits(params)?;
    let max_n = params.max_n.unwrap_or(18);
    let mut outcomes: Vec<Outcome> = (1..=max_n)
        .into_par_iter()
        .map(|n| match bound_sweep(n) {
            Ok(r) => outcome("lower-bound", r.pass, || format!("n={n}: violations {:?}", r.violations)),
            Err(e) => errored("lower-bound", e),
        })
        .collect();
    outcomes.par_extend(
        partitions_up_to(max_n.min(12))?
            .into_par_iter()
            .map(|mu| {
                let r = amgm_check(&mu);
                outcome("amgm", r.pass(), || format!("{}: {r:?}", mu.pretty()))
            }),
    );
    for n in 10..=max_n.min(15) {
        outcomes.push(match lemma_scan(&int(1), 1, n) {
            Ok(v) => outcome("lemma-scan", v.is_empty(), || format!("n={n}: {v:?}")),
            Err(e) => errored("lemma-scan", e),
        });
    }
    Ok(SuiteReport::from_outcomes(Suite::Bounds, outcomes))
}

/// Hilbert series of tensor powers and the Verma/branching combinatorics.
/// `max_size` is the degree bound `D` (default 6); `(1+x)^t` is checked to
/// degree `max(D, 10)`.
pub fn graded_suite(params: &VerifyParams) -> Result<SuiteReport> {
    check_limits(params)?;
    let degree = params.max_size.unwrap_or(6);
    let mut outcomes = Vec::new();

    let binom_deg = degree.max(10);
    let s = tensor_power_hilbert(&UnitalHilbert::ungraded(1), binom_deg);
    for k in 0..=binom_deg {
        let got = s.coefficient(&[k])?;
        let want = binomial_poly(0, k as usize);
        outcomes.push(outcome("binomial-series", got == want, || format!("k={k}: {got} vs {want}")));
    }

    for d in 1..=3 {
        outcomes.push(match graded_decomposition_check(d, degree) {
            Ok(r) => outcome("graded-decomposition", r.pass, || {
                format!("d={d}, D={degree}: first failure at degree {:?}", r.first_failure)
            }),
            Err(e) => errored("graded-decomposition", e),
        });
    }

    for h in [&[1u64, 1][..], &[1, 2, 1], &[1, 3, 0, 2]] {
        let hil = UnitalHilbert::from_u64(h)?;
        let series = tensor_power_hilbert(&hil, degree);
        let base = hil.to_series(degree);
        for n in 0..=6u32 {
            let want = base.pow_int(n);
            let got = series.eval_t(n.into());
            outcomes.push(outcome("tensor-power", got.same_terms(&want), || format!("h={h:?}, n={n}")));
        }
    }

    for v in 1..=5u64 {
        let f1 = filtration_degree1_dim(v);
        let series = tensor_power_hilbert(&UnitalHilbert::ungraded(v - 1), 1);
        let low = &series.coefficient(&[0])? + &series.coefficient(&[1])?;
        outcomes.push(outcome("degree-one", f1 == low, || format!("v={v}: {f1} vs {low}")));
    }

    for lambda in partitions_up_to(4)? {
        for dim_v in (lambda.len() as u32 + 1).max(2)..=5 {
            let spec = VermaWeightSpec::new(lambda.clone(), dim_v)?;
            let ts = candidate_ranks(&spec, 12);
            outcomes.push(outcome("verma-range", ts.iter().all(|&t| t <= 12), || {
                format!("{} N={dim_v}: {ts:?}", lambda.pretty())
            }));
            let u = (dim_v - 1) as u64;
            for bound in lambda.size()..=lambda.size() + 3 {
                let lhs: BigInt = interlace_branch(&lambda, dim_v, bound)?
                    .iter()
                    .map(|mu| schur_dim_principal(mu, u))
                    .sum();
                let sym: BigInt = (0..=(bound - lambda.size()) as u64)
                    .map(|k| crate::exactalg::binomial(u + k - 1, k))
                    .sum();
                let rhs = sym * schur_dim_principal(&lambda, u);
                outcomes.push(outcome("branching-dimension", lhs == rhs, || {
                    format!("{} N={dim_v} B={bound}: {lhs} vs {rhs}", lambda.pretty())
                }));
            }
        }
    }
    Ok(SuiteReport::from_outcomes(Suite::Graded, outcomes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_oracle_run_passes() {
        let params = VerifyParams {
            max_size: Some(2),
            max_n: Some(7),
            max_m: Some(3),
            ..Default::default()
        };
        let r = oracle_suite(&params).unwrap();
        assert!(r.pass, "{:?}", r.failures);
        assert!(r.checks > 50);
    }

    #[test]
    fn flipped_contents_fail() {
        let params = VerifyParams {
            max_size: Some(2),
            max_n: Some(7),
            max_m: Some(2),
            convention: ContentConvention::RowMinusCol,
            ..Default::default()
        };
        let r = oracle_suite(&params).unwrap();
        assert!(!r.pass);
        assert!(r.failures_in("jm-eigenvalue").count() > 0);
    }

    #[test]
    fn limits_enforced() {
        let params = VerifyParams {
            max_n: Some(10_000),
            ..Default::default()
        };
        assert!(matches!(oracle_suite(&params), Err(Error::LimitExceeded { .. })));
    }
}
