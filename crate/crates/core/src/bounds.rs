//! Lower bounds for dimensions of `S_n` irreducibles in terms of the longer
//! of the first row and first column, and the finite-`n` scan of the
//! statement that small-dimensional irreducibles have a long first row or
//! column.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{binomial, rational_pow, Rational};
use crate::limits::Limits;
use crate::partitions::{enumerate_partitions, Partition};
use crate::snoracle::hook_dim;

fn rational_string(r: &Rational) -> String {
    r.to_string()
}

/// `max(first row, first column)`.
pub fn long_side(mu: &Partition) -> u32 {
    mu.first_row().max(mu.first_column())
}

/// `binom(n, d) (d/n)^d` with `d = max(first row, first column)`.
pub fn dim_lower_bound(n: u32, mu: &Partition) -> Result<Rational> {
    if n == 0 || mu.size() != n {
        return Err(Error::SizeMismatch(format!(
            "{} is not a partition of n = {n} >= 1",
            mu.pretty()
        )));
    }
    let d = long_side(mu);
    let ratio = Rational::new(d.into(), n.into());
    Ok(Rational::from_integer(binomial(n.into(), d.into())) * rational_pow(&ratio, d))
}

/// `c_1, ..., c_d` where `c_i` is the length of column `d - i + 1`; columns
/// past the last one count as length 0.
pub fn reversed_columns(mu: &Partition, d: u32) -> Vec<u32> {
    let conj = mu.conjugate();
    (1..=d).map(|i| conj.part((d - i + 1) as usize)).collect()
}

/// The three exact facts behind the bound, for the first-row case
/// `d = mu_1`:
/// the hook formula split along the first row,
/// `prod (1 + (c_i - 1)/i) <= prod c_i`, and `prod c_i <= (n/d)^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmgmReport {
    pub hook_split_holds: bool,
    pub first_inequality: bool,
    pub amgm_inequality: bool,
}

impl AmgmReport {
    pub fn pass(&self) -> bool {
        self.hook_split_holds && self.first_inequality && self.amgm_inequality
    }
}

pub fn amgm_check(mu: &Partition) -> AmgmReport {
    let n = mu.size();
    let d = mu.first_row();
    if d == 0 {
        return AmgmReport {
            hook_split_holds: true,
            first_inequality: true,
            amgm_inequality: true,
        };
    }
    let c = reversed_columns(mu, d);
    let product: Rational = c
        .iter()
        .zip(1i64..)
        .map(|(&ci, i)| Rational::one() + Rational::new((ci as i64 - 1).into(), i.into()))
        .product();
    let plain: BigInt = c.iter().map(|&ci| BigInt::from(ci)).product();
    let mean_pow = rational_pow(&Rational::new(n.into(), d.into()), d);

    let rest = Partition::from_unsorted(mu.parts()[1..].to_vec());
    let split = Rational::from_integer(hook_dim(&rest) * binomial(n.into(), d.into())) / &product;

    AmgmReport {
        hook_split_holds: split == Rational::from_integer(hook_dim(mu)),
        first_inequality: product <= Rational::from_integer(plain.clone()),
        amgm_inequality: Rational::from_integer(plain) <= mean_pow,
    }
}

/// Result of checking `dim pi_mu >= binom(n,d) (d/n)^d` over all `mu |- n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub check: String,
    pub n: u32,
    pub partitions: usize,
    pub pass: bool,
    /// Smallest `dim - bound`, as `"p/q"`.
    #[serde(rename = "minSlack")]
    pub min_slack: Option<String>,
    #[serde(rename = "minSlackPartition")]
    pub min_slack_partition: Option<String>,
    pub violations: Vec<String>,
}

pub fn bound_sweep(n: u32) -> Result<BoundReport> {
    let parts = enumerate_partitions(n)?;
    let slacks: Vec<(Partition, Rational)> = parts
        .par_iter()
        .filter(|_| n > 0)
        .map(|mu| {
            let bound = dim_lower_bound(n, mu)?;
            Ok((mu.clone(), Rational::from_integer(hook_dim(mu)) - bound))
        })
        .collect::<Result<_>>()?;
    let violations: Vec<String> = slacks
        .iter()
        .filter(|(_, s)| *s < Rational::zero())
        .map(|(mu, _)| mu.to_string())
        .collect();
    let min = slacks.iter().min_by(|a, b| a.1.cmp(&b.1));
    Ok(BoundReport {
        check: "dimension-lower-bound".into(),
        n,
        partitions: parts.len(),
        pass: violations.is_empty(),
        min_slack: min.map(|(_, s)| rational_string(s)),
        min_slack_partition: min.map(|(mu, _)| mu.to_string()),
        violations,
    })
}

/// Partitions of `n` with `dim pi_mu <= C n^k` whose first row and first
/// column are both shorter than `n - k`.
pub fn lemma_scan(c: &Rational, k: u32, n: u32) -> Result<Vec<Partition>> {
    let cap = c * Rational::from_integer(BigInt::from(n).pow(k));
    let need = n as i64 - k as i64;
    let mut out: Vec<Partition> = enumerate_partitions(n)?
        .into_par_iter()
        .filter(|mu| (mu.first_row() as i64) < need && (mu.first_column() as i64) < need)
        .filter(|mu| Rational::from_integer(hook_dim(mu)) <= cap)
        .collect();
    out.sort();
    Ok(out)
}

/// Empirical threshold: the smallest `N >= 1` such that [`lemma_scan`] is
/// empty for every `N <= n <= n_max`, or `None` when it fails at `n_max`.
pub fn find_threshold(c: &Rational, k: u32, n_max: u32) -> Result<Option<u32>> {
    Limits::check("threshold scan", n_max, Limits::get().partition_n)?;
    for n in (1..=n_max).rev() {
        if !lemma_scan(c, k, n)?.is_empty() {
            return Ok((n < n_max).then_some(n + 1));
        }
    }
    Ok(Some(1))
}

/// JSON form of a lemma scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub check: String,
    #[serde(rename = "C")]
    pub c: String,
    pub k: u32,
    pub n: u32,
    pub violations: Vec<String>,
}

impl LemmaReport {
    pub fn new(c: &Rational, k: u32, n: u32, violations: &[Partition]) -> Self {
        LemmaReport {
            check: "lemma-scan".into(),
            c: rational_string(c),
            k,
            n,
            violations: violations.iter().map(ToString::to_string).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn lower_bound_examples() {
        for n in 1..8 {
            assert_eq!(dim_lower_bound(n, &Partition::row(n)).unwrap(), int(1));
        }
        assert_eq!(dim_lower_bound(4, &p("2,2")).unwrap(), rat(3, 2));
        assert_eq!(dim_lower_bound(4, &p("3,1")).unwrap(), rat(27, 16));
        assert!(dim_lower_bound(5, &p("3,1")).is_err());
        assert!(dim_lower_bound(0, &p("")).is_err());
    }

    #[test]
    fn amgm_examples() {
        assert!(amgm_check(&p("5")).pass());
        assert!(amgm_check(&p("2,2")).pass());
        assert!(amgm_check(&p("")).pass());
        assert!(amgm_check(&p("3,3,1")).pass());
    }

    #[test]
    fn reversed_columns_pad_with_zero() {
        assert_eq!(reversed_columns(&p("3,1"), 3), vec![1, 1, 2]);
        assert_eq!(reversed_columns(&p("1,1,1"), 3), vec![0, 0, 3]);
    }

    #[test]
    fn sweeps() {
        let r = bound_sweep(4).unwrap();
        assert!(r.pass);
        assert_eq!(r.partitions, 5);
        let r = bound_sweep(1).unwrap();
        assert!(r.pass);
        assert_eq!(r.min_slack.as_deref(), Some("0"));
    }

    #[test]
    fn lemma_examples() {
        for n in 1..=12 {
            assert!(lemma_scan(&int(1), 0, n).unwrap().is_empty());
        }
        assert!(lemma_scan(&int(1), 1, 10).unwrap().is_empty());
        for mu in lemma_scan(&int(1), 2, 6).unwrap() {
            assert!(mu.first_row() < 4 && mu.first_column() < 4);
        }
        assert_eq!(find_threshold(&int(1), 0, 12).unwrap(), Some(1));
    }

    #[test]
    fn threshold_none_when_last_fails() {
        // Everything qualifies once C is huge and k = 0 asks for a full row.
        let huge = Rational::from_integer(BigInt::from(10u64).pow(30));
        assert!(!lemma_scan(&huge, 0, 6).unwrap().is_empty());
        assert_eq!(find_threshold(&huge, 0, 6).unwrap(), None);
    }
}
