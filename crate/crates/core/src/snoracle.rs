//! Classical symmetric group computations at integer rank.
//!
//! This module is the ground truth the interpolation formulas are checked
//! against. It must not depend on [`crate::deligne`] or anything built on it.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{factorial, Rational};
use crate::partitions::Partition;

/// Cycle type without fixed points: `counts[i]` is the number of cycles of
/// length `i + 2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CycleType {
    counts: Vec<u32>,
}

impl CycleType {
    pub fn new(mut counts: Vec<u32>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        CycleType { counts }
    }

    pub fn identity() -> Self {
        CycleType::default()
    }

    /// A single cycle of the given length (at least 2).
    pub fn single_cycle(len: u32) -> Self {
        assert!(len >= 2, "a cycle of length {len} is not a nontrivial cycle");
        let mut counts = vec![0; len as usize - 1];
        counts[len as usize - 2] = 1;
        CycleType { counts }
    }

    /// Drops the 1-cycles of a cycle shape given as a partition.
    pub fn from_shape(shape: &Partition) -> Self {
        CycleType::from_cycle_lengths(shape.parts().iter().copied())
    }

    pub fn from_cycle_lengths(lengths: impl IntoIterator<Item = u32>) -> Self {
        let mut counts = Vec::new();
        for l in lengths.into_iter().filter(|&l| l >= 2) {
            let i = l as usize - 2;
            if counts.len() <= i {
                counts.resize(i + 1, 0);
            }
            counts[i] += 1;
        }
        CycleType::new(counts)
    }

    /// `counts[i]` = number of `(i + 2)`-cycles.
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Number of moved points, `sum m_i (i + 1)` in 1-based cycle indexing.
    pub fn support(&self) -> u32 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &m)| m * (i as u32 + 2))
            .sum()
    }

    /// Nontrivial cycle lengths, largest first.
    pub fn cycle_lengths(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .counts
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| std::iter::repeat_n(i as u32 + 2, m as usize))
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// The centralizer factor `prod m_i! (i+1)^{m_i}` over nontrivial cycles.
    pub fn centralizer_factor(&self) -> BigInt {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &m)| factorial(m.into()) * BigInt::from(i + 2).pow(m))
            .product()
    }

    /// All cycle types moving at most `m` points.
    pub fn all_with_support_up_to(m: u32) -> Vec<CycleType> {
        // A cycle type with support s is a partition of s into parts >= 2.
        fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<CycleType>) {
            out.push(CycleType::from_cycle_lengths(prefix.iter().copied()));
            for l in (2..=rest.min(max)).rev() {
                prefix.push(l);
                go(rest - l, l, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(m, m, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

/// Wire form `m1,m2,...`; empty string for the identity class.
impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.counts.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType[{self}]")
    }
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(CycleType::identity());
        }
        let counts = s
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad cycle type {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CycleType::new(counts))
    }
}

/// `dim pi_mu = |mu|! / prod hooks`.
pub fn hook_dim(mu: &Partition) -> BigInt {
    factorial(mu.size().into()) / mu.hook_product()
}

type MemoKey = (Partition, Vec<u32>);

fn memo() -> &'static RwLock<HashMap<MemoKey, BigInt>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, BigInt>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Beta numbers `mu_i + L - i` of a diagram with `L` rows.
fn beta_set(mu: &Partition) -> Vec<i64> {
    let l = mu.len() as i64;
    mu.parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + l - 1 - i as i64)
        .collect()
}

fn from_beta_set(mut beta: Vec<i64>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len() as i64;
    Partition::from_unsorted(
        beta.iter()
            .enumerate()
            .map(|(i, &b)| (b - (l - 1 - i as i64)) as u32)
            .collect(),
    )
}

/// Every way to strip a rim hook of length `r`, with its sign
/// `(-1)^(height)`.
fn strip_rim_hooks(mu: &Partition, r: u32) -> Vec<(Partition, i32)> {
    let beta = beta_set(mu);
    let r = r as i64;
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - r;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        out.push((from_beta_set(next), sign));
    }
    out
}

fn mn_recurse(mu: &Partition, cycles: &[u32]) -> BigInt {
    let Some((&first, rest)) = cycles.split_first() else {
        // Only fixed points remain: count standard tableaux.
        return hook_dim(mu);
    };
    let key = (mu.clone(), cycles.to_vec());
    if let Some(v) = memo().read().expect("memo poisoned").get(&key) {
        return v.clone();
    }
    let mut acc = BigInt::zero();
    for (nu, sign) in strip_rim_hooks(mu, first) {
        let v = mn_recurse(&nu, rest);
        if sign > 0 {
            acc += v;
        } else {
            acc -= v;
        }
    }
    memo().write().expect("memo poisoned").insert(key, acc.clone());
    acc
}

/// Character of `pi_mu` on a permutation whose nontrivial cycles are `rho`
/// and whose remaining `|mu| - m` points are fixed (Murnaghan-Nakayama).
pub fn mn_character(mu: &Partition, rho: &CycleType) -> Result<BigInt> {
    if mu.size() < rho.support() {
        return Err(Error::SizeMismatch(format!(
            "cycle type {rho} moves {} points but {} has only {}",
            rho.support(),
            mu.pretty(),
            mu.size()
        )));
    }
    Ok(mn_recurse(mu, &rho.cycle_lengths()))
}

/// Size of the conjugacy class of `rho` (padded with fixed points) in `S_n`.
pub fn class_size_int(n: u32, rho: &CycleType) -> Result<BigInt> {
    let m = rho.support();
    if n < m {
        return Err(Error::SizeMismatch(format!(
            "cycle type {rho} moves {m} points, more than n = {n}"
        )));
    }
    Ok(factorial(n.into()) / factorial((n - m).into()) / rho.centralizer_factor())
}

/// Eigenvalue of the class sum of `rho` on `pi_mu`: `|C| chi / dim`.
pub fn central_eigenvalue_classical(n: u32, rho: &CycleType, mu: &Partition) -> Result<Rational> {
    if mu.size() != n {
        return Err(Error::SizeMismatch(format!("{} is not a partition of {n}", mu.pretty())));
    }
    let size = class_size_int(n, rho)?;
    let chi = mn_character(mu, rho)?;
    Ok(Rational::new(size * chi, hook_dim(mu)))
}

/// Brute-force check for tiny `n`: the number of standard Young tableaux by
/// corner removal, which equals `hook_dim`.
pub fn standard_tableaux(mu: &Partition) -> BigInt {
    if mu.is_empty() {
        return BigInt::one();
    }
    mu.remove_corner_all().iter().map(standard_tableaux).sum()
}
