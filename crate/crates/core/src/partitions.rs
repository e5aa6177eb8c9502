//! Young diagram primitives.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::limits::Limits;

/// A Young diagram, stored as its weakly decreasing positive row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A box of a diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

/// Sign convention for the content of a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ContentConvention {
    /// `col - row`: the convention under which the Jucys-Murphy eigenvalues
    /// agree with the symmetric group.
    #[default]
    ColMinusRow,
    /// `row - col`. Kept for mutation testing only.
    RowMinusCol,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("parts must be positive: {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts must be weakly decreasing: {parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Drops zero parts and sorts; never fails.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `(1^k)`.
    pub fn column(k: u32) -> Self {
        Partition { parts: vec![1; k as usize] }
    }

    /// `(k)`, or the empty diagram for `k = 0`.
    pub fn row(k: u32) -> Self {
        Partition::from_unsorted(vec![k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length, 1-based; zero past the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> u32 {
        self.part(1)
    }

    pub fn first_column(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell { row: i as u32 + 1, col: j }))
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first_row();
        Partition {
            parts: (1..=cols)
                .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
                .collect(),
        }
    }

    /// Hook length of every cell: `lambda_i - j + lambda*_j - i + 1`.
    pub fn hook_lengths(&self) -> BTreeMap<Cell, u32> {
        let conj = self.conjugate();
        self.cells()
            .map(|c| {
                let arm = self.part(c.row as usize) - c.col;
                let leg = conj.part(c.col as usize) - c.row;
                (c, arm + leg + 1)
            })
            .collect()
    }

    pub fn hook_product(&self) -> BigInt {
        self.hook_lengths()
            .values()
            .fold(BigInt::one(), |acc, &h| acc * h)
    }

    pub fn content_sum(&self) -> i64 {
        self.content_sum_with(ContentConvention::default())
    }

    pub fn content_sum_with(&self, convention: ContentConvention) -> i64 {
        self.cells()
            .map(|c| {
                let d = c.col as i64 - c.row as i64;
                match convention {
                    ContentConvention::ColMinusRow => d,
                    ContentConvention::RowMinusCol => -d,
                }
            })
            .sum()
    }

    /// Row indices (0-based) whose last cell is a removable corner.
    fn corner_rows(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&i| self.parts[i] > self.parts.get(i + 1).copied().unwrap_or(0))
            .collect()
    }

    /// Row indices (0-based) where a cell can be added; index `len` opens a
    /// new row.
    fn addable_rows(&self) -> Vec<usize> {
        (0..=self.parts.len())
            .filter(|&i| i == 0 || self.parts[i - 1] > self.parts.get(i).copied().unwrap_or(0))
            .collect()
    }

    fn with_added(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition { parts }
    }

    fn with_removed(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn add_cell_all(&self) -> Vec<Partition> {
        self.addable_rows().into_iter().map(|r| self.with_added(r)).collect()
    }

    pub fn remove_corner_all(&self) -> Vec<Partition> {
        self.corner_rows().into_iter().map(|r| self.with_removed(r)).collect()
    }

    pub fn corner_count(&self) -> usize {
        self.corner_rows().len()
    }

    pub fn corner_sets(&self) -> CornerSets {
        let added: BTreeSet<_> = self.add_cell_all().into_iter().collect();
        let removed: BTreeSet<_> = self.remove_corner_all().into_iter().collect();
        let moved: BTreeSet<_> = removed
            .iter()
            .flat_map(|r| r.add_cell_all())
            .filter(|p| p != self)
            .collect();
        CornerSets {
            added,
            removed,
            moved,
            corners: self.corner_count(),
        }
    }

    /// `(n - |lambda|, lambda_1, lambda_2, ...)`.
    pub fn pad(&self, n: i64) -> Result<Partition> {
        let needed = self.size() as i64 + self.first_row() as i64;
        if n < needed {
            return Err(Error::TooSmall {
                partition: self.pretty(),
                n,
                needed,
            });
        }
        let first = (n - self.size() as i64) as u32;
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        if first > 0 {
            parts.push(first);
        }
        parts.extend_from_slice(&self.parts);
        Ok(Partition { parts })
    }

    /// Nonnegative integers missing from the increasing sequence
    /// `N - 1 + k - lambda*_k`, `k >= 1`; always `|lambda|` of them.
    pub fn b_set(&self) -> BTreeSet<i64> {
        let n = self.size() as i64;
        let conj = self.conjugate();
        let cols = self.first_row() as usize;
        let taken: BTreeSet<i64> = (1..=cols + 1)
            .map(|k| n - 1 + k as i64 - conj.part(k) as i64)
            .collect();
        // Past k = cols + 1 the sequence is consecutive, so nothing beyond
        // the last listed value is missing.
        let top = n + cols as i64;
        (0..=top).filter(|v| !taken.contains(v)).collect()
    }

    /// `(2,1)` style rendering, `∅` for the empty diagram.
    pub fn pretty(&self) -> String {
        if self.is_empty() {
            "∅".to_string()
        } else {
            format!("({})", self)
        }
    }
}

/// Outcome of the corner moves on a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerSets {
    /// One addable cell added.
    pub added: BTreeSet<Partition>,
    /// One corner removed.
    pub removed: BTreeSet<Partition>,
    /// One corner moved to a different addable position.
    pub moved: BTreeSet<Partition>,
    pub corners: usize,
}

/// Wire form: comma-separated parts, empty string for the empty diagram.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order, each once.
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    Limits::check("partition size", n, Limits::get().partition_n)?;
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// All partitions of size at most `n`.
pub fn partitions_up_to(n: u32) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(enumerate_partitions(k)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Partition> {
        items.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("").parts(), &[] as &[u32]);
        assert_eq!(p("3, 1,1").parts(), &[3, 1, 1]);
        assert_eq!(p("3,1,1").to_string(), "3,1,1");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("").conjugate(), p(""));
        assert_eq!(p("2,1").conjugate(), p("2,1"));
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
    }

    #[test]
    fn hooks() {
        let h = p("1").hook_lengths();
        assert_eq!(h.into_iter().collect::<Vec<_>>(), vec![(Cell { row: 1, col: 1 }, 1)]);
        let h = p("2,1").hook_lengths();
        assert_eq!(h[&Cell { row: 1, col: 1 }], 3);
        assert_eq!(h[&Cell { row: 1, col: 2 }], 1);
        assert_eq!(h[&Cell { row: 2, col: 1 }], 1);
        // hooks of (3,2): 4 3 1 / 2 1
        assert_eq!(p("3,2").hook_product(), BigInt::from(24));
    }

    #[test]
    fn contents() {
        assert_eq!(p("1").content_sum(), 0);
        assert_eq!(p("2").content_sum(), 1);
        assert_eq!(p("1,1").content_sum(), -1);
        assert_eq!(p("2").content_sum_with(ContentConvention::RowMinusCol), -1);
    }

    #[test]
    fn corner_sets_examples() {
        let c = p("").corner_sets();
        assert_eq!((c.added, c.removed, c.moved, c.corners), (set(&["1"]), set(&[]), set(&[]), 0));
        let c = p("1").corner_sets();
        assert_eq!((c.added, c.removed, c.moved, c.corners), (set(&["2", "1,1"]), set(&[""]), set(&[]), 1));
        let c = p("2,1").corner_sets();
        assert_eq!(c.added, set(&["3,1", "2,2", "2,1,1"]));
        assert_eq!(c.removed, set(&["2", "1,1"]));
        assert_eq!(c.moved, set(&["3", "1,1,1"]));
        assert_eq!(c.corners, 2);
    }

    #[test]
    fn padding() {
        assert_eq!(p("").pad(5).unwrap(), p("5"));
        assert_eq!(p("1").pad(4).unwrap(), p("3,1"));
        assert!(matches!(p("2,1").pad(4), Err(Error::TooSmall { needed: 5, .. })));
        assert_eq!(p("").pad(0).unwrap(), p(""));
    }

    #[test]
    fn b_sets() {
        assert_eq!(p("1").b_set(), [1].into_iter().collect());
        assert_eq!(p("2").b_set(), [0, 3].into_iter().collect());
        assert!(p("").b_set().is_empty());
        assert_eq!(p("1,1").b_set(), [1, 2].into_iter().collect());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(enumerate_partitions(0).unwrap(), vec![p("")]);
        assert_eq!(enumerate_partitions(4).unwrap().len(), 5);
        assert_eq!(enumerate_partitions(10).unwrap().len(), 42);
        assert!(matches!(enumerate_partitions(10_000), Err(Error::LimitExceeded { .. })));
    }

    /// p(n) by the pentagonal-number recurrence, independent of the
    /// enumerator.
    fn partition_count(n: usize) -> u64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        p[n] as u64
    }

    #[test]
    fn enumeration_matches_recurrence() {
        for n in 0..=20u32 {
            let all = enumerate_partitions(n).unwrap();
            assert_eq!(all.len() as u64, partition_count(n as usize), "n = {n}");
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.iter().all(|q| q.size() == n));
        }
    }

    #[test]
    fn conjugation_is_an_involution_and_preserves_hooks() {
        for q in partitions_up_to(12).unwrap() {
            let c = q.conjugate();
            assert_eq!(c.conjugate(), q);
            let hs: u32 = q.hook_lengths().values().sum();
            let hc: u32 = c.hook_lengths().values().sum();
            assert_eq!(hs, hc);
        }
    }

    #[test]
    fn b_set_has_size_n() {
        for q in partitions_up_to(10).unwrap() {
            assert_eq!(q.b_set().len() as u32, q.size(), "{q:?}");
        }
    }

    #[test]
    fn corner_moves_are_symmetric() {
        let all = partitions_up_to(9).unwrap();
        let sets: BTreeMap<_, _> = all.iter().map(|q| (q.clone(), q.corner_sets())).collect();
        for q in all.iter().filter(|q| q.size() <= 8) {
            let cs = &sets[q];
            for mu in &cs.added {
                assert!(sets[mu].removed.contains(q));
            }
            for mu in &cs.removed {
                assert!(sets[mu].added.contains(q));
            }
            for mu in &cs.moved {
                assert!(sets[mu].moved.contains(q));
            }
        }
    }
}
