//! Set partitions of `[m] = {1, ..., m}` in canonical form.
//!
//! A partition is stored as its restricted growth string: `labels[e - 1]` is
//! the index of the block containing `e`, and blocks are numbered in order of
//! their minima. Two partitions are equal exactly when their label strings
//! are equal, so derived `Eq`/`Hash` are the mathematical equality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::union_find::UnionFind;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    labels: Vec<u16>,
}

impl SetPartition {
    /// Builds a partition of `[m]` from explicit blocks of 1-based elements.
    pub fn from_blocks<B: AsRef<[usize]>>(m: usize, blocks: &[B]) -> Result<Self> {
        let mut owner: Vec<Option<usize>> = vec![None; m];
        for (b, block) in blocks.iter().enumerate() {
            let block = block.as_ref();
            if block.is_empty() {
                return Err(Error::EmptyBlock);
            }
            for &e in block {
                if e == 0 || e > m {
                    return Err(Error::OutOfRange {
                        element: e,
                        ground: m,
                    });
                }
                if owner[e - 1].is_some() {
                    return Err(Error::Overlap(e));
                }
                owner[e - 1] = Some(b);
            }
        }
        let raw = owner
            .iter()
            .enumerate()
            .map(|(i, o)| o.ok_or(Error::Gap(i + 1)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw_labels(&raw))
    }

    /// Canonicalises an arbitrary labelling (equal labels = same block).
    pub fn from_raw_labels<T: Copy + Eq + std::hash::Hash>(raw: &[T]) -> Self {
        let mut seen: std::collections::HashMap<T, u16> = std::collections::HashMap::new();
        let labels = raw
            .iter()
            .map(|x| {
                let next = seen.len() as u16;
                *seen.entry(*x).or_insert(next)
            })
            .collect();
        SetPartition { labels }
    }

    /// Trusted constructor from a restricted growth string.
    pub(crate) fn from_rgs(labels: Vec<u16>) -> Self {
        debug_assert!(is_rgs(&labels));
        SetPartition { labels }
    }

    /// The discrete partition `1_m` (all singletons).
    pub fn identity(m: usize) -> Self {
        SetPartition {
            labels: (0..m as u16).collect(),
        }
    }

    /// The partition with the single block `[m]`.
    pub fn full(m: usize) -> Self {
        SetPartition { labels: vec![0; m] }
    }

    /// `e_B`: `B` is the only nontrivial block.
    pub fn with_block(m: usize, block: &[usize]) -> Result<Self> {
        if block.is_empty() {
            return Err(Error::EmptyBlock);
        }
        let mut raw: Vec<usize> = (0..m).collect();
        let target = block[0];
        for &e in block {
            if e == 0 || e > m {
                return Err(Error::OutOfRange {
                    element: e,
                    ground: m,
                });
            }
            raw[e - 1] = target - 1;
        }
        Ok(Self::from_raw_labels(&raw))
    }

    /// `e_{i,j}`: the generator of `P_m` joining `i` and `j`.
    pub fn pair(m: usize, i: usize, j: usize) -> Result<Self> {
        Self::with_block(m, &[i, j])
    }

    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u16] {
        &self.labels
    }

    pub fn num_blocks(&self) -> usize {
        self.labels
            .iter()
            .map(|&l| l as usize + 1)
            .max()
            .unwrap_or(0)
    }

    /// Block index of the 1-based element `e`.
    pub fn block_of(&self, e: usize) -> usize {
        self.labels[e - 1] as usize
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.labels[a - 1] == self.labels[b - 1]
    }

    /// Blocks in canonical order, each ascending, elements 1-based.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (i, &l) in self.labels.iter().enumerate() {
            out[l as usize].push(i + 1);
        }
        out
    }

    /// The block containing `e`.
    pub fn block_containing(&self, e: usize) -> Vec<usize> {
        let l = self.labels[e - 1];
        (1..=self.ground_size())
            .filter(|&x| self.labels[x - 1] == l)
            .collect()
    }

    fn check_size(&self, other: &Self) -> Result<()> {
        if self.ground_size() != other.ground_size() {
            return Err(Error::SizeMismatch {
                left: self.ground_size(),
                right: other.ground_size(),
            });
        }
        Ok(())
    }

    /// `self ⪯ other`: every block of `other` is a union of blocks of `self`.
    pub fn refines(&self, other: &Self) -> Result<bool> {
        self.check_size(other)?;
        Ok(self.refines_unchecked(other))
    }

    pub(crate) fn refines_unchecked(&self, other: &Self) -> bool {
        let mut image: Vec<Option<u16>> = vec![None; self.num_blocks()];
        for (a, b) in self.labels.iter().zip(&other.labels) {
            match image[*a as usize] {
                None => image[*a as usize] = Some(*b),
                Some(x) if x != *b => return false,
                _ => {}
            }
        }
        true
    }

    /// Least common coarsening: the product of the monoid `P_m`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        Ok(self.join_unchecked(other))
    }

    pub(crate) fn join_unchecked(&self, other: &Self) -> Self {
        let m = self.ground_size();
        let mut uf = UnionFind::new(m);
        for p in [self, other] {
            let mut first: Vec<Option<usize>> = vec![None; p.num_blocks()];
            for (i, &l) in p.labels.iter().enumerate() {
                match first[l as usize] {
                    None => first[l as usize] = Some(i),
                    Some(f) => {
                        uf.union(f, i);
                    }
                }
            }
        }
        let raw: Vec<usize> = (0..m).map(|i| uf.find(i)).collect();
        Self::from_raw_labels(&raw)
    }

    /// `I ∩ B` re-indexed onto `[|B|]` preserving order.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&e| e == 0 || e > self.ground_size()) {
            return Err(Error::OutOfRange {
                element: bad,
                ground: self.ground_size(),
            });
        }
        let raw: Vec<u16> = sorted.iter().map(|&e| self.labels[e - 1]).collect();
        Ok(Self::from_raw_labels(&raw))
    }

    /// Every `J` with `self ⪯ J`, in restricted-growth order over the blocks.
    pub fn coarsenings(&self) -> Coarsenings<'_> {
        Coarsenings {
            base: self,
            inner: SetPartitions::new(self.num_blocks()),
        }
    }

    /// No `a < b < c < d` with `a, c` in one block and `b, d` in another.
    pub fn is_noncrossing(&self) -> bool {
        noncrossing_labels(&self.labels)
    }

    /// Pairs `(i, j)` of the normal form `e_{I_1} ... e_{I_k}` of `P_m`.
    pub fn normal_form_pairs(&self) -> Vec<(usize, usize)> {
        self.blocks()
            .iter()
            .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>())
            .collect()
    }

    /// Relabel through an injective map of 1-based elements into `[target]`;
    /// elements of `[target]` not hit become singletons.
    pub(crate) fn transport(&self, target: usize, map: impl Fn(usize) -> usize) -> Self {
        let mut raw: Vec<usize> = (0..target).map(|i| self.ground_size() + i).collect();
        for e in 1..=self.ground_size() {
            raw[map(e) - 1] = self.labels[e - 1] as usize;
        }
        Self::from_raw_labels(&raw)
    }
}

pub(crate) fn is_rgs(labels: &[u16]) -> bool {
    let mut next = 0u16;
    for &l in labels {
        if l > next {
            return false;
        }
        if l == next {
            next += 1;
        }
    }
    true
}

/// Noncrossing test for any labelling, scanning with a stack of open blocks.
pub(crate) fn noncrossing_labels<T: Copy + Eq + std::hash::Hash>(labels: &[T]) -> bool {
    use std::collections::HashMap;
    let mut last: HashMap<T, usize> = HashMap::new();
    for (i, &l) in labels.iter().enumerate() {
        last.insert(l, i);
    }
    let mut opened: HashMap<T, bool> = HashMap::new();
    let mut stack: Vec<T> = Vec::new();
    for (i, &l) in labels.iter().enumerate() {
        if opened.insert(l, true).is_none() {
            stack.push(l);
        } else if stack.last() != Some(&l) {
            return false;
        }
        if last[&l] == i {
            stack.pop();
        }
    }
    true
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ground_size() == 0 {
            return write!(f, "m:0");
        }
        for b in self.blocks() {
            write!(f, "{{")?;
            for (k, e) in b.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({self})")
    }
}

/// Parses the brace block list `{1,4}{2,3}` (whitespace ignored).
pub(crate) fn parse_blocks(text: &str) -> Result<Vec<Vec<usize>>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut blocks = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('{')
            .ok_or_else(|| Error::Parse(format!("expected `{{` at `{rest}`")))?;
        let close = body
            .find('}')
            .ok_or_else(|| Error::Parse("unterminated block".into()))?;
        let inner = &body[..close];
        let block = if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad element `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        blocks.push(block);
        rest = &body[close + 1..];
    }
    Ok(blocks)
}

impl FromStr for SetPartition {
    type Err = Error;

    /// `{1,4}{2,3,5}` or `m:5 {1,4}{2,3,5}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (explicit, body) = match s.strip_prefix("m:") {
            Some(rest) => {
                let digits: String = rest
                    .trim_start()
                    .chars()
                    .take_while(|c| c.is_ascii_digit())
                    .collect();
                let m = digits
                    .parse::<usize>()
                    .map_err(|_| Error::Parse("bad ground size".into()))?;
                let after = rest.trim_start()[digits.len()..].to_string();
                (Some(m), after)
            }
            None => (None, s.to_string()),
        };
        let blocks = parse_blocks(&body)?;
        let m = explicit.unwrap_or_else(|| blocks.iter().flatten().copied().max().unwrap_or(0));
        SetPartition::from_blocks(m, &blocks)
    }
}

/// All partitions of `[m]` in restricted-growth-string order.
#[derive(Debug, Clone)]
pub struct SetPartitions {
    labels: Vec<u16>,
    maxes: Vec<u16>,
    done: bool,
}

impl SetPartitions {
    pub fn new(m: usize) -> Self {
        SetPartitions {
            labels: vec![0; m],
            maxes: vec![0; m],
            done: false,
        }
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let current = SetPartition::from_rgs(self.labels.clone());
        // advance: rightmost position that can still grow
        let m = self.labels.len();
        let mut i = m;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            let prev_max = self.maxes[i - 1];
            if self.labels[i] <= prev_max {
                self.labels[i] += 1;
                self.maxes[i] = prev_max.max(self.labels[i]);
                for j in i + 1..m {
                    self.labels[j] = 0;
                    self.maxes[j] = self.maxes[i];
                }
                break;
            }
        }
        Some(current)
    }
}

pub fn enumerate_set_partitions(m: usize) -> SetPartitions {
    SetPartitions::new(m)
}

/// Coarsenings of a fixed partition, driven by partitions of its blocks.
pub struct Coarsenings<'a> {
    base: &'a SetPartition,
    inner: SetPartitions,
}

impl Iterator for Coarsenings<'_> {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        let over_blocks = self.inner.next()?;
        let raw: Vec<u16> = self
            .base
            .labels
            .iter()
            .map(|&l| over_blocks.labels[l as usize])
            .collect();
        Some(SetPartition::from_raw_labels(&raw))
    }
}

/// Bell number `b_m` via the Bell triangle.
pub fn bell(m: usize) -> BigUint {
    let mut row: Vec<BigUint> = vec![BigUint::one()];
    for _ in 0..m {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().cloned().unwrap_or_else(BigUint::zero));
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn make_partition_canonicalises() {
        let a = SetPartition::from_blocks(5, &[vec![3, 5, 2], vec![4, 1]]).unwrap();
        assert_eq!(a.to_string(), "{1,4}{2,3,5}");
        assert_eq!(a.blocks(), vec![vec![1, 4], vec![2, 3, 5]]);
        assert_eq!(
            SetPartition::from_blocks(3, &[vec![1], vec![2], vec![3]]).unwrap(),
            SetPartition::identity(3)
        );
    }

    #[test]
    fn make_partition_errors() {
        assert_eq!(
            SetPartition::from_blocks(2, &[vec![1], vec![1, 2]]),
            Err(Error::Overlap(1))
        );
        assert_eq!(
            SetPartition::from_blocks(3, &[vec![1, 2]]),
            Err(Error::Gap(3))
        );
        assert_eq!(
            SetPartition::from_blocks(2, &[vec![1, 3], vec![2]]),
            Err(Error::OutOfRange {
                element: 3,
                ground: 2
            })
        );
        assert_eq!(
            SetPartition::from_blocks(2, &[vec![1, 2], vec![]]),
            Err(Error::EmptyBlock)
        );
    }

    #[test]
    fn refinement_examples() {
        let id = SetPartition::identity(3);
        assert!(id.refines(&p("{1,2}{3}")).unwrap());
        assert!(!p("{1,2}{3}").refines(&p("{1}{2,3}")).unwrap());
        for i in enumerate_set_partitions(4) {
            assert!(i.refines(&SetPartition::full(4)).unwrap());
        }
        assert!(id.refines(&SetPartition::identity(4)).is_err());
    }

    #[test]
    fn join_examples() {
        let e12 = SetPartition::pair(3, 1, 2).unwrap();
        let e23 = SetPartition::pair(3, 2, 3).unwrap();
        assert_eq!(e12.join(&e23).unwrap(), SetPartition::full(3));
        let e14 = SetPartition::pair(5, 1, 4).unwrap();
        let e23 = SetPartition::pair(5, 2, 3).unwrap();
        let e35 = SetPartition::pair(5, 3, 5).unwrap();
        let j = e14.join(&e23.join(&e35).unwrap()).unwrap();
        assert_eq!(j, p("{1,4}{2,3,5}"));
        assert_eq!(j.join(&SetPartition::identity(5)).unwrap(), j);
    }

    #[test]
    fn restrict_examples() {
        let i = p("{1,4}{2,3,5}");
        assert_eq!(i.restrict(&[1, 2, 3]).unwrap(), p("{1}{2,3}"));
        assert_eq!(i.restrict(&[1, 2, 3, 4, 5]).unwrap(), i);
        assert_eq!(i.restrict(&[]).unwrap().ground_size(), 0);
        assert!(i.restrict(&[6]).is_err());
    }

    #[test]
    fn coarsening_counts() {
        assert_eq!(SetPartition::identity(3).coarsenings().count(), 5);
        assert_eq!(SetPartition::identity(4).coarsenings().count(), 15);
        let full: Vec<_> = SetPartition::full(4).coarsenings().collect();
        assert_eq!(full, vec![SetPartition::full(4)]);
    }

    #[test]
    fn noncrossing_examples() {
        assert!(!p("{1,3}{2,4}").is_noncrossing());
        assert!(p("{1,4}{2,3}").is_noncrossing());
        assert!(SetPartition::identity(6).is_noncrossing());
        assert!(!p("{1,3,5}{2,6}{4}").is_noncrossing());
        assert!(p("{1,5}{2,3,4}{6}").is_noncrossing());
    }

    #[test]
    fn bell_numbers() {
        assert_eq!(bell(0), BigUint::from(1u32));
        assert_eq!(bell(1), BigUint::from(1u32));
        assert_eq!(bell(4), BigUint::from(15u32));
        assert_eq!(bell(8), BigUint::from(4140u32));
        assert_eq!(enumerate_set_partitions(0).count(), 1);
    }

    #[test]
    fn pn_normal_form_pairs() {
        assert_eq!(
            p("{1,4}{2,3,5}").normal_form_pairs(),
            vec![(1, 4), (2, 3), (3, 5)]
        );
        assert!(SetPartition::identity(4).normal_form_pairs().is_empty());
        assert_eq!(
            SetPartition::full(3).normal_form_pairs(),
            vec![(1, 2), (2, 3)]
        );
    }

    #[test]
    fn literal_forms() {
        assert_eq!(p("m:5 {1,4}{2,3,5}"), p("{1,4} {2, 3,5}"));
        assert!("m:6 {1,4}{2,3,5}".parse::<SetPartition>().is_err());
        assert!("{1,2".parse::<SetPartition>().is_err());
        assert_eq!(SetPartition::identity(0).to_string(), "m:0");
        assert_eq!(p("m:0"), SetPartition::identity(0));
    }
}
