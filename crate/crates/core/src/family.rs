//! Submonoid families of the partition monoid: membership and enumeration.

use crate::diagram::{bottom_element, Diagram, Kind};
use crate::error::{Error, Result};
use crate::partition::{enumerate_set_partitions, SetPartition};

/// Default cap on the number of elements an enumeration may produce.
pub const DEFAULT_BOUND: usize = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Every diagram.
    C,
    /// Permutations: every block a line.
    S,
    /// Partial permutations: lines and points.
    IS,
    /// Vertical lines and points.
    I,
    /// Planar, every block of size two.
    J,
    /// Planar.
    PP,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::C => "C",
            Family::S => "S",
            Family::IS => "IS",
            Family::I => "I",
            Family::J => "J",
            Family::PP => "PP",
        }
    }

    pub fn contains(self, d: &Diagram) -> bool {
        let blocks = d.partition().blocks();
        let n = d.n();
        let is_line = |b: &Vec<usize>| b.len() == 2 && b[0] <= n && b[1] > n;
        match self {
            Family::C => true,
            Family::S => blocks.iter().all(is_line),
            Family::IS => blocks.iter().all(|b| b.len() == 1 || is_line(b)),
            Family::I => blocks.iter().all(|b| {
                b.len() == 1
                    || (b.len() == 2
                        && b[0] < n + usize::from(d.kind() == Kind::Full)
                        && b[1] == bottom_element(n, d.kind(), b[0]))
            }),
            Family::J => d.is_planar() && blocks.iter().all(|b| b.len() == 2),
            Family::PP => d.is_planar(),
        }
    }

    /// Every member of the family with `n` strands, each exactly once.
    pub fn enumerate(self, n: usize, kind: Kind, bound: usize) -> Result<Vec<Diagram>> {
        let m = kind.ground(n);
        let bottoms = match kind {
            Kind::Full => n,
            Kind::Bullet => n.saturating_sub(1),
        };
        let mut out: Vec<SetPartition> = Vec::new();
        let push = |raw: &[usize], out: &mut Vec<SetPartition>| -> Result<()> {
            if out.len() >= bound {
                return Err(Error::BoundExceeded { bound });
            }
            out.push(SetPartition::from_raw_labels(raw));
            Ok(())
        };
        match self {
            Family::C => {
                for p in enumerate_set_partitions(m) {
                    let raw: Vec<usize> = p.labels().iter().map(|&l| l as usize).collect();
                    push(&raw, &mut out)?;
                }
            }
            Family::S | Family::IS => {
                let partial = self == Family::IS;
                let mut images = Vec::new();
                partial_injections(n, bottoms, partial, &mut Vec::new(), &mut images);
                for img in images {
                    // label: top i gets i, bottom at position p gets the matching top or a fresh label
                    let mut raw: Vec<usize> = (0..m).map(|e| m + e).collect();
                    for (i, target) in img.iter().enumerate() {
                        raw[i] = i;
                        if let Some(p) = target {
                            raw[bottom_element(n, kind, *p) - 1] = i;
                        }
                    }
                    push(&raw, &mut out)?;
                }
            }
            Family::I => {
                for mask in 0u64..(1u64 << bottoms) {
                    let mut raw: Vec<usize> = (0..m).collect();
                    for c in 1..=bottoms {
                        if mask >> (c - 1) & 1 == 1 {
                            raw[bottom_element(n, kind, c) - 1] = c - 1;
                        }
                    }
                    push(&raw, &mut out)?;
                }
            }
            Family::J => {
                for raw in noncrossing_matchings(m) {
                    push(&raw, &mut out)?;
                }
            }
            Family::PP => {
                for raw in noncrossing_partitions(m) {
                    push(&raw, &mut out)?;
                }
            }
        }
        out.into_iter().map(|p| Diagram::new(n, kind, p)).collect()
    }
}

/// All maps from `[tops]` to `[bottoms]` that are injective where defined;
/// `partial = false` keeps only total bijections.
fn partial_injections(
    tops: usize,
    bottoms: usize,
    partial: bool,
    prefix: &mut Vec<Option<usize>>,
    out: &mut Vec<Vec<Option<usize>>>,
) {
    if prefix.len() == tops {
        if partial || prefix.iter().all(Option::is_some) {
            out.push(prefix.clone());
        }
        return;
    }
    if partial {
        prefix.push(None);
        partial_injections(tops, bottoms, partial, prefix, out);
        prefix.pop();
    }
    for p in 1..=bottoms {
        if !prefix.contains(&Some(p)) {
            prefix.push(Some(p));
            partial_injections(tops, bottoms, partial, prefix, out);
            prefix.pop();
        }
    }
}

/// Noncrossing perfect matchings of `[m]` as labellings (label = smaller end).
pub fn noncrossing_matchings(m: usize) -> Vec<Vec<usize>> {
    fn rec(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        let mut j = lo + 1;
        while j < hi {
            for inner in rec(lo + 1, j) {
                for outer in rec(j + 1, hi) {
                    let mut v = vec![(lo, j)];
                    v.extend(inner.iter().copied());
                    v.extend(outer.iter().copied());
                    out.push(v);
                }
            }
            j += 2;
        }
        out
    }
    if m % 2 == 1 {
        return Vec::new();
    }
    rec(0, m)
        .into_iter()
        .map(|pairs| {
            let mut raw = vec![0; m];
            for (a, b) in pairs {
                raw[a] = a;
                raw[b] = a;
            }
            raw
        })
        .collect()
}

/// Noncrossing partitions of `[m]` as labellings (label = block minimum).
pub fn noncrossing_partitions(m: usize) -> Vec<Vec<usize>> {
    // fills positions lo..hi given that they are enclosed by outer blocks
    fn fill(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        extend_block(lo, lo, hi, &mut vec![(lo, lo)], &mut out);
        out
    }
    // the block labelled `label` currently ends at `last`
    fn extend_block(
        label: usize,
        last: usize,
        hi: usize,
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        for rest in fill(last + 1, hi) {
            let mut v = acc.clone();
            v.extend(rest);
            out.push(v);
        }
        for next in last + 1..hi {
            for inner in fill(last + 1, next) {
                let mut a = acc.clone();
                a.extend(inner);
                a.push((next, label));
                extend_block(label, next, hi, &mut a, out);
            }
        }
    }
    fill(0, m)
        .into_iter()
        .map(|assign| {
            let mut raw = vec![0; m];
            for (pos, label) in assign {
                raw[pos] = label;
            }
            raw
        })
        .collect()
}
