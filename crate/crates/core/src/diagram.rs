//! Partition diagrams with `n` strands and the concatenation product.
//!
//! Layout: top dot `i` is element `i`. On a full diagram (ground `[2n]`) the
//! bottom dot at horizontal position `p` is element `2n + 1 - p`, so walking
//! the elements `1..=2n` in order walks the rectangle boundary. A bullet
//! diagram lives on `[2n - 1]`: element `n` is the distinguished last strand
//! (top and bottom dot identified) and the bottom dot at position `p < n` is
//! element `2n - p`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{parse_blocks, SetPartition};
use crate::union_find::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Full,
    Bullet,
}

impl Kind {
    pub fn ground(self, n: usize) -> usize {
        match self {
            Kind::Full => 2 * n,
            Kind::Bullet => (2 * n).saturating_sub(1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    Point,
    Line,
    Bracket,
    GeneralizedLine,
    Other,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    kind: Kind,
    partition: SetPartition,
}

/// Position (1-based) of a bottom element, or `None` for a top element.
pub fn bottom_position(n: usize, kind: Kind, e: usize) -> Option<usize> {
    match kind {
        Kind::Full if e > n => Some(2 * n + 1 - e),
        Kind::Bullet if e > n => Some(2 * n - e),
        _ => None,
    }
}

/// Element of the bottom dot at position `p`.
pub fn bottom_element(n: usize, kind: Kind, p: usize) -> usize {
    match kind {
        Kind::Full => 2 * n + 1 - p,
        Kind::Bullet if p == n => n,
        Kind::Bullet => 2 * n - p,
    }
}

impl Diagram {
    pub fn new(n: usize, kind: Kind, partition: SetPartition) -> Result<Self> {
        if partition.ground_size() != kind.ground(n) {
            return Err(Error::SizeMismatch {
                left: kind.ground(n),
                right: partition.ground_size(),
            });
        }
        Ok(Diagram { n, kind, partition })
    }

    pub fn from_blocks<B: AsRef<[usize]>>(n: usize, kind: Kind, blocks: &[B]) -> Result<Self> {
        let p = SetPartition::from_blocks(kind.ground(n), blocks)?;
        Ok(Diagram {
            n,
            kind,
            partition: p,
        })
    }

    pub fn identity(n: usize, kind: Kind) -> Self {
        let m = kind.ground(n);
        let raw: Vec<usize> = (1..=m)
            .map(|e| match bottom_position(n, kind, e) {
                Some(p) => p,
                None => e,
            })
            .collect();
        Diagram {
            n,
            kind,
            partition: SetPartition::from_raw_labels(&raw),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn ground_size(&self) -> usize {
        self.kind.ground(self.n)
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    pub fn into_partition(self) -> SetPartition {
        self.partition
    }

    pub fn is_top(&self, e: usize) -> bool {
        e <= self.n
    }

    /// Whether a block meets the bottom row (on a bullet diagram element `n`
    /// counts as a top only).
    fn side_counts(&self, block: &[usize]) -> (usize, usize) {
        let tops = block.iter().filter(|&&e| e <= self.n).count();
        (tops, block.len() - tops)
    }

    pub fn classify(&self, block: &[usize]) -> BlockKind {
        let (tops, bottoms) = self.side_counts(block);
        match (block.len(), tops > 0 && bottoms > 0) {
            (1, _) => BlockKind::Point,
            (2, true) => BlockKind::Line,
            (2, false) => BlockKind::Bracket,
            (_, true) => BlockKind::GeneralizedLine,
            _ => BlockKind::Other,
        }
    }

    /// Classifies `block`, which must be a block of the diagram.
    pub fn classify_block(&self, block: &[usize]) -> Result<BlockKind> {
        let mut sorted = block.to_vec();
        sorted.sort_unstable();
        let first = *sorted.first().ok_or(Error::EmptyBlock)?;
        if first == 0
            || first > self.ground_size()
            || self.partition.block_containing(first) != sorted
        {
            return Err(Error::NotABlock(format!("{sorted:?}")));
        }
        Ok(self.classify(&sorted))
    }

    pub fn is_planar(&self) -> bool {
        self.partition.is_noncrossing()
    }

    /// Is `{i, bottom i}` a block (a vertical line at column `i`)?
    pub fn has_vertical_line(&self, i: usize) -> bool {
        if self.kind == Kind::Bullet && i == self.n {
            return false;
        }
        let b = bottom_element(self.n, self.kind, i);
        self.partition.same_block(i, b) && self.partition.block_containing(i).len() == 2
    }

    pub fn check_compatible(&self, other: &Diagram) -> Result<()> {
        if self.n != other.n || self.kind != other.kind {
            return Err(Error::ShapeMismatch);
        }
        Ok(())
    }

    /// Concatenation: `self` on top of `other`.
    pub fn concat(&self, other: &Diagram) -> Result<Diagram> {
        self.check_compatible(other)?;
        Ok(self.concat_unchecked(other))
    }

    pub(crate) fn concat_unchecked(&self, other: &Diagram) -> Diagram {
        match self.kind {
            Kind::Full => Diagram {
                n: self.n,
                kind: Kind::Full,
                partition: concat_full(self.n, &self.partition, &other.partition),
            },
            Kind::Bullet => {
                let p = concat_full(self.n, &self.embed().partition, &other.embed().partition);
                Diagram {
                    n: self.n,
                    kind: Kind::Full,
                    partition: p,
                }
                .project()
                .expect("the embedded image is closed under concatenation")
            }
        }
    }

    /// `ι`: the full diagram in which the last strand is a vertical line glued
    /// to whatever block the bullet element `n` belongs to.
    pub fn embed(&self) -> Diagram {
        if self.kind == Kind::Full {
            return self.clone();
        }
        let n = self.n;
        let mut raw: Vec<u16> = Vec::with_capacity(2 * n);
        let labels = self.partition.labels();
        raw.extend_from_slice(&labels[..n]);
        raw.push(labels[n - 1]);
        raw.extend_from_slice(&labels[n..]);
        Diagram {
            n,
            kind: Kind::Full,
            partition: SetPartition::from_raw_labels(&raw),
        }
    }

    /// Left inverse of [`Diagram::embed`]; requires `n ~ n + 1`.
    pub fn project(&self) -> Result<Diagram> {
        if self.kind == Kind::Bullet {
            return Ok(self.clone());
        }
        let n = self.n;
        if n == 0 || !self.partition.same_block(n, n + 1) {
            return Err(Error::Membership(
                "the image of the bullet embedding".into(),
            ));
        }
        let labels = self.partition.labels();
        let mut raw: Vec<u16> = labels[..n].to_vec();
        raw.extend_from_slice(&labels[n + 1..]);
        Ok(Diagram {
            n,
            kind: Kind::Bullet,
            partition: SetPartition::from_raw_labels(&raw),
        })
    }

    /// Mirror image top/bottom: the anti-involution `D ↦ D*`.
    pub fn flip(&self) -> Diagram {
        let n = self.n;
        let m = self.ground_size();
        let swap = |e: usize| -> usize {
            match bottom_position(n, self.kind, e) {
                Some(p) => p,
                None => bottom_element(n, self.kind, e),
            }
        };
        Diagram {
            n,
            kind: self.kind,
            partition: self.partition.transport(m, swap),
        }
    }
}

fn concat_full(n: usize, top: &SetPartition, bottom: &SetPartition) -> SetPartition {
    // nodes: 0..n tops of `top`, n..2n middle row, 2n..3n bottoms of `bottom`
    let mut uf = UnionFind::new(3 * n);
    let upper = |e: usize| if e <= n { e - 1 } else { n + (2 * n - e) };
    let lower = |e: usize| {
        if e <= n {
            n + e - 1
        } else {
            2 * n + (2 * n - e)
        }
    };
    link_blocks(&mut uf, top, upper);
    link_blocks(&mut uf, bottom, lower);
    let raw: Vec<usize> = (1..=2 * n)
        .map(|e| {
            if e <= n {
                uf.find(e - 1)
            } else {
                uf.find(lower(e))
            }
        })
        .collect();
    SetPartition::from_raw_labels(&raw)
}

fn link_blocks(uf: &mut UnionFind, p: &SetPartition, node: impl Fn(usize) -> usize) {
    let mut first: Vec<Option<usize>> = vec![None; p.num_blocks()];
    for (i, &l) in p.labels().iter().enumerate() {
        let v = node(i + 1);
        match first[l as usize] {
            None => first[l as usize] = Some(v),
            Some(f) => {
                uf.union(f, v);
            }
        }
    }
}

/// Single-diagram generators. Indices follow the usual ranges; bullet
/// variants are the projections of the full generators where defined.
pub mod gen {
    use super::*;

    fn check(n: usize, i: usize, hi: usize, name: &str) -> Result<()> {
        if i == 0 || i > hi {
            return Err(Error::Index(format!(
                "{name}{i} needs 1 <= i <= {hi} at n = {n}"
            )));
        }
        Ok(())
    }

    /// Identity with the columns in `cols` replaced through `blocks`.
    fn patch(n: usize, cols: &[usize], blocks: &[Vec<usize>]) -> Diagram {
        let mut all: Vec<Vec<usize>> = (1..=n)
            .filter(|c| !cols.contains(c))
            .map(|c| vec![c, 2 * n + 1 - c])
            .collect();
        all.extend(blocks.iter().cloned());
        Diagram::from_blocks(n, Kind::Full, &all).expect("generator blocks partition [2n]")
    }

    pub fn s(n: usize, i: usize) -> Result<Diagram> {
        check(n, i, n.saturating_sub(1), "s")?;
        Ok(patch(
            n,
            &[i, i + 1],
            &[vec![i, 2 * n - i], vec![i + 1, 2 * n - i + 1]],
        ))
    }

    pub fn r(n: usize, i: usize) -> Result<Diagram> {
        check(n, i, n, "r")?;
        Ok(patch(n, &[i], &[vec![i], vec![2 * n - i + 1]]))
    }

    pub fn t(n: usize, i: usize) -> Result<Diagram> {
        check(n, i, n.saturating_sub(1), "t")?;
        Ok(patch(
            n,
            &[i, i + 1],
            &[vec![i, i + 1], vec![2 * n - i, 2 * n - i + 1]],
        ))
    }

    pub fn h(n: usize, i: usize) -> Result<Diagram> {
        check(n, i, n.saturating_sub(1), "h")?;
        Ok(patch(
            n,
            &[i, i + 1],
            &[vec![i, i + 1, 2 * n - i, 2 * n - i + 1]],
        ))
    }

    /// The transposition `s_{i,j}` exchanging columns `i` and `j`.
    pub fn w(n: usize, i: usize, j: usize) -> Result<Diagram> {
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::Index(format!("w{i},{j} needs 1 <= i < j <= {n}")));
        }
        Ok(patch(
            n,
            &[i, j],
            &[vec![i, 2 * n + 1 - j], vec![j, 2 * n + 1 - i]],
        ))
    }

    /// Permutation diagram sending top `i` to bottom position `perm[i - 1]`.
    pub fn permutation(perm: &[usize]) -> Result<Diagram> {
        let n = perm.len();
        let blocks: Vec<Vec<usize>> = perm
            .iter()
            .enumerate()
            .map(|(i, &p)| vec![i + 1, 2 * n + 1 - p])
            .collect();
        Diagram::from_blocks(n, Kind::Full, &blocks)
    }

    pub fn in_kind(d: Result<Diagram>, kind: Kind) -> Result<Diagram> {
        match kind {
            Kind::Full => d,
            Kind::Bullet => d?.project(),
        }
    }
}

/// The isomorphism `J_{2n} → PP_n`: dots `2b - 1, 2b` of the Jones diagram
/// (in boundary order) collapse to dot `b`.
pub fn jones_to_planar(d: &Diagram) -> Result<Diagram> {
    if d.kind != Kind::Full || d.n % 2 != 0 || !crate::family::Family::J.contains(d) {
        return Err(Error::Membership("J_{2n}".into()));
    }
    let half = d.n / 2;
    let mut uf = UnionFind::new(2 * half);
    for b in 1..=2 * half {
        let partner = d
            .partition
            .block_containing(2 * b)
            .into_iter()
            .find(|&x| x != 2 * b)
            .expect("perfect matching");
        uf.union(b - 1, (partner + 1) / 2 - 1);
    }
    let raw: Vec<usize> = (0..2 * half).map(|i| uf.find(i)).collect();
    Diagram::new(half, Kind::Full, SetPartition::from_raw_labels(&raw))
}

/// Inverse of [`jones_to_planar`].
pub fn planar_to_jones(d: &Diagram) -> Result<Diagram> {
    if d.kind != Kind::Full || !d.is_planar() {
        return Err(Error::Membership("PP_n".into()));
    }
    let mut pairs = Vec::new();
    for block in d.partition.blocks() {
        let s = block.len();
        for k in 0..s {
            let next = block[(k + 1) % s];
            pairs.push(vec![2 * block[k], 2 * next - 1]);
        }
    }
    Diagram::from_blocks(2 * d.n, Kind::Full, &pairs)
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if self.kind == Kind::Bullet {
            write!(f, " bullet")?;
        }
        if self.ground_size() > 0 {
            write!(f, " {}", self.partition)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram({self})")
    }
}

/// Splits off a leading `n=<k>` and optional `bullet` marker.
pub(crate) fn parse_header(s: &str) -> Result<(usize, Kind, &str)> {
    let rest = s
        .trim_start()
        .strip_prefix("n=")
        .ok_or_else(|| Error::Parse("a diagram literal starts with `n=`".into()))?;
    let digits = rest.chars().take_while(|c| c.is_ascii_digit()).count();
    let n = rest[..digits]
        .parse::<usize>()
        .map_err(|_| Error::Parse("bad strand count".into()))?;
    let rest = rest[digits..].trim_start();
    match rest.strip_prefix("bullet") {
        Some(r) => Ok((n, Kind::Bullet, r)),
        None => Ok((n, Kind::Full, rest)),
    }
}

impl FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, kind, body) = parse_header(s)?;
        let blocks = parse_blocks(body)?;
        Diagram::from_blocks(n, kind, &blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::gen::*;
    use super::*;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn identity_layout() {
        assert_eq!(Diagram::identity(2, Kind::Full), d("n=2 {1,4}{2,3}"));
        assert_eq!(Diagram::identity(2, Kind::Bullet), d("n=2 bullet {1,3}{2}"));
        assert_eq!(Diagram::identity(1, Kind::Bullet).ground_size(), 1);
    }

    #[test]
    fn generator_blocks() {
        assert_eq!(r(2, 1).unwrap(), d("n=2 {1}{2,3}{4}"));
        assert_eq!(h(2, 1).unwrap(), d("n=2 {1,2,3,4}"));
        assert_eq!(t(2, 1).unwrap(), d("n=2 {1,2}{3,4}"));
        assert_eq!(s(2, 1).unwrap(), d("n=2 {1,3}{2,4}"));
        assert!(s(2, 2).is_err());
        assert!(r(2, 3).is_err());
        let s1 = s(3, 1).unwrap();
        let s2 = s(3, 2).unwrap();
        let word = s1.concat(&s2).unwrap().concat(&s1).unwrap();
        assert_eq!(w(3, 1, 3).unwrap(), word);
    }

    #[test]
    fn basic_relations() {
        let id = Diagram::identity(2, Kind::Full);
        let s1 = s(2, 1).unwrap();
        assert_eq!(s1.concat(&s1).unwrap(), id);
        let t1 = t(3, 1).unwrap();
        let t2 = t(3, 2).unwrap();
        assert_eq!(t1.concat(&t2).unwrap().concat(&t1).unwrap(), t1);
    }

    #[test]
    fn concat_moves_top_to_bottom() {
        // s_1 s_2 at n = 3 sends top 1 -> 2 -> 3
        let p = s(3, 1).unwrap().concat(&s(3, 2).unwrap()).unwrap();
        assert_eq!(p, permutation(&[3, 1, 2]).unwrap());
    }

    #[test]
    fn classification() {
        let id = Diagram::identity(3, Kind::Full);
        assert_eq!(id.classify_block(&[1, 6]).unwrap(), BlockKind::Line);
        let t1 = t(3, 1).unwrap();
        assert_eq!(t1.classify_block(&[1, 2]).unwrap(), BlockKind::Bracket);
        let g = d("n=3 {1,2,6}{3,4}{5}");
        assert_eq!(
            g.classify_block(&[1, 2, 6]).unwrap(),
            BlockKind::GeneralizedLine
        );
        assert_eq!(g.classify_block(&[5]).unwrap(), BlockKind::Point);
        assert!(g.classify_block(&[1, 2]).is_err());
        let o = d("n=3 {1,2,3}{4}{5}{6}");
        assert_eq!(o.classify_block(&[1, 2, 3]).unwrap(), BlockKind::Other);
    }

    #[test]
    fn planarity_of_generators() {
        assert!(Diagram::identity(4, Kind::Full).is_planar());
        assert!(!s(3, 1).unwrap().is_planar());
        for i in 1..3 {
            assert!(t(3, i).unwrap().is_planar());
            assert!(h(3, i).unwrap().is_planar());
            assert!(r(3, i).unwrap().is_planar());
        }
    }

    #[test]
    fn bullet_embedding() {
        let id = Diagram::identity(3, Kind::Bullet);
        assert_eq!(id.embed(), Diagram::identity(3, Kind::Full));
        assert_eq!(
            d("n=2 bullet {1,3}{2}").embed(),
            Diagram::identity(2, Kind::Full)
        );
        assert!(s(2, 1).unwrap().project().is_err());
        let b = r(3, 1).unwrap().project().unwrap();
        assert_eq!(b.embed().project().unwrap(), b);
    }

    #[test]
    fn jones_iso_on_generators() {
        for i in 1..=2 {
            assert_eq!(
                jones_to_planar(&t(4, 2 * i - 1).unwrap()).unwrap(),
                r(2, i).unwrap()
            );
        }
        assert_eq!(
            jones_to_planar(&t(4, 2).unwrap()).unwrap(),
            h(2, 1).unwrap()
        );
        let h1 = h(2, 1).unwrap();
        assert_eq!(planar_to_jones(&h1).unwrap(), t(4, 2).unwrap());
        assert!(jones_to_planar(&s(4, 1).unwrap()).is_err());
    }

    #[test]
    fn flip_is_an_anti_involution() {
        let a = d("n=3 {1,2,6}{3,4}{5}");
        let b = t(3, 2).unwrap();
        assert_eq!(a.flip().flip(), a);
        assert_eq!(
            a.concat(&b).unwrap().flip(),
            b.flip().concat(&a.flip()).unwrap()
        );
    }

    #[test]
    fn literal_round_trip() {
        let a = d("n=5 {1,8}{2,4,10}{3}{5,6,9}{7}");
        assert_eq!(a.to_string().parse::<Diagram>().unwrap(), a);
        let b = d("n=5 bullet {1,3,5}{2,7,8}{4,6,9}");
        assert_eq!(b.kind(), Kind::Bullet);
        assert_eq!(b.to_string(), "n=5 bullet {1,3,5}{2,7,8}{4,6,9}");
        assert!("n=2 {1,2}".parse::<Diagram>().is_err());
    }
}
