//! Ramified partitions `(I, J)` with `I ⪯ J` and the componentwise product.

use std::fmt;
use std::str::FromStr;

use crate::diagram::{gen, parse_header, Diagram, Kind};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::partition::{parse_blocks, SetPartition};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RamifiedPartition {
    shape: Diagram,
    // kept as a diagram so the product is two concatenations
    ties: Diagram,
}

impl RamifiedPartition {
    pub fn new(shape: Diagram, ties: SetPartition) -> Result<Self> {
        let ties = Diagram::new(shape.n(), shape.kind(), ties)?;
        Self::from_diagrams(shape, ties)
    }

    pub fn from_diagrams(shape: Diagram, ties: Diagram) -> Result<Self> {
        shape.check_compatible(&ties)?;
        if !shape.partition().refines_unchecked(ties.partition()) {
            let witness = shape
                .partition()
                .blocks()
                .into_iter()
                .find(|b| b.iter().any(|&e| !ties.partition().same_block(b[0], e)))
                .unwrap_or_default();
            return Err(Error::Refinement { block: witness });
        }
        Ok(RamifiedPartition { shape, ties })
    }

    pub(crate) fn from_diagrams_unchecked(shape: Diagram, ties: Diagram) -> Self {
        debug_assert!(shape.partition().refines_unchecked(ties.partition()));
        RamifiedPartition { shape, ties }
    }

    /// The embedding `I ↦ (I, I)`.
    pub fn embed(shape: &Diagram) -> Self {
        RamifiedPartition {
            shape: shape.clone(),
            ties: shape.clone(),
        }
    }

    pub fn identity(n: usize, kind: Kind) -> Self {
        Self::embed(&Diagram::identity(n, kind))
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn kind(&self) -> Kind {
        self.shape.kind()
    }

    pub fn shape(&self) -> &Diagram {
        &self.shape
    }

    pub fn ties(&self) -> &SetPartition {
        self.ties.partition()
    }

    pub fn ties_diagram(&self) -> &Diagram {
        &self.ties
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.shape.check_compatible(&other.shape)?;
        Ok(self.product_unchecked(other))
    }

    pub(crate) fn product_unchecked(&self, other: &Self) -> Self {
        RamifiedPartition {
            shape: self.shape.concat_unchecked(&other.shape),
            ties: self.ties.concat_unchecked(&other.ties),
        }
    }

    /// Top/bottom mirror image, an anti-automorphism of the monoid.
    pub fn flip(&self) -> Self {
        RamifiedPartition {
            shape: self.shape.flip(),
            ties: self.ties.flip(),
        }
    }

    pub fn in_ramified(&self, family: Family) -> bool {
        family.contains(&self.shape)
    }

    pub fn in_planar_ramified(&self, family: Family) -> bool {
        family.contains(&self.shape) && self.ties.is_planar()
    }

    /// Splits `a = (e, J g⁻¹)·(g, g)` with `e` in `I_n` and `g` the completed
    /// permutation of the shape.
    pub fn factor_eg(&self) -> Result<(RamifiedPartition, Diagram)> {
        if self.kind() != Kind::Full || !Family::IS.contains(&self.shape) {
            return Err(Error::Membership("R(IS_n)".into()));
        }
        let g = crate::normal_form::isn::completed_permutation(&self.shape)?;
        let g_inv = g.flip();
        let e = self.shape.concat_unchecked(&g_inv);
        let ties = self.ties.concat_unchecked(&g_inv);
        Ok((RamifiedPartition::from_diagrams(e, ties)?, g))
    }

    /// Some `b` with `aba = a` and `bab = b`. Tries `g⁻¹e` from the
    /// factorisation first and falls back to the mirror image, which always
    /// works because concatenation satisfies `x x* x = x`.
    pub fn regularity_witness(&self) -> Result<RamifiedPartition> {
        let (e, g) = self.factor_eg()?;
        let candidate = RamifiedPartition::embed(&g.flip()).product_unchecked(&e);
        if self.is_inverse_pair(&candidate) {
            return Ok(candidate);
        }
        Ok(self.flip())
    }

    pub fn is_inverse_pair(&self, b: &Self) -> bool {
        self.product_unchecked(b).product_unchecked(self) == *self
            && b.product_unchecked(self).product_unchecked(b) == *b
    }
}

/// Ramified generators on `n` full strands.
pub mod rgen {
    use super::*;

    fn full(n: usize, shape: Diagram, ties: Vec<Vec<usize>>) -> RamifiedPartition {
        let ties = Diagram::from_blocks(n, Kind::Full, &ties).expect("valid tie blocks");
        RamifiedPartition::from_diagrams(shape, ties).expect("generator shapes refine their ties")
    }

    /// Tie blocks: verticals on untouched columns, singletons for `loose`
    /// columns, plus the listed extra blocks.
    fn tie_blocks(n: usize, loose: &[usize], extra: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let used: Vec<usize> = extra.iter().flatten().copied().collect();
        let mut out = extra;
        for c in 1..=n {
            let b = 2 * n + 1 - c;
            if loose.contains(&c) {
                if !used.contains(&c) {
                    out.push(vec![c]);
                }
                if !used.contains(&b) {
                    out.push(vec![b]);
                }
            } else if !used.contains(&c) {
                out.push(vec![c, b]);
            }
        }
        out
    }

    fn points(n: usize, cols: impl IntoIterator<Item = usize>) -> Result<Diagram> {
        let mut d = Diagram::identity(n, Kind::Full);
        for c in cols {
            d = d.concat_unchecked(&gen::r(n, c)?);
        }
        Ok(d)
    }

    fn range_check(n: usize, i: usize, j: usize, name: &str) -> Result<()> {
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::Index(format!(
                "{name}{i},{j} needs 1 <= i < j <= {n}"
            )));
        }
        Ok(())
    }

    pub fn q(n: usize, i: usize) -> Result<RamifiedPartition> {
        let shape = gen::r(n, i)?;
        Ok(full(n, shape, tie_blocks(n, &[], vec![])))
    }

    /// `e_i`: the adjacent columns `i, i + 1` tied.
    pub fn e(n: usize, i: usize) -> Result<RamifiedPartition> {
        if i == 0 || i >= n {
            return Err(Error::Index(format!(
                "e{i} needs 1 <= i <= {}",
                n.saturating_sub(1)
            )));
        }
        tie(n, i, i + 1)
    }

    /// `e_{i,j}`: columns `i` and `j` tied.
    pub fn tie(n: usize, i: usize, j: usize) -> Result<RamifiedPartition> {
        range_check(n, i, j, "e")?;
        let block = vec![i, j, 2 * n + 1 - j, 2 * n + 1 - i];
        Ok(full(
            n,
            Diagram::identity(n, Kind::Full),
            tie_blocks(n, &[], vec![block]),
        ))
    }

    /// `x_{i,j} = (r_i r_j, s_{i,j})`.
    pub fn x(n: usize, i: usize, j: usize) -> Result<RamifiedPartition> {
        range_check(n, i, j, "x")?;
        let shape = points(n, [i, j])?;
        let ties = vec![vec![i, 2 * n + 1 - j], vec![j, 2 * n + 1 - i]];
        Ok(full(n, shape, tie_blocks(n, &[], ties)))
    }

    /// `f_i = (t_i, h_i)`.
    pub fn f(n: usize, i: usize) -> Result<RamifiedPartition> {
        let shape = gen::t(n, i)?;
        let ties = gen::h(n, i)?;
        Ok(RamifiedPartition::from_diagrams(shape, ties).expect("t_i refines h_i"))
    }

    /// `ē_{i,j}`: columns `i` and `j` tied, points strictly between.
    pub fn eb(n: usize, i: usize, j: usize) -> Result<RamifiedPartition> {
        range_check(n, i, j, "eb")?;
        let shape = points(n, i + 1..j)?;
        let block = vec![i, j, 2 * n + 1 - j, 2 * n + 1 - i];
        let loose: Vec<usize> = (i + 1..j).collect();
        Ok(full(n, shape, tie_blocks(n, &loose, vec![block])))
    }

    /// `x̄_{i,j}`: points on the columns between `i` and `j` inclusive, with
    /// the bottom dot of column `i` tied to the top dot of column `j`.
    pub fn xb(n: usize, i: usize, j: usize) -> Result<RamifiedPartition> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::Index(format!("xb{i},{j} needs indices in [1, {n}]")));
        }
        if i == j {
            return q(n, i);
        }
        let (lo, hi) = (i.min(j), i.max(j));
        let shape = points(n, lo..=hi)?;
        let loose: Vec<usize> = (lo..=hi).collect();
        let block = vec![j, 2 * n + 1 - i];
        Ok(full(n, shape, tie_blocks(n, &loose, vec![block])))
    }

    pub fn in_kind(a: Result<RamifiedPartition>, kind: Kind) -> Result<RamifiedPartition> {
        match kind {
            Kind::Full => a,
            Kind::Bullet => {
                let a = a?;
                RamifiedPartition::from_diagrams(a.shape.project()?, a.ties.project()?)
            }
        }
    }
}

/// A ramified monoid `R(M)` or its planar version `PR(M)` over a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RamFamily {
    pub base: Family,
    pub planar: bool,
}

impl RamFamily {
    pub fn ramified(base: Family) -> Self {
        RamFamily {
            base,
            planar: false,
        }
    }

    pub fn planar(base: Family) -> Self {
        RamFamily { base, planar: true }
    }

    pub fn contains(&self, a: &RamifiedPartition) -> bool {
        if self.planar {
            a.in_planar_ramified(self.base)
        } else {
            a.in_ramified(self.base)
        }
    }

    /// Shapes in family order, then (noncrossing) coarsenings in
    /// restricted-growth order.
    pub fn enumerate(&self, n: usize, kind: Kind, bound: usize) -> Result<Vec<RamifiedPartition>> {
        let mut out = Vec::new();
        for shape in self.base.enumerate(n, kind, bound)? {
            for ties in shape.partition().coarsenings() {
                if self.planar && !ties.is_noncrossing() {
                    continue;
                }
                if out.len() >= bound {
                    return Err(Error::BoundExceeded { bound });
                }
                let ties = Diagram::new(n, kind, ties)?;
                out.push(RamifiedPartition::from_diagrams_unchecked(
                    shape.clone(),
                    ties,
                ));
            }
        }
        Ok(out)
    }
}

/// `(1, J) ↦ J ∩ [n]`: the correspondence between `R({1})` and `P_n`.
pub fn column_partition(a: &RamifiedPartition) -> Result<SetPartition> {
    if *a.shape() != Diagram::identity(a.n(), a.kind()) {
        return Err(Error::Membership("R({1})".into()));
    }
    a.ties().restrict(&(1..=a.n()).collect::<Vec<_>>())
}

/// Inverse of [`column_partition`].
pub fn from_column_partition(p: &SetPartition) -> RamifiedPartition {
    let n = p.ground_size();
    let raw: Vec<u16> = (1..=2 * n)
        .map(|e| p.labels()[if e <= n { e - 1 } else { 2 * n - e }])
        .collect();
    let ties =
        Diagram::new(n, Kind::Full, SetPartition::from_raw_labels(&raw)).expect("ground size 2n");
    RamifiedPartition::from_diagrams_unchecked(Diagram::identity(n, Kind::Full), ties)
}

impl fmt::Display for RamifiedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n())?;
        if self.kind() == Kind::Bullet {
            write!(f, " bullet")?;
        }
        write!(
            f,
            " shape {} ties {}",
            self.shape.partition(),
            self.ties.partition()
        )
    }
}

impl fmt::Debug for RamifiedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ramified({self})")
    }
}

impl FromStr for RamifiedPartition {
    type Err = Error;

    /// `n=4 shape {1,6}{2}... ties {1,6}{2,4,7,8}...`
    fn from_str(s: &str) -> Result<Self> {
        let (n, kind, body) = parse_header(s)?;
        let body = body
            .trim_start()
            .strip_prefix("shape")
            .ok_or_else(|| Error::Parse("expected `shape`".into()))?;
        let (shape, ties) = body
            .split_once("ties")
            .ok_or_else(|| Error::Parse("expected `ties`".into()))?;
        let shape = Diagram::from_blocks(n, kind, &parse_blocks(shape)?)?;
        let ties = Diagram::from_blocks(n, kind, &parse_blocks(ties)?)?;
        RamifiedPartition::from_diagrams(shape, ties)
    }
}

#[cfg(test)]
mod tests {
    use super::rgen::*;
    use super::*;

    fn mul(a: &RamifiedPartition, b: &RamifiedPartition) -> RamifiedPartition {
        a.product(b).unwrap()
    }

    #[test]
    fn construction_checks_refinement() {
        let id = Diagram::identity(2, Kind::Full);
        assert!(RamifiedPartition::new(id.clone(), SetPartition::full(4)).is_ok());
        let full = Diagram::new(2, Kind::Full, SetPartition::full(4)).unwrap();
        let err = RamifiedPartition::new(full, id.into_partition());
        assert_eq!(
            err,
            Err(Error::Refinement {
                block: vec![1, 2, 3, 4]
            })
        );
    }

    #[test]
    fn generator_relations() {
        for i in 1..=3 {
            let qi = q(3, i).unwrap();
            assert_eq!(mul(&qi, &qi), qi);
        }
        let x12 = x(2, 1, 2).unwrap();
        assert_eq!(mul(&x12, &x12), mul(&q(2, 1).unwrap(), &q(2, 2).unwrap()));
        let f1 = f(3, 1).unwrap();
        assert_eq!(mul(&f1, &f1), f1);
        assert_eq!(
            q(2, 2).unwrap().to_string(),
            "n=2 shape {1,4}{2}{3} ties {1,4}{2,3}"
        );
        assert_eq!(
            e(2, 1).unwrap().to_string(),
            "n=2 shape {1,4}{2,3} ties {1,2,3,4}"
        );
    }

    fn word(n: usize, letters: &[RamifiedPartition]) -> RamifiedPartition {
        letters
            .iter()
            .fold(RamifiedPartition::identity(n, Kind::Full), |acc, g| {
                mul(&acc, g)
            })
    }

    fn r(n: usize, i: usize) -> RamifiedPartition {
        RamifiedPartition::embed(&gen::r(n, i).unwrap())
    }

    #[test]
    fn bar_generators_match_their_words() {
        let n = 5;
        for i in 1..=n {
            for j in 1..=n {
                let direct = xb(n, i, j).unwrap();
                let (lo, hi) = (i.min(j), i.max(j));
                let mut letters = Vec::new();
                if i == j {
                    letters.push(q(n, i).unwrap());
                } else if i < j {
                    letters.extend((i..j).map(|k| r(n, k)));
                    letters.extend((i..j).map(|k| e(n, k).unwrap()));
                    letters.extend((i + 1..=j).map(|k| r(n, k)));
                } else {
                    letters.extend((lo + 1..=hi).map(|k| r(n, k)));
                    letters.extend((lo..hi).map(|k| e(n, k).unwrap()));
                    letters.extend((lo..hi).map(|k| r(n, k)));
                }
                assert_eq!(word(n, &letters), direct, "xb{i},{j}");
                if i < j {
                    let mut letters: Vec<_> = (i + 1..j).map(|k| r(n, k)).collect();
                    letters.extend((i..j).map(|k| e(n, k).unwrap()));
                    letters.extend((i + 1..j).map(|k| r(n, k)));
                    assert_eq!(word(n, &letters), eb(n, i, j).unwrap(), "eb{i},{j}");
                }
            }
        }
    }

    #[test]
    fn tie_and_x_words() {
        let n = 4;
        // e_{1,3} = s_2 e_1 s_2
        let s2 = RamifiedPartition::embed(&gen::s(n, 2).unwrap());
        assert_eq!(
            word(n, &[s2.clone(), e(n, 1).unwrap(), s2]),
            tie(n, 1, 3).unwrap()
        );
        // x_{i,j} = q_i q_j s_{i,j}
        let w = RamifiedPartition::embed(&gen::w(n, 2, 4).unwrap());
        assert_eq!(
            word(n, &[q(n, 2).unwrap(), q(n, 4).unwrap(), w]),
            x(n, 2, 4).unwrap()
        );
    }

    #[test]
    fn factor_and_witness() {
        let a: RamifiedPartition = "n=4 shape {1,6}{2}{3,5}{4}{7}{8} ties {1,6}{2,4,7,8}{3,5}"
            .parse()
            .unwrap();
        let (e, g) = a.factor_eg().unwrap();
        assert!(Family::I.contains(e.shape()));
        assert!(Family::S.contains(&g));
        assert_eq!(mul(&e, &RamifiedPartition::embed(&g)), a);
        let b = a.regularity_witness().unwrap();
        assert!(a.is_inverse_pair(&b));
    }

    #[test]
    fn enumeration_sizes() {
        let count = |f: RamFamily, n| f.enumerate(n, Kind::Full, 1 << 24).unwrap().len();
        assert_eq!(count(RamFamily::ramified(Family::IS), 2), 39);
        assert_eq!(count(RamFamily::planar(Family::J), 2), 4);
        assert_eq!(count(RamFamily::ramified(Family::I), 1), 3);
        assert_eq!(count(RamFamily::planar(Family::I), 2), 26);
    }

    #[test]
    fn column_correspondence() {
        for p in crate::partition::enumerate_set_partitions(3) {
            let a = from_column_partition(&p);
            assert_eq!(column_partition(&a).unwrap(), p);
        }
    }

    #[test]
    fn literal_round_trip() {
        let a = f(3, 2).unwrap();
        assert_eq!(a.to_string().parse::<RamifiedPartition>().unwrap(), a);
        assert!("n=2 shape {1,2,3,4} ties {1,4}{2,3}"
            .parse::<RamifiedPartition>()
            .is_err());
    }
}
