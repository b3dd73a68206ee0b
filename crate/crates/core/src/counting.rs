//! Exact cardinalities, the triangle `T(m, k)` and the reference tables.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::partition::{bell, SetPartition};
use crate::tag::Tag;

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// `C(4, n) = binom(4n, n) / (3n + 1)`.
pub fn fuss_catalan4(n: usize) -> BigUint {
    binomial(4 * n, n) / (3 * n + 1)
}

/// Exact size of the monoid `tag` on `n` strands.
pub fn card(tag: Tag, n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Invalid("cardinalities start at n = 1".into()));
    }
    let sum = |range: std::ops::RangeInclusive<usize>, f: &dyn Fn(usize) -> BigUint| {
        range.map(f).fold(BigUint::zero(), |a, b| a + b)
    };
    // partial permutations of rank k, and their bullet analogue
    let is_k = |k: usize| factorial(k) * binomial(n, k) * binomial(n, k);
    let isb_k = |k: usize| factorial(k) * binomial(n, k) * binomial(n - 1, k);
    Ok(match tag {
        Tag::P => bell(n),
        Tag::S => factorial(n),
        Tag::IS => sum(0..=n, &is_k),
        Tag::ISb => sum(0..=n - 1, &isb_k),
        Tag::I => BigUint::one() << n,
        Tag::Ib => BigUint::one() << (n - 1),
        Tag::J => catalan(n),
        Tag::PP => catalan(2 * n),
        Tag::RS => factorial(n) * bell(n),
        Tag::RIS => sum(0..=n, &|k| is_k(k) * bell(2 * n - k)),
        Tag::RISb => sum(0..=n - 1, &|k| isb_k(k) * bell(2 * n - 1 - k)),
        Tag::RI => sum(0..=n, &|k| binomial(n, k) * bell(2 * n - k)),
        Tag::RIb => sum(0..=n - 1, &|k| binomial(n - 1, k) * bell(2 * n - 1 - k)),
        Tag::PRI => triangle_rows(2 * n)[2 * n - 1].iter().sum(),
        Tag::PRIb => triangle_rows(2 * n - 1)[2 * n - 2].iter().sum(),
        Tag::PRJ => fuss_catalan4(n),
    })
}

/// Rows `1..=m` of the triangle by the recursion: a new point may join any
/// of the `j ≥ k − 1` connectable blocks, or stand alone, doubled when it
/// is a bottom point that may close a vertical line.
pub fn triangle_rows(m: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(m);
    if m == 0 {
        return rows;
    }
    rows.push(vec![BigUint::one()]);
    for row in 2..=m {
        let prev = &rows[row - 2];
        let mut next = Vec::with_capacity(row);
        for k in 1..=row {
            let v: BigUint = if k == 1 {
                let e = (row - 1) % 2;
                prev.iter().sum::<BigUint>() * (1 + e)
            } else {
                prev[k - 2..].iter().sum()
            };
            next.push(v);
        }
        rows.push(next);
    }
    rows
}

pub fn triangle_rec(m: usize, k: usize) -> Result<BigUint> {
    if k == 0 || k > m {
        return Err(Error::Index(format!("T({m}, {k})")));
    }
    Ok(triangle_rows(m)[m - 1][k - 1].clone())
}

/// Number of blocks of `j` that a point inserted right after position
/// `tops` can join without a crossing.
pub fn connectable_count(j: &SetPartition, tops: usize) -> Result<usize> {
    if !j.is_noncrossing() {
        return Err(Error::Invalid(
            "connectable blocks of a crossing partition".into(),
        ));
    }
    let m = j.ground_size();
    if tops > m {
        return Err(Error::Index(format!("{tops} tops of {m} points")));
    }
    let mut count = 0;
    for block in j.blocks() {
        let mut blocks: Vec<Vec<usize>> = j
            .blocks()
            .into_iter()
            .map(|b| {
                b.into_iter()
                    .map(|x| if x > tops { x + 1 } else { x })
                    .collect()
            })
            .collect();
        let target = blocks
            .iter()
            .position(|b| {
                b.contains(
                    &(if block[0] > tops {
                        block[0] + 1
                    } else {
                        block[0]
                    }),
                )
            })
            .expect("block survives the shift");
        blocks[target].push(tops + 1);
        if SetPartition::from_blocks(m + 1, &blocks)?.is_noncrossing() {
            count += 1;
        }
    }
    Ok(count)
}

/// `T(m, ·)` by direct count over the planar ramified prefixes of length
/// `m`: points are tops `1..=t` followed by the bottoms from right to left,
/// so column `i` has its top at `i` and its bottom at `m + 1 − i`.
pub fn triangle_brute_row(m: usize) -> Result<Vec<u64>> {
    if m == 0 || m > 12 {
        return Err(Error::Invalid(format!(
            "brute-force triangle row {m} out of range 1..=12"
        )));
    }
    let tops = m.div_ceil(2);
    let bottoms = m / 2;
    let mut row = vec![0u64; m];
    for mask in 0u32..(1 << bottoms) {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for i in 1..=tops {
            if i <= bottoms && mask & (1 << (i - 1)) != 0 {
                blocks.push(vec![i, m + 1 - i]);
            } else {
                blocks.push(vec![i]);
                if i <= bottoms {
                    blocks.push(vec![m + 1 - i]);
                }
            }
        }
        let shape = SetPartition::from_blocks(m, &blocks)?;
        for ties in shape.coarsenings() {
            if ties.is_noncrossing() {
                row[connectable_count(&ties, tops)? - 1] += 1;
            }
        }
    }
    Ok(row)
}

pub fn triangle_brute(m: usize, k: usize) -> Result<u64> {
    if k == 0 || k > m {
        return Err(Error::Index(format!("T({m}, {k})")));
    }
    Ok(triangle_brute_row(m)?[k - 1])
}

#[derive(Deserialize)]
pub struct GoldRow {
    pub family: String,
    pub values: Vec<u64>,
    pub oeis: Option<String>,
}

#[derive(Deserialize)]
pub struct GoldTriangle {
    pub rows: Vec<Vec<u64>>,
}

#[derive(Deserialize)]
pub struct Gold {
    pub table: Vec<GoldRow>,
    pub triangle: GoldTriangle,
}

pub fn gold() -> &'static Gold {
    static GOLD: OnceLock<Gold> = OnceLock::new();
    GOLD.get_or_init(|| {
        toml::from_str(include_str!("../data/gold.toml")).expect("built-in reference table parses")
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub what: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Default)]
pub struct TableReport {
    pub cardinalities: usize,
    pub triangle_entries: usize,
    pub mismatches: Vec<Mismatch>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} cardinalities and {} triangle entries compared, {} mismatches",
            self.cardinalities,
            self.triangle_entries,
            self.mismatches.len()
        )?;
        for m in &self.mismatches {
            write!(f, "\n  {}: expected {}, got {}", m.what, m.expected, m.got)?;
        }
        Ok(())
    }
}

/// Compares `card` with the reference table, and both the recursion and
/// the direct count with the reference triangle.
pub fn verify_tables() -> Result<TableReport> {
    let mut report = TableReport::default();
    let mut check = |what: String, expected: String, got: String| {
        if expected != got {
            report.mismatches.push(Mismatch {
                what,
                expected,
                got,
            });
        }
    };
    let g = gold();
    let mut cards = 0;
    for row in &g.table {
        let tag: Tag = row.family.parse()?;
        for (k, v) in row.values.iter().enumerate() {
            let n = k + 1;
            check(
                format!("{tag} n={n}"),
                v.to_string(),
                card(tag, n)?.to_string(),
            );
            cards += 1;
        }
    }
    let m_max = g.triangle.rows.len();
    let rec = triangle_rows(m_max);
    let mut entries = 0;
    for (mi, row) in g.triangle.rows.iter().enumerate() {
        let m = mi + 1;
        let brute = triangle_brute_row(m)?;
        for (ki, v) in row.iter().enumerate() {
            let k = ki + 1;
            check(
                format!("T({m},{k}) recursion"),
                v.to_string(),
                rec[mi][ki].to_string(),
            );
            check(
                format!("T({m},{k}) direct count"),
                v.to_string(),
                brute[ki].to_string(),
            );
            entries += 1;
        }
    }
    report.cardinalities = cards;
    report.triangle_entries = entries;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(tag: Tag, n: usize) -> u64 {
        card(tag, n).unwrap().try_into().unwrap()
    }

    #[test]
    fn reference_tables_match() {
        let r = verify_tables().unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!((r.cardinalities, r.triangle_entries), (42, 28));
    }

    #[test]
    fn simple_cardinalities() {
        assert_eq!(c(Tag::RIS, 3), 971);
        assert_eq!(c(Tag::PRJ, 6), 7084);
        assert_eq!(c(Tag::RI, 1), 3);
        assert_eq!(c(Tag::IS, 3), 34);
        assert_eq!(c(Tag::ISb, 3), 13);
        assert_eq!(c(Tag::PP, 3), 132);
        assert_eq!(c(Tag::RS, 3), 30);
        assert!(card(Tag::P, 0).is_err());
    }

    #[test]
    fn cardinalities_match_enumeration() {
        for tag in Tag::ALL {
            for n in 1..=3 {
                let listed = tag.enumerate(n, 1 << 20).unwrap().len() as u64;
                assert_eq!(c(tag, n), listed, "{tag} n={n}");
            }
        }
    }

    #[test]
    fn triangle_corners() {
        assert_eq!(triangle_rec(4, 1).unwrap(), BigUint::from(14u32));
        assert_eq!(triangle_rec(7, 3).unwrap(), BigUint::from(139u32));
        assert!(triangle_rec(3, 4).is_err());
        assert_eq!(triangle_brute(6, 1).unwrap(), 140);
        assert_eq!(triangle_brute_row(4).unwrap().iter().sum::<u64>(), 26);
        for m in 1..=7 {
            assert_eq!(triangle_rec(m, m).unwrap(), BigUint::one());
        }
    }

    #[test]
    fn recursion_agrees_with_count_beyond_the_table() {
        let rec = triangle_rows(10);
        for m in 8..=10 {
            let brute = triangle_brute_row(m).unwrap();
            let rec: Vec<u64> = rec[m - 1].iter().map(|v| v.try_into().unwrap()).collect();
            assert_eq!(brute, rec, "m={m}");
        }
    }

    #[test]
    fn connectable_blocks() {
        let one = SetPartition::identity(1);
        assert_eq!(connectable_count(&one, 1).unwrap(), 1);
        assert_eq!(connectable_count(&SetPartition::full(5), 3).unwrap(), 1);
        // a point between 2 and 3 reaches {1,3} and {2} but not {4}
        let p = SetPartition::from_blocks(4, &[vec![1, 3], vec![2], vec![4]]).unwrap();
        assert_eq!(connectable_count(&p, 2).unwrap(), 2);
        let crossing = SetPartition::from_blocks(4, &[vec![1, 3], vec![2, 4]]).unwrap();
        assert!(connectable_count(&crossing, 2).is_err());
    }

    #[test]
    fn fuss_catalan_and_row_sums() {
        let fc = [1u64, 1, 4, 22, 140, 969, 7084, 53820, 420732];
        for (n, v) in fc.iter().enumerate() {
            assert_eq!(fuss_catalan4(n), BigUint::from(*v));
        }
        for n in 1..=4 {
            let pri: u64 = triangle_brute_row(2 * n).unwrap().iter().sum();
            let prib: u64 = triangle_brute_row(2 * n - 1).unwrap().iter().sum();
            assert_eq!(pri, c(Tag::PRI, n));
            assert_eq!(prib, c(Tag::PRIb, n));
        }
    }
}
