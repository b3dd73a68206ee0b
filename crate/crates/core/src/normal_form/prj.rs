//! The planar ramified Jones monoid: a(I), b(I), flatness, the re-pairing
//! of horizontally tied arcs and the `Ĥ` run normal form.

use std::collections::BTreeSet;

use crate::diagram::{Diagram, Kind};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::normal_form::NormalForm;
use crate::partition::SetPartition;
use crate::ramified::RamifiedPartition;
use crate::union_find::UnionFind;
use crate::word::{Sym, Token, Word};

/// An arc as its two elements, `u < v`.
pub type Arc = (usize, usize);

fn prime(n: usize, e: usize) -> usize {
    if e <= n {
        e
    } else {
        2 * n + 1 - e
    }
}

fn span(n: usize, (u, v): Arc) -> (usize, usize) {
    let (a, b) = (prime(n, u), prime(n, v));
    (a.min(b), a.max(b))
}

fn crosses((a, b): Arc, (c, d): Arc) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

fn require_j(d: &Diagram) -> Result<()> {
    if d.kind() != Kind::Full || !Family::J.contains(d) {
        return Err(Error::Membership("J_n".into()));
    }
    Ok(())
}

pub fn arcs(d: &Diagram) -> Vec<Arc> {
    d.partition()
        .blocks()
        .into_iter()
        .map(|b| (b[0], b[1]))
        .collect()
}

/// `j` such that `j + 1` is the upper right endpoint of an arc.
pub fn a_set(d: &Diagram) -> Result<BTreeSet<usize>> {
    require_j(d)?;
    let n = d.n();
    let mut out = BTreeSet::new();
    for (u, v) in arcs(d) {
        if v <= n {
            out.insert(v - 1);
        } else if u <= n && u > prime(n, v) {
            out.insert(u - 1);
        }
    }
    Ok(out)
}

/// `i` such that bottom position `i` is the lower left endpoint of an arc.
pub fn b_set(d: &Diagram) -> Result<BTreeSet<usize>> {
    require_j(d)?;
    let n = d.n();
    let mut out = BTreeSet::new();
    for (u, v) in arcs(d) {
        if u > n {
            out.insert(prime(n, v));
        } else if v > n && u > prime(n, v) {
            out.insert(prime(n, v));
        }
    }
    Ok(out)
}

/// The runs `H(i_k, j_k)` as index pairs.
pub fn runs(d: &Diagram) -> Result<Vec<(usize, usize)>> {
    let a = a_set(d)?;
    let b = b_set(d)?;
    Ok(b.into_iter().zip(a).collect())
}

/// The other noncrossing pairing of the four endpoints of `x` and `y`.
fn repair(x: Arc, y: Arc) -> (Arc, Arc) {
    let mut p = [x.0, x.1, y.0, y.1];
    p.sort_unstable();
    let [a, b, c, d] = p;
    if (x == (a, d) || y == (a, d)) && (x == (b, c) || y == (b, c)) {
        ((a, b), (c, d))
    } else {
        ((a, d), (b, c))
    }
}

/// A tie between `x` and `y` can be drawn without crossing another arc.
fn connectable(arcs: &[Arc], x: Arc, y: Arc) -> bool {
    let (p, q) = repair(x, y);
    arcs.iter()
        .filter(|&&c| c != x && c != y)
        .all(|&c| !crosses(c, p) && !crosses(c, q))
}

pub fn vertically_adjacent(n: usize, arcs: &[Arc], x: Arc, y: Arc) -> bool {
    let (a, b) = span(n, x);
    let (c, d) = span(n, y);
    x != y && a < d && c < b && connectable(arcs, x, y)
}

/// Components of the vertical-adjacency graph inside each tie block.
fn vertical_components(n: usize, arcs: &[Arc], ties: &SetPartition) -> UnionFind {
    let mut uf = UnionFind::new(arcs.len());
    for (k, &x) in arcs.iter().enumerate() {
        for (l, &y) in arcs.iter().enumerate().skip(k + 1) {
            if ties.same_block(x.0, y.0) && vertically_adjacent(n, arcs, x, y) {
                uf.union(k, l);
            }
        }
    }
    uf
}

fn require_prj(a: &RamifiedPartition) -> Result<()> {
    require_j(a.shape())?;
    if !a.ties_diagram().is_planar() {
        return Err(Error::Membership("PR(J_n): the ties cross".into()));
    }
    Ok(())
}

/// The first horizontally tied pair (by leftmost span start) joining two
/// different vertical components of one tie block. Re-pairings that would
/// wall off an earlier re-paired pair from each other are skipped.
fn horizontal_pair(
    n: usize,
    arcs: &[Arc],
    ties: &SetPartition,
    earlier: &[(Arc, Arc)],
) -> Option<(usize, usize)> {
    let mut uf = vertical_components(n, arcs, ties);
    let keeps_earlier = |k: usize, l: usize| {
        let mut next = arcs.to_vec();
        (next[k], next[l]) = repair(arcs[k], arcs[l]);
        earlier
            .iter()
            .all(|&(p, q)| !(next.contains(&p) && next.contains(&q)) || connectable(&next, p, q))
    };
    let mut best: Option<((usize, usize), (usize, usize))> = None;
    for (k, &x) in arcs.iter().enumerate() {
        for (l, &y) in arcs.iter().enumerate().skip(k + 1) {
            if ties.same_block(x.0, y.0) && !uf.same(k, l) && connectable(arcs, x, y) {
                let key = (
                    span(n, x).0.min(span(n, y).0),
                    span(n, x).0.max(span(n, y).0),
                );
                if best.map_or(true, |(b, _)| key < b) && keeps_earlier(k, l) {
                    best = Some((key, (k, l)));
                }
            }
        }
    }
    best.map(|(_, p)| p)
}

pub fn is_flat(a: &RamifiedPartition) -> Result<bool> {
    require_prj(a)?;
    let arcs = arcs(a.shape());
    Ok(horizontal_pair(a.n(), &arcs, a.ties(), &[]).is_none())
}

/// The flattened element and the re-pairings performed, in order, each
/// recorded as the two arcs it produced.
pub fn flatten(a: &RamifiedPartition) -> Result<(RamifiedPartition, Vec<(Arc, Arc)>)> {
    require_prj(a)?;
    let n = a.n();
    let mut arcs = arcs(a.shape());
    let mut ops = Vec::new();
    while let Some((k, l)) = horizontal_pair(n, &arcs, a.ties(), &ops) {
        let (p, q) = repair(arcs[k], arcs[l]);
        arcs[k] = p;
        arcs[l] = q;
        ops.push((p, q));
    }
    let blocks: Vec<[usize; 2]> = arcs.iter().map(|&(u, v)| [u, v]).collect();
    let shape = Diagram::from_blocks(n, Kind::Full, &blocks)?;
    Ok((RamifiedPartition::new(shape, a.ties().clone())?, ops))
}

/// For each letter, the arcs of the resulting shape through its cup and
/// its cap; `None` for the straight `e` layers.
fn cores(n: usize, letters: &[(usize, Sym)]) -> Vec<Option<(Arc, Arc)>> {
    let len = letters.len();
    let node = |level: usize, c: usize| level * n + c - 1;
    let mut uf = UnionFind::new((len + 1) * n);
    for (k, &(p, sym)) in letters.iter().enumerate() {
        let bent = sym != Sym::E;
        if bent {
            uf.union(node(k, p), node(k, p + 1));
            uf.union(node(k + 1, p), node(k + 1, p + 1));
        }
        for c in (1..=n).filter(|&c| !bent || (c != p && c != p + 1)) {
            uf.union(node(k, c), node(k + 1, c));
        }
    }
    let mut ends: Vec<Vec<usize>> = vec![Vec::new(); (len + 1) * n];
    for c in 1..=n {
        let r = uf.find(node(0, c));
        ends[r].push(c);
        let r = uf.find(node(len, c));
        ends[r].push(2 * n + 1 - c);
    }
    let mut arc_of = |level: usize, c: usize| {
        let e = &ends[uf.find(node(level, c))];
        assert_eq!(e.len(), 2, "a reduced Jones word has no loops");
        (e[0].min(e[1]), e[0].max(e[1]))
    };
    letters
        .iter()
        .enumerate()
        .map(|(k, &(p, sym))| (sym != Sym::E).then(|| (arc_of(k, p), arc_of(k + 1, p))))
        .collect()
}

/// The smallest-index letter whose core is `{x, y}`.
fn pick_core(
    letters: &[(usize, Sym)],
    cores: &[Option<(Arc, Arc)>],
    x: Arc,
    y: Arc,
) -> Option<usize> {
    (0..letters.len())
        .filter(|&m| cores[m].is_some_and(|(s, t)| (s, t) == (x, y) || (s, t) == (y, x)))
        .min_by_key(|&m| (letters[m].0, m))
}

pub fn nf_pr_jn(a: &RamifiedPartition) -> Result<NormalForm> {
    let (flat, ops) = flatten(a)?;
    let n = a.n();
    let runs = runs(flat.shape())?;
    let all_arcs = arcs(flat.shape());
    let mut letters: Vec<(usize, Sym)> = runs
        .iter()
        .flat_map(|&(i, j)| (i..=j).rev())
        .map(|p| (p, Sym::T))
        .collect();

    // a tie on every vertically adjacent pair of one block
    let flat_cores = cores(n, &letters);
    for (k, &x) in all_arcs.iter().enumerate() {
        for &y in &all_arcs[k + 1..] {
            if a.ties().same_block(x.0, y.0) && vertically_adjacent(n, &all_arcs, x, y) {
                let m = pick_core(&letters, &flat_cores, x, y)
                    .expect("vertically adjacent arcs share a letter");
                letters[m].1 = Sym::F;
            }
        }
    }
    // undo the re-pairings, latest first among those a letter can undo
    let mut pending = ops;
    while !pending.is_empty() {
        let now = cores(n, &letters);
        let (k, m) = (0..pending.len())
            .rev()
            .find_map(|k| pick_core(&letters, &now, pending[k].0, pending[k].1).map(|m| (k, m)))
            .ok_or_else(|| Error::Invalid(format!("no letter undoes {pending:?}")))?;
        letters[m].1 = Sym::E;
        pending.remove(k);
    }

    let mut nf = NormalForm::new();
    let mut it = letters.into_iter();
    for &(i, j) in &runs {
        nf.push(
            "H",
            Word(
                it.by_ref()
                    .take(j + 1 - i)
                    .map(|(p, s)| Token::one(s, p))
                    .collect(),
            ),
        );
    }
    Ok(nf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ramified::RamFamily;
    use crate::word::eval_ramified;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn a_b_example() {
        let i = d("n=8 {1,2}{3,16}{4,9}{5,8}{6,7}{10,15}{11,12}{13,14}");
        assert_eq!(a_set(&i).unwrap(), BTreeSet::from([1, 2, 6, 7]));
        assert_eq!(b_set(&i).unwrap(), BTreeSet::from([1, 2, 3, 5]));
        let a = RamifiedPartition::embed(&i);
        assert_eq!(
            nf_pr_jn(&a).unwrap().word().to_string(),
            "t1 t2 t6 t5 t4 t3 t7 t6 t5"
        );
    }

    #[test]
    fn worked_words_are_fixed() {
        for (n, w) in [
            (8, "f1 f2 f4 t7 t6 t5"),
            (6, "t2 e1 t4 t3 t2 t5 t4"),
            (8, "f1 t4 e3 t2 t5 t4 e3 t7 t6 t5"),
        ] {
            let w: Word = w.parse().unwrap();
            let a = eval_ramified(&w, n).unwrap();
            assert_eq!(nf_pr_jn(&a).unwrap().word(), w, "{a}");
        }
    }

    #[test]
    fn flatten_examples() {
        let f = crate::ramified::rgen::f(4, 2).unwrap();
        assert!(is_flat(&f).unwrap());
        let a: RamifiedPartition =
            "n=6 shape {1,12}{2,3}{4,5}{6,7}{8,9}{10,11} ties {1,6,7,12}{2,3}{4,5}{8,9}{10,11}"
                .parse()
                .unwrap();
        assert!(!is_flat(&a).unwrap());
        let (flat, ops) = flatten(&a).unwrap();
        assert_eq!(ops, vec![((1, 6), (7, 12))]);
        assert!(is_flat(&flat).unwrap());
        assert_eq!(flat.ties(), a.ties());
        let b: RamifiedPartition = "n=3 shape {1,2}{3,4}{5,6} ties {1,2,3,4}{5,6}"
            .parse()
            .unwrap();
        let (flat, _) = flatten(&b).unwrap();
        assert_eq!(arcs(flat.shape()), vec![(1, 4), (2, 3), (5, 6)]);
    }

    #[test]
    fn a_b_determine_the_shape() {
        for n in 1..=6 {
            let mut seen = std::collections::HashSet::new();
            for i in Family::J.enumerate(n, Kind::Full, 1 << 20).unwrap() {
                let (a, b) = (a_set(&i).unwrap(), b_set(&i).unwrap());
                assert_eq!(a.len(), b.len());
                assert!(runs(&i).unwrap().iter().all(|&(x, y)| x <= y));
                assert!(seen.insert((a, b)));
            }
        }
        assert!(a_set(&Diagram::identity(4, Kind::Full)).unwrap().is_empty());
        let t = crate::diagram::gen::t(4, 2).unwrap();
        assert_eq!(a_set(&t).unwrap(), BTreeSet::from([2]));
        assert_eq!(b_set(&t).unwrap(), BTreeSet::from([2]));
    }

    #[test]
    fn round_trip_prj() {
        for (n, size) in [(1, 1), (2, 4), (3, 22), (4, 140), (5, 969)] {
            let all = RamFamily::planar(Family::J)
                .enumerate(n, Kind::Full, 1 << 20)
                .unwrap();
            assert_eq!(all.len(), size);
            let mut seen = std::collections::HashSet::new();
            for a in &all {
                let w = nf_pr_jn(a).unwrap().word();
                assert_eq!(&eval_ramified(&w, n).unwrap(), a, "{w}");
                assert!(seen.insert(w));
            }
        }
    }
}
