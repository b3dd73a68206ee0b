//! The `e · r · y · e′` normal form of `PR(I_n)` in the letters `ē`, `r`, `x̄`.

use crate::diagram::bottom_position;
use crate::diagram::Kind;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::normal_form::isn::partial_map;
use crate::normal_form::ris::{bottom_on_line, bottom_ties, require, top_ties, TieInfo};
use crate::normal_form::NormalForm;
use crate::ramified::RamifiedPartition;
use crate::word::{Sym, Token, Word};

/// One `x̄` letter: the tie from top `top` to bottom position `bottom`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Bar {
    top: usize,
    bottom: usize,
}

impl Bar {
    fn lo(&self) -> usize {
        self.top.min(self.bottom)
    }

    fn hi(&self) -> usize {
        self.top.max(self.bottom)
    }

    fn covers(&self, c: usize) -> bool {
        self.lo() <= c && c <= self.hi()
    }
}

/// Repeatedly emits the smallest-keyed item that may go first.
fn topo_select<T: Copy>(
    mut items: Vec<T>,
    may_lead: impl Fn(&T, &[T]) -> bool,
    key: impl Fn(&T) -> (usize, usize),
) -> Vec<T> {
    let mut out = Vec::with_capacity(items.len());
    while !items.is_empty() {
        let pick = (0..items.len())
            .filter(|&k| may_lead(&items[k], &items))
            .min_by_key(|&k| key(&items[k]))
            .expect("the precedence relation is acyclic");
        out.push(items.remove(pick));
    }
    out
}

fn strictly_inside(inner: &(usize, usize), outer: &(usize, usize)) -> bool {
    outer.0 < inner.0 && inner.1 < outer.1
}

pub fn nf_pr_in(a: &RamifiedPartition) -> Result<NormalForm> {
    require(a, Family::I, "PR(I_n)")?;
    if !a.ties_diagram().is_planar() {
        return Err(Error::Membership("PR(I_n): the ties cross".into()));
    }
    let n = a.n();
    let info = TieInfo::new(a);

    let e = topo_select(
        top_ties(a).normal_form_pairs(),
        |p, rest| !rest.iter().any(|o| strictly_inside(o, p)),
        |p| (p.0, p.1),
    );
    let on_line = bottom_on_line(a);
    let e2_pairs: Vec<(usize, usize)> = bottom_ties(a)
        .normal_form_pairs()
        .into_iter()
        .filter(|&(i, j)| !(on_line[i] && on_line[j]))
        .collect();
    let e2 = topo_select(
        e2_pairs,
        |p, rest| !rest.iter().any(|o| strictly_inside(p, o)),
        |p| (p.0, p.1),
    );

    let mut bars = Vec::new();
    for b in 0..a.ties().num_blocks() {
        if info.is_free_cross(b) {
            bars.push(Bar {
                top: info.min_top[b].unwrap(),
                bottom: bottom_position(n, Kind::Full, info.max_bottom[b].unwrap()).unwrap(),
            });
        }
    }
    let y = topo_select(
        bars,
        |z, rest| {
            rest.iter()
                .filter(|w| *w != z)
                .all(|w| !z.covers(w.top) && !w.covers(z.bottom))
        },
        |z| (z.lo(), z.hi()),
    );

    let shape_map = partial_map(a.shape());
    let covered = |c: usize| {
        e.iter().chain(&e2).any(|&(i, j)| i < c && c < j) || y.iter().any(|z| z.covers(c))
    };
    let r: Vec<Token> = (1..=n)
        .filter(|&c| shape_map[c - 1].is_none() && !covered(c))
        .map(|c| Token::one(Sym::R, c))
        .collect();

    let eb = |pairs: &[(usize, usize)]| {
        Word(
            pairs
                .iter()
                .map(|&(i, j)| Token::two(Sym::Eb, i, j))
                .collect(),
        )
    };
    let mut nf = NormalForm::new();
    nf.push("e", eb(&e));
    nf.push("r", Word(r));
    nf.push(
        "y",
        Word(
            y.iter()
                .map(|z| {
                    if z.top == z.bottom {
                        Token::one(Sym::Q, z.top)
                    } else {
                        Token::two(Sym::Xb, z.bottom, z.top)
                    }
                })
                .collect(),
        ),
    );
    nf.push("e'", eb(&e2));
    Ok(nf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ramified::{rgen, RamFamily};
    use crate::word::eval_ramified;

    #[test]
    fn worked_element() {
        let a: RamifiedPartition =
            "n=5 shape {1,10}{2}{3}{4}{5}{6}{7}{8}{9} ties {1,3,10}{2}{4,9}{5,7}{6}{8}"
                .parse()
                .unwrap();
        let w = nf_pr_in(&a).unwrap().word();
        assert_eq!(w.to_string(), "eb1,3 xb2,4 xb4,5");
        assert_eq!(eval_ramified(&w, 5).unwrap(), a);
    }

    #[test]
    fn single_letters() {
        assert_eq!(
            nf_pr_in(&rgen::eb(5, 1, 4).unwrap())
                .unwrap()
                .word()
                .to_string(),
            "eb1,4"
        );
        assert_eq!(
            nf_pr_in(&rgen::xb(5, 3, 3).unwrap())
                .unwrap()
                .word()
                .to_string(),
            "q3"
        );
        assert_eq!(
            nf_pr_in(&rgen::xb(5, 4, 1).unwrap())
                .unwrap()
                .word()
                .to_string(),
            "xb4,1"
        );
    }

    #[test]
    fn round_trip_pri() {
        for (n, size) in [(1, 3), (2, 26), (3, 279), (4, 3302)] {
            let all = RamFamily::planar(Family::I)
                .enumerate(n, Kind::Full, 1 << 20)
                .unwrap();
            assert_eq!(all.len(), size);
            let mut seen = std::collections::HashSet::new();
            for a in &all {
                let w = nf_pr_in(a).unwrap().word();
                assert_eq!(&eval_ramified(&w, n).unwrap(), a, "{w}");
                assert!(seen.insert(w));
            }
        }
    }
}
