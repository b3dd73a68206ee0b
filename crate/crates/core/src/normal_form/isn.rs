//! Partial permutations: completed permutation and the `r ... g_p` form.

use crate::diagram::{bottom_position, gen, Diagram, Kind};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::normal_form::NormalForm;
use crate::word::{Sym, Token, Word};

fn require_is(g: &Diagram) -> Result<()> {
    if g.kind() != Kind::Full || !Family::IS.contains(g) {
        return Err(Error::Membership("IS_n".into()));
    }
    Ok(())
}

/// Top `i` goes to bottom position `perm[i - 1]`; `None` for a top point.
pub fn partial_map(g: &Diagram) -> Vec<Option<usize>> {
    let n = g.n();
    (1..=n)
        .map(|i| {
            g.partition()
                .block_containing(i)
                .into_iter()
                .find_map(|e| bottom_position(n, Kind::Full, e))
        })
        .collect()
}

/// Pairs the ascending top points with the bottom points in ascending
/// position, so the added lines never cross each other.
pub fn completed_permutation(g: &Diagram) -> Result<Diagram> {
    require_is(g)?;
    Ok(gen::permutation(&completed_map(g)).expect("a bijection"))
}

pub(crate) fn completed_map(g: &Diagram) -> Vec<usize> {
    let n = g.n();
    let map = partial_map(g);
    let top_points: Vec<usize> = (1..=n).filter(|&i| map[i - 1].is_none()).collect();
    let mut hit = vec![false; n + 1];
    for p in map.iter().flatten() {
        hit[*p] = true;
    }
    let bottom_points: Vec<usize> = (1..=n).filter(|&p| !hit[p]).collect();
    let mut perm: Vec<usize> = map.iter().map(|m| m.unwrap_or(0)).collect();
    for (i, p) in top_points.iter().zip(&bottom_points) {
        perm[i - 1] = *p;
    }
    perm
}

/// A fixed reduced word for a permutation (top `i` to position `perm[i-1]`),
/// written in transposition letters between moved columns only.
pub fn permutation_word(perm: &[usize]) -> Word {
    let moved: Vec<usize> = (1..=perm.len()).filter(|&i| perm[i - 1] != i).collect();
    let rank = |c: usize| moved.binary_search(&c).expect("moved column") + 1;
    // arrangement after the word: column perm(i) holds token i
    let mut arr = vec![0; moved.len()];
    for &a in &moved {
        arr[rank(perm[a - 1]) - 1] = rank(a);
    }
    // bubble the largest remaining token to the right, then read backwards
    let mut swaps = Vec::new();
    for v in (1..=arr.len()).rev() {
        let mut p = arr.iter().position(|&x| x == v).unwrap();
        while p + 1 < v {
            arr.swap(p, p + 1);
            swaps.push(p + 1);
            p += 1;
        }
    }
    Word(
        swaps
            .into_iter()
            .rev()
            .map(|k| {
                let (a, b) = (moved[k - 1], moved[k]);
                if b == a + 1 {
                    Token::one(Sym::S, a)
                } else {
                    Token::two(Sym::W, a, b)
                }
            })
            .collect(),
    )
}

pub fn nf_isn(g: &Diagram) -> Result<NormalForm> {
    require_is(g)?;
    let map = partial_map(g);
    let r = Word(
        (1..=g.n())
            .filter(|&i| map[i - 1].is_none())
            .map(|i| Token::one(Sym::R, i))
            .collect(),
    );
    let mut nf = NormalForm::new();
    nf.push("r", r);
    nf.push("perm", permutation_word(&completed_map(g)));
    Ok(nf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::eval_diagram;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn completed_permutation_example() {
        let g = d("n=4 {1,6}{2}{3,5}{4}{7}{8}");
        let gp = completed_permutation(&g).unwrap();
        assert_eq!(gp, d("n=4 {1,6}{3,5}{2,8}{4,7}"));
        let s = gen::s(4, 2).unwrap();
        assert_eq!(completed_permutation(&s).unwrap(), s);
        assert!(completed_permutation(&gen::t(3, 1).unwrap()).is_err());
    }

    #[test]
    fn small_words() {
        assert!(nf_isn(&Diagram::identity(3, Kind::Full))
            .unwrap()
            .word()
            .is_empty());
        assert_eq!(
            nf_isn(&gen::r(2, 1).unwrap()).unwrap().word().to_string(),
            "r1"
        );
        // top 2 goes to position 4, tops 3 and 4 shift left
        assert_eq!(permutation_word(&[1, 4, 2, 3]).to_string(), "s2 s3");
    }

    #[test]
    fn avoids_fixed_columns() {
        // columns 3 and 5 stay vertical, so no letter touches them
        let word: Word = "r2 w4,6 w1,4".parse().unwrap();
        let g = eval_diagram(&word, 6).unwrap();
        let nf = nf_isn(&g).unwrap();
        assert_eq!(eval_diagram(&nf.word(), 6).unwrap(), g);
        for t in nf.segment("perm").unwrap().tokens() {
            assert!(!t.idx.contains(&3) && !t.idx.contains(&5), "{t}");
        }
    }

    #[test]
    fn round_trip_is3() {
        let all = Family::IS.enumerate(3, Kind::Full, 1000).unwrap();
        let mut words = std::collections::HashSet::new();
        for g in &all {
            let w = nf_isn(g).unwrap().word();
            assert_eq!(&eval_diagram(&w, 3).unwrap(), g);
            assert!(words.insert(w));
        }
    }
}
