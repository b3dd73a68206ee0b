//! Detector for the seven exceptional shapes of an `e r s e′` word, the
//! configurations in which the word is not the normal form.

use std::fmt;

use crate::normal_form::ris::RisParts;
use crate::union_find::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Pattern {
    pub const ALL: [Pattern; 7] = [
        Pattern::A,
        Pattern::B,
        Pattern::C,
        Pattern::D,
        Pattern::E,
        Pattern::F,
        Pattern::G,
    ];
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Pattern::A => 'a',
            Pattern::B => 'b',
            Pattern::C => 'c',
            Pattern::D => 'd',
            Pattern::E => 'e',
            Pattern::F => 'f',
            Pattern::G => 'g',
        };
        write!(f, "({c})")
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Col {
    Line,
    R,
    Q,
}

fn tied(n: usize, pairs: &[(usize, usize)]) -> UnionFind {
    let mut uf = UnionFind::new(n + 1);
    for &(a, b) in pairs {
        uf.union(a, b);
    }
    uf
}

/// All patterns present in `parts`. The permutation part is read as
/// `s = t s̄` with `t` its first transposition letter.
pub fn detect(parts: &RisParts) -> Vec<Pattern> {
    let n = parts.perm.len();
    let pi = |i: usize| parts.perm[i - 1];
    let mut col = vec![Col::Line; n + 1];
    for &(i, q) in &parts.r {
        col[i] = if q { Col::Q } else { Col::R };
    }
    // the bottom positions reached by lines are those of line columns
    let mut bottom_line = vec![false; n + 1];
    for i in 1..=n {
        if col[i] == Col::Line {
            bottom_line[pi(i)] = true;
        }
    }
    let mut top = tied(n, &parts.e);
    let mut bottom = tied(n, &parts.e2);
    let mut found = Vec::new();

    if let Some(t) = parts.perm_word.tokens().first() {
        let (i, j) = (t.i(), t.idx.get(1).copied().unwrap_or(t.i() + 1));
        // s̄ = t⁻¹ s sends i to s(j) and j to s(i)
        let tail_tied = bottom.same(pi(i), pi(j));
        match (col[i], col[j]) {
            (Col::R, Col::R) => found.push(Pattern::A),
            (Col::R, Col::Q) if tail_tied => found.push(Pattern::B),
            (Col::Q, Col::R) if tail_tied => found.push(Pattern::C),
            (Col::Q, Col::Q) if tail_tied || top.same(i, j) => found.push(Pattern::D),
            _ => {}
        }
    }

    let qs: Vec<usize> = (1..=n).filter(|&i| col[i] == Col::Q).collect();
    if qs
        .iter()
        .any(|&i| (1..=n).any(|j| j != i && col[j] == Col::Line && top.same(i, j)))
    {
        found.push(Pattern::E);
    }
    if qs
        .iter()
        .any(|&i| (1..=n).any(|j| j != pi(i) && bottom_line[j] && bottom.same(pi(i), j)))
    {
        found.push(Pattern::F);
    }
    if qs.iter().enumerate().any(|(k, &i)| {
        qs[k + 1..]
            .iter()
            .any(|&j| top.same(i, j) || bottom.same(pi(i), pi(j)))
    }) {
        found.push(Pattern::G);
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Kind;
    use crate::family::Family;
    use crate::normal_form::ris::ris_parts;
    use crate::ramified::RamFamily;
    use crate::word::{eval_ramified, Word};

    #[test]
    fn only_the_crossing_tail_shape_occurs() {
        for n in 1..=3 {
            let all = RamFamily::ramified(Family::IS)
                .enumerate(n, Kind::Full, 1 << 20)
                .unwrap();
            for a in &all {
                let found = detect(&ris_parts(a).unwrap());
                assert!(found.iter().all(|p| *p == Pattern::B), "{a} {found:?}");
            }
        }
    }

    #[test]
    fn worked_example_has_crossing_tail() {
        let w: Word = "e1,2 e4,5 r2 q3 r5 s2 s3 e1,5 e2,4".parse().unwrap();
        let a = eval_ramified(&w, 5).unwrap();
        assert_eq!(detect(&ris_parts(&a).unwrap()), vec![Pattern::B]);
    }

    fn parts(
        r: &[(usize, bool)],
        perm: &[usize],
        e: &[(usize, usize)],
        e2: &[(usize, usize)],
    ) -> RisParts {
        RisParts {
            e: e.to_vec(),
            r: r.to_vec(),
            perm: perm.to_vec(),
            perm_word: crate::normal_form::isn::permutation_word(perm),
            e2: e2.to_vec(),
        }
    }

    #[test]
    fn hand_built_words_trigger() {
        // two points swapped for nothing
        assert_eq!(
            detect(&parts(&[(1, false), (2, false)], &[2, 1, 3], &[], &[])),
            vec![Pattern::A]
        );
        assert_eq!(
            detect(&parts(&[(1, true), (2, true)], &[2, 1, 3], &[(1, 2)], &[])),
            vec![Pattern::D, Pattern::G]
        );
        // q1 tied on top to the line at column 2
        assert_eq!(
            detect(&parts(&[(1, true)], &[1, 2, 3], &[(1, 2)], &[])),
            vec![Pattern::E]
        );
        assert_eq!(
            detect(&parts(&[(1, true)], &[1, 2, 3], &[], &[(1, 3)])),
            vec![Pattern::F]
        );
        assert!(detect(&parts(&[(1, false)], &[1, 2, 3], &[(1, 2)], &[])).is_empty());
    }
}
