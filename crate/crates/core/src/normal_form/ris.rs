//! The `e · r̂ · g*_p · e′` normal form of `R(IS_n)`.

use crate::diagram::{bottom_position, gen, Diagram, Kind};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::normal_form::isn::{completed_map, partial_map, permutation_word};
use crate::normal_form::NormalForm;
use crate::partition::SetPartition;
use crate::ramified::RamifiedPartition;
use crate::word::{Sym, Token, Word};

/// The pieces of the normal form before they are spelled as a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RisParts {
    /// Tie pairs among top dots.
    pub e: Vec<(usize, usize)>,
    /// Top points of the shape, `true` where the letter is `q`.
    pub r: Vec<(usize, bool)>,
    /// Completed permutation of `g*` (top `i` to position `perm[i-1]`).
    pub perm: Vec<usize>,
    pub perm_word: Word,
    /// Tie pairs among bottom positions.
    pub e2: Vec<(usize, usize)>,
}

pub(crate) fn require(a: &RamifiedPartition, family: Family, name: &str) -> Result<()> {
    if a.kind() != Kind::Full || !family.contains(a.shape()) {
        return Err(Error::Membership(name.into()));
    }
    Ok(())
}

/// Per tie block: does it contain a line of the shape, and does it meet
/// both rows?
pub(crate) struct TieInfo {
    pub has_line: Vec<bool>,
    pub has_top: Vec<bool>,
    pub has_bottom: Vec<bool>,
    /// Smallest top element per block.
    pub min_top: Vec<Option<usize>>,
    /// Largest bottom element per block.
    pub max_bottom: Vec<Option<usize>>,
}

impl TieInfo {
    pub fn new(a: &RamifiedPartition) -> Self {
        let n = a.n();
        let j = a.ties();
        let k = j.num_blocks();
        let mut info = TieInfo {
            has_line: vec![false; k],
            has_top: vec![false; k],
            has_bottom: vec![false; k],
            min_top: vec![None; k],
            max_bottom: vec![None; k],
        };
        for e in 1..=2 * n {
            let b = j.block_of(e);
            if e <= n {
                info.has_top[b] = true;
                info.min_top[b] = Some(info.min_top[b].map_or(e, |m: usize| m.min(e)));
            } else {
                info.has_bottom[b] = true;
                info.max_bottom[b] = Some(info.max_bottom[b].map_or(e, |m: usize| m.max(e)));
            }
        }
        for block in a.shape().partition().blocks() {
            if block.len() >= 2 && block[0] <= n && block[block.len() - 1] > n {
                info.has_line[j.block_of(block[0])] = true;
            }
        }
        info
    }

    /// Cross-side tie blocks without any shape line.
    pub fn is_free_cross(&self, b: usize) -> bool {
        !self.has_line[b] && self.has_top[b] && self.has_bottom[b]
    }
}

/// `g*`: lines of the shape plus, for each line-free cross-side tie block,
/// the line from its smallest top to its largest bottom element.
pub fn g_star(a: &RamifiedPartition) -> Result<Diagram> {
    require(a, Family::IS, "R(IS_n)")?;
    Ok(gen_partial(a.n(), &g_star_map(a)))
}

pub(crate) fn g_star_map(a: &RamifiedPartition) -> Vec<Option<usize>> {
    let n = a.n();
    let info = TieInfo::new(a);
    let mut map = partial_map(a.shape());
    for b in 0..a.ties().num_blocks() {
        if info.is_free_cross(b) {
            let top = info.min_top[b].unwrap();
            let bottom = info.max_bottom[b].unwrap();
            map[top - 1] = bottom_position(n, Kind::Full, bottom);
        }
    }
    map
}

fn gen_partial(n: usize, map: &[Option<usize>]) -> Diagram {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut hit = vec![false; n + 1];
    for (i, m) in map.iter().enumerate() {
        match m {
            Some(p) => {
                hit[*p] = true;
                blocks.push(vec![i + 1, 2 * n + 1 - p]);
            }
            None => blocks.push(vec![i + 1]),
        }
    }
    for p in 1..=n {
        if !hit[p] {
            blocks.push(vec![2 * n + 1 - p]);
        }
    }
    Diagram::from_blocks(n, Kind::Full, &blocks).expect("partial permutation")
}

/// The tie partition read on bottom positions.
pub(crate) fn bottom_ties(a: &RamifiedPartition) -> SetPartition {
    let n = a.n();
    let raw: Vec<u16> = (1..=n).map(|p| a.ties().labels()[2 * n - p]).collect();
    SetPartition::from_raw_labels(&raw)
}

pub(crate) fn top_ties(a: &RamifiedPartition) -> SetPartition {
    SetPartition::from_raw_labels(&a.ties().labels()[..a.n()])
}

/// Bottom positions lying on a line of the shape.
pub(crate) fn bottom_on_line(a: &RamifiedPartition) -> Vec<bool> {
    let n = a.n();
    let mut on = vec![false; n + 1];
    for m in partial_map(a.shape()).into_iter().flatten() {
        on[m] = true;
    }
    on
}

pub fn ris_parts(a: &RamifiedPartition) -> Result<RisParts> {
    require(a, Family::IS, "R(IS_n)")?;
    let n = a.n();
    let info = TieInfo::new(a);
    let e = top_ties(a).normal_form_pairs();
    let shape_map = partial_map(a.shape());
    let r = (1..=n)
        .filter(|&i| shape_map[i - 1].is_none())
        .map(|i| {
            let b = a.ties().block_of(i);
            (i, info.is_free_cross(b) && info.min_top[b] == Some(i))
        })
        .collect();
    let star = gen_partial(n, &g_star_map(a));
    let perm = completed_map(&star);
    let on_line = bottom_on_line(a);
    let e2 = bottom_ties(a)
        .normal_form_pairs()
        .into_iter()
        .filter(|&(i, j)| !(on_line[i] && on_line[j]))
        .collect();
    Ok(RisParts {
        e,
        r,
        perm_word: permutation_word(&perm),
        perm,
        e2,
    })
}

pub(crate) fn tie_word(pairs: &[(usize, usize)]) -> Word {
    Word(
        pairs
            .iter()
            .map(|&(i, j)| Token::two(Sym::E, i, j))
            .collect(),
    )
}

pub fn nf_r_isn(a: &RamifiedPartition) -> Result<NormalForm> {
    let parts = ris_parts(a)?;
    let mut nf = NormalForm::new();
    nf.push("e", tie_word(&parts.e));
    nf.push(
        "r",
        Word(
            parts
                .r
                .iter()
                .map(|&(i, q)| Token::one(if q { Sym::Q } else { Sym::R }, i))
                .collect(),
        ),
    );
    nf.push("perm", parts.perm_word.clone());
    nf.push("e'", tie_word(&parts.e2));
    Ok(nf)
}

/// The permutation part as a diagram, used by the factorisation helpers.
pub fn g_star_completed(a: &RamifiedPartition) -> Result<Diagram> {
    let parts = ris_parts(a)?;
    gen::permutation(&parts.perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal_form::isn::nf_isn;
    use crate::ramified::rgen;
    use crate::word::eval_ramified;

    #[test]
    fn worked_example_is_fixed() {
        let w: Word = "e1,2 e4,5 r2 q3 r5 s2 s3 e1,5 e2,4".parse().unwrap();
        let a = eval_ramified(&w, 5).unwrap();
        assert_eq!(nf_r_isn(&a).unwrap().word(), w);
    }

    #[test]
    fn g_star_examples() {
        let n = 3;
        let s = gen::s(n, 1).unwrap();
        assert_eq!(g_star(&RamifiedPartition::embed(&s)).unwrap(), s);
        // q_i ties the two points of column i, so g* closes the column again
        let id = Diagram::identity(n, Kind::Full);
        assert_eq!(g_star(&rgen::q(n, 2).unwrap()).unwrap(), id);
        let r2 = gen::r(n, 2).unwrap();
        assert_eq!(g_star(&RamifiedPartition::embed(&r2)).unwrap(), r2);
    }

    #[test]
    fn embedded_partial_permutations_match_nf_isn() {
        for g in Family::IS.enumerate(3, Kind::Full, 1000).unwrap() {
            let a = RamifiedPartition::embed(&g);
            assert_eq!(nf_r_isn(&a).unwrap().word(), nf_isn(&g).unwrap().word());
        }
    }

    #[test]
    fn round_trip_ris3() {
        let all = crate::ramified::RamFamily::ramified(Family::IS)
            .enumerate(3, Kind::Full, 1 << 20)
            .unwrap();
        assert_eq!(all.len(), 971);
        let mut seen = std::collections::HashSet::new();
        for a in &all {
            let w = nf_r_isn(a).unwrap().word();
            assert_eq!(&eval_ramified(&w, 3).unwrap(), a, "{w}");
            assert!(seen.insert(w));
        }
    }

    #[test]
    fn tie_generator_is_pure_ties() {
        let a = rgen::e(2, 1).unwrap();
        assert_eq!(nf_r_isn(&a).unwrap().word().to_string(), "e1,2");
    }
}
