//! Offline OEIS cross-checks against shipped prefix fixtures.
//!
//! A fixture is a text file `<id>.txt` of integers, one per line, with
//! `#` comments and an optional `# offset k` line. Files in the directory
//! named by `RAMIFIED_OEIS_DIR` take precedence over the shipped ones.

use std::fmt;
use std::path::PathBuf;

use num_bigint::BigUint;

use crate::counting::card;
use crate::error::{Error, Result};
use crate::tag::Tag;

pub const DIR_VAR: &str = "RAMIFIED_OEIS_DIR";

const SHIPPED: [(&str, &str); 6] = [
    ("A000108", include_str!("../data/oeis/A000108.txt")),
    ("A000110", include_str!("../data/oeis/A000110.txt")),
    ("A000262", include_str!("../data/oeis/A000262.txt")),
    ("A001764", include_str!("../data/oeis/A001764.txt")),
    ("A002293", include_str!("../data/oeis/A002293.txt")),
    ("A002720", include_str!("../data/oeis/A002720.txt")),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
    pub id: String,
    pub offset: usize,
    pub values: Vec<BigUint>,
}

impl Sequence {
    pub fn parse(id: &str, text: &str) -> Result<Sequence> {
        let mut offset = 0;
        let mut values = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(k) = comment.trim().strip_prefix("offset") {
                    offset = k
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("{id}: bad offset line `{line}`")))?;
                }
                continue;
            }
            values.push(
                line.parse()
                    .map_err(|_| Error::Parse(format!("{id}: bad value `{line}`")))?,
            );
        }
        Ok(Sequence {
            id: id.to_string(),
            offset,
            values,
        })
    }

    /// The term `a(k)`, if the fixture reaches it.
    pub fn term(&self, k: usize) -> Option<&BigUint> {
        k.checked_sub(self.offset).and_then(|i| self.values.get(i))
    }
}

/// The fixture for `id`; `None` when no fixture exists.
pub fn load(id: &str) -> Result<Option<Sequence>> {
    let id = id.to_ascii_uppercase();
    if let Some(dir) = std::env::var_os(DIR_VAR) {
        let path = PathBuf::from(dir).join(format!("{id}.txt"));
        if path.exists() {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
            return Sequence::parse(&id, &text).map(Some);
        }
    }
    SHIPPED
        .iter()
        .find(|(sid, _)| *sid == id)
        .map(|(sid, text)| Sequence::parse(sid, text))
        .transpose()
}

/// The sequence index matching `n` strands: `a(2n)` for the planar
/// partition monoid against the Catalan numbers, `a(n)` otherwise.
pub fn index_for(id: &str, tag: Tag, n: usize) -> usize {
    match (id.to_ascii_uppercase().as_str(), tag) {
        ("A000108", Tag::PP) => 2 * n,
        _ => n,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermMismatch {
    pub n: usize,
    pub expected: BigUint,
    pub got: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OeisStatus {
    Pass,
    Mismatch(Vec<TermMismatch>),
    /// No fixture for the sequence.
    Skipped,
}

#[derive(Clone, Debug)]
pub struct OeisReport {
    pub id: String,
    pub tag: Tag,
    pub compared: usize,
    pub status: OeisStatus,
}

impl OeisReport {
    /// Skips count as passing; only a mismatch fails.
    pub fn passed(&self) -> bool {
        !matches!(self.status, OeisStatus::Mismatch(_))
    }
}

impl fmt::Display for OeisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            OeisStatus::Pass => write!(
                f,
                "{} vs {}: {} terms agree",
                self.tag, self.id, self.compared
            ),
            OeisStatus::Skipped => write!(f, "{} vs {}: skipped, no fixture", self.tag, self.id),
            OeisStatus::Mismatch(ms) => {
                write!(
                    f,
                    "{} vs {}: {} of {} terms differ",
                    self.tag,
                    self.id,
                    ms.len(),
                    self.compared
                )?;
                for m in ms {
                    write!(
                        f,
                        "\n  {} n={}: expected {}, got {}",
                        self.tag, m.n, m.expected, m.got
                    )?;
                }
                Ok(())
            }
        }
    }
}

/// Compares `card(tag, n)` for `n = 1..=n_max` with the sequence, as far
/// as the fixture reaches.
pub fn check_against(seq: &Sequence, tag: Tag, n_max: usize) -> Result<OeisReport> {
    let mut compared = 0;
    let mut mismatches = Vec::new();
    for n in 1..=n_max {
        let Some(expected) = seq.term(index_for(&seq.id, tag, n)) else {
            break;
        };
        let got = card(tag, n)?;
        compared += 1;
        if &got != expected {
            mismatches.push(TermMismatch {
                n,
                expected: expected.clone(),
                got,
            });
        }
    }
    Ok(OeisReport {
        id: seq.id.clone(),
        tag,
        compared,
        status: if mismatches.is_empty() {
            OeisStatus::Pass
        } else {
            OeisStatus::Mismatch(mismatches)
        },
    })
}

pub fn oeis_check(id: &str, tag: Tag, n_max: usize) -> Result<OeisReport> {
    match load(id)? {
        Some(seq) => check_against(&seq, tag, n_max),
        None => Ok(OeisReport {
            id: id.to_ascii_uppercase(),
            tag,
            compared: 0,
            status: OeisStatus::Skipped,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_sequences() {
        for (id, tag) in [
            ("A000110", Tag::P),
            ("A000108", Tag::J),
            ("A000108", Tag::PP),
            ("A002720", Tag::IS),
            ("A000262", Tag::ISb),
            ("A002293", Tag::PRJ),
        ] {
            let r = oeis_check(id, tag, 8).unwrap();
            assert_eq!(r.status, OeisStatus::Pass, "{r}");
            assert_eq!(r.compared, 8);
        }
    }

    #[test]
    fn table_label_for_the_jones_row_does_not_match() {
        let r = oeis_check("A001764", Tag::PRJ, 6).unwrap();
        assert!(!r.passed(), "{r}");
    }

    #[test]
    fn missing_fixtures_are_skipped() {
        for id in ["A216078", "A056953"] {
            let r = oeis_check(id, Tag::RI, 6).unwrap();
            assert_eq!(r.status, OeisStatus::Skipped);
            assert!(r.passed());
        }
    }

    #[test]
    fn altered_fixture_names_the_term() {
        let mut seq = load("A000110").unwrap().unwrap();
        seq.values[4] += 1u32;
        let r = check_against(&seq, Tag::P, 6).unwrap();
        let OeisStatus::Mismatch(ms) = &r.status else {
            panic!("{r}")
        };
        assert_eq!(ms.len(), 1);
        assert_eq!(
            (ms[0].n, ms[0].expected.clone(), ms[0].got.clone()),
            (4, 16u32.into(), 15u32.into())
        );
        assert!(r.to_string().contains("P n=4: expected 16, got 15"));
    }

    #[test]
    fn offsets_shift_terms() {
        let s = Sequence::parse("X", "# offset 1\n5\n7\n").unwrap();
        assert_eq!(s.term(0), None);
        assert_eq!(s.term(2), Some(&BigUint::from(7u32)));
        assert!(Sequence::parse("X", "1\nz\n").is_err());
    }
}
