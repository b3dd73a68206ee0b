//! Normal forms for the diagram and ramified monoids.

pub mod isn;
pub mod patterns;
pub mod pri;
pub mod prj;
pub mod ri;
pub mod ris;
pub mod validate;

use std::fmt;

use crate::word::Word;

/// A normal-form word kept as its named segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub segments: Vec<(&'static str, Word)>,
}

impl NormalForm {
    pub fn new() -> Self {
        NormalForm {
            segments: Vec::new(),
        }
    }

    pub fn push(&mut self, name: &'static str, word: Word) {
        self.segments.push((name, word));
    }

    pub fn word(&self) -> Word {
        Word::concat(
            &self
                .segments
                .iter()
                .map(|(_, w)| w.clone())
                .collect::<Vec<_>>(),
        )
    }

    pub fn segment(&self, name: &str) -> Option<&Word> {
        self.segments
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, w)| w)
    }
}

impl Default for NormalForm {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}
