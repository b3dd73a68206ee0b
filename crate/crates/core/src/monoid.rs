use std::hash::Hash;

use crate::diagram::Diagram;
use crate::partition::SetPartition;
use crate::ramified::RamifiedPartition;

/// A finite monoid element with a (trusted, same-size) product.
pub trait Element: Clone + Eq + Hash {
    fn mul(&self, other: &Self) -> Self;
}

impl Element for SetPartition {
    fn mul(&self, other: &Self) -> Self {
        self.join_unchecked(other)
    }
}

impl Element for Diagram {
    fn mul(&self, other: &Self) -> Self {
        self.concat_unchecked(other)
    }
}

impl Element for RamifiedPartition {
    fn mul(&self, other: &Self) -> Self {
        self.product_unchecked(other)
    }
}
