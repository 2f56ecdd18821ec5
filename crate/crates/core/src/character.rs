//! Character maps: the selfmap a partition-preserving map induces on block
//! indices.

use std::fmt;

use crate::error::Result;
use crate::transformation::Transformation;

/// The induced map on block indices `{0, …, m-1}`: entry `i` is the index of
/// the block that contains the image of block `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharacterMap(Transformation);

impl CharacterMap {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        Transformation::new(images).map(Self)
    }

    pub(crate) fn from_transformation(t: Transformation) -> Self {
        Self(t)
    }

    pub fn identity(m: usize) -> Self {
        Self(Transformation::identity(m))
    }

    /// Block count `m`.
    pub fn m(&self) -> usize {
        self.0.n()
    }

    pub fn images(&self) -> &[usize] {
        self.0.images()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0.apply(i)
    }

    pub fn as_transformation(&self) -> &Transformation {
        &self.0
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &CharacterMap) -> Result<CharacterMap> {
        self.0.then(&other.0).map(Self)
    }

    pub fn is_injective(&self) -> bool {
        self.0.is_bijective()
    }

    pub fn is_surjective(&self) -> bool {
        self.0.image_mask().into_iter().all(|hit| hit)
    }

    pub fn is_bijective(&self) -> bool {
        self.0.is_bijective()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn is_idempotent(&self) -> bool {
        self.0.is_idempotent()
    }

    /// Block indices hit by the map, ascending.
    pub fn image_indices(&self) -> Vec<usize> {
        self.0
            .image_mask()
            .into_iter()
            .enumerate()
            .filter_map(|(i, hit)| hit.then_some(i))
            .collect()
    }

    /// A permutation with a single orbit covering all `m` indices.
    pub fn is_single_cycle(&self) -> bool {
        if !self.is_bijective() {
            return false;
        }
        let m = self.m();
        let mut i = 0;
        for step in 1..=m {
            i = self.apply(i);
            if i == 0 {
                return step == m;
            }
        }
        false
    }
}

impl fmt::Display for CharacterMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surjective_injective_agree_on_finite_sets() {
        for images in [vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]] {
            let c = CharacterMap::new(images).unwrap();
            assert_eq!(c.is_injective(), c.is_surjective());
        }
    }

    #[test]
    fn single_cycle() {
        assert!(CharacterMap::new(vec![1, 2, 0]).unwrap().is_single_cycle());
        assert!(!CharacterMap::new(vec![1, 0, 2]).unwrap().is_single_cycle());
        assert!(CharacterMap::new(vec![0]).unwrap().is_single_cycle());
        assert!(!CharacterMap::new(vec![0, 1]).unwrap().is_single_cycle());
        assert!(!CharacterMap::new(vec![1, 1]).unwrap().is_single_cycle());
    }
}
