//! Block maps: restrictions of a partition-preserving map to single blocks,
//! each with an explicit codomain block.

use crate::partition::SetPartition;
use crate::transformation::Transformation;

/// The restriction of a map to block `domain`, landing in block `codomain`.
///
/// `images[j]` is the image of `points[j]`; `points` is the domain block in
/// ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockMap {
    pub domain: usize,
    pub codomain: usize,
    pub points: Vec<usize>,
    pub images: Vec<usize>,
    codomain_len: usize,
}

impl BlockMap {
    pub(crate) fn new(
        domain: usize,
        codomain: usize,
        points: Vec<usize>,
        images: Vec<usize>,
        codomain_len: usize,
    ) -> Self {
        Self {
            domain,
            codomain,
            points,
            images,
            codomain_len,
        }
    }

    pub fn is_selfmap(&self) -> bool {
        self.domain == self.codomain
    }

    /// Bijective onto the whole codomain block.
    pub fn is_bijective(&self) -> bool {
        if self.points.len() != self.codomain_len {
            return false;
        }
        let mut sorted = self.images.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// A selfmap of its block that fixes every point of its image.
    pub fn is_idempotent(&self) -> bool {
        if !self.is_selfmap() {
            return false;
        }
        self.images.iter().all(|&y| {
            let j = self
                .points
                .binary_search(&y)
                .expect("selfmap image lies in its own block");
            self.images[j] == y
        })
    }

    pub fn image_of(&self, x: usize) -> Option<usize> {
        self.points
            .binary_search(&x)
            .ok()
            .map(|j| self.images[j])
    }
}

/// The indexed family of block maps of a partition-preserving map, one per
/// block in block-index order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockMapFamily {
    maps: Vec<BlockMap>,
}

impl BlockMapFamily {
    pub(crate) fn new(maps: Vec<BlockMap>) -> Self {
        Self { maps }
    }

    pub fn maps(&self) -> &[BlockMap] {
        &self.maps
    }

    pub fn get(&self, block: usize) -> &BlockMap {
        &self.maps[block]
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// Checks that every member's images lie in its declared codomain block.
    pub fn is_consistent_with(&self, p: &SetPartition) -> bool {
        self.maps.len() == p.block_count()
            && self.maps.iter().enumerate().all(|(i, bm)| {
                bm.domain == i
                    && bm.points == p.block(i)
                    && bm.images.iter().all(|&y| p.block_of(y) == bm.codomain)
            })
    }

    /// Reassembles the map the family was cut from.
    pub fn glue(&self) -> Transformation {
        let n: usize = self.maps.iter().map(|bm| bm.points.len()).sum();
        let mut images = vec![0; n];
        for bm in &self.maps {
            for (&x, &y) in bm.points.iter().zip(&bm.images) {
                images[x] = y;
            }
        }
        Transformation::from_images_unchecked(images)
    }
}
