//! Membership predicates for `T(X,P)`, `Σ(X,P)` and `S(X,P)`, and the
//! structural decompositions they are built from.
//!
//! Several predicates are implemented more than once along independent
//! routes (image meets every block, surjective character, block-level
//! continuity, two-sided equivalence preservation). The routes share no code
//! beyond the partition lookup table.
//!
//! Predicates that only make sense on `T(X,P)` return
//! [`Error::NotPreserving`] instead of `false` outside it.

use std::fmt;
use std::str::FromStr;

use crate::blockmap::{BlockMap, BlockMapFamily};
use crate::character::CharacterMap;
use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::transformation::Transformation;

fn check_sizes(f: &Transformation, p: &SetPartition) -> Result<()> {
    if f.n() != p.n() {
        return Err(Error::SizeMismatch {
            left: f.n(),
            right: p.n(),
        });
    }
    Ok(())
}

/// First block whose image meets two blocks, with the two block indices.
fn split_witness(f: &Transformation, p: &SetPartition) -> Option<Error> {
    for (i, block) in p.blocks().iter().enumerate() {
        let first = p.block_of(f.apply(block[0]));
        if let Some(&x) = block[1..].iter().find(|&&x| p.block_of(f.apply(x)) != first) {
            return Some(Error::NotPreserving {
                block: i,
                first,
                second: p.block_of(f.apply(x)),
            });
        }
    }
    None
}

fn require_preserving(f: &Transformation, p: &SetPartition) -> Result<()> {
    check_sizes(f, p)?;
    match split_witness(f, p) {
        Some(err) => Err(err),
        None => Ok(()),
    }
}

/// Every block's image lies inside a single block.
pub fn preserves(f: &Transformation, p: &SetPartition) -> Result<bool> {
    check_sizes(f, p)?;
    Ok(split_witness(f, p).is_none())
}

pub fn character(f: &Transformation, p: &SetPartition) -> Result<CharacterMap> {
    require_preserving(f, p)?;
    let images = p
        .blocks()
        .iter()
        .map(|block| p.block_of(f.apply(block[0])))
        .collect();
    Ok(CharacterMap::from_transformation(
        Transformation::from_images_unchecked(images),
    ))
}

pub fn block_map_family(f: &Transformation, p: &SetPartition) -> Result<BlockMapFamily> {
    let chi = character(f, p)?;
    let maps = p
        .blocks()
        .iter()
        .enumerate()
        .map(|(i, block)| {
            let codomain = chi.apply(i);
            BlockMap::new(
                i,
                codomain,
                block.clone(),
                block.iter().map(|&x| f.apply(x)).collect(),
                p.block(codomain).len(),
            )
        })
        .collect();
    Ok(BlockMapFamily::new(maps))
}

/// First block not met by the image of `f`.
pub fn missed_block(f: &Transformation, p: &SetPartition) -> Result<Option<usize>> {
    check_sizes(f, p)?;
    let mut hit = vec![false; p.block_count()];
    for &y in f.images() {
        hit[p.block_of(y)] = true;
    }
    Ok(hit.iter().position(|&h| !h))
}

/// `f ∈ Σ(X,P)`: preserves `p` and its image meets every block.
pub fn in_sigma(f: &Transformation, p: &SetPartition) -> Result<bool> {
    Ok(preserves(f, p)? && missed_block(f, p)?.is_none())
}

/// Σ-membership read off the character map: it must be surjective.
pub fn sigma_via_character(f: &Transformation, p: &SetPartition) -> Result<bool> {
    Ok(character(f, p)?.is_surjective())
}

/// Σ-membership as continuity plus nonempty preimages in the topology whose
/// basis is the partition. Opens are unions of blocks and preimage commutes
/// with union, so only block preimages are inspected.
pub fn sigma_via_topology(f: &Transformation, p: &SetPartition) -> Result<bool> {
    check_sizes(f, p)?;
    for target in 0..p.block_count() {
        let preimage: Vec<bool> = (0..f.n())
            .map(|x| p.block_of(f.apply(x)) == target)
            .collect();
        if !preimage.iter().any(|&b| b) {
            return Ok(false);
        }
        // a union of blocks contains each block entirely or not at all
        for block in p.blocks() {
            let inside = preimage[block[0]];
            if block.iter().any(|&x| preimage[x] != inside) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `x ~ y ⇔ xf ~ yf` for all pairs, where `~` is "same block". Checked
/// pairwise, without the character map.
pub fn is_e_star_preserving(f: &Transformation, p: &SetPartition) -> Result<bool> {
    check_sizes(f, p)?;
    let n = f.n();
    for x in 0..n {
        for y in x + 1..n {
            let related = p.block_of(x) == p.block_of(y);
            let images_related = p.block_of(f.apply(x)) == p.block_of(f.apply(y));
            if related != images_related {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn character_injective(f: &Transformation, p: &SetPartition) -> Result<bool> {
    Ok(character(f, p)?.is_injective())
}

/// `f ∈ S(X,P)` via its block maps: every block map bijective onto its
/// codomain block and the character bijective.
pub fn in_units(f: &Transformation, p: &SetPartition) -> Result<bool> {
    check_sizes(f, p)?;
    if split_witness(f, p).is_some() {
        return Ok(false);
    }
    let family = block_map_family(f, p)?;
    if !family.maps().iter().all(BlockMap::is_bijective) {
        return Ok(false);
    }
    Ok(character(f, p)?.is_bijective())
}

/// `f ∈ S(X,P)` directly: a bijection such that both `f` and `f⁻¹` preserve
/// `p`.
pub fn in_units_direct(f: &Transformation, p: &SetPartition) -> Result<bool> {
    check_sizes(f, p)?;
    match f.inverse() {
        Some(inv) => Ok(preserves(f, p)? && preserves(&inv, p)?),
        None => Ok(false),
    }
}

/// The image of every block is itself a block of the same size.
pub fn block_images_are_blocks(f: &Transformation, p: &SetPartition) -> Result<bool> {
    check_sizes(f, p)?;
    Ok(p.blocks().iter().all(|block| {
        let mut image: Vec<usize> = block.iter().map(|&x| f.apply(x)).collect();
        image.sort_unstable();
        image.dedup();
        let target = p.block(p.block_of(image[0]));
        image == target && target.len() == block.len()
    }))
}

pub fn is_idempotent(f: &Transformation) -> bool {
    f.then(f).map(|ff| ff == *f).unwrap_or(false)
}

/// Idempotence of `f ∈ Σ(X,P)` decided block by block: every block map must
/// be an idempotent selfmap of its own block.
pub fn sigma_idempotent_via_blocks(f: &Transformation, p: &SetPartition) -> Result<bool> {
    require_preserving(f, p)?;
    if let Some(block) = missed_block(f, p)? {
        return Err(Error::NotInSigma { block });
    }
    let family = block_map_family(f, p)?;
    Ok(family.maps().iter().all(BlockMap::is_idempotent))
}

/// Named predicates, as exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    Preserves,
    Sigma,
    SigmaCharacter,
    SigmaTopology,
    EStar,
    Units,
    Idempotent,
    SigmaIdempotent,
}

impl Predicate {
    pub const ALL: [Predicate; 8] = [
        Predicate::Preserves,
        Predicate::Sigma,
        Predicate::SigmaCharacter,
        Predicate::SigmaTopology,
        Predicate::EStar,
        Predicate::Units,
        Predicate::Idempotent,
        Predicate::SigmaIdempotent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Preserves => "preserves",
            Predicate::Sigma => "sigma",
            Predicate::SigmaCharacter => "sigma-character",
            Predicate::SigmaTopology => "sigma-topology",
            Predicate::EStar => "estar",
            Predicate::Units => "units",
            Predicate::Idempotent => "idempotent",
            Predicate::SigmaIdempotent => "sigma-idempotent",
        }
    }

    pub fn evaluate(self, f: &Transformation, p: &SetPartition) -> Result<bool> {
        match self {
            Predicate::Preserves => preserves(f, p),
            Predicate::Sigma => in_sigma(f, p),
            Predicate::SigmaCharacter => sigma_via_character(f, p),
            Predicate::SigmaTopology => sigma_via_topology(f, p),
            Predicate::EStar => is_e_star_preserving(f, p),
            Predicate::Units => in_units(f, p),
            Predicate::Idempotent => {
                check_sizes(f, p)?;
                Ok(is_idempotent(f))
            }
            Predicate::SigmaIdempotent => sigma_idempotent_via_blocks(f, p),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::parse(s, "unknown predicate"))
    }
}
