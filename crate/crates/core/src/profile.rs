//! Block-size profiles: the `(m, k)` data of a partition.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::SetPartition;

/// One size class of blocks: `multiplicity` blocks of `size` points each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SizeClass {
    pub size: usize,
    pub multiplicity: usize,
}

/// Distinct block sizes with multiplicities, ascending by size.
///
/// A partition with profile `[(n_1, m_1), …, (n_k, m_k)]` has `m = Σ m_i`
/// blocks over `n = Σ m_i n_i` points. Every closed-form count depends on a
/// partition only through its profile.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionProfile {
    entries: Vec<SizeClass>,
}

impl PartitionProfile {
    /// Takes `(size, multiplicity)` pairs in any order. Sizes must be distinct
    /// and every value at least 1.
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut entries: Vec<SizeClass> = pairs
            .into_iter()
            .map(|(size, multiplicity)| SizeClass { size, multiplicity })
            .collect();
        if entries.is_empty() {
            return Err(Error::InvalidProfile("no size classes".into()));
        }
        for e in &entries {
            if e.size == 0 {
                return Err(Error::InvalidProfile("block size 0".into()));
            }
            if e.multiplicity == 0 {
                return Err(Error::InvalidProfile(format!(
                    "zero multiplicity for size {}",
                    e.size
                )));
            }
        }
        entries.sort_unstable();
        if let Some(w) = entries.windows(2).find(|w| w[0].size == w[1].size) {
            return Err(Error::InvalidProfile(format!(
                "size {} listed twice",
                w[0].size
            )));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[SizeClass] {
        &self.entries
    }

    /// Ground-set size `n`.
    pub fn n(&self) -> usize {
        self.entries.iter().map(|e| e.size * e.multiplicity).sum()
    }

    /// Block count `m`.
    pub fn m(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Number of distinct sizes `k`.
    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn is_uniform(&self) -> bool {
        self.entries.len() == 1
    }

    /// Every block size with repetition, ascending.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.size, e.multiplicity))
            .collect()
    }

    /// A canonical partition with this profile: blocks of consecutive points,
    /// smaller blocks first.
    pub fn to_partition(&self) -> Result<SetPartition> {
        let mut next = 0;
        let blocks = self
            .block_sizes()
            .into_iter()
            .map(|s| {
                let b: Vec<usize> = (next..next + s).collect();
                next += s;
                b
            })
            .collect();
        SetPartition::new(next, blocks)
    }
}

pub fn profile_of(p: &SetPartition) -> PartitionProfile {
    let mut sizes: Vec<usize> = p.blocks().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    let mut entries: Vec<SizeClass> = Vec::new();
    for s in sizes {
        match entries.last_mut() {
            Some(e) if e.size == s => e.multiplicity += 1,
            _ => entries.push(SizeClass {
                size: s,
                multiplicity: 1,
            }),
        }
    }
    PartitionProfile { entries }
}

impl FromStr for PartitionProfile {
    type Err = Error;

    /// `size:multiplicity` pairs separated by commas, e.g. `2:1,1:1`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::parse(text, "empty profile"));
        }
        let pairs = text
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let (size, mult) = tok
                    .split_once(':')
                    .ok_or_else(|| Error::parse(tok, "expected size:multiplicity"))?;
                let parse = |s: &str| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::parse(tok, "not a nonnegative decimal integer"))
                };
                Ok((parse(size)?, parse(mult)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(pairs)
    }
}

impl fmt::Display for PartitionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", e.size, e.multiplicity)?;
        }
        Ok(())
    }
}
