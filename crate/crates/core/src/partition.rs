//! Set partitions of `{0, …, n-1}` in canonical form, and their enumeration
//! by restricted-growth strings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of `{0, …, n-1}` into nonempty disjoint blocks.
///
/// Canonical form: each block is ascending and blocks are ordered by their
/// minimum element. Block `i` of a partition is `X_i`, and block indices are
/// the domain of every character map.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl SetPartition {
    /// Validates and canonicalizes. Block order and element order in the
    /// input are irrelevant.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let mut seen = vec![false; n];
        let mut blocks = blocks;
        for (bi, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(Error::parse("", format!("empty block at position {bi}")));
            }
            for &x in block.iter() {
                if x >= n {
                    return Err(Error::parse(
                        x.to_string(),
                        format!("point {x} out of range for n={n}"),
                    ));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::parse(x.to_string(), format!("duplicate point {x}")));
                }
            }
            block.sort_unstable();
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::parse(
                missing.to_string(),
                format!("missing point {missing}"),
            ));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self::from_canonical(n, blocks))
    }

    fn from_canonical(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        let mut block_of = vec![0; n];
        for (i, block) in blocks.iter().enumerate() {
            for &x in block {
                block_of[x] = i;
            }
        }
        Self {
            n,
            blocks,
            block_of,
        }
    }

    /// Builds the partition whose block labels are given per point. Labels
    /// need not be contiguous.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        let mut order: Vec<usize> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (x, &label) in labels.iter().enumerate() {
            match order.iter().position(|&l| l == label) {
                Some(i) => blocks[i].push(x),
                None => {
                    order.push(label);
                    blocks.push(vec![x]);
                }
            }
        }
        // first-occurrence order is already ascending by minimum
        Ok(Self::from_canonical(labels.len(), blocks))
    }

    /// The single-block partition `{X}`.
    pub fn single_block(n: usize) -> Result<Self> {
        Self::new(n, vec![(0..n).collect()])
    }

    /// The all-singletons partition.
    pub fn discrete(n: usize) -> Result<Self> {
        Self::new(n, (0..n).map(|x| vec![x]).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of blocks `m`.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    /// Index of the block containing `x`.
    #[inline]
    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    /// Per-point block labels, i.e. the restricted-growth string.
    pub fn labels(&self) -> &[usize] {
        &self.block_of
    }

    /// Trivial means discrete or single-block.
    pub fn is_trivial(&self) -> bool {
        self.blocks.len() == 1 || self.blocks.len() == self.n
    }

    pub fn is_uniform(&self) -> bool {
        let size = self.blocks[0].len();
        self.blocks.iter().all(|b| b.len() == size)
    }

    /// All partitions of `{0, …, n-1}` in canonical (restricted-growth) order.
    pub fn all(n: usize) -> SetPartitions {
        SetPartitions::new(n)
    }
}

/// Parses blocks separated by `|`, points comma-separated, 0-based.
pub fn parse_partition(text: &str, n: usize) -> Result<SetPartition> {
    let text = text.trim();
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if text.is_empty() {
        return Err(Error::parse(text, "empty partition"));
    }
    let mut blocks = Vec::new();
    for (bi, raw) in text.split('|').enumerate() {
        let raw = raw.trim();
        if raw.is_empty() {
            return Err(Error::parse(raw, format!("empty block at position {bi}")));
        }
        let block = raw
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>()
                    .map_err(|_| Error::parse(tok, "not a nonnegative decimal integer"))
            })
            .collect::<Result<Vec<_>>>()?;
        blocks.push(block);
    }
    SetPartition::new(n, blocks)
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Infers `n` as the number of listed points.
    fn from_str(text: &str) -> Result<Self> {
        let n = text
            .split(['|', ','])
            .filter(|t| !t.trim().is_empty())
            .count();
        parse_partition(text, n)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, x) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Iterator over all set partitions of an `n`-set via restricted-growth
/// strings `a` with `a[0] = 0` and `a[i] <= 1 + max(a[..i])`.
pub struct SetPartitions {
    rgs: Option<Vec<usize>>,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        Self {
            rgs: (n > 0).then(|| vec![0; n]),
        }
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        let rgs = self.rgs.as_mut()?;
        let out = SetPartition::from_labels(rgs).expect("nonempty rgs");

        let n = rgs.len();
        let mut prefix_max = vec![0; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(rgs[i - 1]);
        }
        match (1..n).rev().find(|&i| rgs[i] <= prefix_max[i]) {
            Some(i) => {
                rgs[i] += 1;
                for a in &mut rgs[i + 1..] {
                    *a = 0;
                }
            }
            None => self.rgs = None,
        }
        Some(out)
    }
}

/// Bell number by direct enumeration count; used only for sanity checks.
pub fn count_partitions(n: usize) -> usize {
    SetPartition::all(n).count()
}
