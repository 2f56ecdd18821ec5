//! Total selfmaps on the ground set `{0, …, n-1}`.
//!
//! Maps act on the right and compose left to right: `x(fg) = (xf)g`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A selfmap on `{0, …, n-1}` stored as its image table.
///
/// Ordering is lexicographic on the image table, which is the order every
/// enumeration in this crate emits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transformation {
    images: Vec<usize>,
}

impl Transformation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= n) {
            return Err(Error::parse(
                bad.to_string(),
                format!("image {bad} out of range for n={n}"),
            ));
        }
        Ok(Self { images })
    }

    /// Callers guarantee every entry is below `images.len()`.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(!images.is_empty() && images.iter().all(|&y| y < images.len()));
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn constant(n: usize, value: usize) -> Result<Self> {
        Self::new(vec![value; n])
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Transformation) -> Result<Transformation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Self {
            images: self.images.iter().map(|&y| other.images[y]).collect(),
        })
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.n()];
        for &y in &self.images {
            if std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        true
    }

    pub fn inverse(&self) -> Option<Transformation> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.n()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Some(Self { images: inv })
    }

    pub fn is_constant(&self) -> bool {
        self.images.iter().all(|&y| y == self.images[0])
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// `f² = f`, i.e. `f` fixes every point of its image.
    pub fn is_idempotent(&self) -> bool {
        self.images.iter().all(|&y| self.images[y] == y)
    }

    /// Membership mask of the image set.
    pub fn image_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.n()];
        for &y in &self.images {
            mask[y] = true;
        }
        mask
    }
}

/// `f` then `g`, i.e. `x(fg) = (xf)g`.
pub fn compose(f: &Transformation, g: &Transformation) -> Result<Transformation> {
    f.then(g)
}

/// Parses `n` comma-separated 0-based images.
pub fn parse_transformation(text: &str, n: usize) -> Result<Transformation> {
    let f: Transformation = text.parse()?;
    if f.n() != n {
        return Err(Error::parse(
            text.trim(),
            format!("expected {n} images, found {}", f.n()),
        ));
    }
    Ok(f)
}

impl FromStr for Transformation {
    type Err = Error;

    /// Infers `n` from the number of entries.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        let images = text
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>()
                    .map_err(|_| Error::parse(tok, "not a nonnegative decimal integer"))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(images)
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, y) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{y}")?;
        }
        Ok(())
    }
}

/// All `n^n` selfmaps of `{0, …, n-1}` in lexicographic order.
pub struct AllMaps {
    current: Option<Vec<usize>>,
}

impl AllMaps {
    pub fn new(n: usize) -> Self {
        Self {
            current: (n > 0).then(|| vec![0; n]),
        }
    }
}

impl Iterator for AllMaps {
    type Item = Transformation;

    fn next(&mut self) -> Option<Transformation> {
        let cur = self.current.as_mut()?;
        let out = Transformation::from_images_unchecked(cur.clone());
        let n = cur.len();
        let mut i = n;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < n {
                break;
            }
            cur[i] = 0;
        }
        Some(out)
    }
}
