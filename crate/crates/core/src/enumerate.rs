//! Exhaustive generation of `T(X,P)`, `Σ(X,P)`, `S(X,P)`, their idempotents
//! and the χ-classes of `Σ(X,P)`.
//!
//! Two strategies are provided. `Brute` filters all `n^n` selfmaps with the
//! membership predicates. `Constructive` assembles maps from their block-map
//! families: a codomain block and a block map per domain block. Both emit
//! the same lexicographically ordered sequence.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::character::CharacterMap;
use crate::combinat::{factorial, next_permutation, pow};
use crate::count;
use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::membership::{character, in_sigma, in_units, is_idempotent, preserves};
use crate::partition::SetPartition;
use crate::profile::profile_of;
use crate::transformation::{AllMaps, Transformation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Brute,
    Constructive,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Strategy::Brute),
            "constructive" => Ok(Strategy::Constructive),
            _ => Err(Error::parse(s, "unknown strategy")),
        }
    }
}

/// Which semigroup's idempotents to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    T,
    Sigma,
}

/// The sets that can be enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetKind {
    T,
    Sigma,
    Units,
    IdempotentsSigma,
    IdempotentsT,
}

impl SetKind {
    pub fn name(self) -> &'static str {
        match self {
            SetKind::T => "T",
            SetKind::Sigma => "Sigma",
            SetKind::Units => "S",
            SetKind::IdempotentsSigma => "E-Sigma",
            SetKind::IdempotentsT => "E-T",
        }
    }
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            SetKind::T,
            SetKind::Sigma,
            SetKind::Units,
            SetKind::IdempotentsSigma,
            SetKind::IdempotentsT,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| Error::parse(s, "unknown set (expected T, Sigma, S, E-Sigma or E-T)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumOptions {
    pub strategy: Strategy,
    pub limit: Option<usize>,
    pub guard: Guard,
}

impl EnumOptions {
    pub fn brute() -> Self {
        Self::default()
    }

    pub fn constructive() -> Self {
        Self {
            strategy: Strategy::Constructive,
            ..Self::default()
        }
    }
}

/// An enumerated set, possibly truncated to the requested limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub maps: Vec<Transformation>,
    /// Size of the full set before truncation.
    pub total: usize,
    pub truncated: bool,
}

impl Enumeration {
    fn finish(mut maps: Vec<Transformation>, limit: Option<usize>) -> Self {
        maps.sort_unstable();
        let total = maps.len();
        let truncated = matches!(limit, Some(l) if l < total);
        if let Some(l) = limit {
            maps.truncate(l);
        }
        Self {
            maps,
            total,
            truncated,
        }
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

fn brute_filter(
    p: &SetPartition,
    guard: Guard,
    keep: impl Fn(&Transformation) -> bool,
) -> Result<Vec<Transformation>> {
    guard.check("selfmaps", &pow(p.n(), p.n()))?;
    Ok(AllMaps::new(p.n()).filter(|f| keep(f)).collect())
}

/// All image tuples for a map from a `len`-point block into `codomain`.
fn maps_into(len: usize, codomain: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx = vec![0usize; len];
    loop {
        out.push(idx.iter().map(|&i| codomain[i]).collect());
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < codomain.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn bijections_onto(codomain: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = codomain.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

/// Idempotent selfmaps of a block, as image tuples over its points.
fn idempotent_selfmaps(block: &[usize]) -> Vec<Vec<usize>> {
    maps_into(block.len(), block)
        .into_iter()
        .filter(|images| {
            images.iter().all(|&y| {
                let j = block.binary_search(&y).expect("selfmap");
                images[j] == y
            })
        })
        .collect()
}

/// Glues one candidate block map per block in every possible combination.
fn assemble(p: &SetPartition, candidates: &[Vec<Vec<usize>>], out: &mut Vec<Transformation>) {
    if candidates.iter().any(Vec::is_empty) {
        return;
    }
    let m = p.block_count();
    let mut choice = vec![0usize; m];
    let mut images = vec![0usize; p.n()];
    loop {
        for (i, block) in p.blocks().iter().enumerate() {
            for (&x, &y) in block.iter().zip(&candidates[i][choice[i]]) {
                images[x] = y;
            }
        }
        out.push(Transformation::from_images_unchecked(images.clone()));
        let mut pos = m;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < candidates[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// Runs `visit` for every permutation of block indices.
fn for_each_block_permutation(m: usize, mut visit: impl FnMut(&[usize])) {
    let mut phi: Vec<usize> = (0..m).collect();
    loop {
        visit(&phi);
        if !next_permutation(&mut phi) {
            break;
        }
    }
}

/// All of `T(X,P)`.
pub fn enumerate_t(p: &SetPartition, opts: &EnumOptions) -> Result<Enumeration> {
    let maps = match opts.strategy {
        Strategy::Brute => brute_filter(p, opts.guard, |f| preserves(f, p).unwrap_or(false))?,
        Strategy::Constructive => {
            opts.guard.check("maps in T(X,P)", &count::count_t(&profile_of(p)))?;
            let candidates: Vec<Vec<Vec<usize>>> = p
                .blocks()
                .iter()
                .map(|dom| {
                    p.blocks()
                        .iter()
                        .flat_map(|cod| maps_into(dom.len(), cod))
                        .collect()
                })
                .collect();
            let mut out = Vec::new();
            assemble(p, &candidates, &mut out);
            out
        }
    };
    Ok(Enumeration::finish(maps, opts.limit))
}

/// All of `Σ(X,P)`. The constructive route runs over every bijective
/// character and, per block, every map into the assigned codomain block.
pub fn enumerate_sigma(p: &SetPartition, opts: &EnumOptions) -> Result<Enumeration> {
    let maps = match opts.strategy {
        Strategy::Brute => brute_filter(p, opts.guard, |f| in_sigma(f, p).unwrap_or(false))?,
        Strategy::Constructive => {
            let m = p.block_count();
            opts.guard.check("block permutations", &factorial(m))?;
            opts.guard
                .check("maps in Sigma(X,P)", &count::count_sigma(&profile_of(p), opts.guard)?)?;
            let mut out = Vec::new();
            for_each_block_permutation(m, |phi| {
                let candidates: Vec<_> = p
                    .blocks()
                    .iter()
                    .enumerate()
                    .map(|(i, dom)| maps_into(dom.len(), p.block(phi[i])))
                    .collect();
                assemble(p, &candidates, &mut out);
            });
            out
        }
    };
    Ok(Enumeration::finish(maps, opts.limit))
}

/// All of `S(X,P)`. The constructive route picks a size-respecting block
/// permutation, then a bijection between each block and its target.
pub fn enumerate_units(p: &SetPartition, opts: &EnumOptions) -> Result<Enumeration> {
    let maps = match opts.strategy {
        Strategy::Brute => brute_filter(p, opts.guard, |f| in_units(f, p).unwrap_or(false))?,
        Strategy::Constructive => {
            let m = p.block_count();
            opts.guard.check("block permutations", &factorial(m))?;
            opts.guard
                .check("maps in S(X,P)", &count::count_units(&profile_of(p)))?;
            let mut out = Vec::new();
            for_each_block_permutation(m, |phi| {
                let size_respecting =
                    (0..m).all(|i| p.block(i).len() == p.block(phi[i]).len());
                if !size_respecting {
                    return;
                }
                let candidates: Vec<_> = (0..m).map(|i| bijections_onto(p.block(phi[i]))).collect();
                assemble(p, &candidates, &mut out);
            });
            out
        }
    };
    Ok(Enumeration::finish(maps, opts.limit))
}

/// Idempotents of `T(X,P)` or `Σ(X,P)`. For `Σ` the constructive route picks
/// an idempotent selfmap of each block independently; for `T` it filters the
/// constructive `T(X,P)`.
pub fn enumerate_idempotents(
    p: &SetPartition,
    ambient: Ambient,
    opts: &EnumOptions,
) -> Result<Enumeration> {
    let maps = match (opts.strategy, ambient) {
        (Strategy::Brute, Ambient::T) => brute_filter(p, opts.guard, |f| {
            is_idempotent(f) && preserves(f, p).unwrap_or(false)
        })?,
        (Strategy::Brute, Ambient::Sigma) => brute_filter(p, opts.guard, |f| {
            is_idempotent(f) && in_sigma(f, p).unwrap_or(false)
        })?,
        (Strategy::Constructive, Ambient::T) => {
            let all = enumerate_t(
                p,
                &EnumOptions {
                    limit: None,
                    ..*opts
                },
            )?;
            all.maps.into_iter().filter(is_idempotent).collect()
        }
        (Strategy::Constructive, Ambient::Sigma) => {
            opts.guard.check(
                "idempotents in Sigma(X,P)",
                &count::count_sigma_idempotents(&profile_of(p)),
            )?;
            let candidates: Vec<_> = p.blocks().iter().map(|b| idempotent_selfmaps(b)).collect();
            let mut out = Vec::new();
            assemble(p, &candidates, &mut out);
            out
        }
    };
    Ok(Enumeration::finish(maps, opts.limit))
}

/// Dispatches on [`SetKind`].
pub fn enumerate_set(p: &SetPartition, kind: SetKind, opts: &EnumOptions) -> Result<Enumeration> {
    match kind {
        SetKind::T => enumerate_t(p, opts),
        SetKind::Sigma => enumerate_sigma(p, opts),
        SetKind::Units => enumerate_units(p, opts),
        SetKind::IdempotentsSigma => enumerate_idempotents(p, Ambient::Sigma, opts),
        SetKind::IdempotentsT => enumerate_idempotents(p, Ambient::T, opts),
    }
}

/// One class of `Σ(X,P)` under "same character map".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiClass {
    pub character: CharacterMap,
    pub size: usize,
    /// The lexicographically first members, when requested.
    pub representatives: Option<Vec<Transformation>>,
}

impl ChiClass {
    /// `∏_i |X_{iφ}|^{|X_i|}` for this class's character `φ`.
    pub fn predicted_size(&self, p: &SetPartition) -> BigUint {
        count::chi_class_size(p, self.character.images())
    }
}

/// Splits `Σ(X,P)` by character map, classes ordered by character.
/// `representatives` caps how many members are kept per class.
pub fn chi_classes(
    p: &SetPartition,
    opts: &EnumOptions,
    representatives: Option<usize>,
) -> Result<Vec<ChiClass>> {
    let sigma = enumerate_sigma(
        p,
        &EnumOptions {
            limit: None,
            ..*opts
        },
    )?;
    let mut classes: BTreeMap<CharacterMap, (usize, Vec<Transformation>)> = BTreeMap::new();
    for f in sigma.maps {
        let chi = character(&f, p)?;
        let entry = classes.entry(chi).or_default();
        entry.0 += 1;
        if representatives.is_some_and(|cap| entry.1.len() < cap) {
            entry.1.push(f);
        }
    }
    Ok(classes
        .into_iter()
        .map(|(character, (size, reps))| ChiClass {
            character,
            size,
            representatives: representatives.map(|_| reps),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::parse_partition;

    fn t(images: &[usize]) -> Transformation {
        Transformation::new(images.to_vec()).unwrap()
    }

    fn part(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn both(p: &SetPartition, kind: SetKind) -> Vec<Transformation> {
        let brute = enumerate_set(p, kind, &EnumOptions::brute()).unwrap();
        let cons = enumerate_set(p, kind, &EnumOptions::constructive()).unwrap();
        assert_eq!(brute, cons, "strategies disagree on {kind} for {p}");
        brute.maps
    }

    #[test]
    fn enumerate_t_examples() {
        assert_eq!(both(&part("0,1|2"), SetKind::T).len(), 15);
        assert_eq!(both(&part("0|1|2"), SetKind::T).len(), 27);
        assert_eq!(both(&part("0,1,2"), SetKind::T).len(), 27);
    }

    #[test]
    fn enumerate_sigma_examples() {
        assert_eq!(both(&part("0,1|2"), SetKind::Sigma).len(), 6);
        assert_eq!(both(&part("0,1,2"), SetKind::Sigma).len(), 27);
        let s3 = both(&part("0|1|2"), SetKind::Sigma);
        assert_eq!(s3.len(), 6);
        assert!(s3.iter().all(Transformation::is_bijective));
    }

    #[test]
    fn enumerate_units_examples() {
        assert_eq!(
            both(&part("0,1|2"), SetKind::Units),
            vec![t(&[0, 1, 2]), t(&[1, 0, 2])]
        );
        assert_eq!(both(&part("0,1|2,3"), SetKind::Units).len(), 8);
        let s3 = both(&part("0,1,2"), SetKind::Units);
        assert_eq!(s3.len(), 6);
        assert!(s3.iter().all(Transformation::is_bijective));
    }

    #[test]
    fn enumerate_idempotent_examples() {
        assert_eq!(
            both(&part("0,1|2"), SetKind::IdempotentsSigma),
            vec![t(&[0, 0, 2]), t(&[0, 1, 2]), t(&[1, 1, 2])]
        );
        let et = both(&part("0,1|2"), SetKind::IdempotentsT);
        for e in [t(&[0, 0, 2]), t(&[0, 1, 2]), t(&[1, 1, 2])] {
            assert!(et.contains(&e));
        }
        assert!(et.len() > 3);
        assert_eq!(
            both(&parse_partition("0|1", 2).unwrap(), SetKind::IdempotentsSigma),
            vec![t(&[0, 1])]
        );
    }

    #[test]
    fn strategies_agree_up_to_five_points() {
        for n in 1..=5 {
            for p in SetPartition::all(n) {
                for kind in [
                    SetKind::T,
                    SetKind::Sigma,
                    SetKind::Units,
                    SetKind::IdempotentsSigma,
                    SetKind::IdempotentsT,
                ] {
                    both(&p, kind);
                }
            }
        }
    }

    #[test]
    fn limit_truncates_with_flag() {
        let p = part("0,1|2");
        let e = enumerate_t(
            &p,
            &EnumOptions {
                limit: Some(4),
                ..EnumOptions::brute()
            },
        )
        .unwrap();
        assert_eq!(e.len(), 4);
        assert_eq!(e.total, 15);
        assert!(e.truncated);
        let full = enumerate_t(&p, &EnumOptions::brute()).unwrap();
        assert_eq!(e.maps, full.maps[..4]);
        assert!(!full.truncated);
    }

    #[test]
    fn guard_blocks_large_brute_runs() {
        let p = SetPartition::discrete(12).unwrap();
        let err = enumerate_t(&p, &EnumOptions::brute()).unwrap_err();
        assert!(matches!(err, Error::GuardExceeded { what: "selfmaps", .. }));
        let err = enumerate_sigma(&p, &EnumOptions::constructive()).unwrap_err();
        assert!(matches!(err, Error::GuardExceeded { .. }));
    }

    #[test]
    fn chi_class_examples() {
        let classes = chi_classes(&part("0,1|2"), &EnumOptions::brute(), None).unwrap();
        let summary: Vec<_> = classes
            .iter()
            .map(|c| (c.character.images().to_vec(), c.size))
            .collect();
        assert_eq!(summary, vec![(vec![0, 1], 4), (vec![1, 0], 2)]);

        let classes = chi_classes(&part("0,1|2,3"), &EnumOptions::brute(), None).unwrap();
        assert_eq!(classes.iter().map(|c| c.size).collect::<Vec<_>>(), [16, 16]);

        let p = part("0|1|2");
        let classes = chi_classes(&p, &EnumOptions::brute(), Some(1)).unwrap();
        assert_eq!(classes.len(), 6);
        for c in &classes {
            assert_eq!(c.size, 1);
            assert_eq!(c.predicted_size(&p), BigUint::from(1u32));
            assert_eq!(c.representatives.as_ref().unwrap().len(), 1);
        }
    }

    #[test]
    fn closure_and_group_structure() {
        for p in SetPartition::all(4) {
            let tp = enumerate_t(&p, &EnumOptions::brute()).unwrap().maps;
            for f in &tp {
                for g in &tp {
                    let fg = f.then(g).unwrap();
                    assert!(tp.binary_search(&fg).is_ok());
                }
            }
            let sp = enumerate_units(&p, &EnumOptions::brute()).unwrap().maps;
            assert!(sp.binary_search(&Transformation::identity(4)).is_ok());
            for f in &sp {
                assert!(sp.binary_search(&f.inverse().unwrap()).is_ok());
                for g in &sp {
                    assert!(sp.binary_search(&f.then(g).unwrap()).is_ok());
                }
            }
        }
    }

    #[test]
    fn containments() {
        for p in SetPartition::all(4) {
            let tp = enumerate_t(&p, &EnumOptions::brute()).unwrap().maps;
            let sig = enumerate_sigma(&p, &EnumOptions::brute()).unwrap().maps;
            let units = enumerate_units(&p, &EnumOptions::brute()).unwrap().maps;
            let es = enumerate_idempotents(&p, Ambient::Sigma, &EnumOptions::brute()).unwrap().maps;
            let et = enumerate_idempotents(&p, Ambient::T, &EnumOptions::brute()).unwrap().maps;
            assert!(units.iter().all(|f| sig.binary_search(f).is_ok()));
            assert!(sig.iter().all(|f| tp.binary_search(f).is_ok()));
            let sigma_cap_et: Vec<_> = et
                .iter()
                .filter(|f| sig.binary_search(f).is_ok())
                .cloned()
                .collect();
            assert_eq!(es, sigma_cap_et);
        }
    }
}
