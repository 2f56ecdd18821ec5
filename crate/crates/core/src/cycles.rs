//! Cycle structure of permutations, and nontrivial partitions preserved by a
//! given map.

use std::fmt;

use crate::error::{Error, Result};
use crate::membership::{in_units, preserves};
use crate::partition::SetPartition;
use crate::transformation::Transformation;

/// Disjoint cycles of a permutation, fixed points included. Each cycle starts
/// at its minimum and cycles are ordered by minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// One cycle through every point.
    pub fn is_full_cycle(&self) -> bool {
        self.cycles.len() == 1
    }

    /// Cycle lengths in cycle order.
    pub fn cycle_type(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    pub fn to_transformation(&self) -> Transformation {
        let mut images = vec![0; self.n];
        for cycle in &self.cycles {
            for (k, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Transformation::from_images_unchecked(images)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

pub fn decompose(f: &Transformation) -> Result<CycleDecomposition> {
    if !f.is_bijective() {
        return Err(Error::NotBijective);
    }
    let n = f.n();
    let mut visited = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut cycle = vec![start];
        visited[start] = true;
        let mut x = f.apply(start);
        while x != start {
            visited[x] = true;
            cycle.push(x);
            x = f.apply(x);
        }
        cycles.push(cycle);
    }
    Ok(CycleDecomposition { n, cycles })
}

pub fn is_full_cycle(f: &Transformation) -> bool {
    decompose(f).is_ok_and(|c| c.is_full_cycle())
}

/// Blocks are the classes of `x ~ y ⇔ xf = yf`.
pub fn kernel_partition(f: &Transformation) -> Result<SetPartition> {
    if f.is_bijective() {
        return Err(Error::Bijective);
    }
    if f.is_constant() {
        return Err(Error::ConstantMap);
    }
    SetPartition::from_labels(f.images())
}

/// `{{0}, {1, …, n-1}}`, used where any nontrivial partition will do.
fn default_split(n: usize) -> SetPartition {
    SetPartition::new(n, vec![vec![0], (1..n).collect()]).expect("valid split")
}

pub fn smallest_prime_divisor(n: usize) -> Option<usize> {
    (2..=n).find(|d| n.is_multiple_of(*d))
}

/// Blocks `{c_i, c_{i+m}, c_{i+2m}, …}` along the cycle `c_0 → c_1 → …`.
fn progression_partition(order: &[usize], m: usize) -> SetPartition {
    let blocks = (0..m)
        .map(|i| order.iter().skip(i).step_by(m).copied().collect())
        .collect();
    SetPartition::new(order.len(), blocks).expect("progression blocks cover the cycle")
}

/// The orbit of 0 in visiting order.
fn cycle_order(f: &Transformation) -> Vec<usize> {
    let mut order = vec![0];
    let mut x = f.apply(0);
    while x != 0 {
        order.push(x);
        x = f.apply(x);
    }
    order
}

/// A nontrivial partition preserved by `f`, or `None` when none exists.
///
/// - constant: `{{0}, {1, …, n-1}}`; `f` lies in `T(X,P)`.
/// - other non-bijections: the kernel partition; `f` lies in `T(X,P)`.
/// - identity: `{{0}, {1, …, n-1}}`; `f` lies in `S(X,P)`.
/// - other permutations that are not `n`-cycles: support of the cycle through
///   the smallest moved point against the rest; `f` lies in `S(X,P)`.
/// - `n`-cycles with composite `n`: progression blocks along the cycle for
///   the smallest prime divisor of `n`; `f` lies in `S(X,P)`.
/// - `n`-cycles with prime `n`: `None`.
///
/// No nontrivial partition exists at all when `n ≤ 2`.
pub fn find_preserved_partition(f: &Transformation) -> Option<SetPartition> {
    let n = f.n();
    if n <= 2 {
        return None;
    }
    if !f.is_bijective() {
        return Some(if f.is_constant() {
            default_split(n)
        } else {
            kernel_partition(f).expect("nonconstant non-bijection")
        });
    }
    let cycles = decompose(f).expect("bijection");
    if cycles.is_full_cycle() {
        let m = smallest_prime_divisor(n).expect("n > 2");
        return (m < n).then(|| progression_partition(&cycle_order(f), m));
    }
    match cycles.cycles().iter().find(|c| c.len() > 1) {
        None => Some(default_split(n)),
        Some(first) => {
            let rest = (0..n).filter(|x| !first.contains(x)).collect();
            Some(SetPartition::new(n, vec![first.clone(), rest]).expect("two-block split"))
        }
    }
}

/// For an `n`-cycle `f` and `1 < m < n`: an `m`-block partition `P` with
/// `f ∈ S(X,P)` exists iff `m` divides `n`. Returns the progression witness
/// when it does.
pub fn preserved_m_partition_exists(f: &Transformation, m: usize) -> Result<Option<SetPartition>> {
    let n = f.n();
    if !is_full_cycle(f) {
        return Err(Error::NotFullCycle { n });
    }
    if m <= 1 || m >= n {
        return Err(Error::BlockCountOutOfRange { m, n });
    }
    Ok(n.is_multiple_of(m).then(|| progression_partition(&cycle_order(f), m)))
}

/// Which membership an exhaustive search should demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// `f ∈ T(X,P)`
    Preserving,
    /// `f ∈ S(X,P)`
    Units,
}

/// First nontrivial partition in canonical order, optionally with exactly
/// `block_count` blocks, for which `f` meets `target`.
pub fn search_preserved_partition(
    f: &Transformation,
    block_count: Option<usize>,
    target: Target,
) -> Option<SetPartition> {
    SetPartition::all(f.n())
        .filter(|p| !p.is_trivial())
        .filter(|p| block_count.is_none_or(|m| p.block_count() == m))
        .find(|p| match target {
            Target::Preserving => preserves(f, p).unwrap_or(false),
            Target::Units => in_units(f, p).unwrap_or(false),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transformation::AllMaps;

    fn t(images: &[usize]) -> Transformation {
        Transformation::new(images.to_vec()).unwrap()
    }

    fn blocks(p: &SetPartition) -> Vec<Vec<usize>> {
        p.blocks().to_vec()
    }

    #[test]
    fn decompose_examples() {
        let c = decompose(&t(&[1, 0, 3, 2])).unwrap();
        assert_eq!(c.cycles(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(c.to_string(), "(0 1)(2 3)");

        let c = decompose(&t(&[1, 2, 3, 4, 5, 0])).unwrap();
        assert_eq!(c.cycles(), &[vec![0, 1, 2, 3, 4, 5]]);
        assert!(c.is_full_cycle());

        let c = decompose(&Transformation::identity(3)).unwrap();
        assert_eq!(c.cycles(), &[vec![0], vec![1], vec![2]]);

        assert_eq!(decompose(&t(&[0, 0, 1])), Err(Error::NotBijective));
    }

    #[test]
    fn decomposition_reproduces_every_permutation() {
        for n in 1..=6 {
            for f in AllMaps::new(n).filter(Transformation::is_bijective) {
                let c = decompose(&f).unwrap();
                assert_eq!(c.to_transformation(), f);
                assert_eq!(c.cycle_type().iter().sum::<usize>(), n);
                for cycle in c.cycles() {
                    assert_eq!(cycle[0], *cycle.iter().min().unwrap());
                }
                assert!(c.cycles().windows(2).all(|w| w[0][0] < w[1][0]));
            }
        }
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(blocks(&kernel_partition(&t(&[0, 0, 2])).unwrap()), [vec![0, 1], vec![2]]);
        assert_eq!(
            blocks(&kernel_partition(&t(&[0, 0, 1, 1])).unwrap()),
            [vec![0, 1], vec![2, 3]]
        );
        assert_eq!(kernel_partition(&t(&[1, 0, 2])), Err(Error::Bijective));
        assert_eq!(kernel_partition(&t(&[2, 2, 2])), Err(Error::ConstantMap));
    }

    #[test]
    fn find_examples() {
        let p = find_preserved_partition(&t(&[1, 0, 3, 2, 4])).unwrap();
        assert_eq!(blocks(&p), [vec![0, 1], vec![2, 3, 4]]);

        let p = find_preserved_partition(&t(&[1, 2, 3, 4, 5, 0])).unwrap();
        assert_eq!(blocks(&p), [vec![0, 2, 4], vec![1, 3, 5]]);

        assert_eq!(find_preserved_partition(&t(&[1, 2, 3, 4, 0])), None);
    }

    #[test]
    fn find_defaults() {
        let p = find_preserved_partition(&t(&[3, 3, 3, 3])).unwrap();
        assert_eq!(blocks(&p), [vec![0], vec![1, 2, 3]]);
        let p = find_preserved_partition(&Transformation::identity(3)).unwrap();
        assert_eq!(blocks(&p), [vec![0], vec![1, 2]]);
        assert_eq!(find_preserved_partition(&Transformation::identity(2)), None);
        assert_eq!(find_preserved_partition(&t(&[0])), None);
    }

    #[test]
    fn conjugated_cycle_gets_a_valid_witness() {
        // 0 -> 3 -> 1 -> 5 -> 2 -> 4 -> 0
        let f = t(&[3, 5, 4, 1, 0, 2]);
        let p = find_preserved_partition(&f).unwrap();
        assert_eq!(blocks(&p), [vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(in_units(&f, &p).unwrap());
    }

    #[test]
    fn m_partition_examples() {
        let six = t(&[1, 2, 3, 4, 5, 0]);
        let w = preserved_m_partition_exists(&six, 3).unwrap().unwrap();
        assert_eq!(blocks(&w), [vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert_eq!(preserved_m_partition_exists(&six, 4).unwrap(), None);

        let four = t(&[1, 2, 3, 0]);
        let w = preserved_m_partition_exists(&four, 2).unwrap().unwrap();
        assert_eq!(blocks(&w), [vec![0, 2], vec![1, 3]]);
        assert!(in_units(&four, &w).unwrap());
    }

    #[test]
    fn m_partition_errors() {
        let six = t(&[1, 2, 3, 4, 5, 0]);
        assert_eq!(
            preserved_m_partition_exists(&six, 1),
            Err(Error::BlockCountOutOfRange { m: 1, n: 6 })
        );
        assert_eq!(
            preserved_m_partition_exists(&six, 6),
            Err(Error::BlockCountOutOfRange { m: 6, n: 6 })
        );
        assert_eq!(
            preserved_m_partition_exists(&t(&[1, 0, 3, 2]), 2),
            Err(Error::NotFullCycle { n: 4 })
        );
        assert_eq!(
            preserved_m_partition_exists(&t(&[0, 0, 1, 2]), 2),
            Err(Error::NotFullCycle { n: 4 })
        );
    }

    #[test]
    fn five_cycle_has_no_nontrivial_partition_exhaustively() {
        let f = t(&[1, 2, 3, 4, 0]);
        assert_eq!(search_preserved_partition(&f, None, Target::Units), None);
    }

    #[test]
    fn found_partitions_are_nontrivial_and_valid() {
        for n in 1..=5 {
            for f in AllMaps::new(n) {
                let found = find_preserved_partition(&f);
                let target = if f.is_bijective() {
                    Target::Units
                } else {
                    Target::Preserving
                };
                let oracle = search_preserved_partition(&f, None, target);
                assert_eq!(found.is_some(), oracle.is_some(), "f = {f}");
                if let Some(p) = found {
                    assert!(!p.is_trivial());
                    match target {
                        Target::Units => assert!(in_units(&f, &p).unwrap()),
                        Target::Preserving => assert!(preserves(&f, &p).unwrap()),
                    }
                }
            }
        }
    }

    #[test]
    fn identity_preserves_every_partition() {
        for n in 1..=6 {
            let id = Transformation::identity(n);
            assert!(SetPartition::all(n).all(|p| in_units(&id, &p).unwrap()));
        }
    }
}
