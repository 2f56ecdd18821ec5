//! Exact cardinalities of `T(X,P)`, `S(X,P)`, `Σ(X,P)` and `E(Σ(X,P))`.
//!
//! `|Σ|` is available in two independent forms. The direct form sums the
//! per-class sizes over every permutation of block indices and is kept naive
//! on purpose. The grouped form iterates distinct arrangements of the block
//! size multiset and multiplies by `m_1!…m_k!`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinat::{binomial, factorial, for_each_arrangement, next_permutation, pow};
use crate::error::Result;
use crate::guard::Guard;
use crate::partition::SetPartition;
use crate::profile::PartitionProfile;

/// `∏_i (Σ_j m_j n_j^{n_i})^{m_i}`.
pub fn count_t(profile: &PartitionProfile) -> BigUint {
    let entries = profile.entries();
    entries
        .iter()
        .map(|dom| {
            // block maps out of a block of size n_i, any codomain block
            let choices: BigUint = entries
                .iter()
                .map(|cod| BigUint::from(cod.multiplicity) * pow(cod.size, dom.size))
                .sum();
            num_traits::pow(choices, dom.multiplicity)
        })
        .product()
}

/// `∏_i m_i! (n_i!)^{m_i}`.
pub fn count_units(profile: &PartitionProfile) -> BigUint {
    profile
        .entries()
        .iter()
        .map(|e| factorial(e.multiplicity) * num_traits::pow(factorial(e.size), e.multiplicity))
        .product()
}

/// Idempotents of the full transformation monoid on `n` points:
/// `Σ_{j=1}^{n} C(n,j) j^{n-j}`.
pub fn full_monoid_idempotents(n: usize) -> BigUint {
    (1..=n).map(|j| binomial(n, j) * pow(j, n - j)).sum()
}

/// `∏_i (Σ_{j=1}^{n_i} C(n_i,j) j^{n_i-j})^{m_i}`.
pub fn count_sigma_idempotents(profile: &PartitionProfile) -> BigUint {
    profile
        .entries()
        .iter()
        .map(|e| num_traits::pow(full_monoid_idempotents(e.size), e.multiplicity))
        .product()
}

/// Size of the χ-class of `Σ(X,P)` whose character is the block permutation
/// `phi`: `∏_i |X_{phi(i)}|^{|X_i|}`.
pub fn chi_class_size(p: &SetPartition, phi: &[usize]) -> BigUint {
    phi.iter()
        .enumerate()
        .map(|(i, &j)| pow(p.block(j).len(), p.block(i).len()))
        .product()
}

/// `Σ_{φ ∈ S_m} ∏_i |X_{iφ}|^{|X_i|}`, summed naively over all `m!`
/// permutations.
pub fn count_sigma_direct(p: &SetPartition, guard: Guard) -> Result<BigUint> {
    let m = p.block_count();
    guard.check("block permutations", &factorial(m))?;
    let mut phi: Vec<usize> = (0..m).collect();
    let mut total = BigUint::zero();
    loop {
        total += chi_class_size(p, &phi);
        if !next_permutation(&mut phi) {
            break;
        }
    }
    Ok(total)
}

/// `m_1!…m_k! Σ n_1^{s_1}…n_k^{s_k}`.
///
/// The codomain blocks are grouped by size: group `i` has `m_i` slots of
/// size `n_i`. The sum runs over every distinct arrangement of the domain
/// size multiset `{m_1·n_1, …, m_k·n_k}` into those slots, and `s_i` is the
/// total domain size placed in group `i`. Each arrangement stands for
/// exactly `m_1!…m_k!` block permutations.
pub fn count_sigma_grouped(profile: &PartitionProfile, guard: Guard) -> Result<BigUint> {
    let entries = profile.entries();
    let sizes = profile.block_sizes();

    let mut arrangements = factorial(sizes.len());
    for e in entries {
        arrangements /= factorial(e.multiplicity);
    }
    guard.check("size arrangements", &arrangements)?;

    let mut sum = BigUint::zero();
    for_each_arrangement(&sizes, |arrangement| {
        let mut term = BigUint::one();
        let mut start = 0;
        for e in entries {
            let mass: usize = arrangement[start..start + e.multiplicity].iter().sum();
            term *= pow(e.size, mass);
            start += e.multiplicity;
        }
        sum += term;
    });
    let scale: BigUint = entries.iter().map(|e| factorial(e.multiplicity)).product();
    Ok(scale * sum)
}

/// `|Σ(X,P)|` by the grouped form.
pub fn count_sigma(profile: &PartitionProfile, guard: Guard) -> Result<BigUint> {
    count_sigma_grouped(profile, guard)
}
