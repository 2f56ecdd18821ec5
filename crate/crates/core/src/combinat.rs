//! Small exact-arithmetic and permutation helpers.

use num_bigint::BigUint;
use num_traits::One;

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    // each partial product is itself a binomial coefficient, so division is exact
    (0..k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

pub fn pow(base: usize, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

/// Rearranges `xs` into the next lexicographically larger arrangement.
/// Returns `false` (leaving `xs` sorted ascending) once the last arrangement
/// has been passed. Repeated values yield each distinct arrangement once.
pub fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    let n = xs.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        xs.reverse();
        return false;
    }
    let mut j = n - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Visits every distinct arrangement of `xs`, starting from its sorted order.
pub fn for_each_arrangement<T: Ord + Clone>(xs: &[T], mut visit: impl FnMut(&[T])) {
    let mut cur = xs.to_vec();
    cur.sort();
    loop {
        visit(&cur);
        if !next_permutation(&mut cur) {
            break;
        }
    }
}
