//! Batch verification: every closed-form count against enumeration, and every
//! characterization against its independent route, over all partitions of
//! every ground set up to a given size.

use std::fmt::Write as _;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::combinat::{factorial, pow};
use crate::count;
use crate::cycles::{
    find_preserved_partition, is_full_cycle, preserved_m_partition_exists,
    search_preserved_partition, Target,
};
use crate::enumerate::{
    chi_classes, enumerate_idempotents, enumerate_set, enumerate_sigma, enumerate_t,
    enumerate_units, Ambient, EnumOptions, SetKind,
};
use crate::error::Result;
use crate::guard::Guard;
use crate::membership::{
    block_images_are_blocks, block_map_family, character, in_sigma, in_units, in_units_direct,
    is_e_star_preserving, is_idempotent, preserves, sigma_idempotent_via_blocks,
    sigma_via_character, sigma_via_topology,
};
use crate::partition::SetPartition;
use crate::profile::profile_of;
use crate::transformation::{AllMaps, Transformation};

/// Largest ground set on which the pairwise homomorphism check runs.
pub const HOMOMORPHISM_N_MAX: usize = 4;

/// Tally of one check on one ground-set size.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl Outcome {
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn merge(mut self, other: Outcome) -> Outcome {
        self.cases += other.cases;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Runs `check` on every partition of an `n`-set in parallel and merges the
/// tallies in canonical partition order.
fn over_partitions<F>(n: usize, check: F) -> Outcome
where
    F: Fn(&SetPartition) -> Outcome + Sync + Send,
{
    let partitions: Vec<SetPartition> = SetPartition::all(n).collect();
    partitions
        .par_iter()
        .map(check)
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Outcome::default(), Outcome::merge)
}

fn len_big(len: usize) -> BigUint {
    BigUint::from(len)
}

/// Closed-form counts equal enumeration sizes.
pub fn check_census(n: usize, guard: Guard) -> Outcome {
    over_partitions(n, |p| {
        let mut out = Outcome::default();
        let opts = EnumOptions {
            guard,
            ..EnumOptions::brute()
        };
        let profile = profile_of(p);
        let t = enumerate_t(p, &opts).map(|e| e.len());
        let s = enumerate_sigma(p, &opts).map(|e| e.len());
        let u = enumerate_units(p, &opts).map(|e| e.len());
        let es = enumerate_idempotents(p, Ambient::Sigma, &opts).map(|e| e.len());
        let direct = count::count_sigma_direct(p, guard);
        let grouped = count::count_sigma_grouped(&profile, guard);
        match (t, s, u, es, direct, grouped) {
            (Ok(t), Ok(s), Ok(u), Ok(es), Ok(direct), Ok(grouped)) => {
                let rows = [
                    ("T", len_big(t), count::count_t(&profile)),
                    ("Sigma(direct)", len_big(s), direct),
                    ("Sigma(grouped)", len_big(s), grouped),
                    ("S", len_big(u), count::count_units(&profile)),
                    ("E(Sigma)", len_big(es), count::count_sigma_idempotents(&profile)),
                ];
                for (name, enumerated, formula) in rows {
                    out.record(enumerated == formula, || {
                        format!("p={p}: |{name}| enumerated {enumerated}, formula {formula}")
                    });
                }
            }
            _ => out.record(false, || format!("p={p}: guard exceeded")),
        }
        out
    })
}

/// Brute and constructive enumerations emit identical sequences.
pub fn check_strategies(n: usize, guard: Guard) -> Outcome {
    over_partitions(n, |p| {
        let mut out = Outcome::default();
        let brute = EnumOptions {
            guard,
            ..EnumOptions::brute()
        };
        let cons = EnumOptions {
            guard,
            ..EnumOptions::constructive()
        };
        for kind in [
            SetKind::T,
            SetKind::Sigma,
            SetKind::Units,
            SetKind::IdempotentsSigma,
            SetKind::IdempotentsT,
        ] {
            let a = enumerate_set(p, kind, &brute);
            let b = enumerate_set(p, kind, &cons);
            out.record(a.is_ok() && a == b, || format!("p={p}: strategies disagree on {kind}"));
        }
        out
    })
}

/// For every `f ∈ T(X,P)`: image meets every block ⇔ surjective character ⇔
/// E*-preserving ⇔ continuous with nonempty block preimages.
pub fn check_four_way(n: usize) -> Outcome {
    over_partitions(n, |p| {
        let mut out = Outcome::default();
        for f in AllMaps::new(n).filter(|f| preserves(f, p).unwrap_or(false)) {
            let a = in_sigma(&f, p).unwrap();
            let b = sigma_via_character(&f, p).unwrap();
            let c = is_e_star_preserving(&f, p).unwrap();
            let d = sigma_via_topology(&f, p).unwrap();
            out.record(a == b && b == c && c == d, || {
                format!("p={p} f={f}: sigma={a} character={b} estar={c} topology={d}")
            });
        }
        out
    })
}

/// `χ(fg) = χ(f)χ(g)` for all pairs in `T(X,P)`.
pub fn check_homomorphism(n: usize) -> Outcome {
    over_partitions(n, |p| {
        let mut out = Outcome::default();
        let tp: Vec<Transformation> = AllMaps::new(n)
            .filter(|f| preserves(f, p).unwrap_or(false))
            .collect();
        let chars: Vec<_> = tp.iter().map(|f| character(f, p).unwrap()).collect();
        for (f, cf) in tp.iter().zip(&chars) {
            for (g, cg) in tp.iter().zip(&chars) {
                let fg = f.then(g).unwrap();
                let lhs = character(&fg, p);
                let rhs = cf.then(cg).unwrap();
                out.record(lhs.as_ref() == Ok(&rhs), || {
                    format!("p={p} f={f} g={g}: chi(fg)={lhs:?} chi(f)chi(g)={rhs}")
                });
            }
        }
        out
    })
}

/// For `f ∈ Σ(X,P)`: idempotent ⇔ every block map idempotent, and
/// idempotents have identity character.
pub fn check_sigma_idempotents(n: usize) -> Outcome {
    over_partitions(n, |p| {
        let mut out = Outcome::default();
        for f in AllMaps::new(n).filter(|f| in_sigma(f, p).unwrap_or(false)) {
            let direct = is_idempotent(&f);
            let via_blocks = sigma_idempotent_via_blocks(&f, p).unwrap();
            out.record(direct == via_blocks, || {
                format!("p={p} f={f}: idempotent={direct} via blocks={via_blocks}")
            });
            if direct {
                let chi = character(&f, p).unwrap();
                out.record(chi.is_identity(), || {
                    format!("p={p} f={f}: idempotent with character {chi}")
                });
            }
        }
        out
    })
}

/// For idempotent `f ∈ T(X,P)`: the character is idempotent and the block
/// map of every block index in the character's image is an idempotent
/// selfmap.
pub fn check_t_idempotents(n: usize) -> Outcome {
    over_partitions(n, |p| {
        let mut out = Outcome::default();
        for f in AllMaps::new(n).filter(|f| is_idempotent(f) && preserves(f, p).unwrap_or(false)) {
            let chi = character(&f, p).unwrap();
            let family = block_map_family(&f, p).unwrap();
            let image_blocks_ok = chi
                .image_indices()
                .into_iter()
                .all(|i| family.get(i).is_idempotent());
            out.record(chi.is_idempotent() && image_blocks_ok, || {
                format!("p={p} f={f}: character {chi} or image block maps not idempotent")
            });
        }
        out
    })
}

/// For `f ∈ T_n`: block-map criterion for units ⇔ bijection whose inverse
/// also preserves; units send blocks onto blocks of equal size.
pub fn check_units(n: usize) -> Outcome {
    over_partitions(n, |p| {
        let mut out = Outcome::default();
        for f in AllMaps::new(n) {
            let via_blocks = in_units(&f, p).unwrap();
            let direct = in_units_direct(&f, p).unwrap();
            out.record(via_blocks == direct, || {
                format!("p={p} f={f}: units via blocks={via_blocks} direct={direct}")
            });
            if via_blocks {
                out.record(block_images_are_blocks(&f, p).unwrap(), || {
                    format!("p={p} f={f}: unit maps a block off a block")
                });
            }
        }
        out
    })
}

/// `Σ(X,P)` splits into exactly `m!` χ-classes of the predicted sizes.
pub fn check_quotient(n: usize, guard: Guard) -> Outcome {
    over_partitions(n, |p| {
        let mut out = Outcome::default();
        let opts = EnumOptions {
            guard,
            ..EnumOptions::brute()
        };
        let (classes, sigma) = match (chi_classes(p, &opts, None), enumerate_sigma(p, &opts)) {
            (Ok(c), Ok(s)) => (c, s),
            _ => {
                out.record(false, || format!("p={p}: guard exceeded"));
                return out;
            }
        };
        let m = p.block_count();
        out.record(len_big(classes.len()) == factorial(m), || {
            format!("p={p}: {} classes, expected {m}!", classes.len())
        });
        let mut total = 0;
        for c in &classes {
            total += c.size;
            out.record(
                c.character.is_bijective() && len_big(c.size) == c.predicted_size(p),
                || format!("p={p}: class {} has size {}", c.character, c.size),
            );
        }
        out.record(total == sigma.total, || {
            format!("p={p}: class sizes sum to {total}, |Sigma| = {}", sigma.total)
        });
        out
    })
}

/// The canonical `n`-cycle `x ↦ x+1 mod n`.
pub fn canonical_cycle(n: usize) -> Transformation {
    Transformation::from_images_unchecked((0..n).map(|x| (x + 1) % n).collect())
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// For an `n`-cycle: an `m`-block preserved partition exists iff `m | n`,
/// checked against exhaustive search; and no nontrivial partition at all
/// exactly when `n` is prime.
pub fn check_divisibility_for(f: &Transformation) -> Outcome {
    let n = f.n();
    let mut out = Outcome::default();
    for m in 2..n {
        let witness = preserved_m_partition_exists(f, m).ok().flatten();
        let searched = search_preserved_partition(f, Some(m), Target::Units);
        out.record(witness.is_some() == n.is_multiple_of(m), || {
            format!("f={f} m={m}: witness {witness:?} but m|n is {}", n.is_multiple_of(m))
        });
        out.record(witness.is_some() == searched.is_some(), || {
            format!("f={f} m={m}: construction {witness:?}, search {searched:?}")
        });
        if let Some(w) = &witness {
            out.record(
                w.block_count() == m && in_units(f, w).unwrap_or(false),
                || format!("f={f} m={m}: witness {w} is not valid"),
            );
        }
    }
    if n >= 3 {
        let found = find_preserved_partition(f);
        out.record(found.is_none() == is_prime(n), || {
            format!("f={f}: find-partition gave {found:?}, n prime is {}", is_prime(n))
        });
    }
    out
}

pub fn check_divisibility(n: usize) -> Outcome {
    check_divisibility_for(&canonical_cycle(n))
}

/// For every `n`-cycle `f ∈ S(X,P)`: the character is a single `m`-cycle
/// and `P` is uniform.
pub fn check_cycle_character(n: usize) -> Outcome {
    let cycles: Vec<Transformation> = AllMaps::new(n).filter(is_full_cycle).collect();
    over_partitions(n, |p| {
        let mut out = Outcome::default();
        for f in cycles.iter().filter(|f| in_units(f, p).unwrap_or(false)) {
            let chi = character(f, p).unwrap();
            out.record(chi.is_single_cycle() && p.is_uniform(), || {
                format!("p={p} f={f}: character {chi}, uniform={}", p.is_uniform())
            });
        }
        out
    })
}

/// `find_preserved_partition` returns a valid nontrivial partition exactly
/// when exhaustive search finds one.
pub fn check_find_partition(n: usize) -> Outcome {
    let maps: Vec<Transformation> = AllMaps::new(n).collect();
    maps.par_iter()
        .map(|f| {
            let mut out = Outcome::default();
            let target = if f.is_bijective() {
                Target::Units
            } else {
                Target::Preserving
            };
            let found = find_preserved_partition(f);
            let oracle = search_preserved_partition(f, None, target);
            let valid = match &found {
                None => oracle.is_none(),
                Some(p) => {
                    !p.is_trivial()
                        && match target {
                            Target::Units => in_units(f, p).unwrap_or(false),
                            Target::Preserving => preserves(f, p).unwrap_or(false),
                        }
                }
            };
            out.record(valid, || format!("f={f}: found {found:?}, search {oracle:?}"));
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Outcome::default(), Outcome::merge)
}

/// One named check run on one ground-set size. `outcome` is `None` when the
/// check is out of its scope at that size.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub n: usize,
    pub outcome: Option<Outcome>,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub n_max: usize,
    pub results: Vec<CheckResult>,
}

pub const CHECK_NAMES: [&str; 11] = [
    "census: counts vs enumeration",
    "brute vs constructive",
    "four-way Sigma equivalence",
    "character homomorphism",
    "Sigma idempotents via blocks",
    "T idempotent characters",
    "units characterization",
    "chi-quotient structure",
    "n-cycle divisibility",
    "n-cycle character",
    "find-partition vs search",
];

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.results
            .iter()
            .all(|r| r.outcome.as_ref().is_none_or(Outcome::passed))
    }

    pub fn total_cases(&self) -> u64 {
        self.results
            .iter()
            .filter_map(|r| r.outcome.as_ref())
            .map(|o| o.cases)
            .sum()
    }

    /// One row per check, one column per `n`.
    pub fn render(&self) -> String {
        let width = CHECK_NAMES.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut s = String::new();
        let _ = write!(s, "{:width$}", "check");
        for n in 1..=self.n_max {
            let _ = write!(s, "  n={n:<3}");
        }
        s.push_str("  cases\n");
        for name in CHECK_NAMES {
            let _ = write!(s, "{name:width$}");
            let mut cases = 0;
            for n in 1..=self.n_max {
                let cell = self
                    .results
                    .iter()
                    .find(|r| r.name == name && r.n == n)
                    .and_then(|r| r.outcome.as_ref());
                let label = match cell {
                    None => "--",
                    Some(o) if o.passed() => "PASS",
                    Some(_) => "FAIL",
                };
                cases += cell.map_or(0, |o| o.cases);
                let _ = write!(s, "  {label:<5}");
            }
            let _ = writeln!(s, "  {cases}");
        }
        for r in &self.results {
            if let Some(Outcome {
                first_failure: Some(msg),
                failures,
                ..
            }) = &r.outcome
            {
                let _ = writeln!(s, "FAIL {} (n={}): {failures} failures; first: {msg}", r.name, r.n);
            }
        }
        s
    }
}

/// Runs every check for every `n` in `1..=n_max`. Each `n` enumerates all
/// `n^n` selfmaps, so `n_max^n_max` must fit in `guard`.
pub fn verify(n_max: usize, guard: Guard) -> Result<VerifyReport> {
    guard.check("selfmaps per partition", &pow(n_max, n_max))?;
    let mut results = Vec::new();
    for n in 1..=n_max {
        let outcomes = [
            Some(check_census(n, guard)),
            Some(check_strategies(n, guard)),
            Some(check_four_way(n)),
            (n <= HOMOMORPHISM_N_MAX).then(|| check_homomorphism(n)),
            Some(check_sigma_idempotents(n)),
            Some(check_t_idempotents(n)),
            Some(check_units(n)),
            Some(check_quotient(n, guard)),
            Some(check_divisibility(n)),
            Some(check_cycle_character(n)),
            Some(check_find_partition(n)),
        ];
        for (name, outcome) in CHECK_NAMES.into_iter().zip(outcomes) {
            results.push(CheckResult { name, n, outcome });
        }
    }
    Ok(VerifyReport { n_max, results })
}
