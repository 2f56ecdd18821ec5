//! Semigroups of transformations of a finite set that preserve a partition.
//!
//! For a partition `P = {X_0, …, X_{m-1}}` of `X = {0, …, n-1}` this crate
//! works with
//!
//! - `T(X,P)`: maps sending every block into some block,
//! - `Σ(X,P)`: those members of `T(X,P)` whose image meets every block,
//! - `S(X,P)`: the group of units of `T(X,P)`.
//!
//! Maps act on the right and compose left to right, `x(fg) = (xf)g`.
//!
//! ```
//! use psemi::{count, membership, SetPartition, Transformation};
//!
//! let p: SetPartition = "0,1|2".parse().unwrap();
//! let f: Transformation = "2,2,0".parse().unwrap();
//! assert!(membership::in_sigma(&f, &p).unwrap());
//! assert_eq!(membership::character(&f, &p).unwrap().images(), [1, 0]);
//!
//! let profile = psemi::profile_of(&p);
//! assert_eq!(count::count_t(&profile), 15u32.into());
//! ```

pub mod blockmap;
pub mod character;
pub mod combinat;
pub mod count;
pub mod cycles;
pub mod enumerate;
pub mod error;
pub mod guard;
pub mod membership;
pub mod partition;
pub mod profile;
pub mod transformation;
pub mod verify;

pub use blockmap::{BlockMap, BlockMapFamily};
pub use character::CharacterMap;
pub use cycles::CycleDecomposition;
pub use enumerate::{Ambient, EnumOptions, Enumeration, SetKind, Strategy};
pub use error::{Error, Result};
pub use guard::Guard;
pub use partition::{parse_partition, SetPartition};
pub use profile::{profile_of, PartitionProfile, SizeClass};
pub use transformation::{compose, parse_transformation, Transformation};
