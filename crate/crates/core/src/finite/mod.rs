//! Explicit finite groups as Cayley tables.

pub mod builtin;
pub mod class;
pub mod group;
pub mod hom;
pub mod perm;

pub use builtin::{corpus, parse_group, parse_group_with_limit};
pub use class::{series, sylow_subgroup, GroupClass, SeriesKind};
pub use group::{FiniteGroup, Quotient, Subgroup, DEFAULT_ORDER_LIMIT};
pub use hom::{automorphism_count, endomorphism_census, homomorphisms, EndomorphismCensus};
pub use perm::Perm;
