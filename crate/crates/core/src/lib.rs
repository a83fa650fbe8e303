//! Combinatorial group theory for fundamental groups of punctured curves.
//!
//! The crate works with discrete finitely presented groups and explicit finite
//! groups:
//!
//! * [`word`]: freely reduced words,
//! * [`presentation`]: surface and punctured-curve presentations, puncture
//!   filling, abelianization and Tietze elimination,
//! * [`finite`]: Cayley-table groups, classes of finite groups, series,
//!   Sylow subgroups and automorphisms,
//! * [`completion`]: maximal class quotients and exactness checks,
//! * [`subgroup`]: coset tables, Schreier bases and the two explicit kernel
//!   bases with their rewriting procedure,
//! * [`covers`]: homomorphism and epimorphism counts, Galois cover censuses.
//!
//! ```
//! use devissage::presentation::punctured_curve_group;
//!
//! let p = punctured_curve_group(1, 2).unwrap();
//! assert_eq!(p.rank(), 3);
//! assert_eq!(p.fill_all().abelianization().free_rank, 2);
//! ```

pub mod completion;
pub mod covers;
pub mod error;
pub mod finite;
pub mod presentation;
pub mod smith;
pub mod subgroup;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use presentation::{AbelianInvariants, FpPresentation};
pub use word::{Letter, Word};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/finite-groups.md")]
    mod finite_groups {}
    #[doc = include_str!("../../../book/src/class-quotients.md")]
    mod class_quotients {}
    #[doc = include_str!("../../../book/src/kernels.md")]
    mod kernels {}
    #[doc = include_str!("../../../book/src/covers.md")]
    mod covers {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
