//! Finite-index subgroups of finitely presented groups: coset tables,
//! Reidemeister–Schreier bases and the explicit kernels of the reduction.

pub mod coset;
pub mod kernels;
pub mod schreier;

pub use coset::{kernel_coset_table, todd_coxeter, CosetTable, DEFAULT_MAX_COSETS};
pub use kernels::{
    chi_kernel_basis, hyperelliptic_quotient, mu_n_kernel_basis, rewrite_in_chi_basis,
    BasisFactor, ChiKernel,
};
pub use schreier::{schreier_generators, BasisKind, SubgroupBasis};
