//! Combinatorics of the μ-admissible set in the extended affine Weyl group
//! of GSp_2g, for the minuscule coweight μ = (1^g 0^g).
//!
//! The crate provides exact arithmetic in the finite Weyl group of signed
//! permutations and in the extended affine Weyl group (`weyl`, `affine`),
//! enumeration of the admissible set with p-rank and kernel data
//! (`admissible`), the Bruhat order with cover diagrams and downward
//! closures (`bruhat`), and executable checks of the p-rank stratification
//! results: dimensions, top-dimensional stratum counts and closure
//! relations (`strata`). All arithmetic is exact; there is no floating
//! point anywhere.

pub mod admissible;
pub mod affine;
pub mod bruhat;
pub mod error;
pub mod strata;
pub mod weyl;

pub use admissible::{
    enumerate_adm, is_minuscule_size_g, is_mu_admissible, mu, weyl_orbit_mu, AdmFilter,
    AdmissibleElement, KernelKind,
};
pub use affine::{
    same_side_as_base, AffineElement, AffineRoot, Cocharacter, ExtendedAlcove, PositiveRoot,
    ReducedWord,
};
pub use bruhat::{BruhatOrder, HasseDiagram};
pub use error::Error;
pub use strata::{
    catalan, closure_computed, closure_predicted, dim_formula, length_formula_possibly_maximal,
    max_length_empirical, maximal_count_formula, maximal_set_classified, strip_fixed_pairs, verify,
    witness_max, CheckKind, CheckResult, MaxCase, MaxLengthCertificate, VerifyConfig, VerifyReport,
};
pub use weyl::{Cycle, PermStats, SignVector, SignedPermutation, SmallPermutation};
