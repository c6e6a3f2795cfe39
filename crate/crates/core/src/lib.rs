//! Finite group engine for the centralizer norm `C(G)` (the intersection of
//! the normalizers of all centralizers), its ascending series `C_i(G)`, and
//! the classical central, derived and Engel machinery needed to check the
//! known results about them on concrete groups.
//!
//! Groups are dense Cayley tables; subgroups are bitsets over element
//! indices. Everything is immutable after construction.

pub mod bitset;
pub mod error;
pub mod families;
pub mod format;
pub mod group;
pub mod perm;
pub mod quotient;
pub mod series;
pub mod subgroup;
pub mod verify;

pub use bitset::ElementSet;
pub use error::{GroupError, Result};
pub use families::{
    direct_product, make_cyclic, make_dihedral, make_elementary_abelian,
    make_generalized_quaternion, make_symmetric, standard_corpus, CorpusEntry, FamilySpec,
};
pub use group::{ConjugacyClass, ElementId, FiniteGroup, DEFAULT_ORDER_CAP};
pub use perm::from_permutation_generators;
pub use quotient::{quotient, QuotientMap};
pub use series::{
    baer_norm, c_series, centralizer_norm, profile, upper_central_series, Analysis, GroupProfile,
    SeriesKind, SeriesReport,
};
pub use subgroup::{Restriction, SubgroupSet, SubnormalVerdict};
pub use verify::{run_all, ClaimResult, ClaimStatus, VerificationReport, VerifyOptions, Witness};
