//! Exact character computations for compact Lie groups of classical type,
//! branching along a fixed catalog of embeddings, graded K-type models of
//! minimal representations and the theta-correspondence bookkeeping built on them.

pub mod branching;
pub mod charalg;
pub mod error;
pub mod lattice;
pub mod minrep;
pub mod rational;
pub mod report;
pub mod theta;

pub use branching::{restrict_generic, BranchResult, EmbeddingMap, Rule};
pub use charalg::{
    dimension, infinitesimal_character, tensor_decompose, weight_multiplicities, FormalCharacter,
    InfChar, WeightFunction,
};
pub use error::{LieError, Result};
pub use lattice::{build_root_system, CartanType, GroupSpec, RootSystem, Weight};
pub use minrep::{
    dualpair_graded, ktype_multiplicity, minrep_levels, sign_first_appearance, so3_invariants,
    verify_growth, DualPairCase, GradedCharacter, MinrepCase, MultiplicitySeries, SignTag,
};
pub use rational::Rat;
pub use report::{Check, Report, Status};
pub use theta::{
    infchar_lift, infchar_symmetric_form, lemma_infchar_consistency, ps_multiplicity_quasisplit,
    ps_multiplicity_split, verify_table, TableKind, TorusCharacterData,
};
