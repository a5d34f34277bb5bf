//! Gel'fand-Tsetlin bases: labels, recursive construction and checks.

pub mod appell;
pub mod build;
pub mod closed_form;
pub mod labels;
pub mod lattice;
pub mod monogenic;
pub mod roundtrip;

pub use appell::{appell_check, derivative_matrix, AppellReport, DerivativeMatrix, Variable};
pub use build::{
    all_exact, gt_basis, gt_basis_via_extension, scalar_matches, top_state_sign, BasisFamily, BasisMember, EdgeRoute,
    FamilyVerdict, GtBuilder, DEFAULT_BASIS_BUDGET,
};
pub use closed_form::{closed_form_family, closed_form_n2};
pub use labels::{chain_from_path, descriptor_weight, step_source, weight_of, GtLabel, PathStep, WeightVector};
pub use lattice::{lattice_check, LatticeReport};
pub use monogenic::{monogenic_basis, MonogenicBasis, MonogenicMember, MonogenicVerdict, Origin};
pub use roundtrip::{ck_roundtrip, RoundtripReport};
