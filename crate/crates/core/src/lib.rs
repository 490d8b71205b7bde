//! Permutation groups with Hall subgroup classification and pronormality
//! deciders.
//!
//! Groups act on the right on `0..n`: `a * b` applies `a` first, and
//! `h^g = g⁻¹hg`.

pub mod atlas;
mod chain;
pub mod elements;
pub mod error;
pub mod fingerprint;
pub mod group;
pub mod hall;
pub mod lemmas;
pub mod perm;
pub mod pi;
pub mod pronormal;
pub mod quotient;

pub use atlas::{DirectProduct, GroupSpec};
pub use error::{GroupError, Result};
pub use fingerprint::Fingerprint;
pub use group::PermGroup;
pub use hall::{
    classify, classify_pi_properties, hall_subgroups, is_hall, is_hall_subgroup, DCheck, HallClass, HallClassification,
    HallOptions, SearchMode,
};
pub use lemmas::{verify_reduction_lemmas, LemmaReport, ReductionLemma};
pub use perm::Perm;
pub use pi::PiSet;
pub use pronormal::{
    is_pronormal_definition, is_pronormal_reduced, is_pronormal_sylow_tower, verify_certificate, Method,
    PronormalityCertificate, Verdict,
};
pub use quotient::{quotient_by_normal, Homomorphism};
