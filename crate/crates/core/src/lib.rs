//! Exact commutative algebra over prime fields.
//!
//! Polynomials over `F_p`, reduced Groebner bases, ideal quotients and
//! saturation, syzygies and minimal free resolutions, the decomposition of
//! a polynomial over the free `R^q`-basis of monomials, Koszul cocomplexes
//! with their Frobenius chain map, and checkers for vanishing of
//! `m`-torsion and projective-dimension bounds.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod field;
mod gb;
pub mod frobenius;
pub mod ideal;
pub mod koszul;
pub mod limits;
pub mod localcoh;
pub mod module;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod resolution;
pub mod ring;

pub use error::{AlgebraError, Ceiling, Result};
pub use field::FpElem;
pub use frobenius::{
    bracket_power, component_at, frobenius_decompose, psi_map, td_roundtrip_check, FrobComponents,
    FrobeniusLevel,
};
pub use ideal::{ideals_equal, verify_confluence, Ideal};
pub use koszul::{
    build_koszul, chain_map_commutes, koszul_cohomology, phi_chain_map, verify_prop_van,
    GeneratorVerdict, KoszulComplex, PropVanCertificate,
};
pub use limits::{CancelToken, GbAudit, Limits};
pub use localcoh::{
    choose_level, degree_criterion, find_regular_linear_form, pd_bound_check, prop_van_check,
    question_q_check, top_lc_vanishing_certificate, CheckKind, CheckReport, Outcome,
    RegularFormSearch,
};
pub use module::{
    kernel_of_map, module_groebner_basis, module_h0m, subquotient_presentation, syzygies,
    ColengthCount, FreeElem, ModulePresentation, PolyMatrix, SubmoduleBasis, Torsion,
};
pub use monomial::{MonomialOrder, MultiIndex};
pub use parse::{format_polynomial_list, parse_polynomial, parse_polynomial_list};
pub use poly::{product, Degree, Polynomial};
pub use resolution::{depth_via_ab, free_resolution, projective_dimension, Resolution};
pub use ring::{PolyRing, RationalPoint};
