//! Mechanical verification that `Z/NZ` cannot be a subgroup of the torsion of
//! an elliptic curve over a number field of small degree, for levels where a
//! reduction argument applies.
//!
//! The crate is layered bottom-up:
//!
//! - [`gf`]: finite fields `GF(p^n)` with deterministic moduli.
//! - [`weierstrass`]: long Weierstrass curves, point counting, group
//!   structure and exhaustive curve enumeration.
//! - [`trace`]: exact Hasse intervals and the admissible traces of Frobenius.
//! - [`modcurve`]: gonality lists, the `J_1(N)` decomposition table and the
//!   genus of `X_1(N)`.
//! - [`table`]: lookup-table arithmetic for bulk enumeration over tiny
//!   fields.
//! - [`obstruction`]: the certificate builder and the enumeration oracle.
//! - [`document`]: canonical JSON for certificates.

pub mod document;
pub mod gf;
pub mod modcurve;
pub mod obstruction;
pub mod table;
pub mod trace;
pub mod weierstrass;

pub use document::CertificateDocument;
pub use gf::{make_field, FieldElement, FieldError, FieldSpec};
pub use modcurve::{
    genus_x1, gonality_exceeds, j1_finite_over_q, DecompositionRow, DecompositionTable, Finiteness,
    GonalityTable, ModCurveError,
};
pub use obstruction::{
    additive_reduction_impossible, check_torsion, cross_validate, cross_validation_scan,
    good_reduction_obstruction, CertificateStep, CrossValidation, Evidence, ObstructionCertificate,
    ObstructionError, Premise, StepKind, StepName, StepStatus, Verdict,
};
pub use table::{FieldTable, TabulatedCurve};
pub use trace::{
    admissible_orders, admissible_trace, admissible_traces, classify_traces, hasse_contains,
    multiples_in_hasse, PrimePower, TraceError, TraceQuery, WaterhouseCondition,
};
pub use weierstrass::{
    curves_with_point_of_order, enumerate_curves, realized_traces, CurveError, CurvePoint,
    GroupShape, WeierstrassCurve,
};
