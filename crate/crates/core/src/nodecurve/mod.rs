//! Curves of bidegree `(4, lambda)` on `P^1 x P^1` with prescribed nodes, built
//! over a prime field and certified: node types, completeness of the singular
//! locus, absolute irreducibility, genus and scroll type.
//!
//! Affine coordinates are `(u, v)`. The form has `u`-degree 4 and
//! `v`-degree `lambda`, so a fibre `v = const` meets the curve in 4 points:
//! projection to `v` is the 4-gonal pencil. The lines `M`, `N` are
//! `u = const` and carry the nodes that lower `a` and `b`; each `Q`-fibre is a
//! line `v = const` carrying one node.

mod conditions;
mod construct;
mod file;
mod form;
mod irreducible;
mod plan;
mod recover;
mod singular;
mod tpos;

pub use conditions::{keylemma_rank_check, node_condition_matrix, rank_experiment, sample_curve, RankCheck, RankExperiment};
pub use construct::{construct, ConstructOptions, ConstructedCurve};
pub use file::{verify_curve_file, CurveCertificates, CurveFile, VerifyCheck, VerifyReport, SCHEMA_VERSION};
pub use form::BidegreeForm;
pub use irreducible::{irreducibility_certificate, IrreducibilityCertificate, IrreducibilityTag};
pub use plan::{build_node_plan, build_node_plan_with, NodePlan, PlanOptions, QuadricPoint};
pub use recover::{recover_scroll_type, RecoveredInvariants};
pub use singular::{singular_locus_complete, verify_nodes, NodeCertificate, NodeEntry, SingularSweep};
pub use tpos::{keylemma_rank_experiment_tpos, rank_experiment_tpos, tpos_basis, TposRankCheck};
