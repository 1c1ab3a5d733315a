//! Triangulations of the ∞-gon and the completed ∞-gon.
//!
//! The ∞-gon has marked points at every integer; arcs are pairs `(i, j)`
//! with `j - i >= 2`. The completed ∞-gon adds two limit points `-∞` and
//! `+∞`, which admit *adic* arcs `α_m = (-∞, m)`, *Prüfer* arcs
//! `π_m = (m, +∞)`, and the generic arc `z = (-∞, +∞)`.
//!
//! Triangulations (maximal sets of pairwise non-crossing arcs) are
//! represented *finitely*: a catalog template describing the asymptotic
//! shape plus a finite patch of removed/added arcs. On top of that the
//! crate provides:
//!
//! - diagonal flips and mutability tests ([`mutation`]),
//! - infinite admissible flip sequences with per-arc stabilization
//!   certificates, evaluated either in closed form or by bounded
//!   simulation ([`mutation::Schedule`], [`mutation::evaluate`]),
//! - Prüfer/adic completion of the (possibly non-maximal) limit arc set
//!   back to a triangulation ([`completion`]),
//! - strong-mutation-equivalence classification and transfinite routing
//!   between equivalence classes with machine-checkable witnesses
//!   ([`equivalence`]),
//! - a brute-force finite-polygon oracle used to cross-validate every
//!   window of the symbolic engine ([`oracle`]),
//! - deterministic ASCII / SVG rendering and a textual presentation
//!   format ([`render`], [`parse`]).
//!
//! Batch helpers run on rayon when the default `parallel` feature is
//! enabled and fall back to sequential iteration otherwise.

pub mod arc;
pub mod batch;
pub mod completion;
pub mod equivalence;
pub mod mutation;
pub mod oracle;
pub mod parse;
pub mod render;
pub mod tailset;
pub mod template;
pub mod triangulation;

pub use arc::{arc_kind, crosses, is_boundary_edge, make_arc, phi_label, Arc, ArcError, ArcKind, SurfaceKind, Vertex};
pub use template::TemplateSpec;
pub use triangulation::{Triangulation, TriangulationError};
