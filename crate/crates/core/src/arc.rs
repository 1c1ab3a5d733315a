//! Endpoints, arcs, the crossing predicate, and the module-labeling map.
//!
//! Marked points live on the integer line with two limit points. The
//! single total order `NegInf < Fin(m) < Fin(n) < PosInf` (for `m < n`)
//! lets one crossing rule cover peripheral and asymptotic arcs alike:
//! `a` crosses `b` iff the endpoints interlace strictly.

use std::fmt;

use thiserror::Error;

/// A marked point of the (completed) ∞-gon: an integer or one of the two
/// limit points.
///
/// The derived order is the geometric one: `NegInf` below every integer,
/// `PosInf` above.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Vertex {
    NegInf,
    Fin(i64),
    PosInf,
}

impl Vertex {
    pub fn is_finite(self) -> bool {
        matches!(self, Vertex::Fin(_))
    }

    /// The integer value, if this is a finite marked point.
    pub fn finite(self) -> Option<i64> {
        match self {
            Vertex::Fin(n) => Some(n),
            _ => None,
        }
    }
}

impl From<i64> for Vertex {
    fn from(n: i64) -> Self {
        Vertex::Fin(n)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::NegInf => write!(f, "-inf"),
            Vertex::Fin(n) => write!(f, "{n}"),
            Vertex::PosInf => write!(f, "inf"),
        }
    }
}

/// Which surface arcs live on.
///
/// The plain ∞-gon has only the integer marked points; the completed
/// ∞-gon adds `±∞` and with them the adic, Prüfer, and generic arcs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SurfaceKind {
    InftyGon,
    CompletedInftyGon,
}

/// Classification of an arc by the finiteness of its endpoints.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ArcKind {
    /// Both endpoints finite: `(i, j)` with `j - i >= 2`.
    Peripheral,
    /// `α_m = (-∞, m)`.
    Adic(i64),
    /// `π_m = (m, +∞)`.
    Prufer(i64),
    /// The generic arc `z = (-∞, +∞)`.
    Generic,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
pub enum ArcError {
    #[error("endpoints coincide; an arc needs two distinct marked points")]
    DegenerateArc,
    #[error("({0}, {1}) is a boundary edge, not an arc")]
    EdgeNotArc(i64, i64),
    #[error("the plain ∞-gon has no infinite marked points")]
    InfiniteEndpointOnInftyGon,
}

/// An arc between two marked points, stored with `lo < hi`.
///
/// Peripheral arcs must skip at least one marked point (`hi - lo >= 2`);
/// adjacent pairs are boundary edges and are deliberately *not*
/// representable (see [`is_boundary_edge`]).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    lo: Vertex,
    hi: Vertex,
}

impl Arc {
    /// Peripheral arc `(i, j)`.
    ///
    /// # Panics
    /// If `|i - j| < 2`. Use [`make_arc`] for checked construction.
    pub fn peripheral(i: i64, j: i64) -> Arc {
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        assert!(hi - lo >= 2, "({i}, {j}) is not an arc");
        Arc { lo: Vertex::Fin(lo), hi: Vertex::Fin(hi) }
    }

    /// The adic arc `α_m = (-∞, m)`.
    pub fn adic(m: i64) -> Arc {
        Arc { lo: Vertex::NegInf, hi: Vertex::Fin(m) }
    }

    /// The Prüfer arc `π_m = (m, +∞)`.
    pub fn prufer(m: i64) -> Arc {
        Arc { lo: Vertex::Fin(m), hi: Vertex::PosInf }
    }

    /// The generic arc `z = (-∞, +∞)`.
    pub fn generic() -> Arc {
        Arc { lo: Vertex::NegInf, hi: Vertex::PosInf }
    }

    pub fn lo(self) -> Vertex {
        self.lo
    }

    pub fn hi(self) -> Vertex {
        self.hi
    }

    pub fn endpoints(self) -> [Vertex; 2] {
        [self.lo, self.hi]
    }

    pub fn has_endpoint(self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    pub fn kind(self) -> ArcKind {
        arc_kind(self)
    }

    /// True iff at least one endpoint is a limit point.
    pub fn is_asymptotic(self) -> bool {
        !matches!(self.kind(), ArcKind::Peripheral)
    }

    /// True iff this arc is allowed on `surface`.
    pub fn fits(self, surface: SurfaceKind) -> bool {
        surface == SurfaceKind::CompletedInftyGon || self.kind() == ArcKind::Peripheral
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            ArcKind::Peripheral => {
                let (i, j) = (self.lo.finite().unwrap(), self.hi.finite().unwrap());
                write!(f, "({i},{j})")
            }
            ArcKind::Adic(m) => write!(f, "a({m})"),
            ArcKind::Prufer(m) => write!(f, "p({m})"),
            ArcKind::Generic => write!(f, "z"),
        }
    }
}

impl fmt::Debug for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Checked arc construction: normalizes endpoint order and rejects
/// degenerate pairs, boundary edges, and infinite endpoints on the plain
/// ∞-gon.
pub fn make_arc(u: Vertex, v: Vertex, surface: SurfaceKind) -> Result<Arc, ArcError> {
    if u == v {
        return Err(ArcError::DegenerateArc);
    }
    let (lo, hi) = if u < v { (u, v) } else { (v, u) };
    if surface == SurfaceKind::InftyGon && (!lo.is_finite() || !hi.is_finite()) {
        return Err(ArcError::InfiniteEndpointOnInftyGon);
    }
    if let (Vertex::Fin(i), Vertex::Fin(j)) = (lo, hi) {
        if j - i < 2 {
            return Err(ArcError::EdgeNotArc(i, j));
        }
    }
    Ok(Arc { lo, hi })
}

/// Strict interlacing: `a` crosses `b` iff
/// `lo(a) < lo(b) < hi(a) < hi(b)` or `lo(b) < lo(a) < hi(b) < hi(a)`.
///
/// Arcs sharing an endpoint never cross, and the generic arc `z`
/// crosses nothing: its endpoints are the extremes of the vertex order,
/// so no arc can interlace with it strictly.
pub fn crosses(a: Arc, b: Arc) -> bool {
    (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) || (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi)
}

/// See [`ArcKind`].
pub fn arc_kind(a: Arc) -> ArcKind {
    match (a.lo, a.hi) {
        (Vertex::Fin(_), Vertex::Fin(_)) => ArcKind::Peripheral,
        (Vertex::NegInf, Vertex::Fin(m)) => ArcKind::Adic(m),
        (Vertex::Fin(m), Vertex::PosInf) => ArcKind::Prufer(m),
        (Vertex::NegInf, Vertex::PosInf) => ArcKind::Generic,
        _ => unreachable!("arcs are stored with lo < hi"),
    }
}

/// Label of the indecomposable module attached to an arc of the
/// completed ∞-gon: `(i,j) ↦ M_{i,j}`, `π_i ↦ Pi_i`, `α_i ↦ A_i`,
/// `z ↦ G`.
pub fn phi_label(a: Arc) -> String {
    match a.kind() {
        ArcKind::Peripheral => {
            let (i, j) = (a.lo.finite().unwrap(), a.hi.finite().unwrap());
            format!("M_{{{i},{j}}}")
        }
        ArcKind::Prufer(m) => format!("Pi_{m}"),
        ArcKind::Adic(m) => format!("A_{m}"),
        ArcKind::Generic => "G".to_string(),
    }
}

/// True iff `{u, v}` is a boundary edge of the surface, i.e. a pair of
/// adjacent integers. The limit points have no incident edges.
pub fn is_boundary_edge(u: Vertex, v: Vertex) -> bool {
    match (u, v) {
        (Vertex::Fin(i), Vertex::Fin(j)) => (i - j).abs() == 1,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn make_arc_normalizes_endpoint_order() {
        let a = make_arc(Vertex::Fin(5), Vertex::Fin(-3), SurfaceKind::InftyGon).unwrap();
        assert_eq!(a, Arc::peripheral(-3, 5));
        assert_eq!(a.lo(), Vertex::Fin(-3));
        assert_eq!(a.hi(), Vertex::Fin(5));
    }

    #[test]
    fn adjacent_integers_are_an_edge_not_an_arc() {
        assert_eq!(
            make_arc(Vertex::Fin(0), Vertex::Fin(1), SurfaceKind::InftyGon),
            Err(ArcError::EdgeNotArc(0, 1))
        );
        assert!(is_boundary_edge(Vertex::Fin(0), Vertex::Fin(1)));
        assert!(!is_boundary_edge(Vertex::NegInf, Vertex::Fin(0)));
    }

    #[test]
    fn infinite_endpoints_require_the_completed_surface() {
        assert_eq!(
            make_arc(Vertex::NegInf, Vertex::Fin(7), SurfaceKind::InftyGon),
            Err(ArcError::InfiniteEndpointOnInftyGon)
        );
        let a = make_arc(Vertex::NegInf, Vertex::Fin(7), SurfaceKind::CompletedInftyGon).unwrap();
        assert_eq!(a, Arc::adic(7));
        assert_eq!(a.kind(), ArcKind::Adic(7));
    }

    #[test]
    fn degenerate_pairs_are_rejected() {
        assert_eq!(
            make_arc(Vertex::Fin(3), Vertex::Fin(3), SurfaceKind::InftyGon),
            Err(ArcError::DegenerateArc)
        );
        assert_eq!(
            make_arc(Vertex::PosInf, Vertex::PosInf, SurfaceKind::CompletedInftyGon),
            Err(ArcError::DegenerateArc)
        );
    }

    #[test]
    fn crossing_examples() {
        // Interlaced peripherals cross; nested or endpoint-sharing ones don't.
        assert!(crosses(Arc::peripheral(0, 3), Arc::peripheral(1, 4)));
        assert!(!crosses(Arc::peripheral(0, 3), Arc::peripheral(3, 5)));
        assert!(!crosses(Arc::peripheral(0, 5), Arc::peripheral(1, 3)));
        // z is compatible with everything.
        assert!(!crosses(Arc::generic(), Arc::prufer(5)));
        assert!(!crosses(Arc::generic(), Arc::adic(-2)));
        assert!(!crosses(Arc::generic(), Arc::peripheral(-10, 10)));
        // -inf < 0 < 1 < inf interlaces.
        assert!(crosses(Arc::prufer(0), Arc::adic(1)));
        assert!(!crosses(Arc::prufer(1), Arc::adic(1)));
        assert!(!crosses(Arc::prufer(2), Arc::adic(1)));
    }

    #[test]
    fn kinds_and_labels() {
        assert_eq!(Arc::peripheral(2, 9).kind(), ArcKind::Peripheral);
        assert_eq!(Arc::generic().kind(), ArcKind::Generic);
        assert_eq!(Arc::prufer(4).kind(), ArcKind::Prufer(4));
        assert_eq!(phi_label(Arc::peripheral(1, 4)), "M_{1,4}");
        assert_eq!(phi_label(Arc::prufer(3)), "Pi_3");
        assert_eq!(phi_label(Arc::adic(-1)), "A_-1");
        assert_eq!(phi_label(Arc::generic()), "G");
    }

    #[test]
    fn display_round_trips_the_cli_syntax() {
        assert_eq!(Arc::peripheral(-3, 5).to_string(), "(-3,5)");
        assert_eq!(Arc::adic(0).to_string(), "a(0)");
        assert_eq!(Arc::prufer(-7).to_string(), "p(-7)");
        assert_eq!(Arc::generic().to_string(), "z");
    }

    /// Any valid arc on the completed surface, with small endpoints.
    fn any_arc() -> impl Strategy<Value = Arc> {
        prop_oneof![
            (-50i64..50, 2i64..20).prop_map(|(i, d)| Arc::peripheral(i, i + d)),
            (-50i64..50).prop_map(Arc::adic),
            (-50i64..50).prop_map(Arc::prufer),
            Just(Arc::generic()),
        ]
    }

    proptest! {
        #[test]
        fn crossing_is_symmetric_and_irreflexive(a in any_arc(), b in any_arc()) {
            prop_assert_eq!(crosses(a, b), crosses(b, a));
            prop_assert!(!crosses(a, a));
        }

        #[test]
        fn arcs_sharing_an_endpoint_never_cross(a in any_arc(), b in any_arc()) {
            if a.endpoints().iter().any(|v| b.has_endpoint(*v)) {
                prop_assert!(!crosses(a, b));
            }
        }

        #[test]
        fn generic_arc_crosses_nothing(a in any_arc()) {
            prop_assert!(!crosses(Arc::generic(), a));
        }

        #[test]
        fn make_arc_accepts_exactly_the_valid_pairs(i in -30i64..30, j in -30i64..30) {
            let r = make_arc(Vertex::Fin(i), Vertex::Fin(j), SurfaceKind::InftyGon);
            match (j - i).abs() {
                0 => prop_assert_eq!(r, Err(ArcError::DegenerateArc)),
                1 => prop_assert!(matches!(r, Err(ArcError::EdgeNotArc(_, _)))),
                _ => prop_assert!(r.is_ok()),
            }
        }
    }
}
