//! The template catalog: closed-form descriptions of the reference
//! triangulations that every finitely presented triangulation deviates from
//! by a finite patch.
//!
//! Templates on the completed surface never list the generic arc `z`
//! explicitly; it is an implicit member of every completed triangulation.

use crate::arc::{Arc, ArcKind, SurfaceKind, Vertex};
use crate::tailset::TailAtom;
use std::collections::BTreeSet;
use std::fmt;

/// Orientation of a zigzag triangulation.
///
/// `Right`: arc sums are `2c` and `2c+1` (the variant whose odd-length arcs
/// lean right). `Left`: arc sums are `2c` and `2c−1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Orient {
    Left,
    Right,
}

impl fmt::Display for Orient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orient::Left => write!(f, "left"),
            Orient::Right => write!(f, "right"),
        }
    }
}

/// A reference triangulation with closed-form membership.
///
/// The catalog covers the locally finite zigzags, the split fountains of the
/// plain ∞-gon, and the fountain/asymptotic families of the completed
/// ∞-gon. Each variant knows its arc set exactly; finite deviations are
/// layered on top by [`crate::triangulation::Triangulation`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TemplateSpec {
    /// Locally finite zigzag centred at `c`: `{(c−k, c+k)} ∪ {(c−k, c+k+1)}`
    /// for `Right`, `{(c−k, c+k)} ∪ {(c−k−1, c+k)}` for `Left`, `k ≥ 1`.
    ZigzagLf { center: i64, orient: Orient },
    /// `t(a,b)`: left fountain at `a`, right fountain at `b`, the strip
    /// in between fanned from `a`. Plain ∞-gon only. Requires `a ≤ b`.
    SplitFountain { a: i64, b: i64 },
    /// `t̄(a,b)`: fans at `a` and `b` plus `α_a` and `π_a, …, π_b`.
    /// Requires `a ≤ b`.
    CompletedFountain { a: i64, b: i64 },
    /// `t̄(−∞,b)`: all adics up to `b`, fan at `b`, `π_b`.
    LeftInfRight { b: i64 },
    /// `t̄(∞,b)`: all Prüfer arcs up to `b`, fan at `b`.
    RightInfRight { b: i64 },
    /// `t̄(a,∞)`: fan at `a`, `α_a`, all Prüfer arcs from `a` up.
    LeftRightInf { a: i64 },
    /// `t̄(a,−∞)`: fan at `a`, all adics from `a` up.
    LeftMinusInf { a: i64 },
    /// `{α_k | k ≤ c} ∪ {π_k | k ≥ c}`.
    DoubleInf { c: i64 },
    /// `t̄(∞,∞) = {π_k | k ∈ ℤ}`.
    AllPrufer,
    /// `t̄(−∞,−∞) = {α_k | k ∈ ℤ}`.
    AllAdic,
}

/// Error raised by [`TemplateSpec::validate`] / instantiation.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum TemplateError {
    #[error("template requires a <= b, got a={a} b={b}")]
    UnorderedFountains { a: i64, b: i64 },
    #[error("template needs asymptotic arcs, which the plain infinity-gon lacks")]
    SurfaceMismatch,
}

impl TemplateSpec {
    /// Parameter validity, independent of surface.
    pub fn validate(&self) -> Result<(), TemplateError> {
        match *self {
            TemplateSpec::SplitFountain { a, b } | TemplateSpec::CompletedFountain { a, b }
                if a > b =>
            {
                Err(TemplateError::UnorderedFountains { a, b })
            }
            _ => Ok(()),
        }
    }

    /// Is this template realizable on `surface`?
    ///
    /// Zigzags exist on both surfaces. Split fountains are only maximal on
    /// the plain ∞-gon (on the completion, `α_a` would be addable). Every
    /// other variant uses asymptotic arcs and needs the completion.
    pub fn fits(&self, surface: SurfaceKind) -> bool {
        match self {
            TemplateSpec::ZigzagLf { .. } => true,
            TemplateSpec::SplitFountain { .. } => surface == SurfaceKind::InftyGon,
            _ => surface == SurfaceKind::CompletedInftyGon,
        }
    }

    /// Closed-form membership, ignoring any patch. The generic arc is
    /// reported as a member (it belongs to every completed triangulation and
    /// never to a plain-∞-gon one, which cannot express it anyway).
    pub fn contains(&self, arc: &Arc) -> bool {
        match arc.kind() {
            ArcKind::Generic => true,
            ArcKind::Peripheral => {
                let (i, j) = match (arc.lo(), arc.hi()) {
                    (Vertex::Fin(i), Vertex::Fin(j)) => (i, j),
                    _ => unreachable!("peripheral arcs have finite endpoints"),
                };
                self.contains_peripheral(i, j)
            }
            ArcKind::Adic(m) => self.contains_adic(m),
            ArcKind::Prufer(m) => self.contains_prufer(m),
        }
    }

    fn contains_peripheral(&self, i: i64, j: i64) -> bool {
        match *self {
            TemplateSpec::ZigzagLf { center: c, orient } => {
                let s = i + j;
                match orient {
                    Orient::Right => s == 2 * c || (s == 2 * c + 1 && j - i >= 3),
                    Orient::Left => s == 2 * c || (s == 2 * c - 1 && j - i >= 3),
                }
            }
            TemplateSpec::SplitFountain { a, b } => {
                (j == a && i <= a - 2)
                    || (i == b && j >= b + 2)
                    || (i == a && (a + 2..=b).contains(&j))
            }
            TemplateSpec::CompletedFountain { a, b } => {
                (j == a && i <= a - 2) || (i == b && j >= b + 2)
            }
            TemplateSpec::LeftInfRight { b } | TemplateSpec::RightInfRight { b } => {
                i == b && j >= b + 2
            }
            TemplateSpec::LeftRightInf { a } | TemplateSpec::LeftMinusInf { a } => {
                j == a && i <= a - 2
            }
            TemplateSpec::DoubleInf { .. } | TemplateSpec::AllPrufer | TemplateSpec::AllAdic => {
                false
            }
        }
    }

    fn contains_adic(&self, m: i64) -> bool {
        match *self {
            TemplateSpec::CompletedFountain { a, .. } | TemplateSpec::LeftRightInf { a } => m == a,
            TemplateSpec::LeftInfRight { b } => m <= b,
            TemplateSpec::LeftMinusInf { a } => m >= a,
            TemplateSpec::DoubleInf { c } => m <= c,
            TemplateSpec::AllAdic => true,
            _ => false,
        }
    }

    fn contains_prufer(&self, m: i64) -> bool {
        match *self {
            TemplateSpec::CompletedFountain { a, b } => (a..=b).contains(&m),
            TemplateSpec::LeftInfRight { b } => m == b,
            TemplateSpec::RightInfRight { b } => m <= b,
            TemplateSpec::LeftRightInf { a } => m >= a,
            TemplateSpec::DoubleInf { c } => m >= c,
            TemplateSpec::AllPrufer => true,
            _ => false,
        }
    }

    /// Decomposition into infinite tails plus a finite core, the working
    /// representation used by the mutation engine.
    pub fn atoms(&self) -> (Vec<TailAtom>, BTreeSet<Arc>) {
        let mut core = BTreeSet::new();
        let atoms = match *self {
            TemplateSpec::ZigzagLf { center, orient } => {
                vec![TailAtom::Zigzag { center, orient, from: 1 }]
            }
            TemplateSpec::SplitFountain { a, b } => {
                for j in a + 2..=b {
                    core.insert(Arc::peripheral(a, j));
                }
                vec![
                    TailAtom::LeftFan { apex: a, from: a - 2 },
                    TailAtom::RightFan { apex: b, from: b + 2 },
                ]
            }
            TemplateSpec::CompletedFountain { a, b } => {
                core.insert(Arc::adic(a));
                for m in a..=b {
                    core.insert(Arc::prufer(m));
                }
                vec![
                    TailAtom::LeftFan { apex: a, from: a - 2 },
                    TailAtom::RightFan { apex: b, from: b + 2 },
                ]
            }
            TemplateSpec::LeftInfRight { b } => {
                core.insert(Arc::prufer(b));
                vec![
                    TailAtom::AdicDown { from: b },
                    TailAtom::RightFan { apex: b, from: b + 2 },
                ]
            }
            TemplateSpec::RightInfRight { b } => vec![
                TailAtom::PruferDown { from: b },
                TailAtom::RightFan { apex: b, from: b + 2 },
            ],
            TemplateSpec::LeftRightInf { a } => {
                core.insert(Arc::adic(a));
                vec![
                    TailAtom::LeftFan { apex: a, from: a - 2 },
                    TailAtom::PruferUp { from: a },
                ]
            }
            TemplateSpec::LeftMinusInf { a } => vec![
                TailAtom::LeftFan { apex: a, from: a - 2 },
                TailAtom::AdicUp { from: a },
            ],
            TemplateSpec::DoubleInf { c } => vec![
                TailAtom::AdicDown { from: c },
                TailAtom::PruferUp { from: c },
            ],
            TemplateSpec::AllPrufer => vec![
                TailAtom::PruferDown { from: -1 },
                TailAtom::PruferUp { from: 0 },
            ],
            TemplateSpec::AllAdic => vec![
                TailAtom::AdicDown { from: -1 },
                TailAtom::AdicUp { from: 0 },
            ],
        };
        (atoms, core)
    }

    /// `(left fountain, right fountain)` of the template. `None` on both
    /// sides means locally finite. A `±∞` entry is a fountain "wrapping"
    /// around the corresponding limit point (an infinite adic or Prüfer
    /// tail on that side).
    pub fn profile(&self) -> (Option<Vertex>, Option<Vertex>) {
        use Vertex::{Fin, NegInf, PosInf};
        match *self {
            TemplateSpec::ZigzagLf { .. } => (None, None),
            TemplateSpec::SplitFountain { a, b } | TemplateSpec::CompletedFountain { a, b } => {
                (Some(Fin(a)), Some(Fin(b)))
            }
            TemplateSpec::LeftInfRight { b } => (Some(NegInf), Some(Fin(b))),
            TemplateSpec::RightInfRight { b } => (Some(PosInf), Some(Fin(b))),
            TemplateSpec::LeftRightInf { a } => (Some(Fin(a)), Some(PosInf)),
            TemplateSpec::LeftMinusInf { a } => (Some(Fin(a)), Some(NegInf)),
            TemplateSpec::DoubleInf { .. } => (Some(NegInf), Some(PosInf)),
            TemplateSpec::AllPrufer => (Some(PosInf), Some(PosInf)),
            TemplateSpec::AllAdic => (Some(NegInf), Some(NegInf)),
        }
    }
}

impl fmt::Display for TemplateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TemplateSpec::ZigzagLf { center, orient } => {
                write!(f, "zigzag c={center} orient={orient}")
            }
            TemplateSpec::SplitFountain { a, b } => write!(f, "split a={a} b={b}"),
            TemplateSpec::CompletedFountain { a, b } => write!(f, "cfountain a={a} b={b}"),
            TemplateSpec::LeftInfRight { b } => write!(f, "linf b={b}"),
            TemplateSpec::RightInfRight { b } => write!(f, "rinf b={b}"),
            TemplateSpec::LeftRightInf { a } => write!(f, "ainf a={a}"),
            TemplateSpec::LeftMinusInf { a } => write!(f, "aminf a={a}"),
            TemplateSpec::DoubleInf { c } => write!(f, "dinf c={c}"),
            TemplateSpec::AllPrufer => write!(f, "allprufer"),
            TemplateSpec::AllAdic => write!(f, "alladic"),
        }
    }
}
