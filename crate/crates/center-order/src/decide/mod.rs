//! The verdict engine: pairwise order comparisons (certified on the
//! one-parameter isosceles family, witness/sampling-based on two-parameter
//! families), region classifications, and the coincidence finder.

pub mod coincide;
pub mod iso;
pub mod kext;
pub mod twod;

use crate::catalog::{Catalog, CatalogError, Sides};
use crate::exactnum::{RootIsolation, rat};
use crate::geom::BaryPoint;
use serde_json::{json, Value};
use std::fmt;
use thiserror::Error;

pub use coincide::{find_coincidence_iso, CoincidenceOutcome, CoincidenceRoot};
pub use iso::{
    at_infinity_identity, classify_outside_angle_a_iso, coincides_with_vertex_a,
    compare_iso, VertexAVerdict,
};
pub use kext::{sign_on_ray, KExt, RayAnalysis};
pub use twod::{classify_above_bc, classify_trace_right_of_c, compare_2d, AboveBcVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderKind {
    Isosceles,
    Vertex,
    Side,
    Trace,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Isosceles => "isosceles",
            OrderKind::Vertex => "vertex",
            OrderKind::Side => "side",
            OrderKind::Trace => "trace",
        }
    }
}

impl std::str::FromStr for OrderKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "isosceles" | "iso" => Ok(OrderKind::Isosceles),
            "vertex" => Ok(OrderKind::Vertex),
            "side" => Ok(OrderKind::Side),
            "trace" => Ok(OrderKind::Trace),
            other => Err(format!("unknown order kind {:?}", other)),
        }
    }
}

/// A cataloged center or one of the three vertex pseudo-centers, so claims
/// like "C precedes X24" run through the same pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CenterId {
    X(u32),
    VertexA,
    VertexB,
    VertexC,
}

impl fmt::Display for CenterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CenterId::X(n) => write!(f, "X{}", n),
            CenterId::VertexA => write!(f, "A"),
            CenterId::VertexB => write!(f, "B"),
            CenterId::VertexC => write!(f, "C"),
        }
    }
}

impl std::str::FromStr for CenterId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(CenterId::VertexA),
            "B" | "b" => Ok(CenterId::VertexB),
            "C" | "c" => Ok(CenterId::VertexC),
            other => {
                let digits = other.strip_prefix('X').unwrap_or(other);
                digits
                    .parse::<u32>()
                    .map(CenterId::X)
                    .map_err(|_| format!("not a center id: {:?}", other))
            }
        }
    }
}

impl CenterId {
    pub fn eval(&self, cat: &Catalog, s: &Sides) -> Result<BaryPoint, CatalogError> {
        match self {
            CenterId::X(n) => cat.eval_center(*n, s),
            CenterId::VertexA => Ok(BaryPoint::vertex_a()),
            CenterId::VertexB => Ok(BaryPoint::vertex_b()),
            CenterId::VertexC => Ok(BaryPoint::vertex_c()),
        }
    }

    /// Symbolic coordinates as three cyclic polynomials, constants for the
    /// vertex pseudo-centers.
    pub fn coord_upolys(
        &self,
        cat: &Catalog,
    ) -> Result<[crate::mpoly::UPoly; 3], CatalogError> {
        use crate::mpoly::UPoly;
        use num::{One, Zero};
        use crate::exactnum::Rat;
        let unit = |i: usize| {
            let mut t = [UPoly::constant(Rat::zero()), UPoly::constant(Rat::zero()),
                         UPoly::constant(Rat::zero())];
            t[i] = UPoly::constant(Rat::one());
            t
        };
        match self {
            CenterId::X(n) => cat.coord_upolys(*n),
            CenterId::VertexA => Ok(unit(0)),
            CenterId::VertexB => Ok(unit(1)),
            CenterId::VertexC => Ok(unit(2)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Precedes,
    Succeeds,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Precedes => Direction::Succeeds,
            Direction::Succeeds => Direction::Precedes,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction::Precedes => "precedes",
            Direction::Succeeds => "succeeds",
        }
    }
}

/// Outcome of an order comparison between two centers over a family.
#[derive(Clone, Debug)]
pub enum Verdict {
    /// m strictly precedes n everywhere; carries the certificate description.
    CertifiedPrecedes { certificate: String },
    CertifiedSucceeds { certificate: String },
    /// The comparison quantities agree on the whole family.
    CertifiedEqualNowhereComparable,
    /// Both strict directions occur; exact rational witness triangles.
    Mixed {
        witness_precede: Sides,
        witness_succeed: Sides,
    },
    /// No counterexample found but no certificate either.
    Undetermined {
        samples_tested: u64,
        all_consistent_with: Option<Direction>,
    },
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(
            self,
            Verdict::CertifiedPrecedes { .. }
                | Verdict::CertifiedSucceeds { .. }
                | Verdict::CertifiedEqualNowhereComparable
        )
    }

    pub fn flip(self) -> Self {
        match self {
            Verdict::CertifiedPrecedes { certificate } => {
                Verdict::CertifiedSucceeds { certificate }
            }
            Verdict::CertifiedSucceeds { certificate } => {
                Verdict::CertifiedPrecedes { certificate }
            }
            Verdict::Mixed {
                witness_precede,
                witness_succeed,
            } => Verdict::Mixed {
                witness_precede: witness_succeed,
                witness_succeed: witness_precede,
            },
            Verdict::Undetermined {
                samples_tested,
                all_consistent_with,
            } => Verdict::Undetermined {
                samples_tested,
                all_consistent_with: all_consistent_with.map(Direction::flip),
            },
            v => v,
        }
    }

    pub fn to_json(&self, order: OrderKind, m: &CenterId, n: &CenterId) -> Value {
        let base = |verdict: &str| {
            json!({
                "order": order.name(),
                "m": m.to_string(),
                "n": n.to_string(),
                "verdict": verdict,
            })
        };
        match self {
            Verdict::CertifiedPrecedes { certificate } => {
                let mut v = base("certified-precedes");
                v["certificate"] = json!(certificate);
                v
            }
            Verdict::CertifiedSucceeds { certificate } => {
                let mut v = base("certified-succeeds");
                v["certificate"] = json!(certificate);
                v
            }
            Verdict::CertifiedEqualNowhereComparable => {
                base("certified-equal-nowhere-comparable")
            }
            Verdict::Mixed {
                witness_precede,
                witness_succeed,
            } => {
                let mut v = base("mixed");
                v["witnesses"] = json!({
                    "precede": sides_json(witness_precede),
                    "succeed": sides_json(witness_succeed),
                });
                v
            }
            Verdict::Undetermined {
                samples_tested,
                all_consistent_with,
            } => {
                let mut v = base("undetermined");
                v["stats"] = json!({
                    "samples_tested": samples_tested,
                    "all_consistent_with": all_consistent_with.map(|d| d.name()),
                });
                v
            }
        }
    }
}

pub fn sides_json(s: &Sides) -> Value {
    json!([s.a.to_string(), s.b.to_string(), s.c.to_string()])
}

/// Classification outcome for a region predicate over a family.
#[derive(Clone, Debug)]
pub enum RegionVerdict {
    Always,
    Never,
    Sometimes {
        witness_in: Sides,
        witness_out: Sides,
    },
    DegenerateNote(String),
}

impl RegionVerdict {
    pub fn to_json(&self) -> Value {
        match self {
            RegionVerdict::Always => json!({"verdict": "always"}),
            RegionVerdict::Never => json!({"verdict": "never"}),
            RegionVerdict::Sometimes {
                witness_in,
                witness_out,
            } => json!({
                "verdict": "sometimes",
                "witness_in": sides_json(witness_in),
                "witness_out": sides_json(witness_out),
            }),
            RegionVerdict::DegenerateNote(t) => {
                json!({"verdict": "degenerate", "note": t})
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecideError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{0} lies at infinity on the whole family; not comparable")]
    AtInfinityOnFamily(CenterIdString),
    #[error("family is not one-parameter isosceles")]
    NotIsoFamily,
    #[error("{0}")]
    Unsupported(String),
}

/// Display-friendly wrapper so the error type stays Eq/Clone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterIdString(pub String);

impl fmt::Display for CenterIdString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Approximate location of an isolated algebraic parameter, for messages.
pub fn root_approx(r: &RootIsolation) -> f64 {
    use num::ToPrimitive;
    r.midpoint().to_f64().unwrap_or(f64::NAN)
}

/// Default coincidence-search interval (1, 10^6) is capped per polynomial by
/// the Cauchy bound inside the root isolator.
pub fn default_k_range() -> (crate::exactnum::Rat, crate::exactnum::Rat) {
    (rat(1), rat(1_000_000))
}
