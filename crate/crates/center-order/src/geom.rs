//! Barycentric predicates and metrics: normalization, region classification,
//! inside-angle and above-side tests, signed distances, point-to-line
//! distance, and cevian traces.
//!
//! Every predicate here is a strict exact sign decision; boundary cases (on a
//! sideline, at a vertex, at infinity) come back as explicit enum values or
//! errors rather than a silently chosen sign.

use crate::catalog::{AreaContext, Sides};
use crate::exactnum::{QuadExt, Rat};
use num::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("point is at infinity (coordinate sum is zero)")]
    AtInfinity,
    #[error("point coincides with vertex A; its cevian trace is undefined")]
    UndefinedCevian,
    #[error("trace is at infinity (q + r = 0)")]
    TraceAtInfinity,
    #[error("line is degenerate for the distance formula")]
    DegenerateLine,
}

/// Homogeneous barycentric coordinates (u : v : w), not all zero, with a
/// shared radicand. At infinity iff u + v + w = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaryPoint {
    pub u: QuadExt,
    pub v: QuadExt,
    pub w: QuadExt,
}

/// Coordinate signs of the normalized point: (+,+,+) is the interior, the
/// other sign patterns are the six exterior regions cut out by the sidelines,
/// with zeros marking the boundary lines themselves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegionCode {
    pub sign_u: i8,
    pub sign_v: i8,
    pub sign_w: i8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideOfBC {
    Above,
    On,
    Below,
    AtInfinity,
}

/// rho = u/(u+v+w); the signed distance to BC is (2K/a) * rho.
#[derive(Clone, Debug)]
pub struct SignedHeightRatio {
    pub rho: QuadExt,
}

impl BaryPoint {
    pub fn new(u: QuadExt, v: QuadExt, w: QuadExt) -> Self {
        BaryPoint { u, v, w }
    }

    pub fn from_rats(u: Rat, v: Rat, w: Rat) -> Self {
        BaryPoint {
            u: QuadExt::from_rat(u),
            v: QuadExt::from_rat(v),
            w: QuadExt::from_rat(w),
        }
    }

    pub fn vertex_a() -> Self {
        Self::from_rats(Rat::from_integer(1.into()), Rat::zero(), Rat::zero())
    }

    pub fn vertex_b() -> Self {
        Self::from_rats(Rat::zero(), Rat::from_integer(1.into()), Rat::zero())
    }

    pub fn vertex_c() -> Self {
        Self::from_rats(Rat::zero(), Rat::zero(), Rat::from_integer(1.into()))
    }

    pub fn is_zero_triple(&self) -> bool {
        self.u.is_zero() && self.v.is_zero() && self.w.is_zero()
    }

    pub fn coordinate_sum(&self) -> QuadExt {
        self.u.add(&self.v).add(&self.w)
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coordinate_sum().is_zero()
    }

    pub fn scale(&self, s: &Rat) -> Self {
        BaryPoint {
            u: self.u.scale(s),
            v: self.v.scale(s),
            w: self.w.scale(s),
        }
    }
}

/// (u,v,w)/(u+v+w), components summing to 1; Err(AtInfinity) when the sum
/// vanishes.
pub fn normalize(p: &BaryPoint) -> Result<BaryPoint, GeomError> {
    assert!(!p.is_zero_triple(), "normalize of the zero triple");
    let s = p.coordinate_sum();
    if s.is_zero() {
        return Err(GeomError::AtInfinity);
    }
    let inv = s.inv();
    Ok(BaryPoint {
        u: p.u.mul(&inv),
        v: p.v.mul(&inv),
        w: p.w.mul(&inv),
    })
}

/// Signs of the normalized coordinates (Lemma-1 region classification).
pub fn region_of(p: &BaryPoint) -> Result<RegionCode, GeomError> {
    let s = p.coordinate_sum();
    let ssign = s.sign();
    if ssign == 0 {
        return Err(GeomError::AtInfinity);
    }
    Ok(RegionCode {
        sign_u: p.u.sign() * ssign,
        sign_v: p.v.sign() * ssign,
        sign_w: p.w.sign() * ssign,
    })
}

/// Strictly inside angle A: v(u+v+w) > 0 and w(u+v+w) > 0.
pub fn inside_angle_a(p: &BaryPoint) -> Result<bool, GeomError> {
    let r = region_of(p)?;
    Ok(r.sign_v > 0 && r.sign_w > 0)
}

/// Position relative to the sideline BC.
pub fn above_bc(p: &BaryPoint) -> SideOfBC {
    let s = p.coordinate_sum();
    let ssign = s.sign();
    if ssign == 0 {
        return SideOfBC::AtInfinity;
    }
    match p.u.sign() * ssign {
        1 => SideOfBC::Above,
        -1 => SideOfBC::Below,
        _ => SideOfBC::On,
    }
}

/// rho = u/(u+v+w); multiply by 2K/a for the metric signed distance to BC.
pub fn signed_height_ratio(p: &BaryPoint) -> Result<SignedHeightRatio, GeomError> {
    let s = p.coordinate_sum();
    if s.is_zero() {
        return Err(GeomError::AtInfinity);
    }
    Ok(SignedHeightRatio {
        rho: p.u.div(&s),
    })
}

/// Compare signed distances to BC of two points without leaving the field:
/// sign of d(p) - d(q) = sign of rho(p) - rho(q) since 2K/a > 0 is common.
pub fn cmp_signed_dist_bc(p: &BaryPoint, q: &BaryPoint) -> Result<i8, GeomError> {
    let rp = signed_height_ratio(p)?.rho;
    let rq = signed_height_ratio(q)?.rho;
    Ok(rp.sub(&rq).sign())
}

/// Squared distance between two finite points:
/// with (x,y,z) = normalize(q) - normalize(p) (so x+y+z = 0),
/// d^2 = -a^2 yz - b^2 zx - c^2 xy.
pub fn squared_distance(
    p: &BaryPoint,
    q: &BaryPoint,
    s: &Sides,
) -> Result<QuadExt, GeomError> {
    let pn = normalize(p)?;
    let qn = normalize(q)?;
    let x = qn.u.sub(&pn.u);
    let y = qn.v.sub(&pn.v);
    let z = qn.w.sub(&pn.w);
    let sq = |t: &Rat| QuadExt::from_rat(t * t);
    let term = sq(&s.a).mul(&y.mul(&z))
        .add(&sq(&s.b).mul(&z.mul(&x)))
        .add(&sq(&s.c).mul(&x.mul(&y)));
    Ok(term.neg())
}

/// Squared distance to vertex A directly from homogeneous coordinates:
/// d^2 = (b^2 r(q+r) + c^2 q(q+r) - a^2 q r) / (p+q+r)^2.
pub fn squared_dist_to_vertex_a(p: &BaryPoint, s: &Sides) -> Result<QuadExt, GeomError> {
    let sum = p.coordinate_sum();
    if sum.is_zero() {
        return Err(GeomError::AtInfinity);
    }
    let sq = |t: &Rat| QuadExt::from_rat(t * t);
    let qr = p.v.add(&p.w);
    let num = sq(&s.b).mul(&p.w).mul(&qr)
        .add(&sq(&s.c).mul(&p.v).mul(&qr))
        .sub(&sq(&s.a).mul(&p.v).mul(&p.w));
    Ok(num.div(&sum.mul(&sum)))
}

/// Squared distance from P to the line ux + vy + wz = 0:
/// E (pu+qv+rw)^2 / (4 (p+q+r)^2 (a^2(u-v)(u-w) + (v-w)(b^2(v-u) + c^2(u-w)))).
pub fn squared_dist_point_to_line(
    p: &BaryPoint,
    line: (&Rat, &Rat, &Rat),
    s: &Sides,
) -> Result<QuadExt, GeomError> {
    let sum = p.coordinate_sum();
    if sum.is_zero() {
        return Err(GeomError::AtInfinity);
    }
    let (lu, lv, lw) = line;
    let ctx = AreaContext::new(s);
    let sq = |t: &Rat| t * t;
    let denom_factor = sq(&s.a) * (lu - lv) * (lu - lw)
        + (lv - lw) * (sq(&s.b) * (lv - lu) + sq(&s.c) * (lu - lw));
    if denom_factor.is_zero() {
        return Err(GeomError::DegenerateLine);
    }
    let dot = p.u.scale(lu).add(&p.v.scale(lv)).add(&p.w.scale(lw));
    let num = dot.mul(&dot).scale(&ctx.e);
    let den = sum
        .mul(&sum)
        .scale(&(Rat::from_integer(4.into()) * denom_factor));
    Ok(num.div(&den))
}

/// The A-trace: intersection of line AP with line BC, i.e. (0 : q : r).
pub fn atrace(p: &BaryPoint) -> Result<BaryPoint, GeomError> {
    if p.v.is_zero() && p.w.is_zero() {
        return Err(GeomError::UndefinedCevian);
    }
    Ok(BaryPoint {
        u: QuadExt::zero(),
        v: p.v.clone(),
        w: p.w.clone(),
    })
}

/// Signed distance from the A-trace to C: a*q/(q+r). Positive on ray CB,
/// negative on the extension beyond C.
pub fn trace_signed_dist_to_c(p: &BaryPoint, a: &Rat) -> Result<QuadExt, GeomError> {
    if p.v.is_zero() && p.w.is_zero() {
        return Err(GeomError::UndefinedCevian);
    }
    let qr = p.v.add(&p.w);
    if qr.is_zero() {
        return Err(GeomError::TraceAtInfinity);
    }
    Ok(p.v.scale(a).div(&qr))
}

/// The trace lies beyond C on the extension of BC iff q(q+r) < 0.
pub fn trace_right_of_c(p: &BaryPoint) -> Result<bool, GeomError> {
    if p.v.is_zero() && p.w.is_zero() {
        return Err(GeomError::UndefinedCevian);
    }
    Ok(p.v.mul(&p.v.add(&p.w)).sign() < 0)
}

/// Proportionality test: all three 2x2 minors of the coordinate pair vanish.
pub fn same_point(p: &BaryPoint, q: &BaryPoint) -> bool {
    assert!(!p.is_zero_triple() && !q.is_zero_triple());
    let m1 = p.v.mul(&q.w).sub(&p.w.mul(&q.v));
    let m2 = p.w.mul(&q.u).sub(&p.u.mul(&q.w));
    let m3 = p.u.mul(&q.v).sub(&p.v.mul(&q.u));
    m1.is_zero() && m2.is_zero() && m3.is_zero()
}

/// Cartesian embedding used by the renderer and the brute-force oracle:
/// B = (0,0), C = (a,0), A = ((a^2+c^2-b^2)/(2a), 2K/a) with 2K = sqrt(E)/2.
pub fn triangle_cartesian_f64(s: &Sides) -> ([f64; 2], [f64; 2], [f64; 2]) {
    use num::ToPrimitive;
    let a = s.a.to_f64().unwrap();
    let b = s.b.to_f64().unwrap();
    let c = s.c.to_f64().unwrap();
    let ctx = AreaContext::new(s);
    let e = ctx.e.to_f64().unwrap();
    let ax = (a * a + c * c - b * b) / (2.0 * a);
    let ay = e.max(0.0).sqrt() / (2.0 * a);
    ([ax, ay], [0.0, 0.0], [a, 0.0])
}

/// Cartesian position of a finite point: P = uA + vB + wC on normalized
/// coordinates. Returns None at infinity.
pub fn point_cartesian_f64(p: &BaryPoint, s: &Sides) -> Option<[f64; 2]> {
    let pn = normalize(p).ok()?;
    let (a, b, c) = triangle_cartesian_f64(s);
    let (u, v, w) = (pn.u.to_f64(), pn.v.to_f64(), pn.w.to_f64());
    Some([
        u * a[0] + v * b[0] + w * c[0],
        u * a[1] + v * b[1] + w * c[1],
    ])
}
