//! Decisions over the two-parameter acute families: exact sampling with
//! witness search, plus best-effort certification by adaptive rectangle
//! subdivision with outward-rounded interval arithmetic.

use super::{CenterId, DecideError, Direction, RegionVerdict, Verdict};
use crate::catalog::{Catalog, Sides};
use crate::exactnum::{rat, Rat};
use crate::families::{sample, SamplePlan, TriangleFamily};
use crate::geom;
use crate::mpoly::{e_poly, TriPoly, UPoly};
use crate::decide::OrderKind;
use num::bigint::BigInt;
use num::{One, Signed, Zero};

/// The family each two-parameter order quantifies over.
pub fn family_for(kind: OrderKind) -> TriangleFamily {
    match kind {
        OrderKind::Isosceles => TriangleFamily::TallIsosceles,
        OrderKind::Vertex | OrderKind::Side => TriangleFamily::AcuteMinA,
        OrderKind::Trace => TriangleFamily::AcuteScalene,
    }
}

fn pair_code(id: &CenterId) -> u32 {
    match id {
        CenterId::X(n) => *n,
        CenterId::VertexA => 10_001,
        CenterId::VertexB => 10_002,
        CenterId::VertexC => 10_003,
    }
}

/// Sign of the order comparison at one triangle: -1 means "m precedes n
/// here", +1 the opposite, 0 a tie. None when the quantity is undefined.
pub fn cmp_at(
    cat: &Catalog,
    kind: OrderKind,
    m: &CenterId,
    n: &CenterId,
    s: &Sides,
) -> Option<i8> {
    let pm = m.eval(cat, s).ok()?;
    let pn = n.eval(cat, s).ok()?;
    match kind {
        OrderKind::Isosceles | OrderKind::Vertex => {
            let dm = geom::squared_dist_to_vertex_a(&pm, s).ok()?;
            let dn = geom::squared_dist_to_vertex_a(&pn, s).ok()?;
            Some(dm.sub(&dn).sign())
        }
        OrderKind::Side => {
            // Larger signed distance to BC precedes.
            Some(-geom::cmp_signed_dist_bc(&pm, &pn).ok()?)
        }
        OrderKind::Trace => {
            let dm = geom::trace_signed_dist_to_c(&pm, &s.a).ok()?;
            let dn = geom::trace_signed_dist_to_c(&pn, &s.a).ok()?;
            // Larger signed trace distance to C precedes.
            Some(dn.sub(&dm).sign())
        }
    }
}

/// Witness/sampling comparison over a two-parameter family, with optional
/// certification by rectangle subdivision (depth 0 disables it).
pub fn compare_2d(
    cat: &Catalog,
    kind: OrderKind,
    m: &CenterId,
    n: &CenterId,
    plan: &SamplePlan,
    subdivision_depth: u32,
) -> Result<Verdict, DecideError> {
    if kind == OrderKind::Isosceles {
        return Err(DecideError::Unsupported(
            "isosceles order uses the certified 1-parameter engine".into(),
        ));
    }
    let family = family_for(kind);
    let plan = plan.for_pair(pair_code(m), pair_code(n));
    let samples = sample(family, &plan);
    let mut tested = 0u64;
    let mut witness_precede: Option<Sides> = None;
    let mut witness_succeed: Option<Sides> = None;
    for s in &samples {
        if let Some(sign) = cmp_at(cat, kind, m, n, s) {
            tested += 1;
            if sign < 0 && witness_precede.is_none() {
                witness_precede = Some(s.clone());
            }
            if sign > 0 && witness_succeed.is_none() {
                witness_succeed = Some(s.clone());
            }
            if witness_precede.is_some() && witness_succeed.is_some() {
                return Ok(Verdict::Mixed {
                    witness_precede: witness_precede.unwrap(),
                    witness_succeed: witness_succeed.unwrap(),
                });
            }
        }
    }
    let direction = match (&witness_precede, &witness_succeed) {
        (Some(_), None) => Some(Direction::Precedes),
        (None, Some(_)) => Some(Direction::Succeeds),
        _ => None,
    };
    if subdivision_depth > 0 {
        if let Some(dir) = direction {
            if let Some(cert) = try_certify(cat, kind, m, n, subdivision_depth, dir) {
                return Ok(match dir {
                    Direction::Precedes => Verdict::CertifiedPrecedes { certificate: cert },
                    Direction::Succeeds => Verdict::CertifiedSucceeds { certificate: cert },
                });
            }
        }
    }
    Ok(Verdict::Undetermined {
        samples_tested: tested,
        all_consistent_with: direction,
    })
}

// ---------------------------------------------------------------------------
// Interval arithmetic
// ---------------------------------------------------------------------------

/// Closed rational interval [lo, hi] with outward-rounded square roots.
#[derive(Clone, Debug)]
pub struct IRat {
    pub lo: Rat,
    pub hi: Rat,
}

impl IRat {
    pub fn point(x: Rat) -> Self {
        IRat { lo: x.clone(), hi: x }
    }

    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        IRat { lo, hi }
    }

    pub fn add(&self, o: &Self) -> Self {
        IRat::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &Self) -> Self {
        IRat::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let cands = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        IRat { lo, hi }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_negative() {
            IRat::new(&self.hi * s, &self.lo * s)
        } else {
            IRat::new(&self.lo * s, &self.hi * s)
        }
    }

    /// Certain sign of every point in the interval, if there is one.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    /// Outward bounds for sqrt on a nonnegative interval (lo clamped to 0).
    pub fn sqrt_outward(&self) -> Self {
        IRat {
            lo: dyadic_sqrt_lower(&self.lo.clone().max(Rat::zero())),
            hi: dyadic_sqrt_upper(&self.hi.clone().max(Rat::zero())),
        }
    }
}

const SQRT_BITS: u64 = 48;

fn dyadic_sqrt_lower(x: &Rat) -> Rat {
    if x.is_zero() {
        return Rat::zero();
    }
    // floor(sqrt(n*d * 4^p)) / (d * 2^p) <= sqrt(n/d)
    let scaled: BigInt = (x.numer() * x.denom()) << (2 * SQRT_BITS);
    Rat::new(scaled.sqrt(), x.denom() << SQRT_BITS)
}

fn dyadic_sqrt_upper(x: &Rat) -> Rat {
    if x.is_zero() {
        return Rat::zero();
    }
    let scaled: BigInt = (x.numer() * x.denom()) << (2 * SQRT_BITS);
    Rat::new(scaled.sqrt() + BigInt::one(), x.denom() << SQRT_BITS)
}

/// Interval evaluation of a polynomial in a, b, c at a = 1 over a (b, c) box.
fn eval_tri_interval(p: &TriPoly, b: &IRat, c: &IRat) -> IRat {
    // Precompute monotone powers (b, c > 0 in our boxes).
    let max_deg = |i: usize| p.terms.keys().map(|e| e[i]).max().unwrap_or(0) as usize;
    let pow_table = |base: &IRat, deg: usize| {
        let mut t = vec![IRat::point(Rat::one())];
        for i in 1..=deg {
            t.push(t[i - 1].mul(base));
        }
        t
    };
    let bp = pow_table(b, max_deg(1));
    let cp = pow_table(c, max_deg(2));
    let mut acc = IRat::point(Rat::zero());
    for (e, coef) in &p.terms {
        let term = bp[e[1] as usize].mul(&cp[e[2] as usize]).scale(coef);
        acc = acc.add(&term);
    }
    acc
}

/// Interval value of p0 + p1*U over a box, with U = sqrt(3E)/4 enclosed
/// outward.
fn eval_upoly_interval(p: &UPoly, b: &IRat, c: &IRat, u: &IRat) -> IRat {
    let v0 = eval_tri_interval(&p.p0, b, c);
    if p.p1.is_zero() {
        return v0;
    }
    v0.add(&eval_tri_interval(&p.p1, b, c).mul(u))
}

fn u_interval(b: &IRat, c: &IRat) -> IRat {
    let e = eval_tri_interval(&e_poly(), b, c);
    e.scale(&rat(3)).sqrt_outward().scale(&Rat::new(1.into(), 4.into()))
}

/// Rectangle relationship to the (open) family region, decided conservatively.
fn box_outside_family(f: TriangleFamily, b: &IRat, c: &IRat) -> bool {
    let one = Rat::one();
    // b <= 1 or c <= 1 everywhere
    if b.hi <= one || c.hi <= one {
        return true;
    }
    // b^2 >= 1 + c^2 everywhere (angle B not acute), or symmetric
    let b2 = b.mul(b);
    let c2 = c.mul(c);
    if b2.lo >= &one + &c2.hi || c2.lo >= &one + &b2.hi {
        return true;
    }
    if f == TriangleFamily::AcuteScalene && b.lo >= c.hi {
        return true;
    }
    false
}

/// The comparison quantity on a family member, decomposed for interval
/// certification: the cmp sign (-1 = m precedes) is the product of the signs
/// of `signed`, and the quantity is defined exactly where every polynomial in
/// `nonzero` is nonzero.
struct SignDecomposition {
    signed: Vec<UPoly>,
    nonzero: Vec<UPoly>,
}

fn comparison_factors(
    cat: &Catalog,
    kind: OrderKind,
    m: &CenterId,
    n: &CenterId,
) -> Result<SignDecomposition, DecideError> {
    let pm = m.coord_upolys(cat)?;
    let pn = n.coord_upolys(cat)?;
    let sum = |p: &[UPoly; 3]| p[0].add(&p[1]).add(&p[2]);
    let sm = sum(&pm);
    let sn = sum(&pn);
    Ok(match kind {
        OrderKind::Isosceles | OrderKind::Vertex => {
            // d^2 difference: (N_m s_n^2 - N_n s_m^2) / (s_m s_n)^2; the
            // denominator is a positive square wherever it is nonzero.
            let nm = dist_a_numerator_sym(&pm);
            let nn = dist_a_numerator_sym(&pn);
            SignDecomposition {
                signed: vec![nm.mul(&sn.mul(&sn)).sub(&nn.mul(&sm.mul(&sm)))],
                nonzero: vec![sm, sn],
            }
        }
        OrderKind::Side => {
            // rho_m - rho_n = (u_m s_n - u_n s_m)/(s_m s_n); the side order
            // flips the sign (larger rho precedes).
            let h = pm[0].mul(&sn).sub(&pn[0].mul(&sm));
            SignDecomposition {
                signed: vec![h.neg(), sm, sn],
                nonzero: vec![],
            }
        }
        OrderKind::Trace => {
            // d_m - d_n = a (v_m (v_n+w_n) - v_n (v_m+w_m)) / ((v_m+w_m)(v_n+w_n));
            // larger trace distance precedes, so flip.
            let tm = pm[1].add(&pm[2]);
            let tn = pn[1].add(&pn[2]);
            let h = pm[1].mul(&tn).sub(&pn[1].mul(&tm));
            SignDecomposition {
                signed: vec![h.neg(), tm, tn],
                nonzero: vec![],
            }
        }
    })
}

/// Symbolic numerator of d^2(P, A): b^2 r(q+r) + c^2 q(q+r) - a^2 q r with
/// a = 1 left symbolic (the box sets a = 1 at evaluation time).
fn dist_a_numerator_sym(p: &[UPoly; 3]) -> UPoly {
    let b2 = UPoly::var(1).mul(&UPoly::var(1));
    let c2 = UPoly::var(2).mul(&UPoly::var(2));
    let a2 = UPoly::var(0).mul(&UPoly::var(0));
    let qr = p[1].add(&p[2]);
    b2.mul(&p[2]).mul(&qr)
        .add(&c2.mul(&p[1]).mul(&qr))
        .sub(&a2.mul(&p[1]).mul(&p[2]))
}

/// Try to certify a single strict comparison sign over the clipped parameter
/// box (1, 4)^2 intersected with the family, by adaptive bisection.
fn try_certify(
    cat: &Catalog,
    kind: OrderKind,
    m: &CenterId,
    n: &CenterId,
    max_depth: u32,
    dir: Direction,
) -> Option<String> {
    let want: i8 = match dir {
        Direction::Precedes => -1,
        Direction::Succeeds => 1,
    };
    let decomp = comparison_factors(cat, kind, m, n).ok()?;
    let family = family_for(kind);
    let b0 = IRat::new(rat(1), rat(4));
    let c0 = IRat::new(rat(1), rat(4));
    let mut stack = vec![(b0, c0, 0u32)];
    let mut leaves = 0u64;
    while let Some((b, c, depth)) = stack.pop() {
        leaves += 1;
        if box_outside_family(family, &b, &c) {
            continue;
        }
        let u = u_interval(&b, &c);
        let mut sign_product: i8 = 1;
        let mut decided = true;
        for f in &decomp.signed {
            match eval_upoly_interval(f, &b, &c, &u).sign() {
                Some(s) => sign_product *= s,
                None => {
                    decided = false;
                    break;
                }
            }
        }
        for f in &decomp.nonzero {
            if decided && eval_upoly_interval(f, &b, &c, &u).sign().is_none() {
                decided = false;
            }
        }
        if decided {
            if sign_product == want {
                continue;
            }
            return None; // certain wrong sign somewhere in the family box
        }
        if depth >= max_depth {
            return None;
        }
        // Bisect the wider axis.
        let bw = &b.hi - &b.lo;
        let cw = &c.hi - &c.lo;
        if bw >= cw {
            let mid = (&b.lo + &b.hi) / rat(2);
            stack.push((IRat::new(b.lo.clone(), mid.clone()), c.clone(), depth + 1));
            stack.push((IRat::new(mid, b.hi.clone()), c, depth + 1));
        } else {
            let mid = (&c.lo + &c.hi) / rat(2);
            stack.push((b.clone(), IRat::new(c.lo.clone(), mid.clone()), depth + 1));
            stack.push((b, IRat::new(mid, c.hi.clone()), depth + 1));
        }
    }
    Some(format!(
        "interval-subdivision certificate on the (b,c) box (1,4)^2 intersected with \
         the {} family ({} leaves, depth <= {}); the family extends beyond the box, \
         where only sampling evidence applies",
        family.description(),
        leaves,
        max_depth
    ))
}

// ---------------------------------------------------------------------------
// Classifications
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub enum AboveBcVerdict {
    AlwaysAbove,
    AlwaysOnOrAbove,
    AlwaysBelow,
    Sometimes { above: Sides, below: Sides },
    AtInfinity,
    /// Sign pattern outside the expected cases (kept for robustness).
    Other(String),
}

/// Classify the position of X_n relative to side BC over a family by exact
/// evaluation at every sample.
pub fn classify_above_bc(
    cat: &Catalog,
    n: u32,
    family: TriangleFamily,
    plan: &SamplePlan,
) -> Result<AboveBcVerdict, DecideError> {
    if super::iso::at_infinity_identity(cat, n)? {
        return Ok(AboveBcVerdict::AtInfinity);
    }
    let plan = plan.for_pair(n, 0);
    let mut above: Option<Sides> = None;
    let mut below: Option<Sides> = None;
    let mut on = false;
    for s in sample(family, &plan) {
        let p = match cat.eval_center(n, &s) {
            Ok(p) => p,
            Err(_) => continue,
        };
        match geom::above_bc(&p) {
            geom::SideOfBC::Above => {
                if above.is_none() {
                    above = Some(s.clone());
                }
            }
            geom::SideOfBC::Below => {
                if below.is_none() {
                    below = Some(s.clone());
                }
            }
            geom::SideOfBC::On => on = true,
            geom::SideOfBC::AtInfinity => {}
        }
    }
    Ok(match (above, below, on) {
        (Some(a), Some(b), _) => AboveBcVerdict::Sometimes { above: a, below: b },
        (Some(_), None, false) => AboveBcVerdict::AlwaysAbove,
        (Some(_), None, true) => AboveBcVerdict::AlwaysOnOrAbove,
        (None, Some(_), false) => AboveBcVerdict::AlwaysBelow,
        (None, Some(_), true) => {
            AboveBcVerdict::Other("on or below across all samples".into())
        }
        (None, None, true) => AboveBcVerdict::Other("on BC at every sample".into()),
        (None, None, false) => {
            AboveBcVerdict::Other("no defined sample in budget".into())
        }
    })
}

/// Witness search for the trace of X_n falling beyond C over a family.
pub fn classify_trace_right_of_c(
    cat: &Catalog,
    n: u32,
    family: TriangleFamily,
    plan: &SamplePlan,
) -> Result<RegionVerdict, DecideError> {
    let plan = plan.for_pair(n, 1);
    let mut right: Option<Sides> = None;
    let mut not_right: Option<Sides> = None;
    let mut defined = 0u64;
    let mut undefined = 0u64;
    for s in sample(family, &plan) {
        let p = match cat.eval_center(n, &s) {
            Ok(p) => p,
            Err(_) => {
                undefined += 1;
                continue;
            }
        };
        match geom::trace_right_of_c(&p) {
            Ok(true) => {
                defined += 1;
                if right.is_none() {
                    right = Some(s.clone());
                }
            }
            Ok(false) => {
                defined += 1;
                if not_right.is_none() {
                    not_right = Some(s.clone());
                }
            }
            Err(_) => undefined += 1,
        }
    }
    Ok(match (right, not_right) {
        (Some(w_in), Some(w_out)) => RegionVerdict::Sometimes {
            witness_in: w_in,
            witness_out: w_out,
        },
        (Some(_), None) => RegionVerdict::Always,
        (None, Some(_)) => RegionVerdict::Never,
        (None, None) => RegionVerdict::DegenerateNote(format!(
            "trace undefined on every sample ({} defined, {} undefined)",
            defined, undefined
        )),
    })
}
