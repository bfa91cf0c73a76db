//! Arithmetic and certified sign analysis for the isosceles specialization.
//!
//! On sides (1, k, k) every center coordinate becomes A(k) + B(k)*sqrt(R(k))
//! with R(k) = 3E(k) = 12k^2 - 3 and A, B rational polynomials. Comparison
//! quantities stay in this form, so deciding an order link over the whole
//! family reduces to the exact sign of such an expression on an open k-ray —
//! which Sturm sequences settle completely.

use crate::exactnum::{
    isolate_roots, rat, ratio, rsign, sturm_root_count, QuadExt, Rat, RootIsolation,
    UniPoly,
};
use crate::mpoly::{TriPoly, UPoly};
use num::Zero;

/// R(k) = 3E on sides (1,k,k): 12k^2 - 3.
pub fn radicand_poly() -> UniPoly {
    UniPoly::from_i64(&[-3, 0, 12])
}

/// A value A(k) + B(k)*sqrt(R(k)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KExt {
    pub a: UniPoly,
    pub b: UniPoly,
}

fn subst_iso(p: &TriPoly) -> UniPoly {
    // a -> 1, b -> k, c -> k
    let mut out = UniPoly::zero();
    for (e, coef) in &p.terms {
        let deg = (e[1] + e[2]) as usize;
        let mut cs = vec![Rat::zero(); deg + 1];
        cs[deg] = coef.clone();
        out = out.add(&UniPoly::new(cs));
    }
    out
}

impl KExt {
    pub fn zero() -> Self {
        KExt {
            a: UniPoly::zero(),
            b: UniPoly::zero(),
        }
    }

    pub fn from_poly(a: UniPoly) -> Self {
        KExt {
            a,
            b: UniPoly::zero(),
        }
    }

    /// Specialize a symbolic coordinate to sides (1, k, k); the U-part picks
    /// up the factor 1/4 from U = sqrt(R)/4.
    pub fn from_upoly(p: &UPoly) -> Self {
        KExt {
            a: subst_iso(&p.p0),
            b: subst_iso(&p.p1).scale(&ratio(1, 4)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        KExt {
            a: self.a.add(&o.a),
            b: self.b.add(&o.b),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        KExt {
            a: self.a.sub(&o.a),
            b: self.b.sub(&o.b),
        }
    }

    pub fn neg(&self) -> Self {
        KExt {
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let r = radicand_poly();
        KExt {
            a: self.a.mul(&o.a).add(&self.b.mul(&o.b).mul(&r)),
            b: self.a.mul(&o.b).add(&self.b.mul(&o.a)),
        }
    }

    pub fn mul_poly(&self, p: &UniPoly) -> Self {
        KExt {
            a: self.a.mul(p),
            b: self.b.mul(p),
        }
    }

    /// Exact value at a rational parameter, as a quadratic-extension number
    /// with radicand R(k).
    pub fn eval(&self, k: &Rat) -> QuadExt {
        QuadExt::new(self.a.eval(k), self.b.eval(k), radicand_poly().eval(k))
    }

    /// The rational "norm companion" A^2 - B^2 R; every zero of the value is
    /// a zero of this polynomial (for k with R(k) > 0).
    pub fn norm_companion(&self) -> UniPoly {
        let r = radicand_poly();
        self.a
            .mul(&self.a)
            .sub(&self.b.mul(&self.b).mul(&r))
    }
}

/// Complete sign description of a KExt value on the open ray (k0, +inf).
/// `zeros` are the genuine zeros of the value itself (not merely of the norm
/// companion); between and beyond them the recorded witnesses pin the signs.
#[derive(Clone, Debug)]
pub struct RayAnalysis {
    pub identically_zero: bool,
    pub witness_positive: Option<Rat>,
    pub witness_negative: Option<Rat>,
    pub zeros: Vec<RootIsolation>,
}

impl RayAnalysis {
    pub fn strictly_positive(&self) -> bool {
        !self.identically_zero
            && self.witness_negative.is_none()
            && self.zeros.is_empty()
            && self.witness_positive.is_some()
    }

    pub fn strictly_negative(&self) -> bool {
        !self.identically_zero
            && self.witness_positive.is_none()
            && self.zeros.is_empty()
            && self.witness_negative.is_some()
    }

    pub fn vanishes_somewhere(&self) -> bool {
        self.identically_zero || !self.zeros.is_empty()
    }

    pub fn mixed(&self) -> bool {
        self.witness_positive.is_some() && self.witness_negative.is_some()
    }
}

/// Exact sign of A(rho) for rho the root isolated by `iso` (defining
/// polynomial square-free): 0 when A shares the root, otherwise the constant
/// sign of A on a refined isolating interval.
pub fn sign_at_root(a: &UniPoly, iso: &mut RootIsolation) -> i8 {
    if a.is_zero() {
        return 0;
    }
    let g = iso.defining_polynomial.gcd(a);
    let (lo, hi) = iso.isolating_interval.clone();
    if g.degree().unwrap_or(0) >= 1 && sturm_root_count(&g, &lo, &hi) > 0 {
        return 0;
    }
    // Shrink until A has no root inside; its sign there is then constant.
    loop {
        let (lo, hi) = iso.isolating_interval.clone();
        if sturm_root_count(a, &lo, &hi) == 0 {
            let s = rsign(&a.eval(&iso.midpoint()));
            if s != 0 {
                return s;
            }
            // Midpoint happened to be a root of A outside the filter; nudge.
            let probe = (&lo + &iso.midpoint()) / rat(2);
            return rsign(&a.eval(&probe));
        }
        let w = iso.width() / rat(4);
        iso.refine(&w);
    }
}

/// Decide the sign of `h` everywhere on the open ray (k0, +inf).
///
/// Sign changes of a continuous A + B*sqrt(R) can only happen at its zeros,
/// and (for R > 0) every zero is a root of the norm companion G = A^2 - B^2 R.
/// So: isolate G's roots past k0, decide h's exact sign at each (genuine-root
/// test via the signs of A and B), and sample one rational point inside every
/// complementary interval.
pub fn sign_on_ray(h: &KExt, k0: &Rat) -> RayAnalysis {
    let mut out = RayAnalysis {
        identically_zero: false,
        witness_positive: None,
        witness_negative: None,
        zeros: vec![],
    };
    if h.is_zero() {
        out.identically_zero = true;
        return out;
    }
    let record = |s: i8, k: &Rat, out: &mut RayAnalysis| match s {
        1 => {
            if out.witness_positive.is_none() {
                out.witness_positive = Some(k.clone());
            }
        }
        -1 => {
            if out.witness_negative.is_none() {
                out.witness_negative = Some(k.clone());
            }
        }
        _ => {}
    };

    let g = h.norm_companion().primitive();
    debug_assert!(!g.is_zero(), "norm companion vanishes only for h = 0");
    let mut roots = isolate_roots(&g, k0, None, &ratio(1, 1 << 20));

    // Exact sign of h at each candidate root of G.
    for r in &mut roots {
        let sa = sign_at_root(&h.a, r);
        let sb = sign_at_root(&h.b, r);
        // With G(rho) = 0 and R(rho) > 0: |A| = |B|sqrt(R), so h(rho) = 0
        // exactly when the two parts cancel (opposite signs or both zero);
        // matching signs leave h(rho) = 2A(rho).
        if sa == 0 && sb == 0 {
            out.zeros.push(r.clone());
        } else if sa != 0 && sb != 0 {
            if sa == -sb {
                out.zeros.push(r.clone());
            } else if sa == 1 {
                record(1, &r.midpoint(), &mut out);
            } else {
                record(-1, &r.midpoint(), &mut out);
            }
        } else {
            // Exactly one part vanishes: G(rho) = 0 then forces R(rho) = 0,
            // impossible past k0 >= 1/2 — the nonzero part rules.
            record(if sa != 0 { sa } else { sb }, &r.midpoint(), &mut out);
        }
    }

    // One rational sample strictly inside each gap between consecutive
    // candidate roots (h is sign-constant there).
    let mut cuts: Vec<Rat> = vec![k0.clone()];
    for r in &roots {
        cuts.push(r.isolating_interval.0.clone());
        cuts.push(r.isolating_interval.1.clone());
    }
    let far = cuts.last().unwrap().clone().max(g.cauchy_bound()) + rat(1);
    cuts.push(far);
    for pair in cuts.chunks(2) {
        if let [lo, hi] = pair {
            let mid = (lo + hi) / rat(2);
            if &mid > k0 {
                record(h.eval(&mid).sign(), &mid, &mut out);
            }
        }
    }
    // The tail beyond the last candidate.
    let far = cuts.last().unwrap() + rat(1);
    record(h.eval(&far).sign(), &far, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use num::Signed;

    fn coord_kexts(cat: &Catalog, n: u32) -> [KExt; 3] {
        let ups = cat.coord_upolys(n).unwrap();
        [
            KExt::from_upoly(&ups[0]),
            KExt::from_upoly(&ups[1]),
            KExt::from_upoly(&ups[2]),
        ]
    }

    #[test]
    fn eval_matches_direct_evaluation() {
        let cat = Catalog::bundled();
        for n in [1u32, 4, 13, 15, 74] {
            let ks = coord_kexts(&cat, n);
            let k = ratio(7, 4);
            let s = crate::catalog::Sides::iso(k.clone()).unwrap();
            let p = cat.eval_center(n, &s).unwrap();
            for (kx, direct) in ks.iter().zip([&p.u, &p.v, &p.w]) {
                assert_eq!(&kx.eval(&k), direct, "X{}", n);
            }
        }
    }

    #[test]
    fn mul_respects_radicand() {
        let h = KExt {
            a: UniPoly::from_i64(&[0, 1]), // k
            b: UniPoly::one(),             // + sqrt(12k^2-3)
        };
        let sq = h.mul(&h);
        // (k + sqrt(R))^2 = k^2 + R + 2k sqrt(R)
        assert_eq!(sq.a, UniPoly::from_i64(&[-3, 0, 13]));
        assert_eq!(sq.b, UniPoly::from_i64(&[0, 2]));
        let k = rat(2);
        let v = h.eval(&k);
        assert_eq!(v.mul(&v), sq.eval(&k));
    }

    #[test]
    fn ray_sign_pure_polynomial() {
        // (k-2)(k-3) on (1, inf): mixed, with genuine zeros at 2 and 3.
        let h = KExt::from_poly(UniPoly::from_i64(&[6, -5, 1]));
        let an = sign_on_ray(&h, &rat(1));
        assert!(an.mixed());
        assert_eq!(an.zeros.len(), 2);
        // k^2 + 1 strictly positive.
        let h = KExt::from_poly(UniPoly::from_i64(&[1, 0, 1]));
        assert!(sign_on_ray(&h, &rat(1)).strictly_positive());
        // -(k^2) strictly negative past 1.
        let h = KExt::from_poly(UniPoly::from_i64(&[0, 0, -1]));
        assert!(sign_on_ray(&h, &rat(1)).strictly_negative());
    }

    #[test]
    fn ray_sign_genuine_vs_spurious_root() {
        // h = k - sqrt(R): G = k^2 - (12k^2 - 3) has roots at sqrt(3/11) < 1,
        // none past 1, and h < 0 there (12k^2 - 3 > k^2 for k > 1).
        let h = KExt {
            a: UniPoly::from_i64(&[0, 1]),
            b: UniPoly::from_i64(&[-1]),
        };
        let an = sign_on_ray(&h, &rat(1));
        assert!(an.strictly_negative(), "{:?}", an);
        // h = k + sqrt(R) is strictly positive; its norm companion has the
        // same roots but none are genuine.
        let h = KExt {
            a: UniPoly::from_i64(&[0, 1]),
            b: UniPoly::one(),
        };
        // (k0 = 1/2 keeps R positive on the whole ray.)
        assert!(sign_on_ray(&h, &ratio(1, 2)).strictly_positive());
        // h = 2k - sqrt(R): G = 4k^2 - 12k^2 + 3 = 3 - 8k^2, root at
        // sqrt(3/8) ~ 0.61 where both parts are nonzero with opposite sign —
        // a genuine zero; h is positive below it and negative above.
        let h = KExt {
            a: UniPoly::from_i64(&[0, 2]),
            b: UniPoly::from_i64(&[-1]),
        };
        let an = sign_on_ray(&h, &ratio(1, 2));
        assert_eq!(an.zeros.len(), 1);
        assert!(an.mixed());
        let root = an.zeros[0].midpoint();
        assert!((root - ratio(612372, 1000000)).abs() < ratio(1, 1000));
    }

    #[test]
    fn ray_sign_identically_zero() {
        assert!(sign_on_ray(&KExt::zero(), &rat(1)).identically_zero);
    }

    #[test]
    fn x74_equals_x98_on_family() {
        // Both reduce to (1 : -2k^2 : -2k^2) on (1,k,k): the difference of
        // the normalized coordinate cross-products vanishes identically.
        let cat = Catalog::bundled();
        let p = coord_kexts(&cat, 74);
        let q = coord_kexts(&cat, 98);
        let m1 = p[1].mul(&q[2]).sub(&p[2].mul(&q[1]));
        let m2 = p[2].mul(&q[0]).sub(&p[0].mul(&q[2]));
        let m3 = p[0].mul(&q[1]).sub(&p[1].mul(&q[0]));
        assert!(m1.is_zero() && m2.is_zero() && m3.is_zero());
    }

    #[test]
    fn x30_sum_vanishes_on_family() {
        let cat = Catalog::bundled();
        let [u, v, w] = coord_kexts(&cat, 30);
        assert!(u.add(&v).add(&w).is_zero());
    }
}
