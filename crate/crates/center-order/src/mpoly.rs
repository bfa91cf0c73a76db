//! Small multivariate polynomial helper: elements of Q[a,b,c] plus a linear
//! U-part, with the reduction U^2 = 3E/16 applied on multiplication. Used for
//! whole-family identity checks (at-infinity sums, homogeneity, symmetry),
//! not for the per-triangle fast path.

use crate::exactnum::{rat, ratio, Rat};
use num::{One, Zero};
use std::collections::BTreeMap;

/// Polynomial in a, b, c with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TriPoly {
    /// exponent triple (a, b, c) -> coefficient
    pub terms: BTreeMap<[u32; 3], Rat>,
}

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut t = TriPoly::zero();
        if !c.is_zero() {
            t.terms.insert([0, 0, 0], c);
        }
        t
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0u32; 3];
        e[i] = 1;
        let mut t = TriPoly::zero();
        t.terms.insert(e, Rat::one());
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, e: [u32; 3], c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        TriPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TriPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.insert(
                    [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]],
                    c1 * c2,
                );
            }
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return TriPoly::zero();
        }
        TriPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Substitute variables by index permutation: output exponent of var i is
    /// the input exponent of var perm[i]. The substitution
    /// (a,b,c) -> (b,c,a), i.e. g(a,b,c) = f(b,c,a), is perm = [2,0,1].
    pub fn permute_vars(&self, perm: [usize; 3]) -> Self {
        TriPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    ([e[perm[0]], e[perm[1]], e[perm[2]]], c.clone())
                })
                .collect(),
        }
    }

    /// Total-degree set of the monomials (for homogeneity checks); U counts
    /// separately at the caller.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self
            .terms
            .keys()
            .map(|e| e[0] + e[1] + e[2])
            .collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn eval(&self, a: &Rat, b: &Rat, c: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (e, coef) in &self.terms {
            let mut t = coef.clone();
            for _ in 0..e[0] {
                t *= a;
            }
            for _ in 0..e[1] {
                t *= b;
            }
            for _ in 0..e[2] {
                t *= c;
            }
            acc += t;
        }
        acc
    }
}

/// E = 16 K^2 as a polynomial in a, b, c.
pub fn e_poly() -> TriPoly {
    let mut t = TriPoly::zero();
    for (e, c) in [
        ([2, 2, 0], 2i64),
        ([0, 2, 2], 2),
        ([2, 0, 2], 2),
        ([4, 0, 0], -1),
        ([0, 4, 0], -1),
        ([0, 0, 4], -1),
    ] {
        t.insert([e[0] as u32, e[1] as u32, e[2] as u32], rat(c));
    }
    t
}

/// Q[a,b,c] extended by the unit U with U^2 = 3E/16.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    pub p0: TriPoly,
    pub p1: TriPoly,
}

impl UPoly {
    pub fn from_tri(p: TriPoly) -> Self {
        UPoly {
            p0: p,
            p1: TriPoly::zero(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_tri(TriPoly::constant(c))
    }

    pub fn var(i: usize) -> Self {
        Self::from_tri(TriPoly::var(i))
    }

    pub fn unit_u() -> Self {
        UPoly {
            p0: TriPoly::zero(),
            p1: TriPoly::constant(Rat::one()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.p0.is_zero() && self.p1.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        UPoly {
            p0: self.p0.add(&other.p0),
            p1: self.p1.add(&other.p1),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        UPoly {
            p0: self.p0.sub(&other.p0),
            p1: self.p1.sub(&other.p1),
        }
    }

    pub fn neg(&self) -> Self {
        UPoly {
            p0: self.p0.neg(),
            p1: self.p1.neg(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let usq = e_poly().scale(&ratio(3, 16));
        UPoly {
            p0: self
                .p0
                .mul(&other.p0)
                .add(&self.p1.mul(&other.p1).mul(&usq)),
            p1: self.p0.mul(&other.p1).add(&self.p1.mul(&other.p0)),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = UPoly::constant(Rat::one());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn permute_vars(&self, perm: [usize; 3]) -> Self {
        // U = sqrt(3)K is symmetric in the sides, so only a,b,c permute.
        UPoly {
            p0: self.p0.permute_vars(perm),
            p1: self.p1.permute_vars(perm),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_square_reduces() {
        let u = UPoly::unit_u();
        let sq = u.mul(&u);
        assert!(sq.p1.is_zero());
        assert_eq!(sq.p0, e_poly().scale(&ratio(3, 16)));
    }

    #[test]
    fn e_value_345() {
        // 3-4-5 triangle: E = 16 K^2 = 16 * 36 = 576.
        let e = e_poly().eval(&rat(3), &rat(4), &rat(5));
        assert_eq!(e, rat(576));
    }

    #[test]
    fn permute_round_trip() {
        let p = TriPoly::var(0).mul(&TriPoly::var(1)); // f = a*b
        let q = p.permute_vars([2, 0, 1]); // f(b,c,a) = b*c
        assert_eq!(q, TriPoly::var(1).mul(&TriPoly::var(2)));
    }
}
