//! Exact arithmetic kernel: arbitrary-precision rationals, a single quadratic
//! extension, univariate polynomials, Sturm sequences and real-root isolation.
//!
//! Everything downstream (geometry predicates, order verdicts, coincidence
//! roots) reduces to sign decisions made here, with no floating point.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

/// Arbitrary-precision rational. `BigRational` already maintains the
/// invariants we need: lowest terms, denominator > 0, zero as 0/1.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of a rational as -1 / 0 / +1.
pub fn rsign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// If `r` is the square of a rational, return that (nonnegative) square root.
pub fn rat_sqrt_exact(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// QuadExt
// ---------------------------------------------------------------------------

/// A value `rational_part + radical_part * sqrt(radicand)` with radicand >= 0.
///
/// All values inside one computation share a radicand fixed by the evaluation
/// context; mixing distinct (both-used) radicands is a hard error.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadExt {
    pub rational_part: Rat,
    pub radical_part: Rat,
    pub radicand: Rat,
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*sqrt({})",
            self.rational_part, self.radical_part, self.radicand
        )
    }
}

impl QuadExt {
    pub fn new(rational_part: Rat, radical_part: Rat, radicand: Rat) -> Self {
        assert!(
            !radicand.is_negative(),
            "QuadExt radicand must be nonnegative"
        );
        let mut v = QuadExt {
            rational_part,
            radical_part,
            radicand,
        };
        v.normalize();
        v
    }

    pub fn from_rat(r: Rat) -> Self {
        QuadExt {
            rational_part: r,
            radical_part: Rat::zero(),
            radicand: Rat::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_rat(Rat::zero())
    }

    /// Collapse to a pure rational when possible: radical part zero, or the
    /// radicand a perfect rational square.
    fn normalize(&mut self) {
        if self.radical_part.is_zero() || self.radicand.is_zero() {
            self.radical_part = Rat::zero();
            self.radicand = Rat::zero();
            return;
        }
        if let Some(s) = rat_sqrt_exact(&self.radicand) {
            self.rational_part += &self.radical_part * s;
            self.radical_part = Rat::zero();
            self.radicand = Rat::zero();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational_part.is_zero() && self.radical_part.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radical_part.is_zero()
    }

    /// The shared radicand of two operands; panics on a genuine mix.
    fn join_radicand(&self, other: &Self) -> Rat {
        if self.radical_part.is_zero() {
            return other.radicand.clone();
        }
        if other.radical_part.is_zero() {
            return self.radicand.clone();
        }
        assert_eq!(
            self.radicand, other.radicand,
            "QuadExt: mixed radicands are not supported"
        );
        self.radicand.clone()
    }

    pub fn add(&self, other: &Self) -> Self {
        let d = self.join_radicand(other);
        QuadExt::new(
            &self.rational_part + &other.rational_part,
            &self.radical_part + &other.radical_part,
            d,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QuadExt {
            rational_part: -self.rational_part.clone(),
            radical_part: -self.radical_part.clone(),
            radicand: self.radicand.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.join_radicand(other);
        let rational = &self.rational_part * &other.rational_part
            + &self.radical_part * &other.radical_part * &d;
        let radical = &self.rational_part * &other.radical_part
            + &self.radical_part * &other.rational_part;
        QuadExt::new(rational, radical, d)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        QuadExt::new(
            &self.rational_part * s,
            &self.radical_part * s,
            self.radicand.clone(),
        )
    }

    /// Multiplicative inverse via the conjugate; panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "QuadExt: division by zero");
        // 1/(x + y*sqrt(d)) = (x - y*sqrt(d)) / (x^2 - y^2 d)
        let norm = &self.rational_part * &self.rational_part
            - &self.radical_part * &self.radical_part * &self.radicand;
        assert!(!norm.is_zero(), "QuadExt: zero field norm (radicand is a rational square?)");
        QuadExt::new(
            &self.rational_part / &norm,
            -(&self.radical_part / &norm),
            self.radicand.clone(),
        )
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    /// Exact sign via the two-polynomial squaring rule — no floating point.
    pub fn sign(&self) -> i8 {
        quad_sign(self)
    }

    /// Numeric value at the given binary precision (for display / oracles).
    pub fn to_bigfloat(&self, precision_bits: u32) -> crate::numeric::BigFloat {
        use crate::numeric::BigFloat;
        let x = BigFloat::from_rat(&self.rational_part, precision_bits);
        if self.radical_part.is_zero() {
            return x;
        }
        let s = BigFloat::from_rat(&self.radicand, precision_bits).sqrt();
        x.add(&BigFloat::from_rat(&self.radical_part, precision_bits).mul(&s))
    }

    pub fn to_f64(&self) -> f64 {
        self.to_bigfloat(96).to_f64()
    }
}

/// Exact sign of `x + y*sqrt(d)`, d >= 0.
pub fn quad_sign(v: &QuadExt) -> i8 {
    let sx = rsign(&v.rational_part);
    let sy = if v.radicand.is_zero() {
        0
    } else {
        rsign(&v.radical_part)
    };
    if sy == 0 {
        return sx;
    }
    if sx == 0 {
        return sy; // sqrt(d) > 0 here (d=0 collapsed above)
    }
    if sx == sy {
        return sx;
    }
    // Opposite signs: compare x^2 against y^2 d; sign follows the larger part.
    let diff = &v.rational_part * &v.rational_part
        - &v.radical_part * &v.radical_part * &v.radicand;
    let sd = rsign(&diff);
    if sd == 0 {
        0
    } else {
        sx * sd
    }
}

// ---------------------------------------------------------------------------
// UniPoly
// ---------------------------------------------------------------------------

/// Univariate polynomial over the rationals, coefficients in ascending degree.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    pub coeffs: Vec<Rat>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})k^{}", c, i)?;
            first = false;
        }
        Ok(())
    }
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn x() -> Self {
        UniPoly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn from_i64(cs: &[i64]) -> Self {
        UniPoly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// Euclidean remainder (rational arithmetic).
    pub fn rem(&self, div: &Self) -> Self {
        assert!(!div.is_zero(), "polynomial division by zero");
        let mut r = self.clone();
        let dlead = div.leading();
        let dd = div.degree().unwrap();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let q = r.leading() / &dlead;
            let shift = rd - dd;
            let mut sub = vec![Rat::zero(); shift];
            sub.extend(div.coeffs.iter().map(|c| c * &q));
            r = r.sub(&UniPoly::new(sub));
            // Guard against a non-shrinking loop from arithmetic bugs.
            debug_assert!(r.degree().map_or(true, |d2| d2 < rd));
        }
        r
    }

    /// Scale by a positive rational so coefficients are coprime integers;
    /// preserves all signs. Keeps Sturm chains from exploding.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = num::integer::lcm(denom_lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = num::integer::gcd(g, v.clone());
        }
        if g.is_zero() {
            g = BigInt::one();
        }
        UniPoly::new(
            ints.into_iter()
                .map(|v| Rat::from_integer(v / &g))
                .collect(),
        )
    }

    /// Monic gcd via Euclid with primitive-part normalization.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let r = a.rem(&b).primitive();
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        // Normalize to positive leading coefficient.
        if a.leading().is_negative() {
            a.neg()
        } else {
            a
        }
    }

    /// Square-free part p / gcd(p, p').
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.primitive();
        }
        self.exact_div(&g).primitive()
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, div: &Self) -> Self {
        assert!(!div.is_zero());
        let mut r = self.clone();
        let dlead = div.leading();
        let dd = div.degree().unwrap();
        let out_len = match self.degree() {
            None => return UniPoly::zero(),
            Some(sd) if sd < dd => panic!("exact_div: degree too small"),
            Some(sd) => sd - dd + 1,
        };
        let mut q = vec![Rat::zero(); out_len];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let qc = r.leading() / &dlead;
            let shift = rd - dd;
            q[shift] = qc.clone();
            let mut sub = vec![Rat::zero(); shift];
            sub.extend(div.coeffs.iter().map(|c| c * &qc));
            r = r.sub(&UniPoly::new(sub));
        }
        assert!(r.is_zero(), "exact_div: nonzero remainder");
        UniPoly::new(q)
    }

    /// Cauchy root bound: all real roots lie in (-B, B).
    pub fn cauchy_bound(&self) -> Rat {
        let lead = self.leading();
        if lead.is_zero() {
            return Rat::one();
        }
        let mut m = Rat::zero();
        for c in self.coeffs.iter().take(self.coeffs.len() - 1) {
            let r = (c / &lead).abs();
            if r > m {
                m = r;
            }
        }
        m + Rat::one()
    }
}

/// Sturm chain of the square-free part, each element integer-primitive.
pub struct SturmChain {
    pub chain: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Self {
        let p0 = p.squarefree_part();
        let mut chain = vec![p0.clone()];
        if p0.degree().unwrap_or(0) >= 1 {
            chain.push(p0.derivative().primitive());
            loop {
                let n = chain.len();
                let r = chain[n - 2].rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg().primitive());
            }
        }
        SturmChain { chain }
    }

    /// Sign variations of the chain evaluated at x.
    pub fn variations_at(&self, x: &Rat) -> usize {
        let mut count = 0usize;
        let mut prev = 0i8;
        for p in &self.chain {
            let s = rsign(&p.eval(x));
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    }

    /// Sign variations "at +infinity" (leading-coefficient signs).
    pub fn variations_at_pos_inf(&self) -> usize {
        let mut count = 0usize;
        let mut prev = 0i8;
        for p in &self.chain {
            let s = rsign(&p.leading());
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    }

    /// Distinct real roots in the open interval (lo, hi).
    pub fn count_roots_open(&self, lo: &Rat, hi: &Rat) -> usize {
        assert!(lo < hi, "empty interval");
        // Sturm counts roots in (lo, hi]; drop hi if it is a root.
        let mut n = self.variations_at(lo) - self.variations_at(hi);
        if self.chain[0].eval(hi).is_zero() {
            n -= 1;
        }
        n
    }

    /// Distinct real roots in the open ray (lo, +inf).
    pub fn count_roots_ray(&self, lo: &Rat) -> usize {
        self.variations_at(lo) - self.variations_at_pos_inf()
    }
}

/// Number of distinct real roots of p in the open interval (lo, hi).
pub fn sturm_root_count(p: &UniPoly, lo: &Rat, hi: &Rat) -> usize {
    assert!(!p.is_zero(), "sturm_root_count of the zero polynomial");
    SturmChain::new(p).count_roots_open(lo, hi)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalSign {
    Positive,
    Negative,
    Zero,
    Mixed,
}

/// Strict sign of p on the open interval (lo, hi).
pub fn poly_sign_on_interval(p: &UniPoly, lo: &Rat, hi: &Rat) -> IntervalSign {
    assert!(lo < hi);
    if p.is_zero() {
        return IntervalSign::Zero;
    }
    if sturm_root_count(p, lo, hi) > 0 {
        return IntervalSign::Mixed;
    }
    let mid = (lo + hi) / rat(2);
    match rsign(&p.eval(&mid)) {
        1 => IntervalSign::Positive,
        -1 => IntervalSign::Negative,
        // No interior roots of the square-free part, yet a zero sample:
        // p vanishes identically on a set with interior, impossible unless
        // our arithmetic is broken.
        _ => unreachable!("sign sample contradicts root count"),
    }
}

/// Strict sign of p on the open ray (lo, +inf).
pub fn poly_sign_on_ray(p: &UniPoly, lo: &Rat) -> IntervalSign {
    if p.is_zero() {
        return IntervalSign::Zero;
    }
    let chain = SturmChain::new(p);
    if chain.count_roots_ray(lo) > 0 {
        return IntervalSign::Mixed;
    }
    // No roots beyond lo: the sign at the leading tail rules everywhere.
    match rsign(&p.leading()) {
        1 => IntervalSign::Positive,
        _ => IntervalSign::Negative,
    }
}

/// An isolated real algebraic number.
#[derive(Clone, Debug)]
pub struct RootIsolation {
    pub defining_polynomial: UniPoly,
    pub isolating_interval: (Rat, Rat),
    pub multiplicity_hint: usize,
}

impl RootIsolation {
    pub fn midpoint(&self) -> Rat {
        (&self.isolating_interval.0 + &self.isolating_interval.1) / rat(2)
    }

    pub fn width(&self) -> Rat {
        &self.isolating_interval.1 - &self.isolating_interval.0
    }

    /// Shrink the isolating interval below `width` by bisection.
    pub fn refine(&mut self, width: &Rat) {
        let sqf = self.defining_polynomial.squarefree_part();
        let mut lo = self.isolating_interval.0.clone();
        let mut hi = self.isolating_interval.1.clone();
        let slo = rsign(&sqf.eval(&lo));
        while &(&hi - &lo) > width {
            let mid = (&lo + &hi) / rat(2);
            let sm = rsign(&sqf.eval(&mid));
            if sm == 0 {
                // Landed exactly on the root; pin a tiny interval around it.
                let eps = width / rat(4);
                lo = &mid - &eps;
                hi = &mid + &eps;
                break;
            }
            if sm == slo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        self.isolating_interval = (lo, hi);
    }
}

/// Isolate the distinct real roots of p in (lo, hi), each interval of width
/// at most `width`. `hi = None` means the open ray (lo, +inf), capped by the
/// Cauchy bound.
pub fn isolate_roots(
    p: &UniPoly,
    lo: &Rat,
    hi: Option<&Rat>,
    width: &Rat,
) -> Vec<RootIsolation> {
    assert!(!p.is_zero(), "isolate_roots of the zero polynomial");
    assert!(width > &Rat::zero());
    let sqf = p.squarefree_part();
    if sqf.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let chain = SturmChain::new(&sqf);
    let bound = sqf.cauchy_bound();
    let hi = match hi {
        Some(h) => h.clone().min(bound.clone()).max(lo.clone() + Rat::one()),
        None => {
            if &bound > lo {
                bound
            } else {
                lo + Rat::one()
            }
        }
    };
    if &hi <= lo {
        return vec![];
    }
    let mut out = vec![];
    let mut stack = vec![(lo.clone(), hi)];
    while let Some((a, b)) = stack.pop() {
        let n = chain.count_roots_open(&a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 && &(&b - &a) <= width {
            out.push(make_isolation(p, &sqf, a, b));
            continue;
        }
        let mid = (&a + &b) / rat(2);
        if sqf.eval(&mid).is_zero() {
            // Rational root exactly at the midpoint: emit a tight interval
            // around it and recurse outside.
            let eps = smallest_gap(width, &chain, &sqf, &mid);
            out.push(make_isolation(p, &sqf, &mid - &eps, &mid + &eps));
            stack.push((a, &mid - &eps));
            stack.push((&mid + &eps, b));
        } else {
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
    }
    out.sort_by(|x, y| x.isolating_interval.0.cmp(&y.isolating_interval.0));
    out
}

/// A radius around a known rational root small enough to exclude every other
/// root and satisfy the width request.
fn smallest_gap(width: &Rat, chain: &SturmChain, sqf: &UniPoly, at: &Rat) -> Rat {
    let mut eps = width / rat(4);
    loop {
        let lo = at - &eps;
        let hi = at + &eps;
        // The interval must contain only the root at `at`.
        let n = chain.count_roots_open(&lo, &hi);
        let clean = n == 1 && !sqf.eval(&lo).is_zero() && !sqf.eval(&hi).is_zero();
        if clean {
            return eps;
        }
        eps /= rat(2);
    }
}

fn make_isolation(p: &UniPoly, sqf: &UniPoly, lo: Rat, hi: Rat) -> RootIsolation {
    // Multiplicity: strip square-free layers while the root persists.
    let mut m = 1usize;
    let mut q = p.gcd(&p.derivative());
    while q.degree().unwrap_or(0) >= 1 {
        let qs = q.squarefree_part();
        if sturm_root_count(&qs, &lo, &hi) == 0 {
            break;
        }
        m += 1;
        q = q.gcd(&q.derivative());
    }
    let mut iso = RootIsolation {
        defining_polynomial: sqf.clone(),
        isolating_interval: (lo, hi),
        multiplicity_hint: m,
    };
    // Ensure endpoints are not roots of the defining polynomial.
    let w = iso.width();
    iso.refine(&w);
    iso
}
