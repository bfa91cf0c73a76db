//! High-precision floating evaluation used for the numeric fallback path
//! (irrational side lengths) and for residual checks against the exact
//! kernel. Values are rationals rounded to a fixed number of significant
//! bits after every operation — a deliberately simple big-float.

use crate::exactnum::{rat, Rat};
use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug)]
pub struct BigFloat {
    value: Rat,
    precision_bits: u32,
}

impl BigFloat {
    pub fn from_rat(r: &Rat, precision_bits: u32) -> Self {
        assert!(precision_bits >= 16, "precision too small to be useful");
        let mut f = BigFloat {
            value: r.clone(),
            precision_bits,
        };
        f.round();
        f
    }

    pub fn from_i64(v: i64, precision_bits: u32) -> Self {
        Self::from_rat(&rat(v), precision_bits)
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn as_rat(&self) -> &Rat {
        &self.value
    }

    fn round(&mut self) {
        if self.value.is_zero() {
            return;
        }
        let num_bits = self.value.numer().abs().bits();
        let den_bits = self.value.denom().bits();
        // Keep ~2x the requested precision internally so chained operations
        // stay comfortably within the documented error bound.
        let keep = (self.precision_bits as u64) * 2;
        let excess = den_bits.max(num_bits).saturating_sub(keep);
        if excess == 0 {
            return;
        }
        // Snap to a dyadic rational with `keep` fractional bits.
        let scale = BigInt::one() << keep;
        let scaled = (&self.value * Rat::from_integer(scale.clone())).round();
        self.value = scaled / Rat::from_integer(scale);
    }

    fn join_prec(&self, other: &Self) -> u32 {
        self.precision_bits.min(other.precision_bits)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut f = BigFloat {
            value: &self.value + &other.value,
            precision_bits: self.join_prec(other),
        };
        f.round();
        f
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut f = BigFloat {
            value: &self.value - &other.value,
            precision_bits: self.join_prec(other),
        };
        f.round();
        f
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut f = BigFloat {
            value: &self.value * &other.value,
            precision_bits: self.join_prec(other),
        };
        f.round();
        f
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.value.is_zero(), "BigFloat division by zero");
        let mut f = BigFloat {
            value: &self.value / &other.value,
            precision_bits: self.join_prec(other),
        };
        f.round();
        f
    }

    pub fn neg(&self) -> Self {
        BigFloat {
            value: -self.value.clone(),
            precision_bits: self.precision_bits,
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            value: self.value.abs(),
            precision_bits: self.precision_bits,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn sign(&self) -> i8 {
        crate::exactnum::rsign(&self.value)
    }

    /// Nonnegative square root via a scaled integer isqrt.
    pub fn sqrt(&self) -> Self {
        assert!(!self.value.is_negative(), "BigFloat sqrt of a negative");
        if self.value.is_zero() {
            return self.clone();
        }
        let shift = (self.precision_bits as u64) * 4;
        // sqrt(n/d) = sqrt(n * d * 2^2s) / (d * 2^s)
        let scaled: BigInt = (self.value.numer() * self.value.denom()) << (2 * shift);
        let root = scaled.sqrt();
        let mut f = BigFloat {
            value: Rat::new(root, self.value.denom() << shift),
            precision_bits: self.precision_bits,
        };
        f.round();
        f
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }

    /// |self - other| <= tol * max(|self|, |other|, 1)
    pub fn approx_eq(&self, other: &Self, tol: &Rat) -> bool {
        let diff = (&self.value - &other.value).abs();
        let scale = self
            .value
            .abs()
            .max(other.value.abs())
            .max(Rat::one());
        diff <= tol * scale
    }
}

/// 10^-digits as a rational, handy for tolerance constants.
pub fn pow10_neg(digits: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::from(10u32).pow(digits))
}
