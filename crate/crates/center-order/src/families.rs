//! Triangle families the four orders quantify over, with exact rational
//! membership tests and deterministic samplers.
//!
//! Everything is normalized to a = 1: centers are scale-invariant, so the
//! isosceles families are genuinely one-parameter (sides (1,k,k)) and the
//! acute families two-parameter (sides (1,b,c)).

use crate::catalog::Sides;
use crate::exactnum::{rat, ratio, Rat};
use num::bigint::BigInt;
use num::{One, Signed};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleFamily {
    /// Sides (1, k, k) with k > 1.
    TallIsosceles,
    /// Sides (1, k, k) with k > 1/2 (every nondegenerate isosceles triangle
    /// with base a, including the equilateral one).
    IsoscelesAll,
    /// Acute triangles with BC the (weakly) shortest side: 1 < b, 1 < c,
    /// all three angles strictly acute.
    AcuteMinA,
    /// AcuteMinA restricted to b < c, i.e. acute with a < b < c.
    AcuteScalene,
}

impl TriangleFamily {
    pub fn description(self) -> &'static str {
        match self {
            TriangleFamily::TallIsosceles => "isosceles (1,k,k) with k > 1",
            TriangleFamily::IsoscelesAll => "isosceles (1,k,k) with k > 1/2",
            TriangleFamily::AcuteMinA => "acute with shortest side BC (a=1 < b, c)",
            TriangleFamily::AcuteScalene => "acute scalene with a < b < c",
        }
    }

    pub fn is_isosceles(self) -> bool {
        matches!(
            self,
            TriangleFamily::TallIsosceles | TriangleFamily::IsoscelesAll
        )
    }

    /// Open lower bound of the k-interval for the 1-parameter families; the
    /// upper end is +infinity. None for the 2-parameter families.
    pub fn k_lower_bound(self) -> Option<Rat> {
        match self {
            TriangleFamily::TallIsosceles => Some(rat(1)),
            TriangleFamily::IsoscelesAll => Some(ratio(1, 2)),
            _ => None,
        }
    }
}

/// Exact membership test; scale-invariant (the sides are first rescaled to
/// a = 1), all inequalities strict.
pub fn contains(f: TriangleFamily, s: &Sides) -> bool {
    if !s.a.is_positive() || !s.b.is_positive() || !s.c.is_positive() {
        return false;
    }
    let b = &s.b / &s.a;
    let c = &s.c / &s.a;
    let one = Rat::one();
    match f {
        TriangleFamily::TallIsosceles => b == c && b > one,
        TriangleFamily::IsoscelesAll => b == c && b > ratio(1, 2),
        TriangleFamily::AcuteMinA | TriangleFamily::AcuteScalene => {
            let (b2, c2) = (&b * &b, &c * &c);
            let acute = one < &b2 + &c2 && b2 < &one + &c2 && c2 < &one + &b2;
            let min_a = b > one && c > one;
            let scalene = f != TriangleFamily::AcuteScalene || b < c;
            acute && min_a && scalene
        }
    }
}

/// Deterministic sampling plan. All produced samples are exact rationals
/// strictly inside the family region.
#[derive(Clone, Debug)]
pub struct SamplePlan {
    pub grid_density: u32,
    pub random_count: u32,
    pub rng_seed: u64,
    pub denominator_bound: u32,
}

impl Default for SamplePlan {
    fn default() -> Self {
        SamplePlan {
            grid_density: 32,
            random_count: 10_000,
            rng_seed: 0,
            denominator_bound: 1000,
        }
    }
}

impl SamplePlan {
    pub fn quick() -> Self {
        SamplePlan {
            grid_density: 12,
            random_count: 200,
            rng_seed: 0,
            denominator_bound: 100,
        }
    }

    /// Same plan reseeded deterministically for an (m, n) work item, so
    /// distinct pairs draw independent but reproducible samples.
    pub fn for_pair(&self, m: u32, n: u32) -> Self {
        let mut p = self.clone();
        p.rng_seed = self
            .rng_seed
            .wrapping_mul(0x9e37_79b9_7f4a_7c15)
            .wrapping_add((m as u64) << 32 | n as u64);
        p
    }
}

/// Sampler box: the 2-parameter families are covered by (b, c) in (1, 4)^2
/// (plus the acuteness filter); the k-line families by k in (lo, 4).
const BOX_HI: i64 = 4;

fn grid_1d(lo: &Rat, hi: &Rat, density: u32) -> Vec<Rat> {
    let step = (hi - lo) / rat(density as i64 + 1);
    (1..=density as i64).map(|i| lo + &step * rat(i)).collect()
}

fn random_rat_in(rng: &mut ChaCha12Rng, lo: &Rat, hi: &Rat, denom_bound: u32) -> Rat {
    let d = rng.gen_range(2..=denom_bound.max(2)) as i64;
    let dr = rat(d);
    // Integer numerators strictly inside (lo*d, hi*d).
    let lo_n = (lo * &dr).floor().to_integer() + BigInt::one();
    let hi_n = (hi * &dr).ceil().to_integer() - BigInt::one();
    if lo_n > hi_n {
        return (lo + hi) / rat(2);
    }
    let span: i64 = (&hi_n - &lo_n).try_into().unwrap_or(0);
    let pick = lo_n + BigInt::from(rng.gen_range(0..=span));
    Rat::new(pick, BigInt::from(d))
}

/// Grid points laid over the family's parameter box, then filtered by
/// `contains`, then random points with bounded denominators, also filtered.
/// Deterministic for a fixed plan.
pub fn sample(f: TriangleFamily, plan: &SamplePlan) -> Vec<Sides> {
    let mut out = vec![];
    let hi = rat(BOX_HI);
    let mut push = |s: Sides| {
        if contains(f, &s) {
            out.push(s);
        }
    };
    match f {
        TriangleFamily::TallIsosceles | TriangleFamily::IsoscelesAll => {
            let lo = f.k_lower_bound().unwrap();
            for k in grid_1d(&lo, &hi, plan.grid_density) {
                push(Sides::new_unchecked(Rat::one(), k.clone(), k));
            }
            let mut rng = ChaCha12Rng::seed_from_u64(plan.rng_seed);
            let mut drawn = 0u32;
            let mut attempts = 0u64;
            let budget = plan.random_count as u64 * 20 + 100;
            while drawn < plan.random_count && attempts < budget {
                attempts += 1;
                let k = random_rat_in(&mut rng, &lo, &hi, plan.denominator_bound);
                let s = Sides::new_unchecked(Rat::one(), k.clone(), k);
                if contains(f, &s) {
                    out.push(s);
                    drawn += 1;
                }
            }
        }
        TriangleFamily::AcuteMinA | TriangleFamily::AcuteScalene => {
            let lo = Rat::one();
            let axis = grid_1d(&lo, &hi, plan.grid_density);
            for b in &axis {
                for c in &axis {
                    push(Sides::new_unchecked(Rat::one(), b.clone(), c.clone()));
                }
            }
            let mut rng = ChaCha12Rng::seed_from_u64(plan.rng_seed);
            let mut drawn = 0u32;
            let mut attempts = 0u64;
            let budget = plan.random_count as u64 * 40 + 100;
            while drawn < plan.random_count && attempts < budget {
                attempts += 1;
                let b = random_rat_in(&mut rng, &lo, &hi, plan.denominator_bound);
                let c = random_rat_in(&mut rng, &lo, &hi, plan.denominator_bound);
                let s = Sides::new_unchecked(Rat::one(), b, c);
                if contains(f, &s) {
                    out.push(s);
                    drawn += 1;
                }
            }
        }
    }
    out
}
