//! Certified decisions on the one-parameter isosceles family (1, k, k).

use super::kext::{sign_on_ray, KExt};
use super::{
    root_approx, CenterId, CenterIdString, DecideError, Direction, RegionVerdict,
    Verdict,
};
use crate::catalog::{Catalog, Sides};
use crate::exactnum::{rat, Rat, RootIsolation, UniPoly};
use crate::families::TriangleFamily;
use num::One;

/// The three coordinates of a center on sides (1, k, k).
pub fn iso_coords(cat: &Catalog, id: &CenterId) -> Result<[KExt; 3], DecideError> {
    let ups = id.coord_upolys(cat)?;
    Ok([
        KExt::from_upoly(&ups[0]),
        KExt::from_upoly(&ups[1]),
        KExt::from_upoly(&ups[2]),
    ])
}

/// Numerator of d^2(P, A) on sides (1, k, k): with coordinates (u:v:w),
/// d^2 = (k^2 (v+w)^2 - v w) / (u+v+w)^2; this returns the numerator.
fn dist_a_numerator(coords: &[KExt; 3]) -> KExt {
    let k2 = KExt::from_poly(UniPoly::from_i64(&[0, 0, 1]));
    let vw = coords[1].add(&coords[2]);
    k2.mul(&vw).mul(&vw).sub(&coords[1].mul(&coords[2]))
}

fn coordinate_sum(coords: &[KExt; 3]) -> KExt {
    coords[0].add(&coords[1]).add(&coords[2])
}

fn k_lower(f: TriangleFamily) -> Result<Rat, DecideError> {
    f.k_lower_bound().ok_or(DecideError::NotIsoFamily)
}

/// Certified comparison in the isosceles order: m precedes n when m is
/// strictly closer to A for every triangle of the family.
///
/// The sign of d^2_m - d^2_n equals the sign of
/// H = N_m s_n^2 - N_n s_m^2 (cross-multiplied by the positive (s_m s_n)^2),
/// a single A + B*sqrt(R) expression whose sign on the open k-ray the Sturm
/// machinery decides completely.
pub fn compare_iso(
    cat: &Catalog,
    m: &CenterId,
    n: &CenterId,
    family: TriangleFamily,
) -> Result<Verdict, DecideError> {
    let k0 = k_lower(family)?;
    let cm = iso_coords(cat, m)?;
    let cn = iso_coords(cat, n)?;
    let sm = coordinate_sum(&cm);
    let sn = coordinate_sum(&cn);
    if sm.is_zero() {
        return Err(DecideError::AtInfinityOnFamily(CenterIdString(m.to_string())));
    }
    if sn.is_zero() {
        return Err(DecideError::AtInfinityOnFamily(CenterIdString(n.to_string())));
    }
    let h = dist_a_numerator(&cm)
        .mul(&sn.mul(&sn))
        .sub(&dist_a_numerator(&cn).mul(&sm.mul(&sm)));
    let analysis = sign_on_ray(&h, &k0);
    if analysis.identically_zero {
        return Ok(Verdict::CertifiedEqualNowhereComparable);
    }
    let cert = |dir: &str| {
        format!(
            "Sturm sign certificate: distance-difference numerator is strictly {} on k > {}",
            dir, k0
        )
    };
    if analysis.strictly_negative() {
        return Ok(Verdict::CertifiedPrecedes {
            certificate: cert("negative"),
        });
    }
    if analysis.strictly_positive() {
        return Ok(Verdict::CertifiedSucceeds {
            certificate: cert("positive"),
        });
    }
    if analysis.mixed() {
        let kp = analysis.witness_negative.clone().unwrap();
        let ks = analysis.witness_positive.clone().unwrap();
        return Ok(Verdict::Mixed {
            witness_precede: Sides::new_unchecked(Rat::one(), kp.clone(), kp),
            witness_succeed: Sides::new_unchecked(Rat::one(), ks.clone(), ks),
        });
    }
    // Single strict sign except for isolated equality parameters: not a
    // strict order over the whole family, and no opposite witness exists.
    let dir = if analysis.witness_negative.is_some() {
        Some(Direction::Precedes)
    } else if analysis.witness_positive.is_some() {
        Some(Direction::Succeeds)
    } else {
        None
    };
    Ok(Verdict::Undetermined {
        samples_tested: analysis.zeros.len() as u64,
        all_consistent_with: dir,
    })
}

/// Certified classification of "strictly inside angle A" on an isosceles
/// family: Always = inside for every k; Sometimes = leaves (or touches the
/// boundary of) the angle for some k, with exact witnesses when they are
/// rational; Never = on the boundary (or outside) for every k.
///
/// A zero coordinate triple at an isolated parameter (the equilateral
/// degeneracies of several catalog forms at k = 1) counts as boundary
/// contact, matching the non-strict inequality convention of the source
/// classification.
pub fn classify_outside_angle_a_iso(
    cat: &Catalog,
    n: u32,
    family: TriangleFamily,
) -> Result<RegionVerdict, DecideError> {
    let k0 = k_lower(family)?;
    let id = CenterId::X(n);
    let coords = iso_coords(cat, &id)?;
    let s = coordinate_sum(&coords);
    if s.is_zero() {
        return Ok(RegionVerdict::DegenerateNote(
            "at infinity on the whole family".into(),
        ));
    }
    let f1 = coords[1].mul(&s);
    let f2 = coords[2].mul(&s);
    let a1 = sign_on_ray(&f1, &k0);
    let a2 = sign_on_ray(&f2, &k0);
    if a1.strictly_positive() && a2.strictly_positive() {
        return Ok(RegionVerdict::Always);
    }
    // Witness for the non-inside side, preferring exact rational parameters.
    let out_k = a1
        .witness_negative
        .clone()
        .or_else(|| a2.witness_negative.clone())
        .or_else(|| {
            // A rational boundary touch: k = 1 (equilateral degeneracies).
            let one = rat(1);
            if one > k0
                && (f1.eval(&one).sign() <= 0 || f2.eval(&one).sign() <= 0)
            {
                Some(one)
            } else {
                None
            }
        })
        .or_else(|| {
            if a1.identically_zero || a2.identically_zero {
                Some(&k0 + rat(1))
            } else {
                None
            }
        });
    // Witness for the strictly-inside side.
    let in_k = find_inside_witness(&f1, &f2, &k0);
    match (in_k, out_k) {
        (Some(ki), Some(ko)) => Ok(RegionVerdict::Sometimes {
            witness_in: Sides::new_unchecked(Rat::one(), ki.clone(), ki),
            witness_out: Sides::new_unchecked(Rat::one(), ko.clone(), ko),
        }),
        (None, _) => Ok(RegionVerdict::Never),
        (Some(_), None) => {
            // Inside except at isolated irrational boundary contacts.
            let mut locs: Vec<f64> = a1
                .zeros
                .iter()
                .chain(a2.zeros.iter())
                .map(root_approx)
                .collect();
            locs.sort_by(f64::total_cmp);
            locs.dedup_by(|x, y| (*x - *y).abs() < 1e-9);
            Ok(RegionVerdict::DegenerateNote(format!(
                "inside angle A except for boundary contact at isolated k near {:?}",
                locs
            )))
        }
    }
}

fn find_inside_witness(f1: &KExt, f2: &KExt, k0: &Rat) -> Option<Rat> {
    let mut probes = vec![];
    for i in 1..=64i64 {
        probes.push(k0 + Rat::new(i.into(), 16.into()));
    }
    for i in 1..=8i64 {
        probes.push(k0 + rat(8 * i));
    }
    probes
        .into_iter()
        .find(|k| f1.eval(k).sign() > 0 && f2.eval(k).sign() > 0)
}

#[derive(Clone, Debug)]
pub enum VertexAVerdict {
    IdenticallyAtVertexA,
    Never,
    AtIsolatedParameters(Vec<RootIsolation>),
}

/// Does the center coincide with vertex A — identically on the family, at
/// isolated parameters, or never? Coincidence means both of v, w vanish.
pub fn coincides_with_vertex_a(
    cat: &Catalog,
    n: u32,
    family: TriangleFamily,
) -> Result<VertexAVerdict, DecideError> {
    let k0 = k_lower(family)?;
    let coords = iso_coords(cat, &CenterId::X(n))?;
    let (v, w) = (&coords[1], &coords[2]);
    if v.is_zero() && w.is_zero() {
        return Ok(VertexAVerdict::IdenticallyAtVertexA);
    }
    let av = sign_on_ray(v, &k0);
    let aw = sign_on_ray(w, &k0);
    // Coincidence parameters are common genuine zeros: intersect by interval
    // overlap (distinct algebraic numbers get disjoint isolating intervals
    // after refinement against each other's defining polynomial).
    let mut out = vec![];
    let zv = if v.is_zero() { None } else { Some(&av.zeros) };
    match (zv, w.is_zero()) {
        (None, _) => {
            // v identically zero: any genuine zero of w is a coincidence.
            out = aw.zeros.clone();
        }
        (Some(zs), true) => {
            out = zs.clone();
        }
        (Some(zs), false) => {
            for rv in zs {
                for rw in &aw.zeros {
                    if intervals_overlap(rv, rw) && confirmed_common_root(rv, rw) {
                        out.push(rv.clone());
                    }
                }
            }
        }
    }
    if out.is_empty() {
        Ok(VertexAVerdict::Never)
    } else {
        Ok(VertexAVerdict::AtIsolatedParameters(out))
    }
}

fn intervals_overlap(a: &RootIsolation, b: &RootIsolation) -> bool {
    a.isolating_interval.0 < b.isolating_interval.1
        && b.isolating_interval.0 < a.isolating_interval.1
}

/// Two isolated roots with overlapping intervals are the same algebraic
/// number iff their defining polynomials share a root there.
fn confirmed_common_root(a: &RootIsolation, b: &RootIsolation) -> bool {
    let g = a.defining_polynomial.gcd(&b.defining_polynomial);
    if g.degree().unwrap_or(0) == 0 {
        return false;
    }
    let lo = a.isolating_interval.0.clone().max(b.isolating_interval.0.clone());
    let hi = a.isolating_interval.1.clone().min(b.isolating_interval.1.clone());
    lo < hi && crate::exactnum::sturm_root_count(&g, &lo, &hi) > 0
}

/// Identity check that the coordinate sum vanishes for every triangle — a
/// polynomial identity in a, b, c (the three cyclic copies expanded
/// symbolically).
pub fn at_infinity_identity(cat: &Catalog, n: u32) -> Result<bool, DecideError> {
    let [p, q, r] = cat.coord_upolys(n)?;
    Ok(p.add(&q).add(&r).is_zero())
}
