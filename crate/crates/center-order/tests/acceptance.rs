//! End-to-end acceptance suite. Each test covers one numbered claim about
//! the four orders and prints a single `criterion NN: pass` line (visible
//! with `cargo test --test acceptance -- --nocapture`); a failure prints the
//! matching FAIL line before panicking, so the printed report always states
//! the outcome.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use center_order::catalog::{Catalog, Sides};
use center_order::decide::twod::cmp_at;
use center_order::decide::{
    at_infinity_identity, classify_above_bc, classify_outside_angle_a_iso,
    classify_trace_right_of_c, coincides_with_vertex_a, compare_2d, compare_iso,
    find_coincidence_iso, AboveBcVerdict, CenterId, CoincidenceOutcome,
    CoincidenceRoot, Direction, OrderKind, RegionVerdict, Verdict, VertexAVerdict,
};
use center_order::exactnum::{rat, ratio, Rat, QuadExt, UniPoly};
use center_order::families::{sample, SamplePlan, TriangleFamily};
use center_order::geom;
use center_order::numeric::BigFloat;
use center_order::ordergraph::{
    articulation_points, build_graph, transitive_reduction, BuildOptions, EdgeClass,
};
use num::{BigInt, One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use std::sync::OnceLock;

fn cat() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(Catalog::bundled)
}

fn x(n: u32) -> CenterId {
    CenterId::X(n)
}

fn report(criterion: u32, ok: bool, detail: &str) {
    let status = if ok { "pass" } else { "FAIL" };
    println!("criterion {:2}: {} — {}", criterion, status, detail);
    assert!(ok, "criterion {} failed: {}", criterion, detail);
}

/// 10^-e as an exact rational.
fn neg_pow10(e: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::from(10u32).pow(e))
}

// ---------------------------------------------------------------------------
// Reference data: the published chains and classification sets the engine
// must reproduce.
// ---------------------------------------------------------------------------

const ISO_24: [u32; 24] = [
    20, 22, 8, 3, 9, 10, 21, 2, 5, 12, 17, 1, 13, 7, 6, 4, 27, 19, 28, 25, 11,
    14, 16, 23,
];

const ISO_100: [u32; 48] = [
    20, 22, 40, 72, 63, 8, 3, 9, 95, 77, 21, 2, 45, 38, 55, 37, 12, 17, 1, 61,
    60, 81, 7, 82, 89, 6, 65, 33, 51, 57, 4, 27, 19, 28, 25, 34, 64, 11, 98, 74,
    67, 88, 14, 80, 36, 16, 44, 23,
];

const VERTEX_9: [u32; 9] = [3, 9, 10, 2, 1, 6, 4, 19, 16];

const SIDE_22: [u32; 22] = [
    26, 20, 22, 40, 8, 9, 10, 2, 37, 1, 7, 29, 33, 4, 27, 19, 28, 25, 34, 24,
    36, 16,
];

const TRACE_21: [u32; 21] = [
    20, 22, 3, 8, 9, 21, 10, 2, 1, 17, 12, 7, 13, 29, 4, 27, 19, 28, 25, 24, 23,
];

/// Centers that are not always strictly inside angle A over all isosceles
/// triangles (X30, at infinity, is handled separately).
const SOMETIMES_OUTSIDE_ISO: [u32; 56] = [
    4, 5, 11, 13, 14, 16, 17, 18, 19, 22, 23, 24, 25, 26, 27, 28, 29, 33, 34,
    36, 44, 46, 47, 48, 49, 50, 51, 52, 53, 54, 59, 62, 64, 66, 67, 68, 70, 73,
    74, 77, 79, 80, 84, 87, 88, 90, 91, 92, 93, 94, 95, 96, 97, 98, 99, 100,
];

/// Exceptions on the tall (k > 1) family, X30 included.
const TALL_EXCEPTIONS: [u32; 13] = [18, 26, 30, 59, 68, 70, 87, 90, 91, 93, 96, 99, 100];

const VERTEX_A_COINCIDENT: [u32; 3] = [59, 99, 100];

/// Above-BC partition over the acute-min-A family.
const ABOVE_ALWAYS: [u32; 69] = [
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 15, 17, 19, 20, 21, 22, 25, 26, 27,
    28, 29, 31, 32, 33, 34, 35, 37, 38, 39, 40, 41, 42, 45, 48, 51, 53, 54, 55,
    56, 57, 58, 59, 60, 61, 63, 65, 68, 69, 71, 72, 73, 75, 76, 77, 78, 79, 81,
    82, 83, 85, 86, 89, 92, 95, 97, 99, 100,
];
const BELOW_ALWAYS: [u32; 5] = [16, 23, 36, 44, 50];
const ABOVE_MIXED: [u32; 24] = [
    14, 18, 24, 43, 46, 47, 49, 52, 62, 64, 66, 67, 70, 74, 80, 84, 87, 88, 90,
    91, 93, 94, 96, 98,
];

/// Centers among 1..=100 whose A-trace falls beyond C at the (11,12,16)
/// triangle.
const TRACE_RIGHT_AT_11_12_16: [u32; 9] = [23, 36, 44, 50, 64, 66, 84, 99, 100];

// ---------------------------------------------------------------------------
// Criteria 1-3: the isosceles chains and bounding theorems.
// ---------------------------------------------------------------------------

#[test]
fn criterion_01_isosceles_24_chain_certified() {
    let t0 = Instant::now();
    let links: Vec<(u32, u32)> = ISO_24.windows(2).map(|w| (w[0], w[1])).collect();
    let bad: Vec<String> = links
        .par_iter()
        .filter_map(|&(m, n)| {
            match compare_iso(cat(), &x(m), &x(n), TriangleFamily::TallIsosceles) {
                Ok(Verdict::CertifiedPrecedes { .. }) => None,
                other => Some(format!("X{} -> X{}: {:?}", m, n, other)),
            }
        })
        .collect();
    let secs = t0.elapsed().as_secs_f64();
    report(
        1,
        bad.is_empty() && secs < 300.0,
        &format!(
            "all 23 links of the 24-center chain certified (Sturm) in {:.1}s{}",
            secs,
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failures: {:?}", bad)
            }
        ),
    );
}

/// Exhaustive exact sampling along the k-line for links without a strict-sign
/// certificate: 10^4 parameters in (1, 6], counting order violations.
fn iso_link_sample(m: u32, n: u32) -> (u64, u64) {
    let mut tested = 0u64;
    let mut violations = 0u64;
    for i in 1..=10_000i64 {
        let k = rat(1) + Rat::new(i.into(), 2000.into());
        let s = Sides::new_unchecked(Rat::one(), k.clone(), k);
        if let Some(sign) = cmp_at(cat(), OrderKind::Isosceles, &x(m), &x(n), &s) {
            tested += 1;
            if sign > 0 {
                violations += 1;
            }
        }
    }
    (tested, violations)
}

#[test]
fn criterion_02_isosceles_100_chain() {
    let links: Vec<(u32, u32)> = ISO_100.windows(2).map(|w| (w[0], w[1])).collect();
    assert_eq!(links.len(), 47);
    let results: Vec<(u32, u32, Verdict)> = links
        .par_iter()
        .map(|&(m, n)| {
            let v = compare_iso(cat(), &x(m), &x(n), TriangleFamily::TallIsosceles)
                .unwrap_or_else(|e| panic!("X{} vs X{}: {}", m, n, e));
            (m, n, v)
        })
        .collect();
    let mut certified = 0;
    let mut equal = vec![];
    let mut sampled = vec![];
    let mut bad = vec![];
    for (m, n, v) in results {
        match v {
            Verdict::CertifiedPrecedes { .. } => certified += 1,
            Verdict::CertifiedEqualNowhereComparable => equal.push((m, n)),
            Verdict::Undetermined {
                all_consistent_with: Some(Direction::Precedes),
                ..
            } => {
                let (tested, violations) = iso_link_sample(m, n);
                if tested >= 10_000 && violations == 0 {
                    sampled.push((m, n));
                } else {
                    bad.push(format!(
                        "X{} -> X{}: {} violations in {} samples",
                        m, n, violations, tested
                    ));
                }
            }
            other => bad.push(format!("X{} -> X{}: {:?}", m, n, other)),
        }
    }
    // X98 and X74 are one point on every (1, k, k) triangle; the chain's only
    // non-strict link must be exactly that pair.
    let equality_ok = equal == vec![(98, 74)];
    report(
        2,
        bad.is_empty() && equality_ok,
        &format!(
            "47 links: {} certified strict, certified-equal {:?}, \
             {} sampling-backed (10^4 exact samples, zero violations){}",
            certified,
            equal,
            sampled.len(),
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failures: {:?}", bad)
            }
        ),
    );
}

#[test]
fn criterion_03_bounding_theorems() {
    let triples = [(2, 15, 17), (25, 24, 14), (7, 29, 4)];
    let mut bad = vec![];
    for (lo, mid, hi) in triples {
        for (m, n) in [(lo, mid), (mid, hi)] {
            match compare_iso(cat(), &x(m), &x(n), TriangleFamily::TallIsosceles) {
                Ok(Verdict::CertifiedPrecedes { .. }) => {}
                other => bad.push(format!("X{} -> X{}: {:?}", m, n, other)),
            }
        }
    }
    report(
        3,
        bad.is_empty(),
        &format!(
            "X2<X15<X17, X25<X24<X14, X7<X29<X4 all certified on tall isosceles{}",
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failures: {:?}", bad)
            }
        ),
    );
}

// ---------------------------------------------------------------------------
// Criterion 4: the classification sets.
// ---------------------------------------------------------------------------

fn set_diff(got: &BTreeSet<u32>, want: &BTreeSet<u32>) -> String {
    let extra: Vec<&u32> = got.difference(want).collect();
    let missing: Vec<&u32> = want.difference(got).collect();
    format!("extra {:?}, missing {:?}", extra, missing)
}

#[test]
fn criterion_04a_sometimes_outside_angle_a_all_isosceles() {
    let verdicts: Vec<(u32, RegionVerdict)> = (1..=100u32)
        .into_par_iter()
        .map(|n| {
            (
                n,
                classify_outside_angle_a_iso(cat(), n, TriangleFamily::IsoscelesAll)
                    .unwrap(),
            )
        })
        .collect();
    let always: BTreeSet<u32> = verdicts
        .iter()
        .filter(|(_, v)| matches!(v, RegionVerdict::Always))
        .map(|(n, _)| *n)
        .collect();
    let mut want_always: BTreeSet<u32> = (1..=100).collect();
    for n in SOMETIMES_OUTSIDE_ISO {
        want_always.remove(&n);
    }
    want_always.remove(&30);
    let x30_ok = verdicts.iter().any(|(n, v)| {
        *n == 30 && matches!(v, RegionVerdict::DegenerateNote(t) if t.contains("infinity"))
    });
    // Every Sometimes witness must check out when re-evaluated from scratch.
    let mut witness_bad = vec![];
    for (n, v) in &verdicts {
        if let RegionVerdict::Sometimes {
            witness_in,
            witness_out,
        } = v
        {
            let inside = |s: &Sides| match cat().eval_center(*n, s) {
                Ok(p) => geom::inside_angle_a(&p).unwrap_or(false),
                Err(_) => false,
            };
            if !inside(witness_in) || inside(witness_out) {
                witness_bad.push(*n);
            }
        }
    }
    report(
        4,
        always == want_always && x30_ok && witness_bad.is_empty(),
        &format!(
            "(a) 56-center not-always-inside-angle-A set over all isosceles \
             reproduced ({}; X30 at infinity; bad witnesses {:?})",
            set_diff(&always, &want_always),
            witness_bad
        ),
    );
}

#[test]
fn criterion_04b_tall_isosceles_exceptions() {
    let exceptions: BTreeSet<u32> = (1..=100u32)
        .into_par_iter()
        .filter(|&n| {
            !matches!(
                classify_outside_angle_a_iso(cat(), n, TriangleFamily::TallIsosceles)
                    .unwrap(),
                RegionVerdict::Always
            )
        })
        .collect();
    let want: BTreeSet<u32> = TALL_EXCEPTIONS.into_iter().collect();
    report(
        4,
        exceptions == want,
        &format!(
            "(b) tall-isosceles exception set {{18,26,30,59,68,70,87,90,91,93,96,99,100}} \
             reproduced ({})",
            set_diff(&exceptions, &want)
        ),
    );
}

#[test]
fn criterion_04c_vertex_a_coincidence_set() {
    let got: BTreeSet<u32> = (1..=100u32)
        .into_par_iter()
        .filter(|&n| {
            matches!(
                coincides_with_vertex_a(cat(), n, TriangleFamily::IsoscelesAll).unwrap(),
                VertexAVerdict::IdenticallyAtVertexA
            )
        })
        .collect();
    let want: BTreeSet<u32> = VERTEX_A_COINCIDENT.into_iter().collect();
    report(
        4,
        got == want,
        &format!(
            "(c) identically-at-vertex-A set {{59,99,100}} reproduced ({})",
            set_diff(&got, &want)
        ),
    );
}

#[test]
fn criterion_04d_above_bc_partition() {
    let plan = SamplePlan::default();
    // The plan draws at least 10^4 random family members per center.
    assert!(plan.random_count >= 10_000);
    assert!(sample(TriangleFamily::AcuteMinA, &plan.for_pair(1, 0)).len() >= 10_000);
    let verdicts: Vec<(u32, AboveBcVerdict)> = (1..=100u32)
        .into_par_iter()
        .map(|n| {
            (
                n,
                classify_above_bc(cat(), n, TriangleFamily::AcuteMinA, &plan).unwrap(),
            )
        })
        .collect();
    let collect = |pred: fn(&AboveBcVerdict) -> bool| -> BTreeSet<u32> {
        verdicts
            .iter()
            .filter(|(_, v)| pred(v))
            .map(|(n, _)| *n)
            .collect()
    };
    let above = collect(|v| matches!(v, AboveBcVerdict::AlwaysAbove));
    let on_or_above = collect(|v| matches!(v, AboveBcVerdict::AlwaysOnOrAbove));
    let below = collect(|v| matches!(v, AboveBcVerdict::AlwaysBelow));
    let mixed = collect(|v| matches!(v, AboveBcVerdict::Sometimes { .. }));
    let infinity = collect(|v| matches!(v, AboveBcVerdict::AtInfinity));
    // Witnesses of the mixed centers must re-verify.
    let mut witness_bad = vec![];
    for (n, v) in &verdicts {
        if let AboveBcVerdict::Sometimes { above, below } = v {
            let side = |s: &Sides| geom::above_bc(&cat().eval_center(*n, s).unwrap());
            if side(above) != geom::SideOfBC::Above || side(below) != geom::SideOfBC::Below
            {
                witness_bad.push(*n);
            }
        }
    }
    let want_above: BTreeSet<u32> = ABOVE_ALWAYS.into_iter().collect();
    let want_below: BTreeSet<u32> = BELOW_ALWAYS.into_iter().collect();
    let want_mixed: BTreeSet<u32> = ABOVE_MIXED.into_iter().collect();
    let ok = above == want_above
        && on_or_above == BTreeSet::from([11])
        && below == want_below
        && mixed == want_mixed
        && infinity == BTreeSet::from([30])
        && witness_bad.is_empty();
    report(
        4,
        ok,
        &format!(
            "(d) above-BC partition over acute-min-A reproduced: |above|={}, \
             on-or-above={:?}, below={:?}, |mixed|={}, at-infinity={:?}, \
             bad witnesses {:?}",
            above.len(),
            on_or_above,
            below,
            mixed.len(),
            infinity,
            witness_bad
        ),
    );
}

// ---------------------------------------------------------------------------
// Criteria 5-6: the two-parameter chains.
// ---------------------------------------------------------------------------

struct ChainStats {
    certified: usize,
    consistent: usize,
    failures: Vec<String>,
    min_tested: u64,
}

/// Run every consecutive link of a chain through the 2-parameter engine with
/// the full sampling budget and a subdivision-certification attempt.
fn run_chain(kind: OrderKind, chain: &[u32], depth: u32) -> ChainStats {
    let plan = SamplePlan::default();
    let family = center_order::decide::twod::family_for(kind);
    let links: Vec<(u32, u32)> = chain.windows(2).map(|w| (w[0], w[1])).collect();
    let results: Vec<(u32, u32, u64, Verdict)> = links
        .par_iter()
        .map(|&(m, n)| {
            let drawn = sample(family, &plan.for_pair(m, n)).len() as u64;
            let v = compare_2d(cat(), kind, &x(m), &x(n), &plan, depth)
                .unwrap_or_else(|e| panic!("X{} vs X{}: {}", m, n, e));
            (m, n, drawn, v)
        })
        .collect();
    let mut stats = ChainStats {
        certified: 0,
        consistent: 0,
        failures: vec![],
        min_tested: u64::MAX,
    };
    for (m, n, drawn, v) in results {
        stats.min_tested = stats.min_tested.min(drawn);
        match v {
            Verdict::CertifiedPrecedes { .. } => stats.certified += 1,
            Verdict::Undetermined {
                samples_tested,
                all_consistent_with: Some(Direction::Precedes),
            } if samples_tested >= 10_000 => stats.consistent += 1,
            other => stats
                .failures
                .push(format!("X{} -> X{}: {:?}", m, n, other)),
        }
    }
    stats
}

#[test]
fn criterion_05_vertex_chain() {
    let stats = run_chain(OrderKind::Vertex, &VERTEX_9, 10);
    let ok = stats.failures.is_empty() && stats.min_tested >= 10_000;
    report(
        5,
        ok,
        &format!(
            "vertex 9-chain: 8 links, zero counterexamples at >= {} samples per \
             pair; subdivision certified {}/8{}",
            stats.min_tested,
            stats.certified,
            if stats.failures.is_empty() {
                String::new()
            } else {
                format!("; failures: {:?}", stats.failures)
            }
        ),
    );
}

#[test]
fn criterion_06_side_and_trace_chains() {
    let side = run_chain(OrderKind::Side, &SIDE_22, 10);
    let trace = run_chain(OrderKind::Trace, &TRACE_21, 10);
    let ok = side.failures.is_empty()
        && trace.failures.is_empty()
        && side.min_tested >= 10_000
        && trace.min_tested >= 10_000;
    report(
        6,
        ok,
        &format!(
            "side 22-chain: 21 links clean, subdivision certified {}/21; \
             trace 21-chain: 20 links clean, subdivision certified {}/20; \
             >= 10^4 samples per pair{}{}",
            side.certified,
            trace.certified,
            if side.failures.is_empty() {
                String::new()
            } else {
                format!("; side failures: {:?}", side.failures)
            },
            if trace.failures.is_empty() {
                String::new()
            } else {
                format!("; trace failures: {:?}", trace.failures)
            }
        ),
    );
}

// ---------------------------------------------------------------------------
// Criterion 7: trace-order extras.
// ---------------------------------------------------------------------------

#[test]
fn criterion_07_trace_extras() {
    let plan = SamplePlan::default();
    let mut bad = vec![];

    // X24 versus vertex C. By the signed-trace definition (positive on ray CB,
    // larger distance precedes) the A-trace of X24 stays strictly on the
    // positive side while C's own trace distance is 0, so X24 strictly
    // precedes C on the whole family; the comparison must be one-directional
    // at every sample.
    match compare_2d(cat(), OrderKind::Trace, &CenterId::VertexC, &x(24), &plan, 8) {
        Ok(Verdict::CertifiedSucceeds { .. }) => {}
        Ok(Verdict::Undetermined {
            samples_tested,
            all_consistent_with: Some(Direction::Succeeds),
        }) if samples_tested >= 10_000 => {}
        other => bad.push(format!("C vs X24: {:?}", other)),
    }

    // X650's trace falls beyond B, so X650 precedes B.
    match compare_2d(cat(), OrderKind::Trace, &x(650), &CenterId::VertexB, &plan, 8) {
        Ok(Verdict::CertifiedPrecedes { .. }) => {}
        Ok(Verdict::Undetermined {
            samples_tested,
            all_consistent_with: Some(Direction::Precedes),
        }) if samples_tested >= 10_000 => {}
        other => bad.push(format!("X650 vs B: {:?}", other)),
    }

    // The (11,12,16) triangle throws all nine listed traces beyond C.
    let s = Sides::from_i64(11, 12, 16).unwrap();
    for n in TRACE_RIGHT_AT_11_12_16 {
        let p = cat().eval_center(n, &s).unwrap();
        if !geom::trace_right_of_c(&p).unwrap_or(false) {
            bad.push(format!("X{} trace not beyond C at (11,12,16)", n));
        }
    }

    // Among the first 29 centers only X16, X23, X26 ever do it.
    let right: BTreeSet<u32> = (1..=29u32)
        .into_par_iter()
        .filter(|&n| {
            matches!(
                classify_trace_right_of_c(cat(), n, TriangleFamily::AcuteScalene, &plan)
                    .unwrap(),
                RegionVerdict::Always | RegionVerdict::Sometimes { .. }
            )
        })
        .collect();
    if right != BTreeSet::from([16, 23, 26]) {
        bad.push(format!("right-of-C set among 1..29: {:?}", right));
    }

    report(
        7,
        bad.is_empty(),
        &format!(
            "X24 strictly trace-precedes C and X650 precedes B at >= 10^4 samples; \
             (11,12,16) beyond-C witnesses verified for all nine; 1..29 search \
             finds exactly {{16,23,26}}{}",
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failures: {:?}", bad)
            }
        ),
    );
}

// ---------------------------------------------------------------------------
// Criterion 8: coincidence parameters.
// ---------------------------------------------------------------------------

fn coincidence_roots(m: u32, n: u32) -> Vec<CoincidenceRoot> {
    match find_coincidence_iso(cat(), &x(m), &x(n), (&rat(1), &rat(1_000_000))).unwrap() {
        CoincidenceOutcome::Roots(r) => r,
        CoincidenceOutcome::IdenticallyEqual => {
            panic!("X{} and X{} unexpectedly identical", m, n)
        }
    }
}

#[test]
fn criterion_08_coincidence_roots() {
    // (pair, expected parameter, defining polynomial, low coefficients first)
    let cases: [(u32, u32, f64, &[i64]); 4] = [
        (5, 15, 1.9318516525, &[1, 0, -4, 0, 1]),
        (11, 24, 1.3065629648, &[1, 0, -4, 0, 2]),
        (29, 6, 1.2807764064, &[-2, -1, 2]),
        (12, 15, 7.2505378030, &[-1, 1, 6, 0, -11, -13, 2]),
    ];
    let tol = neg_pow10(20);
    let mut bad = vec![];
    for (m, n, want_k, poly) in cases {
        let roots = coincidence_roots(m, n);
        let target = UniPoly::from_i64(poly);
        let hit = roots.iter().find(|r| {
            (r.root.midpoint().to_f64().unwrap() - want_k).abs() < 1e-6
        });
        match hit {
            None => bad.push(format!(
                "X{}/X{}: no root near {} (found {:?})",
                m,
                n,
                want_k,
                roots
                    .iter()
                    .map(|r| r.root.midpoint().to_f64().unwrap())
                    .collect::<Vec<_>>()
            )),
            Some(r) => {
                // The isolated root must be a root of the expected polynomial:
                // the gcd with the defining polynomial keeps a root in the
                // isolating interval.
                let g = r.root.defining_polynomial.gcd(&target);
                let (lo, hi) = r.root.isolating_interval.clone();
                let divides = g.degree().unwrap_or(0) >= 1
                    && center_order::exactnum::sturm_root_count(&g, &lo, &hi) > 0;
                if !divides {
                    bad.push(format!("X{}/X{}: defining polynomial mismatch", m, n));
                }
                if r.residual > tol || r.precision_bits < 256 {
                    bad.push(format!(
                        "X{}/X{}: residual {:.3e} at {} bits",
                        m,
                        n,
                        r.residual.to_f64().unwrap_or(f64::NAN),
                        r.precision_bits
                    ));
                }
            }
        }
    }
    report(
        8,
        bad.is_empty(),
        &format!(
            "X5/X15 at 1.931852, X11/X24 at 1.306563, X29/X6 at 1.280776, \
             X12/X15 at 7.250538; all on their published defining polynomials \
             with cross-product residual <= 1e-20 at 256 bits{}",
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failures: {:?}", bad)
            }
        ),
    );
}

// ---------------------------------------------------------------------------
// Criterion 9: X23 on line AC, exactly, in Q(sqrt(61)).
// ---------------------------------------------------------------------------

/// Evaluate a coordinate polynomial at a = 1, b = 2 and c^2 given as an
/// element of a quadratic extension. Only even powers of c may appear.
fn eval_even_c(p: &center_order::mpoly::TriPoly, c2: &QuadExt) -> QuadExt {
    let mut acc = QuadExt::zero();
    for (e, coef) in &p.terms {
        assert_eq!(e[2] % 2, 0, "odd power of c");
        let mut term = QuadExt::from_rat(coef.clone());
        for _ in 0..e[1] {
            term = term.scale(&rat(2));
        }
        for _ in 0..e[2] / 2 {
            term = term.mul(c2);
        }
        acc = acc.add(&term);
    }
    acc
}

#[test]
fn criterion_09_x23_on_line_ac() {
    // Sides (1, 2, c) with c^2 = (1 + sqrt(61))/2: c ~ 2.099, a valid
    // triangle. The line AC is {middle coordinate = 0}.
    let c2 = QuadExt::new(ratio(1, 2), ratio(1, 2), rat(61));
    let [p, q, r] = cat().coord_upolys(23).unwrap();
    // X23 is radical-free; the three coordinates are plain polynomials.
    assert!(p.p1.is_zero() && q.p1.is_zero() && r.p1.is_zero());
    let mid = eval_even_c(&q.p0, &c2);
    let u = eval_even_c(&p.p0, &c2);
    let w = eval_even_c(&r.p0, &c2);
    report(
        9,
        mid.is_zero() && u.sign() != 0 && w.sign() != 0,
        &format!(
            "at (1, 2, c) with c^2 = (1+sqrt(61))/2 the middle coordinate of X23 \
             is exactly zero (u, w nonzero: {}, {})",
            u.sign() != 0,
            w.sign() != 0
        ),
    );
}

// ---------------------------------------------------------------------------
// Criterion 10: the X18 degenerate triangles, numerically at 256 bits.
// ---------------------------------------------------------------------------

#[test]
fn criterion_10_x18_degenerate_examples() {
    let bits = 256;
    let bf = |v: i64| BigFloat::from_i64(v, bits);
    let mut bad = vec![];

    // Sides (8, 15, sqrt((353 + 15 sqrt(93))/2)): X18 collapses onto vertex A.
    let c = bf(353)
        .add(&bf(15).mul(&bf(93).sqrt()))
        .div(&bf(2))
        .sqrt();
    let p = cat()
        .eval_center_numeric(18, &[bf(8), bf(15), c], bits)
        .unwrap();
    let sum = p[0].add(&p[1]).add(&p[2]);
    let tol = neg_pow10(20);
    let v_rel = p[1].div(&sum).abs();
    let w_rel = p[2].div(&sum).abs();
    if v_rel.as_rat() > &tol || w_rel.as_rat() > &tol {
        bad.push(format!(
            "A-coincidence residuals {:.3e}, {:.3e}",
            v_rel.to_f64(),
            w_rel.to_f64()
        ));
    }

    // Sides (16513, 42189, 7 sqrt(35 (940379 + 2 sqrt(10302477117)))): X18
    // escapes to infinity — the coordinate sum vanishes relative to the
    // coordinate magnitudes.
    let c = bf(7).mul(
        &bf(35)
            .mul(&bf(940_379).add(&bf(2).mul(&BigFloat::from_i64(10_302_477_117, bits).sqrt())))
            .sqrt(),
    );
    let p = cat()
        .eval_center_numeric(18, &[bf(16_513), bf(42_189), c], bits)
        .unwrap();
    let sum = p[0].add(&p[1]).add(&p[2]).abs();
    let scale = p
        .iter()
        .map(|v| v.abs().as_rat().clone())
        .fold(Rat::zero(), |a, b| a.max(b));
    let ratio_val = sum.as_rat() / &scale;
    if ratio_val > neg_pow10(15) {
        bad.push(format!(
            "coordinate-sum ratio {:.3e}",
            ratio_val.to_f64().unwrap_or(f64::NAN)
        ));
    }

    report(
        10,
        bad.is_empty(),
        &format!(
            "256-bit evaluation: X18 = A within 1e-20 at (8, 15, sqrt((353+15sqrt93)/2)) \
             and coordinate-sum ratio <= 1e-15 at the 16513/42189 triple{}",
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failures: {:?}", bad)
            }
        ),
    );
}

// ---------------------------------------------------------------------------
// Criterion 11: X30's coordinate sum is the zero polynomial.
// ---------------------------------------------------------------------------

#[test]
fn criterion_11_x30_at_infinity_identity() {
    let x30 = at_infinity_identity(cat(), 30).unwrap();
    // No other supported center shares the property.
    let others: Vec<u32> = cat()
        .indices()
        .filter(|&n| n != 30 && at_infinity_identity(cat(), n).unwrap())
        .collect();
    report(
        11,
        x30 && others.is_empty(),
        &format!(
            "symbolic coordinate sum of X30 expands to the zero polynomial \
             (and of no other catalog entry; extras: {:?})",
            others
        ),
    );
}

// ---------------------------------------------------------------------------
// Criterion 12: cross-cutting properties.
// ---------------------------------------------------------------------------

/// Deterministic pseudo-random scalene test triangles (not confined to any
/// order family; obtuse shapes included).
fn random_triangles(count: usize, seed: u64) -> Vec<Sides> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(seed);
    let mut out = vec![];
    while out.len() < count {
        let side = |rng: &mut rand_chacha::ChaCha12Rng| {
            Rat::new(
                BigInt::from(rng.gen_range(30i64..240)),
                BigInt::from(rng.gen_range(29i64..60)),
            )
        };
        let (b, c) = (side(&mut rng), side(&mut rng));
        if let Ok(s) = Sides::new(Rat::one(), b, c) {
            out.push(s);
        }
    }
    out
}

/// Projective equality across triangles of different absolute size: the
/// radical unit is sqrt(3E), and E scales by the fourth power of the side
/// factor, so coordinates from the rescaled triangle carry a different (but
/// square-equivalent) radicand. Rewrite both points over a common radicand
/// before the cross-product test.
fn same_point_rebased(p: &geom::BaryPoint, q: &geom::BaryPoint) -> bool {
    let target = [&p.u, &p.v, &p.w, &q.u, &q.v, &q.w]
        .into_iter()
        .find(|v| !v.radical_part.is_zero())
        .map(|v| v.radicand.clone())
        .unwrap_or_else(Rat::zero);
    let rebase = |v: &QuadExt| -> Option<QuadExt> {
        if v.radical_part.is_zero() || v.radicand == target {
            return Some(v.clone());
        }
        let t = center_order::exactnum::rat_sqrt_exact(&(&v.radicand / &target))?;
        Some(QuadExt::new(
            v.rational_part.clone(),
            &v.radical_part * t,
            target.clone(),
        ))
    };
    let pt = |b: &geom::BaryPoint| -> Option<geom::BaryPoint> {
        Some(geom::BaryPoint::new(
            rebase(&b.u)?,
            rebase(&b.v)?,
            rebase(&b.w)?,
        ))
    };
    match (pt(p), pt(q)) {
        (Some(a), Some(b)) => geom::same_point(&a, &b),
        _ => false,
    }
}

#[test]
fn criterion_12a_homogeneity_and_cyclic_consistency() {
    let triangles = random_triangles(20, 7);
    let indices: Vec<u32> = cat().indices().collect();
    let bad: Vec<String> = indices
        .par_iter()
        .flat_map_iter(|&n| {
            let mut local = vec![];
            for s in &triangles {
                let p = match cat().eval_center(n, s) {
                    Ok(p) if !p.is_zero_triple() => p,
                    _ => continue,
                };
                // Scale invariance: the same point on the rescaled triangle.
                let scaled = Sides::new(
                    &s.a * ratio(3, 7),
                    &s.b * ratio(3, 7),
                    &s.c * ratio(3, 7),
                )
                .unwrap();
                match cat().eval_center(n, &scaled) {
                    Ok(ps) if !ps.is_zero_triple() => {
                        if !same_point_rebased(&p, &ps) {
                            local.push(format!("X{} not scale-invariant at {:?}", n, s));
                        }
                    }
                    _ => local.push(format!("X{} degenerated under scaling", n)),
                }
                // Cyclic consistency: evaluating at (b, c, a) rotates the
                // coordinate triple left.
                let rot = Sides::new(s.b.clone(), s.c.clone(), s.a.clone()).unwrap();
                match cat().eval_center(n, &rot) {
                    Ok(pr) if !pr.is_zero_triple() => {
                        let expected = geom::BaryPoint::new(
                            p.v.clone(),
                            p.w.clone(),
                            p.u.clone(),
                        );
                        if !same_point_rebased(&pr, &expected) {
                            local.push(format!("X{} not cyclic at {:?}", n, s));
                        }
                    }
                    _ => local.push(format!("X{} degenerated under rotation", n)),
                }
            }
            local
        })
        .collect();
    report(
        12,
        bad.is_empty(),
        &format!(
            "(a) homogeneity and cyclic consistency hold for all {} catalog \
             entries on 20 random triangles{}",
            indices.len(),
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failures: {:?}", &bad[..bad.len().min(5)])
            }
        ),
    );
}

#[test]
fn criterion_12b_median_symmetry() {
    // With b = c every proper center lies on the A-median: the last two
    // coordinates agree exactly. X650 is excluded by design — its coordinate
    // function is antisymmetric under swapping b and c, so on an isosceles
    // triangle it degenerates to the direction (0 : 1 : -1) instead.
    let mut bad = vec![];
    for k in [ratio(7, 10), ratio(9, 8), ratio(13, 9), rat(2), rat(3)] {
        let s = Sides::new(Rat::one(), k.clone(), k.clone()).unwrap();
        for n in cat().indices().filter(|&n| n <= 100) {
            if let Ok(p) = cat().eval_center(n, &s) {
                if !p.v.sub(&p.w).is_zero() {
                    bad.push(format!("X{} off the median at k = {}", n, k));
                }
            }
        }
    }
    report(
        12,
        bad.is_empty(),
        &format!(
            "(b) median symmetry: v = w exactly for every center among X1..X100 \
             on five isosceles triangles{}",
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failures: {:?}", &bad[..bad.len().min(5)])
            }
        ),
    );
}

#[test]
fn criterion_12c_cartesian_oracle() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(12);
    let triangles = random_triangles(100, 3);
    let indices: Vec<u32> = cat().indices().collect();
    let mut checked = 0u32;
    let mut bad = vec![];
    while checked < 1000 {
        let n = indices[rng.gen_range(0..indices.len())];
        let s = &triangles[rng.gen_range(0..triangles.len())];
        let p = match cat().eval_center(n, s) {
            Ok(p) if !p.is_zero_triple() && !p.is_at_infinity() => p,
            _ => continue,
        };
        checked += 1;
        let (av, bv, cv) = geom::triangle_cartesian_f64(s);
        let xy = geom::point_cartesian_f64(&p, s).unwrap();
        let margin = 1e-7;
        // Side of BC: the embedding puts BC on the x-axis with A above.
        if xy[1].abs() > margin {
            let exact = geom::above_bc(&p);
            let want = if xy[1] > 0.0 {
                geom::SideOfBC::Above
            } else {
                geom::SideOfBC::Below
            };
            if exact != want {
                bad.push(format!("X{} above-BC mismatch at {:?}", n, s));
            }
        }
        // Region code against signed sub-triangle areas (an independent
        // floating-point derivation of the barycentrics).
        let area2 = |p: [f64; 2], q: [f64; 2], r: [f64; 2]| {
            (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
        };
        let total = area2(av, bv, cv);
        let coords = [
            area2(xy, bv, cv) / total,
            area2(av, xy, cv) / total,
            area2(av, bv, xy) / total,
        ];
        let reg = geom::region_of(&p).unwrap();
        for (f64_coord, exact_sign) in
            coords.iter().zip([reg.sign_u, reg.sign_v, reg.sign_w])
        {
            if f64_coord.abs() > margin && (f64_coord.signum() as i8) != exact_sign {
                bad.push(format!("X{} region mismatch at {:?}", n, s));
            }
        }
        // Squared distance to A against the Cartesian value.
        let exact_d2 = geom::squared_dist_to_vertex_a(&p, s).unwrap().to_f64();
        let cart_d2 = (xy[0] - av[0]).powi(2) + (xy[1] - av[1]).powi(2);
        if (exact_d2 - cart_d2).abs() > 1e-6 * (1.0 + exact_d2.abs()) {
            bad.push(format!(
                "X{} distance mismatch at {:?}: {} vs {}",
                n, s, exact_d2, cart_d2
            ));
        }
    }
    report(
        12,
        bad.is_empty(),
        &format!(
            "(c) Cartesian oracle agrees with the exact predicates on 1000 random \
             instances (region codes, side of BC, distance to A){}",
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failures: {:?}", &bad[..bad.len().min(5)])
            }
        ),
    );
}

/// Reachability over a chosen edge set by BFS from every node.
fn reachability(
    nodes: &[CenterId],
    edges: &[(CenterId, CenterId)],
) -> BTreeSet<(CenterId, CenterId)> {
    let mut succ: BTreeMap<CenterId, Vec<CenterId>> = BTreeMap::new();
    for (f, t) in edges {
        succ.entry(*f).or_default().push(*t);
    }
    let mut reach = BTreeSet::new();
    for &start in nodes {
        let mut stack = vec![start];
        let mut seen = BTreeSet::new();
        while let Some(v) = stack.pop() {
            for &w in succ.get(&v).into_iter().flatten() {
                if seen.insert(w) {
                    reach.insert((start, w));
                    stack.push(w);
                }
            }
        }
    }
    reach
}

#[test]
fn criterion_12d_reduction_preserves_reachability() {
    let nodes: Vec<CenterId> = (1..=20).map(x).collect();
    let g = build_graph(cat(), OrderKind::Isosceles, &nodes, &BuildOptions::default())
        .unwrap();
    // No certified cycle: the reduction would refuse with a soundness alarm.
    let h = transitive_reduction(&g).expect("acyclic certified subgraph");
    let certified: Vec<(CenterId, CenterId)> = g
        .edges
        .iter()
        .filter(|e| e.class == EdgeClass::Certified)
        .map(|e| (e.from, e.to))
        .collect();
    let before = reachability(&g.nodes, &certified);
    let after = reachability(&h.nodes, &h.edges);
    let minimal = h.edges.len() <= certified.len();
    report(
        12,
        before == after && minimal,
        &format!(
            "(d) transitive reduction of the isosceles graph over 1..20 preserves \
             reachability ({} certified edges -> {} Hasse edges) with no \
             certified cycles",
            certified.len(),
            h.edges.len()
        ),
    );
}

// ---------------------------------------------------------------------------
// Criterion 13: the cutpoint report.
// ---------------------------------------------------------------------------

#[test]
fn criterion_13_x1_articulation_point() {
    let nodes: Vec<CenterId> = (1..=100).map(x).collect();
    let g = build_graph(cat(), OrderKind::Isosceles, &nodes, &BuildOptions::default())
        .unwrap();
    let h = transitive_reduction(&g).expect("acyclic certified subgraph");
    let cuts = articulation_points(&h);
    let x1_is_cut = cuts.contains(&x(1));
    // The computed answer is the deliverable here; state it explicitly.
    println!(
        "criterion 13 report: isosceles Hasse graph over the qualifying \
         first-100 centers has {} nodes, {} edges, {} excluded; X1 is{} an \
         articulation point; articulation points: {:?}",
        h.nodes.len(),
        h.edges.len(),
        g.excluded.len(),
        if x1_is_cut { "" } else { " not" },
        cuts.iter().map(|c| c.to_string()).collect::<Vec<_>>()
    );
    report(
        13,
        x1_is_cut,
        &format!(
            "X1 is an articulation point of the isosceles Hasse diagram over the \
             {} qualifying centers ({} excluded as degenerate/boundary cases)",
            h.nodes.len(),
            g.excluded.len()
        ),
    );
}
