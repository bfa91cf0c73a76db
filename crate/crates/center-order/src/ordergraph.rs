//! Assemble pairwise verdicts into an order graph, reduce it to a Hasse
//! diagram, and interrogate the result: chain verification, cutpoints,
//! DOT/JSON export.
//!
//! Edge direction follows the arrow convention "m -> n means m precedes n".
//! Certified verdicts give solid edges; Undetermined-but-consistent sampling
//! verdicts give "likely" edges, rendered dashed, so the two evidence levels
//! stay visually distinct.

use crate::catalog::{Catalog, Sides};
use crate::decide::{
    at_infinity_identity, classify_outside_angle_a_iso, compare_2d, compare_iso,
    CenterId, DecideError, Direction, OrderKind, RegionVerdict, Verdict,
};
use crate::families::{sample, SamplePlan, TriangleFamily};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

/// Budget knobs for a graph build.
#[derive(Clone, Debug)]
pub struct BuildOptions {
    pub plan: SamplePlan,
    /// Rectangle-subdivision depth for 2-parameter certification attempts;
    /// 0 skips certification and leaves sampling verdicts as-is.
    pub subdivision_depth: u32,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            plan: SamplePlan::default(),
            subdivision_depth: 12,
        }
    }
}

impl BuildOptions {
    pub fn quick() -> Self {
        BuildOptions {
            plan: SamplePlan::quick(),
            subdivision_depth: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeClass {
    Certified,
    Likely,
}

impl EdgeClass {
    pub fn name(self) -> &'static str {
        match self {
            EdgeClass::Certified => "certified",
            EdgeClass::Likely => "likely",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub from: CenterId,
    pub to: CenterId,
    pub class: EdgeClass,
    /// The verdict oriented so that `from` precedes `to`.
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct OrderGraph {
    pub kind: OrderKind,
    /// Included nodes, sorted; excluded centers are absent here.
    pub nodes: Vec<CenterId>,
    pub edges: Vec<Edge>,
    pub excluded: BTreeMap<CenterId, String>,
    /// Pairs certified equal on the whole family (no edge in either
    /// direction; chains may still list them consecutively).
    pub equal: Vec<(CenterId, CenterId)>,
}

/// Transitive reduction of the certified subgraph of an OrderGraph.
#[derive(Clone, Debug)]
pub struct HasseDiagram {
    pub kind: OrderKind,
    pub nodes: Vec<CenterId>,
    pub edges: Vec<(CenterId, CenterId)>,
}

/// Family each order quantifies over when building a graph.
pub fn graph_family(kind: OrderKind) -> TriangleFamily {
    match kind {
        OrderKind::Isosceles => TriangleFamily::TallIsosceles,
        OrderKind::Vertex | OrderKind::Side => TriangleFamily::AcuteMinA,
        OrderKind::Trace => TriangleFamily::AcuteScalene,
    }
}

/// Why a center cannot participate in the graph for `kind`, or None when it
/// qualifies. Everything here is computed, not hardcoded: the at-infinity
/// test is a polynomial identity, the angle-A condition comes from the
/// certified 1-parameter classifier, and the unboundedness tests detect an
/// exact sign change of the relevant denominator across the connected family
/// (the value must then blow up in both directions along a path between the
/// witnesses).
pub fn exclusion_reason(
    cat: &Catalog,
    kind: OrderKind,
    n: u32,
    plan: &SamplePlan,
) -> Result<Option<String>, DecideError> {
    if at_infinity_identity(cat, n)? {
        return Ok(Some("lies on the line at infinity".into()));
    }
    match kind {
        OrderKind::Isosceles => {
            match classify_outside_angle_a_iso(cat, n, graph_family(kind))? {
                RegionVerdict::Always => Ok(None),
                RegionVerdict::Never => {
                    Ok(Some("never strictly inside angle A".into()))
                }
                RegionVerdict::Sometimes { witness_out, .. } => Ok(Some(format!(
                    "leaves angle A within the family (e.g. at sides {})",
                    sides_str(&witness_out)
                ))),
                RegionVerdict::DegenerateNote(t) => Ok(Some(t)),
            }
        }
        OrderKind::Vertex | OrderKind::Side => {
            Ok(sum_sign_change(cat, n, kind, plan).map(|(p, q)| {
                format!(
                    "crosses the line at infinity inside the family \
                     (coordinate sum changes sign between sides {} and {}); \
                     distance unbounded in both directions",
                    sides_str(&p),
                    sides_str(&q)
                )
            }))
        }
        OrderKind::Trace => Ok(trace_denominator_sign_change(cat, n, plan).map(
            |(p, q)| {
                format!(
                    "A-trace escapes to infinity inside the family \
                     (q + r changes sign between sides {} and {}); \
                     trace arbitrarily far from C in both directions",
                    sides_str(&p),
                    sides_str(&q)
                )
            },
        )),
    }
}

fn sides_str(s: &Sides) -> String {
    format!("({}, {}, {})", s.a, s.b, s.c)
}

/// Witness pair with opposite signs of the coordinate sum, if one exists in
/// the sample set. The family regions are connected, so opposite signs force
/// a zero (the center at infinity) somewhere between the witnesses.
fn sum_sign_change(
    cat: &Catalog,
    n: u32,
    kind: OrderKind,
    plan: &SamplePlan,
) -> Option<(Sides, Sides)> {
    let mut pos: Option<Sides> = None;
    let mut neg: Option<Sides> = None;
    for s in sample(graph_family(kind), &plan.for_pair(n, 0)) {
        let p = match cat.eval_center(n, &s) {
            Ok(p) => p,
            Err(_) => continue,
        };
        match p.coordinate_sum().sign() {
            1 if pos.is_none() => pos = Some(s),
            -1 if neg.is_none() => neg = Some(s),
            _ => {}
        }
        if let (Some(p), Some(q)) = (&pos, &neg) {
            return Some((p.clone(), q.clone()));
        }
    }
    None
}

/// Same idea for the trace denominator q + r: a sign change inside the
/// connected family means the A-trace passes through infinity.
fn trace_denominator_sign_change(
    cat: &Catalog,
    n: u32,
    plan: &SamplePlan,
) -> Option<(Sides, Sides)> {
    let mut pos: Option<Sides> = None;
    let mut neg: Option<Sides> = None;
    for s in sample(graph_family(OrderKind::Trace), &plan.for_pair(n, 0)) {
        let p = match cat.eval_center(n, &s) {
            Ok(p) => p,
            Err(_) => continue,
        };
        match p.v.add(&p.w).sign() {
            1 if pos.is_none() => pos = Some(s),
            -1 if neg.is_none() => neg = Some(s),
            _ => {}
        }
        if let (Some(p), Some(q)) = (&pos, &neg) {
            return Some((p.clone(), q.clone()));
        }
    }
    None
}

/// Single pairwise comparison through the engine appropriate to the order.
pub fn compare(
    cat: &Catalog,
    kind: OrderKind,
    m: &CenterId,
    n: &CenterId,
    opts: &BuildOptions,
) -> Result<Verdict, DecideError> {
    match kind {
        OrderKind::Isosceles => compare_iso(cat, m, n, graph_family(kind)),
        _ => compare_2d(cat, kind, m, n, &opts.plan, opts.subdivision_depth),
    }
}

/// Compare every unordered pair of qualifying centers (in parallel) and
/// collect the directed edges. Mixed and equal pairs contribute no edge.
pub fn build_graph(
    cat: &Catalog,
    kind: OrderKind,
    centers: &[CenterId],
    opts: &BuildOptions,
) -> Result<OrderGraph, DecideError> {
    let mut nodes: Vec<CenterId> = vec![];
    let mut excluded = BTreeMap::new();
    for id in centers {
        match id {
            CenterId::X(n) => match exclusion_reason(cat, kind, *n, &opts.plan)? {
                Some(reason) => {
                    excluded.insert(*id, reason);
                }
                None => nodes.push(*id),
            },
            _ => nodes.push(*id),
        }
    }
    nodes.sort();
    nodes.dedup();

    let pairs: Vec<(usize, usize)> = (0..nodes.len())
        .flat_map(|i| (i + 1..nodes.len()).map(move |j| (i, j)))
        .collect();
    enum PairOutcome {
        Edge(Edge),
        Equal(CenterId, CenterId),
        Nothing,
    }
    let results: Vec<Result<PairOutcome, DecideError>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (m, n) = (nodes[i], nodes[j]);
            let v = compare(cat, kind, &m, &n, opts)?;
            Ok(match v {
                Verdict::CertifiedEqualNowhereComparable => PairOutcome::Equal(m, n),
                Verdict::CertifiedPrecedes { .. } => PairOutcome::Edge(Edge {
                    from: m,
                    to: n,
                    class: EdgeClass::Certified,
                    verdict: v,
                }),
                Verdict::CertifiedSucceeds { .. } => PairOutcome::Edge(Edge {
                    from: n,
                    to: m,
                    class: EdgeClass::Certified,
                    verdict: v.flip(),
                }),
                Verdict::Undetermined {
                    all_consistent_with: Some(Direction::Precedes),
                    ..
                } => PairOutcome::Edge(Edge {
                    from: m,
                    to: n,
                    class: EdgeClass::Likely,
                    verdict: v,
                }),
                Verdict::Undetermined {
                    all_consistent_with: Some(Direction::Succeeds),
                    ..
                } => PairOutcome::Edge(Edge {
                    from: n,
                    to: m,
                    class: EdgeClass::Likely,
                    verdict: v.flip(),
                }),
                _ => PairOutcome::Nothing,
            })
        })
        .collect();
    let mut edges = vec![];
    let mut equal = vec![];
    for r in results {
        match r? {
            PairOutcome::Edge(e) => edges.push(e),
            PairOutcome::Equal(m, n) => equal.push((m, n)),
            PairOutcome::Nothing => {}
        }
    }
    edges.sort_by_key(|e| (e.from, e.to));
    equal.sort();
    Ok(OrderGraph {
        kind,
        nodes,
        edges,
        excluded,
        equal,
    })
}

fn index_of(nodes: &[CenterId]) -> BTreeMap<CenterId, usize> {
    nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect()
}

/// Reachability closure of an adjacency matrix (dense; node counts stay
/// small at around a hundred).
fn closure(adj: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = adj.len();
    let mut reach = adj.to_vec();
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    reach
}

/// Transitive reduction of the certified subgraph. A directed cycle among
/// certified edges would contradict the strict order the certificates claim,
/// so it aborts with a soundness alarm instead of producing output.
pub fn transitive_reduction(g: &OrderGraph) -> Result<HasseDiagram, DecideError> {
    let idx = index_of(&g.nodes);
    let n = g.nodes.len();
    let mut adj = vec![vec![false; n]; n];
    for e in &g.edges {
        if e.class == EdgeClass::Certified {
            adj[idx[&e.from]][idx[&e.to]] = true;
        }
    }
    let reach = closure(&adj);
    for (i, row) in reach.iter().enumerate() {
        if row[i] {
            return Err(DecideError::Unsupported(format!(
                "soundness alarm: certified cycle through {}",
                g.nodes[i]
            )));
        }
    }
    let mut edges = vec![];
    for i in 0..n {
        for j in 0..n {
            if !adj[i][j] {
                continue;
            }
            // Drop the edge when a longer certified path implies it.
            let implied = (0..n)
                .any(|k| k != i && k != j && reach[i][k] && reach[k][j]);
            if !implied {
                edges.push((g.nodes[i], g.nodes[j]));
            }
        }
    }
    edges.sort();
    Ok(HasseDiagram {
        kind: g.kind,
        nodes: g.nodes.clone(),
        edges,
    })
}

/// Articulation points of the underlying undirected graph (iterative DFS
/// low-link, handling disconnected graphs component by component).
pub fn articulation_points(h: &HasseDiagram) -> BTreeSet<CenterId> {
    let idx = index_of(&h.nodes);
    let n = h.nodes.len();
    let mut nbrs = vec![vec![]; n];
    for (a, b) in &h.edges {
        let (i, j) = (idx[a], idx[b]);
        nbrs[i].push(j);
        nbrs[j].push(i);
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut cut = vec![false; n];
    let mut timer = 0usize;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // Stack of (vertex, parent, next-neighbor-cursor).
        let mut stack = vec![(root, usize::MAX, 0usize)];
        let mut root_children = 0usize;
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&mut (v, parent, ref mut cursor)) = stack.last_mut() {
            if *cursor < nbrs[v].len() {
                let to = nbrs[v][*cursor];
                *cursor += 1;
                if disc[to] == usize::MAX {
                    if v == root {
                        root_children += 1;
                    }
                    disc[to] = timer;
                    low[to] = timer;
                    timer += 1;
                    stack.push((to, v, 0));
                } else if to != parent {
                    low[v] = low[v].min(disc[to]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            cut[root] = true;
        }
    }
    (0..n)
        .filter(|&i| cut[i])
        .map(|i| h.nodes[i])
        .collect()
}

/// Status of one consecutive chain link against a built graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkStatus {
    Certified,
    /// The pair is certified equal on the whole family; a chain may list the
    /// two consecutively even though neither strictly precedes the other.
    Equal,
    Likely,
    Missing,
}

#[derive(Clone, Debug)]
pub struct ChainReport {
    pub links: Vec<(CenterId, CenterId, LinkStatus)>,
    /// Index of the first link that is neither certified nor likely.
    pub first_failing: Option<usize>,
}

impl ChainReport {
    pub fn ok(&self) -> bool {
        self.first_failing.is_none()
    }

    pub fn all_certified(&self) -> bool {
        self.links
            .iter()
            .all(|(_, _, st)| matches!(st, LinkStatus::Certified | LinkStatus::Equal))
    }
}

/// Check that every consecutive pair of the chain appears as a graph edge in
/// the chain's direction.
pub fn verify_chain(g: &OrderGraph, chain: &[CenterId]) -> ChainReport {
    let mut by_pair = BTreeMap::new();
    for e in &g.edges {
        by_pair.insert((e.from, e.to), e.class);
    }
    let equal: BTreeSet<(CenterId, CenterId)> = g
        .equal
        .iter()
        .flat_map(|&(m, n)| [(m, n), (n, m)])
        .collect();
    let mut links = vec![];
    let mut first_failing = None;
    for (i, w) in chain.windows(2).enumerate() {
        let st = match by_pair.get(&(w[0], w[1])) {
            Some(EdgeClass::Certified) => LinkStatus::Certified,
            Some(EdgeClass::Likely) => LinkStatus::Likely,
            None if equal.contains(&(w[0], w[1])) => LinkStatus::Equal,
            None => LinkStatus::Missing,
        };
        if st == LinkStatus::Missing && first_failing.is_none() {
            first_failing = Some(i);
        }
        links.push((w[0], w[1], st));
    }
    ChainReport {
        links,
        first_failing,
    }
}

fn xs(ns: &[u32]) -> Vec<CenterId> {
    ns.iter().map(|&n| CenterId::X(n)).collect()
}

/// Reference chains the graph subcommand re-verifies, keyed by order.
pub fn known_chains(kind: OrderKind) -> Vec<(&'static str, Vec<CenterId>)> {
    match kind {
        OrderKind::Isosceles => vec![
            (
                "isosceles-24",
                xs(&[
                    20, 22, 8, 3, 9, 10, 21, 2, 5, 12, 17, 1, 13, 7, 6, 4, 27,
                    19, 28, 25, 11, 14, 16, 23,
                ]),
            ),
            (
                "isosceles-100",
                xs(&[
                    20, 22, 40, 72, 63, 8, 3, 9, 95, 77, 21, 2, 45, 38, 55, 37,
                    12, 17, 1, 61, 60, 81, 7, 82, 89, 6, 65, 33, 51, 57, 4, 27,
                    19, 28, 25, 34, 64, 11, 98, 74, 67, 88, 14, 80, 36, 16, 44,
                    23,
                ]),
            ),
        ],
        OrderKind::Vertex => vec![(
            "vertex-9",
            xs(&[3, 9, 10, 2, 1, 6, 4, 19, 16]),
        )],
        OrderKind::Side => vec![(
            "side-22",
            xs(&[
                26, 20, 22, 40, 8, 9, 10, 2, 37, 1, 7, 29, 33, 4, 27, 19, 28,
                25, 34, 24, 36, 16,
            ]),
        )],
        OrderKind::Trace => vec![(
            "trace-21",
            xs(&[
                20, 22, 3, 8, 9, 21, 10, 2, 1, 17, 12, 7, 13, 29, 4, 27, 19,
                28, 25, 24, 23,
            ]),
        )],
    }
}

/// DOT digraph; certified edges solid, likely edges dashed. Deterministic
/// (nodes and edges pre-sorted by the builders).
pub fn graph_to_dot(g: &OrderGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {}_order {{", g.kind.name());
    for n in &g.nodes {
        let _ = writeln!(out, "  \"{}\";", n);
    }
    for e in &g.edges {
        let style = match e.class {
            EdgeClass::Certified => "solid",
            EdgeClass::Likely => "dashed",
        };
        let _ = writeln!(out, "  \"{}\" -> \"{}\" [style={}];", e.from, e.to, style);
    }
    out.push_str("}\n");
    out
}

pub fn hasse_to_dot(h: &HasseDiagram) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {}_hasse {{", h.kind.name());
    for n in &h.nodes {
        let _ = writeln!(out, "  \"{}\";", n);
    }
    for (a, b) in &h.edges {
        let _ = writeln!(out, "  \"{}\" -> \"{}\";", a, b);
    }
    out.push_str("}\n");
    out
}

fn id_key(id: &CenterId) -> String {
    match id {
        CenterId::X(n) => n.to_string(),
        other => other.to_string(),
    }
}

pub fn graph_to_json(g: &OrderGraph) -> Value {
    let exclusions: BTreeMap<String, &String> =
        g.excluded.iter().map(|(k, v)| (id_key(k), v)).collect();
    json!({
        "order": g.kind.name(),
        "nodes": g.nodes.iter().map(|n| n.to_string()).collect::<Vec<_>>(),
        "edges": g.edges.iter().map(|e| {
            json!({
                "from": e.from.to_string(),
                "to": e.to.to_string(),
                "class": e.class.name(),
                "verdict": e.verdict.to_json(g.kind, &e.from, &e.to),
            })
        }).collect::<Vec<_>>(),
        "equal_pairs": g.equal.iter().map(|(m, n)| {
            json!([m.to_string(), n.to_string()])
        }).collect::<Vec<_>>(),
        "exclusions": exclusions,
    })
}

pub fn hasse_to_json(h: &HasseDiagram) -> Value {
    json!({
        "order": h.kind.name(),
        "nodes": h.nodes.iter().map(|n| n.to_string()).collect::<Vec<_>>(),
        "edges": h.edges.iter().map(|(a, b)| {
            json!({"from": a.to_string(), "to": b.to_string()})
        }).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> Catalog {
        Catalog::bundled()
    }

    #[test]
    fn iso_chain_prefix_builds_as_path() {
        let c = cat();
        let g = build_graph(
            &c,
            OrderKind::Isosceles,
            &xs(&[20, 22, 8, 3]),
            &BuildOptions::quick(),
        )
        .unwrap();
        assert_eq!(g.nodes.len(), 4);
        assert_eq!(g.edges.len(), 6, "total order on 4 nodes");
        assert!(g.edges.iter().all(|e| e.class == EdgeClass::Certified));
        let h = transitive_reduction(&g).unwrap();
        // Sorted edge list of the path 20 -> 22 -> 8 -> 3.
        assert_eq!(
            h.edges,
            vec![
                (CenterId::X(8), CenterId::X(3)),
                (CenterId::X(20), CenterId::X(22)),
                (CenterId::X(22), CenterId::X(8)),
            ]
        );
    }

    #[test]
    fn iso_bounding_triple() {
        let c = cat();
        let g = build_graph(
            &c,
            OrderKind::Isosceles,
            &xs(&[2, 15, 17]),
            &BuildOptions::quick(),
        )
        .unwrap();
        let h = transitive_reduction(&g).unwrap();
        assert_eq!(
            h.edges,
            vec![
                (CenterId::X(2), CenterId::X(15)),
                (CenterId::X(15), CenterId::X(17)),
            ]
        );
    }

    #[test]
    fn singleton_graph_is_empty() {
        let c = cat();
        let g = build_graph(
            &c,
            OrderKind::Isosceles,
            &xs(&[2]),
            &BuildOptions::quick(),
        )
        .unwrap();
        assert!(g.edges.is_empty());
    }

    #[test]
    fn exclusions_are_computed() {
        let c = cat();
        let p = SamplePlan::quick();
        // X30 is at infinity for every order.
        for kind in [
            OrderKind::Isosceles,
            OrderKind::Vertex,
            OrderKind::Side,
            OrderKind::Trace,
        ] {
            let r = exclusion_reason(&c, kind, 30, &p).unwrap().unwrap();
            assert!(r.contains("infinity"), "{:?}: {}", kind, r);
        }
        // X18 crosses the line at infinity inside the acute family.
        assert!(exclusion_reason(&c, OrderKind::Vertex, 18, &p)
            .unwrap()
            .is_some());
        assert!(exclusion_reason(&c, OrderKind::Side, 18, &p)
            .unwrap()
            .is_some());
        // X26's A-trace escapes to infinity; the side order keeps it.
        assert!(exclusion_reason(&c, OrderKind::Trace, 26, &p)
            .unwrap()
            .is_some());
        assert!(exclusion_reason(&c, OrderKind::Side, 26, &p)
            .unwrap()
            .is_none());
        // Anchors of the reference chains all qualify.
        for n in [3, 9, 16] {
            assert!(exclusion_reason(&c, OrderKind::Vertex, n, &p)
                .unwrap()
                .is_none());
        }
        assert!(exclusion_reason(&c, OrderKind::Trace, 23, &p)
            .unwrap()
            .is_none());
    }

    #[test]
    fn reduction_preserves_reachability() {
        let c = cat();
        let g = build_graph(
            &c,
            OrderKind::Isosceles,
            &xs(&[20, 22, 8, 3, 9, 10]),
            &BuildOptions::quick(),
        )
        .unwrap();
        let h = transitive_reduction(&g).unwrap();
        let idx = index_of(&g.nodes);
        let n = g.nodes.len();
        let mut full = vec![vec![false; n]; n];
        for e in &g.edges {
            if e.class == EdgeClass::Certified {
                full[idx[&e.from]][idx[&e.to]] = true;
            }
        }
        let mut red = vec![vec![false; n]; n];
        for (a, b) in &h.edges {
            red[idx[a]][idx[b]] = true;
        }
        assert_eq!(closure(&full), closure(&red));
    }

    #[test]
    fn articulation_path_and_clique() {
        // Path 1-2-3: the middle vertex is the single cutpoint.
        let path = HasseDiagram {
            kind: OrderKind::Isosceles,
            nodes: xs(&[1, 2, 3]),
            edges: vec![
                (CenterId::X(1), CenterId::X(2)),
                (CenterId::X(2), CenterId::X(3)),
            ],
        };
        assert_eq!(
            articulation_points(&path),
            BTreeSet::from([CenterId::X(2)])
        );
        // Complete graph on 4 nodes: none.
        let mut edges = vec![];
        let ns = [1u32, 2, 3, 4];
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((CenterId::X(ns[i]), CenterId::X(ns[j])));
            }
        }
        let k4 = HasseDiagram {
            kind: OrderKind::Isosceles,
            nodes: xs(&ns),
            edges,
        };
        assert!(articulation_points(&k4).is_empty());
    }

    #[test]
    fn verify_chain_and_reverse() {
        let c = cat();
        let g = build_graph(
            &c,
            OrderKind::Isosceles,
            &xs(&[20, 22, 8, 3]),
            &BuildOptions::quick(),
        )
        .unwrap();
        let chain = xs(&[20, 22, 8, 3]);
        let rep = verify_chain(&g, &chain);
        assert!(rep.ok() && rep.all_certified());
        let mut rev = chain.clone();
        rev.reverse();
        let rep = verify_chain(&g, &rev);
        assert_eq!(rep.first_failing, Some(0));
    }

    #[test]
    fn export_dot_and_json() {
        let c = cat();
        let g = build_graph(
            &c,
            OrderKind::Isosceles,
            &xs(&[20, 22]),
            &BuildOptions::quick(),
        )
        .unwrap();
        let dot = graph_to_dot(&g);
        assert!(dot.contains("\"X20\" -> \"X22\""), "{}", dot);
        let j = graph_to_json(&g);
        assert_eq!(j["edges"][0]["from"], "X20");

        // An excluded center lands in the JSON exclusions map.
        let g = build_graph(
            &c,
            OrderKind::Isosceles,
            &xs(&[2, 30]),
            &BuildOptions::quick(),
        )
        .unwrap();
        let j = graph_to_json(&g);
        assert_eq!(
            j["exclusions"]["30"],
            "lies on the line at infinity"
        );

        // Empty graph exports stay well formed.
        let g = build_graph(&c, OrderKind::Isosceles, &[], &BuildOptions::quick())
            .unwrap();
        assert!(graph_to_dot(&g).starts_with("digraph"));
        assert_eq!(graph_to_json(&g)["nodes"], json!([]));
    }

    #[test]
    fn vertex_chain_likely_edges() {
        let c = cat();
        let chain = known_chains(OrderKind::Vertex).remove(0).1;
        let g = build_graph(&c, OrderKind::Vertex, &chain, &BuildOptions::quick())
            .unwrap();
        let rep = verify_chain(&g, &chain);
        assert!(rep.ok(), "{:?}", rep.links);
    }
}
