//! Rigidity and flow consequences of spanning-tree packings.
//!
//! Body-bar frameworks in dimension `d` are generically rigid iff the graph
//! has `d(d+1)/2` edge-disjoint spanning trees. On a surface of revolution
//! other than the sphere and cylinder, a non-complete graph is rigid iff it
//! splits into a spanning tree `T` and an edge-disjoint spanning subgraph `F`
//! whose components each carry exactly one cycle. Leftover edges are allowed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::packing::{
    has_k_trees, stp_number, validate_spanning_trees, PackingDecision, PartitionWitness, UnionFind,
};

/// Largest vertex count for the exact spanning-tree enumeration.
pub const SURFACE_EXACT_LIMIT: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SurfaceKind {
    Cylinder,
    Sphere,
    OtherRevolution,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RigidityMode {
    BodyBar(usize),
    Surface(SurfaceKind),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RigidityDecision {
    Rigid,
    NotRigid,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RigidityCertificate {
    /// Edge-disjoint spanning trees.
    Trees(Vec<Vec<Edge>>),
    /// Spanning tree plus an edge-disjoint spanning subgraph whose components
    /// are unicyclic.
    TreeAndUnicyclic { tree: Vec<Edge>, unicyclic: Vec<Edge> },
    /// Complete graphs are rigid outright; small ones admit no decomposition.
    CompleteGraph,
    /// Partition ruling out the required number of trees.
    Partition(PartitionWitness),
    /// Exact search over every spanning tree found no decomposition.
    NoDecomposition { trees_examined: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityReport {
    pub mode: RigidityMode,
    pub decision: RigidityDecision,
    pub certificate: Option<RigidityCertificate>,
    pub required_trees: usize,
}

fn disconnected(g: &Graph, mode: RigidityMode, required_trees: usize) -> RigidityReport {
    RigidityReport {
        mode,
        decision: RigidityDecision::NotRigid,
        certificate: Some(RigidityCertificate::Partition(PartitionWitness {
            k: required_trees.max(1),
            partition: g.component_partition(),
            cross_edges: 0,
        })),
        required_trees,
    }
}

fn from_packing(g: &Graph, k: usize, mode: RigidityMode) -> RigidityReport {
    let (decision, certificate) = match has_k_trees(g, k).expect("k >= 1") {
        PackingDecision::Yes { trees } => (RigidityDecision::Rigid, RigidityCertificate::Trees(trees)),
        PackingDecision::No { witness } => (RigidityDecision::NotRigid, RigidityCertificate::Partition(witness)),
    };
    RigidityReport {
        mode,
        decision,
        certificate: Some(certificate),
        required_trees: k,
    }
}

/// Generic body-bar rigidity in dimension `d`: rigid iff `τ >= d(d+1)/2`.
pub fn body_bar_rigid(g: &Graph, d: usize) -> Result<RigidityReport> {
    if d == 0 {
        return Err(Error::InvalidParameter("dimension must be at least 1".into()));
    }
    let k = d * (d + 1) / 2;
    let mode = RigidityMode::BodyBar(d);
    if !g.is_connected() {
        return Ok(disconnected(g, mode, k));
    }
    Ok(from_packing(g, k, mode))
}

/// Components of `(V, rest)` each with at least as many edges as vertices
/// give a spanning unicyclic subgraph: a spanning tree of every component
/// plus one more edge inside it.
fn unicyclic_cover(n: usize, rest: &[Edge]) -> Option<Vec<Edge>> {
    let mut uf = UnionFind::new(n);
    for &(u, v) in rest {
        uf.union(u, v);
    }
    let mut vertices = vec![0usize; n];
    let mut edges = vec![0usize; n];
    for v in 0..n {
        vertices[uf.find(v)] += 1;
    }
    for &(u, _) in rest {
        edges[uf.find(u)] += 1;
    }
    if (0..n).any(|r| vertices[r] > 0 && edges[r] < vertices[r]) {
        return None;
    }
    let mut forest = UnionFind::new(n);
    let mut chosen = Vec::with_capacity(n);
    let mut spare = Vec::new();
    for &(u, v) in rest {
        if forest.union(u, v) {
            chosen.push((u, v));
        } else {
            spare.push((u, v));
        }
    }
    let mut closed = vec![false; n];
    for (u, v) in spare {
        let root = uf.find(u);
        if !closed[root] {
            closed[root] = true;
            chosen.push((u, v));
        }
    }
    chosen.sort_unstable();
    Some(chosen)
}

/// Calls `visit` on every spanning tree of `g` (edge lists in edge order)
/// until it returns `true`. Returns the number of trees visited.
fn for_each_spanning_tree(g: &Graph, mut visit: impl FnMut(&[Edge]) -> bool) -> (u64, bool) {
    fn rec(
        edges: &[Edge],
        from: usize,
        uf: &[usize],
        chosen: &mut Vec<Edge>,
        need: usize,
        count: &mut u64,
        visit: &mut dyn FnMut(&[Edge]) -> bool,
    ) -> bool {
        if chosen.len() == need {
            *count += 1;
            return visit(chosen);
        }
        if edges.len() - from < need - chosen.len() {
            return false;
        }
        for idx in from..edges.len() {
            if edges.len() - idx < need - chosen.len() {
                return false;
            }
            let (u, v) = edges[idx];
            let (ru, rv) = (uf[u], uf[v]);
            if ru == rv {
                continue;
            }
            let merged: Vec<usize> = uf.iter().map(|&c| if c == rv { ru } else { c }).collect();
            chosen.push((u, v));
            if rec(edges, idx + 1, &merged, chosen, need, count, visit) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let n = g.n();
    let labels: Vec<usize> = (0..n).collect();
    let mut count = 0;
    let found = rec(g.edges(), 0, &labels, &mut Vec::new(), n - 1, &mut count, &mut visit);
    (count, found)
}

fn decomposition_by_trees(g: &Graph) -> (Option<(Vec<Edge>, Vec<Edge>)>, u64) {
    let mut found = None;
    let (count, _) = for_each_spanning_tree(g, |tree| {
        let rest: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|e| tree.binary_search(e).is_err())
            .collect();
        if let Some(f) = unicyclic_cover(g.n(), &rest) {
            found = Some((tree.to_vec(), f));
            true
        } else {
            false
        }
    });
    (found, count)
}

/// Two disjoint spanning trees and a spare edge give the decomposition
/// directly: the second tree plus the spare edge is spanning and unicyclic.
fn decomposition_from_packing(g: &Graph) -> Option<(Vec<Edge>, Vec<Edge>)> {
    if g.m() + 1 < 2 * g.n() {
        return None;
    }
    let PackingDecision::Yes { trees } = has_k_trees(g, 2).ok()? else {
        return None;
    };
    let extra = g
        .edges()
        .iter()
        .find(|e| trees[0].binary_search(e).is_err() && trees[1].binary_search(e).is_err())?;
    let mut f = trees[1].clone();
    f.push(*extra);
    f.sort_unstable();
    Some((trees[0].clone(), f))
}

/// Rigidity on a surface of revolution. Complete graphs are rigid on every
/// surface; the sphere is otherwise left undecided. On the cylinder the test
/// is two disjoint spanning trees. On other surfaces the tree/unicyclic split
/// is decided exactly up to [`SURFACE_EXACT_LIMIT`] vertices and beyond that
/// only the sufficient test (`τ >= 2`, `m >= 2n-1`) is applied.
pub fn surface_rigid(g: &Graph, kind: SurfaceKind) -> RigidityReport {
    let mode = RigidityMode::Surface(kind);
    let required = match kind {
        SurfaceKind::Sphere => 0,
        _ => 2,
    };
    let report = |decision, certificate| RigidityReport {
        mode,
        decision,
        certificate,
        required_trees: required,
    };
    if g.is_complete() {
        return report(RigidityDecision::Rigid, Some(RigidityCertificate::CompleteGraph));
    }
    if !g.is_connected() {
        return disconnected(g, mode, required);
    }
    match kind {
        SurfaceKind::Sphere => report(RigidityDecision::Unknown, None),
        SurfaceKind::Cylinder => from_packing(g, 2, mode),
        SurfaceKind::OtherRevolution => {
            if let Some((tree, unicyclic)) = decomposition_from_packing(g) {
                return report(
                    RigidityDecision::Rigid,
                    Some(RigidityCertificate::TreeAndUnicyclic { tree, unicyclic }),
                );
            }
            if g.n() > SURFACE_EXACT_LIMIT {
                return report(RigidityDecision::Unknown, None);
            }
            if g.m() + 1 < 2 * g.n() {
                return report(
                    RigidityDecision::NotRigid,
                    Some(RigidityCertificate::NoDecomposition { trees_examined: 0 }),
                );
            }
            match decomposition_by_trees(g) {
                (Some((tree, unicyclic)), _) => report(
                    RigidityDecision::Rigid,
                    Some(RigidityCertificate::TreeAndUnicyclic { tree, unicyclic }),
                ),
                (None, trees_examined) => report(
                    RigidityDecision::NotRigid,
                    Some(RigidityCertificate::NoDecomposition { trees_examined }),
                ),
            }
        }
    }
}

/// Independent re-check of a rigid report's certificate.
pub fn validate_rigidity_certificate(g: &Graph, report: &RigidityReport) -> std::result::Result<(), String> {
    if report.decision != RigidityDecision::Rigid {
        return Ok(());
    }
    match &report.certificate {
        Some(RigidityCertificate::Trees(trees)) => {
            if trees.len() < report.required_trees {
                return Err(format!("{} trees, {} required", trees.len(), report.required_trees));
            }
            validate_spanning_trees(g, trees)
        }
        Some(RigidityCertificate::TreeAndUnicyclic { tree, unicyclic }) => {
            validate_spanning_trees(g, std::slice::from_ref(tree))?;
            let n = g.n();
            let mut uf = UnionFind::new(n);
            for &(u, v) in unicyclic {
                if !g.has_edge(u, v) {
                    return Err(format!("unicyclic part uses non-edge {u}-{v}"));
                }
                if tree.contains(&(u.min(v), u.max(v))) {
                    return Err(format!("edge {u}-{v} in both parts"));
                }
                uf.union(u, v);
            }
            let mut vertices = vec![0usize; n];
            let mut edges = vec![0usize; n];
            for v in 0..n {
                vertices[uf.find(v)] += 1;
            }
            for &(u, _) in unicyclic {
                edges[uf.find(u)] += 1;
            }
            match (0..n).find(|&r| vertices[r] > 0 && edges[r] != vertices[r]) {
                Some(r) => Err(format!(
                    "component of {r} has {} vertices and {} edges",
                    vertices[r], edges[r]
                )),
                None => Ok(()),
            }
        }
        Some(RigidityCertificate::CompleteGraph) if g.is_complete() => Ok(()),
        other => Err(format!("rigid report carries certificate {other:?}")),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlowBound {
    /// `φ <= 3`.
    AtMostThree,
    /// `φ < 4`.
    BelowFour,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowReport {
    pub tau: usize,
    pub phi_upper: Option<FlowBound>,
    /// Packing condition the bound rests on.
    pub basis: Option<String>,
}

/// Flow-index bounds implied by the packing number: four disjoint spanning
/// trees give `φ <= 3`, three give `φ < 4`.
pub fn flow_implications(g: &Graph) -> FlowReport {
    let tau = stp_number(g).tau;
    let (phi_upper, basis) = if tau >= 4 {
        (Some(FlowBound::AtMostThree), Some("tau >= 4".to_string()))
    } else if tau >= 3 {
        (Some(FlowBound::BelowFour), Some("tau >= 3".to_string()))
    } else {
        (None, None)
    };
    FlowReport { tau, phi_upper, basis }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SurfaceKind::Cylinder => "CYLINDER",
            SurfaceKind::Sphere => "SPHERE",
            SurfaceKind::OtherRevolution => "OTHER_REVOLUTION",
        })
    }
}

impl fmt::Display for RigidityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RigidityMode::BodyBar(d) => write!(f, "BODY_BAR({d})"),
            RigidityMode::Surface(kind) => write!(f, "SURFACE({kind})"),
        }
    }
}

impl fmt::Display for RigidityDecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RigidityDecision::Rigid => "RIGID",
            RigidityDecision::NotRigid => "NOT_RIGID",
            RigidityDecision::Unknown => "UNKNOWN",
        })
    }
}

fn edge_text(edges: &[Edge]) -> String {
    edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for RigidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mode={}", self.mode)?;
        writeln!(f, "decision={}", self.decision)?;
        writeln!(f, "required_trees={}", self.required_trees)?;
        match &self.certificate {
            None => {}
            Some(RigidityCertificate::Trees(trees)) => {
                for (i, t) in trees.iter().enumerate() {
                    writeln!(f, "tree {i}: {}", edge_text(t))?;
                }
            }
            Some(RigidityCertificate::TreeAndUnicyclic { tree, unicyclic }) => {
                writeln!(f, "tree: {}", edge_text(tree))?;
                writeln!(f, "unicyclic: {}", edge_text(unicyclic))?;
            }
            Some(RigidityCertificate::CompleteGraph) => writeln!(f, "certificate: complete graph")?,
            Some(RigidityCertificate::Partition(w)) => writeln!(f, "{w}")?,
            Some(RigidityCertificate::NoDecomposition { trees_examined }) => {
                writeln!(f, "no decomposition over {trees_examined} spanning trees")?
            }
        }
        Ok(())
    }
}

impl fmt::Display for FlowReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tau={}", self.tau)?;
        match self.phi_upper {
            Some(FlowBound::AtMostThree) => writeln!(f, "phi <= 3"),
            Some(FlowBound::BelowFour) => writeln!(f, "phi < 4"),
            None => writeln!(f, "no flow bound"),
        }
    }
}
