//! Matching covered graphs, tight cuts, the tight cut decomposition, and
//! brick / brace / wheel recognition.

use crate::connectivity::{is_bipartite, is_connected, vertex_connectivity};
use crate::error::{Error, Result};
use crate::graph::{contract_shore, Edge, Graph, Shore, VertexSet};
use crate::matching::{perfect_matchings, PmCache};

/// Connected, at least two vertices, and every edge in some perfect matching.
pub fn is_matching_covered(g: &Graph) -> bool {
    if g.n() < 2 || !is_connected(g) {
        return false;
    }
    let mut cache = PmCache::new(g);
    let full = g.vertex_set();
    g.edges()
        .into_iter()
        .all(|e| cache.has_pm(full.difference(e.endpoint_set())))
}

fn crossings(shore: VertexSet, pm: &[Edge]) -> usize {
    pm.iter()
        .filter(|e| shore.contains(e.u()) != shore.contains(e.v()))
        .count()
}

/// Every perfect matching meets ∂(X) in exactly one edge.
/// The caller guarantees a matching covered host.
pub fn is_tight_cut(g: &Graph, shore: Shore) -> bool {
    let set = shore.set();
    perfect_matchings(g).all(|m| crossings(set, m.edges()) == 1)
}

/// All nontrivial tight shores in increasing bitmask order. Both sides of
/// each tight cut appear, each as its own shore.
///
/// Only odd-cardinality subsets can be tight: a perfect matching crossing a
/// shore exactly once covers an odd number of its vertices.
pub fn nontrivial_tight_shores(g: &Graph) -> Vec<Shore> {
    let n = g.n();
    let pms: Vec<Vec<Edge>> = perfect_matchings(g).map(|m| m.edges().to_vec()).collect();
    let mut shores = Vec::new();
    for bits in 1u32..VertexSet::full(n).0 {
        let set = VertexSet(bits);
        let k = set.len();
        if k % 2 == 0 || k < 2 || k + 2 > n {
            continue;
        }
        if pms.iter().all(|pm| crossings(set, pm) == 1) {
            shores.push(Shore::new(g, set).expect("scan stays in range"));
        }
    }
    shores
}

/// The first nontrivial tight shore in bitmask order, or `None` exactly when
/// the graph is a brick or brace.
pub fn find_nontrivial_tight_cut(g: &Graph) -> Option<Shore> {
    let n = g.n();
    let pms: Vec<Vec<Edge>> = perfect_matchings(g).map(|m| m.edges().to_vec()).collect();
    for bits in 1u32..VertexSet::full(n).0 {
        let set = VertexSet(bits);
        let k = set.len();
        if k % 2 == 0 || k < 2 || k + 2 > n {
            continue;
        }
        if pms.iter().all(|pm| crossings(set, pm) == 1) {
            return Some(Shore::new(g, set).expect("scan stays in range"));
        }
    }
    None
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum LeafKind {
    Brick,
    Brace,
}

impl LeafKind {
    pub fn name(self) -> &'static str {
        match self {
            LeafKind::Brick => "brick",
            LeafKind::Brace => "brace",
        }
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionLeaf {
    pub graph: Graph,
    pub kind: LeafKind,
}

/// Which side of the chosen cut was shrunk for the recorded recursion step.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ContractedSide {
    Shore,
    Complement,
}

#[derive(Clone, Debug)]
pub struct TraceStep {
    /// Order of the graph the cut was found in.
    pub order: usize,
    /// The chosen shore, in that graph's labeling.
    pub shore: Vec<usize>,
    pub side: ContractedSide,
}

#[derive(Clone, Debug)]
pub struct DecompositionResult {
    pub leaves: Vec<DecompositionLeaf>,
    pub brick_count: usize,
    pub trace: Vec<TraceStep>,
}

/// Repeatedly shrinks both sides of a nontrivial tight cut until every piece
/// is a brick or a brace, choosing the lowest-bitmask tight shore at every
/// step. `brick_count` is b(G); by the decomposition uniqueness theorem it
/// does not depend on the choices.
pub fn tight_cut_decomposition(g: &Graph) -> Result<DecompositionResult> {
    decompose_with(g, &mut |_, _| 0)
}

/// Decomposition with a pluggable choice of tight cut: `chooser` receives
/// the current graph and its nontrivial tight shores and returns an index.
pub fn decompose_with(
    g: &Graph,
    chooser: &mut dyn FnMut(&Graph, &[Shore]) -> usize,
) -> Result<DecompositionResult> {
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    let mut leaves = Vec::new();
    let mut trace = Vec::new();
    decompose_rec(g, chooser, &mut leaves, &mut trace)?;
    let brick_count = leaves.iter().filter(|l| l.kind == LeafKind::Brick).count();
    Ok(DecompositionResult {
        leaves,
        brick_count,
        trace,
    })
}

fn decompose_rec(
    g: &Graph,
    chooser: &mut dyn FnMut(&Graph, &[Shore]) -> usize,
    leaves: &mut Vec<DecompositionLeaf>,
    trace: &mut Vec<TraceStep>,
) -> Result<()> {
    debug_assert!(
        is_matching_covered(g),
        "contractions of a tight cut must stay matching covered"
    );
    let shores = nontrivial_tight_shores(g);
    if shores.is_empty() {
        let kind = if is_bipartite(g) {
            LeafKind::Brace
        } else {
            LeafKind::Brick
        };
        leaves.push(DecompositionLeaf {
            graph: g.clone(),
            kind,
        });
        return Ok(());
    }
    let choice = chooser(g, &shores);
    let shore = shores[choice % shores.len()];
    let complement = Shore::new(g, shore.set().complement(g.n()))?;

    trace.push(TraceStep {
        order: g.n(),
        shore: shore.set().to_vec(),
        side: ContractedSide::Shore,
    });
    decompose_rec(&contract_shore(g, shore)?, chooser, leaves, trace)?;

    trace.push(TraceStep {
        order: g.n(),
        shore: shore.set().to_vec(),
        side: ContractedSide::Complement,
    });
    decompose_rec(&contract_shore(g, complement)?, chooser, leaves, trace)
}

/// b(G): the number of bricks among the decomposition leaves.
pub fn brick_count(g: &Graph) -> Result<usize> {
    Ok(tight_cut_decomposition(g)?.brick_count)
}

/// The three-connectivity characterization of bricks: 3-connected and still
/// perfectly matchable after deleting any two distinct vertices.
pub fn is_brick(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 || n % 2 != 0 {
        return false;
    }
    if g.min_degree() < 3 || vertex_connectivity(g) < 3 {
        return false;
    }
    let mut cache = PmCache::new(g);
    let full = g.vertex_set();
    for u in 0..n {
        for v in u + 1..n {
            if !cache.has_pm(full.without(u).without(v)) {
                return false;
            }
        }
    }
    true
}

/// Wheel recognition: K4 at order 4; otherwise exactly one universal vertex
/// whose removal leaves a spanning cycle.
pub fn is_wheel(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 {
        return false;
    }
    if n == 4 {
        return g.edge_count() == 6;
    }
    let hubs: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == n - 1).collect();
    if hubs.len() != 1 {
        return false;
    }
    let rim = match g.delete_vertices(VertexSet::single(hubs[0])) {
        Ok(h) => h,
        Err(_) => return false,
    };
    rim.vertices().all(|v| rim.degree(v) == 2) && is_connected(&rim)
}
