//! Simple undirected graphs on dense vertex indices with bitmask vertex sets.
//!
//! Vertices are `0..n`. Adjacency is stored as one bitmask row per vertex,
//! which keeps subset enumeration (tight cut search, perfect matching DP)
//! cheap at the intended scale of n ≤ 16.

use crate::error::{Error, Result};
use std::fmt;

/// Hard cap on graph order. Analysis operations are exhaustive and documented
/// for n ≤ 16; the cap leaves headroom for parsing slightly larger corpora
/// while keeping every 2^n table small.
pub const MAX_ORDER: usize = 20;

/// A set of vertices as a bitmask. Only meaningful for vertices < [`MAX_ORDER`].
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= 32);
        if n == 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn single(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    pub fn of(vs: &[usize]) -> VertexSet {
        vs.iter().fold(VertexSet::EMPTY, |s, &v| s.with(v))
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Complement relative to the first `n` vertices.
    pub fn complement(self, n: usize) -> VertexSet {
        VertexSet(Self::full(n).0 & !self.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Lowest-indexed member; panics on the empty set.
    pub fn lowest(self) -> usize {
        debug_assert!(!self.is_empty());
        self.0.trailing_zeros() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// An unordered vertex pair with the lower index first.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes endpoint order. Panics on a loop; simple graphs have none.
    pub fn new(a: usize, b: usize) -> Edge {
        assert!(a != b, "loops are not allowed");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn endpoint_set(self) -> VertexSet {
        VertexSet::single(self.u).with(self.v)
    }

    /// The other endpoint, given one of the two.
    pub fn other(self, x: usize) -> usize {
        debug_assert!(x == self.u || x == self.v);
        self.u + self.v - x
    }

    pub fn touches(self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// A finite simple undirected graph. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

impl Graph {
    /// The edgeless graph on `n` vertices. `n = 0` is allowed (the empty
    /// graph has the empty perfect matching).
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::argument(format!(
                "order {n} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::argument(format!(
                    "edge ({a},{b}) out of range for order {n}"
                )));
            }
            if a == b {
                return Err(Error::argument(format!("loop at vertex {a}")));
            }
            g.adj[a] |= 1 << b;
            g.adj[b] |= 1 << a;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u(), e.v())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// All edges in lexicographic order; the deterministic edge order used
    /// throughout classification and reports.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> u << u).iter() {
                if v > u {
                    out.push(Edge::new(u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Vertices outside `x` with at least one neighbor inside `x`.
    pub fn neighborhood_of_set(&self, x: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in x.iter() {
            out = out.union(self.neighbors(v));
        }
        out.difference(x)
    }

    /// The cut ∂(X): edges with exactly one end in `x`.
    pub fn boundary(&self, x: VertexSet) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in x.iter() {
            for v in self.neighbors(u).difference(x).iter() {
                out.push(Edge::new(u, v));
            }
        }
        out.sort_unstable();
        out
    }

    /// Induced subgraph on the complement of `s`, relabeled compactly.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<Graph> {
        Ok(self.delete_vertices_with_map(s)?.0)
    }

    /// Like [`delete_vertices`](Graph::delete_vertices) but also reports the
    /// old-to-new index map (`None` for deleted vertices).
    pub fn delete_vertices_with_map(&self, s: VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        if !s.is_subset_of(self.vertex_set()) {
            return Err(Error::argument(format!(
                "vertex set {s:?} not contained in 0..{}",
                self.n
            )));
        }
        let keep = s.complement(self.n);
        let mut map = vec![None; self.n];
        for (new, old) in keep.iter().enumerate() {
            map[old] = Some(new);
        }
        let mut g = Graph {
            n: keep.len(),
            adj: vec![0; keep.len()],
        };
        for old in keep.iter() {
            let new = map[old].unwrap();
            for w in self.neighbors(old).intersection(keep).iter() {
                g.adj[new] |= 1 << map[w].unwrap();
            }
        }
        Ok((g, map))
    }

    pub fn delete_vertex_pair(&self, a: usize, b: usize) -> Result<Graph> {
        if a == b {
            return Err(Error::argument("vertex pair must be distinct".to_string()));
        }
        self.delete_vertices(VertexSet::single(a).with(b))
    }

    /// A new graph with one extra vertex (index n) adjacent to `neighbors`.
    pub fn extend_with_vertex(&self, neighbors: VertexSet) -> Result<Graph> {
        if self.n + 1 > MAX_ORDER {
            return Err(Error::argument(format!(
                "order {} exceeds the supported maximum {MAX_ORDER}",
                self.n + 1
            )));
        }
        if !neighbors.is_subset_of(self.vertex_set()) {
            return Err(Error::argument(format!(
                "neighbor set {neighbors:?} not contained in 0..{}",
                self.n
            )));
        }
        let mut adj = self.adj.clone();
        adj.push(neighbors.0);
        for v in neighbors.iter() {
            adj[v] |= 1 << self.n;
        }
        Ok(Graph {
            n: self.n + 1,
            adj,
        })
    }

    /// The same graph minus one edge.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        if !self.contains_edge(e) {
            return Err(Error::argument(format!("edge {e:?} not in graph")));
        }
        let mut g = self.clone();
        g.adj[e.u()] &= !(1u32 << e.v());
        g.adj[e.v()] &= !(1u32 << e.u());
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A nonempty proper vertex subset of a specific graph; one side of a cut.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Shore(VertexSet);

impl Shore {
    pub fn new(g: &Graph, members: VertexSet) -> Result<Shore> {
        if !members.is_subset_of(g.vertex_set()) {
            return Err(Error::argument(format!(
                "shore {members:?} not contained in 0..{}",
                g.n()
            )));
        }
        let k = members.len();
        if k == 0 || k == g.n() {
            return Err(Error::argument(
                "shore must be a nonempty proper subset".to_string(),
            ));
        }
        Ok(Shore(members))
    }

    pub fn set(self) -> VertexSet {
        self.0
    }

    /// Nontrivial iff both sides have at least two vertices.
    pub fn is_nontrivial(self, g: &Graph) -> bool {
        let k = self.0.len();
        2 <= k && k + 2 <= g.n()
    }

    pub fn boundary(self, g: &Graph) -> Vec<Edge> {
        g.boundary(self.0)
    }
}

/// Shrinks the shore to a single new vertex adjacent to exactly N(X).
/// Parallel edges collapse and loops vanish, so the result stays simple.
/// Retained vertices keep their relative order; the contracted vertex gets
/// the last index.
pub fn contract_shore(g: &Graph, x: Shore) -> Result<Graph> {
    let set = x.set();
    let keep = set.complement(g.n());
    let mut map = vec![None; g.n()];
    for (new, old) in keep.iter().enumerate() {
        map[old] = Some(new);
    }
    let contracted = keep.len();
    let mut edges = Vec::new();
    for u in keep.iter() {
        for w in g.neighbors(u).iter() {
            if keep.contains(w) {
                if w > u {
                    edges.push((map[u].unwrap(), map[w].unwrap()));
                }
            } else {
                edges.push((map[u].unwrap(), contracted));
            }
        }
    }
    Graph::from_edges(contracted + 1, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family, FamilySpec};

    #[test]
    fn vertex_set_basics() {
        let s = VertexSet::of(&[0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3));
        assert!(!s.contains(1));
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.complement(6), VertexSet::of(&[1, 2, 4]));
        assert_eq!(s.lowest(), 0);
    }

    #[test]
    fn edge_count_is_half_degree_sum() {
        let g = generate(&FamilySpec::of_order(Family::Wheel, 6)).unwrap();
        let degree_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(g.edge_count() * 2, degree_sum);
    }

    #[test]
    fn delete_vertices_of_wheel_leaves_path() {
        // Removing the hub and one rim vertex from W6 leaves a path on 4 vertices.
        let g = generate(&FamilySpec::of_order(Family::Wheel, 6)).unwrap();
        let hub = g.vertices().find(|&v| g.degree(v) == 5).unwrap();
        let rim = g.neighbors(hub).lowest();
        let h = g.delete_vertex_pair(hub, rim).unwrap();
        assert_eq!(h.n(), 4);
        let mut deg = h.degree_sequence();
        deg.sort_unstable();
        assert_eq!(deg, vec![1, 1, 2, 2]);
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn delete_edge_of_k4_leaves_diamond() {
        // K4 minus an edge is a 4-cycle plus one chord: degrees 2,2,3,3.
        let g = generate(&FamilySpec::of_order(Family::Complete, 4)).unwrap();
        let h = g.delete_edge(Edge::new(0, 1)).unwrap();
        assert_eq!(h.edge_count(), 5);
        assert_eq!(h.degree_sequence(), vec![2, 2, 3, 3]);
    }

    #[test]
    fn delete_nothing_is_identity() {
        let g = generate(&FamilySpec::of_order(Family::Prism, 6)).unwrap();
        let h = g.delete_vertices(VertexSet::EMPTY).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn delete_unknown_vertex_is_an_error() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(g.delete_vertices(VertexSet::single(7)).is_err());
        assert!(g.delete_edge(Edge::new(0, 2)).is_err());
    }

    #[test]
    fn contract_triangle_of_prism_gives_k4() {
        // Prism vertices 0..3 and 3..6 are its two triangles.
        let g = generate(&FamilySpec::of_order(Family::Prism, 6)).unwrap();
        let tri = if g.has_edge(0, 1) && g.has_edge(1, 2) && g.has_edge(0, 2) {
            VertexSet::of(&[0, 1, 2])
        } else {
            VertexSet::of(&[3, 4, 5])
        };
        let h = contract_shore(&g, Shore::new(&g, tri).unwrap()).unwrap();
        let k4 = generate(&FamilySpec::of_order(Family::Complete, 4)).unwrap();
        assert!(crate::iso::are_isomorphic(&h, &k4));
    }

    #[test]
    fn contract_single_vertex_is_identity_up_to_relabeling() {
        let g = generate(&FamilySpec::of_order(Family::Wheel, 7)).unwrap();
        let h = contract_shore(&g, Shore::new(&g, VertexSet::single(2)).unwrap()).unwrap();
        assert!(crate::iso::are_isomorphic(&g, &h));
    }

    #[test]
    fn contract_three_consecutive_of_c6_gives_c4() {
        let g = generate(&FamilySpec::of_order(Family::Cycle, 6)).unwrap();
        let h = contract_shore(&g, Shore::new(&g, VertexSet::of(&[1, 2, 3])).unwrap()).unwrap();
        let c4 = generate(&FamilySpec::of_order(Family::Cycle, 4)).unwrap();
        assert!(crate::iso::are_isomorphic(&h, &c4));
    }

    #[test]
    fn contraction_orders_sum_to_n_plus_2() {
        let g = generate(&FamilySpec::of_order(Family::MoebiusLadder, 8)).unwrap();
        let x = Shore::new(&g, VertexSet::of(&[0, 1, 4])).unwrap();
        let xbar = Shore::new(&g, x.set().complement(g.n())).unwrap();
        let a = contract_shore(&g, x).unwrap();
        let b = contract_shore(&g, xbar).unwrap();
        assert_eq!(a.n() + b.n(), g.n() + 2);
    }

    #[test]
    fn empty_or_full_shore_is_an_error() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(Shore::new(&g, VertexSet::EMPTY).is_err());
        assert!(Shore::new(&g, VertexSet::full(4)).is_err());
    }

    #[test]
    fn boundary_is_the_crossing_edges() {
        let g = generate(&FamilySpec::of_order(Family::Cycle, 6)).unwrap();
        let b = g.boundary(VertexSet::of(&[1, 2, 3]));
        assert_eq!(b, vec![Edge::new(0, 1), Edge::new(3, 4)]);
    }
}
