//! Connectivity and bipartiteness tests.

use crate::graph::{Graph, VertexSet};

/// Whether every vertex is reachable from every other. Graphs on 0 or 1
/// vertices count as connected.
pub fn is_connected(g: &Graph) -> bool {
    if g.n() <= 1 {
        return true;
    }
    connected_within(g, g.vertex_set())
}

/// Connectivity of the subgraph induced on `within` (true for ≤ 1 vertex).
pub fn connected_within(g: &Graph, within: VertexSet) -> bool {
    if within.len() <= 1 {
        return true;
    }
    let start = within.lowest();
    let mut seen = VertexSet::single(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier.iter() {
            next = next.union(g.neighbors(v).intersection(within));
        }
        frontier = next.difference(seen);
        seen = seen.union(next);
    }
    seen == within
}

/// Minimum number of vertices whose removal disconnects the graph;
/// n−1 for complete graphs. Exhaustive subset search, intended for n ≤ 16.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    assert!(n >= 2, "vertex connectivity needs at least two vertices");
    if !is_connected(g) {
        return 0;
    }
    // kappa <= min degree, and for a non-complete graph a cut set no larger
    // than the minimum degree always exists, so only a complete graph falls
    // through the loop.
    let bound = g.min_degree().min(n - 2);
    for size in 1..=bound {
        if cut_set_of_size_exists(g, size) {
            return size;
        }
    }
    n - 1
}

fn cut_set_of_size_exists(g: &Graph, size: usize) -> bool {
    let n = g.n();
    if size + 2 > n {
        return false;
    }
    subsets_of_size(n, size)
        .into_iter()
        .any(|s| !connected_within(g, s.complement(n)))
}

fn subsets_of_size(n: usize, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        if current.len() == k {
            out.push(VertexSet::of(current));
            return;
        }
        for v in start..n {
            current.push(v);
            rec(n, k, v + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 0, &mut current, &mut out);
    out
}

/// True iff the graph has no odd cycle.
pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut color = vec![None::<bool>; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for w in g.neighbors(v).iter() {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}
