//! Maximum matching, perfect matching existence, enumeration, and counting.
//!
//! Everything here runs on vertex bitmasks of the host graph, so queries on
//! induced subgraphs (deletions) never rebuild a graph. Exhaustive methods
//! are intended for n ≤ 16.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};

/// A set of edges of a host graph of known order, no two sharing an endpoint.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matching {
    host_order: usize,
    edges: Vec<Edge>,
    covered: VertexSet,
}

impl Matching {
    /// Validates that the edges belong to `g` and share no endpoint.
    pub fn new(g: &Graph, mut edges: Vec<Edge>) -> Result<Matching> {
        let mut covered = VertexSet::EMPTY;
        for &e in &edges {
            if !g.contains_edge(e) {
                return Err(Error::argument(format!("edge {e:?} not in graph")));
            }
            if !covered.is_disjoint(e.endpoint_set()) {
                return Err(Error::argument(format!(
                    "edges are not disjoint at {e:?}"
                )));
            }
            covered = covered.union(e.endpoint_set());
        }
        edges.sort_unstable();
        Ok(Matching {
            host_order: g.n(),
            edges,
            covered,
        })
    }

    pub fn empty(g: &Graph) -> Matching {
        Matching {
            host_order: g.n(),
            edges: Vec::new(),
            covered: VertexSet::EMPTY,
        }
    }

    pub fn host_order(&self) -> usize {
        self.host_order
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self) -> VertexSet {
        self.covered
    }

    pub fn covers(&self, v: usize) -> bool {
        self.covered.contains(v)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Perfect iff it covers every vertex of its host.
    pub fn is_perfect(&self) -> bool {
        self.covered == VertexSet::full(self.host_order)
    }

    /// The matched partner of `v`, if covered.
    pub fn partner(&self, v: usize) -> Option<usize> {
        self.edges
            .iter()
            .find(|e| e.touches(v))
            .map(|e| e.other(v))
    }

    /// Matched partner per vertex.
    pub fn partner_map(&self) -> Vec<Option<usize>> {
        let mut map = vec![None; self.host_order];
        for e in &self.edges {
            map[e.u()] = Some(e.v());
            map[e.v()] = Some(e.u());
        }
        map
    }
}

/// Memoized "does the induced subgraph on this vertex set have a perfect
/// matching" oracle. One cache serves every subset query on the same graph.
pub struct PmCache<'g> {
    g: &'g Graph,
    memo: Vec<u8>, // 0 unknown, 1 no, 2 yes
}

impl<'g> PmCache<'g> {
    pub fn new(g: &'g Graph) -> PmCache<'g> {
        PmCache {
            g,
            memo: vec![0; 1usize << g.n()],
        }
    }

    pub fn has_pm(&mut self, set: VertexSet) -> bool {
        if set.is_empty() {
            return true;
        }
        match self.memo[set.0 as usize] {
            1 => return false,
            2 => return true,
            _ => {}
        }
        let answer = if set.len() % 2 == 1 {
            false
        } else {
            let u = set.lowest();
            let rest = set.without(u);
            self.g
                .neighbors(u)
                .intersection(rest)
                .iter()
                .any(|v| self.has_pm(rest.without(v)))
        };
        self.memo[set.0 as usize] = if answer { 2 } else { 1 };
        answer
    }
}

/// Memoized perfect matching counter over vertex subsets.
pub struct PmCounter<'g> {
    g: &'g Graph,
    memo: Vec<u64>, // u64::MAX = unknown
}

impl<'g> PmCounter<'g> {
    pub fn new(g: &'g Graph) -> PmCounter<'g> {
        PmCounter {
            g,
            memo: vec![u64::MAX; 1usize << g.n()],
        }
    }

    pub fn count(&mut self, set: VertexSet) -> u64 {
        if set.is_empty() {
            return 1;
        }
        if set.len() % 2 == 1 {
            return 0;
        }
        let known = self.memo[set.0 as usize];
        if known != u64::MAX {
            return known;
        }
        let u = set.lowest();
        let rest = set.without(u);
        let total = self
            .g
            .neighbors(u)
            .intersection(rest)
            .iter()
            .map(|v| self.count(rest.without(v)))
            .sum();
        self.memo[set.0 as usize] = total;
        total
    }
}

/// True iff some matching covers every vertex. The graph on zero vertices
/// has the empty perfect matching, and odd orders never do.
pub fn has_perfect_matching(g: &Graph) -> bool {
    if g.n() % 2 == 1 {
        return false;
    }
    PmCache::new(g).has_pm(g.vertex_set())
}

/// Number of perfect matchings of the whole graph.
pub fn count_perfect_matchings(g: &Graph) -> u64 {
    PmCounter::new(g).count(g.vertex_set())
}

/// Number of perfect matchings containing `e`: the perfect matching count of
/// the graph minus both endpoints of `e`.
pub fn count_pm_containing(g: &Graph, e: Edge) -> Result<u64> {
    if !g.contains_edge(e) {
        return Err(Error::argument(format!("edge {e:?} not in graph")));
    }
    Ok(PmCounter::new(g).count(g.vertex_set().difference(e.endpoint_set())))
}

/// A maximum-cardinality matching, computed by subset dynamic programming.
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.n();
    let size = 1usize << n;
    let mut dp = vec![0u8; size];
    for s in 1..size {
        let u = (s as u32).trailing_zeros() as usize;
        let rest = s & (s - 1);
        let mut best = dp[rest];
        for v in g.neighbors(u).intersection(VertexSet(rest as u32)).iter() {
            best = best.max(1 + dp[rest & !(1usize << v)]);
        }
        dp[s] = best;
    }

    let mut edges = Vec::new();
    let mut s = (size - 1) as u32;
    while s != 0 {
        let u = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        if dp[s as usize] == dp[rest as usize] {
            s = rest;
            continue;
        }
        for v in g.neighbors(u).intersection(VertexSet(rest)).iter() {
            let after = rest & !(1u32 << v);
            if dp[s as usize] == 1 + dp[after as usize] {
                edges.push(Edge::new(u, v));
                s = after;
                break;
            }
        }
    }
    Matching::new(g, edges).expect("dp extraction yields a valid matching")
}

/// Extracts one perfect matching of the induced subgraph on `set`, choosing
/// the lowest feasible neighbor at every step. `None` when no perfect
/// matching exists.
pub fn find_pm_on(g: &Graph, set: VertexSet) -> Option<Matching> {
    let mut cache = PmCache::new(g);
    if !cache.has_pm(set) {
        return None;
    }
    let mut remaining = set;
    let mut edges = Vec::new();
    while !remaining.is_empty() {
        let u = remaining.lowest();
        let rest = remaining.without(u);
        let v = g
            .neighbors(u)
            .intersection(rest)
            .iter()
            .find(|&v| cache.has_pm(rest.without(v)))
            .expect("feasible set must extend");
        edges.push(Edge::new(u, v));
        remaining = rest.without(v);
    }
    Some(Matching::new(g, edges).expect("extracted edges form a matching"))
}

/// Streams every perfect matching exactly once, in the deterministic order
/// given by always matching the lowest uncovered vertex and trying its
/// neighbors in increasing index order. Infeasible branches are pruned with
/// a [`PmCache`].
pub fn perfect_matchings(g: &Graph) -> PerfectMatchings<'_> {
    PerfectMatchings {
        g,
        cache: PmCache::new(g),
        covered: VertexSet::EMPTY,
        chosen: Vec::new(),
        stack: Vec::new(),
        just_emitted: false,
        done: false,
    }
}

pub struct PerfectMatchings<'g> {
    g: &'g Graph,
    cache: PmCache<'g>,
    covered: VertexSet,
    chosen: Vec<Edge>,
    stack: Vec<Frame>,
    just_emitted: bool,
    done: bool,
}

struct Frame {
    u: usize,
    candidates: VertexSet,
    taken: Option<usize>,
}

impl PerfectMatchings<'_> {
    /// Advance the top frame to its next feasible candidate, undoing the
    /// current one first. False when the frame is exhausted.
    fn retry_top(&mut self) -> bool {
        let frame = match self.stack.last_mut() {
            Some(f) => f,
            None => return false,
        };
        if let Some(v) = frame.taken.take() {
            self.covered = self
                .covered
                .difference(VertexSet::single(frame.u).with(v));
            self.chosen.pop();
        }
        while !frame.candidates.is_empty() {
            let v = frame.candidates.lowest();
            frame.candidates = frame.candidates.without(v);
            let residual = VertexSet::full(self.g.n())
                .difference(self.covered)
                .difference(VertexSet::single(frame.u).with(v));
            if self.cache.has_pm(residual) {
                self.covered = self.covered.with(frame.u).with(v);
                self.chosen.push(Edge::new(frame.u, v));
                frame.taken = Some(v);
                return true;
            }
        }
        false
    }

    fn backtrack(&mut self) -> bool {
        loop {
            if self.stack.is_empty() {
                return false;
            }
            if self.retry_top() {
                return true;
            }
            self.stack.pop();
        }
    }
}

impl Iterator for PerfectMatchings<'_> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.done {
            return None;
        }
        if self.just_emitted {
            self.just_emitted = false;
            if !self.backtrack() {
                self.done = true;
                return None;
            }
        }
        let full = VertexSet::full(self.g.n());
        loop {
            if self.covered == full {
                self.just_emitted = true;
                return Some(
                    Matching::new(self.g, self.chosen.clone())
                        .expect("search state is a valid matching"),
                );
            }
            let u = full.difference(self.covered).lowest();
            self.stack.push(Frame {
                u,
                candidates: self.g.neighbors(u).difference(self.covered),
                taken: None,
            });
            if !self.retry_top() {
                self.stack.pop();
                if !self.backtrack() {
                    self.done = true;
                    return None;
                }
            }
        }
    }
}
