//! Alternating structure: symmetric differences of matchings, alternating
//! cycles, and open alternating paths.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::matching::Matching;

/// Which of the two matchings an edge of a symmetric difference came from.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum EdgeTag {
    First,
    Second,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ComponentKind {
    Path,
    Cycle,
}

/// One connected component of the edge-induced subgraph on M1 Δ M2.
///
/// `vertices` lists the component in walk order; edge i joins vertices i and
/// i+1, and a cycle closes with one more edge back to the start. Tags
/// alternate between the two matchings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlternatingComponent {
    pub kind: ComponentKind,
    pub vertices: Vec<usize>,
    pub tags: Vec<EdgeTag>,
}

impl AlternatingComponent {
    pub fn edge_count(&self) -> usize {
        self.tags.len()
    }

    pub fn is_even(&self) -> bool {
        self.edge_count() % 2 == 0
    }

    /// Path endpoints, in walk order.
    pub fn ends(&self) -> Option<(usize, usize)> {
        match self.kind {
            ComponentKind::Path => Some((
                *self.vertices.first().unwrap(),
                *self.vertices.last().unwrap(),
            )),
            ComponentKind::Cycle => None,
        }
    }
}

/// Connected components of M1 Δ M2, each an alternating path or an even
/// alternating cycle. Empty iff the matchings are equal.
///
/// Components are sorted by their lowest vertex; paths start at their
/// lower-indexed end and cycles at their lowest vertex, stepping first to
/// the lower-indexed neighbor.
pub fn symmetric_difference_components(
    m1: &Matching,
    m2: &Matching,
) -> Result<Vec<AlternatingComponent>> {
    if m1.host_order() != m2.host_order() {
        return Err(Error::argument(
            "matchings come from different host graphs".to_string(),
        ));
    }
    let n = m1.host_order();
    let mut tag_of = vec![Vec::<(usize, EdgeTag)>::new(); n];
    for &e in m1.edges() {
        if !m2.contains_edge(e) {
            tag_of[e.u()].push((e.v(), EdgeTag::First));
            tag_of[e.v()].push((e.u(), EdgeTag::First));
        }
    }
    for &e in m2.edges() {
        if !m1.contains_edge(e) {
            tag_of[e.u()].push((e.v(), EdgeTag::Second));
            tag_of[e.v()].push((e.u(), EdgeTag::Second));
        }
    }
    for adj in &mut tag_of {
        adj.sort_unstable_by_key(|&(w, _)| w);
    }

    // Each vertex carries at most one edge from either matching, so every
    // component is a path or a cycle with strictly alternating tags. Walk
    // paths from their ends first, then cycles from their lowest vertices.
    let mut visited = VertexSet::EMPTY;
    let mut components = Vec::new();
    for start in 0..n {
        if !visited.contains(start) && tag_of[start].len() == 1 {
            components.push(walk_component(
                &tag_of,
                start,
                ComponentKind::Path,
                &mut visited,
            ));
        }
    }
    for start in 0..n {
        if !visited.contains(start) && !tag_of[start].is_empty() {
            components.push(walk_component(
                &tag_of,
                start,
                ComponentKind::Cycle,
                &mut visited,
            ));
        }
    }
    components.sort_by_key(|c| *c.vertices.iter().min().unwrap());
    Ok(components)
}

fn walk_component(
    tag_of: &[Vec<(usize, EdgeTag)>],
    start: usize,
    kind: ComponentKind,
    visited: &mut VertexSet,
) -> AlternatingComponent {
    let mut vertices = vec![start];
    let mut tags = Vec::new();
    *visited = visited.with(start);
    let (mut current, mut incoming) = {
        let (w, t) = tag_of[start][0];
        tags.push(t);
        (w, t)
    };
    while current != start {
        *visited = visited.with(current);
        vertices.push(current);
        let next = tag_of[current]
            .iter()
            .find(|&&(w, t)| t != incoming && (!visited.contains(w) || w == start));
        match next {
            Some(&(w, t)) => {
                tags.push(t);
                incoming = t;
                current = w;
            }
            None => break,
        }
    }
    AlternatingComponent {
        kind,
        vertices,
        tags,
    }
}

/// Searches for a cycle whose edges lie alternately in `m` and outside `m`.
/// For a perfect matching this is empty exactly when the matching is the
/// graph's unique perfect matching.
pub fn find_alternating_cycle(g: &Graph, m: &Matching) -> Option<Vec<usize>> {
    // An alternating cycle traverses matched edges joined by unmatched edges.
    // Walk matched edge to matched edge, never revisiting a vertex, and close
    // the cycle with an unmatched edge back to the entry vertex.
    let partner = m.partner_map();
    for &first in m.edges() {
        // Entering `first` at u() fixes one traversal direction; the reverse
        // direction yields the same cycles.
        let entry = first.u();
        let exit = first.v();
        let mut path = vec![entry, exit];
        let mut on_path = VertexSet::single(entry).with(exit);
        if let Some(cycle) = extend_alternating_cycle(
            g,
            &partner,
            first,
            entry,
            exit,
            &mut path,
            &mut on_path,
        ) {
            return Some(cycle);
        }
    }
    None
}

fn extend_alternating_cycle(
    g: &Graph,
    partner: &[Option<usize>],
    first: Edge,
    entry: usize,
    exit: usize,
    path: &mut Vec<usize>,
    on_path: &mut VertexSet,
) -> Option<Vec<usize>> {
    for w in g.neighbors(exit).iter() {
        // The connecting edge must be unmatched.
        if partner[exit] == Some(w) {
            continue;
        }
        if w == entry && path.len() >= 4 {
            return Some(path.clone());
        }
        if on_path.contains(w) {
            continue;
        }
        let Some(p) = partner[w] else { continue };
        if on_path.contains(p) {
            continue;
        }
        // Only matched edges lexicographically after the first keep each
        // cycle discovered exactly once from its lowest matched edge.
        if Edge::new(w, p) < first {
            continue;
        }
        path.push(w);
        path.push(p);
        *on_path = on_path.with(w).with(p);
        if let Some(cycle) =
            extend_alternating_cycle(g, partner, first, entry, p, path, on_path)
        {
            return Some(cycle);
        }
        path.pop();
        path.pop();
        *on_path = on_path.without(w).without(p);
    }
    None
}

pub fn exists_alternating_cycle(g: &Graph, m: &Matching) -> bool {
    find_alternating_cycle(g, m).is_some()
}

/// Open alternating path reachability: a path from `x` to `y` that alternates
/// with respect to `m` and has unmatched edges at both ends (odd length).
///
/// For `x == y` this asks for an odd cycle `C` through `x` whose edges meet
/// `m` in exactly the perfect matching of `C - x`: both cycle edges at `x`
/// unmatched, alternating in between.
pub fn exists_open_alternating_path(g: &Graph, m: &Matching, x: usize, y: usize) -> bool {
    assert!(x < g.n() && y < g.n(), "vertices out of range");
    let partner = m.partner_map();
    // Walk unmatched edge first; after an unmatched edge into a vertex other
    // than the target, continue over that vertex's matched edge.
    let mut on_path = VertexSet::single(x);
    open_path_from(g, &partner, x, y, x, &mut on_path)
}

fn open_path_from(
    g: &Graph,
    partner: &[Option<usize>],
    start: usize,
    target: usize,
    at: usize,
    on_path: &mut VertexSet,
) -> bool {
    for w in g.neighbors(at).iter() {
        if partner[at] == Some(w) {
            continue; // next edge must be unmatched
        }
        if w == target && (target != start || on_path.len() >= 3) {
            return true;
        }
        if on_path.contains(w) {
            continue;
        }
        let Some(p) = partner[w] else { continue };
        if on_path.contains(p) || p == target {
            // The walk may only reach the target over an unmatched edge, and
            // entering it over a matched one would make it internal; a simple
            // path cannot end there afterwards.
            continue;
        }
        *on_path = on_path.with(w).with(p);
        if open_path_from(g, partner, start, target, p, on_path) {
            return true;
        }
        *on_path = on_path.without(w).without(p);
    }
    false
}
