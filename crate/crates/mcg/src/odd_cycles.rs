//! Enumeration of simple odd cycles.

use crate::graph::{Graph, VertexSet};

/// A simple cycle of odd length, stored canonically: the walk starts at the
/// cycle's lowest vertex and its second vertex is smaller than its last, so
/// each cycle appears exactly once regardless of rotation or reflection.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct OddCycle {
    vertices: Vec<usize>,
}

impl OddCycle {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::of(&self.vertices)
    }

    pub fn is_disjoint(&self, other: &OddCycle) -> bool {
        self.vertex_set().is_disjoint(other.vertex_set())
    }
}

/// Every simple odd cycle, sorted by length and then lexicographically by
/// canonical vertex walk.
pub fn enumerate_odd_cycles(g: &Graph) -> Vec<OddCycle> {
    odd_cycles_up_to(g, g.n())
}

/// Odd cycles on at most `max_len` vertices; the length cap keeps the
/// disjoint-pair search for solidity from enumerating near-Hamiltonian
/// cycles that can never pair.
pub fn odd_cycles_up_to(g: &Graph, max_len: usize) -> Vec<OddCycle> {
    let mut cycles = Vec::new();
    if max_len < 3 {
        return cycles;
    }
    let mut path = Vec::with_capacity(max_len);
    for root in g.vertices() {
        path.push(root);
        extend_cycle_search(
            g,
            root,
            max_len,
            &mut path,
            VertexSet::single(root),
            &mut cycles,
        );
        path.pop();
    }
    cycles.sort_unstable_by(|a, b| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
    cycles
}

fn extend_cycle_search(
    g: &Graph,
    root: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: VertexSet,
    out: &mut Vec<OddCycle>,
) {
    let last = *path.last().unwrap();
    if path.len() >= 3 && path.len() % 2 == 1 && g.has_edge(last, root) && path[1] < last {
        out.push(OddCycle {
            vertices: path.clone(),
        });
    }
    if path.len() == max_len {
        return;
    }
    // Internal vertices stay above the root, which makes the root the
    // cycle's minimum and kills rotations.
    for w in g.neighbors(last).iter() {
        if w > root && !on_path.contains(w) {
            path.push(w);
            extend_cycle_search(g, root, max_len, path, on_path.with(w), out);
            path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family, FamilySpec};

    #[test]
    fn bipartite_graphs_have_none() {
        let c6 = generate(&FamilySpec::of_order(Family::Cycle, 6)).unwrap();
        assert!(enumerate_odd_cycles(&c6).is_empty());
    }

    #[test]
    fn k4_has_four_triangles() {
        let k4 = generate(&FamilySpec::of_order(Family::Complete, 4)).unwrap();
        let cycles = enumerate_odd_cycles(&k4);
        assert_eq!(cycles.len(), 4);
        assert!(cycles.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn petersen_has_twelve_pentagons_and_no_triangles() {
        let g = generate(&FamilySpec::fixed(Family::Petersen)).unwrap();
        let cycles = enumerate_odd_cycles(&g);
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 0);
        assert_eq!(cycles.iter().filter(|c| c.len() == 5).count(), 12);
        // Girth 5 and no 7-cycles: the odd lengths present are 5 and 9.
        let lengths: std::collections::BTreeSet<usize> =
            cycles.iter().map(|c| c.len()).collect();
        assert_eq!(lengths, [5, 9].into_iter().collect());
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let g = generate(&FamilySpec::of_order(Family::Complete, 6)).unwrap();
        let cycles = enumerate_odd_cycles(&g);
        let mut seen = std::collections::HashSet::new();
        for c in &cycles {
            assert!(
                seen.insert(c.vertices().to_vec()),
                "cycle listed twice: {:?}",
                c.vertices()
            );
        }
        // Direct combinatorics: C(6,3) = 20 triangles and
        // C(6,5) * 4!/2 = 72 five-cycles.
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 20);
        assert_eq!(cycles.iter().filter(|c| c.len() == 5).count(), 72);
    }

    #[test]
    fn length_cap_is_respected() {
        let g = generate(&FamilySpec::of_order(Family::Complete, 6)).unwrap();
        let capped = odd_cycles_up_to(&g, 3);
        assert_eq!(capped.len(), 20);
        assert!(capped.iter().all(|c| c.len() == 3));
    }
}
