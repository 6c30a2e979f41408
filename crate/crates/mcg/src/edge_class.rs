//! Per-edge predicates on matching covered graphs: removable, b-invariant,
//! and solitary, plus the per-vertex tallies they induce.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::matching::PmCounter;
use crate::structure::{brick_count, is_matching_covered, tight_cut_decomposition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    pub edge: Edge,
    /// Number of perfect matchings containing the edge.
    pub pm_count: u64,
    pub in_some_pm: bool,
    /// Deleting the edge leaves a matching covered graph.
    pub removable: bool,
    /// Removable with b(G−e) = b(G).
    pub b_invariant: bool,
    /// Contained in exactly one perfect matching.
    pub solitary: bool,
}

fn require_edge(g: &Graph, e: Edge) -> Result<()> {
    if g.contains_edge(e) {
        Ok(())
    } else {
        Err(Error::argument(format!("edge {e:?} not in graph")))
    }
}

/// Whether G−e is still matching covered. The caller guarantees a matching
/// covered host.
pub fn is_removable(g: &Graph, e: Edge) -> Result<bool> {
    require_edge(g, e)?;
    Ok(is_matching_covered(&g.delete_edge(e)?))
}

/// Whether e is removable and deleting it preserves the brick count.
/// Nonremovable edges answer false rather than erroring, which keeps the
/// implication "b-invariant implies removable" a total statement.
pub fn is_b_invariant(g: &Graph, e: Edge) -> Result<bool> {
    require_edge(g, e)?;
    if !is_removable(g, e)? {
        return Ok(false);
    }
    Ok(brick_count(&g.delete_edge(e)?)? == brick_count(g)?)
}

/// Contained in exactly one perfect matching.
pub fn is_solitary(g: &Graph, e: Edge) -> Result<bool> {
    require_edge(g, e)?;
    let remainder = g.vertex_set().difference(e.endpoint_set());
    Ok(PmCounter::new(g).count(remainder) == 1)
}

/// One record per edge in lexicographic edge order. The perfect matching
/// counter and b(G) are computed once and shared across the per-edge loop.
pub fn classify_all_edges(g: &Graph) -> Result<Vec<EdgeClassification>> {
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    let b = tight_cut_decomposition(g)?.brick_count;
    let mut counter = PmCounter::new(g);
    let full = g.vertex_set();
    let mut out = Vec::new();
    for edge in g.edges() {
        let pm_count = counter.count(full.difference(edge.endpoint_set()));
        let removable = is_matching_covered(&g.delete_edge(edge)?);
        let b_invariant = removable && brick_count(&g.delete_edge(edge)?)? == b;
        out.push(EdgeClassification {
            edge,
            pm_count,
            in_some_pm: pm_count >= 1,
            removable,
            b_invariant,
            solitary: pm_count == 1,
        });
    }
    Ok(out)
}

/// Per-vertex counts of incident edges failing removability or solitariness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct VertexTally {
    pub nonremovable_incident: usize,
    pub nonsolitary_incident: usize,
}

pub fn vertex_tallies(g: &Graph) -> Result<Vec<VertexTally>> {
    let classes = classify_all_edges(g)?;
    let mut tallies = vec![VertexTally::default(); g.n()];
    for c in &classes {
        for v in [c.edge.u(), c.edge.v()] {
            if !c.removable {
                tallies[v].nonremovable_incident += 1;
            }
            if !c.solitary {
                tallies[v].nonsolitary_incident += 1;
            }
        }
    }
    Ok(tallies)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family, FamilySpec};

    fn wheel(n: usize) -> Graph {
        generate(&FamilySpec::of_order(Family::Wheel, n)).unwrap()
    }

    fn hub(g: &Graph) -> usize {
        g.vertices().find(|&v| g.degree(v) == g.n() - 1).unwrap()
    }

    #[test]
    fn wheel_6_spokes_are_removable_b_invariant_solitary() {
        let g = wheel(6);
        let h = hub(&g);
        for e in g.edges() {
            if e.touches(h) {
                assert!(is_removable(&g, e).unwrap(), "spoke {e:?}");
                assert!(is_b_invariant(&g, e).unwrap(), "spoke {e:?}");
                assert!(is_solitary(&g, e).unwrap(), "spoke {e:?}");
            } else {
                assert!(!is_removable(&g, e).unwrap(), "rim {e:?}");
                assert!(!is_b_invariant(&g, e).unwrap(), "rim {e:?}");
                assert!(!is_solitary(&g, e).unwrap(), "rim {e:?}");
            }
        }
    }

    #[test]
    fn k4_has_no_removable_edge() {
        let g = generate(&FamilySpec::of_order(Family::Complete, 4)).unwrap();
        let classes = classify_all_edges(&g).unwrap();
        assert_eq!(classes.len(), 6);
        for c in &classes {
            assert!(c.in_some_pm);
            assert!(!c.removable);
            assert!(!c.b_invariant);
        }
    }

    #[test]
    fn wheel_8_spoke_preserves_brick_count() {
        let g = wheel(8);
        let h = hub(&g);
        let spoke = g.edges().into_iter().find(|e| e.touches(h)).unwrap();
        assert!(is_b_invariant(&g, spoke).unwrap());
        assert_eq!(brick_count(&g.delete_edge(spoke).unwrap()).unwrap(), 1);
    }

    #[test]
    fn petersen_edges_all_lie_in_some_pm() {
        let g = generate(&FamilySpec::fixed(Family::Petersen)).unwrap();
        let classes = classify_all_edges(&g).unwrap();
        assert_eq!(classes.len(), 15);
        for c in &classes {
            assert!(c.in_some_pm);
            assert_eq!(c.pm_count, 2);
        }
    }

    #[test]
    fn definition_chain_holds_on_samples() {
        for g in [
            wheel(6),
            generate(&FamilySpec::fixed(Family::C6Complement)).unwrap(),
            generate(&FamilySpec::of_order(Family::Complete, 6)).unwrap(),
        ] {
            for c in classify_all_edges(&g).unwrap() {
                assert!(!c.b_invariant || c.removable);
                assert!(!c.solitary || c.in_some_pm);
                assert_eq!(c.solitary, c.pm_count == 1);
            }
        }
    }

    #[test]
    fn wheel_6_vertex_tallies() {
        let g = wheel(6);
        let h = hub(&g);
        let tallies = vertex_tallies(&g).unwrap();
        for v in g.vertices() {
            if v == h {
                assert_eq!(tallies[v].nonremovable_incident, 0);
                assert_eq!(tallies[v].nonsolitary_incident, 0);
            } else {
                // Each rim vertex carries its two rim edges.
                assert_eq!(tallies[v].nonremovable_incident, 2);
                assert_eq!(tallies[v].nonsolitary_incident, 2);
            }
        }
    }

    #[test]
    fn solitary_is_defined_without_matching_covered_hosts() {
        // A path on 4 vertices is not matching covered, but solitariness of
        // its end edge is still well defined.
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(is_solitary(&p4, Edge::new(0, 1)).unwrap());
        assert!(!is_solitary(&p4, Edge::new(1, 2)).unwrap());
        assert!(classify_all_edges(&p4).is_err());
    }

    #[test]
    fn unknown_edge_errors() {
        let g = wheel(6);
        let missing = Edge::new(0, 2);
        if g.contains_edge(missing) {
            panic!("test assumes 0-2 is not a wheel edge");
        }
        assert!(is_removable(&g, missing).is_err());
        assert!(is_b_invariant(&g, missing).is_err());
    }
}
