//! Graph isomorphism testing by color refinement plus backtracking search.
//!
//! Exhaustive and intended for n ≤ 12; the refinement prunes hard enough that
//! corpus deduplication at order 8 stays fast.

use crate::graph::Graph;
use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

/// Stable vertex colors under iterated neighborhood refinement.
///
/// Color ids are assigned in sorted key order each round, so isomorphic
/// graphs receive identical color multisets and corresponding vertices
/// receive equal colors.
pub fn refined_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n)
        .map(|v| {
            let tri: usize = g
                .neighbors(v)
                .iter()
                .map(|w| g.neighbors(v).intersection(g.neighbors(w)).len())
                .sum();
            g.degree(v) * (n * n + 1) + tri / 2
        })
        .collect();
    let mut distinct = count_distinct(&colors);
    loop {
        let mut keys: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nc: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
            nc.sort_unstable();
            keys.push((colors[v], nc));
        }
        let mut ids: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        let mut sorted: Vec<&(usize, Vec<usize>)> = keys.iter().collect();
        sorted.sort();
        for k in sorted {
            let next = ids.len();
            ids.entry(k).or_insert(next);
        }
        let new_colors: Vec<usize> = keys.iter().map(|k| ids[k]).collect();
        let new_distinct = ids.len();
        if new_distinct == distinct {
            return new_colors;
        }
        colors = new_colors;
        distinct = new_distinct;
    }
}

fn count_distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// A cheap isomorphism-invariant hash used to bucket candidates before the
/// exact test. Isomorphic graphs always collide; unequal keys prove
/// non-isomorphism.
pub fn invariant_key(g: &Graph) -> u64 {
    invariant_key_from(g, &refined_colors(g))
}

/// Same hash, reusing precomputed refinement colors.
pub fn invariant_key_from(g: &Graph, colors: &[usize]) -> u64 {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    let mut h = DefaultHasher::new();
    g.n().hash(&mut h);
    g.edge_count().hash(&mut h);
    sorted.hash(&mut h);
    h.finish()
}

/// Exhaustive isomorphism test with refinement pruning.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.n() == 0 {
        return true;
    }
    are_isomorphic_with(g, &refined_colors(g), h, &refined_colors(h))
}

/// Isomorphism test on graphs whose refinement colors are already known;
/// corpus deduplication calls this in a loop against stored representatives.
pub fn are_isomorphic_with(g: &Graph, cg: &[usize], h: &Graph, ch: &[usize]) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut sg = cg.to_vec();
    let mut sh = ch.to_vec();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return false;
    }

    // Map vertices of g in order of ascending color class size; candidates in
    // h are the unused vertices of the same color, checked edge-for-edge
    // against everything mapped so far.
    let mut class_size = vec![0usize; n];
    for v in 0..n {
        class_size[v] = cg.iter().filter(|&&c| c == cg[v]).count();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[v], cg[v], v));

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_mapping(g, h, cg, ch, &order, 0, &mut mapping, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend_mapping(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for w in 0..h.n() {
        if used[w] || ch[w] != cg[u] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&a| {
            let b = mapping[a];
            g.has_edge(u, a) == h.has_edge(w, b)
        });
        if !consistent {
            continue;
        }
        mapping[u] = w;
        used[w] = true;
        if extend_mapping(g, h, cg, ch, order, depth + 1, mapping, used) {
            return true;
        }
        mapping[u] = usize::MAX;
        used[w] = false;
    }
    false
}
