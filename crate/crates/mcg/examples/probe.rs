use mcg::edge_class::classify_all_edges;
use mcg::families::{generate, Family, FamilySpec};
use mcg::harness::enumerate::graphs_of_order;
use mcg::solid::is_solid;
use mcg::structure::{is_brick, is_wheel};
use std::time::Instant;

fn main() {
    for (fam, n) in [
        (Family::MoebiusLadder, 8),
        (Family::MoebiusLadder, 12),
        (Family::Prism, 10),
    ] {
        let g = generate(&FamilySpec::of_order(fam, n)).unwrap();
        let t = Instant::now();
        let classes = classify_all_edges(&g).unwrap();
        let b_inv = classes.iter().filter(|c| c.b_invariant).count();
        let removable = classes.iter().filter(|c| c.removable).count();
        println!(
            "{fam:?}({n}): brick={} solid={:?} removable={removable} b_invariant={b_inv} ({:?})",
            is_brick(&g),
            is_solid(&g),
            t.elapsed()
        );
    }

    let t = Instant::now();
    for order in [7usize, 8] {
        let graphs = graphs_of_order(order);
        println!("order {order}: {} classes ({:?})", graphs.len(), t.elapsed());
        let t2 = Instant::now();
        let bricks: Vec<_> = graphs.iter().filter(|g| is_brick(g)).collect();
        println!("  bricks: {} ({:?})", bricks.len(), t2.elapsed());
        let t3 = Instant::now();
        let solid: Vec<_> = bricks
            .iter()
            .filter(|g| is_solid(g).unwrap())
            .collect();
        println!("  solid bricks: {} ({:?})", solid.len(), t3.elapsed());
        for g in &solid {
            let classes = classify_all_edges(g).unwrap();
            let b_inv = classes.iter().filter(|c| c.b_invariant).count();
            let all_sol = classes.iter().all(|c| !c.b_invariant || c.solitary);
            println!(
                "    solid brick n={} g6={} wheel={} b_inv={} all_solitary={}",
                g.n(),
                mcg::to_graph6(g),
                is_wheel(g),
                b_inv,
                all_sol
            );
        }
    }
}
