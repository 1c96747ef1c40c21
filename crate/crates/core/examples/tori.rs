//! Maximal tori of Sp_2n(2) and which restricted modules have a fixed
//! vector on each of them.

use sp2n::criteria::torus_trivial;
use sp2n::tori::{enumerate_shapes, singer_index, torus_order};
use sp2n::weights::restricted_weights;

fn main() {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let shapes = enumerate_shapes(n).expect("n >= 1");
    println!("{} maximal tori of Sp_{}(2)", shapes.len(), 2 * n);
    for s in &shapes {
        println!("  {:<12} order {:<6} Singer index {}", s.to_string(), torus_order(s), singer_index(s));
    }

    println!("\nfixed vector on each torus (y = yes, . = no)");
    let header: Vec<String> = shapes.iter().map(|s| format!("{:>10}", s.to_string())).collect();
    println!("{:<10}{}", "omega", header.concat());
    for w in restricted_weights(n) {
        let row: String = shapes
            .iter()
            .map(|s| {
                let v = torus_trivial(&w, s).expect("restricted");
                format!("{:>10}", if v.is_yes() { "y" } else { "." })
            })
            .collect();
        println!("{:<10}{row}", w.to_string());
    }
}
