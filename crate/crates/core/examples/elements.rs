//! Semisimple elements in block form: the graph Γ(g), its singular
//! vertices and the eigenvalue orders on the module L(ω_n).

use sp2n::elements::{
    enumerate_elements, gamma_graph, has_eigenvalue_one_omega_n, omega_n_eigenvalue_orders, singer_index_element,
    SemisimpleElement,
};

fn main() {
    for spec in ["1:3:-;2:5:-", "3:7:+", "1:3:-;1:3:-;1:1:+", "4:17:-", "2:5:-;2:15:+"] {
        match spec.parse::<SemisimpleElement>() {
            Ok(g) => {
                let graph = gamma_graph(&g);
                println!(
                    "{spec:<20} order {:<4} edges {:?} singular {:?} orders on L(omega_n) {:?}",
                    g.order().unwrap(),
                    graph.edges,
                    graph.singular,
                    omega_n_eigenvalue_orders(&g).unwrap()
                );
            }
            Err(e) => println!("{spec:<20} rejected: {e}"),
        }
    }

    for n in 1..=5 {
        let all = enumerate_elements(n, 10_000).unwrap();
        let fixed = all.iter().filter(|g| has_eigenvalue_one_omega_n(g)).count();
        let top = all.iter().map(singer_index_element).max().unwrap_or(0);
        println!("n={n}: {} classes of block data, {fixed} fix a vector of L(omega_n), max Si(g) = {top}", all.len());
    }
}
