//! Weight sets of 2-restricted irreducible modules and Weyl modules, and
//! the zero-weight criterion for a_n = 1.

use sp2n::reps::{has_zero_weight, minkowski_sum, twist_decompose, weight_set, ModuleKind};
use sp2n::weights::{delta, restricted_weights, Weight};

fn show(w: &Weight, kind: ModuleKind) {
    let set = weight_set(w, kind).expect("valid weight");
    let dominant: Vec<String> = set.dominant_members().iter().map(|m| m.to_string()).collect();
    println!(
        "{kind:>5} L({w}): {:>4} weights, zero {:<5} dominant [{}]",
        set.len(),
        set.contains_zero(),
        dominant.join(" ")
    );
}

fn main() {
    for w in restricted_weights(3) {
        show(&w, ModuleKind::Irreducible2);
    }
    println!();
    for v in [[0, 1], [1, 1], [2, 0]] {
        show(&Weight::new(v).unwrap(), ModuleKind::Weyl);
    }

    // a_n = 1: zero is a weight exactly when δ is even and at least 2n
    println!();
    for w in restricted_weights(4).into_iter().filter(|w| w.last() == 1) {
        let zero = has_zero_weight(&w, ModuleKind::Irreducible2).unwrap();
        println!("n=4 {w}: delta {:>2}, zero weight {zero}", delta(&w));
    }

    // Steinberg: the weights of L(3,1) are those of L(1,1) + 2 L(1,0)
    let w = Weight::new([3, 1]).unwrap();
    let parts = twist_decompose(&w).unwrap();
    println!("\n{w} = {:?}", parts.iter().map(|(j, p)| format!("2^{j}*({p})")).collect::<Vec<_>>());
    let mut acc = sp2n::weights::WeightSet::singleton_zero(2);
    for (j, p) in &parts {
        let scaled: Vec<_> = weight_set(p, ModuleKind::Irreducible2)
            .unwrap()
            .to_sorted_vec()
            .into_iter()
            .map(|e| {
                let c: Vec<i64> = e.coords().iter().map(|x| x << j).collect();
                sp2n::weights::EpsWeight::new(c).unwrap()
            })
            .collect();
        acc = minkowski_sum(&acc, &sp2n::weights::WeightSet::explicit(2, scaled).unwrap()).unwrap();
    }
    println!("|weights of L({w}) over G(2)| = {}", acc.len());
}
