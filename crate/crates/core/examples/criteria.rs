//! The eigenvalue-1 verdicts for a few highest weights, with the results
//! they rest on.

use sp2n::criteria::{abelian_all, element_has_one, p49_classify, singer_cycle_has_one, unisingular};
use sp2n::elements::SemisimpleElement;
use sp2n::weights::{restricted_weights, Weight};

fn main() {
    println!("{:<8} {:<13} {:<13} singer-cycle", "omega", "unisingular", "abelian");
    for w in restricted_weights(3) {
        let u = unisingular(&w).unwrap();
        let a = abelian_all(&w).unwrap();
        println!(
            "{:<8} {:<13} {:<13} {}",
            w.to_string(),
            format!("{} {}", u.decision, u.citations.join(",")),
            a.decision.to_string(),
            singer_cycle_has_one(&w).unwrap()
        );
    }

    let g: SemisimpleElement = "1:3:-;2:5:-".parse().unwrap();
    println!("\ng = {g}");
    for w in restricted_weights(3) {
        let v = element_has_one(&w, &g).unwrap();
        println!("  L({w}): {} {:?}", v.decision, v.citations);
    }
    for v in [[4, 0, 0], [1, 0, 2], [0, 2, 0]] {
        let w = Weight::new(v).unwrap();
        println!("  {w}: {}", serde_json::to_string(&p49_classify(&w, &g).unwrap()).unwrap());
    }
}
