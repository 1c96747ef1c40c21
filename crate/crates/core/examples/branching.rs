//! Restricting SL_2n-modules to Sp_2n, and which real semisimple elements
//! of SL_N(q) and SU_N(q) can miss eigenvalue 1.

use sp2n::branching::{exterior_factors, real_by_order_sl, real_by_order_su, real_element_verdict, restrict_to_c, LinearWeight};

fn main() {
    let big_n = 8;
    for k in 1..big_n {
        let lambda = LinearWeight::fundamental(big_n, k).unwrap();
        let factors: Vec<String> = exterior_factors(k, big_n / 2).unwrap().iter().map(|w| w.to_string()).collect();
        let verdict = real_element_verdict(&lambda);
        println!(
            "exterior power {k} of SL_{big_n}: restricts to {}, factors [{}], {:?}",
            restrict_to_c(&lambda).unwrap(),
            factors.join(" "),
            verdict.outcome
        );
    }

    let lambda: LinearWeight = "1,0,2,0,0,1,0".parse().unwrap();
    println!("\n{lambda} restricts to {}", restrict_to_c(&lambda).unwrap());

    let q = 2;
    let sl: Vec<u64> = (1..40).filter(|&o| o % 2 == 1 && real_by_order_sl(o, q).unwrap()).collect();
    let su: Vec<u64> = (1..40).filter(|&o| o % 2 == 1 && real_by_order_su(o, q).unwrap()).collect();
    println!("odd orders below 40 of real elements, SL(2): {sl:?}");
    println!("odd orders below 40 of real elements, SU(2): {su:?}");
}
