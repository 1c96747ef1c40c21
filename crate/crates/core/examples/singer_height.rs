//! Singer heights Si(n) for small n, with the witness sets and the element
//! of Sp_2n(2) that attains them.
//!
//! ```text
//! cargo run --example singer_height -- 16
//! ```

use sp2n::elements::{max_singer_element, singer_height, singer_height_oracle};

fn main() {
    let max: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(16);
    println!("{:>4} {:>3}  {:<16} element", "n", "Si", "witness");
    for n in 1..=max {
        let si = singer_height(n).expect("n >= 1");
        let g = max_singer_element(n).expect("n >= 1");
        println!("{n:>4} {:>3}  {:<16} {g}", si.value, format!("{:?}", si.witness));
    }

    // the exhaustive search rules out four parts at n = 12
    let twelve = singer_height_oracle(12).expect("n >= 1");
    println!("\nexhaustive Si(12) = {} via {:?}", twelve.value, twelve.witness);
}
