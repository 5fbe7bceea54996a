//! Runs every compressor on a text and prints the grammar sizes.
//!
//!     cargo run --example compress -- "to be or not to be"

use slglab::compress::Algorithm;
use slglab::symbol::chars;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "abracadabra abracadabra abracadabra".into());
    let u = chars(&text);
    println!("|u| = {}", u.len());
    for alg in Algorithm::ALL {
        let g = alg.run(&u).expect("nonempty input");
        let st = g.stats().unwrap();
        println!("{:<11} size={:<4} nonterms={:<3} height={}", alg.name(), st.size, st.num_nonterminals, st.height);
    }
    println!();
    print!("{}", Algorithm::Sequential.run(&u).unwrap());
}
