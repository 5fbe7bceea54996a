//! The α construction: every global algorithm, Sequential and Sequitur
//! compress the boosted string to exactly 7|V| symbols.

use slglab::boost::{alpha, build_gi};
use slglab::compress::{run_global, sequential, sequitur, GlobalStrategy};
use slglab::gen::{self, GrammarGen};
use slglab::symbol::tokens;

fn main() {
    let g = GrammarGen::new(6, 3).sample_exact(&mut gen::rng(7), 6);
    print!("G:\n{g}");
    let b = alpha(&g).unwrap();
    let v = g.num_nonterminals();
    println!("|w| = {} (4 * total expansion), delta = {}", b.text.len(), b.delta.unwrap());
    println!("w = {}", tokens(&b.text));
    for alg in GlobalStrategy::ALL {
        println!("{:<8} {}", alg.name(), run_global(&b.text, alg).size());
    }
    println!("{:<8} {}", "seq", sequential(&b.text).size());
    println!("{:<8} {}", "sequitur", sequitur(&b.text).size());
    println!("7|V| = {}", 7 * v);
    let full = build_gi(&g, &(1..=v).collect::<Vec<_>>()).unwrap();
    let out = run_global(&b.text, GlobalStrategy::RePair);
    println!("RePair output isomorphic to G_{{1..|V|}}: {}", out.is_isomorphic(&full.grammar));
}
