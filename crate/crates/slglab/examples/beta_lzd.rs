//! The β construction: LZD parses it into exactly 3|V| phrases.

use slglab::boost::beta;
use slglab::compress::lzd;
use slglab::symbol::tokens;
use slglab::Slg;

fn main() {
    let g: Slg = "S -> N1 N2\nN1 -> a b\nN2 -> N1 c".parse().unwrap();
    let b = beta(&g).unwrap();
    println!("w = {}", tokens(&b.text));
    let (f, h) = lzd(&b.text);
    for p in f.split(&b.text) {
        println!("  | {}", tokens(p));
    }
    println!("phrases={} (3|V| = {}), size={}", f.len(), 3 * g.num_nonterminals(), h.size());
    let pos = b.positions.unwrap();
    let name = g.name(b.ordering[pos.len() - 1]);
    println!("characters of exp({name}) sit at {:?}", pos[pos.len() - 1]);
}
