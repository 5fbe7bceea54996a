//! Parity range-counting answer strings and their small grammars.

use slglab::boost::{answer_grammar, answer_string, PointSet};
use slglab::gen;
use slglab::symbol::plain;

fn main() {
    let p = PointSet::new(4, &[(1, 2), (2, 4), (3, 1), (4, 3)]).unwrap();
    let a = answer_string(&p);
    for row in plain(&a).unwrap().as_bytes().chunks(4) {
        println!("{}", std::str::from_utf8(row).unwrap());
    }
    let mut rng = gen::rng(2);
    for m in [8, 16, 32, 64] {
        let p = gen::point_set(&mut rng, m);
        let g = answer_grammar(&p).unwrap();
        let st = g.stats().unwrap();
        println!("m={m:>2}: |A(P)|={:>4} size={:>4} height={}", m * m, st.size, st.height);
    }
}
