//! Converting an arbitrary straight-line grammar to admissible form.

use slglab::Slg;

fn main() {
    let g: Slg = "S -> A b A E c\nA -> a B a\nB -> b\nE ->".parse().unwrap();
    let h = g.make_admissible().unwrap();
    println!("input  (size {}):\n{g}", g.size());
    println!("output (size {}, admissible={}):\n{h}", h.size(), h.is_admissible());
    assert_eq!(g.expand_start(), h.expand_start());
}
