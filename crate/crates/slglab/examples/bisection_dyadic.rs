//! Bisection counts distinct dyadic blocks, and never loses to a dyadic grammar.

use slglab::compress::bisection;
use slglab::gen;
use slglab::symbol::chars;

fn main() {
    let u = chars("abababbbabababbb");
    let g = bisection(&u);
    print!("{g}");
    println!("size {} for |u| = {}", g.size(), u.len());

    let mut rng = gen::rng(1);
    for _ in 0..5 {
        let d = gen::dyadic(&mut rng, 5, 2, &gen::letters(2));
        let b = bisection(&d.expand_start());
        println!("dyadic |G| = {:>3}  |Bisection| = {:>3}", d.size(), b.size());
    }
}
