//! Colored predecessor as an LZ78-compressed string: position x+1 of w_Y
//! holds the color of the predecessor of x.

use slglab::boost::lz78_hard_string;
use slglab::compress::lz78;
use slglab::gen;
use slglab::symbol::plain;

fn main() {
    let y = [(0, '0'), (3, '1'), (5, '0'), (11, '1')];
    let w = lz78_hard_string(&y, 16).unwrap();
    println!("w_Y = {}", plain(&w).unwrap());
    for x in [0usize, 4, 10, 15] {
        println!("pred color of {x:>2} = {}", w[x]);
    }
    let mut rng = gen::rng(3);
    for k in [8, 16, 32, 64] {
        let y = gen::run_length_keys(&mut rng, k);
        let (f, _) = lz78(&lz78_hard_string(&y, (k * k) as u64).unwrap());
        println!("k={k:>2}: {} phrases (6k = {})", f.len(), 6 * k);
    }
}
