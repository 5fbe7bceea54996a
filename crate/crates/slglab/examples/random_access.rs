//! Random access into a grammar-compressed string and into an LZ78 parse.

use slglab::compress::{lz78, Lz78Index};
use slglab::symbol::chars;
use slglab::Slg;

fn main() {
    // 2^21 characters from 21 rules
    let mut src = String::from("S -> N20 N20\n");
    for i in (2..=20).rev() {
        src += &format!("N{i} -> N{j} N{j}\n", j = i - 1);
    }
    src += "N1 -> a b\n";
    let big: Slg = src.parse().unwrap();
    let n = big.stats().unwrap().expansion_length;
    println!("|exp(S)| = {n} from {} rules", big.num_nonterminals());
    for pos in [1, 2, n / 2, n] {
        println!("  position {pos}: {}", big.random_access(pos).unwrap());
    }

    let u = chars("abaababaabaababaababa");
    let (f, _) = lz78(&u);
    let ix = Lz78Index::new(&f);
    let back: String = (1..=u.len()).map(|p| ix.get(p).unwrap().to_string()).collect();
    println!("lz78: {} phrases, read back {back}", f.len());
}
