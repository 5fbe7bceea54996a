//! RNA boosting: WRNA of the boosted string is an affine function of WRNA(u).

use slglab::boost::{gamma, rna_alpha, rna_beta};
use slglab::compress::lzd;
use slglab::rna::{wrna_value, MatchedAlphabet, DEFAULT_CAP};
use slglab::Slg;

fn main() {
    let g: Slg = "S -> X Y\nX -> a B\nY -> X b".parse().unwrap();
    let a: MatchedAlphabet = "a ~ A : 2\nb ~ B : 1".parse().unwrap();
    let u = g.expand_start();
    let base = wrna_value(&u, &a, DEFAULT_CAP).unwrap();
    println!("WRNA(u) = {base}");
    let r = rna_alpha(&g, &a).unwrap();
    let v = wrna_value(&r.text, r.alphabet.as_ref().unwrap(), DEFAULT_CAP).unwrap();
    println!("alpha: |v|={:>3} WRNA(v)={v} = 2*{base} + {}", r.text.len(), r.delta.unwrap());
    let r = rna_beta(&g, &a).unwrap();
    let v = wrna_value(&r.text, r.alphabet.as_ref().unwrap(), DEFAULT_CAP).unwrap();
    println!("beta:  |v|={:>3} WRNA(v)={v} = 4*{base} + {}", r.text.len(), r.delta.unwrap());
    let r = gamma(&g, &a).unwrap();
    let v = wrna_value(&r.text, r.alphabet.as_ref().unwrap(), DEFAULT_CAP).unwrap();
    let c0 = r.c0.unwrap();
    println!("gamma: |v|={:>3} WRNA(v)={v} = 2*{c0} + {base}; LZD size {}", r.text.len(), lzd(&r.text).1.size());
}
