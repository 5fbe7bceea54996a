//! Weighted RNA folding with a witness, checked against exhaustive search.

use slglab::rna::{rna, weighted_to_unweighted, wrna, wrna_exhaustive, MatchedAlphabet};
use slglab::symbol::chars;

fn main() {
    let a: MatchedAlphabet = "a ~ A : 3\nb ~ B : 1\nc ~ C : 2".parse().unwrap();
    let u = chars("abcCBaAcbBCa");
    let r = wrna(&u, &a).unwrap();
    println!("WRNA = {} (exhaustive {})", r.value, wrna_exhaustive(&u, &a).unwrap());
    for (i, j) in r.pairs.unwrap() {
        println!("  {}@{i} ~ {}@{j}", u[i], u[j]);
    }
    let rep = weighted_to_unweighted(&u, &a).unwrap();
    println!("RNA of the repeated string ({} symbols) = {}", rep.len(), rna(&rep, &a).unwrap().value);
}
