//! CFG membership on boosted strings: u is in L(Γ) iff w is in L(Γ').

use slglab::boost::{alpha, beta};
use slglab::cfg::{cyk_member, gamma_prime_alpha, gamma_prime_beta, Cfg};
use slglab::Slg;

fn main() {
    let g: Slg = "S -> N1 N1\nN1 -> a b".parse().unwrap();
    // balanced a/b words
    let gamma: Cfg = "S -> a S b S | b S a S | _".parse().unwrap();
    let odd: Cfg = "S -> a S | b S | a".parse().unwrap();
    for (label, c) in [("balanced", &gamma), ("ends in a", &odd)] {
        let u = g.expand_start();
        let ga = gamma_prime_alpha(c, &g).unwrap();
        let gb = gamma_prime_beta(c, &g).unwrap();
        println!(
            "{label:<10} u:{} alpha:{} (|Γ'|={}) beta:{} (|Γ'|={})",
            cyk_member(c, &u).unwrap(),
            cyk_member(&ga, &alpha(&g).unwrap().text).unwrap(),
            ga.size(),
            cyk_member(&gb, &beta(&g).unwrap().text).unwrap(),
            gb.size()
        );
    }
}
