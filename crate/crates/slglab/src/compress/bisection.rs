use std::collections::HashMap;

use crate::slg::Slg;
use crate::symbol::{Symbol, Terminal};

/// Bisection: split at the largest power of two strictly below the length,
/// one nonterminal per distinct substring of length at least two.
/// A length-1 input gives the unary rule `S -> a`.
pub fn bisection(u: &[Terminal]) -> Slg {
    assert!(!u.is_empty(), "bisection of the empty string");
    if u.len() == 1 {
        return Slg::single(u);
    }
    let mut memo: HashMap<&[Terminal], u32> = HashMap::new();
    let mut rules: Vec<Vec<Symbol>> = Vec::new();
    let root = build(u, &mut memo, &mut rules);
    let Symbol::N(start) = root else { unreachable!() };
    Slg::new(rules, start).expect("bisection output is acyclic")
}

fn build<'a>(s: &'a [Terminal], memo: &mut HashMap<&'a [Terminal], u32>, rules: &mut Vec<Vec<Symbol>>) -> Symbol {
    if s.len() == 1 {
        return Symbol::T(s[0]);
    }
    if let Some(&n) = memo.get(s) {
        return Symbol::N(n);
    }
    // largest power of two below the length
    let k = 1usize << (usize::BITS - 1 - (s.len() - 1).leading_zeros());
    let a = build(&s[..k], memo, rules);
    let b = build(&s[k..], memo, rules);
    let id = rules.len() as u32;
    rules.push(vec![a, b]);
    memo.insert(s, id);
    Symbol::N(id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::chars;

    #[test]
    fn split_points() {
        let g = bisection(&chars("abcde"));
        let len = g.lengths().unwrap();
        let first = match g.rhs(g.start())[0] {
            Symbol::N(m) => len[m as usize],
            Symbol::T(_) => 1,
        };
        assert_eq!(first, 4);
        assert!(g.is_dyadic());
    }

    #[test]
    fn examples() {
        assert_eq!(bisection(&chars("abab")).size(), 4);
        assert_eq!(bisection(&chars("aaaa")).size(), 4);
        let one = bisection(&chars("a"));
        assert_eq!(one.serialize(), "S -> a\n");
        for s in ["abcdefg", "aaaaaaaaaaa", "ab", "abc"] {
            let g = bisection(&chars(s));
            assert_eq!(g.expand_start(), chars(s));
            assert!(g.is_dyadic());
        }
    }
}
