use std::collections::HashMap;

use super::{compact, inline_single_use};
use crate::slg::Slg;
use crate::symbol::{Symbol, Terminal};

struct State {
    rules: Vec<Option<Vec<Symbol>>>,
    exp: Vec<Vec<Terminal>>,
}

impl State {
    fn new_rule(&mut self, rhs: Vec<Symbol>) -> u32 {
        let mut e = Vec::new();
        for s in &rhs {
            match s {
                Symbol::T(t) => e.push(*t),
                Symbol::N(m) => e.extend_from_slice(&self.exp[*m as usize]),
            }
        }
        self.rules.push(Some(rhs));
        self.exp.push(e);
        (self.rules.len() - 1) as u32
    }

    /// Two non-overlapping occurrences of one pair, as (rule, index) positions.
    fn repeated_pair(&self) -> Option<((usize, usize), (usize, usize))> {
        let mut first: HashMap<(Symbol, Symbol), (usize, usize)> = HashMap::new();
        for (ri, r) in self.rules.iter().enumerate() {
            let Some(r) = r else { continue };
            for i in 0..r.len().saturating_sub(1) {
                let key = (r[i], r[i + 1]);
                match first.get(&key) {
                    Some(&(fr, fi)) if fr != ri || i >= fi + 2 => return Some(((fr, fi), (ri, i))),
                    Some(_) => {}
                    None => {
                        first.insert(key, (ri, i));
                    }
                }
            }
        }
        None
    }

    fn whole_pair_rule(&self, (r, i): (usize, usize)) -> bool {
        r != 0 && i == 0 && self.rules[r].as_ref().unwrap().len() == 2
    }

    fn replace_at(&mut self, (r, i): (usize, usize), n: u32) {
        self.rules[r].as_mut().unwrap().splice(i..i + 2, [Symbol::N(n)]);
    }

    fn reduce(&mut self) {
        loop {
            if let Some((a, b)) = self.repeated_pair() {
                if self.whole_pair_rule(a) {
                    self.replace_at(b, a.0 as u32);
                } else if self.whole_pair_rule(b) {
                    self.replace_at(a, b.0 as u32);
                } else {
                    let r = self.rules[a.0].as_ref().unwrap();
                    let m = self.new_rule(vec![r[a.1], r[a.1 + 1]]);
                    // b comes after a, so replacing it first keeps a's index valid
                    self.replace_at(b, m);
                    self.replace_at(a, m);
                }
                continue;
            }
            if !inline_single_use(&mut self.rules, 0) {
                break;
            }
        }
    }
}

/// Sequential compression: append the longest prefix matching a secondary
/// nonterminal (or one terminal), then remove repeated pairs and single-use
/// rules.
pub fn sequential(u: &[Terminal]) -> Slg {
    let mut st = State { rules: vec![Some(Vec::new())], exp: vec![Vec::new()] };
    let mut pos = 0;
    while pos < u.len() {
        let rest = &u[pos..];
        let mut best: Option<(usize, u32)> = None;
        for (i, r) in st.rules.iter().enumerate().skip(1) {
            if r.is_none() {
                continue;
            }
            let e = &st.exp[i];
            if e.len() > best.map_or(1, |b| b.0) && rest.starts_with(e) {
                best = Some((e.len(), i as u32));
            }
        }
        let (len, sym) = match best {
            Some((l, n)) => (l, Symbol::N(n)),
            None => (1, Symbol::T(u[pos])),
        };
        st.rules[0].as_mut().unwrap().push(sym);
        pos += len;
        st.reduce();
    }
    compact(st.rules, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::chars;

    #[test]
    fn small_examples() {
        assert_eq!(sequential(&chars("ab")).serialize(), "S -> a b\n");
        let g = sequential(&chars("abab"));
        assert_eq!(g.serialize(), "S -> R1 R1\nR1 -> a b\n");
    }

    #[test]
    fn round_trips() {
        for s in ["aaaaaaaaa", "abcabcabcabc", "abracadabra", "a", "xyzzyxyzzy"] {
            assert_eq!(sequential(&chars(s)).expand_start(), chars(s), "{s}");
        }
    }
}
