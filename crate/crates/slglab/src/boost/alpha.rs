use super::{names_of, pair, prepare, terminal_sentinel_free, BoostResult};
use crate::error::{pre, Result};
use crate::slg::Slg;
use crate::symbol::{Symbol, Terminal};

/// The α construction.
///
/// `G'` has `N_i -> A $_i B` for `rhs(N_i) = A B`, and the text is
/// `⊙_i exp'(N_i) #_{2i-1} exp'(N_i) #_{2i}`. `delta` is the 0-based start
/// of the first copy of `exp'(S)`, so `u[j] = text[delta + 2j - 2]` for
/// 1-based `j`.
pub fn alpha(g: &Slg) -> Result<BoostResult> {
    terminal_sentinel_free(g)?;
    let (order, rank) = prepare(g)?;
    let rules: Vec<Vec<Symbol>> = (0..g.num_nonterminals() as u32)
        .map(|n| {
            let (a, b) = pair(g, n);
            vec![a, Symbol::T(Terminal::Dollar(rank[n as usize] as u32)), b]
        })
        .collect();
    let aux = Slg::with_names(rules, names_of(g), g.start())?;
    let len = g.lengths()?;
    let total: u64 = len.iter().sum();
    let mut text = Vec::with_capacity(4 * total as usize);
    let mut delta = 0;
    for (i, &n) in order.iter().enumerate() {
        let e = aux.expand(Symbol::N(n))?;
        if n == g.start() {
            delta = text.len() as u64;
        }
        let i = i as u32 + 1;
        text.extend_from_slice(&e);
        text.push(Terminal::Hash(2 * i - 1));
        text.extend_from_slice(&e);
        text.push(Terminal::Hash(2 * i));
    }
    Ok(BoostResult {
        text,
        ordering: order,
        delta: Some(delta),
        c0: None,
        positions: None,
        aux,
        aux2: None,
        alphabet: None,
    })
}

/// Bounded expansion of `x` relative to the index set `index_set` (1-based
/// ranks in the canonical ordering). In the output `Symbol::N(i)` stands for
/// `M_i`.
pub fn bexp(g: &Slg, index_set: &[usize], x: Symbol) -> Result<Vec<Symbol>> {
    let (_, rank) = prepare(g)?;
    let member = membership(g, index_set)?;
    if let Symbol::N(n) = x {
        if n as usize >= g.num_nonterminals() {
            return Err(crate::Error::UnknownSymbol);
        }
    }
    let mut out = Vec::new();
    bexp_into(g, &rank, &member, x, &mut out);
    Ok(out)
}

fn membership(g: &Slg, index_set: &[usize]) -> Result<Vec<bool>> {
    let mut member = vec![false; g.num_nonterminals() + 1];
    for &i in index_set {
        if i == 0 || i > g.num_nonterminals() {
            return pre(format!("index {i} out of range 1..={}", g.num_nonterminals()));
        }
        member[i] = true;
    }
    Ok(member)
}

fn bexp_into(g: &Slg, rank: &[usize], member: &[bool], x: Symbol, out: &mut Vec<Symbol>) {
    // explicit stack; each entry is a symbol still to be emitted
    let mut stack = vec![x];
    while let Some(s) = stack.pop() {
        match s {
            Symbol::T(_) => out.push(s),
            Symbol::N(n) => {
                let i = rank[n as usize];
                if member[i] {
                    out.push(Symbol::N(i as u32));
                } else {
                    let (a, b) = pair(g, n);
                    stack.push(b);
                    stack.push(Symbol::T(Terminal::Dollar(i as u32)));
                    stack.push(a);
                }
            }
        }
    }
}

/// An intermediate grammar of a global algorithm on an α string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GIGrammar {
    /// Sorted 1-based ranks.
    pub index_set: Vec<usize>,
    /// Nonterminal 0 is `S`, nonterminal `k` is `M_{index_set[k - 1]}`.
    pub grammar: Slg,
}

/// `G_I`: `M_i -> bexp(X) $_i bexp(Y)` for `i` in `I` and
/// `S -> ⊙_i bexp(N_i) #_{2i-1} bexp(N_i) #_{2i}`.
pub fn build_gi(g: &Slg, index_set: &[usize]) -> Result<GIGrammar> {
    let (order, rank) = prepare(g)?;
    let member = membership(g, index_set)?;
    let mut set: Vec<usize> = index_set.to_vec();
    set.sort_unstable();
    set.dedup();
    let mut local = vec![0u32; g.num_nonterminals() + 1];
    for (k, &i) in set.iter().enumerate() {
        local[i] = k as u32 + 1;
    }
    let remap = |v: Vec<Symbol>| -> Vec<Symbol> {
        v.into_iter()
            .map(|s| match s {
                Symbol::N(i) => Symbol::N(local[i as usize]),
                t => t,
            })
            .collect()
    };
    let bx = |x: Symbol| {
        let mut out = Vec::new();
        bexp_into(g, &rank, &member, x, &mut out);
        remap(out)
    };
    let mut rules = vec![Vec::new()];
    let mut names = vec!["S".to_string()];
    for &i in &set {
        let (a, b) = pair(g, order[i - 1]);
        let mut r = bx(a);
        r.push(Symbol::T(Terminal::Dollar(i as u32)));
        r.extend(bx(b));
        rules.push(r);
        names.push(format!("M{i}"));
    }
    for (i, &n) in order.iter().enumerate() {
        let b = bx(Symbol::N(n));
        let i = i as u32 + 1;
        rules[0].extend_from_slice(&b);
        rules[0].push(Symbol::T(Terminal::Hash(2 * i - 1)));
        rules[0].extend_from_slice(&b);
        rules[0].push(Symbol::T(Terminal::Hash(2 * i)));
    }
    Ok(GIGrammar { index_set: set, grammar: Slg::with_names(rules, names, 0)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::{chars, tokens};

    fn g0() -> Slg {
        "S -> N1 N1\nN1 -> a b".parse().unwrap()
    }

    #[test]
    fn g0_alpha() {
        let r = alpha(&g0()).unwrap();
        assert_eq!(r.text.len(), 24);
        assert_eq!(r.delta, Some(8));
        assert!(tokens(&r.text).starts_with("a $_1 b #_1 a $_1 b #_2 "));
        let u = chars("abab");
        for j in 1..=u.len() {
            assert_eq!(r.text[8 + 2 * j - 2], u[j - 1]);
        }
    }

    #[test]
    fn single_rule_alpha() {
        let g: Slg = "S -> a b".parse().unwrap();
        let r = alpha(&g).unwrap();
        assert_eq!(tokens(&r.text), "a $_1 b #_1 a $_1 b #_2");
        // first copy; the second copy at 4 satisfies the identity as well
        assert_eq!(r.delta, Some(0));
        for d in [0, 4] {
            assert_eq!((r.text[d], r.text[d + 2]), (Terminal::Char('a'), Terminal::Char('b')));
        }
    }

    #[test]
    fn bexp_examples() {
        let g = g0();
        let n1 = Symbol::N(1);
        let e = bexp(&g, &[], n1).unwrap();
        assert_eq!(e, vec![Symbol::ch('a'), Symbol::T(Terminal::Dollar(1)), Symbol::ch('b')]);
        assert_eq!(bexp(&g, &[1, 2], n1).unwrap(), vec![Symbol::N(1)]);
        assert_eq!(bexp(&g, &[1, 2], Symbol::N(0)).unwrap(), vec![Symbol::N(2)]);
        let s = bexp(&g, &[1], Symbol::N(0)).unwrap();
        assert_eq!(s, vec![Symbol::N(1), Symbol::T(Terminal::Dollar(2)), Symbol::N(1)]);
        assert!(bexp(&g, &[3], n1).is_err());
        let w = alpha(&g).unwrap().text;
        for set in [&[][..], &[1], &[2], &[1, 2]] {
            assert_eq!(build_gi(&g, set).unwrap().grammar.expand_start(), w);
        }
    }

    #[test]
    fn rejects_non_admissible() {
        let g: Slg = "S -> a b c".parse().unwrap();
        assert_eq!(alpha(&g), Err(crate::Error::NotAdmissible));
    }
}
