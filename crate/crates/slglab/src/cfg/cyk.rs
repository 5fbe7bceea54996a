//! CYK membership after binarization, ε-removal and unit closure.

use std::collections::HashMap;

use super::Cfg;
use crate::error::{Error, Result};
use crate::symbol::{Symbol, Terminal};

pub const DEFAULT_CYK_CAP: usize = 5000;

/// A normalized grammar: binary rules `A -> B C`, terminal rules `A -> a`,
/// and for every nonterminal the set of nonterminals reaching it by unit
/// rules (itself included).
struct Normal {
    n: usize,
    binary_by_left: Vec<Vec<(usize, usize)>>,
    term: HashMap<Terminal, Vec<usize>>,
    up: Vec<Vec<usize>>,
    start: usize,
    start_nullable: bool,
}

fn normalize(g: &Cfg) -> Normal {
    let mut n = g.num_nonterminals();
    let mut proxy: HashMap<Terminal, usize> = HashMap::new();
    // binarized rules over nonterminal ids; terminal rules kept apart
    let mut bin: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut term: Vec<(usize, Terminal)> = Vec::new();
    for (h, body) in g.rules() {
        let ids: Vec<usize> = body
            .iter()
            .map(|s| match s {
                Symbol::N(m) => *m as usize,
                Symbol::T(t) => *proxy.entry(*t).or_insert_with(|| {
                    n += 1;
                    term.push((n - 1, *t));
                    n - 1
                }),
            })
            .collect();
        let mut head = *h as usize;
        let mut rest = ids.as_slice();
        while rest.len() > 2 {
            n += 1;
            bin.push((head, vec![rest[0], n - 1]));
            head = n - 1;
            rest = &rest[1..];
        }
        bin.push((head, rest.to_vec()));
    }
    let mut null = vec![false; n];
    let mut changed = true;
    while changed {
        changed = false;
        for (h, body) in &bin {
            if !null[*h] && body.iter().all(|&b| null[b]) {
                null[*h] = true;
                changed = true;
            }
        }
    }
    let mut binary_by_left = vec![Vec::new(); n];
    let mut unit: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (h, body) in &bin {
        match body[..] {
            [b, c] => {
                binary_by_left[b].push((c, *h));
                if null[b] {
                    unit[c].push(*h);
                }
                if null[c] {
                    unit[b].push(*h);
                }
            }
            [b] => unit[b].push(*h),
            _ => {}
        }
    }
    // up[a] = every nonterminal deriving a by unit steps
    let up = (0..n)
        .map(|a| {
            let mut seen = vec![false; n];
            let mut stack = vec![a];
            seen[a] = true;
            let mut out = Vec::new();
            while let Some(x) = stack.pop() {
                out.push(x);
                for &y in &unit[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            out
        })
        .collect();
    let mut tmap: HashMap<Terminal, Vec<usize>> = HashMap::new();
    for (p, t) in term {
        tmap.entry(t).or_default().push(p);
    }
    Normal { n, binary_by_left, term: tmap, up, start: g.start() as usize, start_nullable: null[g.start() as usize] }
}

/// Whether `u` is in `L(g)`, with the default length cap.
pub fn cyk_member(g: &Cfg, u: &[Terminal]) -> Result<bool> {
    cyk_member_capped(g, u, DEFAULT_CYK_CAP)
}

pub fn cyk_member_capped(g: &Cfg, u: &[Terminal], cap: usize) -> Result<bool> {
    if u.len() > cap {
        return Err(Error::TooLong { len: u.len(), cap });
    }
    if let Some(t) = u.iter().find(|t| !g.terminals().contains(t)) {
        return Err(Error::NotInAlphabet(t.to_string()));
    }
    let nf = normalize(g);
    if u.is_empty() {
        return Ok(nf.start_nullable);
    }
    let words = nf.n.div_ceil(64);
    let len = u.len();
    // cell (i, l): substring starting at i of length l + 1
    let cell = |i: usize, l: usize| (l * len + i) * words;
    let mut table = vec![0u64; len * len * words];
    let close = |set: &mut [u64], a: usize| {
        for &b in &nf.up[a] {
            set[b / 64] |= 1 << (b % 64);
        }
    };
    for (i, t) in u.iter().enumerate() {
        let c = cell(i, 0);
        if let Some(ps) = nf.term.get(t) {
            for &p in ps {
                close(&mut table[c..c + words], p);
            }
        }
    }
    let mut cur = vec![0u64; words];
    for l in 1..len {
        for i in 0..len - l {
            cur.iter_mut().for_each(|w| *w = 0);
            for s in 0..l {
                let left = cell(i, s);
                let right = cell(i + s + 1, l - s - 1);
                for w in 0..words {
                    let mut bits = table[left + w];
                    while bits != 0 {
                        let b = w * 64 + bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        for &(c, h) in &nf.binary_by_left[b] {
                            if table[right + c / 64] >> (c % 64) & 1 == 1 && cur[h / 64] >> (h % 64) & 1 == 0 {
                                close(&mut cur, h);
                            }
                        }
                    }
                }
            }
            let c = cell(i, l);
            table[c..c + words].copy_from_slice(&cur);
        }
    }
    let top = cell(0, len - 1);
    Ok(table[top + nf.start / 64] >> (nf.start % 64) & 1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::chars;

    #[test]
    fn small_grammar() {
        let g: Cfg = "S -> A B\nA -> a\nB -> b".parse().unwrap();
        assert!(cyk_member(&g, &chars("ab")).unwrap());
        assert!(!cyk_member(&g, &chars("ba")).unwrap());
        assert!(!cyk_member(&g, &[]).unwrap());
        assert!(matches!(cyk_member(&g, &chars("ax")), Err(Error::NotInAlphabet(_))));
    }

    #[test]
    fn epsilon_and_units() {
        let g: Cfg = "S -> a S b | T\nT -> _ | c".parse().unwrap();
        for (s, want) in [("", true), ("c", true), ("ab", true), ("acb", true), ("aabb", true), ("acbb", false)] {
            assert_eq!(cyk_member(&g, &chars(s)).unwrap(), want, "{s}");
        }
        let cap = cyk_member_capped(&g, &chars("aaa"), 2);
        assert_eq!(cap, Err(Error::TooLong { len: 3, cap: 2 }));
    }

    #[test]
    fn agrees_with_enumeration() {
        let g: Cfg = "S -> S S | a S b | _ | c A\nA -> A A a | b".parse().unwrap();
        let lang = g.language_up_to(6);
        let alphabet = chars("abc");
        let mut all = vec![Vec::new()];
        for _ in 0..6 {
            let next: Vec<Vec<Terminal>> = all
                .iter()
                .filter(|s: &&Vec<Terminal>| s.len() == all.last().unwrap().len())
                .flat_map(|s| alphabet.iter().map(move |&c| [s.as_slice(), &[c]].concat()))
                .collect();
            all.extend(next);
        }
        for s in &all {
            assert_eq!(cyk_member(&g, s).unwrap(), lang.contains(s), "{s:?}");
        }
    }
}
