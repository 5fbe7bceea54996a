//! LZ78 and LZD factorizations and their grammars.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::slg::Slg;
use crate::symbol::{Symbol, Terminal};

/// A factor of an LZD phrase.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    /// 1-based index of an earlier phrase.
    Phrase(usize),
    Char(Terminal),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhraseSource {
    /// Earlier phrase (0 = empty) extended by one character.
    Lz78 { parent: usize, ch: Terminal },
    /// Two greedy factors; the second is absent at the end of the input.
    Lzd { first: Part, second: Option<Part> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Phrase {
    pub start: usize,
    pub len: usize,
    pub source: PhraseSource,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Factorization {
    pub phrases: Vec<Phrase>,
}

impl Factorization {
    pub fn len(&self) -> usize {
        self.phrases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phrases.is_empty()
    }

    /// The phrases as slices of `u`.
    pub fn split<'a>(&self, u: &'a [Terminal]) -> Vec<&'a [Terminal]> {
        self.phrases.iter().map(|p| &u[p.start..p.start + p.len]).collect()
    }
}

/// LZ78 parsing.
///
/// The grammar has `N0 -> ε`, one rule `Ni -> Nparent c` per phrase and
/// `S -> N1 ... Nz`, so its size is exactly `3z`. A final phrase that
/// repeats an earlier one gets its own rule with the same definition.
pub fn lz78(u: &[Terminal]) -> (Factorization, Slg) {
    let mut child: HashMap<(usize, Terminal), usize> = HashMap::new();
    // trie node i (i >= 1) is phrase i
    let mut node_parent = vec![0usize];
    let mut node_char: Vec<Option<Terminal>> = vec![None];
    let mut f = Factorization::default();
    let mut pos = 0;
    while pos < u.len() {
        let start = pos;
        let mut node = 0;
        while pos < u.len() {
            match child.get(&(node, u[pos])) {
                Some(&c) => {
                    node = c;
                    pos += 1;
                }
                None => break,
            }
        }
        let source = if pos < u.len() {
            let id = node_parent.len();
            child.insert((node, u[pos]), id);
            node_parent.push(node);
            node_char.push(Some(u[pos]));
            pos += 1;
            PhraseSource::Lz78 { parent: node, ch: u[pos - 1] }
        } else {
            PhraseSource::Lz78 { parent: node_parent[node], ch: node_char[node].unwrap() }
        };
        f.phrases.push(Phrase { start, len: pos - start, source });
    }

    let z = f.len();
    // rule 0 = S, rule 1 = N0, rule 1 + i = Ni
    let mut rules = vec![Vec::with_capacity(z), Vec::new()];
    let mut names = vec!["S".to_string(), "N0".to_string()];
    for (i, p) in f.phrases.iter().enumerate() {
        let PhraseSource::Lz78 { parent, ch } = p.source else { unreachable!() };
        rules.push(vec![Symbol::N(1 + parent as u32), Symbol::T(ch)]);
        names.push(format!("N{}", i + 1));
        rules[0].push(Symbol::N(2 + i as u32));
    }
    let g = Slg::with_names(rules, names, 0).expect("lz78 grammar is acyclic");
    (f, g)
}

/// Random access into an LZ78-compressed string by binary search over the
/// phrase boundaries and a walk up the phrase trie.
pub struct Lz78Index {
    ends: Vec<usize>,
    phrase_node: Vec<usize>,
    parent: Vec<usize>,
    ch: Vec<Terminal>,
    depth: Vec<usize>,
}

impl Lz78Index {
    pub fn new(f: &Factorization) -> Lz78Index {
        let mut ends = Vec::with_capacity(f.len());
        let mut phrase_node = Vec::with_capacity(f.len());
        let mut parent = vec![0];
        let mut ch = vec![Terminal::Char('\0')];
        let mut depth = vec![0];
        let mut end = 0;
        for (i, p) in f.phrases.iter().enumerate() {
            let PhraseSource::Lz78 { parent: par, ch: c } = p.source else {
                panic!("not an LZ78 factorization")
            };
            end += p.len;
            ends.push(end);
            if parent.len() == i + 1 && p.len == depth[par] + 1 && (i + 1 < f.len() || is_new(&parent, &ch, par, c)) {
                parent.push(par);
                ch.push(c);
                depth.push(p.len);
                phrase_node.push(i + 1);
            } else {
                let node = (1..parent.len())
                    .find(|&n| parent[n] == par && ch[n] == c)
                    .expect("repeated phrase exists");
                phrase_node.push(node);
            }
        }
        Lz78Index { ends, phrase_node, parent, ch, depth }
    }

    pub fn len(&self) -> usize {
        self.ends.last().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The character at a 1-based position.
    pub fn get(&self, pos: usize) -> Result<Terminal> {
        if pos == 0 || pos > self.len() {
            return Err(Error::OutOfRange { pos: pos as u64, len: self.len() as u64 });
        }
        let i = self.ends.partition_point(|&e| e < pos);
        let start = if i == 0 { 0 } else { self.ends[i - 1] };
        let offset = pos - start - 1;
        let mut node = self.phrase_node[i];
        for _ in 0..self.depth[node] - 1 - offset {
            node = self.parent[node];
        }
        Ok(self.ch[node])
    }
}

fn is_new(parent: &[usize], ch: &[Terminal], par: usize, c: Terminal) -> bool {
    !(1..parent.len()).any(|n| parent[n] == par && ch[n] == c)
}

#[derive(Default)]
struct Trie {
    next: Vec<HashMap<Terminal, usize>>,
    phrase: Vec<Option<usize>>,
}

impl Trie {
    fn new() -> Trie {
        Trie { next: vec![HashMap::new()], phrase: vec![None] }
    }

    fn insert(&mut self, s: &[Terminal], id: usize) {
        let mut node = 0;
        for &t in s {
            node = match self.next[node].get(&t) {
                Some(&n) => n,
                None => {
                    self.next.push(HashMap::new());
                    self.phrase.push(None);
                    let n = self.next.len() - 1;
                    self.next[node].insert(t, n);
                    n
                }
            };
        }
        if self.phrase[node].is_none() {
            self.phrase[node] = Some(id);
        }
    }

    /// Longest earlier phrase (of length >= 2) or single character prefixing `s`.
    fn longest(&self, s: &[Terminal]) -> (Part, usize) {
        let mut best = (Part::Char(s[0]), 1);
        let mut node = 0;
        for (i, t) in s.iter().enumerate() {
            match self.next[node].get(t) {
                Some(&n) => node = n,
                None => break,
            }
            if let Some(p) = self.phrase[node] {
                if i + 1 >= 2 {
                    best = (Part::Phrase(p), i + 1);
                }
            }
        }
        best
    }
}

/// LZD parsing: each phrase is the concatenation of two greedy longest
/// factors, each an earlier phrase or a single character.
///
/// The grammar is `S -> N1 ... Nm` with `Ni -> X Y`, size `3m`; when the
/// input ends right after a first factor the last rule has length 1 and the
/// size is `3m - 1`.
pub fn lzd(u: &[Terminal]) -> (Factorization, Slg) {
    let mut trie = Trie::new();
    let mut f = Factorization::default();
    let mut pos = 0;
    while pos < u.len() {
        let start = pos;
        let (first, l1) = trie.longest(&u[pos..]);
        pos += l1;
        let second = if pos < u.len() {
            let (p, l2) = trie.longest(&u[pos..]);
            pos += l2;
            Some(p)
        } else {
            None
        };
        let id = f.len() + 1;
        trie.insert(&u[start..pos], id);
        f.phrases.push(Phrase { start, len: pos - start, source: PhraseSource::Lzd { first, second } });
    }

    let sym = |p: Part| match p {
        Part::Phrase(i) => Symbol::N(i as u32),
        Part::Char(c) => Symbol::T(c),
    };
    let mut rules = vec![Vec::with_capacity(f.len())];
    for (i, p) in f.phrases.iter().enumerate() {
        let PhraseSource::Lzd { first, second } = p.source else { unreachable!() };
        let mut r = vec![sym(first)];
        r.extend(second.map(sym));
        rules.push(r);
        rules[0].push(Symbol::N(i as u32 + 1));
    }
    let g = Slg::new(rules, 0).expect("lzd grammar is acyclic");
    (f, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::{chars, plain};

    fn parts(u: &str, f: &Factorization) -> Vec<String> {
        let u = chars(u);
        f.split(&u).iter().map(|p| plain(p).unwrap()).collect()
    }

    #[test]
    fn lz78_examples() {
        let (f, g) = lz78(&chars("0111"));
        assert_eq!(parts("0111", &f), ["0", "1", "11"]);
        assert_eq!(g.size(), 9);
        assert_eq!(g.expand_start(), chars("0111"));
        let (f, _) = lz78(&chars("a"));
        assert_eq!(f.len(), 1);
        let (f, g) = lz78(&chars("aaaaa"));
        assert_eq!(parts("aaaaa", &f), ["a", "aa", "aa"]);
        assert_eq!(g.size(), 9);
        assert_eq!(g.expand_start(), chars("aaaaa"));
    }

    #[test]
    fn lz78_index() {
        for s in ["abababbbabaaab", "aaaaa", "abcabcabcabcd", "x"] {
            let u = chars(s);
            let (f, _) = lz78(&u);
            let ix = Lz78Index::new(&f);
            for (i, &c) in u.iter().enumerate() {
                assert_eq!(ix.get(i + 1).unwrap(), c, "{s} at {}", i + 1);
            }
            assert!(ix.get(u.len() + 1).is_err());
        }
    }

    #[test]
    fn lzd_examples() {
        let (f, g) = lzd(&chars("ab"));
        assert_eq!(parts("ab", &f), ["ab"]);
        assert_eq!(g.size(), 3);
        let (f, g) = lzd(&chars("abab"));
        assert_eq!(parts("abab", &f), ["ab", "ab"]);
        assert_eq!(g.size(), 5);
        assert_eq!(g.expand_start(), chars("abab"));
        let (f, _) = lzd(&chars("abababab"));
        assert_eq!(parts("abababab", &f), ["ab", "abab", "ab"]);
    }
}
