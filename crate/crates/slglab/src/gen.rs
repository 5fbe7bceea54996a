//! Seeded random instances: grammars, alphabets, CFGs, point sets and
//! run-length key sets.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boost::PointSet;
use crate::cfg::Cfg;
use crate::rna::MatchedAlphabet;
use crate::slg::Slg;
use crate::symbol::{Symbol, Terminal};

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `σ` lowercase letters starting at `a`.
pub fn letters(sigma: usize) -> Vec<Terminal> {
    assert!((1..=26).contains(&sigma));
    (b'a'..b'a' + sigma as u8).map(|c| Terminal::Char(c as char)).collect()
}

/// Bottom-up random admissible grammars.
///
/// Rule `i` pairs two symbols drawn from the terminals and nonterminals
/// `0..i`; the last rule is the start. Every nonterminal ends up used: when
/// `U` earlier ones are still unused and `R` rules remain (this one
/// included), at least `max(0, U + 1 - R)` of the two slots take unused
/// nonterminals. Free slots are redrawn while the rule would expand past
/// `max_len`, falling back to terminals; forced slots can still exceed it,
/// so the cap is soft.
#[derive(Clone, Debug)]
pub struct GrammarGen {
    pub max_nonterms: usize,
    pub terminals: Vec<Terminal>,
    pub max_len: u64,
}

impl GrammarGen {
    pub fn new(max_nonterms: usize, sigma: usize) -> GrammarGen {
        GrammarGen { max_nonterms, terminals: letters(sigma), max_len: 64 }
    }

    pub fn sample(&self, rng: &mut impl Rng) -> Slg {
        let v = rng.random_range(1..=self.max_nonterms.max(1));
        self.sample_exact(rng, v)
    }

    /// A grammar with exactly `v` nonterminals.
    pub fn sample_exact(&self, rng: &mut impl Rng, v: usize) -> Slg {
        assert!(v >= 1 && !self.terminals.is_empty());
        let mut rules: Vec<Vec<Symbol>> = Vec::with_capacity(v);
        let mut len: Vec<u64> = Vec::with_capacity(v);
        let mut unused: Vec<u32> = Vec::new();
        let sym_len = |len: &[u64], s: Symbol| match s {
            Symbol::T(_) => 1,
            Symbol::N(m) => len[m as usize],
        };
        for i in 0..v {
            let need = (unused.len() + i + 1).saturating_sub(v);
            unused.shuffle(rng);
            let mut body: Vec<Symbol> = unused.drain(unused.len() - need..).map(Symbol::N).collect();
            let forced: u64 = body.iter().map(|&s| sym_len(&len, s)).sum();
            while body.len() < 2 {
                let pool = self.terminals.len() + i;
                let mut pick = None;
                for _ in 0..8 {
                    let k = rng.random_range(0..pool);
                    let s = if k < self.terminals.len() {
                        Symbol::T(self.terminals[k])
                    } else {
                        Symbol::N((k - self.terminals.len()) as u32)
                    };
                    let rest = if body.is_empty() { 1 } else { 0 };
                    if forced + sym_len(&len, s) + rest <= self.max_len {
                        pick = Some(s);
                        break;
                    }
                }
                let s = pick.unwrap_or_else(|| Symbol::T(*self.terminals.choose(rng).unwrap()));
                if let Symbol::N(m) = s {
                    unused.retain(|&u| u != m);
                }
                body.push(s);
            }
            body.shuffle(rng);
            len.push(body.iter().map(|&s| sym_len(&len, s)).sum());
            rules.push(body);
            if i + 1 < v {
                unused.push(i as u32);
            }
        }
        debug_assert!(unused.is_empty());
        Slg::new(rules, v as u32 - 1).expect("generated grammar is acyclic")
    }
}

/// A random SLG with bodies of length `0..=4`, not necessarily admissible,
/// whose start expands to at least two characters.
pub fn slg(rng: &mut impl Rng, max_nonterms: usize, terminals: &[Terminal]) -> Slg {
    loop {
        let v = rng.random_range(1..=max_nonterms.max(1));
        let rules: Vec<Vec<Symbol>> = (0..v)
            .map(|i| {
                (0..rng.random_range(0..=4))
                    .map(|_| {
                        let k = rng.random_range(0..terminals.len() + i);
                        if k < terminals.len() {
                            Symbol::T(terminals[k])
                        } else {
                            Symbol::N((k - terminals.len()) as u32)
                        }
                    })
                    .collect()
            })
            .collect();
        let g = Slg::new(rules, v as u32 - 1).expect("acyclic");
        if g.lengths().is_ok_and(|l| (2..=1 << 16).contains(&l[v - 1])) {
            return g;
        }
    }
}

/// Random dyadic grammar: `width` nonterminals per level expanding to
/// `2^k` characters for `k = 1..=levels`, then a start of random length
/// `n <= 2^(levels+1)` written as a chain `X -> P R` with `|P| = 2^⌊log n⌋`.
pub fn dyadic(rng: &mut impl Rng, levels: u32, width: usize, terminals: &[Terminal]) -> Slg {
    let mut rules: Vec<Vec<Symbol>> = Vec::new();
    let mut pools: Vec<Vec<Symbol>> = vec![terminals.iter().map(|&t| Symbol::T(t)).collect()];
    for k in 1..=levels as usize {
        let mut pool = Vec::new();
        for _ in 0..width {
            let a = *pools[k - 1].choose(rng).unwrap();
            let b = *pools[k - 1].choose(rng).unwrap();
            rules.push(vec![a, b]);
            pool.push(Symbol::N(rules.len() as u32 - 1));
        }
        pools.push(pool);
    }
    let n = rng.random_range(2..=1u64 << (levels + 1));
    let start = chain(rng, n, &pools, &mut rules);
    let Symbol::N(s) = start else { unreachable!("n >= 2") };
    Slg::new(rules, s).expect("acyclic").prune_unreachable()
}

fn chain(rng: &mut impl Rng, n: u64, pools: &[Vec<Symbol>], rules: &mut Vec<Vec<Symbol>>) -> Symbol {
    let k = 63 - n.leading_zeros() as usize;
    if n.is_power_of_two() && k < pools.len() {
        return *pools[k].choose(rng).unwrap();
    }
    // split at the largest power of two strictly below n
    let k = 63 - (n - 1).leading_zeros() as usize;
    let p = chain(rng, 1 << k, pools, rules);
    let r = chain(rng, n - (1 << k), pools, rules);
    rules.push(vec![p, r]);
    Symbol::N(rules.len() as u32 - 1)
}

/// `pairs` matched pairs `a~A, b~B, ...` with weights in `1..=max_w`.
pub fn alphabet(rng: &mut impl Rng, pairs: usize, max_w: u64) -> MatchedAlphabet {
    let mut a = MatchedAlphabet::new();
    for i in 0..pairs as u8 {
        let lo = Terminal::Char((b'a' + i) as char);
        let hi = Terminal::Char((b'A' + i) as char);
        a.add_pair(lo, hi, rng.random_range(1..=max_w)).expect("fresh pair");
    }
    a
}

/// A random CFG over `terminals` with `1..=max_nonterms` nonterminals, each
/// with one to three bodies of length at most three.
pub fn small_cfg(rng: &mut impl Rng, max_nonterms: usize, terminals: &[Terminal]) -> Cfg {
    let n = rng.random_range(1..=max_nonterms);
    let mut g = Cfg::new("S");
    for i in 1..n {
        g.add_nonterminal(&format!("A{i}"));
    }
    g.add_terminals(terminals.iter().copied());
    for h in 0..n as u32 {
        for _ in 0..rng.random_range(1..=3) {
            let len = rng.random_range(0..=3);
            let body = (0..len)
                .map(|_| {
                    if rng.random_bool(0.6) {
                        Symbol::T(*terminals.choose(rng).unwrap())
                    } else {
                        Symbol::N(rng.random_range(0..n as u32))
                    }
                })
                .collect();
            g.add_rule(h, body);
        }
    }
    g
}

/// `m` distinct random points of the `m x m` grid.
pub fn point_set(rng: &mut impl Rng, m: usize) -> PointSet {
    let cells: Vec<usize> = rand::seq::index::sample(rng, m * m, m).into_vec();
    let pts: Vec<(usize, usize)> = cells.iter().map(|&c| (c % m + 1, c / m + 1)).collect();
    PointSet::new(m, &pts).expect("distinct cells")
}

/// `k` keys in `[0, k^2)` starting at `0` with random binary colors: the
/// run lengths of the resulting string sum to `k^2`.
pub fn run_length_keys(rng: &mut impl Rng, k: usize) -> Vec<(u64, char)> {
    assert!(k >= 1);
    let universe = k * k;
    let mut keys: Vec<usize> =
        if k == 1 { Vec::new() } else { rand::seq::index::sample(rng, universe - 1, k - 1).into_vec() };
    keys.iter_mut().for_each(|x| *x += 1);
    keys.push(0);
    keys.sort_unstable();
    keys.into_iter().map(|x| (x as u64, if rng.random_bool(0.5) { '1' } else { '0' })).collect()
}

/// A uniform random string.
pub fn string(rng: &mut impl Rng, len: usize, terminals: &[Terminal]) -> Vec<Terminal> {
    (0..len).map(|_| *terminals.choose(rng).unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammars_are_admissible() {
        let mut r = rng(1);
        let gen = GrammarGen::new(30, 4);
        for _ in 0..300 {
            let g = gen.sample(&mut r);
            assert!(g.is_admissible());
        }
        for v in 1..6 {
            assert_eq!(gen.sample_exact(&mut r, v).num_nonterminals(), v);
        }
    }

    #[test]
    fn dyadic_grammars() {
        let mut r = rng(2);
        for _ in 0..100 {
            let g = dyadic(&mut r, 4, 3, &letters(2));
            assert!(g.is_dyadic(), "{g}");
        }
    }

    #[test]
    fn same_seed_same_output() {
        let gen = GrammarGen::new(10, 3);
        let a = gen.sample(&mut rng(5));
        let b = gen.sample(&mut rng(5));
        assert_eq!(a, b);
    }

    #[test]
    fn keys_and_points() {
        let mut r = rng(3);
        for k in 1..20 {
            let y = run_length_keys(&mut r, k);
            assert_eq!(y.len(), k);
            assert!(crate::boost::lz78_hard_string(&y, (k * k) as u64).is_ok());
        }
        assert_eq!(point_set(&mut r, 8).points().len(), 8);
        let a = alphabet(&mut r, 3, 4);
        assert!(a.validate().is_ok());
        let g = small_cfg(&mut r, 3, &letters(2));
        assert!(g.num_nonterminals() <= 3);
    }
}
