//! Straight-line grammars.

mod admissible;
mod text;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::symbol::{Symbol, Terminal};

/// A straight-line grammar: one rule per nonterminal, acyclic, one start.
///
/// Nonterminals are dense indices `0..num_nonterminals()`; `Symbol::N(i)`
/// refers to rule `i`. Rules may be empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slg {
    rules: Vec<Vec<Symbol>>,
    names: Vec<String>,
    start: u32,
    order: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrammarStats {
    /// Total right-hand-side length.
    pub size: usize,
    pub num_nonterminals: usize,
    /// Length of the generated string.
    pub expansion_length: u64,
    /// Sum of expansion lengths over all nonterminals.
    pub total_expansion: u64,
    pub height: usize,
}

impl Slg {
    /// Builds a grammar with default names (`S` for the start, `N<i>` otherwise).
    pub fn new(rules: Vec<Vec<Symbol>>, start: u32) -> Result<Slg> {
        let names = (0..rules.len())
            .map(|i| if i as u32 == start { "S".to_string() } else { format!("N{i}") })
            .collect();
        Slg::with_names(rules, names, start)
    }

    pub fn with_names(rules: Vec<Vec<Symbol>>, names: Vec<String>, start: u32) -> Result<Slg> {
        assert_eq!(rules.len(), names.len(), "one name per rule");
        if start as usize >= rules.len() {
            return Err(Error::BadStart(start));
        }
        for rhs in &rules {
            for s in rhs {
                if let Symbol::N(n) = s {
                    if *n as usize >= rules.len() {
                        return Err(Error::UnknownSymbol);
                    }
                }
            }
        }
        let order = topo_order(&rules).map_err(|n| Error::Cycle(names[n as usize].clone()))?;
        Ok(Slg { rules, names, start, order })
    }

    /// The single-rule grammar `S -> u`.
    pub fn single(u: &[Terminal]) -> Slg {
        Slg::new(vec![u.iter().map(|&t| Symbol::T(t)).collect()], 0).expect("single rule")
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn rules(&self) -> &[Vec<Symbol>] {
        &self.rules
    }

    pub fn rhs(&self, n: u32) -> &[Symbol] {
        &self.rules[n as usize]
    }

    pub fn name(&self, n: u32) -> &str {
        &self.names[n as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn num_nonterminals(&self) -> usize {
        self.rules.len()
    }

    /// Nonterminals ordered so that every rule comes after the rules it uses.
    pub fn topo_order(&self) -> &[u32] {
        &self.order
    }

    pub fn size(&self) -> usize {
        self.rules.iter().map(Vec::len).sum()
    }

    /// Expansion length of every nonterminal.
    pub fn lengths(&self) -> Result<Vec<u64>> {
        let mut len = vec![0u64; self.rules.len()];
        for &n in &self.order {
            let mut l = 0u64;
            for s in &self.rules[n as usize] {
                let add = match s {
                    Symbol::T(_) => 1,
                    Symbol::N(m) => len[*m as usize],
                };
                l = l.checked_add(add).ok_or(Error::Overflow)?;
            }
            len[n as usize] = l;
        }
        Ok(len)
    }

    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.rules.len()];
        for &n in &self.order {
            h[n as usize] = 1 + self.rules[n as usize]
                .iter()
                .map(|s| match s {
                    Symbol::T(_) => 0,
                    Symbol::N(m) => h[*m as usize],
                })
                .max()
                .unwrap_or(0);
        }
        h
    }

    pub fn stats(&self) -> Result<GrammarStats> {
        let len = self.lengths()?;
        let mut total = 0u64;
        for &l in &len {
            total = total.checked_add(l).ok_or(Error::Overflow)?;
        }
        Ok(GrammarStats {
            size: self.size(),
            num_nonterminals: self.rules.len(),
            expansion_length: len[self.start as usize],
            total_expansion: total,
            height: self.heights()[self.start as usize],
        })
    }

    /// Expansion of `x`; terminals expand to themselves.
    pub fn expand(&self, x: Symbol) -> Result<Vec<Terminal>> {
        if let Symbol::N(n) = x {
            if n as usize >= self.rules.len() {
                return Err(Error::UnknownSymbol);
            }
        }
        let mut out = Vec::new();
        let mut stack = vec![x];
        while let Some(s) = stack.pop() {
            match s {
                Symbol::T(t) => out.push(t),
                Symbol::N(n) => stack.extend(self.rules[n as usize].iter().rev().copied()),
            }
        }
        Ok(out)
    }

    pub fn expand_start(&self) -> Vec<Terminal> {
        self.expand(Symbol::N(self.start)).expect("start exists")
    }

    /// `exp(S)[pos]` for a 1-based position, walking down one root-to-leaf path.
    pub fn random_access(&self, pos: u64) -> Result<Terminal> {
        self.access_with(&self.lengths()?, pos)
    }

    /// As [`Slg::random_access`] with precomputed [`Slg::lengths`].
    pub fn access_with(&self, len: &[u64], pos: u64) -> Result<Terminal> {
        let total = len[self.start as usize];
        if pos == 0 || pos > total {
            return Err(Error::OutOfRange { pos, len: total });
        }
        let mut rest = pos;
        let mut cur = self.start;
        loop {
            let mut next = None;
            for s in &self.rules[cur as usize] {
                let l = match s {
                    Symbol::T(_) => 1,
                    Symbol::N(m) => len[*m as usize],
                };
                if rest <= l {
                    next = Some(*s);
                    break;
                }
                rest -= l;
            }
            match next.expect("lengths are consistent") {
                Symbol::T(t) => return Ok(t),
                Symbol::N(m) => cur = m,
            }
        }
    }

    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.rules.len()];
        seen[self.start as usize] = true;
        let mut stack = vec![self.start];
        while let Some(n) = stack.pop() {
            for s in &self.rules[n as usize] {
                if let Symbol::N(m) = *s {
                    if !seen[m as usize] {
                        seen[m as usize] = true;
                        stack.push(m);
                    }
                }
            }
        }
        seen
    }

    /// Drops nonterminals not reachable from the start, keeping names.
    pub fn prune_unreachable(&self) -> Slg {
        let keep = self.reachable();
        self.retain(&keep)
    }

    fn retain(&self, keep: &[bool]) -> Slg {
        let mut remap = vec![u32::MAX; self.rules.len()];
        let mut next = 0u32;
        for (i, &k) in keep.iter().enumerate() {
            if k {
                remap[i] = next;
                next += 1;
            }
        }
        let mut rules = Vec::new();
        let mut names = Vec::new();
        for (i, rhs) in self.rules.iter().enumerate() {
            if keep[i] {
                rules.push(
                    rhs.iter()
                        .map(|s| match *s {
                            Symbol::N(m) => Symbol::N(remap[m as usize]),
                            t => t,
                        })
                        .collect(),
                );
                names.push(self.names[i].clone());
            }
        }
        Slg::with_names(rules, names, remap[self.start as usize]).expect("subgrammar stays valid")
    }

    /// Every rule has length two and every nonterminal is reachable.
    pub fn is_admissible(&self) -> bool {
        self.rules.iter().all(|r| r.len() == 2) && self.reachable().iter().all(|&b| b)
    }

    /// Admissible, and every rule `X -> A B` has `|exp(A)|` a power of two
    /// with `|exp(A)| >= |exp(B)|`.
    pub fn is_dyadic(&self) -> bool {
        if !self.is_admissible() {
            return false;
        }
        let Ok(len) = self.lengths() else { return false };
        let l = |s: &Symbol| match s {
            Symbol::T(_) => 1,
            Symbol::N(m) => len[*m as usize],
        };
        self.rules.iter().all(|r| {
            let (a, b) = (l(&r[0]), l(&r[1]));
            a.is_power_of_two() && a >= b
        })
    }

    /// Terminals used on right-hand sides, sorted.
    pub fn terminals(&self) -> Vec<Terminal> {
        let mut t: Vec<Terminal> = self
            .rules
            .iter()
            .flatten()
            .filter_map(|s| s.terminal())
            .collect();
        t.sort();
        t.dedup();
        t
    }

    /// Number of occurrences of every nonterminal on right-hand sides.
    pub fn use_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.rules.len()];
        for s in self.rules.iter().flatten() {
            if let Symbol::N(m) = s {
                c[*m as usize] += 1;
            }
        }
        c
    }

    /// Whether a bijection between the nonterminals exists that maps start to
    /// start, fixes terminals and maps every definition position-wise.
    ///
    /// The reachable parts are matched by a parallel walk from the two start
    /// symbols. Leftover nonterminals are matched root by root.
    pub fn is_isomorphic(&self, other: &Slg) -> bool {
        if self.rules.len() != other.rules.len() || self.size() != other.size() {
            return false;
        }
        let mut fwd: Vec<Option<u32>> = vec![None; self.rules.len()];
        let mut bwd: Vec<Option<u32>> = vec![None; other.rules.len()];
        if !self.walk(other, self.start, other.start, &mut fwd, &mut bwd) {
            return false;
        }
        let roots = |g: &Slg, mapped: &[Option<u32>]| -> Vec<u32> {
            let mut referenced = vec![false; g.rules.len()];
            for (i, r) in g.rules.iter().enumerate() {
                if mapped[i].is_none() {
                    for s in r {
                        if let Symbol::N(m) = s {
                            referenced[*m as usize] = true;
                        }
                    }
                }
            }
            (0..g.rules.len() as u32)
                .filter(|&i| mapped[i as usize].is_none() && !referenced[i as usize])
                .collect()
        };
        for r1 in roots(self, &fwd) {
            let mut matched = false;
            for r2 in roots(other, &bwd) {
                let (f0, b0) = (fwd.clone(), bwd.clone());
                if self.walk(other, r1, r2, &mut fwd, &mut bwd) {
                    matched = true;
                    break;
                }
                fwd = f0;
                bwd = b0;
            }
            if !matched {
                return false;
            }
        }
        fwd.iter().all(Option::is_some) && bwd.iter().all(Option::is_some)
    }

    fn walk(
        &self,
        other: &Slg,
        a: u32,
        b: u32,
        fwd: &mut [Option<u32>],
        bwd: &mut [Option<u32>],
    ) -> bool {
        let mut stack = vec![(a, b)];
        let bind = |x: u32, y: u32, fwd: &mut [Option<u32>], bwd: &mut [Option<u32>]| {
            match (fwd[x as usize], bwd[y as usize]) {
                (None, None) => {
                    fwd[x as usize] = Some(y);
                    bwd[y as usize] = Some(x);
                    Some(true)
                }
                (Some(fy), Some(bx)) if fy == y && bx == x => Some(false),
                _ => None,
            }
        };
        match bind(a, b, fwd, bwd) {
            None => return false,
            Some(false) => return true,
            Some(true) => {}
        }
        while let Some((x, y)) = stack.pop() {
            let (rx, ry) = (&self.rules[x as usize], &other.rules[y as usize]);
            if rx.len() != ry.len() {
                return false;
            }
            for (s, t) in rx.iter().zip(ry) {
                match (*s, *t) {
                    (Symbol::T(p), Symbol::T(q)) if p == q => {}
                    (Symbol::N(p), Symbol::N(q)) => match bind(p, q, fwd, bwd) {
                        None => return false,
                        Some(true) => stack.push((p, q)),
                        Some(false) => {}
                    },
                    _ => return false,
                }
            }
        }
        true
    }

    /// Renames nonterminals, keeping rules.
    pub fn renamed(&self, names: Vec<String>) -> Slg {
        Slg::with_names(self.rules.clone(), names, self.start).expect("same rules")
    }

    pub(crate) fn into_parts(self) -> (Vec<Vec<Symbol>>, Vec<String>, u32) {
        (self.rules, self.names, self.start)
    }
}

/// Topological order (children first); on a cycle returns a nonterminal on it.
fn topo_order(rules: &[Vec<Symbol>]) -> std::result::Result<Vec<u32>, u32> {
    // 0 = new, 1 = on stack, 2 = done
    let mut state = vec![0u8; rules.len()];
    let mut order = Vec::with_capacity(rules.len());
    for root in 0..rules.len() {
        if state[root] != 0 {
            continue;
        }
        let mut stack: Vec<(u32, usize)> = vec![(root as u32, 0)];
        state[root] = 1;
        while let Some(top) = stack.last_mut() {
            let n = top.0;
            let rhs = &rules[n as usize];
            if top.1 < rhs.len() {
                let s = rhs[top.1];
                top.1 += 1;
                if let Symbol::N(m) = s {
                    match state[m as usize] {
                        0 => {
                            state[m as usize] = 1;
                            stack.push((m, 0));
                        }
                        1 => return Err(m),
                        _ => {}
                    }
                }
            } else {
                state[n as usize] = 2;
                order.push(n);
                stack.pop();
            }
        }
    }
    Ok(order)
}

/// Incrementally assembles a grammar from named rules.
#[derive(Default)]
pub struct SlgBuilder {
    rules: Vec<Vec<Symbol>>,
    names: Vec<String>,
    index: HashMap<String, u32>,
}

impl SlgBuilder {
    pub fn new() -> SlgBuilder {
        SlgBuilder::default()
    }

    /// Reserves (or looks up) a nonterminal by name.
    pub fn nt(&mut self, name: &str) -> Symbol {
        if let Some(&i) = self.index.get(name) {
            return Symbol::N(i);
        }
        let i = self.rules.len() as u32;
        self.rules.push(Vec::new());
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        Symbol::N(i)
    }

    /// Adds a fresh unnamed nonterminal.
    pub fn fresh(&mut self, rhs: Vec<Symbol>) -> Symbol {
        let i = self.rules.len() as u32;
        self.rules.push(rhs);
        self.names.push(format!("N{i}"));
        Symbol::N(i)
    }

    pub fn set(&mut self, n: Symbol, rhs: Vec<Symbol>) {
        let Symbol::N(i) = n else { panic!("terminal has no rule") };
        self.rules[i as usize] = rhs;
    }

    pub fn rule(&mut self, name: &str, rhs: Vec<Symbol>) -> Symbol {
        let n = self.nt(name);
        self.set(n, rhs);
        n
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn build(self, start: Symbol) -> Result<Slg> {
        let Symbol::N(s) = start else { return Err(Error::UnknownSymbol) };
        Slg::with_names(self.rules, self.names, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::chars;

    fn g0() -> Slg {
        "S -> N1 N1\nN1 -> a b".parse().unwrap()
    }

    #[test]
    fn expand_g0() {
        let g = g0();
        assert_eq!(g.expand(Symbol::N(1)).unwrap(), chars("ab"));
        assert_eq!(g.expand_start(), chars("abab"));
        assert_eq!(g.expand(Symbol::ch('a')).unwrap(), chars("a"));
        assert_eq!(g.expand(Symbol::N(7)), Err(Error::UnknownSymbol));
    }

    #[test]
    fn stats_examples() {
        let s = g0().stats().unwrap();
        assert_eq!(
            s,
            GrammarStats {
                size: 4,
                num_nonterminals: 2,
                expansion_length: 4,
                total_expansion: 6,
                height: 2
            }
        );
        let one: Slg = "S -> a b".parse().unwrap();
        let s = one.stats().unwrap();
        assert_eq!((s.size, s.total_expansion, s.height), (2, 2, 1));
        let chain: Slg = "S -> A A\nA -> B B\nB -> a b".parse().unwrap();
        assert_eq!(chain.stats().unwrap().total_expansion, 14);
    }

    #[test]
    fn admissibility() {
        assert!(g0().is_admissible());
        assert!(!"S -> a b c".parse::<Slg>().unwrap().is_admissible());
        assert!(!"S -> a b\nU -> a a".parse::<Slg>().unwrap().is_admissible());
    }

    #[test]
    fn isomorphism() {
        let g = g0();
        let h: Slg = "S -> X X\nX -> a b".parse().unwrap();
        assert!(g.is_isomorphic(&h));
        let ba: Slg = "S -> N N\nN -> b a".parse().unwrap();
        assert!(!g.is_isomorphic(&ba));
        let p: Slg = "S -> A b\nA -> a a".parse().unwrap();
        let q: Slg = "S -> a B\nB -> a b".parse().unwrap();
        assert!(!p.is_isomorphic(&q));
    }

    #[test]
    fn isomorphism_with_unreachable_parts() {
        let g: Slg = "S -> a b\nU -> V c\nV -> a a".parse().unwrap();
        let h: Slg = "S -> a b\nY -> b b\nX -> Y c".parse().unwrap();
        assert!(g.is_isomorphic(&g.clone()));
        assert!(!g.is_isomorphic(&h));
        let h2: Slg = "S -> a b\nV2 -> a a\nU2 -> V2 c".parse().unwrap();
        assert!(g.is_isomorphic(&h2));
    }

    #[test]
    fn random_access_g0() {
        let g = g0();
        assert_eq!(g.random_access(3).unwrap(), Terminal::Char('a'));
        assert_eq!(g.random_access(1).unwrap(), Terminal::Char('a'));
        assert_eq!(g.random_access(4).unwrap(), Terminal::Char('b'));
        assert_eq!(g.random_access(5), Err(Error::OutOfRange { pos: 5, len: 4 }));
        assert!(g.random_access(0).is_err());
    }

    #[test]
    fn dyadic() {
        assert!(g0().is_dyadic());
        assert!(!"S -> a A\nA -> a b".parse::<Slg>().unwrap().is_dyadic());
        assert!("S -> A b\nA -> a b".parse::<Slg>().unwrap().is_dyadic());
        assert!(!"S -> a b c".parse::<Slg>().unwrap().is_dyadic());
    }

    #[test]
    fn cycles_rejected() {
        let r = Slg::new(vec![vec![Symbol::N(1)], vec![Symbol::N(0)]], 0);
        assert!(matches!(r, Err(Error::Cycle(_))));
    }

    #[test]
    fn prune_keeps_language() {
        let g: Slg = "S -> A A\nU -> a a\nA -> a b".parse().unwrap();
        let p = g.prune_unreachable();
        assert_eq!(p.num_nonterminals(), 2);
        assert_eq!(p.expand_start(), g.expand_start());
        assert!(p.is_admissible());
    }
}
