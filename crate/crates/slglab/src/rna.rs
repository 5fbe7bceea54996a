//! Weighted RNA folding: maximum-weight non-crossing matchings.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{pre, Error, Result};
use crate::symbol::Terminal;

/// Default length cap for the cubic DP.
pub const DEFAULT_CAP: usize = 3000;

/// An alphabet with a fixed-point-free involution `match` and weights shared
/// by matched symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatchedAlphabet {
    mate: BTreeMap<Terminal, Terminal>,
    weight: BTreeMap<Terminal, u64>,
}

impl MatchedAlphabet {
    pub fn new() -> MatchedAlphabet {
        MatchedAlphabet::default()
    }

    /// Unit-weight alphabet from char pairs.
    pub fn unit(pairs: &[(char, char)]) -> MatchedAlphabet {
        let mut a = MatchedAlphabet::new();
        for &(x, y) in pairs {
            a.add_pair(Terminal::Char(x), Terminal::Char(y), 1).expect("distinct pairs");
        }
        a
    }

    /// Declares `a` and `b` as matched with weight `w`.
    pub fn add_pair(&mut self, a: Terminal, b: Terminal, w: u64) -> Result<()> {
        if a == b {
            return pre(format!("{a} cannot match itself"));
        }
        for x in [a, b] {
            if self.mate.contains_key(&x) {
                return pre(format!("{x} is already matched"));
            }
        }
        self.mate.insert(a, b);
        self.mate.insert(b, a);
        self.weight.insert(a, w);
        self.weight.insert(b, w);
        Ok(())
    }

    pub fn contains(&self, a: Terminal) -> bool {
        self.mate.contains_key(&a)
    }

    pub fn matched(&self, a: Terminal) -> Option<Terminal> {
        self.mate.get(&a).copied()
    }

    pub fn weight(&self, a: Terminal) -> Option<u64> {
        self.weight.get(&a).copied()
    }

    pub fn len(&self) -> usize {
        self.mate.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mate.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Terminal> + '_ {
        self.mate.keys().copied()
    }

    /// One `(a, match(a), w)` per pair, `a` the smaller symbol.
    pub fn pairs(&self) -> impl Iterator<Item = (Terminal, Terminal, u64)> + '_ {
        self.mate.iter().filter(|(a, b)| a < b).map(|(&a, &b)| (a, b, self.weight[&a]))
    }

    /// Checks involution, fixed-point freedom and shared weights.
    pub fn validate(&self) -> Result<()> {
        for (&a, &b) in &self.mate {
            if a == b || self.mate.get(&b) != Some(&a) {
                return pre(format!("match is not a fixed-point-free involution at {a}"));
            }
            if self.weight.get(&a) != self.weight.get(&b) {
                return pre(format!("{a} and {b} have different weights"));
            }
        }
        Ok(())
    }

    /// Errors unless every weight is positive.
    pub fn require_positive(&self) -> Result<()> {
        match self.weight.iter().find(|(_, &w)| w == 0) {
            Some((a, _)) => pre(format!("weight of {a} is not positive")),
            None => Ok(()),
        }
    }

    /// The same pairs with all weights set to 1.
    pub fn unit_weights(&self) -> MatchedAlphabet {
        let mut a = self.clone();
        a.weight.values_mut().for_each(|w| *w = 1);
        a
    }

    /// Symbol-wise match of a string.
    pub fn match_string(&self, u: &[Terminal]) -> Result<Vec<Terminal>> {
        u.iter().map(|&t| self.matched(t).ok_or_else(|| Error::NotInAlphabet(t.to_string()))).collect()
    }

    /// Total weight of a string.
    pub fn total_weight(&self, u: &[Terminal]) -> Result<u64> {
        u.iter().try_fold(0u64, |acc, &t| {
            let w = self.weight(t).ok_or_else(|| Error::NotInAlphabet(t.to_string()))?;
            acc.checked_add(w).ok_or(Error::Overflow)
        })
    }
}

fn is_comment(line: &str) -> bool {
    line.starts_with('#')
        && line
            .split_whitespace()
            .next()
            .and_then(Terminal::parse_token)
            .is_none_or(|t| !t.is_sentinel())
}

impl FromStr for MatchedAlphabet {
    type Err = Error;

    fn from_str(text: &str) -> Result<MatchedAlphabet> {
        let mut a = MatchedAlphabet::new();
        for (ln, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() || is_comment(t) {
                continue;
            }
            let err = |msg: String| Error::Parse { line: ln + 1, msg };
            let toks: Vec<&str> = t.split_whitespace().collect();
            let [x, "~", y, ":", w] = toks[..] else {
                return Err(err("expected `a ~ b : weight`".into()));
            };
            let tok = |s: &str| Terminal::parse_token(s).ok_or_else(|| err(format!("bad symbol `{s}`")));
            let w: u64 = w.parse().map_err(|_| err(format!("bad weight `{w}`")))?;
            a.add_pair(tok(x)?, tok(y)?, w).map_err(|e| err(e.to_string()))?;
        }
        Ok(a)
    }
}

impl fmt::Display for MatchedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b, w) in self.pairs() {
            writeln!(f, "{} ~ {} : {w}", a.token_escaped(&[]), b.token_escaped(&[]))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldResult {
    pub value: u64,
    /// 0-based `(i, j)` pairs, `i < j`, when a witness was requested.
    pub pairs: Option<Vec<(usize, usize)>>,
}

/// Maps a string to dense ids; `mate[id]` and `w[id]` describe the symbol.
struct Coded {
    s: Vec<usize>,
    mate: Vec<Option<usize>>,
    w: Vec<u64>,
}

fn code(u: &[Terminal], a: &MatchedAlphabet, unit: bool) -> Result<Coded> {
    let mut ids: BTreeMap<Terminal, usize> = BTreeMap::new();
    let mut syms = Vec::new();
    let mut s = Vec::with_capacity(u.len());
    for &t in u {
        if !a.contains(t) {
            return Err(Error::NotInAlphabet(t.to_string()));
        }
        let id = *ids.entry(t).or_insert_with(|| {
            syms.push(t);
            syms.len() - 1
        });
        s.push(id);
    }
    let mate = syms.iter().map(|&t| ids.get(&a.matched(t).unwrap()).copied()).collect();
    let w: Vec<u64> = syms.iter().map(|&t| if unit { 1 } else { a.weight(t).unwrap() }).collect();
    // every partial sum is bounded by the total, so one check suffices
    s.iter().try_fold(0u64, |acc, &i| acc.checked_add(w[i])).ok_or(Error::Overflow)?;
    Ok(Coded { s, mate, w })
}

fn fold(u: &[Terminal], a: &MatchedAlphabet, unit: bool, witness: bool, cap: usize) -> Result<FoldResult> {
    if u.len() > cap {
        return Err(Error::TooLong { len: u.len(), cap });
    }
    let c = code(u, a, unit)?;
    let n = u.len();
    let stride = n + 1;
    // d[i * stride + j] = best value on the half-open interval [i, j)
    let mut d = vec![0u64; stride * stride];
    let mut by_sym: Vec<Vec<usize>> = vec![Vec::new(); c.w.len()];
    for i in (0..n).rev() {
        let (lo, hi) = d.split_at_mut((i + 1) * stride);
        let row = &mut lo[i * stride..];
        let next = &hi[..stride];
        row[i + 1..].copy_from_slice(&next[i + 1..]);
        if let Some(m) = c.mate[c.s[i]] {
            let w = c.w[c.s[i]];
            // positions of the mate after i, ascending
            for &k in by_sym[m].iter().rev() {
                let base = w + next[k];
                let after = &hi[(k + 1 - i - 1) * stride..];
                for j in k + 1..=n {
                    let v = base + after[j];
                    if v > row[j] {
                        row[j] = v;
                    }
                }
            }
        }
        by_sym[c.s[i]].push(i);
    }
    let value = d[n];
    let pairs = witness.then(|| trace(&c, &d, stride, n));
    Ok(FoldResult { value, pairs })
}

fn trace(c: &Coded, d: &[u64], stride: usize, n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut stack = vec![(0usize, n)];
    while let Some((i, j)) = stack.pop() {
        if j <= i + 1 {
            continue;
        }
        let v = d[i * stride + j];
        if v == d[(i + 1) * stride + j] {
            stack.push((i + 1, j));
            continue;
        }
        let m = c.mate[c.s[i]].expect("paired symbol has a mate");
        let w = c.w[c.s[i]];
        let k = (i + 1..j)
            .find(|&k| c.s[k] == m && w + d[(i + 1) * stride + k] + d[(k + 1) * stride + j] == v)
            .expect("traceback finds the pairing");
        out.push((i, k));
        stack.push((i + 1, k));
        stack.push((k + 1, j));
    }
    out.sort_unstable();
    out
}

/// WRNA(u) with a witness.
pub fn wrna(u: &[Terminal], a: &MatchedAlphabet) -> Result<FoldResult> {
    fold(u, a, false, true, DEFAULT_CAP)
}

/// WRNA(u) without a witness, with an explicit length cap.
pub fn wrna_value(u: &[Terminal], a: &MatchedAlphabet, cap: usize) -> Result<u64> {
    Ok(fold(u, a, false, false, cap)?.value)
}

/// RNA(u): every weight counts as 1.
pub fn rna(u: &[Terminal], a: &MatchedAlphabet) -> Result<FoldResult> {
    fold(u, a, true, true, DEFAULT_CAP)
}

/// Checks a witness: matched, ordered, non-crossing, disjoint pairs whose
/// weights sum to the value.
pub fn validate_witness(u: &[Terminal], a: &MatchedAlphabet, r: &FoldResult) -> bool {
    let Some(pairs) = &r.pairs else { return false };
    let mut used = vec![false; u.len()];
    let mut sum = 0u64;
    for &(i, j) in pairs {
        if i >= j || j >= u.len() || used[i] || used[j] || a.matched(u[i]) != Some(u[j]) {
            return false;
        }
        used[i] = true;
        used[j] = true;
        sum += a.weight(u[i]).unwrap_or(0);
    }
    let crossing = pairs
        .iter()
        .any(|&(i, j)| pairs.iter().any(|&(k, l)| i < k && k < j && j < l));
    !crossing && sum == r.value
}

/// Exhaustive WRNA by enumerating every non-crossing pair set (a stack of
/// open positions; a position is skipped, opened, or closes the top).
/// Exponential; meant for strings of length at most about 14.
pub fn wrna_exhaustive(u: &[Terminal], a: &MatchedAlphabet) -> Result<u64> {
    for &t in u {
        if !a.contains(t) {
            return Err(Error::NotInAlphabet(t.to_string()));
        }
    }
    fn go(u: &[Terminal], a: &MatchedAlphabet, i: usize, open: &mut Vec<Terminal>, acc: u64, best: &mut u64) {
        if open.len() > u.len() - i {
            return;
        }
        if i == u.len() {
            *best = (*best).max(acc);
            return;
        }
        go(u, a, i + 1, open, acc, best);
        if let Some(&top) = open.last() {
            if a.matched(top) == Some(u[i]) {
                open.pop();
                go(u, a, i + 1, open, acc + a.weight(top).unwrap(), best);
                open.push(top);
            }
        }
        open.push(u[i]);
        go(u, a, i + 1, open, acc, best);
        open.pop();
    }
    let mut best = 0;
    go(u, a, 0, &mut Vec::new(), 0, &mut best);
    Ok(best)
}

/// Repeats every symbol `w(symbol)` times, so that RNA of the result equals
/// WRNA of the input.
pub fn weighted_to_unweighted(u: &[Terminal], a: &MatchedAlphabet) -> Result<Vec<Terminal>> {
    let mut out = Vec::new();
    for &t in u {
        let w = a.weight(t).ok_or_else(|| Error::NotInAlphabet(t.to_string()))?;
        out.extend(std::iter::repeat_n(t, w as usize));
    }
    Ok(out)
}

/// Evaluates `WRNA(x a y b z) = w(a) + WRNA(xz) + WRNA(y)` by DP on both
/// sides, after checking its preconditions.
pub fn check_decomposition(
    x: &[Terminal],
    a: Terminal,
    y: &[Terminal],
    b: Terminal,
    z: &[Terminal],
    alph: &MatchedAlphabet,
) -> Result<bool> {
    if alph.matched(a) != Some(b) {
        return pre("match(a) = b does not hold");
    }
    if x.iter().chain(y).chain(z).any(|&t| t == a || t == b) {
        return pre("a or b occurs in x, y or z");
    }
    let wa = alph.weight(a).unwrap();
    if wa <= alph.total_weight(y)? {
        return pre("w(a) does not exceed the weight of y");
    }
    let whole: Vec<Terminal> = [x, &[a], y, &[b], z].concat();
    let xz: Vec<Terminal> = [x, z].concat();
    let lhs = wrna_value(&whole, alph, DEFAULT_CAP)?;
    let rhs = wa + wrna_value(&xz, alph, DEFAULT_CAP)? + wrna_value(y, alph, DEFAULT_CAP)?;
    Ok(lhs == rhs)
}

/// Whether WRNA is invariant under reversal and under the symbol-wise match.
pub fn check_reverse_and_match(u: &[Terminal], alph: &MatchedAlphabet) -> Result<bool> {
    let v = wrna_value(u, alph, DEFAULT_CAP)?;
    let rev: Vec<Terminal> = u.iter().rev().copied().collect();
    let m = alph.match_string(u)?;
    Ok(v == wrna_value(&rev, alph, DEFAULT_CAP)? && v == wrna_value(&m, alph, DEFAULT_CAP)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::chars;

    fn ab() -> MatchedAlphabet {
        MatchedAlphabet::unit(&[('a', 'A'), ('b', 'B'), ('c', 'C'), ('d', 'D')])
    }

    #[test]
    fn basic_values() {
        let mut a = MatchedAlphabet::new();
        a.add_pair(Terminal::Char('a'), Terminal::Char('A'), 2).unwrap();
        assert_eq!(wrna(&chars("aA"), &a).unwrap().value, 2);
        assert_eq!(wrna(&chars("aa"), &a).unwrap().value, 0);
        assert_eq!(wrna(&chars("abAB"), &ab()).unwrap().value, 1);
        assert_eq!(rna(&chars("aAaA"), &ab()).unwrap().value, 2);
        assert_eq!(rna(&[], &ab()).unwrap().value, 0);
        assert_eq!(rna(&chars("aB"), &ab()).unwrap().value, 0);
        assert!(matches!(wrna(&chars("ax"), &ab()), Err(Error::NotInAlphabet(_))));
    }

    #[test]
    fn witness_is_valid() {
        let a = ab();
        for s in ["aAbBaA", "abBAcC", "aabAAB", "abcCBA"] {
            let r = wrna(&chars(s), &a).unwrap();
            assert!(validate_witness(&chars(s), &a, &r), "{s}");
            assert_eq!(r.value, wrna_exhaustive(&chars(s), &a).unwrap(), "{s}");
        }
    }

    #[test]
    fn reduction_examples() {
        let mut a = MatchedAlphabet::new();
        a.add_pair(Terminal::Char('a'), Terminal::Char('A'), 2).unwrap();
        let u2 = weighted_to_unweighted(&chars("aA"), &a).unwrap();
        assert_eq!(u2, chars("aaAA"));
        assert_eq!(rna(&u2, &a).unwrap().value, 2);

        let mut a = MatchedAlphabet::new();
        a.add_pair(Terminal::Char('a'), Terminal::Char('A'), 3).unwrap();
        a.add_pair(Terminal::Char('b'), Terminal::Char('B'), 1).unwrap();
        let u = chars("abA");
        let u2 = weighted_to_unweighted(&u, &a).unwrap();
        assert_eq!(u2.len(), 7);
        assert_eq!(rna(&u2, &a).unwrap().value, 3);
        assert_eq!(wrna(&u, &a).unwrap().value, 3);
    }

    #[test]
    fn decomposition_examples() {
        let mut al = ab();
        let (p, q) = (Terminal::Char('p'), Terminal::Char('P'));
        al.add_pair(p, q, 10).unwrap();
        assert!(check_decomposition(&[], p, &[], q, &[], &al).unwrap());
        assert!(check_decomposition(&chars("cC"), p, &chars("d"), q, &[], &al).unwrap());
        let mut small = ab();
        small.add_pair(p, q, 1).unwrap();
        assert!(matches!(
            check_decomposition(&[], p, &chars("dD"), q, &[], &small),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn reverse_and_match() {
        assert!(check_reverse_and_match(&[], &ab()).unwrap());
        assert!(check_reverse_and_match(&chars("aA"), &ab()).unwrap());
        assert!(check_reverse_and_match(&chars("abBcAC"), &ab()).unwrap());
    }

    #[test]
    fn text_format() {
        let text = "# pairs\na ~ A : 3\n$_1 ~ $'_1 : 1\n#_2 ~ #_3 : 9\n";
        let a: MatchedAlphabet = text.parse().unwrap();
        assert_eq!(a.len(), 6);
        assert_eq!(a.weight(Terminal::Hash(3)), Some(9));
        assert_eq!(a.matched(Terminal::Dollar(1)), Some(Terminal::DollarPrime(1)));
        assert_eq!(a.to_string().parse::<MatchedAlphabet>().unwrap(), a);
        assert!("a ~ a : 1".parse::<MatchedAlphabet>().is_err());
        assert!("a ~ A : 1\na ~ B : 1".parse::<MatchedAlphabet>().is_err());
        assert!("a ~ A 1".parse::<MatchedAlphabet>().is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let u = vec![Terminal::Char('a'); 11];
        assert_eq!(wrna_value(&u, &ab(), 10), Err(Error::TooLong { len: 11, cap: 10 }));
    }
}
