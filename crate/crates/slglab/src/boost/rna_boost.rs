use super::{check_alphabet, names_of, pair, prepare, terminal_sentinel_free, weight_sums, BoostResult};
use crate::error::{Error, Result};
use crate::rna::MatchedAlphabet;
use crate::slg::Slg;
use crate::symbol::{Symbol, Terminal};

/// `q_X = |exp(X)| - 1 + Σ w(exp(X)[j])` for every nonterminal.
fn q_values(g: &Slg, a: &MatchedAlphabet) -> Result<Vec<u64>> {
    let len = g.lengths()?;
    let ws = weight_sums(g, a)?;
    len.iter()
        .zip(&ws)
        .map(|(&l, &w)| (l - 1).checked_add(w).ok_or(Error::Overflow))
        .collect()
}

/// `G_aux` (`N_i -> A $_i B`) and `G'_aux` (`N_i -> B' $'_i A'`, primes
/// denoting matched terminals).
fn aux_pair(g: &Slg, a: &MatchedAlphabet, rank: &[usize]) -> Result<(Slg, Slg)> {
    let mut fwd = Vec::with_capacity(g.num_nonterminals());
    let mut rev = Vec::with_capacity(g.num_nonterminals());
    let m = |x: Symbol| match x {
        Symbol::T(t) => Symbol::T(a.matched(t).unwrap()),
        n => n,
    };
    for n in 0..g.num_nonterminals() as u32 {
        let (x, y) = pair(g, n);
        let i = rank[n as usize] as u32;
        fwd.push(vec![x, Symbol::T(Terminal::Dollar(i)), y]);
        rev.push(vec![m(y), Symbol::T(Terminal::DollarPrime(i)), m(x)]);
    }
    Ok((
        Slg::with_names(fwd, names_of(g), g.start())?,
        Slg::with_names(rev, names_of(g), g.start())?,
    ))
}

fn checked(x: Option<u64>) -> Result<u64> {
    x.ok_or(Error::Overflow)
}

/// The RNA α construction `v = v'_aux v_aux`; `delta` is the offset in
/// `WRNA(v) = 2 WRNA(u) + delta`.
pub fn rna_alpha(g: &Slg, a: &MatchedAlphabet) -> Result<BoostResult> {
    terminal_sentinel_free(g)?;
    check_alphabet(g, a)?;
    let (order, rank) = prepare(g)?;
    let v = order.len() as u32;
    let (fwd, rev) = aux_pair(g, a, &rank)?;
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (i0, &n) in order.iter().enumerate().rev() {
        let i = i0 as u32 + 1;
        let e = rev.expand(Symbol::N(n))?;
        left.push(Terminal::HashPrime(2 * i));
        left.extend_from_slice(&e);
        left.push(Terminal::HashPrime(2 * i - 1));
        left.extend_from_slice(&e);
    }
    for (i0, &n) in order.iter().enumerate() {
        let i = i0 as u32 + 1;
        let e = fwd.expand(Symbol::N(n))?;
        right.extend_from_slice(&e);
        right.push(Terminal::Hash(2 * i - 1));
        right.extend_from_slice(&e);
        right.push(Terminal::Hash(2 * i));
    }
    left.extend(right);

    let q = q_values(g, a)?;
    let qs = q[g.start() as usize];
    let heavy = checked(qs.checked_mul(2).and_then(|x| x.checked_add(1)))?;
    let mut ext = a.clone();
    for i in 1..=v {
        ext.add_pair(Terminal::Dollar(i), Terminal::DollarPrime(i), 1)?;
    }
    for i in 1..=2 * v - 2 {
        ext.add_pair(Terminal::Hash(i), Terminal::HashPrime(i), heavy)?;
    }
    ext.add_pair(Terminal::Hash(2 * v - 1), Terminal::Hash(2 * v), heavy)?;
    ext.add_pair(Terminal::HashPrime(2 * v - 1), Terminal::HashPrime(2 * v), heavy)?;

    let rest: u64 = (0..q.len()).filter(|&x| x as u32 != g.start()).map(|x| q[x]).sum();
    let delta = checked(
        (2 * v as u64)
            .checked_mul(heavy)
            .and_then(|x| x.checked_add(qs))
            .and_then(|x| x.checked_add(2 * rest)),
    )?;
    Ok(BoostResult {
        text: left,
        ordering: order,
        delta: Some(delta),
        c0: None,
        positions: None,
        aux: fwd,
        aux2: Some(rev),
        alphabet: Some(ext),
    })
}

/// The RNA β construction `v = v_L v_R v'_L v'_R`; `delta` is the offset in
/// `WRNA(v) = 4 WRNA(u) + delta`.
pub fn rna_beta(g: &Slg, a: &MatchedAlphabet) -> Result<BoostResult> {
    terminal_sentinel_free(g)?;
    check_alphabet(g, a)?;
    let (order, rank) = prepare(g)?;
    let v = order.len() as u32;
    let (fwd, rev) = aux_pair(g, a, &rank)?;
    let e: Vec<Vec<Terminal>> = order.iter().map(|&n| fwd.expand(Symbol::N(n))).collect::<Result<_>>()?;
    let f: Vec<Vec<Terminal>> = order.iter().map(|&n| rev.expand(Symbol::N(n))).collect::<Result<_>>()?;
    let mut text = Vec::new();
    let fwd_part = |text: &mut Vec<Terminal>, i: usize, h: fn(u32) -> Terminal| {
        let k = i as u32 + 1;
        text.extend_from_slice(&e[i]);
        text.push(h(2 * k - 1));
        text.extend_from_slice(&e[i]);
        text.push(h(2 * k));
    };
    for i in 0..order.len() {
        fwd_part(&mut text, i, Terminal::HashL);
    }
    for i in (0..order.len()).rev() {
        fwd_part(&mut text, i, Terminal::HashR);
    }
    let rev_part = |text: &mut Vec<Terminal>, i: usize, h: fn(u32) -> Terminal| {
        let k = i as u32 + 1;
        text.push(h(2 * k));
        text.extend_from_slice(&f[i]);
        text.push(h(2 * k - 1));
        text.extend_from_slice(&f[i]);
    };
    for i in 0..order.len() {
        rev_part(&mut text, i, Terminal::HashPrimeL);
    }
    for i in (0..order.len()).rev() {
        rev_part(&mut text, i, Terminal::HashPrimeR);
    }

    let q = q_values(g, a)?;
    let qs = q[g.start() as usize];
    let heavy = checked(qs.checked_mul(4).and_then(|x| x.checked_add(1)))?;
    let mut ext = a.clone();
    for i in 1..=v {
        ext.add_pair(Terminal::Dollar(i), Terminal::DollarPrime(i), 1)?;
    }
    for i in 1..=2 * v - 2 {
        ext.add_pair(Terminal::HashL(i), Terminal::HashPrimeR(i), heavy)?;
        ext.add_pair(Terminal::HashR(i), Terminal::HashPrimeL(i), heavy)?;
    }
    let last = [Terminal::HashL, Terminal::HashR, Terminal::HashPrimeL, Terminal::HashPrimeR];
    for h in last {
        ext.add_pair(h(2 * v - 1), h(2 * v), heavy)?;
    }

    let rest: u64 = (0..q.len()).filter(|&x| x as u32 != g.start()).map(|x| q[x]).sum();
    let delta = checked(
        (4 * v as u64)
            .checked_mul(heavy)
            .and_then(|x| x.checked_add(2 * qs))
            .and_then(|x| x.checked_add(4 * rest)),
    )?;
    Ok(BoostResult {
        text,
        ordering: order,
        delta: Some(delta),
        c0: None,
        positions: None,
        aux: fwd,
        aux2: Some(rev),
        alphabet: Some(ext),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rna::wrna_value;
    use crate::symbol::chars;

    fn g0() -> Slg {
        "S -> N1 N1\nN1 -> a b".parse().unwrap()
    }

    fn sigma() -> MatchedAlphabet {
        MatchedAlphabet::unit(&[('a', 'A'), ('b', 'B')])
    }

    #[test]
    fn g0_rna_alpha() {
        let r = rna_alpha(&g0(), &sigma()).unwrap();
        assert_eq!(r.text.len(), 48);
        assert_eq!(r.delta, Some(73));
        let ext = r.alphabet.unwrap();
        ext.validate().unwrap();
        let u = wrna_value(&chars("abab"), &sigma(), 100).unwrap();
        assert_eq!(wrna_value(&r.text, &ext, 1000).unwrap(), 2 * u + 73);
    }

    #[test]
    fn g0_rna_beta() {
        let r = rna_beta(&g0(), &sigma()).unwrap();
        assert_eq!(r.text.len(), 96);
        assert_eq!(r.delta, Some(258));
        let ext = r.alphabet.unwrap();
        ext.validate().unwrap();
        let u = wrna_value(&chars("abab"), &sigma(), 100).unwrap();
        assert_eq!(wrna_value(&r.text, &ext, 1000).unwrap(), 4 * u + 258);
    }

    #[test]
    fn rejects_bad_alphabets() {
        let mut zero = MatchedAlphabet::new();
        zero.add_pair(Terminal::Char('a'), Terminal::Char('A'), 0).unwrap();
        zero.add_pair(Terminal::Char('b'), Terminal::Char('B'), 1).unwrap();
        assert!(rna_alpha(&g0(), &zero).is_err());
        let partial = MatchedAlphabet::unit(&[('a', 'A')]);
        assert!(matches!(rna_beta(&g0(), &partial), Err(Error::NotInAlphabet(_))));
    }
}
