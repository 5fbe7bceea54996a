use super::beta::{aux_index, beta_aux};
use super::{check_alphabet, pair, prepare, terminal_sentinel_free, BoostResult};
use crate::error::{pre, Error, Result};
use crate::rna::MatchedAlphabet;
use crate::slg::Slg;
use crate::symbol::{Symbol, Terminal};

/// The mirrored grammar `G''`: `N'_{i,2} -> $'_{2i} (N'_{k,0} | match(B))`,
/// `N'_{i,1} -> $'_{2i-1} (N'_{j,0} | match(A))`, `N'_{i,0} -> N'_{i,2} N'_{i,1}`,
/// with the start `S'' -> ⊙_i N'_{i,0}` added so that it is a grammar.
fn mirror_aux(g: &Slg, a: &MatchedAlphabet, order: &[u32], rank: &[usize]) -> Result<Slg> {
    let v = order.len();
    let mut rules = vec![Vec::new(); 3 * v + 1];
    let mut names = vec!["S''".to_string(); 3 * v + 1];
    let lift = |x: Symbol| match x {
        Symbol::N(m) => Symbol::N(aux_index(rank[m as usize], 0)),
        Symbol::T(t) => Symbol::T(a.matched(t).unwrap()),
    };
    for (i0, &n) in order.iter().enumerate() {
        let i = i0 + 1;
        let (x, y) = pair(g, n);
        rules[aux_index(i, 1) as usize] = vec![Symbol::T(Terminal::DollarPrime(2 * i as u32 - 1)), lift(x)];
        rules[aux_index(i, 2) as usize] = vec![Symbol::T(Terminal::DollarPrime(2 * i as u32)), lift(y)];
        rules[aux_index(i, 0) as usize] = vec![Symbol::N(aux_index(i, 2)), Symbol::N(aux_index(i, 1))];
        for k in 0..3 {
            names[aux_index(i, k) as usize] = format!("N'{i},{k}");
        }
        rules[0].push(Symbol::N(aux_index(i, 0)));
    }
    Slg::with_names(rules, names, 0)
}

/// The LZD-RNA construction
/// `v = #_1 #_2 ⊙_{i<|V|} x_i x_i y_i y_i #_3 #_4 x_{|V|}` with `x_i` the β
/// expansion of `N_{i,0}` and `y_i` its matched reverse. `c0` is the weight
/// of `#_2` and `#_3`; `WRNA(v) = 2 c0 + WRNA(u)`.
pub fn gamma(g: &Slg, a: &MatchedAlphabet) -> Result<BoostResult> {
    terminal_sentinel_free(g)?;
    check_alphabet(g, a)?;
    let (order, rank) = prepare(g)?;
    let v = order.len();
    if v < 2 {
        return pre("the LZD-RNA construction needs at least two nonterminals");
    }
    let aux = beta_aux(g, &order, &rank)?;
    let mirror = mirror_aux(g, a, &order, &rank)?;

    // weight of exp(N_{i,0}) by the length recurrence, `$` weighing 1
    let mut wx = vec![0u64; v + 1];
    for (i0, &n) in order.iter().enumerate() {
        let (x, y) = pair(g, n);
        let part = |s: Symbol| -> Result<u64> {
            match s {
                Symbol::T(t) => a.weight(t).ok_or_else(|| Error::NotInAlphabet(t.to_string())),
                Symbol::N(m) => Ok(wx[rank[m as usize]]),
            }
        };
        let w = part(x)?.checked_add(part(y)?).and_then(|s| s.checked_add(2)).ok_or(Error::Overflow)?;
        wx[i0 + 1] = w;
    }
    let c0 = wx[1..v]
        .iter()
        .try_fold(1u64, |acc, &w| acc.checked_add(w.checked_mul(2)?))
        .ok_or(Error::Overflow)?;

    let mut text = vec![Terminal::Hash(1), Terminal::Hash(2)];
    for i in 1..v {
        let x = aux.expand(Symbol::N(aux_index(i, 0)))?;
        let y = mirror.expand(Symbol::N(aux_index(i, 0)))?;
        text.extend_from_slice(&x);
        text.extend_from_slice(&x);
        text.extend_from_slice(&y);
        text.extend_from_slice(&y);
    }
    text.push(Terminal::Hash(3));
    text.push(Terminal::Hash(4));
    text.extend(aux.expand(Symbol::N(aux_index(v, 0)))?);

    let mut ext = a.clone();
    for i in 1..=2 * v as u32 {
        ext.add_pair(Terminal::Dollar(i), Terminal::DollarPrime(i), 1)?;
    }
    ext.add_pair(Terminal::Hash(1), Terminal::Hash(4), 1)?;
    ext.add_pair(Terminal::Hash(2), Terminal::Hash(3), c0)?;
    Ok(BoostResult {
        text,
        ordering: order,
        delta: None,
        c0: Some(c0),
        positions: None,
        aux,
        aux2: Some(mirror),
        alphabet: Some(ext),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compress::lzd;
    use crate::rna::wrna_value;
    use crate::symbol::{chars, tokens};

    #[test]
    fn g0_gamma() {
        let g: Slg = "S -> N1 N1\nN1 -> a b".parse().unwrap();
        let sigma = MatchedAlphabet::unit(&[('a', 'A'), ('b', 'B')]);
        let r = gamma(&g, &sigma).unwrap();
        assert_eq!(r.c0, Some(9));
        let y1 = r.aux2.as_ref().unwrap().expand(Symbol::N(aux_index(1, 0))).unwrap();
        assert_eq!(tokens(&y1), "$'_2 B $'_1 A");
        let ext = r.alphabet.as_ref().unwrap();
        ext.validate().unwrap();
        let u = wrna_value(&chars("abab"), &sigma, 100).unwrap();
        assert_eq!(wrna_value(&r.text, ext, 1000).unwrap(), 18 + u);
        assert_eq!(lzd(&r.text).1.size(), 18 * 2 - 6);
        assert!(r.text.len() <= 12 * 6 + 5);
    }

    #[test]
    fn rejects_one_nonterminal() {
        let g: Slg = "S -> a b".parse().unwrap();
        let sigma = MatchedAlphabet::unit(&[('a', 'A'), ('b', 'B')]);
        assert!(matches!(gamma(&g, &sigma), Err(Error::Precondition(_))));
    }
}
