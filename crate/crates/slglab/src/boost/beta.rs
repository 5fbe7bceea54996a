use super::{pair, prepare, terminal_sentinel_free, BoostResult};
use crate::error::Result;
use crate::slg::Slg;
use crate::symbol::{Symbol, Terminal};

/// Index of `N_{i,k}` in the auxiliary grammar (`S'` is 0).
pub(crate) fn aux_index(i: usize, k: usize) -> u32 {
    (3 * (i - 1) + k + 1) as u32
}

/// The three-per-nonterminal grammar `G'` of the β construction, with
/// `S' -> ⊙_i N_{i,1} N_{i,2} N_{i,0}`.
pub(crate) fn beta_aux(g: &Slg, order: &[u32], rank: &[usize]) -> Result<Slg> {
    let v = order.len();
    let mut rules = vec![Vec::new(); 3 * v + 1];
    let mut names = vec!["S'".to_string(); 3 * v + 1];
    let lift = |x: Symbol| match x {
        Symbol::N(m) => Symbol::N(aux_index(rank[m as usize], 0)),
        t => t,
    };
    for (i0, &n) in order.iter().enumerate() {
        let i = i0 + 1;
        let (a, b) = pair(g, n);
        rules[aux_index(i, 1) as usize] = vec![lift(a), Symbol::T(Terminal::Dollar(2 * i as u32 - 1))];
        rules[aux_index(i, 2) as usize] = vec![lift(b), Symbol::T(Terminal::Dollar(2 * i as u32))];
        rules[aux_index(i, 0) as usize] = vec![Symbol::N(aux_index(i, 1)), Symbol::N(aux_index(i, 2))];
        for k in 0..3 {
            names[aux_index(i, k) as usize] = format!("N{i},{k}");
        }
        rules[0].extend([1, 2, 0].map(|k| Symbol::N(aux_index(i, k))));
    }
    Slg::with_names(rules, names, 0)
}

/// The β construction: `text = ⊙_i exp(N_{i,0}) exp(N_{i,0})` where
/// `N_{i,1} -> (N_{j,0} | A) $_{2i-1}`, `N_{i,2} -> (N_{k,0} | B) $_{2i}` and
/// `N_{i,0} -> N_{i,1} N_{i,2}`.
///
/// `positions[i - 1][j - 1]` is the 0-based index of `exp(N_i)[j]` inside
/// the first copy of `exp(N_{i,0})`.
pub fn beta(g: &Slg) -> Result<BoostResult> {
    terminal_sentinel_free(g)?;
    let (order, rank) = prepare(g)?;
    let aux = beta_aux(g, &order, &rank)?;
    let text = aux.expand_start();
    let alen = aux.lengths()?;

    // offsets of the original characters inside exp(N_{i,0})
    let mut local: Vec<Vec<u64>> = Vec::with_capacity(order.len());
    for &n in &order {
        let (a, b) = pair(g, n);
        let part = |x: Symbol, local: &Vec<Vec<u64>>| match x {
            Symbol::T(_) => vec![0],
            Symbol::N(m) => local[rank[m as usize] - 1].clone(),
        };
        let mut l = part(a, &local);
        let shift = match a {
            Symbol::T(_) => 2,
            Symbol::N(m) => alen[aux_index(rank[m as usize], 0) as usize] + 1,
        };
        l.extend(part(b, &local).into_iter().map(|p| p + shift));
        local.push(l);
    }
    let mut positions = Vec::with_capacity(order.len());
    let mut start = 0u64;
    for (i0, l) in local.into_iter().enumerate() {
        positions.push(l.into_iter().map(|p| p + start).collect());
        start += 2 * alen[aux_index(i0 + 1, 0) as usize];
    }
    Ok(BoostResult {
        text,
        ordering: order,
        delta: None,
        c0: None,
        positions: Some(positions),
        aux,
        aux2: None,
        alphabet: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compress::lzd;
    use crate::symbol::tokens;

    #[test]
    fn g0_beta() {
        let g: Slg = "S -> N1 N1\nN1 -> a b".parse().unwrap();
        let r = beta(&g).unwrap();
        assert_eq!(r.text.len(), 28);
        let x1 = r.aux.expand(Symbol::N(aux_index(1, 0))).unwrap();
        assert_eq!(tokens(&x1), "a $_1 b $_2");
        let (f, h) = lzd(&r.text);
        assert_eq!(f.len(), 6);
        assert_eq!(h.size(), 18);
        let p = r.positions.unwrap();
        assert_eq!(p[0], vec![0, 2]);
        for (i, &n) in r.ordering.iter().enumerate() {
            let e = g.expand(Symbol::N(n)).unwrap();
            for (j, &c) in e.iter().enumerate() {
                assert_eq!(r.text[p[i][j] as usize], c);
            }
        }
    }
}
