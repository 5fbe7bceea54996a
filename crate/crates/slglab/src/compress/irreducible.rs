use std::collections::{HashMap, HashSet};

use crate::slg::Slg;
use crate::symbol::Symbol;

/// An SLG is irreducible when no pair of adjacent symbols occurs twice
/// without overlap, every nonterminal other than the start is used at least
/// twice, and no two nonterminals expand to the same string.
pub fn is_irreducible(g: &Slg) -> bool {
    let mut seen: HashMap<(Symbol, Symbol), (usize, usize)> = HashMap::new();
    for (ri, r) in g.rules().iter().enumerate() {
        for i in 0..r.len().saturating_sub(1) {
            match seen.get(&(r[i], r[i + 1])) {
                Some(&(fr, fi)) if fr != ri || i >= fi + 2 => return false,
                Some(_) => {}
                None => {
                    seen.insert((r[i], r[i + 1]), (ri, i));
                }
            }
        }
    }
    let uses = g.use_counts();
    if (0..g.num_nonterminals()).any(|n| n as u32 != g.start() && uses[n] < 2) {
        return false;
    }
    let mut exps = HashSet::new();
    (0..g.num_nonterminals() as u32).all(|n| exps.insert(g.expand(Symbol::N(n)).expect("valid symbol")))
}
