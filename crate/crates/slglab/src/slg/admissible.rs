use super::Slg;
use crate::error::{Error, Result};
use crate::symbol::Symbol;

impl Slg {
    /// Converts to an admissible grammar generating the same string, of at
    /// most twice the size.
    ///
    /// Empty nonterminals are erased first, then unary nonterminals are
    /// bypassed, and every remaining rule is binarized by pairing adjacent
    /// symbols left to right, round after round.
    pub fn make_admissible(&self) -> Result<Slg> {
        let len = self.lengths()?;
        if len[self.start as usize] < 2 {
            return Err(Error::ExpansionTooShort);
        }
        let n = self.rules.len();
        let mut rules: Vec<Vec<Symbol>> = self
            .rules
            .iter()
            .map(|r| {
                r.iter()
                    .copied()
                    .filter(|s| !matches!(s, Symbol::N(m) if len[*m as usize] == 0))
                    .collect()
            })
            .collect();

        // Bypass unary nonterminals; children are resolved before parents.
        let mut target: Vec<Symbol> = (0..n as u32).map(Symbol::N).collect();
        for &x in &self.order {
            if rules[x as usize].len() == 1 {
                target[x as usize] = match rules[x as usize][0] {
                    Symbol::N(m) => target[m as usize],
                    t => t,
                };
            }
        }
        for r in rules.iter_mut() {
            for s in r.iter_mut() {
                if let Symbol::N(m) = *s {
                    *s = target[m as usize];
                }
            }
        }
        let Symbol::N(start) = target[self.start as usize] else {
            unreachable!("expansion of length >= 2")
        };
        let mut names = self.names.clone();
        names[start as usize] = self.names[self.start as usize].clone();
        let pruned = Slg::with_names(rules, names, start)?.prune_unreachable();

        let (rules, names, start) = pruned.into_parts();
        let mut out_rules = rules.clone();
        let mut out_names = names;
        let mut fresh = 0usize;
        for (x, rhs) in rules.into_iter().enumerate() {
            let mut u = rhs;
            while u.len() > 2 {
                let k = u.len() / 2;
                let mut next = Vec::with_capacity(u.len() - k);
                for i in 0..k {
                    let id = out_rules.len() as u32;
                    out_rules.push(vec![u[2 * i], u[2 * i + 1]]);
                    fresh += 1;
                    out_names.push(format!("B{fresh}"));
                    next.push(Symbol::N(id));
                }
                next.extend_from_slice(&u[2 * k..]);
                u = next;
            }
            out_rules[x] = u;
        }
        Slg::with_names(out_rules, out_names, start)
    }
}
