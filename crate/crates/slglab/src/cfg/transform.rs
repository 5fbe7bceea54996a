//! Language-preserving rewrites that re-target a CFG at boosted strings.

use std::collections::BTreeSet;

use super::Cfg;
use crate::error::{pre, Result};
use crate::slg::Slg;
use crate::symbol::{Symbol, Terminal};

fn check_disjoint(g: &Cfg, extra: &[Terminal]) -> Result<()> {
    match extra.iter().find(|t| g.terminals().contains(t)) {
        Some(t) => pre(format!("{t} is already a terminal of the grammar")),
        None => Ok(()),
    }
}

/// Inserts a wildcard `X -> c` (for every `c` in the terminal set plus
/// `extra`) after every terminal of every body, so `L' = { a_1 x_1 ... a_k x_k :
/// a_1 ... a_k ∈ L }`. Keeps ε if `ε ∈ L`.
pub fn interleave_raw(g: &Cfg, extra: &[Terminal]) -> Result<Cfg> {
    check_disjoint(g, extra)?;
    let mut out = Cfg { names: g.names.clone(), terminals: BTreeSet::new(), rules: Vec::new(), start: g.start };
    let x = out.add_nonterminal("X");
    let sigma: BTreeSet<Terminal> = g.terminals().iter().chain(extra).copied().collect();
    for (h, body) in g.rules() {
        let mut b = Vec::with_capacity(2 * body.len());
        for &s in body {
            b.push(s);
            if let Symbol::T(_) = s {
                b.push(Symbol::N(x));
            }
        }
        out.add_rule(*h, b);
    }
    for &c in &sigma {
        out.add_rule(x, vec![Symbol::T(c)]);
    }
    Ok(out)
}

/// `L - {ε}`: every nonterminal `A` gets `A+` deriving its nonempty strings.
/// For a body `B_1 ... B_q`, suffix nonterminals `Q_i -> B_i Q_{i+1}` and
/// `P_i -> B_i+ Q_{i+1} | P_{i+1}` (the latter only if `B_i` is nullable)
/// keep the size linear.
fn without_epsilon(g: &Cfg) -> Cfg {
    let null = g.nullable();
    let n = g.num_nonterminals() as u32;
    let mut out = g.clone();
    let plus: Vec<u32> = (0..n).map(|a| out.add_nonterminal(&format!("{}+", g.names[a as usize]))).collect();
    let p_of = |s: Symbol| match s {
        Symbol::N(m) => Symbol::N(plus[m as usize]),
        t => t,
    };
    for (h, body) in g.rules() {
        let q = body.len();
        if q == 0 {
            continue;
        }
        // q_sym[i] derives B_i ... B_{q-1}
        let mut q_sym = vec![body[q - 1]; q];
        for i in (1..q - 1).rev() {
            let qi = out.add_nonterminal("Q");
            out.add_rule(qi, vec![body[i], q_sym[i + 1]]);
            q_sym[i] = Symbol::N(qi);
        }
        let mut p_next: Option<u32> = None;
        for i in (0..q).rev() {
            let p = if i == 0 { plus[*h as usize] } else { out.add_nonterminal("P") };
            let mut b = vec![p_of(body[i])];
            if i + 1 < q {
                b.push(q_sym[i + 1]);
            }
            out.add_rule(p, b);
            if let (Some(pn), Symbol::N(m)) = (p_next, body[i]) {
                if null[m as usize] {
                    out.add_rule(p, vec![Symbol::N(pn)]);
                }
            }
            p_next = Some(p);
        }
    }
    out.start = plus[g.start as usize];
    out
}

/// `L' = { a_1 x_1 ... a_k x_k : k ≥ 1, a_1 ... a_k ∈ L, x_j ∈ Σ'' }` with
/// `Σ''` the terminal set plus `extra`.
pub fn interleave(g: &Cfg, extra: &[Terminal]) -> Result<Cfg> {
    check_disjoint(g, extra)?;
    if g.nullable()[g.start as usize] {
        interleave_raw(&without_epsilon(g), extra)
    } else {
        interleave_raw(g, extra)
    }
}

/// `L' = Σ^k L` through `X_0 -> c`, `X_i -> X_{i-1} X_{i-1}` and
/// `S' -> X_{b_1} ... X_{b_q} S` for the set bits `b_1 < ... < b_q` of `k`.
pub fn add_prefix(g: &Cfg, k: u64) -> Result<Cfg> {
    if k < 1 {
        return pre("prefix length must be at least 1");
    }
    let mut out = g.clone();
    let top = 63 - k.leading_zeros();
    let mut xs = Vec::with_capacity(top as usize + 1);
    for i in 0..=top {
        xs.push(out.add_nonterminal(&format!("X{i}")));
    }
    for &c in g.terminals() {
        out.add_rule(xs[0], vec![Symbol::T(c)]);
    }
    for i in 1..xs.len() {
        out.add_rule(xs[i], vec![Symbol::N(xs[i - 1]); 2]);
    }
    let s2 = out.add_nonterminal("S'");
    let mut body: Vec<Symbol> = (0..=top).filter(|b| k >> b & 1 == 1).map(|b| Symbol::N(xs[b as usize])).collect();
    body.push(Symbol::N(g.start));
    out.add_rule(s2, body);
    out.start = s2;
    Ok(out)
}

/// `L' = { u : erase(u, D) ∈ L }` for the erasable set `D`, using
/// `N$ -> N$ N$ | ε | d` placed before every terminal and at the end of the
/// start's bodies.
pub fn erase_closure(g: &Cfg, erasable: &[Terminal]) -> Result<Cfg> {
    check_disjoint(g, erasable)?;
    let mut out = Cfg { names: g.names.clone(), terminals: g.terminals.clone(), rules: Vec::new(), start: g.start };
    let d = out.add_nonterminal("N$");
    out.add_rule(d, vec![Symbol::N(d), Symbol::N(d)]);
    out.add_rule(d, vec![]);
    for &t in erasable {
        out.add_rule(d, vec![Symbol::T(t)]);
    }
    for (h, body) in g.rules() {
        let mut b = Vec::with_capacity(2 * body.len() + 1);
        for &s in body {
            if let Symbol::T(_) = s {
                b.push(Symbol::N(d));
            }
            b.push(s);
        }
        if *h == g.start {
            b.push(Symbol::N(d));
        }
        out.add_rule(*h, b);
    }
    Ok(out)
}

fn check_inputs(gamma: &Cfg, g: &Slg) -> Result<()> {
    if let Some(t) = gamma.terminals().iter().find(|t| t.is_sentinel()) {
        return pre(format!("grammar terminal {t} collides with the sentinels"));
    }
    if !g.is_admissible() {
        return Err(crate::Error::NotAdmissible);
    }
    Ok(())
}

/// Re-targets `gamma` at the α string of `g`: `u ∈ L(gamma)` iff
/// `w ∈ L(result)`. Interleave, then a prefix of length `|w| - 2|u|`
/// computed from expansion lengths.
pub fn gamma_prime_alpha(gamma: &Cfg, g: &Slg) -> Result<Cfg> {
    check_inputs(gamma, g)?;
    let v = g.num_nonterminals() as u32;
    let len = g.lengths()?;
    let w_len = 4 * len.iter().sum::<u64>();
    let u_len = len[g.start() as usize];
    let mut base = gamma.clone();
    base.add_terminals(g.terminals());
    let mut extra: Vec<Terminal> = (1..=v).map(Terminal::Dollar).collect();
    extra.extend((1..=2 * v).map(Terminal::Hash));
    // ε only yields strings of length k < |w|, so the raw form suffices
    let inter = interleave_raw(&base, &extra)?;
    add_prefix(&inter, w_len - 2 * u_len)
}

/// Re-targets `gamma` at the β string of `g`: erase `$_1 .. $_{2|V|}`, then a
/// prefix of length `|w| - 3|u| + 2`.
pub fn gamma_prime_beta(gamma: &Cfg, g: &Slg) -> Result<Cfg> {
    check_inputs(gamma, g)?;
    let v = g.num_nonterminals() as u32;
    let len = g.lengths()?;
    let w_len = 6 * len.iter().sum::<u64>() - 4 * v as u64;
    let u_len = len[g.start() as usize];
    let dollars: Vec<Terminal> = (1..=2 * v).map(Terminal::Dollar).collect();
    let mut er = erase_closure(gamma, &dollars)?;
    er.add_terminals(g.terminals());
    add_prefix(&er, w_len - 3 * u_len + 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boost::{alpha, beta};
    use crate::cfg::cyk_member;
    use crate::symbol::chars;

    fn strings(alphabet: &[Terminal], n: usize) -> Vec<Vec<Terminal>> {
        let mut all = vec![Vec::new()];
        let mut frontier = vec![Vec::new()];
        for _ in 0..n {
            frontier = frontier
                .iter()
                .flat_map(|s: &Vec<Terminal>| alphabet.iter().map(move |&c| [s.as_slice(), &[c]].concat()))
                .collect();
            all.extend(frontier.iter().cloned());
        }
        all
    }

    #[test]
    fn interleave_examples() {
        let g: Cfg = "S -> a".parse().unwrap();
        let h = interleave(&g, &[Terminal::Dollar(1)]).unwrap();
        let d = Terminal::Dollar(1);
        let a = Terminal::Char('a');
        assert!(cyk_member(&h, &[a, d]).unwrap());
        assert!(cyk_member(&h, &[a, a]).unwrap());
        assert!(!cyk_member(&h, &[d, a]).unwrap());
        assert!(!cyk_member(&h, &[]).unwrap());
        assert_eq!(h.size(), 2 + 2);
        assert!(interleave(&g, &[a]).is_err());
    }

    #[test]
    fn interleave_drops_epsilon() {
        let g: Cfg = "S -> a S | _ | S b".parse().unwrap();
        let d = Terminal::Dollar(1);
        let h = interleave(&g, &[d]).unwrap();
        assert!(!cyk_member(&h, &[]).unwrap());
        let sigma = [Terminal::Char('a'), Terminal::Char('b'), d];
        for s in strings(&sigma, 6) {
            let odd: Vec<Terminal> = s.iter().step_by(2).copied().collect();
            let want = !s.is_empty() && s.len() % 2 == 0 && cyk_member(&g, &odd).unwrap_or(false);
            assert_eq!(cyk_member(&h, &s).unwrap(), want, "{s:?}");
        }
    }

    #[test]
    fn add_prefix_examples() {
        let mut g: Cfg = "S -> a".parse().unwrap();
        g.add_terminals([Terminal::Char('b')]);
        let h = add_prefix(&g, 2).unwrap();
        assert!(cyk_member(&h, &chars("bba")).unwrap());
        assert!(!cyk_member(&h, &chars("ba")).unwrap());
        assert!(!cyk_member(&h, &chars("aab")).unwrap());
        assert!(add_prefix(&g, 0).is_err());
        let five = add_prefix(&g, 5).unwrap();
        let last = five.rules().last().unwrap();
        let names: Vec<&str> = last.1.iter().map(|s| five.names()[s.nonterminal().unwrap() as usize].as_str()).collect();
        assert_eq!(names, ["X0", "X2", "S"]);
        let one = add_prefix(&g, 1).unwrap();
        assert_eq!(one.num_nonterminals(), 3);
    }

    #[test]
    fn erase_examples() {
        let g: Cfg = "S -> a b".parse().unwrap();
        let d = Terminal::Dollar(1);
        let h = erase_closure(&g, &[d]).unwrap();
        let (a, b) = (Terminal::Char('a'), Terminal::Char('b'));
        assert!(cyk_member(&h, &[d, a, d, d, b]).unwrap());
        assert!(cyk_member(&h, &[a, b]).unwrap());
        assert!(!cyk_member(&h, &[b, a, d]).unwrap());
    }

    #[test]
    fn composers_on_g0() {
        let g: Slg = "S -> N1 N1\nN1 -> a b".parse().unwrap();
        let yes: Cfg = "S -> a b a b".parse().unwrap();
        let no: Cfg = "S -> a b b a".parse().unwrap();
        let w = alpha(&g).unwrap().text;
        assert!(cyk_member(&gamma_prime_alpha(&yes, &g).unwrap(), &w).unwrap());
        assert!(!cyk_member(&gamma_prime_alpha(&no, &g).unwrap(), &w).unwrap());
        let w = beta(&g).unwrap().text;
        assert!(cyk_member(&gamma_prime_beta(&yes, &g).unwrap(), &w).unwrap());
        assert!(!cyk_member(&gamma_prime_beta(&no, &g).unwrap(), &w).unwrap());
        let empty: Cfg = "S -> S".parse().unwrap();
        assert!(!cyk_member(&gamma_prime_beta(&empty, &g).unwrap(), &w).unwrap());
    }
}
