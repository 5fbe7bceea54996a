//! Hard instances and grammar boosting constructions.

mod alpha;
mod answer;
mod beta;
mod gamma;
mod lz78_hard;
mod rna_boost;

pub use alpha::{alpha, bexp, build_gi, GIGrammar};
pub use answer::{answer_grammar, answer_string, PointSet};
pub use beta::beta;
pub use gamma::gamma;
pub use lz78_hard::lz78_hard_string;
pub use rna_boost::{rna_alpha, rna_beta};

use crate::error::{pre, Error, Result};
use crate::rna::MatchedAlphabet;
use crate::slg::Slg;
use crate::symbol::{Symbol, Terminal};

/// Output of a boosting construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoostResult {
    /// The boosted string.
    pub text: Vec<Terminal>,
    /// Nonterminals of the input grammar, `ordering[i - 1]` is `N_i`.
    pub ordering: Vec<u32>,
    /// Additive offset: the first copy of the start's expansion for the
    /// plain construction, the WRNA offset for the RNA ones.
    pub delta: Option<u64>,
    /// The `#_2`/`#_3` weight of the LZD-RNA construction.
    pub c0: Option<u64>,
    /// For each `N_i`, the 0-based index in `text` of every character of
    /// its expansion (first copy).
    pub positions: Option<Vec<Vec<u64>>>,
    /// Sentinel-augmented grammar the text is built from.
    pub aux: Slg,
    /// The mirrored grammar, for constructions that have one.
    pub aux2: Option<Slg>,
    /// Extended matched alphabet, for the RNA constructions.
    pub alphabet: Option<MatchedAlphabet>,
}

impl BoostResult {
    /// Distinct symbols of the text, sorted.
    pub fn symbols(&self) -> Vec<Terminal> {
        let mut s = self.text.clone();
        s.sort_unstable();
        s.dedup();
        s
    }
}

/// Canonical ordering of the nonterminals: stable sort by expansion length
/// of the order of first appearance in a preorder walk of the parse tree.
pub fn ordering(g: &Slg) -> Result<Vec<u32>> {
    let len = g.lengths()?;
    let mut seen = vec![false; g.num_nonterminals()];
    let mut order = Vec::with_capacity(seen.len());
    let mut stack = vec![g.start()];
    while let Some(n) = stack.pop() {
        if std::mem::replace(&mut seen[n as usize], true) {
            continue;
        }
        order.push(n);
        for s in g.rhs(n).iter().rev() {
            if let Symbol::N(m) = s {
                if !seen[*m as usize] {
                    stack.push(*m);
                }
            }
        }
    }
    // unreachable nonterminals (not admissible anyway) go last
    order.extend((0..g.num_nonterminals() as u32).filter(|&n| !seen[n as usize]));
    order.sort_by_key(|&n| len[n as usize]);
    Ok(order)
}

/// Checks admissibility and that the start is the last nonterminal in the
/// ordering; returns the ordering and 1-based ranks.
fn prepare(g: &Slg) -> Result<(Vec<u32>, Vec<usize>)> {
    if !g.is_admissible() {
        return Err(Error::NotAdmissible);
    }
    let order = ordering(g)?;
    if *order.last().unwrap() != g.start() {
        return pre("the start symbol is not the unique longest nonterminal");
    }
    let mut rank = vec![0; order.len()];
    for (i, &n) in order.iter().enumerate() {
        rank[n as usize] = i + 1;
    }
    Ok((order, rank))
}

fn pair(g: &Slg, n: u32) -> (Symbol, Symbol) {
    let r = g.rhs(n);
    (r[0], r[1])
}

fn names_of(g: &Slg) -> Vec<String> {
    g.printable_names()
}

/// Errors if the alphabet does not cover the grammar or uses sentinels.
fn check_alphabet(g: &Slg, a: &MatchedAlphabet) -> Result<()> {
    a.validate()?;
    a.require_positive()?;
    if let Some(t) = a.symbols().find(|t| t.is_sentinel()) {
        return pre(format!("alphabet contains the sentinel {t}"));
    }
    if let Some(t) = g.terminals().into_iter().find(|&t| !a.contains(t)) {
        return Err(Error::NotInAlphabet(t.to_string()));
    }
    Ok(())
}

/// Total weight of every nonterminal's expansion.
fn weight_sums(g: &Slg, a: &MatchedAlphabet) -> Result<Vec<u64>> {
    let mut ws = vec![0u64; g.num_nonterminals()];
    for &n in g.topo_order() {
        let mut s = 0u64;
        for x in g.rhs(n) {
            let add = match x {
                Symbol::T(t) => a.weight(*t).ok_or_else(|| Error::NotInAlphabet(t.to_string()))?,
                Symbol::N(m) => ws[*m as usize],
            };
            s = s.checked_add(add).ok_or(Error::Overflow)?;
        }
        ws[n as usize] = s;
    }
    Ok(ws)
}

fn terminal_sentinel_free(g: &Slg) -> Result<()> {
    match g.terminals().into_iter().find(|t| t.is_sentinel()) {
        Some(t) => pre(format!("grammar already uses the sentinel {t}")),
        None => Ok(()),
    }
}
