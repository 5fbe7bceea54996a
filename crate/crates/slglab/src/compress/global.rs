//! Global algorithms: repeated replacement of a chosen maximal string.

use std::cmp::Ordering;
use std::collections::HashMap;

use super::maximal::{maximal_candidates, Candidate, Indexed};
use super::{compact, inline_single_use};
use crate::error::{Error, Result};
use crate::slg::Slg;
use crate::symbol::{Symbol, Terminal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GlobalStrategy {
    /// Most non-overlapping occurrences.
    RePair,
    /// Classic pair-based RePair: replace the most frequent pair, then
    /// inline rules used once.
    RePairPairsOnly,
    /// Largest size reduction `f(|s|-1) - |s|`.
    Greedy,
    /// Longest maximal string.
    LongestMatch,
}

impl GlobalStrategy {
    pub const ALL: [GlobalStrategy; 4] = [
        GlobalStrategy::RePair,
        GlobalStrategy::RePairPairsOnly,
        GlobalStrategy::Greedy,
        GlobalStrategy::LongestMatch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GlobalStrategy::RePair => "repair",
            GlobalStrategy::RePairPairsOnly => "repair2",
            GlobalStrategy::Greedy => "greedy",
            GlobalStrategy::LongestMatch => "longest",
        }
    }
}

/// All maximal strings with their non-overlapping counts, sorted.
pub fn maximal_strings(g: &Slg) -> Vec<(Vec<Symbol>, usize)> {
    let ix = Indexed::new(g.rules().iter().map(Vec::as_slice));
    let mut out: Vec<_> = maximal_candidates(&ix)
        .iter()
        .map(|c| (ix.string(c), c.count))
        .collect();
    out.sort();
    out
}

/// One global step: a new rule for `s`, replacing its greedy occurrences in
/// every other rule.
pub fn global_step(g: &Slg, s: &[Symbol]) -> Result<Slg> {
    if s.len() < 2 || !maximal_strings(g).iter().any(|(m, _)| m == s) {
        return Err(Error::NotMaximal);
    }
    let (mut rules, mut names, start) = g.clone().into_parts();
    replace_all(&mut rules, s);
    let id = rules.len();
    rules.push(s.to_vec());
    let mut name = format!("R{id}");
    while names.contains(&name) {
        name.push('\'');
    }
    names.push(name);
    Slg::with_names(rules, names, start)
}

fn replace_all(rules: &mut [Vec<Symbol>], s: &[Symbol]) {
    let id = Symbol::N(rules.len() as u32);
    for r in rules.iter_mut() {
        if r.len() < s.len() {
            continue;
        }
        let mut out = Vec::with_capacity(r.len());
        let mut i = 0;
        while i < r.len() {
            if i + s.len() <= r.len() && &r[i..i + s.len()] == s {
                out.push(id);
                i += s.len();
            } else {
                out.push(r[i]);
                i += 1;
            }
        }
        *r = out;
    }
}

fn better(strategy: GlobalStrategy, ix: &Indexed, a: &Candidate, b: &Candidate) -> Ordering {
    let score = |c: &Candidate| c.count as i64 * (c.len as i64 - 1) - c.len as i64;
    let primary = match strategy {
        GlobalStrategy::RePair => a.count.cmp(&b.count),
        GlobalStrategy::Greedy => score(a).cmp(&score(b)),
        GlobalStrategy::LongestMatch => a.len.cmp(&b.len),
        GlobalStrategy::RePairPairsOnly => unreachable!(),
    };
    primary
        .then_with(|| b.len.cmp(&a.len))
        .then_with(|| ix.slice(b).cmp(ix.slice(a)))
}

/// Runs a global algorithm from the single-rule grammar `S -> u`.
pub fn run_global(u: &[Terminal], strategy: GlobalStrategy) -> Slg {
    if strategy == GlobalStrategy::RePairPairsOnly {
        return repair_pairs(u);
    }
    let mut rules: Vec<Vec<Symbol>> = vec![u.iter().map(|&t| Symbol::T(t)).collect()];
    loop {
        let ix = Indexed::new(rules.iter().map(Vec::as_slice));
        let cands = maximal_candidates(&ix);
        let Some(best) = cands.iter().max_by(|a, b| better(strategy, &ix, a, b)) else {
            break;
        };
        let s = ix.string(best);
        replace_all(&mut rules, &s);
        rules.push(s);
    }
    compact(rules.into_iter().map(Some).collect(), 0)
}

fn repair_pairs(u: &[Terminal]) -> Slg {
    let mut rules: Vec<Option<Vec<Symbol>>> = vec![Some(u.iter().map(|&t| Symbol::T(t)).collect())];
    loop {
        // pair -> (count, rule, next free position)
        let mut counts: HashMap<(Symbol, Symbol), (usize, usize, usize)> = HashMap::new();
        for (ri, r) in rules.iter().enumerate() {
            let Some(r) = r else { continue };
            for i in 0..r.len().saturating_sub(1) {
                let e = counts.entry((r[i], r[i + 1])).or_insert((0, usize::MAX, 0));
                if e.1 != ri || i >= e.2 {
                    e.0 += 1;
                    e.1 = ri;
                    e.2 = i + 2;
                }
            }
        }
        let best = counts
            .iter()
            .filter(|(_, v)| v.0 >= 2)
            .max_by(|(pa, va), (pb, vb)| va.0.cmp(&vb.0).then_with(|| pb.cmp(pa)));
        let Some((&(a, b), _)) = best else { break };
        let id = Symbol::N(rules.len() as u32);
        for r in rules.iter_mut().flatten() {
            let mut out = Vec::with_capacity(r.len());
            let mut i = 0;
            while i < r.len() {
                if i + 1 < r.len() && r[i] == a && r[i + 1] == b {
                    out.push(id);
                    i += 2;
                } else {
                    out.push(r[i]);
                    i += 1;
                }
            }
            *r = out;
        }
        rules.push(Some(vec![a, b]));
    }
    while inline_single_use(&mut rules, 0) {}
    compact(rules, 0)
}
