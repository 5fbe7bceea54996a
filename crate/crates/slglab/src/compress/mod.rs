//! Grammar compressors.

mod bisection;
mod global;
mod irreducible;
mod lz;
pub(crate) mod maximal;
mod sequential;
mod sequitur;

pub use bisection::bisection;
pub use global::{global_step, maximal_strings, run_global, GlobalStrategy};
pub use irreducible::is_irreducible;
pub use lz::{lz78, lzd, Factorization, Lz78Index, Part, Phrase, PhraseSource};
pub use sequential::sequential;
pub use sequitur::sequitur;

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::slg::Slg;
use crate::symbol::{Symbol, Terminal};

/// Every compressor, by command-line name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Global(GlobalStrategy),
    Sequitur,
    Sequential,
    Bisection,
    Lz78,
    Lzd,
}

impl Algorithm {
    pub const ALL: [Algorithm; 9] = [
        Algorithm::Global(GlobalStrategy::RePair),
        Algorithm::Global(GlobalStrategy::RePairPairsOnly),
        Algorithm::Global(GlobalStrategy::Greedy),
        Algorithm::Global(GlobalStrategy::LongestMatch),
        Algorithm::Sequitur,
        Algorithm::Sequential,
        Algorithm::Bisection,
        Algorithm::Lz78,
        Algorithm::Lzd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Global(s) => s.name(),
            Algorithm::Sequitur => "sequitur",
            Algorithm::Sequential => "sequential",
            Algorithm::Bisection => "bisection",
            Algorithm::Lz78 => "lz78",
            Algorithm::Lzd => "lzd",
        }
    }

    pub fn run(self, u: &[Terminal]) -> Result<Slg> {
        if u.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(match self {
            Algorithm::Global(s) => run_global(u, s),
            Algorithm::Sequitur => sequitur(u),
            Algorithm::Sequential => sequential(u),
            Algorithm::Bisection => bisection(u),
            Algorithm::Lz78 => lz78(u).1,
            Algorithm::Lzd => lzd(u).1,
        })
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Algorithm, String> {
        Algorithm::ALL.into_iter().find(|a| a.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Algorithm::ALL.iter().map(|a| a.name()).collect();
            format!("unknown algorithm `{s}` (expected one of {})", names.join(", "))
        })
    }
}

/// Total greedy non-overlapping occurrences of `s` over all right-hand sides.
pub fn count_nonoverlapping(s: &[Symbol], g: &Slg) -> usize {
    g.rules().iter().map(|r| maximal::count_in(r, s)).sum()
}

/// Drops deleted rules, renumbers the rest in creation order and names them
/// `S`, `R1`, `R2`, ...
pub(crate) fn compact(rules: Vec<Option<Vec<Symbol>>>, start: u32) -> Slg {
    let mut remap = vec![u32::MAX; rules.len()];
    remap[start as usize] = 0;
    let mut next = 1;
    for (i, r) in rules.iter().enumerate() {
        if r.is_some() && i as u32 != start {
            remap[i] = next;
            next += 1;
        }
    }
    let mut out = vec![Vec::new(); next as usize];
    for (i, r) in rules.into_iter().enumerate() {
        if let Some(r) = r {
            out[remap[i] as usize] = r
                .into_iter()
                .map(|s| match s {
                    Symbol::N(m) => Symbol::N(remap[m as usize]),
                    t => t,
                })
                .collect();
        }
    }
    let names = (0..next).map(|i| if i == 0 { "S".into() } else { format!("R{i}") }).collect();
    Slg::with_names(out, names, 0).expect("compressor output is a valid grammar")
}

/// Occurrence counts of every nonterminal over live rules.
pub(crate) fn use_counts(rules: &[Option<Vec<Symbol>>]) -> Vec<usize> {
    let mut c = vec![0; rules.len()];
    for s in rules.iter().flatten().flatten() {
        if let Symbol::N(m) = s {
            c[*m as usize] += 1;
        }
    }
    c
}

/// Inlines one nonterminal (other than `start`) used exactly once.
/// Returns whether anything changed.
pub(crate) fn inline_single_use(rules: &mut [Option<Vec<Symbol>>], start: u32) -> bool {
    let counts = use_counts(rules);
    let Some(x) = (0..rules.len())
        .find(|&i| i as u32 != start && rules[i].is_some() && counts[i] == 1)
    else {
        return false;
    };
    let body = rules[x].take().unwrap();
    for r in rules.iter_mut().flatten() {
        if let Some(p) = r.iter().position(|&s| s == Symbol::N(x as u32)) {
            r.splice(p..=p, body);
            break;
        }
    }
    true
}
