//! General context-free grammars.

mod cyk;
mod transform;

pub use cyk::{cyk_member, cyk_member_capped, DEFAULT_CYK_CAP};
pub use transform::{add_prefix, erase_closure, gamma_prime_alpha, gamma_prime_beta, interleave, interleave_raw};

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::symbol::{Symbol, Terminal};

/// A CFG over an explicit terminal set. Bodies may be empty (ε).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cfg {
    names: Vec<String>,
    terminals: BTreeSet<Terminal>,
    rules: Vec<(u32, Vec<Symbol>)>,
    start: u32,
}

impl Cfg {
    /// A grammar with a single start nonterminal and no rules.
    pub fn new(start_name: &str) -> Cfg {
        Cfg { names: vec![start_name.to_string()], terminals: BTreeSet::new(), rules: Vec::new(), start: 0 }
    }

    /// Adds a nonterminal, renaming it with primes if the name is taken.
    pub fn add_nonterminal(&mut self, name: &str) -> u32 {
        let mut n = name.to_string();
        while self.names.contains(&n) {
            n.push('\'');
        }
        self.names.push(n);
        self.names.len() as u32 - 1
    }

    /// Adds a rule; terminals in the body join the terminal set.
    pub fn add_rule(&mut self, head: u32, body: Vec<Symbol>) {
        assert!((head as usize) < self.names.len(), "unknown head");
        for s in &body {
            match s {
                Symbol::T(t) => {
                    self.terminals.insert(*t);
                }
                Symbol::N(n) => assert!((*n as usize) < self.names.len(), "unknown nonterminal"),
            }
        }
        self.rules.push((head, body));
    }

    pub fn add_terminals(&mut self, ts: impl IntoIterator<Item = Terminal>) {
        self.terminals.extend(ts);
    }

    pub fn set_start(&mut self, n: u32) {
        self.start = n;
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn num_nonterminals(&self) -> usize {
        self.names.len()
    }

    pub fn terminals(&self) -> &BTreeSet<Terminal> {
        &self.terminals
    }

    pub fn rules(&self) -> &[(u32, Vec<Symbol>)] {
        &self.rules
    }

    /// Total body length.
    pub fn size(&self) -> usize {
        self.rules.iter().map(|r| r.1.len()).sum()
    }

    /// Nonterminals deriving ε.
    pub fn nullable(&self) -> Vec<bool> {
        let mut null = vec![false; self.names.len()];
        let mut changed = true;
        while changed {
            changed = false;
            for (h, body) in &self.rules {
                if !null[*h as usize] && body.iter().all(|s| matches!(s, Symbol::N(n) if null[*n as usize])) {
                    null[*h as usize] = true;
                    changed = true;
                }
            }
        }
        null
    }

    /// Every string of `L` up to length `n`, by least fixpoint iteration.
    /// Exponential in `n`; a testing oracle.
    pub fn language_up_to(&self, n: usize) -> BTreeSet<Vec<Terminal>> {
        let mut lang: Vec<HashSet<Vec<Terminal>>> = vec![HashSet::new(); self.names.len()];
        loop {
            let mut changed = false;
            for (h, body) in &self.rules {
                let mut acc: HashSet<Vec<Terminal>> = HashSet::from([Vec::new()]);
                for s in body {
                    let mut next = HashSet::new();
                    for p in &acc {
                        match s {
                            Symbol::T(t) if p.len() < n => {
                                let mut q = p.clone();
                                q.push(*t);
                                next.insert(q);
                            }
                            Symbol::T(_) => {}
                            Symbol::N(m) => {
                                for x in &lang[*m as usize] {
                                    if p.len() + x.len() <= n {
                                        next.insert([p.as_slice(), x].concat());
                                    }
                                }
                            }
                        }
                    }
                    acc = next;
                    if acc.is_empty() {
                        break;
                    }
                }
                for x in acc {
                    changed |= lang[*h as usize].insert(x);
                }
            }
            if !changed {
                break;
            }
        }
        lang.swap_remove(self.start as usize).into_iter().collect()
    }
}

fn valid_head(name: &str) -> bool {
    !name.is_empty()
        && !name.starts_with(['#', '\\', '@'])
        && !["->", "|", "_"].contains(&name)
        && Terminal::parse_token(name).is_none_or(|t| !t.is_sentinel())
}

/// Line format `HEAD -> tok tok | tok | _`, `_` is ε and `\|`, `\_` escape
/// the literal characters. The first head is the start. Repeated heads add
/// alternatives. A line `@terminals tok ...` widens the terminal set.
impl FromStr for Cfg {
    type Err = Error;

    fn from_str(text: &str) -> Result<Cfg> {
        let mut lines: Vec<(usize, &str, Vec<&str>)> = Vec::new();
        let mut extra: Vec<(usize, &str)> = Vec::new();
        let mut index: HashMap<&str, u32> = HashMap::new();
        let mut names = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let mut toks = t.split_whitespace();
            let head = toks.next().unwrap();
            if head == "@terminals" {
                extra.extend(toks.map(|x| (ln + 1, x)));
                continue;
            }
            if toks.next() != Some("->") {
                return Err(Error::Parse { line: ln + 1, msg: "expected `HEAD -> ...`".into() });
            }
            if !valid_head(head) {
                return Err(Error::Parse { line: ln + 1, msg: format!("invalid head `{head}`") });
            }
            index.entry(head).or_insert_with(|| {
                names.push(head.to_string());
                names.len() as u32 - 1
            });
            lines.push((ln + 1, head, toks.collect()));
        }
        if names.is_empty() {
            return Err(Error::Parse { line: 0, msg: "no rules".into() });
        }
        let mut g = Cfg { names, terminals: BTreeSet::new(), rules: Vec::new(), start: 0 };
        let tok = |line: usize, s: &str| -> Result<Symbol> {
            if let Some(&n) = index.get(s) {
                return Ok(Symbol::N(n));
            }
            Terminal::parse_token(s)
                .map(Symbol::T)
                .ok_or_else(|| Error::Parse { line, msg: format!("unknown token `{s}`") })
        };
        for (line, head, body) in lines {
            for alt in body.split(|s| *s == "|") {
                let body = match alt {
                    ["_"] => Vec::new(),
                    [] => return Err(Error::Parse { line, msg: "empty alternative (write `_` for ε)".into() }),
                    toks => toks.iter().map(|s| tok(line, s)).collect::<Result<_>>()?,
                };
                g.add_rule(index[head], body);
            }
        }
        for (line, s) in extra {
            match tok(line, s)? {
                Symbol::T(t) => {
                    g.terminals.insert(t);
                }
                Symbol::N(_) => return Err(Error::Parse { line, msg: format!("`{s}` is a nonterminal") }),
            }
        }
        Ok(g)
    }
}

impl fmt::Display for Cfg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut esc = vec!['|', '_', '@'];
        esc.extend(self.names.iter().filter_map(|n| {
            let mut c = n.chars();
            c.next().filter(|_| c.next().is_none())
        }));
        let tok = |s: &Symbol| match s {
            Symbol::T(t) => t.token_escaped(&esc),
            Symbol::N(n) => self.names[*n as usize].clone(),
        };
        let mut order: Vec<u32> = vec![self.start];
        order.extend((0..self.names.len() as u32).filter(|&n| n != self.start));
        for h in order {
            let alts: Vec<String> = self
                .rules
                .iter()
                .filter(|r| r.0 == h)
                .map(|r| if r.1.is_empty() { "_".to_string() } else { r.1.iter().map(tok).collect::<Vec<_>>().join(" ") })
                .collect();
            if !alts.is_empty() {
                writeln!(f, "{} -> {}", self.names[h as usize], alts.join(" | "))?;
            }
        }
        let used: BTreeSet<Terminal> =
            self.rules.iter().flat_map(|r| r.1.iter().filter_map(|s| s.terminal())).collect();
        let unused: Vec<String> = self.terminals.difference(&used).map(|t| t.token_escaped(&esc)).collect();
        if !unused.is_empty() {
            writeln!(f, "@terminals {}", unused.join(" "))?;
        }
        Ok(())
    }
}
