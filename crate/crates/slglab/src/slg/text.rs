//! Line format: `HEAD -> tok tok ...`, start rule first.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use super::Slg;
use crate::error::{Error, Result};
use crate::symbol::{Symbol, Terminal};

fn valid_head(name: &str) -> bool {
    !name.is_empty()
        && !name.starts_with('#')
        && name != "->"
        && !name.chars().any(char::is_whitespace)
        && Terminal::parse_token(name).is_none_or(|t| !t.is_sentinel())
}

impl FromStr for Slg {
    type Err = Error;

    fn from_str(text: &str) -> Result<Slg> {
        let mut heads: Vec<(usize, &str, Vec<&str>)> = Vec::new();
        let mut index: HashMap<&str, u32> = HashMap::new();
        for (ln, line) in text.lines().enumerate() {
            let line_no = ln + 1;
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let mut toks = t.split_whitespace();
            let head = toks.next().unwrap();
            if toks.next() != Some("->") {
                return Err(Error::Parse { line: line_no, msg: "expected `HEAD -> ...`".into() });
            }
            if !valid_head(head) {
                return Err(Error::Parse { line: line_no, msg: format!("invalid head `{head}`") });
            }
            if index.insert(head, heads.len() as u32).is_some() {
                return Err(Error::Parse { line: line_no, msg: format!("duplicate head `{head}`") });
            }
            heads.push((line_no, head, toks.collect()));
        }
        if heads.is_empty() {
            return Err(Error::Parse { line: 0, msg: "no rules".into() });
        }
        let mut rules = Vec::with_capacity(heads.len());
        for (line_no, _, body) in &heads {
            let mut rhs = Vec::with_capacity(body.len());
            for tok in body {
                if let Some(&n) = index.get(tok) {
                    rhs.push(Symbol::N(n));
                } else if let Some(t) = Terminal::parse_token(tok) {
                    rhs.push(Symbol::T(t));
                } else {
                    return Err(Error::Parse { line: *line_no, msg: format!("unknown token `{tok}`") });
                }
            }
            rules.push(rhs);
        }
        let names: Vec<String> = heads.iter().map(|h| h.1.to_string()).collect();
        Slg::with_names(rules, names, 0).map_err(|e| match e {
            Error::Cycle(name) => {
                let line = heads.iter().find(|h| h.1 == name).map_or(0, |h| h.0);
                Error::Parse { line, msg: format!("cycle through `{name}`") }
            }
            other => other,
        })
    }
}

impl Slg {
    /// Names usable in the text format: invalid, duplicate or
    /// terminal-shadowing names are replaced.
    pub fn printable_names(&self) -> Vec<String> {
        let terminal_tokens: HashSet<String> =
            self.terminals().iter().map(|t| t.token_escaped(&[])).collect();
        let mut used: HashSet<String> = HashSet::new();
        let mut out = Vec::with_capacity(self.names.len());
        for (i, name) in self.names.iter().enumerate() {
            let ok = valid_head(name) && !terminal_tokens.contains(name) && !used.contains(name);
            let mut n = if ok { name.clone() } else { format!("N{i}") };
            while terminal_tokens.contains(&n) || used.contains(&n) {
                n.push('\'');
            }
            used.insert(n.clone());
            out.push(n);
        }
        out
    }

    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Slg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.printable_names();
        let order = std::iter::once(self.start)
            .chain((0..self.rules.len() as u32).filter(|&i| i != self.start));
        for n in order {
            write!(f, "{} ->", names[n as usize])?;
            for s in &self.rules[n as usize] {
                match s {
                    Symbol::T(t) => write!(f, " {}", t.token_escaped(&[]))?,
                    Symbol::N(m) => write!(f, " {}", names[*m as usize])?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_g0() {
        let g: Slg = "S -> N1 N1\nN1 -> a b\n".parse().unwrap();
        assert_eq!(g.serialize(), "S -> N1 N1\nN1 -> a b\n");
        assert_eq!(g.serialize().parse::<Slg>().unwrap(), g);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g: Slg = "# a grammar\n\nS -> A #_2 A\n  # more\nA -> \\s $_1\n".parse().unwrap();
        assert_eq!(g.rhs(0)[1], Symbol::T(Terminal::Hash(2)));
        assert_eq!(g.rhs(1), &[Symbol::ch(' '), Symbol::T(Terminal::Dollar(1))]);
    }

    #[test]
    fn duplicate_head() {
        let e = "S -> a\nS -> b".parse::<Slg>().unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn cycle_reports_line() {
        let e = "S -> A\nA -> B\nB -> A".parse::<Slg>().unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2 | 3, .. }), "{e:?}");
    }

    #[test]
    fn unknown_token() {
        let e = "S -> ab c".parse::<Slg>().unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn sentinel_round_trip() {
        let g: Slg = "S -> a $_3 b\n".parse().unwrap();
        let text = g.serialize();
        assert_eq!(text, "S -> a $_3 b\n");
        assert_eq!(text.parse::<Slg>().unwrap(), g);
    }

    #[test]
    fn shadowing_names_are_replaced() {
        let g = Slg::with_names(
            vec![vec![Symbol::N(1), Symbol::ch('a')], vec![Symbol::ch('a'), Symbol::ch('b')]],
            vec!["S".into(), "a".into()],
            0,
        )
        .unwrap();
        let back: Slg = g.serialize().parse().unwrap();
        assert_eq!(back.rules(), g.rules());
    }
}
