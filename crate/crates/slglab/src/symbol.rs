//! Terminals, sentinel families and grammar symbols.

use std::fmt;

/// A terminal symbol.
///
/// Plain characters and every sentinel family live in disjoint variants, so
/// strings built by different constructions never collide. The derived order
/// is the lexicographic order used for tie-breaking.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Terminal {
    Char(char),
    /// `$_i`
    Dollar(u32),
    /// `$'_i`
    DollarPrime(u32),
    /// `#_i`
    Hash(u32),
    /// `#'_i`
    HashPrime(u32),
    /// `#L_i`
    HashL(u32),
    /// `#R_i`
    HashR(u32),
    /// `#'L_i`
    HashPrimeL(u32),
    /// `#'R_i`
    HashPrimeR(u32),
}

impl Terminal {
    pub fn is_sentinel(self) -> bool {
        !matches!(self, Terminal::Char(_))
    }

    /// Parses a display token. Plain characters may be escaped
    /// (`\s`, `\t`, `\n`, `\r`, `\\`, and `\` before any other char).
    pub fn parse_token(tok: &str) -> Option<Terminal> {
        if let Some(t) = parse_sentinel(tok) {
            return Some(t);
        }
        let mut it = tok.chars();
        let c = match (it.next()?, it.next(), it.next()) {
            (c, None, _) if c != '\\' => c,
            ('\\', Some(e), None) => match e {
                's' => ' ',
                't' => '\t',
                'n' => '\n',
                'r' => '\r',
                other => other,
            },
            _ => return None,
        };
        Some(Terminal::Char(c))
    }

    /// Display token, escaping characters in `extra` as well as whitespace
    /// and the backslash.
    pub fn token_escaped(self, extra: &[char]) -> String {
        match self {
            Terminal::Char(c) => match c {
                ' ' => "\\s".into(),
                '\t' => "\\t".into(),
                '\n' => "\\n".into(),
                '\r' => "\\r".into(),
                '\\' => "\\\\".into(),
                c if extra.contains(&c) || c.is_whitespace() => format!("\\{c}"),
                c => c.to_string(),
            },
            other => other.to_string(),
        }
    }
}

fn parse_sentinel(tok: &str) -> Option<Terminal> {
    let (head, idx) = tok.rsplit_once('_')?;
    if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let i: u32 = idx.parse().ok()?;
    Some(match head {
        "$" => Terminal::Dollar(i),
        "$'" => Terminal::DollarPrime(i),
        "#" => Terminal::Hash(i),
        "#'" => Terminal::HashPrime(i),
        "#L" => Terminal::HashL(i),
        "#R" => Terminal::HashR(i),
        "#'L" => Terminal::HashPrimeL(i),
        "#'R" => Terminal::HashPrimeR(i),
        _ => return None,
    })
}

impl fmt::Display for Terminal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Terminal::Char(c) => write!(f, "{c}"),
            Terminal::Dollar(i) => write!(f, "$_{i}"),
            Terminal::DollarPrime(i) => write!(f, "$'_{i}"),
            Terminal::Hash(i) => write!(f, "#_{i}"),
            Terminal::HashPrime(i) => write!(f, "#'_{i}"),
            Terminal::HashL(i) => write!(f, "#L_{i}"),
            Terminal::HashR(i) => write!(f, "#R_{i}"),
            Terminal::HashPrimeL(i) => write!(f, "#'L_{i}"),
            Terminal::HashPrimeR(i) => write!(f, "#'R_{i}"),
        }
    }
}

/// A right-hand-side symbol: a terminal or a nonterminal index local to one
/// grammar.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Symbol {
    T(Terminal),
    N(u32),
}

impl Symbol {
    pub fn ch(c: char) -> Symbol {
        Symbol::T(Terminal::Char(c))
    }

    pub fn terminal(self) -> Option<Terminal> {
        match self {
            Symbol::T(t) => Some(t),
            Symbol::N(_) => None,
        }
    }

    pub fn nonterminal(self) -> Option<u32> {
        match self {
            Symbol::N(n) => Some(n),
            Symbol::T(_) => None,
        }
    }
}

impl From<Terminal> for Symbol {
    fn from(t: Terminal) -> Symbol {
        Symbol::T(t)
    }
}

/// Converts a plain string into terminals, one per char.
pub fn chars(s: &str) -> Vec<Terminal> {
    s.chars().map(Terminal::Char).collect()
}

/// Renders terminals as whitespace separated display tokens.
pub fn tokens(s: &[Terminal]) -> String {
    let mut out = String::new();
    for (i, t) in s.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&t.token_escaped(&[]));
    }
    out
}

/// Parses whitespace separated display tokens.
pub fn parse_tokens(s: &str) -> Option<Vec<Terminal>> {
    s.split_whitespace().map(Terminal::parse_token).collect()
}

/// Concatenates plain characters; `None` if any sentinel is present.
pub fn plain(s: &[Terminal]) -> Option<String> {
    s.iter()
        .map(|t| match t {
            Terminal::Char(c) => Some(*c),
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sentinel_tokens_round_trip() {
        let all = [
            Terminal::Dollar(3),
            Terminal::DollarPrime(1),
            Terminal::Hash(12),
            Terminal::HashPrime(2),
            Terminal::HashL(4),
            Terminal::HashR(5),
            Terminal::HashPrimeL(6),
            Terminal::HashPrimeR(7),
            Terminal::Char('x'),
            Terminal::Char(' '),
            Terminal::Char('\\'),
            Terminal::Char('ā'),
        ];
        for t in all {
            assert_eq!(Terminal::parse_token(&t.token_escaped(&[])), Some(t));
        }
        assert_eq!(Terminal::Dollar(3).to_string(), "$_3");
        assert_eq!(Terminal::HashPrimeL(2).to_string(), "#'L_2");
    }

    #[test]
    fn bad_tokens() {
        assert_eq!(Terminal::parse_token("ab"), None);
        assert_eq!(Terminal::parse_token("$_"), None);
        assert_eq!(Terminal::parse_token(""), None);
        assert_eq!(Terminal::parse_token("$"), Some(Terminal::Char('$')));
    }

    #[test]
    fn ordering_separates_families() {
        assert!(Terminal::Char('z') < Terminal::Dollar(0));
        assert!(Terminal::Dollar(99) < Terminal::DollarPrime(0));
        assert!(Symbol::T(Terminal::HashPrimeR(9)) < Symbol::N(0));
    }
}
