//! Answer strings of parity range counting and their small grammars.

use std::collections::HashMap;

use crate::error::{pre, Result};
use crate::slg::Slg;
use crate::symbol::{Symbol, Terminal};

/// `m` distinct points on the `m x m` grid, coordinates 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    m: usize,
    points: Vec<(usize, usize)>,
}

impl PointSet {
    pub fn new(m: usize, points: &[(usize, usize)]) -> Result<PointSet> {
        if m == 0 {
            return pre("grid side must be positive");
        }
        let mut pts = points.to_vec();
        pts.sort_unstable();
        pts.dedup();
        if pts.len() != points.len() {
            return pre("points must be distinct");
        }
        if pts.len() != m {
            return pre(format!("expected exactly {m} points, got {}", pts.len()));
        }
        if let Some(p) = pts.iter().find(|&&(x, y)| x == 0 || y == 0 || x > m || y > m) {
            return pre(format!("point {p:?} outside [1..{m}]^2"));
        }
        Ok(PointSet { m, points: pts })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Points sorted by `(x, y)`.
    pub fn points(&self) -> &[(usize, usize)] {
        &self.points
    }

    /// Pads to the next power of two with the diagonal points `(p, p)`,
    /// which leaves every range count over the original grid unchanged.
    pub fn padded(&self) -> PointSet {
        let m2 = self.m.next_power_of_two();
        let mut points = self.points.clone();
        points.extend((self.m + 1..=m2).map(|p| (p, p)));
        PointSet::new(m2, &points).expect("padding keeps the set valid")
    }

    /// Parses `m` on the first line, then one `x y` pair per line.
    pub fn parse(text: &str) -> Result<PointSet> {
        let mut nums = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            for tok in t.split_whitespace() {
                let v: usize = tok.parse().map_err(|_| crate::Error::Parse {
                    line: ln + 1,
                    msg: format!("bad number `{tok}`"),
                })?;
                nums.push(v);
            }
        }
        let Some((&m, rest)) = nums.split_first() else {
            return Err(crate::Error::Parse { line: 0, msg: "missing grid side".into() });
        };
        if rest.len() % 2 != 0 {
            return Err(crate::Error::Parse { line: 0, msg: "odd number of coordinates".into() });
        }
        let pts: Vec<(usize, usize)> = rest.chunks(2).map(|c| (c[0], c[1])).collect();
        PointSet::new(m, &pts)
    }
}

fn bit(b: bool) -> Terminal {
    Terminal::Char(if b { '1' } else { '0' })
}

/// `A(P)[x + (y-1)m]` is the parity of the points dominated by `(x, y)`.
pub fn answer_string(p: &PointSet) -> Vec<Terminal> {
    let m = p.m;
    // running prefix parities, row by row
    let mut grid = vec![false; m * m];
    for &(x, y) in &p.points {
        grid[(x - 1) + (y - 1) * m] ^= true;
    }
    for y in 0..m {
        for x in 0..m {
            let mut v = grid[x + y * m];
            if x > 0 {
                v ^= grid[x - 1 + y * m];
            }
            if y > 0 {
                v ^= grid[x + (y - 1) * m];
            }
            if x > 0 && y > 0 {
                v ^= grid[x - 1 + (y - 1) * m];
            }
            grid[x + y * m] = v;
        }
    }
    grid.into_iter().map(bit).collect()
}

struct Builder {
    rules: Vec<Vec<Symbol>>,
    neg: Vec<Symbol>,
    nodes: HashMap<(Symbol, Symbol), u32>,
}

impl Builder {
    fn negate(&self, s: Symbol) -> Symbol {
        match s {
            Symbol::T(Terminal::Char(c)) => Symbol::T(bit(c == '0')),
            Symbol::N(n) => self.neg[n as usize],
            Symbol::T(_) => unreachable!("answer grammars use 0 and 1 only"),
        }
    }

    /// The node with the given children, creating it and its negation.
    fn node(&mut self, l: Symbol, r: Symbol) -> Symbol {
        if let Some(&n) = self.nodes.get(&(l, r)) {
            return Symbol::N(n);
        }
        let (nl, nr) = (self.negate(l), self.negate(r));
        let a = self.rules.len() as u32;
        let b = a + 1;
        self.rules.push(vec![l, r]);
        self.rules.push(vec![nl, nr]);
        self.neg.push(Symbol::N(b));
        self.neg.push(Symbol::N(a));
        self.nodes.insert((l, r), a);
        self.nodes.insert((nl, nr), b);
        Symbol::N(a)
    }

    /// Negates positions `x..` (1-based) of the subtree `s` of height `h`.
    fn flip_suffix(&mut self, s: Symbol, h: u32, x: usize) -> Symbol {
        if x == 1 {
            return self.negate(s);
        }
        let Symbol::N(n) = s else { unreachable!("x > 1 inside a leaf") };
        let (l, r) = (self.rules[n as usize][0], self.rules[n as usize][1]);
        let half = 1usize << (h - 1);
        if x <= half {
            let l2 = self.flip_suffix(l, h - 1, x);
            let r2 = self.negate(r);
            self.node(l2, r2)
        } else {
            let r2 = self.flip_suffix(r, h - 1, x - half);
            self.node(l, r2)
        }
    }
}

/// Admissible grammar for the answer string.
///
/// Rows are processed bottom-up; each point negates a suffix of its row by
/// one root-to-leaf walk over hash-consed nodes that always exist together
/// with their negations. The row roots are combined by a perfect binary
/// tree `R_i -> R_{2i} R_{2i+1}`, and unreachable nodes are dropped.
pub fn answer_grammar(p: &PointSet) -> Result<Slg> {
    let m = p.m;
    if m < 2 || !m.is_power_of_two() {
        return pre(format!("grid side {m} is not a power of two at least 2"));
    }
    let levels = m.trailing_zeros();
    let mut b = Builder { rules: Vec::new(), neg: Vec::new(), nodes: HashMap::new() };
    let mut zero = Symbol::T(bit(false));
    for _ in 0..levels {
        zero = b.node(zero, zero);
    }
    let mut by_row: Vec<Vec<usize>> = vec![Vec::new(); m];
    for &(x, y) in &p.points {
        by_row[y - 1].push(x);
    }
    let mut row = zero;
    let mut roots = Vec::with_capacity(m);
    for xs in &mut by_row {
        xs.sort_unstable();
        for &x in xs.iter() {
            row = b.flip_suffix(row, levels, x);
        }
        roots.push(row);
    }
    // heap-ordered row tree: tree[i] for i in [m, 2m) are the row roots
    let mut tree = vec![Symbol::N(0); 2 * m];
    tree[m..].copy_from_slice(&roots);
    let first_row_rule = b.rules.len() as u32;
    for i in (1..m).rev() {
        b.rules.push(vec![tree[2 * i], tree[2 * i + 1]]);
        tree[i] = Symbol::N(b.rules.len() as u32 - 1);
    }
    let Symbol::N(start) = tree[1] else { unreachable!() };
    let mut names: Vec<String> = (0..b.rules.len()).map(|i| format!("X{i}")).collect();
    for i in 1..m {
        names[(first_row_rule + (m - 1 - i) as u32) as usize] = format!("R{i}");
    }
    names[start as usize] = "S".into();
    Ok(Slg::with_names(b.rules, names, start)?.prune_unreachable())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::plain;

    fn s(p: &PointSet) -> String {
        plain(&answer_string(p)).unwrap()
    }

    #[test]
    fn small_answer_strings() {
        let p = PointSet::new(2, &[(1, 1), (2, 2)]).unwrap();
        assert_eq!(s(&p), "1110");
        let q = PointSet::new(2, &[(2, 1), (2, 2)]).unwrap();
        assert_eq!(s(&q), "0100");
        assert!(PointSet::new(2, &[]).is_err());
        assert!(PointSet::new(2, &[(1, 1), (1, 1)]).is_err());
        assert!(PointSet::new(2, &[(1, 1), (3, 1)]).is_err());
    }

    #[test]
    fn grammars_expand_correctly() {
        for pts in [[(1, 1), (2, 2)], [(2, 1), (2, 2)], [(1, 1), (1, 2)], [(1, 2), (2, 2)]] {
            let p = PointSet::new(2, &pts).unwrap();
            let g = answer_grammar(&p).unwrap();
            assert!(g.is_admissible());
            assert_eq!(g.expand_start(), answer_string(&p));
        }
        let p = PointSet::new(4, &[(1, 3), (4, 1), (2, 2), (3, 3)]).unwrap();
        let g = answer_grammar(&p).unwrap();
        assert!(g.is_admissible());
        assert_eq!(g.expand_start(), answer_string(&p));
    }

    #[test]
    fn padding() {
        let p = PointSet::new(3, &[(1, 1), (2, 3), (3, 2)]).unwrap();
        assert!(answer_grammar(&p).is_err());
        let q = p.padded();
        assert_eq!(q.m(), 4);
        let a = answer_string(&p);
        let b = answer_string(&q);
        for y in 0..3 {
            assert_eq!(a[y * 3..y * 3 + 3], b[y * 4..y * 4 + 3]);
        }
        assert_eq!(PointSet::parse("3\n1 1\n2 3\n3 2\n").unwrap(), p);
    }
}
