//! Maximal strings over the right-hand sides of a grammar.
//!
//! All rules are concatenated with unique separators and indexed by a suffix
//! array. Each LCP interval covers the strings of lengths `(parent depth,
//! depth]` that share one occurrence set; the greedy non-overlapping count
//! `f` is non-increasing in the length, so only the lengths where `f` drops
//! can be maximal. They are found by bisection.

use crate::symbol::Symbol;

/// One maximal string, given by an occurrence in the indexed text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Candidate {
    pub len: usize,
    pub count: usize,
    pub pos: usize,
}

pub(crate) struct Indexed {
    pub text: Vec<u32>,
    pub symbols: Vec<Symbol>,
}

impl Indexed {
    pub fn new<'a>(rules: impl Iterator<Item = &'a [Symbol]> + Clone) -> Indexed {
        let mut symbols: Vec<Symbol> = rules.clone().flatten().copied().collect();
        symbols.sort_unstable();
        symbols.dedup();
        let base = symbols.len() as u32;
        let mut text = Vec::new();
        for (j, r) in rules.enumerate() {
            for s in r {
                text.push(symbols.binary_search(s).unwrap() as u32);
            }
            text.push(base + j as u32);
        }
        Indexed { text, symbols }
    }

    pub fn string(&self, c: &Candidate) -> Vec<Symbol> {
        self.text[c.pos..c.pos + c.len].iter().map(|&x| self.symbols[x as usize]).collect()
    }

    pub fn slice(&self, c: &Candidate) -> &[u32] {
        &self.text[c.pos..c.pos + c.len]
    }
}

pub(crate) fn suffix_array(s: &[u32]) -> Vec<usize> {
    let n = s.len();
    let mut sa: Vec<usize> = (0..n).collect();
    let mut rank: Vec<u64> = s.iter().map(|&x| x as u64).collect();
    let mut tmp = vec![0u64; n];
    let mut k = 1;
    loop {
        let key = |i: usize, rank: &[u64]| (rank[i], if i + k < n { rank[i + k] + 1 } else { 0 });
        sa.sort_unstable_by_key(|&i| key(i, &rank));
        tmp[sa[0]] = 0;
        for w in 1..n {
            tmp[sa[w]] = tmp[sa[w - 1]] + u64::from(key(sa[w - 1], &rank) != key(sa[w], &rank));
        }
        std::mem::swap(&mut rank, &mut tmp);
        if n == 0 || rank[sa[n - 1]] as usize == n - 1 {
            break;
        }
        k *= 2;
    }
    sa
}

/// `lcp[i]` is the longest common prefix of suffixes `sa[i-1]` and `sa[i]`.
pub(crate) fn lcp_array(s: &[u32], sa: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut rank = vec![0; n];
    for (i, &p) in sa.iter().enumerate() {
        rank[p] = i;
    }
    let mut lcp = vec![0; n];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] > 0 {
            let j = sa[rank[i] - 1];
            while i + h < n && j + h < n && s[i + h] == s[j + h] {
                h += 1;
            }
            lcp[rank[i]] = h;
            h = h.saturating_sub(1);
        } else {
            h = 0;
        }
    }
    lcp
}

fn greedy_count(pos: &[usize], len: usize) -> usize {
    let mut count = 0;
    let mut free = 0usize;
    for &p in pos {
        if p >= free {
            count += 1;
            free = p + len;
        }
    }
    count
}

/// Every maximal string of the indexed text.
pub(crate) fn maximal_candidates(ix: &Indexed) -> Vec<Candidate> {
    let text = &ix.text;
    let n = text.len();
    if n == 0 {
        return Vec::new();
    }
    let sa = suffix_array(text);
    let lcp = lcp_array(text, &sa);

    // (len, count, pos) at every length where f drops, restricted to f >= 2.
    let mut drops: Vec<Candidate> = Vec::new();
    let mut positions: Vec<usize> = Vec::new();
    let mut visit = |depth: usize, parent: usize, lb: usize, rb: usize| {
        let lo = (parent + 1).max(2);
        if lo > depth {
            return;
        }
        positions.clear();
        positions.extend_from_slice(&sa[lb..=rb]);
        positions.sort_unstable();
        let f = |l: usize| greedy_count(&positions, l);
        let (flo, fhi) = (f(lo), f(depth));
        if flo < 2 {
            return;
        }
        let pos = positions[0];
        let mut work = vec![(lo, depth, flo, fhi)];
        while let Some((a, b, fa, fb)) = work.pop() {
            if fa == fb {
                continue;
            }
            if b == a + 1 {
                if fa >= 2 {
                    drops.push(Candidate { len: a, count: fa, pos });
                }
                continue;
            }
            let m = (a + b) / 2;
            let fm = f(m);
            work.push((a, m, fa, fm));
            work.push((m, b, fm, fb));
        }
        if fhi >= 2 {
            drops.push(Candidate { len: depth, count: fhi, pos });
        }
    };

    // Bottom-up traversal of the LCP intervals.
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    for i in 1..=n {
        let cur = lcp.get(i).copied().unwrap_or(0);
        let mut lb = i - 1;
        while cur < stack.last().unwrap().0 {
            let (depth, start) = stack.pop().unwrap();
            let parent = cur.max(stack.last().unwrap().0);
            visit(depth, parent, start, i - 1);
            lb = start;
        }
        if cur > stack.last().unwrap().0 {
            stack.push((cur, lb));
        }
    }

    // best[l] = highest count among strings of length >= l.
    let max_len = drops.iter().map(|c| c.len).max().unwrap_or(0);
    let mut best = vec![1usize; max_len + 2];
    for c in &drops {
        best[c.len] = best[c.len].max(c.count);
    }
    for l in (0..=max_len).rev() {
        best[l] = best[l].max(best[l + 1]);
    }
    drops.retain(|c| c.count > best[c.len + 1]);
    drops
}

/// Greedy left-to-right non-overlapping occurrences of `s` in `r`.
pub fn count_in(r: &[Symbol], s: &[Symbol]) -> usize {
    if s.is_empty() || s.len() > r.len() {
        return 0;
    }
    let mut i = 0;
    let mut c = 0;
    while i + s.len() <= r.len() {
        if &r[i..i + s.len()] == s {
            c += 1;
            i += s.len();
        } else {
            i += 1;
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_sa(s: &[u32]) -> Vec<usize> {
        let mut v: Vec<usize> = (0..s.len()).collect();
        v.sort_by(|&a, &b| s[a..].cmp(&s[b..]));
        v
    }

    #[test]
    fn suffix_array_matches_naive() {
        let s = [1u32, 0, 1, 0, 1, 2, 1, 0, 0, 0, 3];
        assert_eq!(suffix_array(&s), naive_sa(&s));
        let lcp = lcp_array(&s, &naive_sa(&s));
        let sa = naive_sa(&s);
        for i in 1..s.len() {
            let h = s[sa[i - 1]..].iter().zip(&s[sa[i]..]).take_while(|(a, b)| a == b).count();
            assert_eq!(lcp[i], h);
        }
    }

    #[test]
    fn greedy_counts() {
        let a = Symbol::ch('a');
        let b = Symbol::ch('b');
        assert_eq!(count_in(&[a, a, a, a], &[a, a]), 2);
        assert_eq!(count_in(&[a, b], &[a, b]), 1);
        assert_eq!(count_in(&[a, b, a, b, a], &[a, b, a]), 1);
        assert_eq!(greedy_count(&[0, 1, 2, 3], 2), 2);
    }
}
