use super::{compact, inline_single_use};
use crate::slg::Slg;
use crate::symbol::{Symbol, Terminal};

/// Sequitur: append one symbol, then apply the first applicable reduction
/// until none applies:
/// 1. the suffix pair of `S` is the whole rule of some `N`: use `N`;
/// 2. the suffix pair of `S` occurs elsewhere: new rule for both;
/// 3. a rule used once is inlined.
pub fn sequitur(u: &[Terminal]) -> Slg {
    let mut rules: Vec<Option<Vec<Symbol>>> = vec![Some(Vec::new())];
    for &t in u {
        rules[0].as_mut().unwrap().push(Symbol::T(t));
        loop {
            if suffix_is_rule(&mut rules) || suffix_repeats(&mut rules) {
                continue;
            }
            if !inline_single_use(&mut rules, 0) {
                break;
            }
        }
    }
    compact(rules, 0)
}

fn suffix_pair(rules: &[Option<Vec<Symbol>>]) -> Option<(Symbol, Symbol)> {
    let s = rules[0].as_ref().unwrap();
    (s.len() >= 2).then(|| (s[s.len() - 2], s[s.len() - 1]))
}

fn suffix_is_rule(rules: &mut [Option<Vec<Symbol>>]) -> bool {
    let Some((a, b)) = suffix_pair(rules) else { return false };
    let Some(n) = (1..rules.len()).find(|&i| rules[i].as_deref() == Some(&[a, b][..])) else {
        return false;
    };
    let s = rules[0].as_mut().unwrap();
    let k = s.len();
    s.splice(k - 2.., [Symbol::N(n as u32)]);
    true
}

fn suffix_repeats(rules: &mut Vec<Option<Vec<Symbol>>>) -> bool {
    let Some((a, b)) = suffix_pair(rules) else { return false };
    let slen = rules[0].as_ref().unwrap().len();
    let mut found = None;
    'search: for (ri, r) in rules.iter().enumerate() {
        let Some(r) = r else { continue };
        let limit = if ri == 0 { (slen + 1).saturating_sub(4) } else { r.len().saturating_sub(1) };
        for i in 0..limit {
            if r[i] == a && r[i + 1] == b {
                found = Some((ri, i));
                break 'search;
            }
        }
    }
    let Some((ri, i)) = found else { return false };
    let m = Symbol::N(rules.len() as u32);
    rules.push(Some(vec![a, b]));
    let s = rules[0].as_mut().unwrap();
    s.splice(slen - 2.., [m]);
    rules[ri].as_mut().unwrap().splice(i..i + 2, [m]);
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::chars;

    #[test]
    fn small_examples() {
        assert_eq!(sequitur(&chars("ab")).serialize(), "S -> a b\n");
        assert_eq!(sequitur(&chars("abab")).serialize(), "S -> R1 R1\nR1 -> a b\n");
    }

    #[test]
    fn abcabc_trace() {
        // a b c a b -> S: R1 c R1 with R1 -> a b; then c: suffix R1 c repeats,
        // R2 -> R1 c, R1 becomes single-use and is inlined.
        let g = sequitur(&chars("abcabc"));
        assert_eq!(g.serialize(), "S -> R1 R1\nR1 -> a b c\n");
    }

    #[test]
    fn round_trips() {
        for s in ["aaaaaaaaa", "abcabcabcabc", "abracadabra", "a", "xyzzyxyzzy", "aabaabaab"] {
            assert_eq!(sequitur(&chars(s)).expand_start(), chars(s), "{s}");
        }
    }
}
