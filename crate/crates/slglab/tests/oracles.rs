//! Frozen values on small hand-checkable instances.

use slglab::boost::{self, answer_grammar, answer_string, PointSet};
use slglab::cfg::{cyk_member, gamma_prime_alpha, gamma_prime_beta, Cfg};
use slglab::compress::{
    bisection, count_nonoverlapping, global_step, is_irreducible, lz78, lzd, maximal_strings, run_global,
    sequential, sequitur, GlobalStrategy,
};
use slglab::gen;
use slglab::rna::{rna, wrna_value, MatchedAlphabet, DEFAULT_CAP};
use slglab::symbol::{chars, parse_tokens, plain, tokens};
use slglab::{Slg, Symbol, Terminal};

fn g0() -> Slg {
    "S -> N1 N1\nN1 -> a b".parse().unwrap()
}

fn ab() -> MatchedAlphabet {
    MatchedAlphabet::unit(&[('a', 'A'), ('b', 'B')])
}

#[test]
fn g0_basics() {
    let g = g0();
    assert_eq!(plain(&g.expand_start()).unwrap(), "abab");
    let st = g.stats().unwrap();
    assert_eq!((st.size, st.num_nonterminals, st.expansion_length, st.total_expansion, st.height), (4, 2, 4, 6, 2));
    assert_eq!(g.random_access(3).unwrap(), Terminal::Char('a'));
    assert!(g.random_access(5).is_err());
    assert!(g.is_dyadic());
    let chain: Slg = "S -> A A\nA -> B B\nB -> a b".parse().unwrap();
    assert_eq!(chain.stats().unwrap().total_expansion, 14);
}

#[test]
fn admissible_examples() {
    let g: Slg = "S -> A\nA -> a b".parse().unwrap();
    let h = g.make_admissible().unwrap();
    assert!(h.is_admissible());
    assert_eq!(h.size(), 2);
    let g: Slg = "S -> a b a b a".parse().unwrap();
    let h = g.make_admissible().unwrap();
    assert_eq!(h.num_nonterminals(), 4);
    assert_eq!(h.size(), 8);
    assert_eq!(h.expand_start(), chars("ababa"));
}

#[test]
fn not_isomorphic_same_string() {
    let a: Slg = "S -> A b\nA -> a a".parse().unwrap();
    let b: Slg = "S -> a B\nB -> a b".parse().unwrap();
    assert!(!a.is_isomorphic(&b));
    let c: Slg = "S -> a A\nA -> a b".parse().unwrap();
    assert!(!c.is_dyadic());
}

#[test]
fn sentinel_round_trip() {
    let g: Slg = "S -> a $_3 b".parse().unwrap();
    assert_eq!(g.serialize().parse::<Slg>().unwrap().serialize(), g.serialize());
    assert_eq!(g.rhs(0)[1], Symbol::T(Terminal::Dollar(3)));
}

#[test]
fn occurrence_counts_and_steps() {
    let one = |s: &str| Slg::single(&chars(s));
    let sym = |s: &str| chars(s).into_iter().map(Symbol::T).collect::<Vec<_>>();
    assert_eq!(count_nonoverlapping(&sym("aa"), &one("aaaa")), 2);
    assert_eq!(count_nonoverlapping(&sym("aba"), &one("ababa")), 1);
    assert_eq!(maximal_strings(&one("abab")), vec![(sym("ab"), 2)]);
    assert_eq!(global_step(&one("abab"), &sym("ab")).unwrap().size(), 4);
    assert_eq!(global_step(&one("aaaa"), &sym("aa")).unwrap().size(), 4);
    assert_eq!(run_global(&chars("abab"), GlobalStrategy::RePair).size(), 4);
    let s = sequential(&chars("abab"));
    assert_eq!(s.num_nonterminals(), 2);
    assert!(is_irreducible(&s));
}

#[test]
fn g0_boosted_compressors() {
    let w = boost::alpha(&g0()).unwrap();
    assert_eq!(w.text.len(), 24);
    assert_eq!(w.delta, Some(8));
    assert_eq!(tokens(&w.text[..8]), "a $_1 b #_1 a $_1 b #_2");
    for alg in GlobalStrategy::ALL {
        assert_eq!(run_global(&w.text, alg).size(), 14, "{}", alg.name());
    }
    assert_eq!(sequential(&w.text).size(), 14);
    assert_eq!(sequitur(&w.text).size(), 14);
    let gi = boost::build_gi(&g0(), &[1]).unwrap();
    assert_eq!(gi.grammar.expand_start(), w.text);

    let b = boost::beta(&g0()).unwrap();
    assert_eq!(b.text.len(), 28);
    let (f, g) = lzd(&b.text);
    assert_eq!((f.len(), g.size()), (6, 18));
}

#[test]
fn single_rule_alpha() {
    let g: Slg = "S -> a b".parse().unwrap();
    let w = boost::alpha(&g).unwrap();
    assert_eq!(w.text, parse_tokens("a $_1 b #_1 a $_1 b #_2").unwrap());
    // first copy of exp'(S) starts at 0; the second at 4
    assert_eq!(w.delta, Some(0));
}

#[test]
fn rna_boost_values() {
    let u = g0().expand_start();
    let base = wrna_value(&u, &ab(), DEFAULT_CAP).unwrap();

    let a = boost::rna_alpha(&g0(), &ab()).unwrap();
    assert_eq!(a.text.len(), 48);
    assert_eq!(a.delta, Some(73));
    let ext = a.alphabet.as_ref().unwrap();
    assert_eq!(wrna_value(&a.text, ext, DEFAULT_CAP).unwrap(), 2 * base + 73);
    assert_eq!(run_global(&a.text, GlobalStrategy::RePair).size(), 7 * g0().size());

    let b = boost::rna_beta(&g0(), &ab()).unwrap();
    assert_eq!(b.text.len(), 96);
    assert_eq!(b.delta, Some(258));
    let ext = b.alphabet.as_ref().unwrap();
    assert_eq!(wrna_value(&b.text, ext, DEFAULT_CAP).unwrap(), 4 * base + 258);
    // 11|V| per half: the two halves share no repeated substring
    assert_eq!(sequential(&b.text).size(), 44);

    let c = boost::gamma(&g0(), &ab()).unwrap();
    assert_eq!(c.c0, Some(9));
    let ext = c.alphabet.as_ref().unwrap();
    assert_eq!(wrna_value(&c.text, ext, DEFAULT_CAP).unwrap(), 18 + base);
    assert_eq!(lzd(&c.text).1.size(), 30);
    assert!(c.text.len() as u64 <= 12 * 6 + 5);
}

#[test]
fn bisection_and_lz_examples() {
    assert_eq!(bisection(&chars("abab")).size(), 4);
    assert_eq!(bisection(&chars("aaaa")).size(), 4);
    let (f, g) = lz78(&chars("0111"));
    assert_eq!(f.len(), 3);
    assert_eq!(g.size(), 9);
    let w = boost::lz78_hard_string(&[(0, '0'), (2, '1')], 4).unwrap();
    assert_eq!(plain(&w).unwrap(), "0011");
    let (f, g) = lzd(&chars("abab"));
    assert_eq!(f.split(&chars("abab")).len(), 2);
    assert_eq!(g.size(), 5);
}

#[test]
fn answer_examples() {
    let p = PointSet::new(2, &[(1, 1), (2, 2)]).unwrap();
    assert_eq!(plain(&answer_string(&p)).unwrap(), "1110");
    let g = answer_grammar(&p).unwrap();
    assert!(g.is_admissible());
    assert_eq!(plain(&g.expand_start()).unwrap(), "1110");
    // row 1 reads "01"; (2, 2) dominates both points, so row 2 reads "00"
    let q = PointSet::new(2, &[(2, 1), (2, 2)]).unwrap();
    assert_eq!(plain(&answer_string(&q)).unwrap(), "0100");
    let col = PointSet::new(2, &[(1, 1), (1, 2)]).unwrap();
    assert_eq!(answer_grammar(&col).unwrap().expand_start(), answer_string(&col));
    let mut rng = gen::rng(4);
    for _ in 0..100 {
        let p = gen::point_set(&mut rng, 4);
        assert!(answer_grammar(&p).unwrap().size() <= 2 * 4 * 2 + 4 * 4);
    }
}

#[test]
fn rna_examples() {
    let a = ab();
    let s = |x: &str| chars(x);
    assert_eq!(rna(&s("abAB"), &a).unwrap().value, 1);
    assert_eq!(rna(&s("aAaA"), &a).unwrap().value, 2);
    let mut w = MatchedAlphabet::new();
    w.add_pair(Terminal::Char('a'), Terminal::Char('A'), 3).unwrap();
    w.add_pair(Terminal::Char('b'), Terminal::Char('B'), 1).unwrap();
    let rep = slglab::rna::weighted_to_unweighted(&s("abA"), &w).unwrap();
    assert_eq!(rep.len(), 7);
    assert_eq!(rna(&rep, &w).unwrap().value, 3);
}

#[test]
fn cfg_composers_on_g0() {
    let yes: Cfg = "S -> a b a b".parse().unwrap();
    let no: Cfg = "S -> a b b a".parse().unwrap();
    let w = boost::alpha(&g0()).unwrap().text;
    assert!(cyk_member(&gamma_prime_alpha(&yes, &g0()).unwrap(), &w).unwrap());
    assert!(!cyk_member(&gamma_prime_alpha(&no, &g0()).unwrap(), &w).unwrap());
    let w = boost::beta(&g0()).unwrap().text;
    assert!(cyk_member(&gamma_prime_beta(&yes, &g0()).unwrap(), &w).unwrap());
    assert!(!cyk_member(&gamma_prime_beta(&no, &g0()).unwrap(), &w).unwrap());
}
