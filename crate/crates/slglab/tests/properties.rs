use proptest::prelude::*;

use slglab::boost;
use slglab::cfg::{cyk_member, Cfg};
use slglab::compress::{bisection, sequential, is_irreducible};
use slglab::gen::{self, GrammarGen};
use slglab::rna::{wrna, wrna_value, MatchedAlphabet, DEFAULT_CAP};
use slglab::{Slg, Terminal};

fn text(max: usize) -> impl Strategy<Value = Vec<Terminal>> {
    prop::collection::vec(prop::sample::select(vec!['a', 'b', 'c']), 1..max)
        .prop_map(|v| v.into_iter().map(Terminal::Char).collect())
}

fn grammar(max_v: usize) -> impl Strategy<Value = Slg> {
    any::<u64>().prop_map(move |seed| GrammarGen::new(max_v, 3).sample(&mut gen::rng(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_access_matches_expansion(g in grammar(20)) {
        let u = g.expand_start();
        for (i, &c) in u.iter().enumerate() {
            prop_assert_eq!(g.random_access(i as u64 + 1).unwrap(), c);
        }
        prop_assert!(g.random_access(u.len() as u64 + 1).is_err());
    }

    #[test]
    fn text_format_round_trips(g in grammar(20)) {
        let back: Slg = g.serialize().parse().unwrap();
        prop_assert_eq!(back.expand_start(), g.expand_start());
        prop_assert!(back.is_isomorphic(&g));
    }

    #[test]
    fn make_admissible_invariants(seed in any::<u64>()) {
        let g = gen::slg(&mut gen::rng(seed), 12, &gen::letters(3));
        let h = g.make_admissible().unwrap();
        prop_assert!(h.is_admissible());
        prop_assert_eq!(h.expand_start(), g.expand_start());
        prop_assert!(h.size() <= 2 * g.size());
    }

    #[test]
    fn sequential_is_irreducible(u in text(200)) {
        let g = sequential(&u);
        prop_assert_eq!(g.expand_start(), u);
        prop_assert!(is_irreducible(&g));
    }

    #[test]
    fn bisection_output_is_dyadic(u in text(300)) {
        let g = bisection(&u);
        prop_assert_eq!(g.expand_start(), u.clone());
        prop_assert!(u.len() == 1 || g.is_dyadic());
    }

    #[test]
    fn alpha_and_beta_lengths(g in grammar(15)) {
        let st = g.stats().unwrap();
        let v = g.num_nonterminals() as u64;
        prop_assert_eq!(boost::alpha(&g).unwrap().text.len() as u64, 4 * st.total_expansion);
        prop_assert_eq!(boost::beta(&g).unwrap().text.len() as u64, 6 * st.total_expansion - 4 * v);
    }

    #[test]
    fn wrna_symmetries(seed in any::<u64>(), n in 0usize..40) {
        let mut rng = gen::rng(seed);
        let a: MatchedAlphabet = gen::alphabet(&mut rng, 3, 4);
        let syms: Vec<Terminal> = a.symbols().collect();
        let u = gen::string(&mut rng, n, &syms);
        let r = wrna(&u, &a).unwrap();
        let rev: Vec<Terminal> = u.iter().rev().copied().collect();
        prop_assert_eq!(wrna_value(&rev, &a, DEFAULT_CAP).unwrap(), r.value);
        prop_assert_eq!(wrna_value(&a.match_string(&u).unwrap(), &a, DEFAULT_CAP).unwrap(), r.value);
        prop_assert!(slglab::rna::validate_witness(&u, &a, &r));
    }

    #[test]
    fn cyk_agrees_with_enumeration(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let ab = gen::letters(2);
        let g: Cfg = gen::small_cfg(&mut rng, 3, &ab);
        let lang = g.language_up_to(8);
        for n in 0..=8 {
            for mask in 0u32..1 << n {
                let s: Vec<Terminal> = (0..n).map(|i| ab[(mask >> i & 1) as usize]).collect();
                prop_assert_eq!(cyk_member(&g, &s).unwrap(), lang.contains(&s), "{:?}", s);
            }
        }
    }

    #[test]
    fn cfg_text_round_trips(seed in any::<u64>()) {
        let g = gen::small_cfg(&mut gen::rng(seed), 4, &gen::letters(3));
        let back: Cfg = g.to_string().parse().unwrap();
        prop_assert_eq!(back, g);
    }
}
