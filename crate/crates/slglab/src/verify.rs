//! Randomized verification suites for the exact identities of the
//! constructions. Each check prints one verdict line per trial.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::boost::{
    alpha, answer_grammar, answer_string, beta, build_gi, gamma, lz78_hard_string, rna_alpha, rna_beta,
};
use crate::cfg::{add_prefix, cyk_member, erase_closure, gamma_prime_alpha, gamma_prime_beta, interleave, Cfg};
use crate::compress::{bisection, is_irreducible, lz78, lzd, run_global, sequential, sequitur, GlobalStrategy};
use crate::error::Result;
use crate::gen::{self, GrammarGen, Rng8};
use crate::rna::{
    check_decomposition, check_reverse_and_match, rna, validate_witness, weighted_to_unweighted, wrna,
    wrna_exhaustive, wrna_value, MatchedAlphabet, DEFAULT_CAP,
};
use crate::slg::Slg;
use crate::symbol::{Symbol, Terminal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Alpha,
    Global,
    Sequential,
    Sequitur,
    Lzd,
    Bisection,
    Lz78,
    Cfg,
    RnaAlpha,
    RnaBeta,
    Gamma,
    Rna,
    Answer,
    Admissible,
    All,
}

impl Suite {
    pub const EACH: [Suite; 14] = [
        Suite::Alpha,
        Suite::Global,
        Suite::Sequential,
        Suite::Sequitur,
        Suite::Lzd,
        Suite::Bisection,
        Suite::Lz78,
        Suite::Cfg,
        Suite::RnaAlpha,
        Suite::RnaBeta,
        Suite::Gamma,
        Suite::Rna,
        Suite::Answer,
        Suite::Admissible,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Alpha => "alpha",
            Suite::Global => "global",
            Suite::Sequential => "sequential",
            Suite::Sequitur => "sequitur",
            Suite::Lzd => "lzd",
            Suite::Bisection => "bisection",
            Suite::Lz78 => "lz78",
            Suite::Cfg => "cfg",
            Suite::RnaAlpha => "rna-alpha",
            Suite::RnaBeta => "rna-beta",
            Suite::Gamma => "gamma",
            Suite::Rna => "rna",
            Suite::Answer => "answer",
            Suite::Admissible => "admissible",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Suite, String> {
        Suite::EACH
            .iter()
            .chain(&[Suite::All])
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub seed: u64,
    pub trials: usize,
    pub max_nonterms: usize,
}

impl Default for Config {
    fn default() -> Config {
        Config { seed: 0, trials: 25, max_nonterms: 30 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub claim: &'static str,
    pub trial: usize,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} trial={} {}", self.claim, self.trial, self.detail)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.pass)
    }

    pub fn count(&self, claim: &str) -> usize {
        self.verdicts.iter().filter(|v| v.claim == claim).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

struct Out<'a> {
    trial: usize,
    verdicts: &'a mut Vec<Verdict>,
}

impl Out<'_> {
    /// Records an equality check.
    fn eq<T: PartialEq + fmt::Display>(&mut self, claim: &'static str, what: String, expected: T, actual: T) {
        let pass = expected == actual;
        self.push(claim, pass, format!("{what} expected={expected} actual={actual}"));
    }

    fn push(&mut self, claim: &'static str, pass: bool, detail: String) {
        self.verdicts.push(Verdict { claim, trial: self.trial, pass, detail });
    }

    /// Runs a check; an error is a failure.
    fn run(&mut self, claim: &'static str, f: impl FnOnce(&mut Self) -> Result<()>) {
        if let Err(e) = f(self) {
            self.push(claim, false, format!("error: {e}"));
        }
    }
}

fn trial_rng(seed: u64, suite: Suite, trial: usize) -> Rng8 {
    let salt = Suite::EACH.iter().position(|&s| s == suite).unwrap_or(99) as u64;
    gen::rng(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (trial as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9))
}

/// Runs a suite; identical configurations give identical reports.
pub fn run(suite: Suite, cfg: &Config) -> Report {
    let mut report = Report::default();
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    for s in suites {
        for trial in 0..cfg.trials {
            let mut rng = trial_rng(cfg.seed, s, trial);
            let mut out = Out { trial, verdicts: &mut report.verdicts };
            trial_of(s, cfg, &mut rng, &mut out);
        }
    }
    report
}

fn trial_of(s: Suite, cfg: &Config, rng: &mut Rng8, out: &mut Out) {
    let gen = GrammarGen::new(cfg.max_nonterms, 4);
    match s {
        Suite::Alpha => alpha_identities(&gen.sample(rng), rng, out),
        Suite::Global => global_output(&gen.sample(rng), out),
        Suite::Sequential => sequential_output(&gen.sample(rng), out),
        Suite::Sequitur => sequitur_output(&gen.sample(rng), out),
        Suite::Lzd => lzd_output(&gen.sample(rng), out),
        Suite::Bisection => bisection_checks(rng, out),
        Suite::Lz78 => lz78_checks(rng, out),
        Suite::Cfg => cfg_checks(cfg, rng, out),
        Suite::RnaAlpha | Suite::RnaBeta | Suite::Gamma => rna_boost_checks(s, cfg, rng, out),
        Suite::Rna => rna_primitives(rng, out),
        Suite::Answer => answer_checks(rng, out),
        Suite::Admissible => admissible_checks(cfg, rng, out),
        Suite::All => unreachable!(),
    }
}

fn exp_len(g: &Slg) -> Result<(u64, u64)> {
    let st = g.stats()?;
    Ok((st.total_expansion, st.expansion_length))
}

fn alpha_identities(g: &Slg, rng: &mut Rng8, out: &mut Out) {
    let v = g.num_nonterminals();
    out.run("alpha.length", |out| {
        let w = alpha(g)?.text;
        let (sum, _) = exp_len(g)?;
        out.eq("alpha.length", format!("|V|={v} |w|=4*sum|exp|"), 4 * sum, w.len() as u64);
        Ok(())
    });
    out.run("alpha.offset", |out| {
        let b = alpha(g)?;
        let u = g.expand_start();
        let d = b.delta.unwrap() as usize;
        let bad = (1..=u.len()).find(|&j| b.text.get(d + 2 * j - 2) != Some(&u[j - 1]));
        let detail = format!("delta={d} |u|={} mismatch={}", u.len(), bad.map_or("none".into(), |j| j.to_string()));
        out.push("alpha.offset", bad.is_none(), detail);
        Ok(())
    });
    out.run("alpha.intermediate-expansion", |out| {
        let w = alpha(g)?.text;
        let mut bad = None;
        for _ in 0..20 {
            let set: Vec<usize> = (1..=v).filter(|_| rng.random_bool(0.5)).collect();
            if build_gi(g, &set)?.grammar.expand_start() != w {
                bad = Some(set);
                break;
            }
        }
        out.push("alpha.intermediate-expansion", bad.is_none(), format!("|V|={v} sets=20 bad={bad:?}"));
        Ok(())
    });
}

fn global_output(g: &Slg, out: &mut Out) {
    let v = g.num_nonterminals();
    out.run("global.alpha-output", |out| {
        let w = alpha(g)?.text;
        let target = build_gi(g, &(1..=v).collect::<Vec<_>>())?.grammar;
        for alg in GlobalStrategy::ALL {
            let h = run_global(&w, alg);
            let iso = h.is_isomorphic(&target);
            let pass = h.size() == 7 * v && iso;
            let detail = format!(
                "alg={} |V|={v} expected=7/2|G|={} actual={} isomorphic={}",
                alg.name(),
                7 * v,
                h.size(),
                if iso { "yes" } else { "no" }
            );
            out.push("global.alpha-output", pass, detail);
        }
        Ok(())
    });
}

fn sequential_output(g: &Slg, out: &mut Out) {
    let v = g.num_nonterminals();
    out.run("sequential.alpha-output", |out| {
        let h = sequential(&alpha(g)?.text);
        out.eq("sequential.alpha-output", format!("|V|={v} 7/2|G|"), 7 * v, h.size());
        out.push("sequential.irreducible", is_irreducible(&h), format!("|V|={v} size={}", h.size()));
        Ok(())
    });
}

fn sequitur_output(g: &Slg, out: &mut Out) {
    let v = g.num_nonterminals();
    out.run("sequitur.alpha-output", |out| {
        let h = sequitur(&alpha(g)?.text);
        out.eq("sequitur.alpha-output", format!("|V|={v} 7/2|G|"), 7 * v, h.size());
        Ok(())
    });
}

fn lzd_output(g: &Slg, out: &mut Out) {
    let v = g.num_nonterminals();
    out.run("lzd.beta-output", |out| {
        let b = beta(g)?;
        let (sum, _) = exp_len(g)?;
        out.eq("beta.length", format!("|V|={v} 6*sum|exp|-4|V|"), 6 * sum - 4 * v as u64, b.text.len() as u64);
        let (f, h) = lzd(&b.text);
        let pass = f.len() == 3 * v && h.size() == 9 * v;
        out.push(
            "lzd.beta-output",
            pass,
            format!("|V|={v} expected=3|V|={} phrases, 9/2|G|={} actual={} phrases, {}", 3 * v, 9 * v, f.len(), h.size()),
        );
        let pos = b.positions.as_ref().unwrap();
        let mut ok = true;
        for (i, &n) in b.ordering.iter().enumerate() {
            let e = g.expand(Symbol::N(n))?;
            ok &= pos[i].len() == e.len() && pos[i].iter().zip(&e).all(|(&p, c)| b.text[p as usize] == *c);
        }
        out.push("beta.position-map", ok, format!("|V|={v}"));
        Ok(())
    });
}

fn dyadic_count(u: &[Terminal]) -> usize {
    let mut seen: HashSet<&[Terminal]> = HashSet::new();
    let mut k = 2;
    while k <= u.len() {
        seen.extend(u.chunks(k));
        k *= 2;
    }
    seen.len()
}

fn bisection_checks(rng: &mut Rng8, out: &mut Out) {
    let k = rng.random_range(1..=10);
    let sigma = rng.random_range(1..=4);
    let u = gen::string(rng, 1 << k, &gen::letters(sigma));
    let g = bisection(&u);
    out.eq("bisection.dyadic-count", format!("|u|={} sigma={sigma} 2*distinct", u.len()), 2 * dyadic_count(&u), g.size());
    let levels = rng.random_range(1..=6);
    let width = rng.random_range(1..=3);
    let d = gen::dyadic(rng, levels, width, &gen::letters(2));
    let b = bisection(&d.expand_start());
    let pass = d.is_dyadic() && b.size() <= d.size();
    out.push("bisection.dyadic-optimal", pass, format!("|G|={} |bisection|={}", d.size(), b.size()));
}

fn lz78_checks(rng: &mut Rng8, out: &mut Out) {
    let k = rng.random_range(1..=64);
    out.run("lz78.run-length-phrases", |out| {
        let y = gen::run_length_keys(rng, k);
        let w = lz78_hard_string(&y, (k * k) as u64)?;
        let (f, _) = lz78(&w);
        out.push("lz78.run-length-phrases", f.len() <= 6 * k, format!("k={k} phrases={} ≤ 6k={}", f.len(), 6 * k));
        let mut j = 0;
        let mut bad = None;
        for x in 0..(k * k) as u64 {
            while j + 1 < y.len() && y[j + 1].0 <= x {
                j += 1;
            }
            if w[x as usize] != Terminal::Char(y[j].1) {
                bad = Some(x);
                break;
            }
        }
        out.push("lz78.predecessor-readout", bad.is_none(), format!("k={k} mismatch={bad:?}"));
        Ok(())
    });
}

fn member(g: &Cfg, s: &[Terminal]) -> Result<bool> {
    if s.iter().any(|t| !g.terminals().contains(t)) {
        return Ok(false);
    }
    cyk_member(g, s)
}

fn all_strings(alphabet: &[Terminal], n: usize) -> Vec<Vec<Terminal>> {
    let mut all = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..n {
        layer = layer.iter().flat_map(|s: &Vec<Terminal>| alphabet.iter().map(move |&c| [s.as_slice(), &[c]].concat())).collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn cfg_checks(cfg: &Config, rng: &mut Rng8, out: &mut Out) {
    let ab = gen::letters(2);
    let gen = GrammarGen { max_nonterms: cfg.max_nonterms.min(11), terminals: ab.clone(), max_len: 12 };
    let g = loop {
        let g = gen.sample(rng);
        if g.stats().is_ok_and(|s| s.expansion_length <= 12) {
            break g;
        }
    };
    let u = g.expand_start();
    let mut gamma = gen::small_cfg(rng, 3, &ab);
    match rng.random_range(0..3) {
        0 => gamma.add_rule(0, u.iter().map(|&t| Symbol::T(t)).collect()),
        1 => {
            let mut m = u.clone();
            let i = rng.random_range(0..m.len());
            m[i] = if m[i] == ab[0] { ab[1] } else { ab[0] };
            gamma.add_rule(0, m.into_iter().map(Symbol::T).collect());
        }
        _ => {}
    }
    out.run("cfg.alpha-retarget", |out| {
        let inside = member(&gamma, &u)?;
        let w = alpha(&g)?.text;
        let got = member(&gamma_prime_alpha(&gamma, &g)?, &w)?;
        out.eq("cfg.alpha-retarget", format!("|u|={} |w|={}", u.len(), w.len()), inside, got);
        let w = beta(&g)?.text;
        let got = member(&gamma_prime_beta(&gamma, &g)?, &w)?;
        out.eq("cfg.beta-retarget", format!("|u|={} |w|={}", u.len(), w.len()), inside, got);
        Ok(())
    });

    let d = Terminal::Dollar(1);
    let wide = [ab[0], ab[1], d];
    let strings = all_strings(&wide, 6);
    out.run("cfg.interleave", |out| {
        let h = interleave(&gamma, &[d])?;
        let mut bad = None;
        for s in &strings {
            let odd: Vec<Terminal> = s.iter().step_by(2).copied().collect();
            let want = !s.is_empty() && s.len() % 2 == 0 && member(&gamma, &odd)?;
            if member(&h, s)? != want {
                bad = Some(s.len());
                break;
            }
        }
        out.push("cfg.interleave", bad.is_none(), format!("strings={} bad_len={bad:?}", strings.len()));
        Ok(())
    });
    out.run("cfg.prefix", |out| {
        let k = rng.random_range(1..=3);
        let h = add_prefix(&gamma, k)?;
        let mut bad = None;
        for s in strings.iter().filter(|s| !s.contains(&d)) {
            let want = s.len() >= k as usize && member(&gamma, &s[k as usize..])?;
            if member(&h, s)? != want {
                bad = Some(s.len());
                break;
            }
        }
        out.push("cfg.prefix", bad.is_none(), format!("k={k} bad_len={bad:?}"));
        Ok(())
    });
    out.run("cfg.erase", |out| {
        let h = erase_closure(&gamma, &[d])?;
        let mut bad = None;
        for s in &strings {
            let kept: Vec<Terminal> = s.iter().copied().filter(|&t| t != d).collect();
            if member(&h, s)? != member(&gamma, &kept)? {
                bad = Some(s.len());
                break;
            }
        }
        out.push("cfg.erase", bad.is_none(), format!("strings={} bad_len={bad:?}", strings.len()));
        Ok(())
    });
}

/// A grammar over the alphabet's symbols with total expansion at most 60.
fn rna_instance(cfg: &Config, rng: &mut Rng8, min_v: usize) -> (Slg, MatchedAlphabet) {
    let pairs = rng.random_range(1..=3);
    let a = gen::alphabet(rng, pairs, 4);
    let gen = GrammarGen { max_nonterms: cfg.max_nonterms.clamp(min_v, 12), terminals: a.symbols().collect(), max_len: 16 };
    loop {
        let v = rng.random_range(min_v..=gen.max_nonterms);
        let g = gen.sample_exact(rng, v);
        if g.stats().is_ok_and(|s| s.total_expansion <= 60) {
            return (g, a);
        }
    }
}

fn rna_boost_checks(s: Suite, cfg: &Config, rng: &mut Rng8, out: &mut Out) {
    let (g, a) = rna_instance(cfg, rng, if s == Suite::Gamma { 2 } else { 1 });
    let v = g.num_nonterminals();
    let claim = match s {
        Suite::RnaAlpha => "rna.alpha-offset",
        Suite::RnaBeta => "rna.beta-offset",
        _ => "rna.gamma-offset",
    };
    out.run(claim, |out| {
        let u = g.expand_start();
        let base = wrna_value(&u, &a, DEFAULT_CAP)?;
        let (b, factor) = match s {
            Suite::RnaAlpha => (rna_alpha(&g, &a)?, 2),
            Suite::RnaBeta => (rna_beta(&g, &a)?, 4),
            _ => (gamma(&g, &a)?, 1),
        };
        let ext = b.alphabet.as_ref().unwrap();
        let got = wrna_value(&b.text, ext, DEFAULT_CAP)?;
        let (form, want) = match s {
            Suite::Gamma => ("2c0+WRNA(u)", 2 * b.c0.unwrap() + base),
            Suite::RnaAlpha => ("2WRNA(u)+delta", factor * base + b.delta.unwrap()),
            _ => ("4WRNA(u)+delta", factor * base + b.delta.unwrap()),
        };
        out.eq(claim, format!("|V|={v} |u|={} |v|={} {form}", u.len(), b.text.len()), want, got);
        if s == Suite::RnaAlpha {
            let h = run_global(&b.text, GlobalStrategy::RePair);
            let pass = h.size() == 14 * v && h.size() <= 7 * g.size();
            let detail = format!("|V|={v} expected=14|V|={} bound=7|G|={} actual={}", 14 * v, 7 * g.size(), h.size());
            out.push("rna.alpha-global-size", pass, detail);
        }
        if s == Suite::RnaBeta {
            let h = sequential(&b.text);
            let pass = h.size() == 22 * v;
            out.push("rna.beta-sequential-size", pass, format!("|V|={v} expected=11|G|={} actual={}", 22 * v, h.size()));
        }
        if s == Suite::Gamma {
            let (_, h) = lzd(&b.text);
            let pass = h.size() as u64 == 18 * v as u64 - 6 && h.size() <= 9 * g.size();
            out.push(
                "rna.gamma-lzd-size",
                pass,
                format!("|V|={v} expected=18|V|-6={} bound=9|G|={} actual={}", 18 * v - 6, 9 * g.size(), h.size()),
            );
        }
        Ok(())
    });
}

fn rna_primitives(rng: &mut Rng8, out: &mut Out) {
    let pairs = rng.random_range(1..=3);
    let a = gen::alphabet(rng, pairs, 4);
    let syms: Vec<Terminal> = a.symbols().collect();
    out.run("rna.dp-exhaustive", |out| {
        let n = rng.random_range(0..=12);
        let u = gen::string(rng, n, &syms);
        let dp = wrna(&u, &a)?;
        let ex = wrna_exhaustive(&u, &a)?;
        out.eq("rna.dp-exhaustive", format!("|u|={}", u.len()), ex, dp.value);
        out.push("rna.witness", validate_witness(&u, &a, &dp), format!("|u|={} value={}", u.len(), dp.value));
        let rep = weighted_to_unweighted(&u, &a)?;
        out.eq("rna.repetition", format!("|u|={} |u'|={}", u.len(), rep.len()), dp.value, rna(&rep, &a)?.value);
        let n = rng.random_range(0..=14);
        let u = gen::string(rng, n, &syms);
        out.push("rna.reverse-match", check_reverse_and_match(&u, &a)?, format!("|u|={}", u.len()));
        Ok(())
    });
    out.run("rna.decomposition", |out| {
        let mut pick = |n: usize| gen::string(rng, n, &syms);
        let (x, y, z) = (pick(4), pick(3), pick(4));
        let mut a2 = a.clone();
        let heavy = a.total_weight(&y)? + 1;
        let (p, q) = (Terminal::Char('z'), Terminal::Char('Z'));
        a2.add_pair(p, q, heavy)?;
        let (l, r) = if rng.random_bool(0.5) { (p, q) } else { (q, p) };
        let ok = check_decomposition(&x, l, &y, r, &z, &a2)?;
        out.push("rna.decomposition", ok, format!("|x|={} |y|={} |z|={} w(a)={heavy}", x.len(), y.len(), z.len()));
        Ok(())
    });
}

fn answer_checks(rng: &mut Rng8, out: &mut Out) {
    for m in [2usize, 4, 8, 16, 32] {
        out.run("answer.grammar", |out| {
            let p = gen::point_set(rng, m);
            let g = answer_grammar(&p)?;
            let lg = m.trailing_zeros() as usize;
            let st = g.stats()?;
            let exact = g.expand_start() == answer_string(&p);
            let pass = g.is_admissible() && exact && st.height <= 2 * lg + 1 && st.size <= 4 * m * lg + 8 * m;
            let detail = format!(
                "m={m} admissible={} expands={} height={} bound={} size={} bound={}",
                g.is_admissible(),
                exact,
                st.height,
                2 * lg + 1,
                st.size,
                4 * m * lg + 8 * m
            );
            out.push("answer.grammar", pass, detail);
            Ok(())
        });
    }
}

fn admissible_checks(cfg: &Config, rng: &mut Rng8, out: &mut Out) {
    let sigma = *[1usize, 2, 4].choose(rng).unwrap();
    let g = gen::slg(rng, cfg.max_nonterms, &gen::letters(sigma));
    out.run("admissible.conversion", |out| {
        let h = g.make_admissible()?;
        let pass = h.is_admissible() && h.expand_start() == g.expand_start() && h.size() <= 2 * g.size();
        let detail = format!("|G|={} |G'|={} bound=2|G|={} admissible={}", g.size(), h.size(), 2 * g.size(), h.is_admissible());
        out.push("admissible.conversion", pass, detail);
        Ok(())
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.iter().chain(&[Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn deterministic_and_passing() {
        let cfg = Config { seed: 3, trials: 2, max_nonterms: 6 };
        let a = run(Suite::All, &cfg);
        let b = run(Suite::All, &cfg);
        assert_eq!(a.to_string(), b.to_string());
        assert!(a.passed(), "{}", a.failures().map(|v| v.to_string()).collect::<Vec<_>>().join("\n"));
        assert!(a.count("global.alpha-output") == 8);
    }
}
