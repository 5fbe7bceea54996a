use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use slglab::boost::{self, BoostResult, PointSet};
use slglab::compress::Algorithm;
use slglab::rna::MatchedAlphabet;
use slglab::symbol::{chars, plain, tokens};
use slglab::verify::{self, Suite};
use slglab::Slg;

#[derive(Parser)]
#[command(name = "slglab", version, about = "Grammar compressors, boosting constructions and their identities")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compress a text into a straight-line grammar.
    Compress {
        #[arg(long)]
        alg: Algorithm,
        /// Input file, `-` for stdin. One trailing newline is dropped.
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Append a `# size=.. nonterms=.. explen=..` line.
        #[arg(long)]
        stats: bool,
    },
    /// Build a boosted string; writes PREFIX.text and PREFIX.meta.
    Boost {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        grammar: Option<PathBuf>,
        #[arg(long)]
        alphabet: Option<PathBuf>,
        #[arg(long)]
        points: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        /// Convert the grammar to admissible form first.
        #[arg(long)]
        admissify: bool,
    },
    /// Run randomized verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Overridden by SLGLAB_SEED.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 30)]
        max_nonterms: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Alpha,
    Beta,
    Gamma,
    RnaAlpha,
    RnaBeta,
    Answer,
}

fn read_input(path: &str) -> anyhow::Result<String> {
    let mut s = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
    } else {
        s = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    }
    Ok(s)
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn compress(alg: Algorithm, input: &str, out: Option<&Path>, stats: bool) -> anyhow::Result<()> {
    let mut text = read_input(input)?;
    if text.ends_with('\n') {
        text.pop();
        if text.ends_with('\r') {
            text.pop();
        }
    }
    let g = alg.run(&chars(&text))?;
    let mut s = g.serialize();
    if stats {
        let st = g.stats()?;
        s.push_str(&format!("# size={} nonterms={} explen={}\n", st.size, st.num_nonterminals, st.expansion_length));
    }
    match out {
        Some(p) => write(p, &s),
        None => io::stdout().write_all(s.as_bytes()).context("writing stdout"),
    }
}

fn load_grammar(path: Option<&Path>, admissify: bool) -> anyhow::Result<Slg> {
    let path = path.ok_or_else(|| anyhow!("--grammar is required for this kind"))?;
    let g: Slg = read(path)?.parse().with_context(|| format!("parsing {}", path.display()))?;
    if admissify {
        return Ok(g.make_admissible()?);
    }
    if !g.is_admissible() {
        bail!("grammar is not admissible; rerun with --admissify to convert it first");
    }
    Ok(g)
}

fn load_alphabet(path: Option<&Path>) -> anyhow::Result<MatchedAlphabet> {
    let path = path.ok_or_else(|| anyhow!("--alphabet is required for this kind"))?;
    let a: MatchedAlphabet = read(path)?.parse().with_context(|| format!("parsing {}", path.display()))?;
    Ok(a)
}

fn render(text: &[slglab::Terminal]) -> String {
    match plain(text) {
        Some(s) if !s.chars().any(char::is_whitespace) => s,
        _ => tokens(text),
    }
}

fn meta_of(kind: Kind, g: &Slg, b: &BoostResult) -> String {
    let mut m = format!("kind={}\n", kind.to_possible_value().unwrap().get_name());
    let mut head = Vec::new();
    if let Some(d) = b.delta {
        head.push(format!("delta={d}"));
    }
    if let Some(c) = b.c0 {
        head.push(format!("c0={c}"));
    }
    head.push(format!("len={}", b.text.len()));
    m.push_str(&head.join(" "));
    m.push('\n');
    let order: Vec<&str> = b.ordering.iter().map(|&n| g.name(n)).collect();
    m.push_str(&format!("ordering={}\n", order.join(" ")));
    if let Some(pos) = &b.positions {
        for (i, p) in pos.iter().enumerate() {
            let p: Vec<String> = p.iter().map(u64::to_string).collect();
            m.push_str(&format!("positions.N{}={}\n", i + 1, p.join(" ")));
        }
    }
    if let Some(a) = &b.alphabet {
        for line in a.to_string().lines() {
            m.push_str(&format!("pair={line}\n"));
        }
    }
    m
}

fn boost_cmd(
    kind: Kind,
    grammar: Option<&Path>,
    alphabet: Option<&Path>,
    points: Option<&Path>,
    out: &Path,
    admissify: bool,
) -> anyhow::Result<()> {
    let (text, meta) = if kind == Kind::Answer {
        let path = points.ok_or_else(|| anyhow!("--points is required for --kind answer"))?;
        let p = PointSet::parse(&read(path)?)?;
        let padded = p.padded();
        let g = boost::answer_grammar(&padded)?;
        let st = g.stats()?;
        let text = boost::answer_string(&p);
        let meta = format!(
            "kind=answer\nm={} len={}\ngrammar.size={} grammar.height={}\n",
            p.m(),
            text.len(),
            st.size,
            st.height
        );
        (text, meta)
    } else {
        let g = load_grammar(grammar, admissify)?;
        let b = match kind {
            Kind::Alpha => boost::alpha(&g)?,
            Kind::Beta => boost::beta(&g)?,
            Kind::Gamma => boost::gamma(&g, &load_alphabet(alphabet)?)?,
            Kind::RnaAlpha => boost::rna_alpha(&g, &load_alphabet(alphabet)?)?,
            Kind::RnaBeta => boost::rna_beta(&g, &load_alphabet(alphabet)?)?,
            Kind::Answer => unreachable!(),
        };
        let meta = meta_of(kind, &g, &b);
        (b.text, meta)
    };
    let base = out.as_os_str().to_owned();
    let with = |ext: &str| {
        let mut p = base.clone();
        p.push(ext);
        PathBuf::from(p)
    };
    write(&with(".text"), &(render(&text) + "\n"))?;
    write(&with(".meta"), &meta)
}

fn seed_override(flag: u64) -> anyhow::Result<u64> {
    match std::env::var("SLGLAB_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| anyhow!("SLGLAB_SEED is not an unsigned integer: `{s}`")),
        Err(_) => Ok(flag),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Compress { alg, input, out, stats } => compress(alg, &input, out.as_deref(), stats),
        Cmd::Boost { kind, grammar, alphabet, points, out, admissify } => {
            boost_cmd(kind, grammar.as_deref(), alphabet.as_deref(), points.as_deref(), &out, admissify)
        }
        Cmd::Verify { suite, seed, trials, max_nonterms } => {
            let seed = match seed_override(seed) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e:#}");
                    return ExitCode::from(2);
                }
            };
            let t = Instant::now();
            let report = verify::run(suite, &verify::Config { seed, trials, max_nonterms });
            print!("{report}");
            let failed = report.failures().count();
            eprintln!(
                "suite={suite} seed={seed} verdicts={} failed={failed} elapsed={:.2}s",
                report.verdicts.len(),
                t.elapsed().as_secs_f64()
            );
            return if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
