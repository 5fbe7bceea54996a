//! Running a verification suite from code.

use slglab::verify::{run, Config, Suite};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "lzd".into());
    let Ok(suite) = name.parse::<Suite>() else {
        eprintln!("unknown suite `{name}`");
        std::process::exit(2);
    };
    let report = run(suite, &Config { seed: 1, trials: 5, max_nonterms: 12 });
    print!("{report}");
    println!("{} verdicts, passed: {}", report.verdicts.len(), report.passed());
}
