use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use surjection::bar::{bar_basis, check_decomposition, check_hopf, check_steenrod_bar};
use surjection::fixtures::{fixture_text, FIXTURES};
use surjection::generators::generator;
use surjection::relations::{
    check_ehga, check_filtration, check_g_relations, check_hga_assoc, check_remark1_identities,
};
use surjection::report::CheckReport;
use surjection::simplicial::{square_matrix, SimplicialComplex};
use surjection::{Error, SurjChain};

/// Largest string length `2(p+q)+k-1` accepted by `generate`.
const MAX_GENERATOR_LENGTH: usize = 64;
/// Largest `k`, `m` and `n` accepted by the relation checks.
const MAX_EHGA_PARAM: usize = 6;
/// Largest `m` and `n` accepted by the associativity check.
const MAX_ASSOC_PARAM: usize = 5;
/// Largest word length accepted by `bar-check`.
const MAX_BAR_LEN: usize = 4;

#[derive(Parser)]
#[command(name = "surj", version, about = "Computations in the mod-2 surjection operad")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print E^k_{p,q} as a sum of surjections.
    Generate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Also print every admissible table, rows separated by ';'.
        #[arg(long)]
        tables: bool,
        #[arg(long)]
        unsafe_large: bool,
    },
    /// Verify identities in the operad over a parameter grid.
    Check {
        suite: Suite,
        /// Fix k instead of ranging over 0..=max-k.
        #[arg(long)]
        k: Option<usize>,
        /// Fix m (or p) instead of ranging over 1..=max-arity.
        #[arg(long)]
        m: Option<usize>,
        /// Fix n (or q) instead of ranging over 1..=max-arity.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 2)]
        max_k: usize,
        /// Bound on the number of inputs on each side.
        #[arg(long, default_value_t = 3)]
        max_arity: usize,
        /// Append elapsed milliseconds to each line (output is then not reproducible).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        unsafe_large: bool,
    },
    /// Differential of a chain.
    Diff { chain: String },
    /// Partial composition `outer ∘_slot inner`.
    Compose { outer: String, slot: usize, inner: String },
    /// Maximal complexity over the terms of a chain.
    Complexity { chain: String },
    /// Matrix of Sq^k: H^dim -> H^{dim+k} on a complex.
    Sq {
        /// Bundled fixture name or path to a facet file.
        #[arg(long)]
        complex: String,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        k: usize,
    },
    /// Verify the product and cup-i products on a truncated bar construction.
    BarCheck {
        #[arg(long)]
        complex: String,
        /// Cup-i index; 0 runs only the product checks.
        #[arg(long, default_value_t = 0)]
        i: usize,
        #[arg(long, default_value_t = 2)]
        max_len: usize,
        #[arg(long)]
        max_deg: Option<i64>,
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        unsafe_large: bool,
    },
    /// List the bundled complexes.
    Fixtures,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Ehga,
    HgaAssoc,
    Remark1,
    G,
    Filtration,
    All,
}

enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn guard(ok: bool, unsafe_large: bool, what: String) -> Result<(), Failure> {
    match (ok, unsafe_large) {
        (true, _) => Ok(()),
        (false, true) => {
            eprintln!("warning: {what}; continuing because of --unsafe-large");
            Ok(())
        }
        (false, false) => Err(Failure::Usage(format!("{what}; pass --unsafe-large to override"))),
    }
}

fn range(fixed: Option<usize>, lo: usize, hi: usize) -> Vec<usize> {
    fixed.map_or_else(|| (lo..=hi).collect(), |v| vec![v])
}

type Job = Box<dyn Fn() -> CheckReport + Send + Sync>;

#[allow(clippy::too_many_arguments)]
fn check_jobs(
    suite: Suite,
    k: Option<usize>,
    m: Option<usize>,
    n: Option<usize>,
    max_k: usize,
    max_arity: usize,
    unsafe_large: bool,
) -> Result<Vec<Job>, Failure> {
    let ks = range(k, 0, max_k);
    let ms = range(m, 1, max_arity);
    let ns = range(n, 1, max_arity);
    if ms.contains(&0) || ns.contains(&0) {
        return Err(Failure::Usage("m and n must be at least 1".into()));
    }
    let top = |v: &[usize]| v.iter().copied().max().unwrap_or(0);
    let mut jobs: Vec<Job> = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Ehga {
        guard(
            top(&ks).max(top(&ms)).max(top(&ns)) <= MAX_EHGA_PARAM,
            unsafe_large,
            format!("relation checks are limited to k, m, n <= {MAX_EHGA_PARAM}"),
        )?;
        for &k in &ks {
            for &m in &ms {
                for &n in &ns {
                    jobs.push(Box::new(move || check_ehga(k, m, n)));
                }
            }
        }
    }
    if all || suite == Suite::HgaAssoc {
        guard(
            top(&ms).max(top(&ns)) <= MAX_ASSOC_PARAM,
            unsafe_large,
            format!("associativity checks are limited to m, n <= {MAX_ASSOC_PARAM}"),
        )?;
        for &m in &ms {
            for &n in &ns {
                jobs.push(Box::new(move || check_hga_assoc(m, n)));
            }
        }
    }
    if all || suite == Suite::Remark1 {
        jobs.push(Box::new(check_remark1_identities));
    }
    if all || suite == Suite::G {
        jobs.push(Box::new(check_g_relations));
    }
    if all || suite == Suite::Filtration {
        guard(
            2 * (top(&ms) + top(&ns)) + top(&ks) <= MAX_GENERATOR_LENGTH + 1,
            unsafe_large,
            format!("generator strings are limited to length {MAX_GENERATOR_LENGTH}"),
        )?;
        for &k in &ks {
            for &p in &ms {
                for &q in &ns {
                    jobs.push(Box::new(move || check_filtration(k, p, q)));
                }
            }
        }
    }
    Ok(jobs)
}

/// Prints the reports in order; fails if any report fails.
fn emit(reports: &[CheckReport], timings: bool) -> Result<(), Failure> {
    for r in reports {
        println!("{}", r.render(timings));
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!("{} checks, {} passed, {} failed", reports.len(), reports.len() - failed, failed);
    if failed > 0 {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}

fn load_complex(spec: &str) -> Result<SimplicialComplex, Failure> {
    let text = match fixture_text(spec) {
        Some(t) => t.to_string(),
        None => std::fs::read_to_string(Path::new(spec))
            .map_err(|e| Failure::Usage(format!("{spec}: not a bundled fixture and not readable ({e})")))?,
    };
    Ok(SimplicialComplex::parse(&text)?)
}

fn parse_chain(text: &str) -> Result<SurjChain, Failure> {
    Ok(SurjChain::parse(text)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate { k, p, q, tables, unsafe_large } => {
            if p == 0 || q == 0 {
                return Err(Failure::Usage("p and q must be at least 1".into()));
            }
            let len = 2 * (p + q) + k - 1;
            guard(
                len <= MAX_GENERATOR_LENGTH,
                unsafe_large,
                format!("string length 2(p+q)+k-1 = {len} exceeds {MAX_GENERATOR_LENGTH}"),
            )?;
            let g = generator(k, p, q);
            println!("{}", g.chain);
            if tables {
                for t in &g.tables {
                    println!("{t}");
                }
            }
        }
        Command::Check { suite, k, m, n, max_k, max_arity, timings, unsafe_large } => {
            let jobs = check_jobs(suite, k, m, n, max_k, max_arity, unsafe_large)?;
            let reports: Vec<CheckReport> = jobs.par_iter().map(|job| job()).collect();
            emit(&reports, timings)?;
        }
        Command::Diff { chain } => println!("{}", parse_chain(&chain)?.differential()),
        Command::Compose { outer, slot, inner } => {
            println!("{}", parse_chain(&outer)?.compose(slot, &parse_chain(&inner)?)?)
        }
        Command::Complexity { chain } => {
            let c = parse_chain(&chain)?;
            println!("{}", c.max_complexity().unwrap_or(0));
        }
        Command::Sq { complex, dim, k } => {
            let cx = load_complex(&complex)?;
            let sq = square_matrix(&cx, dim, k)?;
            let (src, dst) = (dim, dim + k);
            println!("H^{src}: rank {}", sq.source.rank());
            for c in &sq.source.classes {
                println!("  x{} = {}", c.index + 1, c.representative);
            }
            println!("H^{dst}: rank {}", sq.target.rank());
            for c in &sq.target.classes {
                println!("  y{} = {}", c.index + 1, c.representative);
            }
            println!("Sq^{k}: H^{src} -> H^{dst}");
            for (c, col) in sq.source.classes.iter().zip(&sq.columns) {
                let image: Vec<String> = col.ones().map(|j| format!("y{}", j + 1)).collect();
                let image = if image.is_empty() { "0".to_string() } else { image.join(" + ") };
                println!("  x{} -> {image}", c.index + 1);
            }
            println!("matrix ({} x {}):", sq.target.rank(), sq.source.rank());
            for row in 0..sq.target.rank() {
                let bits: Vec<&str> = sq.columns.iter().map(|c| if c.get(row) { "1" } else { "0" }).collect();
                println!("  {}", bits.join(" "));
            }
        }
        Command::BarCheck { complex, i, max_len, max_deg, timings, unsafe_large } => {
            guard(max_len <= MAX_BAR_LEN, unsafe_large, format!("word length is limited to {MAX_BAR_LEN}"))?;
            let cx = load_complex(&complex)?;
            let t = bar_basis(&cx, max_len, max_deg);
            let mut reports = vec![check_hopf(&t)];
            if i >= 1 {
                reports.push(check_steenrod_bar(i, &t));
                reports.push(check_decomposition(i, &t));
            }
            emit(&reports, timings)?;
        }
        Command::Fixtures => {
            for (name, text) in FIXTURES {
                let cx = SimplicialComplex::parse(text)?;
                let f: Vec<String> = (0..=cx.dim()).map(|d| cx.simplices(d).len().to_string()).collect();
                println!("{name}: dim {}, f-vector ({})", cx.dim(), f.join(", "));
            }
        }
    }
    Ok(())
}

fn configure_workers() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("SURJ_WORKERS") else {
        return Ok(());
    };
    let n: usize = raw
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Failure::Usage(format!("SURJ_WORKERS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Failure::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_workers().and_then(|()| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
