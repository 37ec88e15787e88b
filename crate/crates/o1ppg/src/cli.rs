//! The `o1ppg` command line.
//!
//! Exit codes: 0 on success, 1 on usage or I/O errors, 2 when a theorem
//! check failed (the report is still written).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use o1ppg_core::connectivity::vertex_connectivity;
use o1ppg_core::generator::enumerate_o1ppg;
use o1ppg_core::matching::k_extendability;
use o1ppg_core::structures::{barrier_cycles, find_odd_weighted_regions, find_projective_bowties};
use o1ppg_core::verify::{
    check_theorem, fmt_matching, parse_theorem_list, AuditConfig, TheoremId, Verdict,
};
use o1ppg_core::O1ppg;

use crate::campaign::{run_campaign, WORKERS_ENV};
use crate::corpus::{key_of, load_corpus, load_file, read_manifest, write_corpus, ManifestRow};
use crate::dot::{to_dot, Highlight};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_THEOREM_FAIL: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "o1ppg",
    version,
    about = "Optimal 1-embedded graphs on the projective plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Grow quadrangulations and write the instance corpus with its manifest
    Generate {
        /// largest order to generate
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// corpus directory
        #[arg(long)]
        out: PathBuf,
        /// keep only even orders
        #[arg(long)]
        even_only: bool,
    },
    /// Load and re-validate an instance file
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Print structural facts about one instance as `check=<name> result=<value>` lines
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        /// comma-separated list from: order, key, connectivity, representativity,
        /// bipartite, min-degree, bowtie, barrier4, odd-regions, two-ext, three-ext
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "order,key,connectivity,bowtie,barrier4"
        )]
        checks: Vec<String>,
    },
    /// Audit every corpus instance and write a report
    Verify {
        #[arg(long)]
        corpus: PathBuf,
        /// `all` or a comma-separated list of theorem ids
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(long)]
        report: PathBuf,
        /// skip instances above this order
        #[arg(long)]
        max_n: Option<usize>,
        #[command(flatten)]
        caps: Caps,
        /// worker threads (default: one per core)
        #[arg(long, env = WORKERS_ENV)]
        workers: Option<usize>,
    },
    /// Write an instance as Graphviz, optionally highlighting a report witness
    ExportDot {
        #[arg(long = "in")]
        input: PathBuf,
        /// output file (default: standard output)
        #[arg(long)]
        out: Option<PathBuf>,
        /// witness text, e.g. `matching=[0-3 4-7]`
        #[arg(long)]
        witness: Option<String>,
    },
    /// Re-run one theorem check on one instance
    Replay {
        /// instance file
        #[arg(long = "in", conflicts_with_all = ["corpus", "key"])]
        input: Option<PathBuf>,
        /// corpus directory, used with --key
        #[arg(long, requires = "key")]
        corpus: Option<PathBuf>,
        /// instance key as printed in reports
        #[arg(long, requires = "corpus")]
        key: Option<String>,
        #[arg(long)]
        theorem: String,
        #[command(flatten)]
        caps: Caps,
    },
}

#[derive(Debug, Args)]
struct Caps {
    /// seed of the 3-matching sample
    #[arg(long, default_value_t = AuditConfig::default().seed)]
    seed: u64,
    /// sample size once a 3-matching sweep is too large
    #[arg(long, default_value_t = AuditConfig::default().sample_size)]
    sample_size: usize,
    /// 3-matching sweeps are exhaustive up to this many edges of G
    #[arg(long, default_value_t = AuditConfig::default().full_sweep_max_edges)]
    full_sweep_max_edges: usize,
    /// largest cut size enumerated by the cut audits
    #[arg(long, default_value_t = AuditConfig::default().max_cut_size)]
    max_cut_size: usize,
}

impl Caps {
    fn config(&self, theorems: Vec<TheoremId>) -> Result<AuditConfig> {
        let max = AuditConfig::default().max_cut_size;
        if self.max_cut_size > max {
            bail!("--max-cut-size {} exceeds {max}", self.max_cut_size);
        }
        Ok(AuditConfig {
            full_sweep_max_edges: self.full_sweep_max_edges,
            sample_size: self.sample_size,
            seed: self.seed,
            max_cut_size: self.max_cut_size,
            theorems,
        })
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_ERROR
        }
    }
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Generate {
            max_n,
            out,
            even_only,
        } => generate(max_n, &out, even_only),
        Command::Validate { input } => {
            let g = load_file(&input)?;
            let row = ManifestRow::of(&g);
            println!(
                "valid n={} key={} polyhedral={} bipartite={} connectivity={}",
                row.n, row.key, row.polyhedral, row.bipartite, row.connectivity
            );
            Ok(EXIT_OK)
        }
        Command::Analyze { input, checks } => analyze(&input, &checks),
        Command::Verify {
            corpus,
            theorems,
            report,
            max_n,
            caps,
            workers,
        } => {
            let config = caps.config(parse_theorem_list(&theorems)?)?;
            verify(&corpus, &report, max_n, &config, workers)
        }
        Command::ExportDot {
            input,
            out,
            witness,
        } => {
            let g = load_file(&input)?;
            let h = witness
                .as_deref()
                .map(Highlight::from_witness)
                .unwrap_or_default();
            let name = input
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            let dot = to_dot(&g, &name, &h);
            match out {
                Some(path) => {
                    fs::write(&path, dot).with_context(|| format!("writing {}", path.display()))?
                }
                None => std::io::stdout().write_all(dot.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Replay {
            input,
            corpus,
            key,
            theorem,
            caps,
        } => {
            let theorem: TheoremId = theorem.parse()?;
            let g = match (input, corpus, key) {
                (Some(path), _, _) => load_file(&path)?,
                (None, Some(dir), Some(key)) => {
                    let row = read_manifest(&dir)?
                        .into_iter()
                        .find(|r| r.key == key)
                        .with_context(|| format!("no instance {key} in {}", dir.display()))?;
                    crate::corpus::load_instance(&dir, &row)?
                }
                _ => bail!("replay needs --in or --corpus with --key"),
            };
            let r = check_theorem(&g, &key_of(&g), theorem, &caps.config(vec![theorem])?);
            println!("{}", r.record_line(g.order()));
            Ok(if r.verdict == Verdict::Fail {
                EXIT_THEOREM_FAIL
            } else {
                EXIT_OK
            })
        }
    }
}

fn generate(max_n: usize, out: &Path, even_only: bool) -> Result<i32> {
    let instances = enumerate_o1ppg(max_n, even_only)?;
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let rows = write_corpus(out, &instances)?;
    let mut sizes = BTreeMap::<usize, usize>::new();
    for r in &rows {
        *sizes.entry(r.n).or_default() += 1;
    }
    for (n, count) in sizes {
        println!("n={n} instances={count}");
    }
    println!("wrote {} instances to {}", rows.len(), out.display());
    Ok(EXIT_OK)
}

fn analyze(input: &Path, checks: &[String]) -> Result<i32> {
    let g = load_file(input)?;
    // resolve every name before printing anything
    let lines: Vec<String> = checks
        .iter()
        .map(|c| analyze_check(&g, c).map(|v| format!("check={c} result={v}")))
        .collect::<Result<_>>()?;
    for l in lines {
        println!("{l}");
    }
    Ok(EXIT_OK)
}

fn analyze_check(g: &O1ppg, name: &str) -> Result<String> {
    let extendability = |k: usize| match k_extendability(g, k) {
        Ok(r) => match r.witness {
            None => "true".to_string(),
            Some(m) => format!("false witness={}", fmt_matching(g.graph(), m.edges())),
        },
        Err(e) => format!("inapplicable ({e})"),
    };
    Ok(match name {
        "order" => g.order().to_string(),
        "key" => key_of(g),
        "connectivity" => vertex_connectivity(g, 8).to_string(),
        "representativity" => g.quad().representativity().to_string(),
        "bipartite" => g.quad().is_bipartite().to_string(),
        "min-degree" => g.graph().min_degree().to_string(),
        "bowtie" => {
            let bowties = find_projective_bowties(g.q());
            match bowties.first() {
                None => "absent".into(),
                Some(b) => {
                    let vs: Vec<String> = b.vertices().iter().map(|v| v.to_string()).collect();
                    format!("present count={} first={}", bowties.len(), vs.join(","))
                }
            }
        }
        "barrier4" => barrier_cycles(g, 4).len().to_string(),
        "odd-regions" => find_odd_weighted_regions(g, 6).len().to_string(),
        "two-ext" => extendability(2),
        "three-ext" => extendability(3),
        other => bail!("unknown check '{other}'"),
    })
}

fn verify(
    corpus: &Path,
    report: &Path,
    max_n: Option<usize>,
    config: &AuditConfig,
    workers: Option<usize>,
) -> Result<i32> {
    let start = Instant::now();
    let instances: Vec<(String, O1ppg)> = load_corpus(corpus, max_n)?
        .into_iter()
        .map(|(r, g)| (r.key, g))
        .collect();
    let rep = run_campaign(&instances, config, workers)?;
    fs::write(report, rep.render()).with_context(|| format!("writing {}", report.display()))?;
    eprintln!(
        "{:<24} {:>6} {:>6} {:>13}",
        "theorem", "pass", "fail", "inapplicable"
    );
    for (t, [p, f, i]) in rep.counts() {
        eprintln!("{:<24} {p:>6} {f:>6} {i:>13}", t.slug());
    }
    eprintln!(
        "{} instances in {:.1}s, report {}",
        instances.len(),
        start.elapsed().as_secs_f64(),
        report.display()
    );
    Ok(if rep.fail_count() > 0 {
        EXIT_THEOREM_FAIL
    } else {
        EXIT_OK
    })
}
