//! `sqdeform`: Gröbner bases, Γ graphs and deformation checks on corpus
//! entries.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use sqdeform::deformation::Verdict;
use sqdeform::gamma::{build_gamma, connectedness_dimension_graphwise};
use sqdeform::groebner::initial_ideal;
use sqdeform::io::{
    gamma_to_dot, load_corpus, prime_labels, run_entry, CorpusEntry, CorpusSummary, OrderSpec, SummaryRow,
};
use sqdeform::lyubeznik::lyubeznik_triple;
use sqdeform::{Error, Limits};

#[derive(Parser)]
#[command(name = "sqdeform", version, about = "Connectedness of minimal primes under square-free degenerations")]
struct Cli {
    /// Monomial order overriding the entry's: lex, grevlex, weight:3,5,6:lex, or JSON.
    #[arg(long, global = true)]
    order: Option<String>,

    /// Maximum S-pair reductions per Gröbner basis computation.
    #[arg(long, global = true)]
    max_steps: Option<u64>,

    /// Output file (single-entry commands) or report directory (verify).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis.
    Gb { entry: PathBuf },
    /// Initial ideal and whether it is square-free.
    Initial { entry: PathBuf },
    /// Krull dimension of S/I (-1 for the unit ideal).
    Dim { entry: PathBuf },
    /// Minimal primes of a square-free monomial ideal.
    Minprimes { entry: PathBuf },
    /// Components of Γ_t.
    Gamma {
        entry: PathBuf,
        #[arg(long)]
        t: i64,
    },
    /// Graph-derived connectedness dimension.
    Cdim { entry: PathBuf },
    /// λ_{0,1}, λ_{1,2} and λ_{d+1,d+1}.
    Lyubeznik { entry: PathBuf },
    /// Full comparison of S/I with S/in(I).
    DeformCheck {
        entry: PathBuf,
        #[arg(long)]
        timings: bool,
    },
    /// Runs deform-check on every entry of a corpus directory.
    Verify {
        dir: PathBuf,
        /// Worker threads (default: logical cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        timings: bool,
    },
    /// Γ_t in DOT format.
    Dot {
        entry: PathBuf,
        #[arg(long)]
        t: i64,
    },
}

struct Context {
    order: Option<OrderSpec>,
    limits: Limits,
    out: Option<PathBuf>,
}

impl Context {
    fn entry(&self, path: &Path) -> Result<CorpusEntry, Error> {
        let mut entry = CorpusEntry::load(path)?;
        if let Some(order) = &self.order {
            entry.order = order.clone();
            entry.validate()?;
        }
        Ok(entry)
    }

    fn emit(&self, text: &str) -> Result<(), Error> {
        match &self.out {
            Some(path) => write_atomic(path, text),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn emit_json(&self, value: &Value) -> Result<(), Error> {
        let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
        s.push('\n');
        self.emit(&s)
    }
}

fn write_atomic(path: &Path, contents: &str) -> Result<(), Error> {
    let file_name = path
        .file_name()
        .ok_or_else(|| Error::Io(format!("{} is not a file path", path.display())))?;
    let tmp = path.with_file_name(format!(".{}.tmp-{}", file_name.to_string_lossy(), std::process::id()));
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn exit_for(v: Verdict) -> ExitCode {
    match v {
        Verdict::Fail => ExitCode::from(1),
        Verdict::Pass | Verdict::NotApplicable => ExitCode::SUCCESS,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let ctx = Context {
        order: cli.order.as_deref().map(OrderSpec::parse).transpose()?,
        limits: Limits {
            max_steps: cli.max_steps.unwrap_or(Limits::default().max_steps),
        },
        out: cli.out,
    };
    match cli.command {
        Command::Gb { entry } => {
            let e = ctx.entry(&entry)?;
            let order = e.order()?;
            let gb = e.engine(ctx.limits).groebner(&e.ideal()?, &order)?;
            let basis: Vec<String> = gb.basis().iter().map(|g| g.display(&e.ring).to_string()).collect();
            ctx.emit_json(&json!({ "entry_id": e.id, "order": order.to_string(), "basis": basis }))?;
        }
        Command::Initial { entry } => {
            let e = ctx.entry(&entry)?;
            let order = e.order()?;
            let gb = e.engine(ctx.limits).groebner(&e.ideal()?, &order)?;
            let m = initial_ideal(&gb);
            ctx.emit_json(&json!({
                "entry_id": e.id,
                "order": order.to_string(),
                "initial_ideal": m.display(&e.ring).to_string(),
                "squarefree": m.is_squarefree(),
            }))?;
        }
        Command::Dim { entry } => {
            let e = ctx.entry(&entry)?;
            let d = e.engine(ctx.limits).krull_dimension(&e.ideal()?, &e.order()?)?;
            ctx.emit_json(&json!({ "entry_id": e.id, "dimension": d }))?;
        }
        Command::Minprimes { entry } => {
            let e = ctx.entry(&entry)?;
            let m = e
                .ideal()?
                .as_monomial_ideal()
                .ok_or_else(|| Error::Contract("minprimes needs a monomial ideal".into()))?;
            let primes: Vec<String> = m.minimal_primes()?.iter().map(|p| p.display(&e.ring).to_string()).collect();
            ctx.emit_json(&json!({ "entry_id": e.id, "minimal_primes": primes }))?;
        }
        Command::Gamma { entry, t } => {
            let e = ctx.entry(&entry)?;
            let family = e.family(&e.engine(ctx.limits))?;
            let g = build_gamma(&family, t)?;
            ctx.emit_json(&json!({
                "entry_id": e.id,
                "t": t,
                "vertices": prime_labels(&family, &e.ring),
                "edges": g.edges,
                "components": g.component_count(),
                "partition": g.component_partition(),
            }))?;
        }
        Command::Cdim { entry } => {
            let e = ctx.entry(&entry)?;
            let family = e.family(&e.engine(ctx.limits))?;
            ctx.emit_json(&json!({
                "entry_id": e.id,
                "c": connectedness_dimension_graphwise(&family),
                "quotient_dim": family.quotient_dim(),
                "single_prime": family.len() == 1,
            }))?;
        }
        Command::Lyubeznik { entry } => {
            let e = ctx.entry(&entry)?;
            let family = e.family(&e.engine(ctx.limits))?;
            let triple = lyubeznik_triple(&family)?;
            ctx.emit_json(&json!({
                "entry_id": e.id,
                "assume_absolutely_prime": e.assume_absolutely_prime,
                "lyubeznik": triple,
            }))?;
        }
        Command::DeformCheck { entry, timings } => {
            let e = ctx.entry(&entry)?;
            let envelope = run_entry(&e, ctx.limits, timings);
            ctx.emit(&envelope.to_json())?;
            return Ok(exit_for(envelope.status()));
        }
        Command::Verify { dir, jobs, timings } => {
            let entries = load_corpus(&dir)?;
            let entries = entries
                .into_iter()
                .map(|(path, mut e)| {
                    if let Some(order) = &ctx.order {
                        e.order = order.clone();
                        e.validate()?;
                    }
                    Ok((path, e))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let out_dir = ctx.out.clone().unwrap_or_else(|| PathBuf::from("reports"));
            fs::create_dir_all(&out_dir)?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| Error::Internal(e.to_string()))?;
            let rows = pool.install(|| {
                entries
                    .par_iter()
                    .map(|(path, e)| {
                        let envelope = run_entry(e, ctx.limits, timings);
                        write_atomic(&out_dir.join(format!("{}.report.json", e.id)), &envelope.to_json())?;
                        Ok(SummaryRow {
                            id: e.id.clone(),
                            file: path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default(),
                            status: envelope.status(),
                            diagnostics: envelope.diagnostics,
                        })
                    })
                    .collect::<Result<Vec<_>, Error>>()
            })?;
            let summary = CorpusSummary::new(rows);
            let text = summary.to_json();
            write_atomic(&out_dir.join("summary.json"), &text)?;
            print!("{text}");
            return Ok(if summary.failed > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS });
        }
        Command::Dot { entry, t } => {
            let e = ctx.entry(&entry)?;
            let family = e.family(&e.engine(ctx.limits))?;
            let g = build_gamma(&family, t)?;
            ctx.emit(&gamma_to_dot(&g, &prime_labels(&family, &e.ring)))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

