use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use kmchev::commands::{self, Job};
use kmchev::config::{CartanSource, Format, JobConfig, Mode, Model, Sign};
use kmchev::selftest::{self, Fault};

#[derive(Parser)]
#[command(name = "kmchev", version, about = "Equivariant K-theory Chevalley coefficients for Kac-Moody flag manifolds")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Chevalley coefficients in the LS, alcove or nilHecke model.
    Chevalley(JobArgs),
    /// Demazure (--w) or opposite Demazure (--z, --max-length) crystal.
    Crystal(JobArgs),
    /// Alcove tree below --w, with labeled edges.
    Tree(JobArgs),
    /// Runs the invariant suite on the built-in scenarios.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct JobArgs {
    /// Preset Cartan type, e.g. A2, B2, G2, A2~.
    #[arg(long, conflicts_with = "gcm_file", required_unless_present = "gcm_file")]
    cartan: Option<String>,
    /// JSON file {"matrix": [[..]], "symmetrizer": [..]}.
    #[arg(long)]
    gcm_file: Option<PathBuf>,
    /// Dominant weight "c0,c1,...[,delta=q]" in fundamental coordinates.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    #[arg(long, value_enum, default_value = "dominant")]
    sign: Sign,
    #[arg(long, value_enum, default_value = "all")]
    model: Model,
    /// Fixed w, as space-separated node labels or "e".
    #[arg(long, conflicts_with = "z", required_unless_present = "z")]
    w: Option<String>,
    /// Fixed z; needs --max-length.
    #[arg(long, requires = "max_length")]
    z: Option<String>,
    #[arg(long)]
    max_length: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, hide = true)]
    inject_fault: Option<Fault>,
}

#[derive(Args)]
struct SelftestArgs {
    /// Comma-separated scenario names; an empty list runs nothing.
    #[arg(long)]
    scenarios: Option<String>,
    #[arg(long, value_enum)]
    inject_fault: Option<Fault>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl JobArgs {
    fn config(&self) -> JobConfig {
        let cartan = match (&self.cartan, &self.gcm_file) {
            (_, Some(p)) => CartanSource::GcmFile(p.clone()),
            (Some(c), None) => CartanSource::Preset(c.clone()),
            (None, None) => unreachable!("clap requires one of --cartan, --gcm-file"),
        };
        let mode = match (&self.w, &self.z) {
            (Some(w), _) => Mode::FixedW(w.clone()),
            (None, Some(z)) => Mode::FixedZ { z: z.clone(), max_length: self.max_length.unwrap_or(0) },
            (None, None) => unreachable!("clap requires one of --w, --z"),
        };
        JobConfig { cartan, weight: self.weight.clone(), sign: self.sign, model: self.model, mode, format: self.format }
    }

    fn job(&self) -> anyhow::Result<Job> {
        let mut job = Job::resolve(&self.config())?;
        job.comparator = self.inject_fault.map(Fault::comparator);
        Ok(job)
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.cmd {
        Cmd::Chevalley(a) => {
            let job = a.job()?;
            let res = commands::chevalley(&job)?;
            emit(&a.out, &commands::render_chevalley(&job, &res)?)?;
            if res.truncated {
                eprintln!("note: the result is truncated at the length bound");
            }
            Ok(res.agreement.map_or(true, |x| x.agree))
        }
        Cmd::Crystal(a) => {
            let job = a.job()?;
            let res = commands::crystal(&job)?;
            emit(&a.out, &commands::render_crystal(&job, &res)?)?;
            Ok(res.agree.unwrap_or(true))
        }
        Cmd::Tree(a) => {
            let job = a.job()?;
            let res = commands::tree(&job)?;
            emit(&a.out, &commands::render_tree(&job, &res)?)?;
            Ok(true)
        }
        Cmd::Selftest(a) => {
            let filter: Option<Vec<String>> = a.scenarios.as_ref().map(|s| {
                s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(String::from).collect()
            });
            let rep = selftest::run(filter.as_deref(), a.inject_fault)?;
            let text = match a.format {
                Format::Json => commands::to_json(&rep)?,
                Format::Table => selftest::render_table(&rep),
                Format::Dot => anyhow::bail!("selftest has no dot output"),
            };
            emit(&a.out, &text)?;
            Ok(rep.passed)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
