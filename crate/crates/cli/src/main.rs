use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use flexgroup::{parse_group_spec, Error, FiniteGroup, FlexOptions, Suite, VerifyOptions};
use flexgroup_cli::{
    analyze, catalog, catalog_doc, exit_code, render_analyze, render_catalog, render_verify, verify, Format,
};

#[derive(Parser)]
#[command(name = "flexgroup", version, about = "Generation rank, cycliciser and k-flexibility of small finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Evaluate one subgroup per conjugacy class in flexibility searches.
    #[arg(long, global = true)]
    symmetry_reduction: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse one group.
    Analyze {
        /// Group specification, e.g. "Q8" or "Aff(3,2,2)".
        spec: Option<String>,
        /// Read the group from a Cayley-table JSON document instead.
        #[arg(long, conflicts_with = "spec")]
        table: Option<PathBuf>,
        /// Include the Cayley table in the report.
        #[arg(long)]
        dump_table: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite: thm1, thm2, d2, lemmas, examples or all.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Verify one group instead of the catalog.
        #[arg(long)]
        spec: Option<String>,
        /// Skip catalog entries above this order.
        #[arg(long, default_value_t = 128)]
        max_order: usize,
        /// Check the quotient condition over all normal subgroups as well.
        #[arg(long)]
        all_normals: bool,
        #[command(flatten)]
        common: Common,
    },
    /// List the built-in catalog.
    Catalog {
        #[arg(long)]
        max_order: Option<usize>,
        /// Comma-separated tags; entries carrying any of them are listed.
        #[arg(long, value_delimiter = ',')]
        tags: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::parse(s).ok_or_else(|| format!("unknown suite {s:?} (thm1, thm2, d2, lemmas, examples, all)"))
}

fn flex_options(c: &Common) -> FlexOptions {
    FlexOptions { symmetry_reduction: c.symmetry_reduction, ..FlexOptions::default() }
}

enum Failure {
    Core(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn emit(c: &Common, text: &str) -> Result<(), Failure> {
    match &c.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_analyze(spec: Option<&str>, table: Option<&PathBuf>, dump_table: bool, common: &Common) -> Result<u8, Failure> {
    let (g, name) = match (spec, table) {
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            (FiniteGroup::from_json(&text)?, path.display().to_string())
        }
        (Some(s), None) => {
            let g = parse_group_spec(s)?;
            let name = g.origin().to_string();
            (g, name)
        }
        (None, None) => return Err(Failure::Usage("a group spec or --table is required".into())),
    };
    let doc = analyze(&g, &name, &flex_options(common), dump_table)?;
    emit(common, &render_analyze(&doc, common.format))?;
    Ok(0)
}

fn cmd_verify(
    suite: Suite,
    spec: Option<&str>,
    max_order: usize,
    all_normals: bool,
    common: &Common,
) -> Result<u8, Failure> {
    let groups = match spec {
        Some(s) => {
            let g = parse_group_spec(s)?;
            vec![(g.origin().to_string(), g, None)]
        }
        None => catalog::select(Some(max_order), &[])?.into_iter().map(|(e, g)| (e.name, g, e.expected_d)).collect(),
    };
    let opts = VerifyOptions { flex: flex_options(common), all_normals, ..VerifyOptions::default() };
    let doc = verify(&groups, suite, &opts)?;
    emit(common, &render_verify(&doc, common.format))?;
    let s = &doc.summary;
    eprintln!("verify {}: {} groups, {} checks, {} disagreements", suite.name(), s.groups, s.checks, s.disagreements);
    Ok(if doc.all_agree() { 0 } else { 1 })
}

fn cmd_catalog(max_order: Option<usize>, tags: &[String], common: &Common) -> Result<u8, Failure> {
    let doc = catalog_doc(max_order, tags)?;
    emit(common, &render_catalog(&doc, common.format))?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let started = Instant::now();
    let common = match &cli.command {
        Command::Analyze { common, .. } | Command::Verify { common, .. } | Command::Catalog { common, .. } => common,
    };
    if let Some(n) = common.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .map_err(|e| Failure::Usage(format!("--jobs: {e}")))?;
    }
    let code = match &cli.command {
        Command::Analyze { spec, table, dump_table, common } => {
            cmd_analyze(spec.as_deref(), table.as_ref(), *dump_table, common)?
        }
        Command::Verify { suite, spec, max_order, all_normals, common } => {
            cmd_verify(*suite, spec.as_deref(), *max_order, *all_normals, common)?
        }
        Command::Catalog { max_order, tags, common } => cmd_catalog(*max_order, tags, common)?,
    };
    eprintln!("elapsed {:.3}s", started.elapsed().as_secs_f64());
    Ok(code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
