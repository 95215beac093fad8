//! `torusrt` — command-line front end over `torusrt-core`.
//!
//! Every subcommand emits one JSON *document* with the fields
//! `{inputs, method, values, cross_check, verdict}` (see
//! `schemas/output.schema.json` at the repository root).  JSON is the
//! canonical format; `--format pretty` renders the same document for
//! humans and `--format csv` is a lossy projection of its tables.
//!
//! Exit codes: `0` success, `1` computational mismatch (a cross-check
//! failed — the document is still printed), `2` usage error or a
//! precondition violation surfaced from the core modules.
//!
//! Results are cached as JSON files keyed by
//! `(subcommand, canonicalized inputs, crate version)`; the cache is a
//! pure optimization and never changes output.  The directory is, in
//! order of precedence: `--cache-dir`, `$TORUSRT_CACHE_DIR`,
//! `$HOME/.cache/torusrt`; `--no-cache` disables it.

pub mod args;
pub mod cache;
pub mod commands;
pub mod envelope;
pub mod render;

use args::{Cli, Command, DimCmd, GaussCmd, MonodromyCmd, ReportCmd, RtCmd, SkeinCmd};
use envelope::Document;

/// CLI-level error: either a bad invocation or a surfaced core-module
/// precondition violation.  Both exit with code 2.
#[derive(Debug)]
pub enum CliError {
    /// Invalid flag combination or value, caught by the CLI itself.
    Usage(String),
    /// A core-module precondition violation, with its diagnostic.
    Core(torusrt_core::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<torusrt_core::Error> for CliError {
    fn from(e: torusrt_core::Error) -> Self {
        CliError::Core(e)
    }
}

/// Dispatch a parsed invocation and return the process exit code.
pub fn run(cli: Cli) -> i32 {
    if let Some(n) = cli.threads {
        // Build the global worker pool once; a second build attempt (e.g.
        // in tests) fails harmlessly and keeps the first configuration.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match execute(&cli) {
        Ok(doc) => {
            render::print(&doc, cli.format);
            envelope::exit_code(&doc.verdict)
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Run the selected subcommand through the cache.
pub fn execute(cli: &Cli) -> Result<Document, CliError> {
    let (name, inputs) = describe(cli)?;
    let dir = cache::resolve(cli);
    if let Some(d) = &dir {
        if let Some(doc) = cache::lookup(d, &name, &inputs) {
            return Ok(doc);
        }
    }
    let doc = dispatch(cli, inputs)?;
    if let Some(d) = &dir {
        cache::store(d, &name, &doc);
    }
    Ok(doc)
}

/// Canonical subcommand path and canonicalized inputs (every flag the
/// subcommand consumes, defaults filled in).  Usage-level validation
/// happens here so bad invocations never touch the cache.
fn describe(cli: &Cli) -> Result<(String, serde_json::Value), CliError> {
    let (name, inputs) = match &cli.command {
        Command::Gauss { cmd: GaussCmd::Compute(a) } => ("gauss compute", commands::gauss::compute_inputs(a)),
        Command::Gauss { cmd: GaussCmd::Verify(a) } => ("gauss verify", commands::gauss::verify_inputs(a)),
        Command::Gauss { cmd: GaussCmd::Relations(a) } => ("gauss relations", commands::gauss::relations_inputs(a)),
        Command::Skein { cmd: SkeinCmd::Reduce(a) } => ("skein reduce", commands::skein::reduce_inputs(a, cli.seed)),
        Command::Skein { cmd: SkeinCmd::Product(a) } => ("skein product", commands::skein::product_inputs(a)),
        Command::Rt { cmd: RtCmd::Eval(a) } => ("rt eval", commands::rt::eval_inputs(a)?),
        Command::Dim { cmd: DimCmd::Gk(a) } => ("dim gk", commands::dim::gk_inputs(a)),
        Command::Dim { cmd: DimCmd::Image(a) } => ("dim image", commands::dim::image_inputs(a)),
        Command::Report { cmd: ReportCmd::MainTheorem(a) } => {
            ("report main-theorem", commands::report::main_theorem_inputs(a))
        }
        Command::Monodromy { cmd: MonodromyCmd::Rho(a) } => {
            ("monodromy rho", commands::monodromy::rho_inputs(a)?)
        }
        Command::Monodromy { cmd: MonodromyCmd::SColinearity(a) } => {
            ("monodromy s-colinearity", commands::monodromy::s_colinearity_inputs(a))
        }
    };
    Ok((name.to_string(), inputs))
}

fn dispatch(cli: &Cli, inputs: serde_json::Value) -> Result<Document, CliError> {
    match &cli.command {
        Command::Gauss { cmd: GaussCmd::Compute(a) } => commands::gauss::compute(a, inputs),
        Command::Gauss { cmd: GaussCmd::Verify(a) } => commands::gauss::verify(a, inputs),
        Command::Gauss { cmd: GaussCmd::Relations(a) } => commands::gauss::relations(a, inputs),
        Command::Skein { cmd: SkeinCmd::Reduce(a) } => commands::skein::reduce(a, cli.seed, inputs),
        Command::Skein { cmd: SkeinCmd::Product(a) } => commands::skein::product(a, inputs),
        Command::Rt { cmd: RtCmd::Eval(a) } => commands::rt::eval(a, inputs),
        Command::Dim { cmd: DimCmd::Gk(a) } => commands::dim::gk(a, inputs),
        Command::Dim { cmd: DimCmd::Image(a) } => commands::dim::image(a, inputs),
        Command::Report { cmd: ReportCmd::MainTheorem(a) } => commands::report::main_theorem(a, inputs),
        Command::Monodromy { cmd: MonodromyCmd::Rho(a) } => commands::monodromy::rho(a, inputs),
        Command::Monodromy { cmd: MonodromyCmd::SColinearity(a) } => {
            commands::monodromy::s_colinearity(a, inputs)
        }
    }
}
