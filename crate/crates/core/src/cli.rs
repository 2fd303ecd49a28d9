//! `djnmr` command-line front end. [`run`] does all the work and returns the
//! payload and exit code so the binary stays a thin wrapper.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::entangle::{census_by_class, finest_factorization, EntanglementKind};
use crate::error::Error;
use crate::nmr::spectrum::{reference_spectrum, spectral_verdict};
use crate::nmr::{
    compile_and_verify, product_operator_decomposition, run_experiment, to_program_text,
    SpinSystem, StickSpectrum, ZMode,
};
use crate::oracles::{self, build_phase_oracle, resolve_function, run_dj, Classification};

#[derive(Debug, Parser)]
#[command(name = "djnmr", version, about = "Ancilla-free Deutsch-Jozsa: census, verdicts, NMR pulse programs and spectra")]
struct Cli {
    /// Spin-system JSON (compile, simulate, spectrum-verdict)
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Listing format
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Ideal,
    Composite,
}

impl From<Mode> for ZMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Ideal => ZMode::Ideal,
            Mode::Composite => ZMode::Composite,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every constant and balanced function on n bits
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Run the single-query algorithm and print the |0…0⟩ amplitude
    Run {
        #[arg(long)]
        n: usize,
        /// Canonical name (U1…U9) or truth-table key
        #[arg(long)]
        function: String,
    },
    /// Entanglement class and finest factorization of a function's oracle
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        function: String,
    },
    /// Emit the pulse program for a function
    Compile {
        #[arg(long)]
        function: String,
        #[arg(long, value_enum, default_value_t = Mode::Ideal)]
        mode: Mode,
        /// Check the program's propagator against the oracle
        #[arg(long)]
        verify: bool,
    },
    /// Simulate the NMR experiment and write the stick spectrum
    Simulate {
        #[arg(long)]
        function: String,
        #[arg(long, value_enum, default_value_t = Mode::Ideal)]
        mode: Mode,
        /// Spectrum CSV destination (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the product-operator decomposition of the final state
        #[arg(long)]
        ops: bool,
    },
    /// Read a spectrum CSV and decide constant or balanced from line phases
    SpectrumVerdict {
        #[arg(long)]
        input: PathBuf,
    },
}

/// Payload and exit status of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    /// 0 success, 2 validation error, 1 internal error.
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Validation(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Validation(e.to_string())
    }
}

type CmdResult = std::result::Result<String, Failure>;

pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CommandResult {
                    exit_code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                let first = text.lines().next().unwrap_or("invalid arguments");
                let reason = first.strip_prefix("error: ").unwrap_or(first);
                CommandResult {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: format!("error: {reason}\n"),
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(stdout) => CommandResult {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Validation(msg)) => CommandResult {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Internal(msg)) => CommandResult {
            exit_code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Enumerate { n } => cmd_enumerate(*n, cli.format),
        Command::Run { n, function } => cmd_run(*n, function),
        Command::Classify { n, function } => cmd_classify(*n, function),
        Command::Compile {
            function,
            mode,
            verify,
        } => cmd_compile(&load_config(cli)?, function, (*mode).into(), *verify),
        Command::Simulate {
            function,
            mode,
            out,
            ops,
        } => cmd_simulate(&load_config(cli)?, function, (*mode).into(), out.as_ref(), *ops),
        Command::SpectrumVerdict { input } => cmd_spectrum_verdict(&load_config(cli)?, input),
    }
}

fn load_config(cli: &Cli) -> std::result::Result<SpinSystem, Failure> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| Failure::Validation("--config <path> is required".into()))?;
    Ok(SpinSystem::load(path)?)
}

fn cmd_enumerate(n: usize, format: Format) -> CmdResult {
    let functions = oracles::enumerate_functions(n)?;
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("key,truth_table,classification,entanglement,partition\n");
    } else {
        let _ = writeln!(
            out,
            "{:>5}  {:<8}  {:<8}  {:<19}  partition",
            "key", "table", "class", "entanglement"
        );
    }
    let mut constant = 0;
    let mut balanced = 0;
    for f in &functions {
        let class = f.classify();
        match class {
            Classification::Constant => constant += 1,
            _ => balanced += 1,
        }
        let ent = finest_factorization(&build_phase_oracle(f)?);
        match format {
            Format::Csv => {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    f.key(),
                    f.bit_string(),
                    class,
                    ent.kind,
                    ent.finest_partition
                );
            }
            Format::Table => {
                let _ = writeln!(
                    out,
                    "{:>5}  {:<8}  {:<8}  {:<19}  {}",
                    f.key(),
                    f.bit_string(),
                    class.to_string(),
                    ent.kind.to_string(),
                    ent.finest_partition
                );
            }
        }
    }
    let census = census_by_class(n)?;
    let per_class: Vec<String> = EntanglementKind::ALL
        .iter()
        .map(|k| format!("{k} {}", census.count(*k)))
        .collect();
    let _ = writeln!(
        out,
        "# total {}: CONSTANT {constant}, BALANCED {balanced}; {}",
        functions.len(),
        per_class.join(", ")
    );
    Ok(out)
}

fn cmd_run(n: usize, function: &str) -> CmdResult {
    let f = resolve_function(n, function)?;
    let (_, verdict) = run_dj(&f)?;
    Ok(format!(
        "amplitude {:.6}, {}\n",
        verdict.zero_state_amplitude.norm(),
        verdict.kind
    ))
}

fn cmd_classify(n: usize, function: &str) -> CmdResult {
    let f = resolve_function(n, function)?;
    let ent = finest_factorization(&build_phase_oracle(&f)?);
    Ok(format!(
        "function {} ({}): {}, {} {}\n",
        f.key(),
        f.bit_string(),
        f.classify(),
        ent.kind,
        ent.finest_partition
    ))
}

fn cmd_compile(sys: &SpinSystem, function: &str, mode: ZMode, verify: bool) -> CmdResult {
    let f = resolve_function(sys.n_spins(), function)?;
    let (seq, v) = compile_and_verify(sys, &f, mode)?;
    let mut out = to_program_text(&seq);
    if verify {
        let _ = writeln!(
            out,
            "# verify: fidelity {:.12}, local-phase fidelity {:.12}, unitarity error {:.1e}, {}",
            v.strict_fidelity,
            v.local_phase_fidelity,
            v.unitarity_error,
            if v.pass { "PASS" } else { "FAIL" }
        );
    }
    Ok(out)
}

fn cmd_simulate(
    sys: &SpinSystem,
    function: &str,
    mode: ZMode,
    out_path: Option<&PathBuf>,
    ops: bool,
) -> CmdResult {
    let f = resolve_function(sys.n_spins(), function)?;
    let exp = run_experiment(sys, &f, mode)?;
    let csv = exp.spectrum.to_csv();
    let mut out = String::new();
    match out_path {
        Some(path) => std::fs::write(path, &csv)
            .map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))?,
        None => out.push_str(&csv),
    }
    for w in &exp.spectrum.warnings {
        let _ = writeln!(out, "# warning: {w}");
    }
    if ops {
        for term in product_operator_decomposition(&exp.rho_final) {
            let _ = writeln!(out, "{term}");
        }
    }
    for (spin, pattern) in &exp.verdict.patterns {
        let _ = writeln!(out, "spin {spin}: {pattern}");
    }
    let _ = writeln!(out, "{}", exp.verdict.kind);
    Ok(out)
}

fn cmd_spectrum_verdict(sys: &SpinSystem, input: &PathBuf) -> CmdResult {
    let text = std::fs::read_to_string(input)
        .map_err(|e| Failure::Validation(format!("{}: {e}", input.display())))?;
    let spectrum = StickSpectrum::from_csv(&text)?;
    let verdict = spectral_verdict(&spectrum, &reference_spectrum(sys))?;
    let mut out = String::new();
    for (spin, pattern) in &verdict.patterns {
        let _ = writeln!(out, "spin {spin}: {pattern}");
    }
    let _ = writeln!(out, "{}", verdict.kind);
    Ok(out)
}
