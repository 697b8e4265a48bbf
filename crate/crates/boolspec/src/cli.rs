//! Command line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use boolspec_core::canalize::detect;
use boolspec_core::fourier::transform;
use boolspec_core::infomeasure::{mi_brute, mi_spectral};
use boolspec_core::verify::{
    default_mu_grid, verify_lemma1, verify_lemma2, verify_lemma3, Enumeration, DEFAULT_POINTS,
    MAX_ENUMERATION_ARITY,
};
use boolspec_core::{ProductDistribution, SubsetMask, TruthTable};

use crate::format::{self, fmt17, kind_name};
use crate::{parallel, report, surface};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

const MU_HELP: &str = "Per-variable input means as comma-separated decimals, e.g. \
    --mu=-0.4,0.2. Variable i is +1 with probability p_i = (1+mu_i)/2, so each \
    mu_i lies in (-1, 1). Omitted means uniform inputs";

#[derive(Debug, Parser)]
#[command(
    name = "boolspec",
    version,
    about = "Spectral analysis, canalization and mutual information of Boolean functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the spectrum, canalizing variables and per-variable MI of a truth table file
    Analyze(AnalyzeArgs),
    /// Exhaustively check that canalizing functions maximize MI, plus the q/r/s/t grid checks
    Verify(VerifyArgs),
    /// Write MI over the feasible (f0, f1) region of one variable as CSV
    Surface(SurfaceArgs),
    /// Write the Fourier spectrum of a truth table file as CSV
    Transform(TransformArgs),
}

#[derive(Debug, Args)]
pub struct MuArg {
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, help = MU_HELP)]
    pub mu: Option<Vec<f64>>,
}

impl MuArg {
    fn distribution(&self, arity: usize) -> anyhow::Result<ProductDistribution> {
        let Some(mu) = &self.mu else {
            return Ok(ProductDistribution::uniform(arity));
        };
        if mu.len() != arity {
            bail!(
                "--mu has {} values but the function has {arity} variables",
                mu.len()
            );
        }
        Ok(ProductDistribution::new(mu.clone())?)
    }
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Truth table file: `n=<arity>` then a line of 2^n characters 0/1
    pub file: PathBuf,
    #[command(flatten)]
    pub mu: MuArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Number of inputs, at most 4
    #[arg(long)]
    pub n: usize,
    /// Variable under test, 1-based
    #[arg(long)]
    pub i: usize,
    #[command(flatten)]
    pub mu: MuArg,
    /// Interior points per mu value in the q/r/s/t grid checks
    #[arg(long, default_value_t = DEFAULT_POINTS)]
    pub grid: usize,
    /// Also write one CSV row per f0 class to this path
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Worker threads for the enumeration, 0 for all available
    #[arg(long, env = "BOOLSPEC_WORKERS", default_value_t = 0)]
    pub workers: usize,
}

#[derive(Debug, Args)]
pub struct SurfaceArgs {
    /// Mean of the variable; p_i = (1+mu_i)/2
    #[arg(long = "mu-i", default_value_t = 0.0, allow_hyphen_values = true)]
    pub mu_i: f64,
    /// Points per axis
    #[arg(long, default_value_t = 101)]
    pub res: usize,
    /// Emit only the (f0, f1) pairs reachable with n inputs, the others uniform
    #[arg(long)]
    pub quantize: Option<usize>,
    /// Output CSV path, `-` for stdout
    #[arg(short = 'o', long = "output")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    /// Truth table file
    pub file: PathBuf,
    #[command(flatten)]
    pub mu: MuArg,
    /// Output CSV path, `-` for stdout
    #[arg(short = 'o', long = "output")]
    pub output: PathBuf,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let result = match &cli.command {
        Command::Analyze(a) => analyze(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Surface(a) => cmd_surface(a, out),
        Command::Transform(a) => cmd_transform(a, out),
    };
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILURE,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn read_table(path: &Path) -> anyhow::Result<TruthTable> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    format::parse_truth_table(&text).with_context(|| path.display().to_string())
}

fn write_output(
    path: &Path,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> anyhow::Result<()> {
    if path.as_os_str() == "-" {
        return Ok(body(stdout)?);
    }
    let mut file = io::BufWriter::new(
        File::create(path).with_context(|| format!("creating {}", path.display()))?,
    );
    body(&mut file).with_context(|| format!("writing {}", path.display()))?;
    file.flush()?;
    Ok(())
}

const MAX_LISTED: usize = 64;

fn analyze(a: &AnalyzeArgs, out: &mut dyn Write) -> anyhow::Result<bool> {
    let tt = read_table(&a.file)?;
    let d = a.mu.distribution(tt.arity())?;
    let spectrum = transform(&tt, &d)?;
    writeln!(
        out,
        "function: n={}, {} of {} outputs +1",
        tt.arity(),
        tt.count_plus(),
        tt.len()
    )?;
    match a.mu.mu {
        Some(_) => writeln!(out, "inputs: mu={:?}", d.means())?,
        None => writeln!(out, "inputs: uniform")?,
    }

    let nonzero: Vec<u32> = (0..spectrum.len() as u32)
        .filter(|&u| spectrum.coefficient(SubsetMask(u)).abs() > 1e-12)
        .collect();
    writeln!(
        out,
        "spectrum ({}, {} nonzero of {}):",
        kind_name(spectrum.kind()),
        nonzero.len(),
        spectrum.len()
    )?;
    for &u in nonzero.iter().take(MAX_LISTED) {
        let vars: Vec<String> = SubsetMask(u).iter().map(|v| (v + 1).to_string()).collect();
        let value = match spectrum.numerator(SubsetMask(u)) {
            Some(p) => format!("{p}/{}", spectrum.denominator()),
            None => fmt17(spectrum.coefficient(SubsetMask(u))),
        };
        writeln!(out, "  {{{}}} {value}", vars.join(","))?;
    }
    if nonzero.len() > MAX_LISTED {
        writeln!(out, "  ... {} more", nonzero.len() - MAX_LISTED)?;
    }

    writeln!(out, "canalizing:")?;
    format::write_canalizing(&detect(&tt), out)?;

    writeln!(out, "mutual information:")?;
    for var in 0..tt.arity() {
        let brute = mi_brute(&tt, &d, var)?;
        let f1 = spectrum.coefficient(SubsetMask::singleton(var));
        let spectral = mi_spectral(spectrum.mean(), f1, d.mu(var))?;
        writeln!(
            out,
            "  variable {}: brute={} spectral={} diff={:.3e}",
            var + 1,
            fmt17(brute.mi),
            fmt17(spectral.mi),
            (brute.mi - spectral.mi).abs()
        )?;
    }
    Ok(true)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> anyhow::Result<bool> {
    if a.n > MAX_ENUMERATION_ARITY {
        bail!(
            "refusing --n={}: exhaustive enumeration is limited to n <= {MAX_ENUMERATION_ARITY}",
            a.n
        );
    }
    if a.i == 0 || a.i > a.n {
        bail!("--i={} is not a variable of an {}-input function", a.i, a.n);
    }
    let var = a.i - 1;
    let enumeration = match &a.mu.mu {
        None => Enumeration::uniform(a.n, var)?,
        Some(_) => Enumeration::product(a.n, var, a.mu.distribution(a.n)?)?,
    };
    let prop = parallel::run(&enumeration, parallel::resolve_workers(a.workers))?;
    report::write_proposition_text(&prop, out)?;
    if let Some(path) = &a.csv {
        write_output(path, out, |w| report::write_proposition_csv(&prop, w))?;
    }

    let grid = default_mu_grid();
    let mut pass = prop.pass();
    for lemma in [
        verify_lemma1(&grid, a.grid),
        verify_lemma2(&grid, a.grid),
        verify_lemma3(&grid, a.grid),
    ] {
        report::write_lemma_text(&lemma, out)?;
        pass &= lemma.pass();
    }
    writeln!(
        out,
        "{}",
        if pass {
            "all checks passed"
        } else {
            "verification FAILED"
        }
    )?;
    Ok(pass)
}

fn cmd_surface(a: &SurfaceArgs, out: &mut dyn Write) -> anyhow::Result<bool> {
    if a.res < 2 {
        bail!("--res must be at least 2");
    }
    let rows = match a.quantize {
        Some(n) => surface::lattice(a.mu_i, n)?,
        None => surface::grid(a.mu_i, a.res)?,
    };
    write_output(&a.output, out, |w| surface::write_csv(&rows, &mut *w))?;
    Ok(true)
}

fn cmd_transform(a: &TransformArgs, out: &mut dyn Write) -> anyhow::Result<bool> {
    let tt = read_table(&a.file)?;
    let spectrum = transform(&tt, &a.mu.distribution(tt.arity())?)?;
    write_output(&a.output, out, |w| {
        format::write_spectrum_csv(&spectrum, &mut *w)
    })?;
    Ok(true)
}
