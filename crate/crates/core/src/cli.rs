//! Command-line front end. The `z4rm` binary is a thin wrapper over [`run`].
//!
//! Exit codes: 0 pass, 1 claim failure or absence, 2 usage or input error,
//! 3 enumeration budget exceeded.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::analysis::{
    budget_from_env, image_is_linear, image_is_linear_bruteforce, lee_weight_distribution,
    min_lee_weight, nonequivalence_report, search_nonlinear_base, verify_lrm, Mode, SweepOptions,
    DEFAULT_SEARCH_LIMIT,
};
use crate::codes::{lrm, rm_binary, CodeParams, OverrideTable, RmOrder, Z4Code};
use crate::error::Error;
use crate::format::{parse_bit_words, parse_code, parse_z4_words, render_code, MAGIC};
use crate::z4::Z4Word;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "z4rm",
    version,
    about = "Quaternary Reed-Muller-like codes and their Gray images"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct SweepArgs {
    /// log2 of the largest codeword count to enumerate [default: $Z4RM_BUDGET or 28]
    #[arg(long)]
    budget: Option<u32>,
    /// Worker threads for enumeration
    #[arg(long)]
    threads: Option<usize>,
}

impl SweepArgs {
    fn options(&self) -> SweepOptions {
        let mut opts = SweepOptions::audit(self.budget.unwrap_or_else(budget_from_env));
        opts.threads = self.threads;
        opts
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Construct LRM(r,m) and write it as a code file
    Build {
        r: i64,
        m: i64,
        /// Substitute a code at a recursion node, as `R,M=FILE`
        /// Use the code in FILE for node R,M of the recursion (repeatable)
        #[arg(long = "override", value_name = "R,M=FILE")]
        overrides: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Check LRM(r,m) against its claimed (n, k, d)
    Verify {
        r: i64,
        m: i64,
        /// Stop at the first codeword meeting the claimed distance
        #[arg(long)]
        fast: bool,
        /// Print key=value records only
        #[arg(long)]
        machine: bool,
        /// Use the code in FILE for node R,M of the recursion (repeatable)
        #[arg(long = "override", value_name = "R,M=FILE")]
        overrides: Vec<String>,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Verify every order 0 <= r <= m <= M
    VerifyAll {
        max_m: i64,
        #[arg(long)]
        machine: bool,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Gray map a code file (all codewords) or a list of Z4 words
    Gray {
        file: PathBuf,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Inverse Gray map a list of binary words
    Ungray { file: PathBuf },
    /// Minimum Lee distance of a code
    Mindist {
        file: PathBuf,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Lee weight distribution of a code
    Wdist {
        file: PathBuf,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Test whether a word is a codeword
    Member { file: PathBuf, word: String },
    /// Whether the Gray image of a code is linear
    ImageLinear {
        file: PathBuf,
        /// Use pairwise XOR closure instead of the generator criterion
        #[arg(long)]
        brute: bool,
    },
    /// List all codewords
    Enumerate {
        file: PathBuf,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Compare LRM and QRM sizes for every order up to M
    CompareQrm { max_m: i64 },
    /// Generators of the binary Reed-Muller code RM(r,m)
    Rm { r: i64, m: i64 },
    /// Search for codes with given (n, k, d) and a nonlinear Gray image
    SearchNonlinear {
        n: u64,
        k: u64,
        d: u64,
        #[arg(long, default_value_t = DEFAULT_SEARCH_LIMIT)]
        limit: usize,
        /// Write the first result here
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print every result instead of the first
        #[arg(long)]
        all: bool,
    },
}

/// Anything that stops a subcommand early, with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })
}

fn load_code(path: &Path) -> Result<Z4Code, Failure> {
    parse_code(&read(path)?).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })
}

fn load_overrides(specs: &[String], budget: u32) -> Result<OverrideTable, Failure> {
    let mut table = OverrideTable::new();
    for spec in specs {
        let bad = || Failure {
            code: EXIT_USAGE,
            message: format!("override {spec:?} is not of the form R,M=FILE"),
        };
        let (node, file) = spec.split_once('=').ok_or_else(bad)?;
        let (r, m) = node.split_once(',').ok_or_else(bad)?;
        let r = r.trim().parse().map_err(|_| bad())?;
        let m = m.trim().parse().map_err(|_| bad())?;
        let order = RmOrder::new(r, m)?;
        table.insert(order, load_code(Path::new(file))?, budget)?;
    }
    Ok(table)
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Build {
            r,
            m,
            overrides,
            output,
            sweep,
        } => {
            let table = load_overrides(&overrides, sweep.options().budget)?;
            let code = lrm(RmOrder::new(r, m)?, &table)?;
            let text = render_code(&code);
            match output {
                Some(path) => fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_PASS)
        }
        Command::Verify {
            r,
            m,
            fast,
            machine,
            overrides,
            sweep,
        } => {
            let mut opts = sweep.options();
            if fast {
                opts = opts.with_mode(Mode::Fast);
            }
            let table = load_overrides(&overrides, opts.budget)?;
            let report = verify_lrm(RmOrder::new(r, m)?, &table, &opts)?;
            if machine {
                write!(out, "{}", report.render_lines())?;
            } else {
                write!(out, "{}", report.render_text())?;
            }
            Ok(if report.pass {
                EXIT_PASS
            } else if report.skipped() {
                EXIT_BUDGET
            } else {
                EXIT_FAIL
            })
        }
        Command::VerifyAll {
            max_m,
            machine,
            sweep,
        } => {
            let opts = sweep.options();
            RmOrder::new(0, max_m)?;
            let mut all_pass = true;
            if !machine {
                writeln!(
                    out,
                    "{:>3} {:>3} {:>6} {:>6} {:>6} {:>9} image",
                    "r", "m", "n", "k", "d", "status"
                )?;
            }
            for order in RmOrder::all_up_to(max_m as u32) {
                let report = verify_lrm(order, &OverrideTable::new(), &opts)?;
                let status = if report.pass {
                    "pass"
                } else if report.skipped() {
                    "skipped"
                } else {
                    all_pass = false;
                    "FAIL"
                };
                if machine {
                    write!(out, "{}", report.render_lines())?;
                } else {
                    writeln!(
                        out,
                        "{:>3} {:>3} {:>6} {:>6} {:>6} {:>9} {}",
                        order.r(),
                        order.m(),
                        report.length,
                        report.log2_size,
                        report.min_distance,
                        status,
                        if report.image_linear {
                            "linear"
                        } else {
                            "nonlinear"
                        }
                    )?;
                }
            }
            Ok(if all_pass { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Gray { file, sweep } => {
            let text = read(&file)?;
            if text.starts_with(MAGIC) {
                let code = load_code(&file)?;
                for w in code.enumerate(sweep.options().budget)? {
                    writeln!(out, "{}", w.gray())?;
                }
            } else {
                for w in parse_z4_words(&text)? {
                    writeln!(out, "{}", w.gray())?;
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Ungray { file } => {
            for b in parse_bit_words(&read(&file)?)? {
                writeln!(out, "{}", b.gray_inverse()?)?;
            }
            Ok(EXIT_PASS)
        }
        Command::Mindist { file, sweep } => {
            let code = load_code(&file)?;
            writeln!(out, "{}", min_lee_weight(&code, &sweep.options())?)?;
            Ok(EXIT_PASS)
        }
        Command::Wdist { file, sweep } => {
            let code = load_code(&file)?;
            let wd = lee_weight_distribution(&code, &sweep.options())?;
            for (w, count) in wd.counts.iter().enumerate().filter(|(_, &c)| c > 0) {
                writeln!(out, "{w} {count}")?;
            }
            Ok(EXIT_PASS)
        }
        Command::Member { file, word } => {
            let code = load_code(&file)?;
            let x: Z4Word = word.parse()?;
            if code.contains(&x)? {
                writeln!(out, "present")?;
                Ok(EXIT_PASS)
            } else {
                writeln!(out, "absent")?;
                Ok(EXIT_FAIL)
            }
        }
        Command::ImageLinear { file, brute } => {
            let code = load_code(&file)?;
            let linear = if brute {
                image_is_linear_bruteforce(&code)?
            } else {
                image_is_linear(&code)
            };
            writeln!(out, "{}", if linear { "linear" } else { "nonlinear" })?;
            Ok(EXIT_PASS)
        }
        Command::Enumerate { file, sweep } => {
            let code = load_code(&file)?;
            for w in code.enumerate(sweep.options().budget)? {
                writeln!(out, "{w}")?;
            }
            Ok(EXIT_PASS)
        }
        Command::CompareQrm { max_m } => {
            RmOrder::new(0, max_m)?;
            writeln!(out, "r m lrm_k qrm_k")?;
            let mut consistent = true;
            for order in RmOrder::all_up_to(max_m as u32) {
                let rep = nonequivalence_report(order);
                // distinct exactly below the top order
                consistent &= rep.distinct == (order.r() < order.m());
                writeln!(out, "{rep}")?;
            }
            Ok(if consistent { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Rm { r, m } => {
            let code = rm_binary(RmOrder::new(r, m)?);
            writeln!(out, "RM({r},{m}) n={} rows={}", code.n, code.rows.len())?;
            for row in &code.rows {
                writeln!(out, "{row}")?;
            }
            Ok(EXIT_PASS)
        }
        Command::SearchNonlinear {
            n,
            k,
            d,
            limit,
            output,
            all,
        } => {
            let found = search_nonlinear_base(CodeParams { n, k, d }, limit)?;
            writeln!(
                out,
                "found {} codes with parameters ({n},{k},{d}) and nonlinear Gray image",
                found.len()
            )?;
            if let Some(first) = found.first() {
                match output {
                    Some(path) => fs::write(path, render_code(first))?,
                    None if !all => out.write_all(render_code(first).as_bytes())?,
                    None => {}
                }
            }
            if all {
                for c in &found {
                    out.write_all(render_code(c).as_bytes())?;
                }
            }
            Ok(if found.is_empty() {
                EXIT_FAIL
            } else {
                EXIT_PASS
            })
        }
    }
}
