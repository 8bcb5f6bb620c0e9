use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use lzse::access::AccessIndex;
use lzse::entropy::Method;
use lzse::grammar::{grammar_to_lzse, repair_compress};
use lzse::report::{size_report, SizeReport};
use lzse::{generators, Factorization, SymbolMode, Text};
use lzse_cli::archive::{deserialize, serialize};
use lzse_cli::textfile::{encode_text, read_text};

#[derive(Parser)]
#[command(name = "lzse", version, about = "LZ-Start-End compression toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CompressMethod {
    Lzse,
    RepairSe,
}

#[derive(Subcommand)]
enum Command {
    /// Factorize a file and write an archive.
    Compress {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "lzse")]
        method: CompressMethod,
    },
    /// Restore the original file from an archive.
    Decompress {
        archive: PathBuf,
        /// Defaults to standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the symbol at a 1-based position.
    Access {
        archive: PathBuf,
        #[arg(short, long)]
        position: usize,
    },
    /// Write `len` symbols starting at a 1-based position.
    Extract {
        archive: PathBuf,
        #[arg(short, long)]
        position: usize,
        #[arg(short, long)]
        len: usize,
    },
    /// Factor counts and field-stream entropies for several methods.
    Stats {
        input: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "lz77,lzss,lzse,repair,repair-se")]
        methods: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Generate a test string.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Defaults to standard output.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Check that an archive decodes to the given file.
    Verify { archive: PathBuf, original: PathBuf },
}

#[derive(Subcommand)]
enum Family {
    /// a^n
    Unary { n: usize },
    /// Uniform random symbols.
    Random {
        n: usize,
        #[arg(long, default_value_t = 2)]
        sigma: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// A pattern repeated.
    Periodic { pattern: String, reps: usize },
    /// A random period over acgt with point mutations.
    NoisyPeriodic {
        n: usize,
        #[arg(long, default_value_t = 1000)]
        period: usize,
        #[arg(long, default_value_t = 0.001)]
        rate: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Range-sum instance with m random queries (token file).
    Orsp {
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The binary string separating greedy from optimal factorizations.
    LowerBound { m: usize },
}

fn read_archive(path: &Path) -> anyhow::Result<(Factorization, SymbolMode)> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    deserialize(&bytes).with_context(|| format!("reading {}", path.display()))
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
            Ok(())
        }
    }
}

fn symbol_to_string(mode: SymbolMode, c: u32) -> String {
    match mode {
        SymbolMode::Byte if (0x20..0x7f).contains(&c) => (c as u8 as char).to_string(),
        SymbolMode::Byte => format!("\\x{c:02x}"),
        SymbolMode::Token => c.to_string(),
    }
}

/// Converts a 1-based position to 0-based, rejecting 0 and positions past `n`.
fn zero_based(position: usize, n: usize) -> anyhow::Result<usize> {
    if position == 0 || position > n {
        bail!("position {position} outside 1..={n}");
    }
    Ok(position - 1)
}

fn threads() -> usize {
    let available = std::thread::available_parallelism().map_or(1, |n| n.get());
    std::env::var("LZSE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t > 0)
        .map_or(available, |t| t.min(available))
}

fn print_report(r: &SizeReport) {
    println!("text length {} ({} symbols)", r.text_len, r.symbol_mode);
    for m in &r.methods {
        print!("{:<10} factors {:>10}", m.method.name(), m.factors);
        if let Some(g) = m.grammar_size {
            print!("  grammar size {g}");
        }
        println!("  total {:.0} bits", m.total_bits);
        for s in &m.streams {
            println!(
                "    {:<10} len {:>10}  distinct {:>8}  H0 {:>8.4}  bits {:>12.0}",
                s.name, s.len, s.distinct, s.h0, s.bits
            );
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Compress {
            input,
            output,
            method,
        } => {
            let text = read_text(&input)?;
            let fact = match method {
                CompressMethod::Lzse => lzse::factorize(&text),
                CompressMethod::RepairSe => grammar_to_lzse(&repair_compress(text.symbols())),
            };
            let bytes = serialize(&fact, text.mode())?;
            std::fs::write(&output, bytes).with_context(|| format!("writing {}", output.display()))?;
            eprintln!("{} symbols -> {} factors", text.len(), fact.len());
        }
        Command::Decompress { archive, output } => {
            let (fact, mode) = read_archive(&archive)?;
            let text = fact.decode(mode)?;
            write_output(output.as_deref(), &encode_text(&text))?;
        }
        Command::Access { archive, position } => {
            let (fact, mode) = read_archive(&archive)?;
            let p = zero_based(position, fact.text_len())?;
            let index = AccessIndex::new(fact)?;
            println!("{}", symbol_to_string(mode, index.access(p)?));
        }
        Command::Extract {
            archive,
            position,
            len,
        } => {
            let (fact, mode) = read_archive(&archive)?;
            let p = zero_based(position, fact.text_len())?;
            let index = AccessIndex::new(fact)?;
            let symbols = index.extract(p..p.saturating_add(len))?;
            let text = Text::new(symbols, mode)?;
            write_output(None, &encode_text(&text))?;
        }
        Command::Stats {
            input,
            methods,
            json,
        } => {
            let methods = methods
                .iter()
                .map(|m| m.trim().parse::<Method>())
                .collect::<Result<Vec<_>, _>>()?;
            let text = read_text(&input)?;
            let report = size_report(&text, &methods, threads());
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print_report(&report);
            }
        }
        Command::Gen { family, output } => {
            let text = match family {
                Family::Unary { n } => generators::gen_unary(n),
                Family::Random { n, sigma, seed } => generators::gen_random(n, sigma, seed)?,
                Family::Periodic { pattern, reps } => {
                    generators::gen_periodic(pattern.as_bytes(), reps)
                }
                Family::NoisyPeriodic {
                    n,
                    period,
                    rate,
                    seed,
                } => generators::gen_noisy_periodic(n, period, rate, seed)?,
                Family::Orsp { m, seed } => {
                    generators::gen_orsp(m, &generators::random_queries(m, seed))?.text
                }
                Family::LowerBound { m } => generators::gen_lower_bound_family(m)?.text,
            };
            write_output(output.as_deref(), &encode_text(&text))?;
        }
        Command::Verify { archive, original } => {
            let (fact, mode) = read_archive(&archive)?;
            let text = read_text(&original)?;
            if text.mode() != mode {
                bail!(
                    "archive holds {} symbols but {} is a {} text",
                    mode.name(),
                    original.display(),
                    text.mode().name()
                );
            }
            fact.validate(text.symbols())?;
            println!("ok: {} symbols, {} factors", fact.text_len(), fact.len());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return if usage { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
