use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use sagp_core::gen::{random_symbols, render};
use sagp_core::oracle::{brute_force_sagps_bounded, DEFAULT_ORACLE_BOUND};
use sagp_core::pipeline::{compute_report_with_stats, compute_type1, Prepared};
use sagp_core::{Backend, Sagp, SagpReport, Text};

#[derive(Parser)]
#[command(name = "sagp", version, about = "Canonical longest single-arm-gapped palindromes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report canonical longest SAGPs for every pivot.
    Find {
        #[arg(long, default_value = "stree")]
        backend: Backend,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Print a random string.
    Gen {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        sigma: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time type-1 backends on random strings and print CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [10_000usize, 50_000, 100_000])]
        lengths: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        sigma: usize,
        #[arg(long, default_value_t = 10)]
        repeats: usize,
        #[arg(long, value_delimiter = ',', default_value = "naive,traverse,predsucc:baseline,predsucc:veb,predsucc:yfast,stree")]
        backends: Vec<Backend>,
        /// Run `r` uses seed `seed + r`.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Compare every backend with the brute-force oracle.
    Verify {
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        max_oracle_n: usize,
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(clap::Args)]
struct InputArgs {
    /// How to read the input: raw bytes, or whitespace-separated integers.
    #[arg(long, value_enum, default_value_t = InputFormat::Bytes)]
    input_format: InputFormat,
    /// Defaults to standard input.
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Bytes,
    Ints,
}

fn read_text(args: &InputArgs) -> Result<Text> {
    let mut bytes = Vec::new();
    match &args.file {
        Some(path) => {
            bytes = fs::read(path)
                .with_context(|| format!("cannot read {}", path.display()))?
        }
        None => {
            io::stdin()
                .read_to_end(&mut bytes)
                .context("cannot read standard input")?;
        }
    }
    if bytes.last() == Some(&b'\n') {
        bytes.pop();
        if bytes.last() == Some(&b'\r') {
            bytes.pop();
        }
    }
    match args.input_format {
        InputFormat::Bytes => Ok(Text::from_bytes(&bytes)),
        InputFormat::Ints => {
            let s = String::from_utf8(bytes)
                .context("integer input is not UTF-8")?;
            let symbols = s
                .split_whitespace()
                .map(|tok| tok.parse::<u64>().with_context(|| format!("bad symbol `{tok}`")))
                .collect::<Result<Vec<_>>>()?;
            Ok(Text::from_symbols(&symbols))
        }
    }
}

fn write_tsv(out: &mut impl Write, report: &SagpReport) -> io::Result<()> {
    for s in report.sagps() {
        writeln!(out, "{}\t{}\t{}\t{}\t{}", s.pivot, s.kind, s.w_len, s.gap_len, s.u_len)?;
    }
    Ok(())
}

fn cmd_find(backend: Backend, format: Format, input: &InputArgs) -> Result<ExitCode> {
    let text = read_text(input)?;
    let (report, _) = compute_report_with_stats(&text, backend)?;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match format {
        Format::Tsv => write_tsv(&mut out, &report)?,
        Format::Json => {
            let records: Vec<&Sagp> = report.sagps().collect();
            serde_json::to_writer(&mut out, &records)?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(length: usize, sigma: usize, seed: u64) -> Result<ExitCode> {
    let symbols = random_symbols(length, sigma, seed)?;
    println!("{}", render(&symbols, sigma));
    Ok(ExitCode::SUCCESS)
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.4}")).unwrap_or_default()
}

fn cmd_bench(
    lengths: &[usize],
    sigma: usize,
    repeats: usize,
    backends: &[Backend],
    seed: u64,
) -> Result<ExitCode> {
    if sigma == 0 {
        anyhow::bail!("sigma must be at least 1");
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    writeln!(out, "backend,n,sigma,seed,run,millis,occ1,entries_per_pivot,entries_per_output")?;
    for &backend in backends {
        for &n in lengths {
            let mut millis = Vec::with_capacity(repeats);
            let mut occ1 = Vec::with_capacity(repeats);
            let mut epp = Vec::new();
            let mut epo = Vec::new();
            for run in 0..repeats {
                let run_seed = seed + run as u64;
                let text = Text::from_symbols(&random_symbols(n, sigma, run_seed)?);
                let start = Instant::now();
                let prep = Prepared::new(&text);
                let res = compute_type1(&prep, backend)?;
                let ms = start.elapsed().as_secs_f64() * 1e3;
                let (p, o) = (res.stats.entries_per_pivot(), res.stats.entries_per_output());
                writeln!(
                    out,
                    "{backend},{n},{sigma},{run_seed},{run},{ms:.3},{},{},{}",
                    res.sagps.len(),
                    fmt_opt(p),
                    fmt_opt(o)
                )?;
                millis.push(ms);
                occ1.push(res.sagps.len() as f64);
                epp.extend(p);
                epo.extend(o);
            }
            let mean = |v: &[f64]| (!v.is_empty()).then(|| v.iter().sum::<f64>() / v.len() as f64);
            writeln!(
                out,
                "{backend},{n},{sigma},,mean,{},{},{},{}",
                fmt_opt(mean(&millis)),
                fmt_opt(mean(&occ1)),
                fmt_opt(mean(&epp)),
                fmt_opt(mean(&epo))
            )?;
            out.flush()?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(max_oracle_n: usize, input: &InputArgs) -> Result<ExitCode> {
    let text = read_text(input)?;
    if text.len() > max_oracle_n {
        anyhow::bail!(
            "input has {} symbols, more than --max-oracle-n {max_oracle_n}",
            text.len()
        );
    }
    let want = brute_force_sagps_bounded(&text, max_oracle_n)?;
    let mut ok = true;
    for backend in Backend::ALL {
        let (got, _) = compute_report_with_stats(&text, backend)?;
        if got != want {
            ok = false;
            eprintln!("{backend}: differs from oracle");
            for (i, (g, w)) in got.entries().iter().zip(want.entries()).enumerate() {
                if g != w {
                    eprintln!("  pivot {}: got {:?} {:?}, want {:?} {:?}", i + 1, g.kind, quads(&g.sagps), w.kind, quads(&w.sagps));
                }
            }
            if got.entries().len() != want.entries().len() {
                eprintln!("  {} entries, want {}", got.entries().len(), want.entries().len());
            }
        }
    }
    if ok {
        println!("ok: {} backends agree with the oracle (n = {})", Backend::ALL.len(), text.len());
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn quads(s: &[Sagp]) -> Vec<(usize, usize, usize, usize)> {
    s.iter().map(Sagp::quad).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Find {
            backend,
            format,
            input,
        } => cmd_find(*backend, *format, input),
        Command::Gen {
            length,
            sigma,
            seed,
        } => cmd_gen(*length, *sigma, *seed),
        Command::Bench {
            lengths,
            sigma,
            repeats,
            backends,
            seed,
        } => cmd_bench(lengths, *sigma, *repeats, backends, *seed),
        Command::Verify {
            max_oracle_n,
            input,
        } => cmd_verify(*max_oracle_n, input),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) {
                return ExitCode::SUCCESS;
            }
            eprintln!("sagp: {e:#}");
            ExitCode::from(2)
        }
    }
}
