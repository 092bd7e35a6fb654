//! Batch driver for multi-kernel polar codes: construct codes, sweep FER/BER
//! curves with rate-matched baselines, run round-trip self-tests, and report
//! decoder complexity. Results are emitted as JSON or CSV for plotting.
//!
//! Exit codes: 0 on success, 1 on validation or I/O errors, 2 when a
//! round-trip self-test finds a mismatch.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mkpolar::channel::bpsk;
use mkpolar::complexity::{complexity_report, ComplexityReport};
use mkpolar::construct::{construct_code, make_punctured, make_shortened, search_kernel_orders};
use mkpolar::decode::{FrozenPolicy, NoTrace};
use mkpolar::kernel::{canonical_seq, enumerate_block_lengths, factor_block_length};
use mkpolar::rng::{fill_bits, frame_rng, DOMAIN_CHANNEL};
use mkpolar::sim::{to_csv, ArithmeticChoice, SimConfig};
use mkpolar::{CodeSpec, Error, KernelSeq, Real64, Result, ScDecoder};

#[derive(Parser)]
#[command(name = "mkpolar", version, about = "Multi-kernel polar code toolbox")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a code and write its JSON description.
    Construct(ConstructArgs),
    /// Monte-Carlo FER/BER sweep over an Eb/N0 grid.
    Simulate(SimulateArgs),
    /// Noiseless encode-decode identity self-test.
    Roundtrip(RoundtripArgs),
    /// LLR-metric and gate-count reports as CSV.
    Complexity(ComplexityArgs),
    /// List block lengths reachable with up to a number of kernels.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Block length, any product of powers of 2 and 3.
    #[arg(long)]
    n: usize,
    /// Information bits per block.
    #[arg(long)]
    k: usize,
    /// Kernel order, outermost first (e.g. 3,2,2). Searched when omitted.
    #[arg(long)]
    kernels: Option<String>,
    /// Design Eb/N0 in dB for reliability estimation.
    #[arg(long, default_value_t = 2.0)]
    design_snr: f64,
    /// Genie-aided frames per reliability estimate.
    #[arg(long, default_value_t = 100_000)]
    design_frames: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Write the JSON here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    /// Code description produced by `construct`.
    #[arg(long)]
    spec: PathBuf,
    /// Eb/N0 grid in dB, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    ebn0: Vec<f64>,
    /// Frame budget per grid point.
    #[arg(long, default_value_t = 100_000)]
    frames: u64,
    /// Stop a point early after this many frame errors (0 disables).
    #[arg(long, default_value_t = 100)]
    frame_errors: u64,
    /// Decode with sign-magnitude LLRs of this many bits instead of floats.
    #[arg(long)]
    q: Option<u32>,
    /// Linear LLR scale applied before quantization.
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
    /// Swap in a rate-matched power-of-two baseline of the same (n, k).
    #[arg(long, value_enum)]
    baseline: Option<Baseline>,
    /// Genie-aided frames when constructing a baseline.
    #[arg(long, default_value_t = 100_000)]
    design_frames: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Worker threads; the output is identical for any count.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also log one CSV row per decoded frame to this file.
    #[arg(long)]
    frame_log: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Baseline {
    Puncture,
    Shorten,
}

#[derive(Args)]
struct RoundtripArgs {
    /// Test the code from this description file.
    #[arg(long, conflicts_with_all = ["n", "k", "kernels"])]
    spec: Option<PathBuf>,
    /// Or test a bare transform of this block length.
    #[arg(long, required_unless_present = "spec")]
    n: Option<usize>,
    /// Information bits; defaults to n (nothing frozen).
    #[arg(long)]
    k: Option<usize>,
    /// Kernel order, outermost first; defaults to ternary-first canonical.
    #[arg(long)]
    kernels: Option<String>,
    /// Random messages to test when the space is too large to exhaust.
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Write every tested (u, x) pair as CSV bit strings.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ComplexityArgs {
    /// Report a single block length instead of the whole table.
    #[arg(long)]
    n: Option<usize>,
    /// Kernel order for --n; defaults to ternary-first canonical.
    #[arg(long, requires = "n")]
    kernels: Option<String>,
    /// Tabulate every mixed block length up to this many kernels.
    #[arg(long, default_value_t = 10)]
    max_terms: usize,
    /// LLR register width in bits.
    #[arg(long, default_value_t = 5)]
    q: u32,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Largest kernel count to enumerate.
    #[arg(long, default_value_t = 10)]
    max_terms: usize,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage_error = e.use_stderr();
            e.print().ok();
            return if usage_error {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::Construct(a) => run_construct(a),
        Command::Simulate(a) => run_simulate(a),
        Command::Roundtrip(a) => run_roundtrip(a),
        Command::Complexity(a) => run_complexity(a),
        Command::Enumerate(a) => run_enumerate(a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_kernels(text: &str, n: usize) -> Result<KernelSeq> {
    let seq: KernelSeq = text.parse()?;
    if seq.block_length() != n {
        return Err(Error::InvalidInput(format!(
            "kernel order {seq} has block length {}, not {n}",
            seq.block_length()
        )));
    }
    Ok(seq)
}

fn run_construct(a: ConstructArgs) -> Result<ExitCode> {
    let code = match &a.kernels {
        Some(text) => {
            let seq = parse_kernels(text, a.n)?;
            construct_code(&seq, a.k, a.design_snr, a.design_frames, a.seed)?
        }
        None => {
            let ranked = search_kernel_orders(a.n, a.k, a.design_snr, a.design_frames, a.seed)?;
            let (best, fer) = ranked
                .into_iter()
                .next()
                .expect("every length has an order");
            eprintln!("kernel order search picked {best} (design-point FER {fer:.3e})");
            construct_code(&best, a.k, a.design_snr, a.design_frames, a.seed)?
        }
    };
    write_out(a.out.as_deref(), &code.to_json())?;
    Ok(ExitCode::SUCCESS)
}

fn run_simulate(a: SimulateArgs) -> Result<ExitCode> {
    let spec = CodeSpec::from_json(&fs::read_to_string(&a.spec)?)?;
    let (code, rate_match) = match a.baseline {
        None => (spec, None),
        Some(choice) => {
            let rmc = match choice {
                Baseline::Puncture => {
                    make_punctured(spec.n, spec.k, spec.design_snr_db, a.design_frames, a.seed)?
                }
                Baseline::Shorten => {
                    make_shortened(spec.n, spec.k, spec.design_snr_db, a.design_frames, a.seed)?
                }
            };
            eprintln!(
                "baseline {:?}: mother N'={}, {} coded bits dropped",
                choice, rmc.rate_match.mother_n, rmc.rate_match.dropped
            );
            (rmc.code, Some(rmc.rate_match))
        }
    };
    let cfg = SimConfig {
        code,
        rate_match,
        ebn0_db: a.ebn0,
        max_frames: a.frames,
        max_frame_errors: (a.frame_errors > 0).then_some(a.frame_errors),
        arithmetic: match a.q {
            Some(q_bits) => ArithmeticChoice::Quantized {
                q_bits,
                scale: a.scale,
            },
            None => ArithmeticChoice::Real,
        },
        seed: a.seed,
        workers: a.workers,
    };
    let result = match &a.frame_log {
        Some(path) => {
            let mut log = fs::File::create(path)?;
            mkpolar::sim::run_with_frame_log(&cfg, Some(&mut log))?
        }
        None => mkpolar::sim::run(&cfg)?,
    };
    for p in &result.points {
        eprintln!(
            "Eb/N0 {} dB: {} frames, {} frame errors, {:.1}s",
            p.ebn0_db, p.frames, p.frame_errors, p.wall_seconds
        );
    }
    write_out(a.out.as_deref(), &to_csv(&result))?;
    Ok(ExitCode::SUCCESS)
}

fn bit_string(bits: &[u8]) -> String {
    bits.iter()
        .map(|&b| if b == 0 { '0' } else { '1' })
        .collect()
}

fn run_roundtrip(a: RoundtripArgs) -> Result<ExitCode> {
    let (seq, frozen, info) = match &a.spec {
        Some(path) => {
            let spec = CodeSpec::from_json(&fs::read_to_string(path)?)?;
            (spec.kernels.clone(), spec.frozen_mask(), spec.info())
        }
        None => {
            let n = a.n.expect("clap requires --n without --spec");
            let seq = match &a.kernels {
                Some(text) => parse_kernels(text, n)?,
                None => canonical_seq(n)?,
            };
            let k = a.k.unwrap_or(n);
            if k == 0 || k > n {
                return Err(Error::InvalidInput(format!("k={k} out of range 1..={n}")));
            }
            // The identity must hold for any frozen choice; freeze the tail.
            let mut frozen = vec![false; n];
            frozen[k..].fill(true);
            (seq, frozen, (0..k).collect())
        }
    };
    let n = seq.block_length();
    let k = info.len();
    let exhaustive = n <= 12;
    let count = if exhaustive { 1u64 << k } else { a.samples };
    let mut decoder = ScDecoder::new(Real64::new(), seq.clone());
    let mut bits = vec![0u8; k];
    let mut u = vec![0u8; n];
    let mut llrs = vec![0.0f64; n];
    let mut u_hat = vec![0u8; n];
    let mut x_hat = vec![0u8; n];
    let mut log = a.out.as_ref().map(|_| String::from("u,x\n"));
    for msg in 0..count {
        if exhaustive {
            for (j, bit) in bits.iter_mut().enumerate() {
                *bit = ((msg >> j) & 1) as u8;
            }
        } else {
            let mut rng = frame_rng(a.seed, DOMAIN_CHANNEL, msg);
            fill_bits(&mut rng, &mut bits);
        }
        u.fill(0);
        for (&pos, &bit) in info.iter().zip(&bits) {
            u[pos] = bit;
        }
        let x = mkpolar::encode(&seq, &u)?;
        for (llr, &bit) in llrs.iter_mut().zip(&x) {
            *llr = 20.0 * bpsk(bit);
        }
        decoder.decode_channel_into(
            &llrs,
            &mut FrozenPolicy { frozen: &frozen },
            &mut NoTrace,
            &mut u_hat,
            &mut x_hat,
        )?;
        if u_hat != u || x_hat != x {
            println!(
                "roundtrip: FAIL at message {msg}: u={} decoded={}",
                bit_string(&u),
                bit_string(&u_hat)
            );
            return Ok(ExitCode::from(2));
        }
        if let Some(log) = log.as_mut() {
            writeln!(log, "{},{}", bit_string(&u), bit_string(&x))
                .expect("writing to a String cannot fail");
        }
    }
    if let Some(log) = &log {
        write_out(a.out.as_deref(), log)?;
    }
    println!("roundtrip: pass ({count} messages, N={n}, K={k})");
    Ok(ExitCode::SUCCESS)
}

const COMPLEXITY_HEADER: &str =
    "n,stages,mk_metric,mother_metric,gain_pct,comparators,adders,register_bits\n";

fn complexity_row(r: &ComplexityReport) -> String {
    format!(
        "{},{},{},{},{:.1},{},{},{}\n",
        r.n,
        r.stages,
        r.llr_metric_mk,
        r.llr_metric_mother,
        r.gain_percent,
        r.comparators_f + r.comparators_dec,
        r.adders_subtractors,
        r.register_bits
    )
}

fn run_complexity(a: ComplexityArgs) -> Result<ExitCode> {
    let mut csv = String::from(COMPLEXITY_HEADER);
    match a.n {
        Some(n) => {
            let seq = match &a.kernels {
                Some(text) => parse_kernels(text, n)?,
                None => canonical_seq(n)?,
            };
            csv.push_str(&complexity_row(&complexity_report(&seq, a.q)));
        }
        None => {
            for (_, n) in enumerate_block_lengths(a.max_terms) {
                let (twos, threes) = factor_block_length(n as usize)?;
                if twos == 0 || threes == 0 {
                    continue;
                }
                let seq = canonical_seq(n as usize)?;
                csv.push_str(&complexity_row(&complexity_report(&seq, a.q)));
            }
        }
    }
    write_out(a.out.as_deref(), &csv)?;
    Ok(ExitCode::SUCCESS)
}

fn run_enumerate(a: EnumerateArgs) -> Result<ExitCode> {
    let mut csv = String::from("terms,n\n");
    for (m, n) in enumerate_block_lengths(a.max_terms) {
        writeln!(csv, "{m},{n}").expect("writing to a String cannot fail");
    }
    write_out(a.out.as_deref(), &csv)?;
    Ok(ExitCode::SUCCESS)
}
