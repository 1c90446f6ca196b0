//! `sus` — shortest unique substring queries over byte files.
//!
//! Subcommands: `build` writes the index arrays to a file, `query` answers
//! for one position, `every` answers for all positions, `bench` times a
//! full pass. Results are tab-separated `position  start  length` rows
//! with 1-based coordinates; `--show-text` appends the raw substring bytes.
//!
//! Exit codes: 0 success, 1 usage error, 2 input/index error, 3 position
//! out of range.

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use sus_core::{every, index_io, oracle, single, Error, Interval, SuffixContext, Text};

#[derive(Parser)]
#[command(name = "sus", version, about = "Shortest unique substring queries over byte texts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the index arrays and write them to a file
    Build(BuildArgs),
    /// Report the shortest unique substring(s) covering one position
    Query(QueryArgs),
    /// Report the shortest unique substring(s) for every position
    Every(EveryArgs),
    /// Time index construction and a full every-position pass
    Bench(BenchArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input file; pass `-` to read standard input
    input: PathBuf,

    /// Remove one trailing newline from the input before indexing
    #[arg(long)]
    strip_trailing_newline: bool,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit a header row
    #[arg(long)]
    header: bool,

    /// Append the raw substring bytes as a fourth column
    #[arg(long)]
    show_text: bool,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Where to write the index file
    #[arg(long, value_name = "PATH")]
    index_out: PathBuf,
}

#[derive(Args)]
struct QueryArgs {
    #[command(flatten)]
    input: InputArgs,

    /// 1-based position the answer must cover
    #[arg(short = 'k', value_name = "POS")]
    position: usize,

    /// Report every tied answer instead of only the leftmost
    #[arg(long)]
    all: bool,

    #[command(flatten)]
    output: OutputArgs,

    /// Load previously built index arrays instead of rebuilding
    #[arg(long, value_name = "PATH")]
    index_in: Option<PathBuf>,

    /// Answer with the brute-force reference implementation
    #[arg(long, hide = true)]
    oracle: bool,
}

#[derive(Args)]
struct EveryArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Report every tied answer instead of only the leftmost
    #[arg(long)]
    all: bool,

    #[command(flatten)]
    output: OutputArgs,

    /// Load previously built index arrays instead of rebuilding
    #[arg(long, value_name = "PATH")]
    index_in: Option<PathBuf>,

    /// Answer with the brute-force reference implementation
    #[arg(long, hide = true)]
    oracle: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    input: InputArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Build(args) => run_build(&args),
        Command::Query(args) => run_query(&args),
        Command::Every(args) => run_every(&args),
        Command::Bench(args) => run_bench(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::PositionOutOfRange { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

/// Reads the input as raw bytes. Nothing is decoded or trimmed unless the
/// strip flag asks for one trailing newline to go.
fn read_input(args: &InputArgs) -> Result<Vec<u8>, Error> {
    let mut bytes = if args.input.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin().lock().read_to_end(&mut buf)?;
        buf
    } else {
        std::fs::read(&args.input)?
    };
    if args.strip_trailing_newline {
        if bytes.ends_with(b"\r\n") {
            bytes.truncate(bytes.len() - 2);
        } else if bytes.ends_with(b"\n") {
            bytes.truncate(bytes.len() - 1);
        }
    }
    Ok(bytes)
}

fn load_or_build(text: Text, index_in: Option<&Path>) -> Result<SuffixContext, Error> {
    match index_in {
        Some(path) => index_io::load_index(path, text),
        None => Ok(SuffixContext::build(text)),
    }
}

struct RowWriter<W: Write> {
    out: W,
    show_text: bool,
}

impl<W: Write> RowWriter<W> {
    fn new(out: W, show_text: bool) -> Self {
        RowWriter { out, show_text }
    }

    fn header(&mut self) -> io::Result<()> {
        self.out.write_all(b"position\tstart\tlength")?;
        if self.show_text {
            self.out.write_all(b"\ttext")?;
        }
        self.out.write_all(b"\n")
    }

    fn row(&mut self, position: usize, interval: Interval, text: &Text) -> io::Result<()> {
        write!(self.out, "{}\t{}\t{}", position, interval.start, interval.length)?;
        if self.show_text {
            self.out.write_all(b"\t")?;
            self.out.write_all(text.slice(interval.start, interval.length))?;
        }
        self.out.write_all(b"\n")
    }
}

fn run_build(args: &BuildArgs) -> Result<(), Error> {
    let text = Text::from_bytes(read_input(&args.input)?)?;
    let ctx = SuffixContext::build(text);
    index_io::save_index(&ctx, &args.index_out)
}

fn run_query(args: &QueryArgs) -> Result<(), Error> {
    let text = Text::from_bytes(read_input(&args.input)?)?;
    let stdout = io::stdout().lock();
    let mut writer = RowWriter::new(io::BufWriter::new(stdout), args.output.show_text);
    if args.output.header {
        writer.header()?;
    }
    let k = args.position;
    if args.oracle {
        let rows = if args.all {
            oracle::all_sus_at_naive(&text, k)?
        } else {
            vec![oracle::sus_at_naive(&text, k)?]
        };
        for interval in rows {
            writer.row(k, interval, &text)?;
        }
    } else {
        let ctx = load_or_build(text, args.index_in.as_deref())?;
        let rows = if args.all {
            single::all_sus_at(&ctx, k)?
        } else {
            vec![single::sus_at(&ctx, k)?]
        };
        for interval in rows {
            writer.row(k, interval, ctx.text())?;
        }
    }
    writer.out.flush()?;
    Ok(())
}

fn run_every(args: &EveryArgs) -> Result<(), Error> {
    let text = Text::from_bytes(read_input(&args.input)?)?;
    let stdout = io::stdout().lock();
    let mut writer = RowWriter::new(io::BufWriter::new(stdout), args.output.show_text);
    if args.output.header {
        writer.header()?;
    }
    if args.oracle {
        for k in 1..=text.len() {
            if args.all {
                for interval in oracle::all_sus_at_naive(&text, k)? {
                    writer.row(k, interval, &text)?;
                }
            } else {
                writer.row(k, oracle::sus_at_naive(&text, k)?, &text)?;
            }
        }
    } else {
        let ctx = load_or_build(text, args.index_in.as_deref())?;
        // Results are streamed; the first write error stops the output and
        // is reported after the walk.
        let mut write_result: io::Result<()> = Ok(());
        if args.all {
            every::for_each_sus_record(&ctx, |record| {
                if write_result.is_ok() {
                    for interval in record.all_tied.as_deref().unwrap_or_default() {
                        if let Err(e) = writer.row(record.position, *interval, ctx.text()) {
                            write_result = Err(e);
                            break;
                        }
                    }
                }
            });
        } else {
            every::for_each_sus(&ctx, |position, interval| {
                if write_result.is_ok() {
                    write_result = writer.row(position, interval, ctx.text());
                }
            });
        }
        write_result?;
    }
    writer.out.flush()?;
    Ok(())
}

fn run_bench(args: &BenchArgs) -> Result<(), Error> {
    let bytes = read_input(&args.input)?;
    let total_bytes = bytes.len();

    let build_started = Instant::now();
    let text = Text::from_bytes(bytes)?;
    let ctx = SuffixContext::build(text);
    let build_elapsed = build_started.elapsed();

    let walk_started = Instant::now();
    let stats = every::for_each_sus(&ctx, |_, _| {});
    let walk_elapsed = walk_started.elapsed();

    let total_secs = (build_elapsed + walk_elapsed).as_secs_f64();
    let throughput = total_bytes as f64 / (1024.0 * 1024.0) / total_secs;

    println!("bytes            {total_bytes}");
    println!("index_build_ms   {:.1}", build_elapsed.as_secs_f64() * 1e3);
    println!("sus_every_ms     {:.1}", walk_elapsed.as_secs_f64() * 1e3);
    println!("throughput_mb_s  {throughput:.1}");
    println!("peak_nodes       {}", stats.peak_nodes);
    println!("nodes_appended   {}", stats.nodes_appended);
    println!("merge_count      {}", stats.merge_count);
    Ok(())
}
