//! `twobridge`: enumerate, classify and tabulate 2-bridge knots.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use twobridge::{
    dt_from_presentation, enumerate_umn, export, knot_class, run_census, verify, CensusOptions,
    CensusRecord, ConwaySequence, Error, Format, Scope, TableId, UmnSpec,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

#[derive(Parser)]
#[command(name = "twobridge", version, about = "Census of 2-bridge knots from even Conway presentations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the representatives of U^{m,n}.
    Enumerate {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// jsonl, csv or dt
        #[arg(long, default_value = "dt")]
        format: Format,
    },
    /// Print the DT code of an even presentation.
    Dtcode {
        /// Comma-separated entries, e.g. 2,-2
        #[arg(long, allow_hyphen_values = true)]
        a: ConwaySequence,
    },
    /// Print the knot type S(alpha, beta) of an even presentation.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        a: ConwaySequence,
    },
    /// Enumerate every knot up to a crossing bound and export the records.
    Census {
        #[arg(long)]
        max_crossings: u32,
        #[arg(long, default_value = "dt")]
        format: Format,
        /// Write records here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare a fresh census against a stored table.
    Verify {
        /// 1, 2, 3 or 4
        #[arg(long)]
        table: TableId,
    },
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("twobridge: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Core(e)) => {
            eprintln!("twobridge: {e}");
            ExitCode::from(match e {
                Error::Invariant { .. } | Error::MalformedDiagram { .. } => EXIT_INVARIANT,
                _ => EXIT_USAGE,
            })
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    let stdout = io::stdout();
    match command {
        Command::Enumerate { m, n, format } => {
            let spec = UmnSpec::new(m, n)?;
            let records = enumerate_umn(spec)
                .map(CensusRecord::from_presentation)
                .collect::<Result<Vec<_>, _>>()?;
            export(&records, format, BufWriter::new(stdout.lock()))?;
        }
        Command::Dtcode { a } => {
            let dt = dt_from_presentation(&a)?;
            writeln!(stdout.lock(), "{dt}")?;
        }
        Command::Classify { a } => {
            let class = knot_class(&a)?;
            let mut out = stdout.lock();
            writeln!(out, "knot: {class}")?;
            writeln!(out, "alpha: {}", class.alpha())?;
            writeln!(out, "beta: {}", class.beta())?;
            writeln!(out, "crossings: {}", class.crossing_number())?;
            writeln!(out, "achiral: {}", class.is_achiral())?;
            writeln!(out, "orbit: {}", class.full_orbit())?;
            writeln!(out, "representative: {}", a.clique_representative())?;
        }
        Command::Census {
            max_crossings,
            format,
            out,
        } => {
            let census = run_census(CensusOptions::new(max_crossings))?;
            match out {
                Some(path) => export(&census.records, format, BufWriter::new(File::create(path)?))?,
                None => export(&census.records, format, BufWriter::new(stdout.lock()))?,
            }
            let mut err = io::stderr().lock();
            for c in 3..=max_crossings {
                writeln!(
                    err,
                    "c={c}: {} knots, {} achiral",
                    census.table.by_crossings(c),
                    census.table.achiral_by_crossings(c)
                )?;
            }
            writeln!(err, "total: {} records", census.records.len())?;
        }
        Command::Verify { table } => {
            let options = CensusOptions {
                max_crossings: twobridge::census::MAX_CENSUS_CROSSINGS,
                scope: Scope::Grid,
                records: false,
            };
            let census = run_census(options)?;
            let report = verify(table, &census.table);
            write!(stdout.lock(), "{report}")?;
            if !report.passed() {
                return Ok(EXIT_MISMATCH);
            }
        }
    }
    Ok(0)
}
