//! Record serialisation: JSON lines, CSV, and a compact DT listing.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use crate::census::CensusRecord;
use crate::conway::write_joined;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Jsonl,
    Csv,
    #[default]
    Dt,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "jsonl" => Ok(Format::Jsonl),
            "csv" => Ok(Format::Csv),
            "dt" => Ok(Format::Dt),
            other => Err(format!("unknown format {other:?}, expected jsonl, csv or dt")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Jsonl => "jsonl",
            Format::Csv => "csv",
            Format::Dt => "dt",
        })
    }
}

pub fn export<'a, W, I>(records: I, format: Format, out: W) -> io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a CensusRecord>,
{
    match format {
        Format::Jsonl => write_jsonl(records, out),
        Format::Csv => write_csv(records, out),
        Format::Dt => write_dt(records, out),
    }
}

fn write_jsonl<'a>(records: impl IntoIterator<Item = &'a CensusRecord>, mut out: impl Write) -> io::Result<()> {
    for record in records {
        serde_json::to_writer(&mut out, record)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

fn joined(values: &[i64], sep: &str) -> String {
    let mut s = String::new();
    write_joined(&mut s, values, sep).expect("writing to a String cannot fail");
    s
}

fn write_csv<'a>(records: impl IntoIterator<Item = &'a CensusRecord>, out: impl Write) -> io::Result<()> {
    let mut records = records.into_iter().peekable();
    if records.peek().is_none() {
        return Ok(());
    }
    let mut writer = csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::Necessary)
        .from_writer(out);
    writer.write_record(["m", "n", "a", "alpha", "beta", "c", "achiral", "dt"])?;
    for r in records {
        writer.write_record([
            r.m.to_string(),
            r.n.to_string(),
            joined(r.a.entries(), ","),
            r.alpha.to_string(),
            r.beta.to_string(),
            r.c.to_string(),
            r.achiral.to_string(),
            joined(r.dt.evens(), ","),
        ])?;
    }
    writer.flush()
}

fn write_dt<'a>(records: impl IntoIterator<Item = &'a CensusRecord>, mut out: impl Write) -> io::Result<()> {
    for r in records {
        writeln!(out, "{} {} {} {}", r.m, r.n, r.a, r.dt)?;
    }
    out.flush()
}
