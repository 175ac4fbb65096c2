//! Output plumbing: CSV/JSON sinks with a fixed numeric format so identical
//! configs produce byte-identical files.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Reals carry 15 significant digits with a `.` separator.
pub fn fmt_real(x: f64) -> String {
    format!("{x:.14e}")
}

pub struct Sink {
    writer: Box<dyn Write>,
}

impl Sink {
    pub fn open(path: Option<&PathBuf>) -> io::Result<Sink> {
        let writer: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(io::stdout().lock()),
        };
        Ok(Sink { writer })
    }

    pub fn write_csv(&mut self, header: &str, rows: &[Vec<String>]) -> io::Result<()> {
        writeln!(self.writer, "{header}")?;
        for row in rows {
            writeln!(self.writer, "{}", row.join(","))?;
        }
        self.writer.flush()
    }

    pub fn write_json(&mut self, value: &serde_json::Value) -> io::Result<()> {
        writeln!(self.writer, "{}", serde_json::to_string_pretty(value)?)?;
        self.writer.flush()
    }
}
