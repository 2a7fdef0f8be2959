//! CSV and JSON reports.
//!
//! CSV is the canonical format: a fixed header, one row per record, reals
//! with 17 significant digits. JSON is an array of objects keyed by the
//! same column names.

use std::fmt::{self, Write as _};
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read};
use std::path::Path;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::alpha_matrix::write_real;
use crate::harness::{SweepRecord, VerificationRecord};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::input(format!("unknown report format {other:?}"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// A row type that can be written to and read back from a report.
pub trait ReportRecord: Serialize + DeserializeOwned {
    const HEADER: &'static [&'static str];

    /// Appends this record's fields, in [`Self::HEADER`] order.
    fn push_fields(&self, row: &mut RowBuilder);
}

/// Reusable CSV row buffer.
#[derive(Debug, Default)]
pub struct RowBuilder {
    record: csv::StringRecord,
    scratch: String,
}

impl RowBuilder {
    pub fn text(&mut self, s: &str) {
        self.record.push_field(s);
    }

    pub fn display(&mut self, x: impl fmt::Display) {
        self.scratch.clear();
        write!(self.scratch, "{x}").expect("writing to a String");
        self.record.push_field(&self.scratch);
    }

    /// 17 significant digits.
    pub fn real(&mut self, x: f64) {
        self.scratch.clear();
        write_real(&mut self.scratch, x);
        self.record.push_field(&self.scratch);
    }

    pub fn fields(&self) -> impl Iterator<Item = &str> {
        self.record.iter()
    }
}

impl ReportRecord for SweepRecord {
    const HEADER: &'static [&'static str] = &[
        "delta",
        "Delta",
        "alpha",
        "f",
        "g",
        "diff",
        "symbolic",
        "numeric",
        "witness",
        "consistent",
    ];

    fn push_fields(&self, row: &mut RowBuilder) {
        row.display(self.min_degree);
        row.display(self.max_degree);
        row.real(self.alpha);
        row.real(self.f_value);
        row.real(self.g_value);
        row.real(self.difference);
        row.display(self.symbolic_ordering);
        row.display(self.numeric_ordering);
        row.text(&self.witness);
        row.display(self.consistent);
    }
}

impl ReportRecord for VerificationRecord {
    const HEADER: &'static [&'static str] = &[
        "graph_id",
        "n",
        "m",
        "Delta",
        "delta",
        "alpha",
        "lambda1",
        "f",
        "g",
        "f_holds",
        "g_holds",
        "g_equality",
        "is_star",
        "is_connected",
    ];

    fn push_fields(&self, row: &mut RowBuilder) {
        row.text(&self.graph_id);
        row.display(self.n);
        row.display(self.edge_count);
        row.display(self.max_degree);
        row.display(self.min_degree);
        row.real(self.alpha);
        row.real(self.lambda1);
        row.real(self.f_value);
        row.real(self.g_value);
        row.display(self.f_holds);
        row.display(self.g_holds);
        row.display(self.g_equality);
        row.display(self.is_star);
        row.display(self.is_connected);
    }
}

pub fn write_report<R: ReportRecord, W: io::Write>(
    records: &[R],
    format: Format,
    out: W,
) -> Result<()> {
    let to_err = |e: String| Error::Report {
        path: "<writer>".into(),
        message: e,
    };
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(R::HEADER)
                .map_err(|e| to_err(e.to_string()))?;
            let mut row = RowBuilder::default();
            for r in records {
                row.record.clear();
                r.push_fields(&mut row);
                w.write_record(&row.record)
                    .map_err(|e| to_err(e.to_string()))?;
            }
            w.flush().map_err(|e| to_err(e.to_string()))
        }
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, records).map_err(|e| to_err(e.to_string()))?;
            io::Write::write_all(&mut out, b"\n").map_err(|e| to_err(e.to_string()))
        }
    }
}

pub fn read_report<R: ReportRecord, Rd: Read>(input: Rd, format: Format) -> Result<Vec<R>> {
    let to_err = |e: String| Error::Report {
        path: "<reader>".into(),
        message: e,
    };
    match format {
        Format::Csv => {
            let mut rdr = csv::Reader::from_reader(input);
            let header = rdr.headers().map_err(|e| to_err(e.to_string()))?;
            if header.iter().ne(R::HEADER.iter().copied()) {
                return Err(to_err(format!("unexpected header {header:?}")));
            }
            rdr.deserialize()
                .map(|r| r.map_err(|e| to_err(e.to_string())))
                .collect()
        }
        Format::Json => serde_json::from_reader(input).map_err(|e| to_err(e.to_string())),
    }
}

/// Writes `records` to `path`, replacing any existing file.
pub fn emit_report<R: ReportRecord>(records: &[R], format: Format, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    write_report(records, format, BufWriter::new(file)).map_err(|e| with_path(e, path))
}

pub fn load_report<R: ReportRecord>(format: Format, path: &Path) -> Result<Vec<R>> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_report(BufReader::new(file), format).map_err(|e| with_path(e, path))
}

fn with_path(e: Error, path: &Path) -> Error {
    match e {
        Error::Report { message, .. } => Error::Report {
            path: path.to_path_buf(),
            message,
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::harness::{sweep_grid, verify_graph};

    #[test]
    fn empty_csv_is_header_only() {
        let mut buf = Vec::new();
        write_report::<SweepRecord, _>(&[], Format::Csv, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "delta,Delta,alpha,f,g,diff,symbolic,numeric,witness,consistent\n"
        );
        let mut buf = Vec::new();
        write_report::<VerificationRecord, _>(&[], Format::Csv, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "graph_id,n,m,Delta,delta,alpha,lambda1,f,g,f_holds,g_holds,g_equality,is_star,is_connected\n"
        );
    }

    #[test]
    fn one_sweep_record() {
        let sweep = sweep_grid(2, 3, 2).unwrap();
        let r = sweep
            .records
            .iter()
            .find(|r| r.min_degree == 2 && r.max_degree == 3 && r.alpha == 0.5)
            .unwrap()
            .clone();
        let mut buf = Vec::new();
        write_report(std::slice::from_ref(&r), Format::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[1].starts_with("2,3,5.0000000000000000e-1,2.15138781886599"));
        assert!(lines[1].ends_with(",Greater,Greater,\"δ≥2 ∧ α∉{0,1}\",true"));
    }

    #[test]
    fn csv_and_json_agree() {
        let records = sweep_grid(3, 5, 7).unwrap().records;
        for format in [Format::Csv, Format::Json] {
            let mut buf = Vec::new();
            write_report(&records, format, &mut buf).unwrap();
            let back: Vec<SweepRecord> = read_report(buf.as_slice(), format).unwrap();
            assert_eq!(back, records, "{format}");
        }

        let g = Graph::random(7, 0.5, 3).unwrap().add_isolated(1);
        let records = verify_graph(&g, "random:7,0.5,3+1", &[0.0, 0.3, 1.0], None).unwrap();
        for format in [Format::Csv, Format::Json] {
            let mut buf = Vec::new();
            write_report(&records, format, &mut buf).unwrap();
            let back: Vec<VerificationRecord> = read_report(buf.as_slice(), format).unwrap();
            assert_eq!(back, records, "{format}");
        }
    }

    #[test]
    fn wrong_header_is_rejected() {
        let text = "a,b\n1,2\n";
        assert!(read_report::<SweepRecord, _>(text.as_bytes(), Format::Csv).is_err());
    }

    #[test]
    fn io_errors_name_the_path() {
        let path = Path::new("/nonexistent-dir/report.csv");
        let err = emit_report::<SweepRecord>(&[], Format::Csv, path).unwrap_err();
        assert!(err.to_string().contains("/nonexistent-dir/report.csv"));
    }
}
