//! CSV and JSON emission with fixed number formatting.

use std::fs::File;
use std::io::{self, BufWriter, Write};

use serde::ser::{Serialize, SerializeMap, Serializer};
use serde_json::value::RawValue;

use crate::args::{Format, OutputArgs};

/// One cell of an output row.
#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Str(String),
    Int(i64),
    Num(f64),
    Bool(bool),
}

impl From<&str> for Field {
    fn from(s: &str) -> Self {
        Field::Str(s.to_owned())
    }
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Num(v)
    }
}

impl From<u64> for Field {
    fn from(v: u64) -> Self {
        Field::Int(v as i64)
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Bool(v)
    }
}

/// 17 significant digits in lowercase scientific notation.
pub fn format_number(v: f64) -> String {
    format!("{v:.16e}")
}

impl Field {
    fn csv(&self) -> String {
        match self {
            Field::Str(s) => s.clone(),
            Field::Int(i) => i.to_string(),
            Field::Num(v) => format_number(*v),
            Field::Bool(b) => b.to_string(),
        }
    }
}

/// A row type with a fixed column list.
pub trait Record {
    fn columns() -> &'static [&'static str];
    fn fields(&self) -> Vec<Field>;
}

struct JsonRow<'a> {
    columns: &'static [&'static str],
    fields: &'a [Field],
}

impl Serialize for JsonRow<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.columns.len()))?;
        for (k, v) in self.columns.iter().zip(self.fields) {
            match v {
                Field::Str(s) => map.serialize_entry(k, s)?,
                Field::Int(i) => map.serialize_entry(k, i)?,
                Field::Bool(b) => map.serialize_entry(k, b)?,
                Field::Num(x) if x.is_finite() => {
                    let raw = RawValue::from_string(format_number(*x)).map_err(serde::ser::Error::custom)?;
                    map.serialize_entry(k, &raw)?
                }
                Field::Num(_) => map.serialize_entry(k, &Option::<f64>::None)?,
            }
        }
        map.end()
    }
}

fn render<R: Record>(rows: &[R], format: Format) -> io::Result<Vec<u8>> {
    let fields: Vec<Vec<Field>> = rows.iter().map(Record::fields).collect();
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            w.write_record(R::columns())?;
            for f in &fields {
                w.write_record(f.iter().map(Field::csv))?;
            }
            w.into_inner().map_err(|e| io::Error::other(e.to_string()))
        }
        Format::Json => {
            let json: Vec<JsonRow> = fields.iter().map(|f| JsonRow { columns: R::columns(), fields: f }).collect();
            let mut buf = serde_json::to_vec_pretty(&json).map_err(io::Error::other)?;
            buf.push(b'\n');
            Ok(buf)
        }
    }
}

/// Writes the rows to the chosen destination.
pub fn emit<R: Record>(rows: &[R], out: &OutputArgs) -> io::Result<()> {
    let bytes = render(rows, out.format)?;
    match &out.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            w.write_all(&bytes)?;
            w.flush()
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(&bytes)?;
            lock.flush()
        }
    }
}
