//! CSV files: one `# meta: {json}` line, a header, then rows.

use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{de::DeserializeOwned, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub const META_PREFIX: &str = "# meta: ";

pub fn write_csv<T: Serialize>(path: &Path, meta: &Value, rows: &[T]) -> Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(file, "{META_PREFIX}{meta}")?;
    let mut w = csv::Writer::from_writer(file);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<T: DeserializeOwned>(path: &Path) -> Result<(Value, Vec<T>)> {
    let mut reader = BufReader::new(std::fs::File::open(path)?);
    let mut first = String::new();
    reader.read_line(&mut first)?;
    let meta = first
        .trim_end()
        .strip_prefix(META_PREFIX)
        .ok_or_else(|| Error::Io(format!("{}: missing `# meta:` line", path.display())))?;
    let meta: Value = serde_json::from_str(meta).map_err(|e| Error::Io(format!("{}: bad meta: {e}", path.display())))?;
    let mut rows = Vec::new();
    for r in csv::Reader::from_reader(reader).deserialize() {
        rows.push(r?);
    }
    Ok((meta, rows))
}
