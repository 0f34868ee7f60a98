use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::args::{Format, OutputArgs};
use crate::run::CliError;

/// A command's result in every output format.
pub struct Rendered {
    pub json: String,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub text: String,
}

impl Rendered {
    pub fn new<T: Serialize>(value: &T, headers: Vec<&'static str>, rows: Vec<Vec<String>>, text: String) -> Self {
        let mut json = serde_json::to_string_pretty(value).expect("reports serialize");
        json.push('\n');
        Rendered { json, headers, rows, text }
    }

    fn bytes(&self, format: Format) -> Result<Vec<u8>, CliError> {
        Ok(match format {
            Format::Json => self.json.clone().into_bytes(),
            Format::Text => {
                let mut t = self.text.clone();
                if !t.ends_with('\n') {
                    t.push('\n');
                }
                t.into_bytes()
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.headers).map_err(CliError::io)?;
                for r in &self.rows {
                    w.write_record(r).map_err(CliError::io)?;
                }
                w.into_inner().map_err(|e| CliError::io(e.error()))?
            }
        })
    }
}

/// Writes to stdout, or to `--output` through a temporary file in the same
/// directory that is renamed into place.
pub fn emit(r: &Rendered, out: &OutputArgs) -> Result<(), CliError> {
    let bytes = r.bytes(out.format)?;
    match &out.output {
        None => std::io::stdout().write_all(&bytes).map_err(CliError::io),
        Some(path) => write_atomic(path, &bytes),
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(CliError::io)?;
    tmp.write_all(bytes).map_err(CliError::io)?;
    tmp.as_file().sync_all().map_err(CliError::io)?;
    tmp.persist(path).map_err(|e| CliError::io(e.error))?;
    Ok(())
}
