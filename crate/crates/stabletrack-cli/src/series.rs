//! File ingestion: plain one-value-per-line or simple (unquoted) CSV with a
//! named column, followed by an optional transform.

use std::fs;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    None,
    /// Prices to log-returns: n values become n-1 of ln(v_{t+1}/v_t).
    LogReturns,
    /// Running sum, turning returns into the integrated process.
    CumulativeSum,
}

#[derive(Debug, Clone)]
pub struct SeriesSpec {
    pub path: PathBuf,
    pub format: Format,
    pub column: Option<String>,
    pub transform: Transform,
}

/// (1-based line number, value) pairs so transforms can blame exact rows.
fn parse_raw(spec: &SeriesSpec, text: &str) -> Result<Vec<(usize, f64)>, String> {
    let name = spec.path.display();
    let mut out = Vec::new();
    match spec.format {
        Format::Plain => {
            for (i, line) in text.lines().enumerate() {
                let lineno = i + 1;
                let field = line.trim();
                if field.is_empty() {
                    continue;
                }
                let v: f64 = field
                    .parse()
                    .map_err(|_| format!("{}: line {}: not a number: \"{}\"", name, lineno, field))?;
                if !v.is_finite() {
                    return Err(format!("{}: line {}: non-finite value", name, lineno));
                }
                out.push((lineno, v));
            }
        }
        Format::Csv => {
            let column = spec
                .column
                .as_deref()
                .ok_or_else(|| "csv format needs --column".to_string())?;
            let mut lines = text.lines().enumerate();
            let (_, header) = lines
                .next()
                .ok_or_else(|| format!("{}: empty file", name))?;
            let headers: Vec<&str> = header.split(',').map(str::trim).collect();
            let idx = headers.iter().position(|h| *h == column).ok_or_else(|| {
                format!(
                    "{}: no column \"{}\" in header ({})",
                    name,
                    column,
                    headers.join(", ")
                )
            })?;
            for (i, line) in lines {
                let lineno = i + 1;
                if line.trim().is_empty() {
                    continue;
                }
                let fields: Vec<&str> = line.split(',').map(str::trim).collect();
                let field = fields.get(idx).copied().filter(|f| !f.is_empty()).ok_or_else(
                    || format!("{}: line {}: missing field \"{}\"", name, lineno, column),
                )?;
                let v: f64 = field.parse().map_err(|_| {
                    format!("{}: line {}: not a number: \"{}\"", name, lineno, field)
                })?;
                if !v.is_finite() {
                    return Err(format!("{}: line {}: non-finite value", name, lineno));
                }
                out.push((lineno, v));
            }
        }
    }
    if out.is_empty() {
        return Err(format!("{}: no data rows", name));
    }
    Ok(out)
}

pub fn load_series(spec: &SeriesSpec) -> Result<Vec<f64>, String> {
    let text = fs::read_to_string(&spec.path)
        .map_err(|e| format!("{}: {}", spec.path.display(), e))?;
    let raw = parse_raw(spec, &text)?;
    match spec.transform {
        Transform::None => Ok(raw.into_iter().map(|(_, v)| v).collect()),
        Transform::LogReturns => {
            if let Some((lineno, v)) = raw.iter().find(|(_, v)| *v <= 0.0) {
                return Err(format!(
                    "{}: line {}: log-returns need positive values, got {}",
                    spec.path.display(),
                    lineno,
                    v
                ));
            }
            if raw.len() < 2 {
                return Err(format!(
                    "{}: log-returns need at least two values",
                    spec.path.display()
                ));
            }
            Ok(raw.windows(2).map(|w| (w[1].1 / w[0].1).ln()).collect())
        }
        Transform::CumulativeSum => {
            let mut acc = 0.0;
            Ok(raw
                .into_iter()
                .map(|(_, v)| {
                    acc += v;
                    acc
                })
                .collect())
        }
    }
}
