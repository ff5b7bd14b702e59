//! Reading system descriptions from JSON documents.

use std::fs;
use std::path::{Path, PathBuf};

use tifs_core::system::validate;
use tifs_core::{RawTifs, Validation, ValidationError};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    /// `field` is the path to the offending value, e.g. `maps[1].O`.
    #[error("{origin}: at {field}: {message}")]
    Parse { origin: String, field: String, message: String },
    #[error("{origin}: invalid system: {source}")]
    Invalid { origin: String, source: ValidationError },
}

impl ConfigError {
    /// Validation failures are reported differently from unreadable documents.
    pub fn is_invalid_system(&self) -> bool {
        matches!(self, ConfigError::Invalid { .. })
    }
}

pub fn parse_raw(text: &str, origin: &str) -> Result<RawTifs, ConfigError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let raw: RawTifs = serde_path_to_error::deserialize(&mut de).map_err(|e| ConfigError::Parse {
        origin: origin.to_owned(),
        field: e.path().to_string(),
        message: e.inner().to_string(),
    })?;
    de.end().map_err(|e| ConfigError::Parse {
        origin: origin.to_owned(),
        field: String::from("."),
        message: e.to_string(),
    })?;
    Ok(raw)
}

pub fn parse(text: &str, origin: &str) -> Result<Validation, ConfigError> {
    let raw = parse_raw(text, origin)?;
    validate(&raw).map_err(|source| ConfigError::Invalid { origin: origin.to_owned(), source })
}

pub fn load(path: &Path) -> Result<Validation, ConfigError> {
    let text = fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.to_owned(), source })?;
    parse(&text, &path.display().to_string())
}

/// Pretty JSON for a raw description, newline terminated.
pub fn to_json(raw: &RawTifs) -> String {
    let mut s = serde_json::to_string_pretty(raw).expect("raw systems always serialize");
    s.push('\n');
    s
}
