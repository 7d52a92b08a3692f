//! Job configuration and the textual input formats.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use kmchev_core::{Gcm, Rational, Realization, Weight, WeylElt, DEFAULT_LAYER_CAP};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const LAYER_CAP_ENV: &str = "KMCHEV_LAYER_CAP";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CartanSource {
    Preset(String),
    GcmFile(PathBuf),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Dominant,
    Antidominant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Ls,
    Alcove,
    Nilhecke,
    All,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Ls => "ls",
            Model::Alcove => "alcove",
            Model::Nilhecke => "nilhecke",
            Model::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    /// A row against a fixed `w`, given as a word.
    FixedW(String),
    /// Coefficients against a fixed `z`, for all `w` up to a length bound.
    FixedZ { z: String, max_length: usize },
}

#[derive(Clone, Debug)]
pub struct JobConfig {
    pub cartan: CartanSource,
    pub weight: String,
    pub sign: Sign,
    pub model: Model,
    pub mode: Mode,
    pub format: Format,
}

/// JSON form of a custom Cartan matrix.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GcmFile {
    pub matrix: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetrizer: Option<Vec<RationalInput>>,
}

/// `2`, or `"1/2"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalInput {
    Int(i64),
    Text(String),
}

impl RationalInput {
    fn value(&self) -> Result<Rational, CliError> {
        match self {
            RationalInput::Int(n) => Ok(Rational::from(*n)),
            RationalInput::Text(s) => parse_rational(s),
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Parse(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 1i64),
    };
    if d == 0 {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

pub fn load_gcm_file(path: &Path) -> Result<Realization, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let file: GcmFile =
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let sym = file.symmetrizer.map(|v| v.iter().map(RationalInput::value).collect::<Result<Vec<_>, _>>()).transpose()?;
    let gcm = Gcm::new(file.matrix, sym)?;
    Ok(Realization::new(gcm, "custom", 0))
}

pub fn load_realization(src: &CartanSource) -> Result<Realization, CliError> {
    match src {
        CartanSource::Preset(name) => Ok(Realization::preset(name)?),
        CartanSource::GcmFile(path) => load_gcm_file(path),
    }
}

/// `"c_0,c_1,…[,delta=q]"`; with corank above one the null part is given as
/// `d1=q1,d2=q2,…`.
pub fn parse_weight(r: &Realization, text: &str) -> Result<Weight, CliError> {
    let mut fund = Vec::new();
    let mut null = vec![0i64; r.corank()];
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((key, val)) = part.split_once('=') {
            let val: i64 =
                val.trim().parse().map_err(|_| CliError::Parse(format!("bad coefficient in {part:?}")))?;
            let slot = match key.trim() {
                "delta" if r.corank() == 1 => 0,
                k => k
                    .strip_prefix('d')
                    .and_then(|n| n.parse::<usize>().ok())
                    .filter(|&n| n >= 1 && n <= r.corank())
                    .map(|n| n - 1)
                    .ok_or_else(|| CliError::Parse(format!("unknown null coordinate {key:?}")))?,
            };
            null[slot] = val;
        } else {
            if null.iter().any(|&x| x != 0) {
                return Err(CliError::Parse("fundamental coordinates must come first".into()));
            }
            fund.push(part.parse().map_err(|_| CliError::Parse(format!("bad coefficient {part:?}")))?);
        }
    }
    if fund.len() != r.rank() {
        return Err(CliError::Parse(format!("expected {} fundamental coordinates, got {}", r.rank(), fund.len())));
    }
    Ok(r.weight(&fund, &null)?)
}

/// Space-separated node labels, or `e`.
pub fn parse_word(r: &Realization, text: &str) -> Result<WeylElt, CliError> {
    let text = text.trim();
    if text.is_empty() || text == "e" {
        return Ok(r.identity());
    }
    let word = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            let label: usize = t.parse().map_err(|_| CliError::Parse(format!("bad node label {t:?}")))?;
            Ok(r.index_of_label(label)?)
        })
        .collect::<Result<Vec<usize>, CliError>>()?;
    Ok(r.element(&word)?)
}

pub fn labels(r: &Realization, w: &WeylElt) -> Vec<usize> {
    w.word().iter().map(|&i| r.label(i)).collect()
}

/// Layer cap for BFS balls, from the environment when set.
pub fn layer_cap() -> Result<usize, CliError> {
    match std::env::var(LAYER_CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Parse(format!("{LAYER_CAP_ENV}={v:?} is not a size"))),
        Err(_) => Ok(DEFAULT_LAYER_CAP),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights() {
        let r = Realization::preset("A2~").unwrap();
        assert_eq!(parse_weight(&r, "1,1,0").unwrap(), r.weight(&[1, 1, 0], &[]).unwrap());
        assert_eq!(parse_weight(&r, "1, 1, 0, delta=-2").unwrap(), r.weight(&[1, 1, 0], &[-2]).unwrap());
        assert!(parse_weight(&r, "1,1").is_err());
        assert!(parse_weight(&r, "1,1,0,d2=1").is_err());
        let a2 = Realization::preset("A2").unwrap();
        assert!(parse_weight(&a2, "2,1,delta=1").is_err());
    }

    #[test]
    fn words() {
        let a2 = Realization::preset("A2").unwrap();
        assert_eq!(parse_word(&a2, "1 2 1").unwrap(), a2.element(&[0, 1, 0]).unwrap());
        assert_eq!(parse_word(&a2, "e").unwrap(), a2.identity());
        assert!(parse_word(&a2, "0").is_err());
        let aff = Realization::preset("A2~").unwrap();
        assert_eq!(labels(&aff, &parse_word(&aff, "0 1 2 1").unwrap()), vec![0, 1, 2, 1]);
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/2").unwrap(), Rational::new(1, 2));
        assert!(parse_rational("1/0").is_err());
    }
}
