//! Serializable results and their text renderings.

use std::fmt::Write;

use kmchev_core::{ChevalleyRow, LaurentPoly, Realization, Weight, WeylElt};
use serde::{Deserialize, Serialize};

use crate::config::{labels, Model, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CartanJson {
    Preset(String),
    Matrix { matrix: Vec<Vec<i64>> },
}

impl CartanJson {
    pub fn of(r: &Realization, preset: bool) -> CartanJson {
        if preset {
            CartanJson::Preset(r.name().to_string())
        } else {
            CartanJson::Matrix { matrix: r.gcm().matrix().to_vec() }
        }
    }
}

/// Fundamental-weight coordinates plus the null part: `delta` in corank one,
/// `null` above that, absent in finite type.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightJson {
    pub fund: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub null: Option<Vec<i64>>,
}

impl WeightJson {
    pub fn of(r: &Realization, mu: &Weight) -> WeightJson {
        let (fund, rest) = mu.coords().split_at(r.rank());
        WeightJson {
            fund: fund.to_vec(),
            delta: (rest.len() == 1).then(|| rest[0]),
            null: (rest.len() > 1).then(|| rest.to_vec()),
        }
    }

    pub fn to_weight(&self) -> Weight {
        let mut v = self.fund.clone();
        v.extend(self.delta);
        v.extend(self.null.iter().flatten());
        Weight::new(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub weight: WeightJson,
    pub mult: i64,
}

pub fn poly_json(r: &Realization, p: &LaurentPoly) -> Vec<TermJson> {
    p.terms().iter().map(|(mu, &c)| TermJson { weight: WeightJson::of(r, mu), mult: c }).collect()
}

pub fn poly_from_json(terms: &[TermJson]) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for t in terms {
        p.add_term(t.weight.to_weight(), t.mult);
    }
    p
}

/// One entry of a row: keyed by `z` for a fixed `w`, by `w` for a fixed `z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<usize>>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKey {
    Z,
    W,
}

pub fn rows_json(r: &Realization, row: &ChevalleyRow, key: RowKey) -> Vec<RowJson> {
    row.iter()
        .map(|(x, p)| {
            let x = Some(labels(r, x));
            let (z, w) = match key {
                RowKey::Z => (x, None),
                RowKey::W => (None, x),
            };
            RowJson { z, w, terms: poly_json(r, p) }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffJson {
    pub left: Model,
    pub right: Model,
    /// Row key (labels of `z`, or of `w` in fixed-`z` mode).
    pub at: Vec<usize>,
    pub left_terms: Vec<TermJson>,
    pub right_terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Agreement {
    pub agree: bool,
    pub models: Vec<Model>,
    pub diffs: Vec<DiffJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChevalleyResult {
    pub cartan: CartanJson,
    pub lambda: WeightJson,
    pub sign: Sign,
    pub model: Model,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_length: Option<usize>,
    pub rows: Vec<RowJson>,
    pub truncated: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agreement: Option<Agreement>,
}

impl ChevalleyResult {
    pub fn total_terms(&self) -> usize {
        self.rows.iter().map(|r| r.terms.len()).sum()
    }
}

pub fn format_word_labels(w: &[usize]) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
    }
}

pub fn format_terms(r: &Realization, terms: &[TermJson]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, t) in terms.iter().enumerate() {
        let c = t.mult;
        if k > 0 {
            s.push_str(if c < 0 { " - " } else { " + " });
        } else if c < 0 {
            s.push('-');
        }
        if c.abs() != 1 {
            let _ = write!(s, "{}·", c.abs());
        }
        let _ = write!(s, "e^{{{}}}", r.format_weight(&t.weight.to_weight()));
    }
    s
}

pub fn chevalley_table(r: &Realization, res: &ChevalleyResult) -> String {
    let mut s = String::new();
    let lam = r.format_weight(&res.lambda.to_weight());
    let _ = write!(s, "cartan {}  λ = {}  sign {}  model {}", r.name(), lam, sign_name(res.sign), res.model.name());
    if let Some(w) = &res.w {
        let _ = write!(s, "  w = {}", format_word_labels(w));
    }
    if let Some(z) = &res.z {
        let _ = write!(s, "  z = {}  ℓ(w) ≤ {}", format_word_labels(z), res.max_length.unwrap_or(0));
    }
    s.push('\n');
    let key_name = if res.w.is_some() { "z" } else { "w" };
    let keys: Vec<String> =
        res.rows.iter().map(|row| format_word_labels(row.z.as_ref().or(row.w.as_ref()).unwrap())).collect();
    let width = keys.iter().map(|k| k.chars().count()).max().unwrap_or(1).max(key_name.len());
    let _ = writeln!(s, "{key_name:width$}  coefficient");
    for (k, row) in keys.iter().zip(&res.rows) {
        let _ = writeln!(s, "{k:width$}  {}", format_terms(r, &row.terms));
    }
    if res.truncated {
        s.push_str("(truncated at the length bound)\n");
    }
    if let Some(a) = &res.agreement {
        if a.agree {
            let _ = writeln!(s, "models agree: {}", a.models.iter().map(|m| m.name()).collect::<Vec<_>>().join(", "));
        } else {
            for d in &a.diffs {
                let _ = writeln!(
                    s,
                    "MISMATCH {} vs {} at {}: {} ≠ {}",
                    d.left.name(),
                    d.right.name(),
                    format_word_labels(&d.at),
                    format_terms(r, &d.left_terms),
                    format_terms(r, &d.right_terms)
                );
            }
        }
    }
    s
}

pub fn sign_name(s: Sign) -> &'static str {
    match s {
        Sign::Dominant => "dominant",
        Sign::Antidominant => "antidominant",
    }
}

pub fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn word_of(r: &Realization, w: &WeylElt) -> String {
    format_word_labels(&labels(r, w))
}
