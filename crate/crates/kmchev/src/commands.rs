//! `chevalley`, `crystal` and `tree`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::Write;

use kmchev_core::{AlcoveModel, ChevalleyRow, Hyperplane, LsModel, Monotone, Realization, Weight, WeylElt};
use serde::{Deserialize, Serialize};

use crate::config::{labels, layer_cap, load_realization, parse_weight, parse_word, CartanSource, Format, JobConfig, Mode, Model, Sign};
use crate::output::*;
use crate::CliError;

pub type Comparator = fn(&Hyperplane, &Hyperplane) -> Ordering;

#[derive(Clone, Debug)]
pub enum ResolvedMode {
    FixedW(WeylElt),
    FixedZ { z: WeylElt, max_length: usize },
}

/// A parsed and validated [`JobConfig`].
pub struct Job {
    pub r: Realization,
    pub preset: bool,
    pub lambda: Weight,
    pub sign: Sign,
    pub model: Model,
    pub mode: ResolvedMode,
    pub format: Format,
    pub cap: usize,
    /// Replacement hyperplane order for the alcove model.
    pub comparator: Option<Comparator>,
}

impl Job {
    pub fn resolve(cfg: &JobConfig) -> Result<Job, CliError> {
        let r = load_realization(&cfg.cartan)?;
        let lambda = parse_weight(&r, &cfg.weight)?;
        if !r.is_dominant(&lambda) {
            return Err(kmchev_core::Error::NotDominant.into());
        }
        let mode = match &cfg.mode {
            Mode::FixedW(w) => ResolvedMode::FixedW(parse_word(&r, w)?),
            Mode::FixedZ { z, max_length } => {
                let z = parse_word(&r, z)?;
                if *max_length < z.length() {
                    return Err(CliError::Usage(format!("--max-length {max_length} is below ℓ(z) = {}", z.length())));
                }
                ResolvedMode::FixedZ { z, max_length: *max_length }
            }
        };
        Ok(Job {
            r,
            preset: matches!(cfg.cartan, CartanSource::Preset(_)),
            lambda,
            sign: cfg.sign,
            model: cfg.model,
            mode,
            format: cfg.format,
            cap: layer_cap()?,
            comparator: None,
        })
    }

    fn ls(&self) -> Result<LsModel<'_>, CliError> {
        Ok(LsModel::new(&self.r, &self.lambda)?)
    }

    fn alcove(&self) -> Result<AlcoveModel<'_>, CliError> {
        let m = AlcoveModel::new(&self.r, &self.lambda)?;
        Ok(match self.comparator {
            Some(c) => m.with_comparator(c),
            None => m,
        })
    }

    fn signed_lambda(&self) -> Weight {
        match self.sign {
            Sign::Dominant => self.lambda.clone(),
            Sign::Antidominant => -&self.lambda,
        }
    }

    /// Row of a single model against a fixed `w`.
    pub fn fixed_w_row(&self, model: Model, w: &WeylElt) -> Result<ChevalleyRow, CliError> {
        Ok(match (model, self.sign) {
            (Model::Nilhecke, _) => self.r.chevalley_recurrence(w, &self.signed_lambda())?,
            (Model::Ls, Sign::Dominant) => self.ls()?.chevalley_dominant(w),
            (Model::Ls, Sign::Antidominant) => self.ls()?.chevalley_antidominant(w),
            (Model::Alcove, Sign::Dominant) => self.alcove()?.chevalley_dominant(w),
            (Model::Alcove, Sign::Antidominant) => self.alcove()?.chevalley_antidominant(w),
            (Model::All, _) => return Err(CliError::Usage("a single model is required here".into())),
        })
    }

    /// The requested row of one model, and whether it was cut at the
    /// length bound.
    pub fn model_row(&self, model: Model) -> Result<(ChevalleyRow, bool), CliError> {
        match &self.mode {
            ResolvedMode::FixedW(w) => Ok((self.fixed_w_row(model, w)?, false)),
            ResolvedMode::FixedZ { z, max_length } if model == Model::Alcove => {
                let m = self.alcove()?;
                Ok(match self.sign {
                    Sign::Dominant => m.chevalley_dominant_fixed_z(z, *max_length, self.cap)?,
                    Sign::Antidominant => m.chevalley_antidominant_fixed_z(z, *max_length, self.cap)?,
                })
            }
            ResolvedMode::FixedZ { z, max_length } => {
                // read column z off the fixed-w rows of the ball
                let ball = self.r.bfs_ball(max_length + 1, self.cap)?;
                let mut out = ChevalleyRow::new();
                let mut truncated = false;
                for w in ball.iter().filter(|w| self.r.bruhat_leq(z, w)) {
                    let c = self.fixed_w_row(model, w)?.get(z);
                    if c.is_zero() {
                        continue;
                    }
                    if w.length() <= *max_length {
                        out.add(w.clone(), &c);
                    } else {
                        truncated = true;
                    }
                }
                Ok((out, truncated))
            }
        }
    }

    fn key(&self) -> RowKey {
        match self.mode {
            ResolvedMode::FixedW(_) => RowKey::Z,
            ResolvedMode::FixedZ { .. } => RowKey::W,
        }
    }

    fn result_shell(&self, rows: Vec<RowJson>, truncated: bool) -> ChevalleyResult {
        let (w, z, max_length) = match &self.mode {
            ResolvedMode::FixedW(w) => (Some(labels(&self.r, w)), None, None),
            ResolvedMode::FixedZ { z, max_length } => (None, Some(labels(&self.r, z)), Some(*max_length)),
        };
        ChevalleyResult {
            cartan: CartanJson::of(&self.r, self.preset),
            lambda: WeightJson::of(&self.r, &self.lambda),
            sign: self.sign,
            model: self.model,
            w,
            z,
            max_length,
            rows,
            truncated,
            agreement: None,
        }
    }
}

/// Computes the configured row; with [`Model::All`] the three models run
/// concurrently and are compared.
pub fn chevalley(job: &Job) -> Result<ChevalleyResult, CliError> {
    if job.model != Model::All {
        let (row, truncated) = job.model_row(job.model)?;
        return Ok(job.result_shell(rows_json(&job.r, &row, job.key()), truncated));
    }
    let models = [Model::Ls, Model::Alcove, Model::Nilhecke];
    let rows: Vec<(ChevalleyRow, bool)> = std::thread::scope(|s| {
        let handles: Vec<_> = models.iter().map(|&m| s.spawn(move || job.model_row(m))).collect();
        handles.into_iter().map(|h| h.join().expect("model thread panicked")).collect::<Result<_, _>>()
    })?;
    let mut diffs = Vec::new();
    for (a, b) in [(0, 2), (1, 2), (0, 1)] {
        for (x, pa, pb) in rows[a].0.diff(&rows[b].0) {
            diffs.push(DiffJson {
                left: models[a],
                right: models[b],
                at: labels(&job.r, &x),
                left_terms: poly_json(&job.r, &pa),
                right_terms: poly_json(&job.r, &pb),
            });
        }
    }
    let truncated = rows.iter().any(|r| r.1);
    let mut res = job.result_shell(rows_json(&job.r, &rows[2].0, job.key()), truncated);
    res.agreement = Some(Agreement { agree: diffs.is_empty(), models: models.to_vec(), diffs });
    Ok(res)
}

pub fn render_chevalley(job: &Job, res: &ChevalleyResult) -> Result<String, CliError> {
    match job.format {
        Format::Json => to_json(res),
        Format::Table => Ok(chevalley_table(&job.r, res)),
        Format::Dot => Err(CliError::Usage("dot output is available for `crystal` and `tree`".into())),
    }
}

pub fn to_json<T: Serialize>(v: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| CliError::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalVertex {
    pub id: usize,
    pub label: String,
    pub weight: WeightJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalEdge {
    pub from: usize,
    pub to: usize,
    /// Node label of `f_i`.
    pub i: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalGraph {
    pub vertices: Vec<CrystalVertex>,
    pub edges: Vec<CrystalEdge>,
}

impl CrystalGraph {
    fn weights(&self) -> Vec<&WeightJson> {
        let mut v: Vec<&WeightJson> = self.vertices.iter().map(|x| &x.weight).collect();
        v.sort();
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CrystalKind {
    Demazure,
    Opposite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalResult {
    pub cartan: CartanJson,
    pub lambda: WeightJson,
    pub kind: CrystalKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_length: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ls: Option<CrystalGraph>,
    /// Vertices only; the alcove realization carries no separate edge data.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alcove: Option<CrystalGraph>,
    pub truncated: bool,
    /// Equal cardinality and weight multisets, when both realizations ran.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

impl CrystalResult {
    pub fn size(&self) -> usize {
        self.ls.as_ref().or(self.alcove.as_ref()).map_or(0, |g| g.vertices.len())
    }
}

fn ls_graph(job: &Job, m: &LsModel, set: &BTreeSet<kmchev_core::LsPath>) -> CrystalGraph {
    let index: std::collections::BTreeMap<_, usize> = set.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let vertices = set
        .iter()
        .enumerate()
        .map(|(id, p)| CrystalVertex { id, label: m.format_path(p), weight: WeightJson::of(&job.r, &m.endpoint(p)) })
        .collect();
    let edges = m
        .crystal_edges(set)
        .into_iter()
        .map(|(p, i, q)| CrystalEdge { from: index[&p], to: index[&q], i: job.r.label(i) })
        .collect();
    CrystalGraph { vertices, edges }
}

fn sequence_label(job: &Job, seq: &kmchev_core::AdaptedSequence) -> String {
    let hs: Vec<String> = seq.hyperplanes().iter().map(|h| h.to_string()).collect();
    format!("{} | {}", word_of(&job.r, seq.base()), if hs.is_empty() { "∅".into() } else { hs.join(" ") })
}

/// Demazure crystal of lowest weight `wλ` (fixed `w`), or the opposite
/// Demazure crystal of highest weight `zλ` (fixed `z`, length bound).
pub fn crystal(job: &Job) -> Result<CrystalResult, CliError> {
    let (want_ls, want_alcove) = match job.model {
        Model::Ls => (true, false),
        Model::Alcove => (false, true),
        Model::All => (true, true),
        Model::Nilhecke => return Err(CliError::Usage("crystals are realized by the ls and alcove models".into())),
    };
    let ls = job.ls()?;
    let alc = job.alcove()?;
    let mut truncated = false;
    let (kind, ls_graph_opt, alcove_graph) = match &job.mode {
        ResolvedMode::FixedW(w) => {
            let lg = want_ls.then(|| ls_graph(job, &ls, &ls.demazure(w)));
            let ag = want_alcove.then(|| {
                let vertices = alc
                    .demazure_alcove(w)
                    .iter()
                    .enumerate()
                    .map(|(id, s)| CrystalVertex {
                        id,
                        label: sequence_label(job, s),
                        weight: WeightJson::of(&job.r, &alc.wt_dec(s)),
                    })
                    .collect();
                CrystalGraph { vertices, edges: Vec::new() }
            });
            (CrystalKind::Demazure, lg, ag)
        }
        ResolvedMode::FixedZ { z, max_length } => {
            let lg = if want_ls {
                let (set, t) = ls.opposite_demazure(z, *max_length, job.cap)?;
                truncated |= t;
                Some(ls_graph(job, &ls, &set))
            } else {
                None
            };
            let ag = if want_alcove {
                let za = alc.opposite_demazure_alcove(z, *max_length, job.cap)?;
                truncated |= za.truncated;
                let vertices = za
                    .sequences
                    .iter()
                    .enumerate()
                    .map(|(id, s)| CrystalVertex {
                        id,
                        label: sequence_label(job, s),
                        weight: WeightJson::of(&job.r, &alc.wt_inc(s)),
                    })
                    .collect();
                Some(CrystalGraph { vertices, edges: Vec::new() })
            } else {
                None
            };
            (CrystalKind::Opposite, lg, ag)
        }
    };
    let agree = match (&ls_graph_opt, &alcove_graph) {
        (Some(a), Some(b)) => Some(a.vertices.len() == b.vertices.len() && a.weights() == b.weights()),
        _ => None,
    };
    let (w, z, max_length) = match &job.mode {
        ResolvedMode::FixedW(w) => (Some(labels(&job.r, w)), None, None),
        ResolvedMode::FixedZ { z, max_length } => (None, Some(labels(&job.r, z)), Some(*max_length)),
    };
    Ok(CrystalResult {
        cartan: CartanJson::of(&job.r, job.preset),
        lambda: WeightJson::of(&job.r, &job.lambda),
        kind,
        w,
        z,
        max_length,
        ls: ls_graph_opt,
        alcove: alcove_graph,
        truncated,
        agree,
    })
}

pub fn render_crystal(job: &Job, res: &CrystalResult) -> Result<String, CliError> {
    match job.format {
        Format::Json => to_json(res),
        Format::Dot => {
            let g = res.ls.as_ref().or(res.alcove.as_ref()).expect("some realization ran");
            let mut s = String::from("digraph crystal {\n  rankdir=TB;\n");
            for v in &g.vertices {
                let wt = job.r.format_weight(&v.weight.to_weight());
                let _ = writeln!(s, "  n{} [label=\"{}\\n{}\"];", v.id, dot_escape(&v.label), dot_escape(&wt));
            }
            for e in &g.edges {
                let _ = writeln!(s, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.i);
            }
            s.push_str("}\n");
            Ok(s)
        }
        Format::Table => {
            let mut s = String::new();
            for (name, g) in [("ls", &res.ls), ("alcove", &res.alcove)] {
                if let Some(g) = g {
                    let _ = writeln!(s, "{name}: {} vertices", g.vertices.len());
                    for v in &g.vertices {
                        let _ = writeln!(s, "  {}  {}", v.label, job.r.format_weight(&v.weight.to_weight()));
                    }
                }
            }
            if res.truncated {
                s.push_str("(truncated at the length bound)\n");
            }
            if let Some(a) = res.agree {
                let _ = writeln!(s, "realizations agree: {a}");
            }
            Ok(s)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNodeJson {
    pub id: usize,
    pub elt: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parent: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    /// `wt(H)` for the dominant tree, `wt~(H)` for the antidominant one.
    pub weight: WeightJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeResult {
    pub cartan: CartanJson,
    pub lambda: WeightJson,
    pub sign: Sign,
    pub w: Vec<usize>,
    pub nodes: Vec<TreeNodeJson>,
}

/// The alcove tree below `w`: lex increasing reads for the dominant sign,
/// lex decreasing for the antidominant one.
pub fn tree(job: &Job) -> Result<TreeResult, CliError> {
    let ResolvedMode::FixedW(w) = &job.mode else {
        return Err(CliError::Usage("`tree` needs --w".into()));
    };
    let m = job.alcove()?;
    let mono = match job.sign {
        Sign::Dominant => Monotone::Increasing,
        Sign::Antidominant => Monotone::Decreasing,
    };
    let t = m.enumerate_tree(w, mono);
    let nodes = t
        .nodes
        .iter()
        .enumerate()
        .map(|(id, n)| {
            let seq = t.sequence(&job.r, id);
            let wt = match mono {
                Monotone::Increasing => m.wt_inc(&seq),
                Monotone::Decreasing => m.wt_dec(&seq),
            };
            TreeNodeJson {
                id,
                elt: labels(&job.r, &n.elt),
                parent: n.parent,
                label: n.label.as_ref().map(|h| h.to_string()),
                weight: WeightJson::of(&job.r, &wt),
            }
        })
        .collect();
    Ok(TreeResult {
        cartan: CartanJson::of(&job.r, job.preset),
        lambda: WeightJson::of(&job.r, &job.lambda),
        sign: job.sign,
        w: labels(&job.r, w),
        nodes,
    })
}

pub fn render_tree(job: &Job, res: &TreeResult) -> Result<String, CliError> {
    match job.format {
        Format::Json => to_json(res),
        Format::Dot => {
            let mut s = String::from("digraph tree {\n  rankdir=TB;\n");
            for n in &res.nodes {
                let _ = writeln!(s, "  n{} [label=\"{}\"];", n.id, format_word_labels(&n.elt));
            }
            for n in &res.nodes {
                if let (Some(p), Some(l)) = (n.parent, &n.label) {
                    let _ = writeln!(s, "  n{p} -> n{} [label=\"{}\"];", n.id, dot_escape(l));
                }
            }
            s.push_str("}\n");
            Ok(s)
        }
        Format::Table => {
            let mut children = vec![Vec::new(); res.nodes.len()];
            for n in &res.nodes {
                if let Some(p) = n.parent {
                    children[p].push(n.id);
                }
            }
            let mut s = String::new();
            let mut stack = vec![(0usize, 0usize)];
            while let Some((id, depth)) = stack.pop() {
                let n = &res.nodes[id];
                let label = n.label.as_deref().map(|l| format!("{l} → ")).unwrap_or_default();
                let wt = job.r.format_weight(&n.weight.to_weight());
                let _ = writeln!(s, "{}{label}{}  [{wt}]", "  ".repeat(depth), format_word_labels(&n.elt));
                stack.extend(children[id].iter().rev().map(|&c| (c, depth + 1)));
            }
            Ok(s)
        }
    }
}
