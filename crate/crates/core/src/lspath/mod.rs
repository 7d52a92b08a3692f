//! Lakshmibai-Seshadri paths of a fixed dominant shape.
//!
//! A path is stored as `0 = b_1 < ⋯ < b_m < 1` together with coset
//! directions `σ_1 < ⋯ < σ_m` in `W/W_λ`. The path walks along
//! `(b_{j+1} - b_j)σ_jλ` for `j = m, …, 1`, so it starts in direction
//! `ι = σ_m` and ends in direction `φ = σ_1`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::cartan::{NodeSet, Rational, Realization, Weight};
use crate::error::{Error, Result};
use crate::weyl::{Coset, WeylElt};

pub mod chart;
pub mod chevalley;
pub mod crystal;

pub use chart::{ChartCase, ChartKind, ChartReport};
pub use crystal::IString;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LsPath {
    breaks: Vec<Rational>,
    dirs: Vec<Coset>,
}

impl LsPath {
    /// Raw constructor; see [`LsModel::validate`] for the LS conditions.
    pub fn new(breaks: Vec<Rational>, dirs: Vec<Coset>) -> LsPath {
        LsPath { breaks, dirs }
    }

    /// `b_1, …, b_m` (the final `b_{m+1} = 1` is implicit).
    pub fn breaks(&self) -> &[Rational] {
        &self.breaks
    }

    /// `σ_1 < ⋯ < σ_m`.
    pub fn dirs(&self) -> &[Coset] {
        &self.dirs
    }

    pub fn num_steps(&self) -> usize {
        self.dirs.len()
    }

    /// `b_{j+1}` for 0-based `j`, with `b_{m+1} = 1`.
    pub fn upper_break(&self, j: usize) -> Rational {
        self.breaks.get(j + 1).copied().unwrap_or_else(Rational::one)
    }

    /// Length of the step in direction `σ_j` (0-based).
    pub fn step_length(&self, j: usize) -> Rational {
        self.upper_break(j) - self.breaks[j]
    }

    /// Initial direction `ι(p)`.
    pub fn iota(&self) -> &Coset {
        self.dirs.last().expect("paths have at least one step")
    }

    /// Final direction `φ(p)`.
    pub fn phi(&self) -> &Coset {
        &self.dirs[0]
    }

    /// Steps in traversal order: `(length, σ)` starting from `ι`.
    pub fn steps(&self) -> Vec<(Rational, Coset)> {
        (0..self.dirs.len())
            .rev()
            .map(|j| (self.step_length(j), self.dirs[j].clone()))
            .collect()
    }

    /// Canonical form of a traversal-ordered step list: drops empty steps
    /// and merges equal neighbours.
    pub fn from_steps(steps: Vec<(Rational, Coset)>) -> LsPath {
        let mut merged: Vec<(Rational, Coset)> = Vec::new();
        for (len, c) in steps {
            if len.is_zero() {
                continue;
            }
            match merged.last_mut() {
                Some((l, last)) if *last == c => *l += len,
                _ => merged.push((len, c)),
            }
        }
        merged.reverse();
        let mut breaks = Vec::with_capacity(merged.len());
        let mut acc = Rational::zero();
        let mut dirs = Vec::with_capacity(merged.len());
        for (len, c) in merged {
            breaks.push(acc);
            acc += len;
            dirs.push(c);
        }
        debug_assert!(acc.is_one());
        LsPath { breaks, dirs }
    }
}

/// Orientation of an operator on paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    F,
    E,
}

/// The LS paths of shape `λ` in a fixed realization.
#[derive(Clone, Debug)]
pub struct LsModel<'a> {
    r: &'a Realization,
    lambda: Weight,
    j: NodeSet,
}

impl<'a> LsModel<'a> {
    pub fn new(r: &'a Realization, lambda: &Weight) -> Result<LsModel<'a>> {
        r.check_weight(lambda)?;
        if !r.is_dominant(lambda) {
            return Err(Error::NotDominant);
        }
        Ok(LsModel { r, lambda: lambda.clone(), j: r.stabilizer(lambda) })
    }

    pub fn realization(&self) -> &'a Realization {
        self.r
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// Nodes generating the stabilizer `W_λ`.
    pub fn parabolic(&self) -> NodeSet {
        self.j
    }

    pub fn coset(&self, w: &WeylElt) -> Coset {
        self.r.coset(w, self.j)
    }

    /// `σλ`.
    pub fn dir_weight(&self, sigma: &Coset) -> Weight {
        self.r.act(sigma.min_rep(), &self.lambda)
    }

    /// The straight path `(λ)`.
    pub fn straight(&self) -> LsPath {
        LsPath { breaks: vec![Rational::zero()], dirs: vec![self.coset(&self.r.identity())] }
    }

    /// Path from vectors `a_1 v_1, …, a_m v_m` in traversal order, with each
    /// direction given by a Weyl group element.
    pub fn from_vectors(&self, vectors: &[(Rational, WeylElt)]) -> LsPath {
        LsPath::from_steps(vectors.iter().map(|(a, w)| (*a, self.coset(w))).collect())
    }

    /// `p(1) = Σ (b_{j+1} - b_j) σ_jλ`.
    pub fn endpoint(&self, p: &LsPath) -> Weight {
        let dim = self.r.dim();
        let mut acc = vec![Rational::zero(); dim];
        for j in 0..p.num_steps() {
            let len = p.step_length(j);
            let mu = self.dir_weight(&p.dirs[j]);
            for (a, &x) in acc.iter_mut().zip(mu.coords()) {
                *a += len * Rational::from(x);
            }
        }
        Weight::new(
            acc.into_iter()
                .map(|q| {
                    assert!(q.is_integer(), "LS path endpoint must be integral");
                    q.to_integer()
                })
                .collect(),
        )
    }

    /// Checks the LS conditions; the error names the first violated one.
    pub fn validate(&self, p: &LsPath) -> core::result::Result<(), String> {
        let m = p.num_steps();
        if m == 0 || p.breaks.len() != m {
            return Err(String::from("breaks and directions must be nonempty and of equal length"));
        }
        if !p.breaks[0].is_zero() {
            return Err(String::from("b_1 must be 0"));
        }
        for k in 0..m {
            let hi = p.upper_break(k);
            if p.breaks[k] >= hi {
                return Err(format!("breaks not strictly increasing at step {}", k + 1));
            }
            if p.dirs[k].parabolic() != self.j {
                return Err(format!("direction {} is not a coset of W_λ", k + 1));
            }
        }
        for k in 0..m - 1 {
            let (lo, hi) = (&p.dirs[k], &p.dirs[k + 1]);
            if lo == hi || !self.r.bruhat_leq(lo.min_rep(), hi.min_rep()) {
                return Err(format!("directions {} and {} are not strictly increasing", k + 1, k + 2));
            }
            let b = p.breaks[k + 1];
            if !self.chain_exists(lo.min_rep(), hi.min_rep(), b) {
                return Err(format!("no {b}-chain between directions {} and {}", k + 1, k + 2));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, p: &LsPath) -> bool {
        self.validate(p).is_ok()
    }

    /// Saturated chain of min reps `lo = u_0 ⋖ ⋯ ⋖ u_k = hi` whose cover
    /// coroots `β` satisfy `b⟨β, λ⟩ ∈ ℤ`.
    fn chain_exists(&self, lo: &WeylElt, hi: &WeylElt, b: Rational) -> bool {
        let mut dead = BTreeSet::new();
        self.chain_dfs(lo, hi, b, &mut dead)
    }

    fn chain_dfs(&self, lo: &WeylElt, hi: &WeylElt, b: Rational, dead: &mut BTreeSet<WeylElt>) -> bool {
        if hi == lo {
            return true;
        }
        if hi.length() <= lo.length() || dead.contains(hi) {
            return false;
        }
        for (v, beta) in self.r.cocovers(hi) {
            if self.r.coset_min_rep(&v, self.j) != v || !self.r.bruhat_leq(lo, &v) {
                continue;
            }
            let q = b * Rational::from(self.r.pairing(&beta, &self.lambda));
            if q.is_integer() && self.chain_dfs(lo, &v, b, dead) {
                return true;
            }
        }
        dead.insert(hi.clone());
        false
    }

    /// `f_i(p)`, or `None` when `p` is the tail of its `i`-string.
    pub fn f(&self, i: usize, p: &LsPath) -> Option<LsPath> {
        self.root_operator(i, p, Op::F)
    }

    /// `e_i(p)`, or `None` when `p` is the head of its `i`-string.
    pub fn e(&self, i: usize, p: &LsPath) -> Option<LsPath> {
        self.root_operator(i, p, Op::E)
    }

    /// Root operator on the height function `h(t) = ⟨α_i^∨, p(t)⟩`: the part of
    /// the path between the last minimum and the next level `m + 1` (for `f`)
    /// or between the previous level `m + 1` and the first minimum (for `e`)
    /// is reflected by `s_i`.
    fn root_operator(&self, i: usize, p: &LsPath, op: Op) -> Option<LsPath> {
        let steps = p.steps();
        let slopes: Vec<Rational> = steps
            .iter()
            .map(|(_, c)| Rational::from(self.r.pairing_simple(i, &self.dir_weight(c))))
            .collect();
        let mut times = vec![Rational::zero()];
        let mut heights = vec![Rational::zero()];
        for ((len, _), s) in steps.iter().zip(&slopes) {
            times.push(times.last().unwrap() + len);
            heights.push(heights.last().unwrap() + len * s);
        }
        let min = *heights.iter().min().unwrap();
        debug_assert!(min.is_integer(), "local minima of LS paths are integral");
        let top = min + Rational::one();
        let n = steps.len();
        let (t0, t1) = match op {
            Op::F => {
                if heights[n] - min < Rational::one() {
                    return None;
                }
                let k0 = (0..=n).rev().find(|&k| heights[k] == min).unwrap();
                let k = (k0..n).find(|&k| heights[k + 1] >= top).unwrap();
                (times[k0], times[k] + (top - heights[k]) / slopes[k])
            }
            Op::E => {
                if min > -Rational::one() {
                    return None;
                }
                let k1 = (0..=n).find(|&k| heights[k] == min).unwrap();
                let k = (0..k1).rev().find(|&k| heights[k] >= top).unwrap();
                // the crossing lies in step k, between times[k] and times[k + 1]
                (times[k] + (top - heights[k]) / slopes[k], times[k1])
            }
        };
        let mut out = Vec::with_capacity(n + 2);
        for (k, (len, c)) in steps.into_iter().enumerate() {
            let (a, b) = (times[k], times[k] + len);
            // pieces before t0, inside [t0, t1], after t1
            let lo = a.max(t0).min(b);
            let hi = b.min(t1).max(a);
            out.push((lo - a, c.clone()));
            if hi > lo {
                out.push((hi - lo, self.r.coset_left_mul(i, &c)));
            }
            out.push((b - hi.max(lo), c));
        }
        Some(LsPath::from_steps(out))
    }

    /// The signature rule applied literally to the step decomposition into
    /// pieces of `i`-height `-1, 0, +1`. Returns `None` if some step has a
    /// non-integral `i`-height; otherwise `Some(f_i(p))` with the inner
    /// `None` meaning undefined.
    pub fn f_signature(&self, i: usize, p: &LsPath) -> Option<Option<LsPath>> {
        self.signature_operator(i, p, Op::F)
    }

    pub fn e_signature(&self, i: usize, p: &LsPath) -> Option<Option<LsPath>> {
        self.signature_operator(i, p, Op::E)
    }

    fn signature_operator(&self, i: usize, p: &LsPath, op: Op) -> Option<Option<LsPath>> {
        // pieces indexed backwards, from φ towards ι
        let mut pieces: Vec<(Rational, Coset, i64)> = Vec::new();
        for j in 0..p.num_steps() {
            let len = p.step_length(j);
            let c = &p.dirs[j];
            let height = len * Rational::from(self.r.pairing_simple(i, &self.dir_weight(c)));
            if !height.is_integer() {
                return None;
            }
            let n = height.to_integer();
            if n == 0 {
                pieces.push((len, c.clone(), 0));
            } else {
                for _ in 0..n.abs() {
                    pieces.push((len / Rational::from(n.abs()), c.clone(), n.signum()));
                }
            }
        }
        // -1 is a left parenthesis, +1 a right parenthesis
        let mut open: Vec<usize> = Vec::new();
        let mut unpaired_plus: Vec<usize> = Vec::new();
        for (k, piece) in pieces.iter().enumerate() {
            match piece.2 {
                -1 => open.push(k),
                1 => {
                    if open.pop().is_none() {
                        unpaired_plus.push(k);
                    }
                }
                _ => {}
            }
        }
        let target = match op {
            Op::F => unpaired_plus.last().copied(),
            Op::E => open.first().copied(),
        };
        let Some(k) = target else {
            return Some(None);
        };
        pieces[k].1 = self.r.coset_left_mul(i, &pieces[k].1);
        let steps: Vec<(Rational, Coset)> = pieces.into_iter().rev().map(|(l, c, _)| (l, c)).collect();
        Some(Some(LsPath::from_steps(steps)))
    }

    /// Text form in traversal order, e.g. `(1/3 s0s2s1λ, 2/3 s2s1λ)`.
    pub fn format_path(&self, p: &LsPath) -> String {
        let mut s = String::from("(");
        for (k, (len, c)) in p.steps().into_iter().enumerate() {
            if k > 0 {
                s.push_str(", ");
            }
            if !len.is_one() {
                s.push_str(&format!("{len} "));
            }
            let u = c.min_rep();
            if !u.is_identity() {
                for &i in u.word() {
                    s.push_str(&format!("s{}", self.r.label(i)));
                }
            }
            s.push('λ');
        }
        s.push(')');
        s
    }

    /// `i`-heights of the steps, indexed from `φ`.
    pub fn step_heights(&self, i: usize, p: &LsPath) -> Vec<Rational> {
        (0..p.num_steps())
            .map(|j| p.step_length(j) * Rational::from(self.r.pairing_simple(i, &self.dir_weight(&p.dirs[j]))))
            .collect()
    }
}
