//! Weyl group elements, Bruhat order, covers and parabolic cosets.
//!
//! An element is identified by `w·ρ`. Its canonical word is read off by
//! repeatedly stripping the smallest-index left descent, so elements of
//! infinite Weyl groups compare and hash without any normal-form tables.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write as _;

use crate::cartan::{Coroot, NodeSet, Realization, Weight};
use crate::error::{Error, Result};

pub const DEFAULT_LAYER_CAP: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A Weyl group element with its canonical reduced word and cached images
/// `w·ρ` and `w⁻¹·ρ`.
#[derive(Clone, Debug)]
pub struct WeylElt {
    word: Vec<usize>,
    rho: Weight,
    inv_rho: Weight,
}

impl PartialEq for WeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.rho == other.rho
    }
}

impl Eq for WeylElt {}

impl core::hash::Hash for WeylElt {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.rho.hash(state);
    }
}

impl PartialOrd for WeylElt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded then lexicographic in the canonical word. Consistent with `Eq`
/// because canonical words are unique.
impl Ord for WeylElt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl WeylElt {
    /// Canonical reduced word `[i_1, …, i_l]` with `w = s_{i_1}⋯s_{i_l}`.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// `w·ρ`.
    pub fn rho_image(&self) -> &Weight {
        &self.rho
    }

    /// `s_i w < w`
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.rho.coords()[i] < 0
    }

    /// `w s_i < w`
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.inv_rho.coords()[i] < 0
    }
}

impl Realization {
    pub fn identity(&self) -> WeylElt {
        WeylElt {
            word: Vec::new(),
            rho: self.rho(),
            inv_rho: self.rho(),
        }
    }

    /// `s_{i_1}⋯s_{i_k}·μ`.
    pub fn act_word(&self, word: &[usize], mu: &Weight) -> Weight {
        let mut out = mu.clone();
        for &i in word.iter().rev() {
            out = self.simple_reflection(i, &out);
        }
        out
    }

    /// `w·μ`.
    pub fn act(&self, w: &WeylElt, mu: &Weight) -> Weight {
        self.act_word(&w.word, mu)
    }

    /// `w⁻¹·μ`.
    pub fn act_inverse(&self, w: &WeylElt, mu: &Weight) -> Weight {
        let mut out = mu.clone();
        for &i in &w.word {
            out = self.simple_reflection(i, &out);
        }
        out
    }

    /// `w·α` for a coroot.
    pub fn act_on_coroot(&self, w: &WeylElt, alpha: &Coroot) -> Coroot {
        let mut out = alpha.clone();
        for &i in w.word.iter().rev() {
            out = self.reflect_coroot(i, &out);
        }
        out
    }

    /// The element `w` with `w·ρ = rho_image`.
    fn from_rho(&self, rho_image: Weight) -> WeylElt {
        let n = self.rank();
        let mut word = Vec::new();
        let mut cur = rho_image.clone();
        while let Some(i) = (0..n).find(|&i| cur.coords()[i] < 0) {
            word.push(i);
            cur = self.simple_reflection(i, &cur);
        }
        debug_assert_eq!(cur, self.rho());
        let mut inv_rho = self.rho();
        for &i in &word {
            inv_rho = self.simple_reflection(i, &inv_rho);
        }
        WeylElt { word, rho: rho_image, inv_rho }
    }

    /// Element of an arbitrary (possibly non-reduced) word.
    pub fn element(&self, word: &[usize]) -> Result<WeylElt> {
        for &i in word {
            self.check_index(i)?;
        }
        Ok(self.from_rho(self.act_word(word, &self.rho())))
    }

    /// Element of a word that must be reduced.
    pub fn element_reduced(&self, word: &[usize]) -> Result<WeylElt> {
        let w = self.element(word)?;
        if w.length() != word.len() {
            return Err(Error::NotReduced);
        }
        Ok(w)
    }

    pub fn is_reduced(&self, word: &[usize]) -> bool {
        self.element(word).map(|w| w.length() == word.len()).unwrap_or(false)
    }

    pub fn simple(&self, i: usize) -> WeylElt {
        self.from_rho(self.simple_reflection(i, &self.rho()))
    }

    pub fn mult(&self, u: &WeylElt, v: &WeylElt) -> WeylElt {
        self.from_rho(self.act(u, &v.rho))
    }

    pub fn inverse(&self, w: &WeylElt) -> WeylElt {
        WeylElt {
            word: w.word.iter().rev().copied().collect::<Vec<_>>(),
            rho: w.inv_rho.clone(),
            inv_rho: w.rho.clone(),
        }
        .canonical(self)
    }

    /// `s_i w`.
    pub fn left_mul(&self, i: usize, w: &WeylElt) -> WeylElt {
        if w.word.first() == Some(&i) {
            // stripping the smallest left descent keeps the rest canonical
            return WeylElt {
                word: w.word[1..].to_vec(),
                rho: self.simple_reflection(i, &w.rho),
                inv_rho: self.act_inverse_word(&w.word[1..]),
            };
        }
        self.from_rho(self.simple_reflection(i, &w.rho))
    }

    /// `w s_i`.
    pub fn right_mul(&self, w: &WeylElt, i: usize) -> WeylElt {
        let s = self.simple_reflection(i, &self.rho());
        self.from_rho(self.act(w, &s))
    }

    /// `w s_α`.
    pub fn right_mul_reflection(&self, w: &WeylElt, alpha: &Coroot) -> WeylElt {
        let s = self.coroot_reflection(alpha, &self.rho());
        self.from_rho(self.act(w, &s))
    }

    fn act_inverse_word(&self, word: &[usize]) -> Weight {
        let mut out = self.rho();
        for &i in word {
            out = self.simple_reflection(i, &out);
        }
        out
    }

    pub fn descents(&self, w: &WeylElt, side: Side) -> NodeSet {
        NodeSet::from_nodes((0..self.rank()).filter(|&i| match side {
            Side::Left => w.has_left_descent(i),
            Side::Right => w.has_right_descent(i),
        }))
    }

    /// Bruhat order via the Z-property recursion on `ρ`-images.
    pub fn bruhat_leq(&self, v: &WeylElt, w: &WeylElt) -> bool {
        let n = self.rank();
        let mut vr = v.rho.clone();
        let mut wr = w.rho.clone();
        let mut lv = v.length();
        let mut lw = w.length();
        loop {
            if lv == 0 {
                return true;
            }
            if lv > lw {
                return false;
            }
            if lv == lw {
                return vr == wr;
            }
            let i = (0..n).find(|&i| wr.coords()[i] < 0).expect("non-identity has a descent");
            wr = self.simple_reflection(i, &wr);
            lw -= 1;
            if vr.coords()[i] < 0 {
                vr = self.simple_reflection(i, &vr);
                lv -= 1;
            }
        }
    }

    /// Positive coroots `α` with `w·α < 0`, listed as
    /// `β_k = s_{i_l}⋯s_{i_{k+1}}(α_{i_k}^∨)` along the canonical word.
    pub fn inversions(&self, w: &WeylElt) -> Vec<Coroot> {
        let l = w.length();
        (0..l)
            .map(|k| {
                let mut c = self.simple_coroot(w.word[k]);
                for &j in &w.word[k + 1..] {
                    c = self.reflect_coroot(j, &c);
                }
                c
            })
            .collect()
    }

    /// All `(w s_α, α)` with `ℓ(w s_α) = ℓ(w) - 1`, sorted by element.
    pub fn cocovers(&self, w: &WeylElt) -> Vec<(WeylElt, Coroot)> {
        let l = w.length();
        let mut out = Vec::new();
        for (k, beta) in self.inversions(w).into_iter().enumerate() {
            let mut sub = Vec::with_capacity(l - 1);
            sub.extend_from_slice(&w.word[..k]);
            sub.extend_from_slice(&w.word[k + 1..]);
            let v = self.from_rho(self.act_word(&sub, &self.rho()));
            if v.length() + 1 == l {
                out.push((v, beta));
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Minimal representative of `wW_J`, found by stripping right descents in `J`.
    pub fn coset_min_rep(&self, w: &WeylElt, j: NodeSet) -> WeylElt {
        let mut cur = w.clone();
        while let Some(i) = j.iter().find(|&i| i < self.rank() && cur.has_right_descent(i)) {
            cur = self.right_mul(&cur, i);
        }
        cur
    }

    pub fn coset(&self, w: &WeylElt, j: NodeSet) -> Coset {
        Coset { min_rep: self.coset_min_rep(w, j), j }
    }

    /// `w = w^J w_J` with lengths adding.
    pub fn coset_decompose(&self, w: &WeylElt, j: NodeSet) -> (WeylElt, WeylElt) {
        let wj = self.coset_min_rep(w, j);
        let rest = self.mult(&self.inverse(&wj), w);
        debug_assert_eq!(wj.length() + rest.length(), w.length());
        (wj, rest)
    }

    /// The coset `uW_J` with `u·λ = μ`, for dominant `λ` with stabilizer `J`.
    pub fn coset_of_weight(&self, mu: &Weight, j: NodeSet) -> Coset {
        let n = self.rank();
        let mut word = Vec::new();
        let mut cur = mu.clone();
        while let Some(i) = (0..n).find(|&i| cur.coords()[i] < 0) {
            word.push(i);
            cur = self.simple_reflection(i, &cur);
        }
        let u = self.from_rho(self.act_word(&word, &self.rho()));
        Coset { min_rep: u, j }
    }

    pub fn coset_leq(&self, sigma: &Coset, tau: &Coset) -> Result<bool> {
        if sigma.j != tau.j {
            return Err(Error::Precondition("cosets have different parabolic subsets"));
        }
        Ok(self.bruhat_leq(&sigma.min_rep, &tau.min_rep))
    }

    /// `s_i τ`.
    pub fn coset_left_mul(&self, i: usize, tau: &Coset) -> Coset {
        self.coset(&self.left_mul(i, &tau.min_rep), tau.j)
    }

    /// `u·μ` for the min rep `u` of `τ`.
    pub fn coset_weight(&self, tau: &Coset, mu: &Weight) -> Weight {
        self.act(&tau.min_rep, mu)
    }

    pub fn format_word(&self, w: &WeylElt) -> String {
        if w.is_identity() {
            return String::from("e");
        }
        let mut s = String::new();
        for (k, &i) in w.word.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{}", self.label(i));
        }
        s
    }

    /// All elements of length at most `bound`, grouped by length.
    pub fn bfs_ball(&self, bound: usize, cap: usize) -> Result<Ball> {
        let mut layers = vec![vec![self.identity()]];
        for len in 1..=bound {
            let mut seen = BTreeSet::new();
            let mut next = Vec::new();
            for w in layers.last().unwrap() {
                for i in 0..self.rank() {
                    if w.has_left_descent(i) {
                        continue;
                    }
                    let rho = self.simple_reflection(i, &w.rho);
                    if seen.insert(rho.clone()) {
                        next.push(self.from_rho(rho));
                        if next.len() > cap {
                            return Err(Error::LayerCapExceeded { length: len, size: next.len(), cap });
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            layers.push(next);
        }
        Ok(Ball { layers, bound })
    }

    /// All `(w, α)` with `z ⋖ w = z s_α` and `ℓ(w) ≤ bound`.
    pub fn covers_within(&self, z: &WeylElt, bound: usize, cap: usize) -> Result<Vec<(WeylElt, Coroot)>> {
        let l = z.length() + 1;
        if bound < l {
            return Ok(Vec::new());
        }
        let ball = self.bfs_ball(l, cap)?;
        Ok(ball.covers_from_layer(self, z))
    }
}

impl WeylElt {
    fn canonical(self, r: &Realization) -> WeylElt {
        r.from_rho(self.rho)
    }
}

/// A left coset `uW_J` represented by its minimal-length element `u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    min_rep: WeylElt,
    j: NodeSet,
}

impl Coset {
    pub fn min_rep(&self) -> &WeylElt {
        &self.min_rep
    }

    pub fn parabolic(&self) -> NodeSet {
        self.j
    }

    pub fn length(&self) -> usize {
        self.min_rep.length()
    }
}

/// The Bruhat ball `{w : ℓ(w) ≤ bound}`.
#[derive(Clone, Debug)]
pub struct Ball {
    layers: Vec<Vec<WeylElt>>,
    bound: usize,
}

impl Ball {
    pub fn layers(&self) -> &[Vec<WeylElt>] {
        &self.layers
    }

    pub fn layer(&self, len: usize) -> &[WeylElt] {
        self.layers.get(len).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// True when the group has no element of length `bound + 1`, i.e. the
    /// ball is the whole (finite) group. Only meaningful if the last layer
    /// was built.
    pub fn is_complete(&self, r: &Realization) -> bool {
        self.layers.len() <= self.bound
            || self
                .layers
                .last()
                .unwrap()
                .iter()
                .all(|w| (0..r.rank()).all(|i| w.has_left_descent(i)))
    }

    pub fn iter(&self) -> impl Iterator<Item = &WeylElt> {
        self.layers.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.layers.iter().map(|l| l.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn covers_from_layer(&self, r: &Realization, z: &WeylElt) -> Vec<(WeylElt, Coroot)> {
        let mut out = Vec::new();
        for w in self.layer(z.length() + 1) {
            for (v, a) in r.cocovers(w) {
                if &v == z {
                    out.push((w.clone(), a));
                }
            }
        }
        out
    }

    /// Cocover lists of every element, and covers obtained by inverting them.
    pub fn bruhat_graph(&self, r: &Realization) -> BruhatGraph {
        let mut cocovers = BTreeMap::new();
        let mut covers: BTreeMap<WeylElt, Vec<(WeylElt, Coroot)>> = BTreeMap::new();
        for w in self.iter() {
            let cc = r.cocovers(w);
            for (v, a) in &cc {
                covers.entry(v.clone()).or_default().push((w.clone(), a.clone()));
            }
            cocovers.insert(w.clone(), cc);
        }
        for list in covers.values_mut() {
            list.sort_by(|a, b| a.0.cmp(&b.0));
        }
        BruhatGraph { bound: self.bound, cocovers, covers }
    }
}

/// Bruhat graph restricted to a ball.
#[derive(Clone, Debug)]
pub struct BruhatGraph {
    bound: usize,
    cocovers: BTreeMap<WeylElt, Vec<(WeylElt, Coroot)>>,
    covers: BTreeMap<WeylElt, Vec<(WeylElt, Coroot)>>,
}

impl BruhatGraph {
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn cocovers(&self, w: &WeylElt) -> &[(WeylElt, Coroot)] {
        self.cocovers.get(w).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Covers of `z` inside the ball; complete when `ℓ(z) < bound`.
    pub fn covers(&self, z: &WeylElt) -> &[(WeylElt, Coroot)] {
        self.covers.get(z).map(|v| v.as_slice()).unwrap_or(&[])
    }
}
