//! The alcove model: `λ`-hyperplanes in the lex `λ`-chain and adapted
//! sequences.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::cartan::{Coroot, Rational, Realization, Weight};
use crate::error::{Error, Result};
use crate::lspath::LsModel;
use crate::weyl::WeylElt;

pub mod bijection;
pub mod order;
pub mod tree;

pub use order::ReflOrder;
pub use tree::{AlcoveTree, TreeNode, ZAdapted};

/// A `λ`-hyperplane `H_{α,k}` with `0 ≤ k < ⟨α, λ⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    alpha: Coroot,
    k: i64,
    pairing: i64,
}

impl Hyperplane {
    pub fn alpha(&self) -> &Coroot {
        &self.alpha
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// `⟨α, λ⟩`.
    pub fn pairing(&self) -> i64 {
        self.pairing
    }

    /// `m_h = ⟨α, λ⟩ - k`.
    pub fn m(&self) -> i64 {
        self.pairing - self.k
    }

    /// Relative height `k / ⟨α, λ⟩`.
    pub fn rel_height(&self) -> Rational {
        Rational::new(self.k, self.pairing)
    }

    /// Relative coheight `1 - k / ⟨α, λ⟩`.
    pub fn rel_coheight(&self) -> Rational {
        Rational::new(self.m(), self.pairing)
    }
}

/// Compares `(k, c_1, …, c_r)/⟨α, λ⟩` lexicographically.
pub fn lex_cmp(a: &Hyperplane, b: &Hyperplane) -> Ordering {
    let (pa, pb) = (a.pairing as i128, b.pairing as i128);
    let ka = core::iter::once(&a.k).chain(a.alpha.coords());
    let kb = core::iter::once(&b.k).chain(b.alpha.coords());
    for (x, y) in ka.zip(kb) {
        match (*x as i128 * pb).cmp(&(*y as i128 * pa)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

pub fn lex_less(a: &Hyperplane, b: &Hyperplane) -> bool {
    lex_cmp(a, b) == Ordering::Less
}

impl PartialOrd for Hyperplane {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The lex `λ`-chain.
impl Ord for Hyperplane {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(self, other)
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|", self.k)?;
        for (n, c) in self.alpha.coords().iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")?;
        if self.pairing != 1 {
            write!(f, "/{}", self.pairing)?;
        }
        Ok(())
    }
}

/// Monotonicity of a sequence of hyperplanes in the lex `λ`-chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Monotone {
    Increasing,
    Decreasing,
}

/// Hyperplanes `h_1, …, h_q` with the chain `z ⋖ zs_{h_1} ⋖ ⋯`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdaptedSequence {
    hs: Vec<Hyperplane>,
    chain: Vec<WeylElt>,
}

impl AdaptedSequence {
    pub fn empty(z: WeylElt) -> AdaptedSequence {
        AdaptedSequence { hs: Vec::new(), chain: alloc::vec![z] }
    }

    /// Appends `h`; the caller guarantees the cover.
    pub fn push(&mut self, r: &Realization, h: Hyperplane) {
        let next = r.right_mul_reflection(self.end(), &h.alpha);
        self.chain.push(next);
        self.hs.push(h);
    }

    pub fn base(&self) -> &WeylElt {
        &self.chain[0]
    }

    pub fn end(&self) -> &WeylElt {
        self.chain.last().unwrap()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hs
    }

    pub fn chain(&self) -> &[WeylElt] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.hs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hs.is_empty()
    }

    /// Whether every step is a Bruhat cover by the stated coroot.
    pub fn is_adapted(&self, r: &Realization) -> bool {
        self.hs.iter().zip(self.chain.windows(2)).all(|(h, pair)| {
            pair[1].length() == pair[0].length() + 1 && r.right_mul_reflection(&pair[0], &h.alpha) == pair[1]
        })
    }

    pub fn is_monotone(&self, mono: Monotone) -> bool {
        self.hs.windows(2).all(|p| match mono {
            Monotone::Increasing => p[0] < p[1],
            Monotone::Decreasing => p[0] > p[1],
        })
    }
}

/// Alcove-model data for a fixed dominant `λ`.
#[derive(Clone, Debug)]
pub struct AlcoveModel<'a> {
    r: &'a Realization,
    lambda: Weight,
    ls: LsModel<'a>,
    cmp: fn(&Hyperplane, &Hyperplane) -> Ordering,
}

impl<'a> AlcoveModel<'a> {
    pub fn new(r: &'a Realization, lambda: &Weight) -> Result<AlcoveModel<'a>> {
        let ls = LsModel::new(r, lambda)?;
        Ok(AlcoveModel { r, lambda: lambda.clone(), ls, cmp: lex_cmp })
    }

    /// Replaces the hyperplane order used by the tree enumerators. Anything
    /// but [`lex_cmp`] breaks the formulas; this exists for negative controls.
    pub fn with_comparator(mut self, cmp: fn(&Hyperplane, &Hyperplane) -> Ordering) -> AlcoveModel<'a> {
        self.cmp = cmp;
        self
    }

    pub fn realization(&self) -> &'a Realization {
        self.r
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn ls(&self) -> &LsModel<'a> {
        &self.ls
    }

    pub(crate) fn order(&self, a: &Hyperplane, b: &Hyperplane) -> Ordering {
        (self.cmp)(a, b)
    }

    /// The hyperplane `(α, k)`; fails unless `0 ≤ k < ⟨α, λ⟩`.
    pub fn hyperplane(&self, alpha: &Coroot, k: i64) -> Result<Hyperplane> {
        let p = self.r.pairing(alpha, &self.lambda);
        if !alpha.is_positive() || k < 0 || k >= p {
            return Err(Error::Precondition("not a λ-hyperplane"));
        }
        Ok(Hyperplane { alpha: alpha.clone(), k, pairing: p })
    }

    /// All `(α, k)` for one coroot.
    pub fn hyperplanes_of(&self, alpha: &Coroot) -> Vec<Hyperplane> {
        let p = self.r.pairing(alpha, &self.lambda);
        (0..p.max(0)).map(|k| Hyperplane { alpha: alpha.clone(), k, pairing: p }).collect()
    }

    /// `ŝ_h(μ) = s_αμ + kα^∨`.
    pub fn hs_apply(&self, h: &Hyperplane, mu: &Weight) -> Weight {
        self.r.coroot_reflection(&h.alpha, mu).add_scaled(h.alpha.root(), h.k)
    }

    /// `s̃_h(μ) = s_αμ + (⟨α, λ⟩ - k)α^∨`.
    pub fn ts_apply(&self, h: &Hyperplane, mu: &Weight) -> Weight {
        self.r.coroot_reflection(&h.alpha, mu).add_scaled(h.alpha.root(), h.m())
    }

    /// `z ŝ_{h_1}⋯ŝ_{h_q}(λ)`.
    pub fn wt_inc(&self, seq: &AdaptedSequence) -> Weight {
        let mu = seq.hs.iter().rev().fold(self.lambda.clone(), |mu, h| self.hs_apply(h, &mu));
        self.r.act(seq.base(), &mu)
    }

    /// `z s̃_{h_1}⋯s̃_{h_q}(λ)`.
    pub fn wt_dec(&self, seq: &AdaptedSequence) -> Weight {
        let mu = seq.hs.iter().rev().fold(self.lambda.clone(), |mu, h| self.ts_apply(h, &mu));
        self.r.act(seq.base(), &mu)
    }

    /// The whole lex `λ`-chain in finite type.
    pub fn lex_chain_finite(&self) -> Result<Vec<Hyperplane>> {
        let roots = self.r.finite_positive_coroots().ok_or(Error::Precondition("finite type required"))?;
        let mut out: Vec<Hyperplane> = roots.iter().flat_map(|a| self.hyperplanes_of(a)).collect();
        out.sort();
        Ok(out)
    }

    /// Checks that `order` is a `λ`-chain of a finite root system: occurrence
    /// counts, condition (1), the pair condition for `γ = α + β`, and the
    /// counting identity `N_{<h}(γ) = N_{<h}(α) + m N_{<h}(β)`.
    pub fn validate_lambda_chain_finite(&self, order: &[Hyperplane]) -> core::result::Result<(), String> {
        let roots = self.r.finite_positive_coroots().ok_or_else(|| String::from("finite type required"))?;
        let set: BTreeSet<Vec<i64>> = roots.iter().map(|a| a.coords().to_vec()).collect();
        let mut seen: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for h in order {
            let c = h.alpha.coords().to_vec();
            if !set.contains(&c) {
                return Err(format!("{h} is not a positive coroot"));
            }
            let n = seen.entry(c).or_default();
            if h.k != *n {
                return Err(format!("{h} appears out of height order"));
            }
            *n += 1;
        }
        for a in &roots {
            let p = self.r.pairing(a, &self.lambda);
            let n = seen.get(a.coords()).copied().unwrap_or(0);
            if n != p.max(0) {
                return Err(format!("coroot {a} occurs {n} times, expected {p}"));
            }
        }
        self.pair_condition(order, &roots)?;
        self.counting_condition(order, &roots)
    }

    /// For `γ = α + β`, the copies of `α, β, γ` form pairs `(α, γ)`, `(β, γ)`.
    fn pair_condition(&self, order: &[Hyperplane], roots: &[Coroot]) -> core::result::Result<(), String> {
        let set: BTreeSet<&[i64]> = roots.iter().map(|a| a.coords()).collect();
        let seq: Vec<&[i64]> = order.iter().map(|h| h.alpha.coords()).collect();
        for (x, a) in roots.iter().enumerate() {
            for b in &roots[x + 1..] {
                let g: Vec<i64> = a.coords().iter().zip(b.coords()).map(|(u, v)| u + v).collect();
                if !set.contains(&g[..]) {
                    continue;
                }
                let sub: Vec<&[i64]> = seq.iter().copied().filter(|c| *c == a.coords() || *c == b.coords() || *c == &g[..]).collect();
                let ok = sub.len() % 2 == 0
                    && sub.chunks(2).all(|pair| pair[1] == &g[..] && (pair[0] == a.coords() || pair[0] == b.coords()));
                if !ok {
                    return Err(format!("triple {a}, {b}, {a}+{b} is not a concatenation of pairs"));
                }
            }
        }
        Ok(())
    }

    /// `N_{<h}(γ) = N_{<h}(α) + m N_{<h}(β)` at every position.
    fn counting_condition(&self, order: &[Hyperplane], roots: &[Coroot]) -> core::result::Result<(), String> {
        let set: BTreeSet<&[i64]> = roots.iter().map(|a| a.coords()).collect();
        let max_height = roots.iter().map(|a| a.height()).max().unwrap_or(0);
        let mut before: BTreeMap<&[i64], i64> = BTreeMap::new();
        let count = |m: &BTreeMap<&[i64], i64>, c: &[i64]| m.get(c).copied().unwrap_or(0);
        for h in order {
            let beta = h.alpha.coords();
            for a in roots {
                if a.coords() == beta {
                    continue;
                }
                for m in -max_height..=max_height {
                    if m == 0 {
                        continue;
                    }
                    let g: Vec<i64> = a.coords().iter().zip(beta).map(|(u, v)| u + m * v).collect();
                    if !set.contains(&g[..]) {
                        continue;
                    }
                    if count(&before, &g) != count(&before, a.coords()) + m * count(&before, beta) {
                        return Err(format!("counting identity fails at {h} for {a} + {m}·β"));
                    }
                }
            }
            *before.entry(beta).or_default() += 1;
        }
        Ok(())
    }

    /// `N_{<h}(η)` in the lex `λ`-chain.
    pub fn lex_count_below(&self, h: &Hyperplane, eta: &Coroot) -> i64 {
        self.hyperplanes_of(eta).iter().filter(|g| lex_less(g, h)).count() as i64
    }

    /// Violations of the lex chain axioms over coroots of height at most
    /// `bound`, with every `m` for which `α + mβ` is in range. Strings may be
    /// broken in affine type, so `m` is not assumed to be `±1`.
    pub fn lex_chain_violations(&self, bound: i64) -> Vec<String> {
        let roots = self.r.positive_coroots_up_to(bound);
        let set: BTreeMap<Vec<i64>, &Coroot> = roots.iter().map(|a| (a.coords().to_vec(), a)).collect();
        let mut out = Vec::new();
        for beta in &roots {
            for h in self.hyperplanes_of(beta) {
                for k2 in h.k + 1..h.pairing {
                    let h2 = Hyperplane { k: k2, ..h.clone() };
                    if !lex_less(&h, &h2) {
                        out.push(format!("condition (1) fails for {h}, {h2}"));
                    }
                }
                let nb = self.lex_count_below(&h, beta);
                for a in &roots {
                    if a == beta {
                        continue;
                    }
                    let na = self.lex_count_below(&h, a);
                    for m in -bound..=bound {
                        if m == 0 {
                            continue;
                        }
                        let g: Vec<i64> = a.coords().iter().zip(beta.coords()).map(|(u, v)| u + m * v).collect();
                        let Some(gamma) = set.get(&g) else { continue };
                        if self.lex_count_below(&h, gamma) != na + m * nb {
                            out.push(format!("counting identity fails at {h} for α={a}, m={m}"));
                        }
                    }
                }
            }
        }
        out
    }
}
