//! The representation ring `R(T)`, nilHecke operators and the Chevalley
//! coefficient recurrence.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;
use core::ops::{Add, Neg, Sub};

use crate::cartan::{Realization, Weight};
use crate::error::{Error, Result};
use crate::weyl::WeylElt;

/// A finite integer combination of exponentials `e^μ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<Weight, i64>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn monomial(mu: Weight) -> LaurentPoly {
        LaurentPoly::term(mu, 1)
    }

    pub fn term(mu: Weight, c: i64) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        p.add_term(mu, c);
        p
    }

    pub fn add_term(&mut self, mu: Weight, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(mu) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &LaurentPoly, k: i64) {
        for (mu, &c) in &other.terms {
            self.add_term(mu.clone(), c * k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn coefficient(&self, mu: &Weight) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all coefficients (the value at `e^μ = 1`).
    pub fn mass(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn scaled(&self, k: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out.add_assign_scaled(self, k);
        out
    }

    /// `e^μ ↦ e^{f(μ)}` extended linearly.
    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (mu, &c) in &self.terms {
            out.add_term(f(mu), c);
        }
        out
    }

    /// `e^μ ↦ e^{-μ}`.
    pub fn dual(&self) -> LaurentPoly {
        self.map_weights(|mu| -mu)
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, 1);
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, -1);
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scaled(-1)
    }
}

/// A finite map `z ↦ b_z` from Weyl group elements to nonzero polynomials;
/// read as `Σ b_z T_z` in the nilHecke ring or as one Chevalley row.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChevalleyRow {
    entries: BTreeMap<WeylElt, LaurentPoly>,
}

pub type NilHeckeCoeffs = ChevalleyRow;

impl ChevalleyRow {
    pub fn new() -> ChevalleyRow {
        ChevalleyRow::default()
    }

    pub fn single(z: WeylElt, p: LaurentPoly) -> ChevalleyRow {
        let mut r = ChevalleyRow::new();
        r.add(z, &p);
        r
    }

    /// Adds `p` to the entry at `z`.
    pub fn add(&mut self, z: WeylElt, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let e = self.entries.entry(z.clone()).or_default();
        e.add_assign_scaled(p, 1);
        if e.is_zero() {
            self.entries.remove(&z);
        }
    }

    pub fn get(&self, z: &WeylElt) -> LaurentPoly {
        self.entries.get(z).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &BTreeMap<WeylElt, LaurentPoly> {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeylElt, &LaurentPoly)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total number of monomial terms, counted with |multiplicity|.
    pub fn total_terms(&self) -> i64 {
        self.entries.values().flat_map(|p| p.terms().values()).map(|c| c.abs()).sum()
    }

    pub fn map_polys(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> ChevalleyRow {
        let mut out = ChevalleyRow::new();
        for (z, p) in &self.entries {
            out.add(z.clone(), &f(p));
        }
        out
    }

    /// Entries present in exactly one of the rows or with different values.
    pub fn diff(&self, other: &ChevalleyRow) -> Vec<(WeylElt, LaurentPoly, LaurentPoly)> {
        let mut keys: Vec<&WeylElt> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|z| {
                let a = self.get(z);
                let b = other.get(z);
                (a != b).then(|| (z.clone(), a, b))
            })
            .collect()
    }
}

impl Realization {
    /// `s_i` acting on a polynomial.
    pub fn reflect_poly(&self, i: usize, f: &LaurentPoly) -> LaurentPoly {
        f.map_weights(|mu| self.simple_reflection(i, mu))
    }

    pub fn act_poly(&self, w: &WeylElt, f: &LaurentPoly) -> LaurentPoly {
        f.map_weights(|mu| self.act(w, mu))
    }

    /// `T_i·e^μ` on one monomial, with coefficient `c`.
    fn ti_monomial(&self, i: usize, mu: &Weight, c: i64, out: &mut LaurentPoly) {
        let n = self.pairing_simple(i, mu);
        let a = self.simple_root(i);
        if n > 0 {
            for k in 1..=n {
                out.add_term(mu.add_scaled(a, -k), c);
            }
        } else if n < 0 {
            for k in 0..=(-1 - n) {
                out.add_term(mu.add_scaled(a, k), -c);
            }
        }
    }

    pub fn apply_ti(&self, i: usize, f: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (mu, &c) in f.terms() {
            self.ti_monomial(i, mu, c, &mut out);
        }
        out
    }

    /// Demazure operator `D_i = 1 + T_i`.
    pub fn apply_di(&self, i: usize, f: &LaurentPoly) -> LaurentPoly {
        f + &self.apply_ti(i, f)
    }

    /// Left multiplication by `T_i` of `Σ b_y T_y`.
    pub fn hecke_compose(&self, i: usize, elem: &NilHeckeCoeffs) -> NilHeckeCoeffs {
        let mut out = ChevalleyRow::new();
        for (y, b) in elem.iter() {
            // T_i b T_y = (T_i·b) T_y + s_i(b) T_i T_y
            out.add(y.clone(), &self.apply_ti(i, b));
            let sb = self.reflect_poly(i, b);
            if y.has_left_descent(i) {
                out.add(y.clone(), &-&sb);
            } else {
                out.add(self.left_mul(i, y), &sb);
            }
        }
        out
    }

    /// The row `z ↦ b^w_{zλ}` defined by `T_w e^λ = Σ_z b^w_{zλ} T_z`.
    pub fn chevalley_recurrence(&self, w: &WeylElt, lambda: &Weight) -> Result<NilHeckeCoeffs> {
        self.check_weight(lambda)?;
        let mut elem = ChevalleyRow::single(self.identity(), LaurentPoly::monomial(lambda.clone()));
        for &a in w.word().iter().rev() {
            elem = self.hecke_compose(a, &elem);
        }
        Ok(elem)
    }

    /// Signed 0-Hecke subwords of `word` whose product is `±T_v`.
    pub fn explicit_support(&self, v: &WeylElt, word: &[usize]) -> Result<Vec<(Vec<bool>, i64)>> {
        let n = word.len();
        if n > 20 {
            return Err(Error::TooLarge("explicit formula is limited to words of length 20"));
        }
        if !self.is_reduced(word) {
            return Err(Error::NotReduced);
        }
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let mut y = self.identity();
            let mut sign = 1;
            for (k, &a) in word.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    if y.has_right_descent(a) {
                        sign = -sign;
                    } else {
                        y = self.right_mul(&y, a);
                    }
                }
            }
            if &y == v {
                out.push(((0..n).map(|k| mask & (1 << k) != 0).collect(), sign));
            }
        }
        Ok(out)
    }

    /// `Σ_{ε∈E(v,a)} sgn(ε) A_ε·e^λ` for a reduced word `a` of `w`.
    pub fn chevalley_explicit(&self, w: &WeylElt, v: &WeylElt, lambda: &Weight, word: &[usize]) -> Result<LaurentPoly> {
        self.check_weight(lambda)?;
        if &self.element_reduced(word)? != w {
            return Err(Error::Precondition("word does not spell w"));
        }
        let mut total = LaurentPoly::zero();
        for (eps, sign) in self.explicit_support(v, word)? {
            let mut f = LaurentPoly::monomial(lambda.clone());
            for (k, &a) in word.iter().enumerate().rev() {
                f = if eps[k] { self.reflect_poly(a, &f) } else { self.apply_ti(a, &f) };
                if f.is_zero() {
                    break;
                }
            }
            total.add_assign_scaled(&f, sign);
        }
        Ok(total)
    }

    pub fn format_poly(&self, f: &LaurentPoly) -> String {
        if f.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, (mu, &c)) in f.terms().iter().enumerate() {
            if k > 0 {
                s.push_str(if c < 0 { " - " } else { " + " });
            } else if c < 0 {
                s.push('-');
            }
            if c.abs() != 1 {
                let _ = write!(s, "{}", c.abs());
            }
            let _ = write!(s, "e^{}", mu);
        }
        s
    }
}
