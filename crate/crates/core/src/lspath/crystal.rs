//! Demazure crystals, `i`-strings and path lifts.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{LsModel, LsPath};
use crate::error::{Error, Result};
use crate::weyl::WeylElt;

/// An `i`-string `h = p_0 → p_1 → ⋯ → p_m = t` under `f_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IString {
    node: usize,
    elems: Vec<LsPath>,
}

impl IString {
    pub fn node(&self) -> usize {
        self.node
    }

    pub fn elems(&self) -> &[LsPath] {
        &self.elems
    }

    pub fn head(&self) -> &LsPath {
        &self.elems[0]
    }

    pub fn tail(&self) -> &LsPath {
        self.elems.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl<'a> LsModel<'a> {
    /// `F_{i_1}⋯F_{i_k}{(λ)}` for the canonical word of `w`.
    pub fn demazure(&self, w: &WeylElt) -> BTreeSet<LsPath> {
        self.demazure_word(w.word())
    }

    /// Closure along any word; `F_i S = S ∪ {f_i^k p : p ∈ S}`.
    pub fn demazure_word(&self, word: &[usize]) -> BTreeSet<LsPath> {
        let mut set = BTreeSet::from([self.straight()]);
        for &i in word.iter().rev() {
            let mut extra = Vec::new();
            for p in &set {
                let mut cur = self.f(i, p);
                while let Some(q) = cur {
                    cur = self.f(i, &q);
                    extra.push(q);
                }
            }
            set.extend(extra);
        }
        set
    }

    /// The full `i`-string through `p`.
    pub fn string_through(&self, i: usize, p: &LsPath) -> IString {
        let mut head = p.clone();
        while let Some(q) = self.e(i, &head) {
            head = q;
        }
        let mut elems = alloc::vec![head];
        while let Some(q) = self.f(i, elems.last().unwrap()) {
            elems.push(q);
        }
        IString { node: i, elems }
    }

    /// Distinct `i`-strings meeting `set`.
    pub fn strings_meeting(&self, i: usize, set: &BTreeSet<LsPath>) -> Vec<IString> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for p in set {
            if seen.contains(p) {
                continue;
            }
            let s = self.string_through(i, p);
            seen.extend(s.elems.iter().cloned());
            out.push(s);
        }
        out
    }

    /// `(z_0, z_1, …, z_m)` with `z_0 = z` and `z_j = up(z_{j-1}, σ_j)`,
    /// starting from the `φ` end.
    pub fn up_sequence(&self, z: &WeylElt, p: &LsPath) -> Result<Vec<WeylElt>> {
        if !self.r.bruhat_leq(&self.r.coset_min_rep(z, self.j), p.phi().min_rep()) {
            return Err(Error::Precondition("up(z, p) needs zW_λ ≤ φ(p)"));
        }
        let mut seq = alloc::vec![z.clone()];
        for sigma in p.dirs() {
            let next = self.r.up_unchecked(seq.last().unwrap(), sigma);
            seq.push(next);
        }
        Ok(seq)
    }

    /// `up(z, p)`.
    pub fn up_path(&self, z: &WeylElt, p: &LsPath) -> Result<WeylElt> {
        Ok(self.up_sequence(z, p)?.pop().unwrap())
    }

    /// `(w_{m+1}, w_m, …, w_1)` with `w_{m+1} = w` and `w_j = down(w_{j+1}, σ_j)`,
    /// starting from the `ι` end.
    pub fn down_sequence(&self, w: &WeylElt, p: &LsPath) -> Result<Vec<WeylElt>> {
        if !self.r.bruhat_leq(p.iota().min_rep(), &self.r.coset_min_rep(w, self.j)) {
            return Err(Error::Precondition("down(w, p) needs ι(p) ≤ wW_λ"));
        }
        let mut seq = alloc::vec![w.clone()];
        for sigma in p.dirs().iter().rev() {
            let next = self.r.down(seq.last().unwrap(), sigma)?;
            seq.push(next);
        }
        Ok(seq)
    }

    /// `down(w, p)`.
    pub fn down_path(&self, w: &WeylElt, p: &LsPath) -> Result<WeylElt> {
        Ok(self.down_sequence(w, p)?.pop().unwrap())
    }

    /// `Pu^λ_{w,z}`, filtered from the Demazure crystal of `w`.
    pub fn paths_up(&self, w: &WeylElt, z: &WeylElt) -> BTreeSet<LsPath> {
        self.paths_up_in(&self.demazure(w), w, z)
    }

    pub fn paths_up_in(&self, set: &BTreeSet<LsPath>, w: &WeylElt, z: &WeylElt) -> BTreeSet<LsPath> {
        set.iter()
            .filter(|p| self.up_path(z, p).map(|u| &u == w).unwrap_or(false))
            .cloned()
            .collect()
    }

    /// `Pd^λ_{w,z}`, filtered from the Demazure crystal of `w`.
    pub fn paths_down(&self, w: &WeylElt, z: &WeylElt) -> BTreeSet<LsPath> {
        self.paths_down_in(&self.demazure(w), w, z)
    }

    pub fn paths_down_in(&self, set: &BTreeSet<LsPath>, w: &WeylElt, z: &WeylElt) -> BTreeSet<LsPath> {
        set.iter()
            .filter(|p| self.down_path(w, p).map(|d| &d == z).unwrap_or(false))
            .cloned()
            .collect()
    }

    /// Paths of the opposite Demazure crystal of highest weight `zλ` with
    /// `ℓ(up(z, p)) ≤ bound`, and whether some path needs a longer lift.
    pub fn opposite_demazure(&self, z: &WeylElt, bound: usize, cap: usize) -> Result<(BTreeSet<LsPath>, bool)> {
        if bound < z.length() {
            return Err(Error::Precondition("length bound is below ℓ(z)"));
        }
        let ball = self.r.bfs_ball(bound + 1, cap)?;
        let mut pool = BTreeSet::new();
        for w in ball.iter() {
            pool.extend(self.demazure(w));
        }
        let mut out = BTreeSet::new();
        let mut truncated = false;
        for p in pool {
            if let Ok(u) = self.up_path(z, &p) {
                if u.length() <= bound {
                    out.insert(p);
                } else {
                    truncated = true;
                }
            }
        }
        Ok((out, truncated))
    }

    /// `f_i`-edges inside `set`.
    pub fn crystal_edges(&self, set: &BTreeSet<LsPath>) -> Vec<(LsPath, usize, LsPath)> {
        let mut out = Vec::new();
        for p in set {
            for i in 0..self.r.rank() {
                if let Some(q) = self.f(i, p) {
                    if set.contains(&q) {
                        out.push((p.clone(), i, q));
                    }
                }
            }
        }
        out
    }
}
