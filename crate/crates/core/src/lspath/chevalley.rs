//! Chevalley rows from LS paths.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{LsModel, LsPath};
use crate::kring::{ChevalleyRow, LaurentPoly};
use crate::weyl::WeylElt;

impl<'a> LsModel<'a> {
    /// All `(z, p)` with `p ∈ Pu^λ_{w,z}`.
    pub fn dominant_pairs(&self, w: &WeylElt) -> Vec<(WeylElt, LsPath)> {
        let crystal = self.demazure(w);
        self.dominant_pairs_in(&crystal, w)
    }

    fn dominant_pairs_in(&self, crystal: &BTreeSet<LsPath>, w: &WeylElt) -> Vec<(WeylElt, LsPath)> {
        let mut out = Vec::new();
        for z in self.r.lower_interval(w) {
            for p in crystal {
                if matches!(self.up_path(&z, p), Ok(u) if &u == w) {
                    out.push((z.clone(), p.clone()));
                }
            }
        }
        out
    }

    /// All `(z, p)` with `p ∈ Pd^λ_{w,z}`; every Demazure path occurs once.
    pub fn antidominant_pairs(&self, w: &WeylElt) -> Vec<(WeylElt, LsPath)> {
        self.demazure(w)
            .into_iter()
            .map(|p| (self.down_path(w, &p).expect("Demazure paths satisfy ι(p) ≤ wW_λ"), p))
            .collect()
    }

    /// `z ↦ Σ_{p ∈ Pu_{w,z}} e^{p(1)}`.
    pub fn chevalley_dominant(&self, w: &WeylElt) -> ChevalleyRow {
        let mut row = ChevalleyRow::new();
        for (z, p) in self.dominant_pairs(w) {
            row.add(z, &LaurentPoly::monomial(self.endpoint(&p)));
        }
        row
    }

    /// `z ↦ Σ_{p ∈ Pd_{w,z}} (-1)^{ℓ(w)-ℓ(z)} e^{-p(1)}`.
    pub fn chevalley_antidominant(&self, w: &WeylElt) -> ChevalleyRow {
        let mut row = ChevalleyRow::new();
        for (z, p) in self.antidominant_pairs(w) {
            let sign = if (w.length() - z.length()) % 2 == 0 { 1 } else { -1 };
            row.add(z, &LaurentPoly::term(-&self.endpoint(&p), sign));
        }
        row
    }
}
