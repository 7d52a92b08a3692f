//! Tree enumeration of adapted sequences and the alcove Chevalley rows.

use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{AdaptedSequence, AlcoveModel, Hyperplane, Monotone};
use crate::cartan::Realization;
use crate::error::{Error, Result};
use crate::kring::{ChevalleyRow, LaurentPoly};
use crate::weyl::WeylElt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub elt: WeylElt,
    /// Label of the edge towards the parent; `None` at the root.
    pub label: Option<Hyperplane>,
    pub parent: Option<usize>,
}

/// Vertices below a root `w`; each vertex read towards the root is an
/// adapted sequence ending at `w`.
#[derive(Clone, Debug)]
pub struct AlcoveTree {
    pub monotone: Monotone,
    pub nodes: Vec<TreeNode>,
}

impl AlcoveTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> &WeylElt {
        &self.nodes[0].elt
    }

    /// The sequence at vertex `idx`, based at that vertex's element.
    pub fn sequence(&self, r: &Realization, idx: usize) -> AdaptedSequence {
        let mut seq = AdaptedSequence::empty(self.nodes[idx].elt.clone());
        let mut cur = idx;
        while let (Some(h), Some(p)) = (&self.nodes[cur].label, self.nodes[cur].parent) {
            seq.push(r, h.clone());
            cur = p;
        }
        seq
    }

    pub fn sequences(&self, r: &Realization) -> Vec<AdaptedSequence> {
        (0..self.nodes.len()).map(|i| self.sequence(r, i)).collect()
    }

    /// Edges `(parent, child, label)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Hyperplane)> {
        self.nodes
            .iter()
            .enumerate()
            .filter_map(|(i, n)| Some((n.parent?, i, n.label.as_ref()?)))
    }
}

/// Sequences adapted at a fixed base, up to a length bound.
#[derive(Clone, Debug)]
pub struct ZAdapted {
    pub sequences: Vec<AdaptedSequence>,
    /// Some admissible sequence leaves the length bound.
    pub truncated: bool,
}

impl<'a> AlcoveModel<'a> {
    fn admissible(&self, mono: Monotone, h: &Hyperplane, prev: Option<&Hyperplane>) -> bool {
        match prev {
            None => true,
            Some(p) => {
                let want = match mono {
                    Monotone::Increasing => Ordering::Greater,
                    Monotone::Decreasing => Ordering::Less,
                };
                self.order(h, p) == want
            }
        }
    }

    /// Tree rooted at `w`. Children of a vertex `v` are `vs_α` for the
    /// cocovers of `v`, one per hyperplane `(α, k)`. Labels decrease away from
    /// the root for `Increasing` (the reads give `Inc_{w,z}`) and increase for
    /// `Decreasing` (the reads give `Dec_{w,z}`).
    pub fn enumerate_tree(&self, w: &WeylElt, mono: Monotone) -> AlcoveTree {
        let mut nodes = alloc::vec![TreeNode { elt: w.clone(), label: None, parent: None }];
        let mut stack = alloc::vec![0usize];
        // reading upwards, the sequence is monotone in `mono`; seen from the
        // parent a child label must be on the other side
        let child_mono = match mono {
            Monotone::Increasing => Monotone::Decreasing,
            Monotone::Decreasing => Monotone::Increasing,
        };
        while let Some(idx) = stack.pop() {
            let v = nodes[idx].elt.clone();
            let label = nodes[idx].label.clone();
            for (u, alpha) in self.r.cocovers(&v) {
                for h in self.hyperplanes_of(&alpha) {
                    if self.admissible(child_mono, &h, label.as_ref()) {
                        nodes.push(TreeNode { elt: u.clone(), label: Some(h), parent: Some(idx) });
                        stack.push(nodes.len() - 1);
                    }
                }
            }
        }
        AlcoveTree { monotone: mono, nodes }
    }

    pub fn enumerate_tree_dominant(&self, w: &WeylElt) -> AlcoveTree {
        self.enumerate_tree(w, Monotone::Increasing)
    }

    pub fn enumerate_tree_antidominant(&self, w: &WeylElt) -> AlcoveTree {
        self.enumerate_tree(w, Monotone::Decreasing)
    }

    /// All `mono`-monotone `z`-adapted sequences ending in length at most
    /// `bound`.
    pub fn enumerate_z_adapted(&self, z: &WeylElt, mono: Monotone, bound: usize, cap: usize) -> Result<ZAdapted> {
        if bound < z.length() {
            return Err(Error::Precondition("length bound is below ℓ(z)"));
        }
        let graph = self.r.bfs_ball(bound + 1, cap)?.bruhat_graph(self.r);
        let mut sequences = Vec::new();
        let mut truncated = false;
        let mut stack = alloc::vec![AdaptedSequence::empty(z.clone())];
        while let Some(seq) = stack.pop() {
            let v = seq.end().clone();
            for (u, alpha) in graph.covers(&v) {
                for h in self.hyperplanes_of(alpha) {
                    if !self.admissible(mono, &h, seq.hyperplanes().last()) {
                        continue;
                    }
                    if u.length() > bound {
                        truncated = true;
                        continue;
                    }
                    let mut next = seq.clone();
                    next.hs.push(h);
                    next.chain.push(u.clone());
                    stack.push(next);
                }
            }
            sequences.push(seq);
        }
        Ok(ZAdapted { sequences, truncated })
    }

    /// `z ↦ Σ_{H ∈ Inc_{w,z}} e^{wt(H)}`.
    pub fn chevalley_dominant(&self, w: &WeylElt) -> ChevalleyRow {
        let mut row = ChevalleyRow::new();
        for seq in self.enumerate_tree_dominant(w).sequences(self.r) {
            row.add(seq.base().clone(), &LaurentPoly::monomial(self.wt_inc(&seq)));
        }
        row
    }

    /// `z ↦ Σ_{H ∈ Dec_{w,z}} (-1)^{|H|} e^{-wt~(H)}`.
    pub fn chevalley_antidominant(&self, w: &WeylElt) -> ChevalleyRow {
        let mut row = ChevalleyRow::new();
        for seq in self.enumerate_tree_antidominant(w).sequences(self.r) {
            row.add(seq.base().clone(), &Self::signed_dual(&seq, self.wt_dec(&seq)));
        }
        row
    }

    fn signed_dual(seq: &AdaptedSequence, mu: crate::Weight) -> LaurentPoly {
        LaurentPoly::term(-&mu, if seq.len() % 2 == 0 { 1 } else { -1 })
    }

    /// Fixed-`z` coefficients `w ↦ a^w_z` of `[L^λ][O_z]` for `ℓ(w) ≤ bound`.
    pub fn chevalley_dominant_fixed_z(&self, z: &WeylElt, bound: usize, cap: usize) -> Result<(ChevalleyRow, bool)> {
        let za = self.enumerate_z_adapted(z, Monotone::Increasing, bound, cap)?;
        let mut row = ChevalleyRow::new();
        for seq in &za.sequences {
            row.add(seq.end().clone(), &LaurentPoly::monomial(self.wt_inc(seq)));
        }
        Ok((row, za.truncated))
    }

    /// Fixed-`z` coefficients of `[L^{-λ}][O_z]` for `ℓ(w) ≤ bound`.
    pub fn chevalley_antidominant_fixed_z(&self, z: &WeylElt, bound: usize, cap: usize) -> Result<(ChevalleyRow, bool)> {
        let za = self.enumerate_z_adapted(z, Monotone::Decreasing, bound, cap)?;
        let mut row = ChevalleyRow::new();
        for seq in &za.sequences {
            row.add(seq.end().clone(), &Self::signed_dual(seq, self.wt_dec(seq)));
        }
        Ok((row, za.truncated))
    }

    /// Vertices of the Demazure crystal of lowest weight `wλ`: the lex
    /// decreasing sequences adapted to some `[z, w]`.
    pub fn demazure_alcove(&self, w: &WeylElt) -> Vec<AdaptedSequence> {
        self.enumerate_tree_antidominant(w).sequences(self.r)
    }

    /// Vertices of the opposite Demazure crystal of highest weight `zλ`: the
    /// lex increasing `z`-adapted sequences, cut off at length `bound`.
    pub fn opposite_demazure_alcove(&self, z: &WeylElt, bound: usize, cap: usize) -> Result<ZAdapted> {
        self.enumerate_z_adapted(z, Monotone::Increasing, bound, cap)
    }
}

impl Realization {
    /// Row of `[O_{X_{s_i}}] = 1 - e^{Λ_i}[L^{-Λ_i}]` against fixed `w`.
    pub fn divisor_row(&self, i: usize, w: &WeylElt) -> Result<ChevalleyRow> {
        self.check_index(i)?;
        let lam = self.fundamental_weight(i);
        let m = AlcoveModel::new(self, &lam)?;
        let e_lam = LaurentPoly::monomial(lam);
        let mut row = ChevalleyRow::single(w.clone(), LaurentPoly::monomial(self.zero_weight()));
        for (z, p) in m.chevalley_antidominant(w).iter() {
            row.add(z.clone(), &-&e_lam.mul(p));
        }
        Ok(row)
    }
}
