//! Weight-preserving bijections `Inc_{w,z} ≅ Pu_{w,z}` and
//! `Dec_{w,z} ≅ Pd_{w,z}`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{AdaptedSequence, AlcoveModel, Hyperplane, ReflOrder};
use crate::cartan::Rational;
use crate::error::{Error, Result};
use crate::lspath::LsPath;
use crate::weyl::WeylElt;

/// Distinct values of `key` over `hs`, in order of first appearance, with
/// the index just past the last hyperplane of each value.
fn groups(hs: &[Hyperplane], key: impl Fn(&Hyperplane) -> Rational) -> Vec<(Rational, usize)> {
    let mut out: Vec<(Rational, usize)> = Vec::new();
    for (n, h) in hs.iter().enumerate() {
        let b = key(h);
        match out.last_mut() {
            Some((last, end)) if *last == b => *end = n + 1,
            _ => out.push((b, n + 1)),
        }
    }
    out
}

impl<'a> AlcoveModel<'a> {
    /// `H ↦ p` for a lex-increasing `H`: group by relative height, with
    /// `σ_j` the coset of the chain element after the group of height `b_j`.
    pub fn inc_to_ls(&self, seq: &AdaptedSequence) -> Result<LsPath> {
        let hs = seq.hyperplanes();
        let g = groups(hs, |h| h.rel_height());
        if g.windows(2).any(|p| p[0].0 >= p[1].0) {
            return Err(Error::Precondition("relative heights must weakly increase"));
        }
        let mut breaks = alloc::vec![Rational::zero()];
        let mut ends = alloc::vec![0usize];
        for (b, end) in g {
            if b.is_zero() {
                ends[0] = end;
            } else {
                breaks.push(b);
                ends.push(end);
            }
        }
        let dirs = ends.iter().map(|&n| self.ls.coset(&seq.chain()[n])).collect();
        Ok(LsPath::new(breaks, dirs))
    }

    /// `p ↦ H` for `p ∈ Pu_{w,z}`: lift along the directions and join the
    /// `<_λ`-increasing chains, with heights `b_j⟨β, λ⟩`.
    pub fn ls_to_inc(&self, p: &LsPath, z: &WeylElt) -> Result<AdaptedSequence> {
        let mut seq = AdaptedSequence::empty(z.clone());
        for (j, sigma) in p.dirs().iter().enumerate() {
            let b = p.breaks()[j];
            let next = self.r.up(seq.end(), sigma)?;
            for beta in self.increasing_chain(seq.end(), &next, ReflOrder::Lambda)? {
                let k = b * Rational::from(self.r.pairing(&beta, &self.lambda));
                if !k.is_integer() {
                    return Err(Error::Internal("label outside Φ_b"));
                }
                let h = self.hyperplane(&beta, k.to_integer())?;
                seq.push(self.r, h);
            }
        }
        Ok(seq)
    }

    /// `H ↦ p` for a lex-decreasing `H`: group by relative coheight.
    pub fn dec_to_ls(&self, seq: &AdaptedSequence) -> Result<LsPath> {
        let hs = seq.hyperplanes();
        let g = groups(hs, |h| h.rel_coheight());
        if g.windows(2).any(|p| p[0].0 >= p[1].0) {
            return Err(Error::Precondition("relative coheights must weakly increase"));
        }
        let mut breaks = alloc::vec![Rational::zero()];
        let mut ends = alloc::vec![0usize];
        for (b, end) in g {
            if !b.is_one() {
                breaks.push(b);
                ends.push(end);
            }
        }
        let dirs = ends.iter().map(|&n| self.ls.coset(&seq.chain()[n])).collect();
        Ok(LsPath::new(breaks, dirs))
    }

    /// `p ↦ H` for `p ∈ Pd_{w,z}`: lower from `w` along the directions and
    /// join the chains increasing in the dual order, with heights
    /// `(1 - b_{j+1})⟨β, λ⟩`.
    pub fn ls_to_dec(&self, p: &LsPath, w: &WeylElt) -> Result<AdaptedSequence> {
        let seq_w = self.ls.down_sequence(w, p)?;
        // seq_w = (w_{m+1}, w_m, …, w_1)
        let ws: Vec<&WeylElt> = seq_w.iter().rev().collect();
        let mut seq = AdaptedSequence::empty(ws[0].clone());
        for j in 0..p.num_steps() {
            let b = p.upper_break(j);
            for beta in self.increasing_chain(ws[j], ws[j + 1], ReflOrder::Dual)? {
                let k = (Rational::one() - b) * Rational::from(self.r.pairing(&beta, &self.lambda));
                if !k.is_integer() {
                    return Err(Error::Internal("label outside Φ_b"));
                }
                let h = self.hyperplane(&beta, k.to_integer())?;
                seq.push(self.r, h);
            }
        }
        Ok(seq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::tests::aff;
    use crate::alcove::Monotone;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn worked_examples() {
        let (r, lam) = aff();
        let m = AlcoveModel::new(&r, &lam).unwrap();
        let e = |w: &[usize]| r.element(w).unwrap();
        let w = e(&[0, 1, 2, 1]);
        let c = |v: &[i64]| r.coroot_from_coords(v).unwrap();
        let mut h = AdaptedSequence::empty(e(&[1, 2]));
        h.push(&r, m.hyperplane(&c(&[0, 1, 0]), 0).unwrap());
        h.push(&r, m.hyperplane(&c(&[1, 2, 2]), 2).unwrap());
        assert_eq!(h.end(), &w);
        let p1 = m.ls().from_vectors(&[(q(1, 3), e(&[0, 2, 1])), (q(2, 3), e(&[2, 1]))]);
        assert_eq!(m.inc_to_ls(&h).unwrap(), p1);
        assert_eq!(m.ls_to_inc(&p1, &e(&[1, 2])).unwrap(), h);
        // the straight path at z = e gives the empty sequence
        assert!(m.ls_to_inc(&m.ls().straight(), &r.identity()).unwrap().is_empty());

        let mut d = AdaptedSequence::empty(e(&[0, 2]));
        d.push(&r, m.hyperplane(&c(&[0, 1, 1]), 0).unwrap());
        d.push(&r, m.hyperplane(&c(&[0, 1, 0]), 0).unwrap());
        let s0 = m.ls().from_vectors(&[(q(1, 1), e(&[0]))]);
        assert_eq!(m.dec_to_ls(&d).unwrap(), s0);
        assert_eq!(m.ls_to_dec(&s0, &w).unwrap(), d);
    }

    #[test]
    fn affine_round_trips() {
        let (r, lam) = aff();
        let m = AlcoveModel::new(&r, &lam).unwrap();
        let w = r.element(&[0, 1, 2, 1]).unwrap();
        let mut n = 0;
        for seq in m.enumerate_tree(&w, Monotone::Increasing).sequences(&r) {
            let p = m.inc_to_ls(&seq).unwrap();
            assert_eq!(m.ls().validate(&p), Ok(()));
            assert_eq!(m.ls().up_path(seq.base(), &p).unwrap(), w);
            assert_eq!(m.ls().endpoint(&p), m.wt_inc(&seq));
            assert_eq!(m.ls_to_inc(&p, seq.base()).unwrap(), seq);
            n += 1;
        }
        assert_eq!(n, 8);
        for (z, p) in m.ls().dominant_pairs(&w) {
            assert_eq!(m.inc_to_ls(&m.ls_to_inc(&p, &z).unwrap()).unwrap(), p);
        }
        let mut n = 0;
        for seq in m.enumerate_tree(&w, Monotone::Decreasing).sequences(&r) {
            let p = m.dec_to_ls(&seq).unwrap();
            assert_eq!(m.ls().validate(&p), Ok(()));
            assert_eq!(&m.ls().down_path(&w, &p).unwrap(), seq.base());
            assert_eq!(m.ls().endpoint(&p), m.wt_dec(&seq));
            assert_eq!(m.ls_to_dec(&p, &w).unwrap(), seq);
            n += 1;
        }
        assert_eq!(n, 9);
    }

    #[test]
    fn finite_round_trips() {
        use crate::Realization;
        for (name, fund) in [("A2", &[1, 1][..]), ("A2", &[1, 0][..]), ("B2", &[1, 1][..]), ("B2", &[1, 0][..])] {
            let r = Realization::preset(name).unwrap();
            let lam = r.weight(fund, &[]).unwrap();
            let m = AlcoveModel::new(&r, &lam).unwrap();
            let ball = r.bfs_ball(8, crate::DEFAULT_LAYER_CAP).unwrap();
            for w in ball.iter() {
                let inc = m.enumerate_tree(w, Monotone::Increasing).sequences(&r);
                let ls = m.ls().dominant_pairs(w);
                assert_eq!(inc.len(), ls.len(), "{name} {w:?}");
                for seq in &inc {
                    let p = m.inc_to_ls(seq).unwrap();
                    assert!(ls.contains(&(seq.base().clone(), p.clone())));
                    assert_eq!(m.ls().endpoint(&p), m.wt_inc(seq));
                    assert_eq!(&m.ls_to_inc(&p, seq.base()).unwrap(), seq);
                }
                let dec = m.enumerate_tree(w, Monotone::Decreasing).sequences(&r);
                let ls = m.ls().antidominant_pairs(w);
                assert_eq!(dec.len(), ls.len(), "{name} {w:?}");
                for seq in &dec {
                    let p = m.dec_to_ls(seq).unwrap();
                    assert!(ls.contains(&(seq.base().clone(), p.clone())));
                    assert_eq!(m.ls().endpoint(&p), m.wt_dec(seq));
                    assert_eq!(&m.ls_to_dec(&p, w).unwrap(), seq);
                }
            }
        }
    }
}
