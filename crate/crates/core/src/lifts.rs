//! Deodhar lifts `up(v, τ)` and `down(w, τ)`, with brute-force oracles.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::weyl::{Coset, WeylElt, DEFAULT_LAYER_CAP};
use crate::Realization;

impl Realization {
    /// Bruhat-minimum of `{w ≥ v : wW_J = τ}`.
    pub fn up(&self, v: &WeylElt, tau: &Coset) -> Result<WeylElt> {
        let j = tau.parabolic();
        if !self.bruhat_leq(&self.coset_min_rep(v, j), tau.min_rep()) {
            return Err(Error::Precondition("up(v, τ) needs vW_J ≤ τ"));
        }
        Ok(self.up_unchecked(v, tau))
    }

    pub(crate) fn up_unchecked(&self, v: &WeylElt, tau: &Coset) -> WeylElt {
        let mut letters = Vec::new();
        let mut v = v.clone();
        let mut u = tau.min_rep().clone();
        while let Some(&i) = u.word().first() {
            // i is the smallest left descent of u, and s_i u stays in W^J
            u = self.left_mul(i, &u);
            if v.has_left_descent(i) {
                v = self.left_mul(i, &v);
            }
            letters.push(i);
        }
        for &i in letters.iter().rev() {
            v = self.left_mul(i, &v);
        }
        v
    }

    /// The Bruhat interval `[e, w]`, built as the set of subword products of
    /// the canonical word.
    pub fn lower_interval(&self, w: &WeylElt) -> BTreeSet<WeylElt> {
        let mut set = BTreeSet::from([self.identity()]);
        for &a in w.word() {
            let extra: Vec<WeylElt> = set.iter().map(|x| self.right_mul(x, a)).collect();
            set.extend(extra);
        }
        set
    }

    /// Bruhat-maximum of `{x ≤ w : xW_J = τ}`.
    pub fn down(&self, w: &WeylElt, tau: &Coset) -> Result<WeylElt> {
        let j = tau.parabolic();
        if !self.bruhat_leq(tau.min_rep(), &self.coset_min_rep(w, j)) {
            return Err(Error::Precondition("down(w, τ) needs τ ≤ wW_J"));
        }
        let candidates: Vec<WeylElt> = self
            .lower_interval(w)
            .into_iter()
            .filter(|x| &self.coset_min_rep(x, j) == tau.min_rep())
            .collect();
        unique_extreme(candidates, true)
    }

    /// Brute-force `up` over the ball of radius `search_bound`.
    pub fn up_oracle(&self, v: &WeylElt, tau: &Coset, search_bound: usize) -> Result<WeylElt> {
        let j = tau.parabolic();
        let ball = self.bfs_ball(search_bound, DEFAULT_LAYER_CAP)?;
        let candidates: Vec<WeylElt> = ball
            .iter()
            .filter(|w| self.bruhat_leq(v, w) && &self.coset_min_rep(w, j) == tau.min_rep())
            .cloned()
            .collect();
        if candidates.is_empty() {
            return Err(Error::SearchBoundTooSmall);
        }
        let best = unique_extreme(candidates.clone(), false)?;
        if candidates.iter().all(|c| self.bruhat_leq(&best, c)) {
            Ok(best)
        } else {
            Err(Error::Internal("up candidates have no Bruhat minimum"))
        }
    }

    /// Brute-force `down` by scanning the ball of radius `ℓ(w)`.
    pub fn down_oracle(&self, w: &WeylElt, tau: &Coset) -> Result<WeylElt> {
        let j = tau.parabolic();
        let ball = self.bfs_ball(w.length(), DEFAULT_LAYER_CAP)?;
        let candidates: Vec<WeylElt> = ball
            .iter()
            .filter(|x| self.bruhat_leq(x, w) && &self.coset_min_rep(x, j) == tau.min_rep())
            .cloned()
            .collect();
        if candidates.is_empty() {
            return Err(Error::SearchBoundTooSmall);
        }
        let best = unique_extreme(candidates.clone(), true)?;
        if candidates.iter().all(|c| self.bruhat_leq(c, &best)) {
            Ok(best)
        } else {
            Err(Error::Internal("down candidates have no Bruhat maximum"))
        }
    }
}

/// The unique element of maximal (or minimal) length.
fn unique_extreme(candidates: Vec<WeylElt>, max: bool) -> Result<WeylElt> {
    let target = if max {
        candidates.iter().map(|c| c.length()).max()
    } else {
        candidates.iter().map(|c| c.length()).min()
    }
    .ok_or(Error::Internal("no lift candidate"))?;
    let mut best: Vec<WeylElt> = candidates.into_iter().filter(|c| c.length() == target).collect();
    if best.len() != 1 {
        return Err(Error::Internal("lift extremum is not unique"));
    }
    Ok(best.pop().unwrap())
}

/// All subsets of `0..n` as node sets, for exhaustive tests.
pub fn all_parabolics(n: usize) -> Vec<crate::NodeSet> {
    let mut out = vec![];
    for mask in 0u64..(1 << n) {
        out.push(crate::NodeSet::from_nodes((0..n).filter(|i| mask & (1 << i) != 0)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::NodeSet;

    fn aff() -> Realization {
        Realization::preset("A2~").unwrap()
    }

    #[test]
    fn worked_lifts() {
        let r = aff();
        let j = NodeSet::from_nodes([2]);
        let e = |w: &[usize]| r.element(w).unwrap();
        let c = |w: &[usize]| r.coset(&e(w), j);
        assert_eq!(r.up(&e(&[1, 2]), &c(&[2, 1])).unwrap(), e(&[1, 2, 1]));
        assert_eq!(r.up(&e(&[1, 2, 1]), &c(&[0, 2, 1])).unwrap(), e(&[0, 1, 2, 1]));
        // lift sequence from s_1 along the directions s_2s_1, s_0s_2s_1
        let z1 = r.up(&e(&[1]), &c(&[2, 1])).unwrap();
        assert_eq!(z1, e(&[2, 1]));
        assert_eq!(r.up(&z1, &c(&[0, 2, 1])).unwrap(), e(&[0, 2, 1]));
        let w = e(&[0, 1, 2, 1]);
        assert_eq!(r.down(&w, &c(&[0])).unwrap(), e(&[0, 2]));
        assert_eq!(r.down(&w, &c(&[])).unwrap(), e(&[2]));
        assert_eq!(r.down(&w, &r.coset(&w, j)).unwrap(), w);
        let v = e(&[0, 1]);
        assert_eq!(r.up(&v, &r.coset(&v, j)).unwrap(), v);
        assert!(r.up(&e(&[0, 1]), &c(&[1])).is_err());
        assert!(r.down(&e(&[1]), &c(&[0])).is_err());
        assert_eq!(r.up_oracle(&r.identity(), &c(&[]), 0).unwrap(), r.identity());
        assert_eq!(r.up_oracle(&e(&[1]), &c(&[0, 1]), 1), Err(Error::SearchBoundTooSmall));
    }

    #[test]
    fn lower_interval_is_bruhat_interval() {
        let r = aff();
        let ball = r.bfs_ball(5, DEFAULT_LAYER_CAP).unwrap();
        for w in ball.layer(5).iter().take(6) {
            let iv = r.lower_interval(w);
            let expect: BTreeSet<WeylElt> = ball.iter().filter(|x| r.bruhat_leq(x, w)).cloned().collect();
            assert_eq!(iv, expect);
        }
    }

    fn check_parity(r: &Realization, bound: usize, js: &[NodeSet]) {
        let ball = r.bfs_ball(bound, DEFAULT_LAYER_CAP).unwrap();
        for &j in js {
            let taus: Vec<Coset> = ball.iter().filter(|w| r.coset_min_rep(w, j) == **w).map(|w| r.coset(w, j)).collect();
            for v in ball.iter() {
                let vj = r.coset(v, j);
                for tau in &taus {
                    if r.coset_leq(&vj, tau).unwrap() {
                        let u = r.up(v, tau).unwrap();
                        let o = r.up_oracle(v, tau, v.length() + tau.length()).unwrap();
                        assert_eq!(u, o);
                        assert!(r.bruhat_leq(v, &u));
                        assert_eq!(r.coset(&u, j), *tau);
                    }
                    if r.coset_leq(tau, &vj).unwrap() {
                        let d = r.down(v, tau).unwrap();
                        assert_eq!(d, r.down_oracle(v, tau).unwrap());
                        assert!(r.bruhat_leq(&d, v));
                        assert_eq!(r.coset(&d, j), *tau);
                    }
                }
            }
        }
    }

    #[test]
    fn parity_finite() {
        for name in ["A2", "B2"] {
            let r = Realization::preset(name).unwrap();
            let bound = r.finite_positive_coroots().unwrap().len();
            check_parity(&r, bound, &all_parabolics(2));
        }
    }

    #[test]
    fn parity_affine_small() {
        check_parity(&aff(), 3, &[NodeSet::from_nodes([2])]);
    }

    #[test]
    fn lift_lemmas() {
        let r = aff();
        let j = NodeSet::from_nodes([2]);
        let ball = r.bfs_ball(3, DEFAULT_LAYER_CAP).unwrap();
        let taus: Vec<Coset> = ball.iter().filter(|w| r.coset_min_rep(w, j) == **w).map(|w| r.coset(w, j)).collect();
        for v in ball.iter() {
            for tau in &taus {
                if !r.coset_leq(&r.coset(v, j), tau).unwrap() {
                    continue;
                }
                let u = r.up(v, tau).unwrap();
                // minimality against a wider ball
                let wide = r.bfs_ball(u.length() + 2, DEFAULT_LAYER_CAP).unwrap();
                for x in wide.iter() {
                    if r.bruhat_leq(v, x) && r.coset(x, j) == *tau {
                        assert!(r.bruhat_leq(&u, x));
                    }
                }
                for i in 0..3 {
                    let st = r.coset_left_mul(i, tau);
                    let su = r.left_mul(i, &u);
                    if st.length() > tau.length() {
                        assert!(su.length() > u.length());
                    } else if st.length() < tau.length() {
                        assert!(su.length() < u.length());
                    } else if !v.has_left_descent(i) {
                        assert!(su.length() > u.length());
                    }
                    // right-lift lemma
                    let sv = r.left_mul(i, v);
                    if sv.length() > v.length()
                        && r.coset_leq(&r.coset(&sv, j), tau).unwrap()
                        && st.length() <= tau.length()
                    {
                        let u2 = r.up(&sv, tau).unwrap();
                        assert!(u2 == u || u2 == su);
                        if u2 == su && u2 != u {
                            assert_eq!(st, *tau);
                        }
                    }
                }
            }
        }
    }
}
