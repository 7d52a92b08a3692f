use std::collections::BTreeSet;

use kmchev_core::{LsModel, Realization, WeylElt};
use proptest::prelude::*;

fn cases() -> Vec<(&'static str, Vec<i64>)> {
    vec![
        ("A2", vec![1, 1]),
        ("A2", vec![2, 1]),
        ("B2", vec![1, 1]),
        ("B2", vec![0, 1]),
        ("G2", vec![1, 0]),
        ("A2~", vec![1, 1, 0]),
        ("A2~", vec![1, 0, 0]),
    ]
}

fn random_element(r: &Realization, word: &[usize]) -> WeylElt {
    let word: Vec<usize> = word.iter().map(|&i| i % r.rank()).collect();
    r.element(&word).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn crystal_axioms(case in 0usize..7, word in prop::collection::vec(0usize..3, 0..5)) {
        let (name, fund) = &cases()[case];
        let r = Realization::preset(name).unwrap();
        let lam = r.weight(fund, &[]).unwrap();
        let m = LsModel::new(&r, &lam).unwrap();
        let w = random_element(&r, &word);
        for p in m.demazure(&w) {
            prop_assert!(m.is_valid(&p));
            for i in 0..r.rank() {
                if let Some(q) = m.f(i, &p) {
                    prop_assert_eq!(m.e(i, &q), Some(p.clone()));
                    prop_assert_eq!(m.endpoint(&q), &m.endpoint(&p) - r.simple_root(i));
                }
                if let Some(q) = m.e(i, &p) {
                    prop_assert_eq!(m.f(i, &q), Some(p.clone()));
                }
            }
        }
    }

    /// Along an i-string `ι` can only change at the first arrow and `φ` only
    /// at the last.
    #[test]
    fn string_end_patterns(case in 0usize..7, word in prop::collection::vec(0usize..3, 0..5)) {
        let (name, fund) = &cases()[case];
        let r = Realization::preset(name).unwrap();
        let lam = r.weight(fund, &[]).unwrap();
        let m = LsModel::new(&r, &lam).unwrap();
        let set = m.demazure(&random_element(&r, &word));
        for i in 0..r.rank() {
            for s in m.strings_meeting(i, &set) {
                let el = s.elems();
                for k in 2..el.len() {
                    prop_assert_eq!(el[k].iota(), el[1].iota());
                }
                for k in 1..el.len().saturating_sub(1) {
                    prop_assert_eq!(el[k].phi(), el[0].phi());
                }
            }
        }
    }

    /// The Demazure crystal of `w` is cut out of a larger one by `ι(p) ≤ wW_λ`.
    #[test]
    fn demazure_membership(case in 0usize..7, word in prop::collection::vec(0usize..3, 0..6), extra in prop::collection::vec(0usize..3, 0..3)) {
        let (name, fund) = &cases()[case];
        let r = Realization::preset(name).unwrap();
        let lam = r.weight(fund, &[]).unwrap();
        let m = LsModel::new(&r, &lam).unwrap();
        let w = random_element(&r, &word);
        let mut big = w.clone();
        for &i in &extra {
            let i = i % r.rank();
            if !big.has_left_descent(i) {
                big = r.left_mul(i, &big);
            }
        }
        prop_assert!(r.bruhat_leq(&w, &big));
        let tau = m.coset(&w);
        let small = m.demazure(&w);
        let cut: BTreeSet<_> =
            m.demazure(&big).into_iter().filter(|p| r.coset_leq(p.iota(), &tau).unwrap()).collect();
        prop_assert_eq!(small, cut);
    }

    #[test]
    fn weyl_canonical_form(case in 0usize..7, a in prop::collection::vec(0usize..3, 0..8), b in prop::collection::vec(0usize..3, 0..8)) {
        let r = Realization::preset(cases()[case].0).unwrap();
        let u = random_element(&r, &a);
        let v = random_element(&r, &b);
        prop_assert!(r.mult(&u, &r.inverse(&u)).is_identity());
        let uv = r.mult(&u, &v);
        prop_assert_eq!(uv.rho_image(), &r.act(&u, v.rho_image()));
        prop_assert!(r.is_reduced(uv.word()));
        prop_assert_eq!(r.element(uv.word()).unwrap(), uv);
    }

    /// `up(v, τ)` lies above `v` in `τ`, `down(w, τ)` below `w` in `τ`.
    #[test]
    fn lift_duality(case in 0usize..7, a in prop::collection::vec(0usize..3, 0..6), b in prop::collection::vec(0usize..3, 0..6), jbits in 0u64..8) {
        let r = Realization::preset(cases()[case].0).unwrap();
        let j = kmchev_core::NodeSet::from_nodes((0..r.rank()).filter(|i| jbits >> i & 1 == 1));
        let v = random_element(&r, &a);
        let t = random_element(&r, &b);
        let tau = r.coset(&t, j);
        if let Ok(u) = r.up(&v, &tau) {
            prop_assert!(r.bruhat_leq(&v, &u));
            prop_assert_eq!(r.coset(&u, j), tau.clone());
        } else {
            prop_assert!(!r.bruhat_leq(&r.coset_min_rep(&v, j), tau.min_rep()));
        }
        if let Ok(d) = r.down(&v, &tau) {
            prop_assert!(r.bruhat_leq(&d, &v));
            prop_assert_eq!(r.coset(&d, j), tau);
        }
    }
}
