//! How the path sets `Pu` and `Pd` meet a single `i`-string.
//!
//! For an `i`-string `S` with head `h`, tail `t` and middle `m = S \ {h, t}`,
//! the four sets in each column of the up chart are
//! `Pu_{x,z}(S), Pu_{s_ix,z}(S), Pu_{x,s_iz}(S), Pu_{s_ix,s_iz}(S)` (with
//! `s_iz > z`, `s_ix > x`), and for the down chart
//! `Pd_{w,x}(S), Pd_{w,s_ix}(S), Pd_{s_iw,x}(S), Pd_{s_iw,s_ix}(S)` (with
//! `s_iw < w`, `s_ix < x`).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{IString, LsModel, LsPath};
use crate::kring::LaurentPoly;
use crate::weyl::WeylElt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChartCase {
    U11,
    U12,
    U13,
    U21,
    U22,
    U23,
    U31,
    U32,
    D11,
    D12,
    D13,
    D21,
    D22,
    D23,
    D31,
    D32,
}

/// Which of the two charts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChartKind {
    Up,
    Down,
}

/// Position classes inside a string.
#[derive(Clone, Copy)]
enum Part {
    Empty,
    All,
    Head,
    Tail,
    HeadTail,
    Middle,
    NoHead,
    NoTail,
}

use Part::*;

/// Columns `(case, A, B, C, D, minimal |S|)`.
const UP_CHART: [(ChartCase, [Part; 4], usize); 8] = [
    (ChartCase::U11, [All, Empty, Tail, Empty], 1),
    (ChartCase::U12, [All, Empty, All, Empty], 2),
    (ChartCase::U13, [All, Empty, HeadTail, Middle], 3),
    (ChartCase::U21, [Head, NoHead, Empty, Tail], 1),
    (ChartCase::U22, [Head, NoHead, Head, NoHead], 2),
    (ChartCase::U23, [Head, NoHead, NoTail, Tail], 3),
    (ChartCase::U31, [Empty, Empty, NoTail, Empty], 2),
    (ChartCase::U32, [Empty, Empty, Head, Middle], 3),
];

const DOWN_CHART: [(ChartCase, [Part; 4], usize); 8] = [
    (ChartCase::D11, [All, Empty, Head, Empty], 1),
    (ChartCase::D12, [All, Empty, All, Empty], 2),
    (ChartCase::D13, [All, Empty, HeadTail, Middle], 3),
    (ChartCase::D21, [Tail, NoTail, Empty, Head], 1),
    (ChartCase::D22, [Tail, NoTail, Tail, NoTail], 2),
    (ChartCase::D23, [Tail, NoTail, NoHead, Head], 3),
    (ChartCase::D31, [Empty, Empty, NoHead, Empty], 2),
    (ChartCase::D32, [Empty, Empty, Tail, Middle], 3),
];

impl ChartCase {
    pub fn kind(self) -> ChartKind {
        if self <= ChartCase::U32 {
            ChartKind::Up
        } else {
            ChartKind::Down
        }
    }

    /// The pair `(a, b)` of the label `U.a.b` or `D.a.b`.
    pub fn indices(self) -> (u8, u8) {
        let k = self as u8 % 8;
        let table = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)];
        table[k as usize]
    }

    pub fn all() -> impl Iterator<Item = ChartCase> {
        UP_CHART.iter().chain(DOWN_CHART.iter()).map(|c| c.0)
    }
}

impl fmt::Display for ChartCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.indices();
        let k = if self.kind() == ChartKind::Up { 'U' } else { 'D' };
        write!(f, "{k}.{a}.{b}")
    }
}

fn part_set(part: Part, len: usize) -> BTreeSet<usize> {
    let t = len - 1;
    match part {
        Empty => BTreeSet::new(),
        All => (0..len).collect(),
        Head => BTreeSet::from([0]),
        Tail => BTreeSet::from([t]),
        HeadTail => BTreeSet::from([0, t]),
        Middle => (1..t).collect(),
        NoHead => (1..len).collect(),
        NoTail => (0..t).collect(),
    }
}

/// All chart columns matching four index sets of a string of length `len`.
pub fn matching_columns(kind: ChartKind, sets: &[BTreeSet<usize>; 4], len: usize) -> Vec<ChartCase> {
    let chart = match kind {
        ChartKind::Up => &UP_CHART,
        ChartKind::Down => &DOWN_CHART,
    };
    chart
        .iter()
        .filter(|(_, parts, min)| len >= *min && parts.iter().zip(sets).all(|(p, s)| part_set(*p, len) == *s))
        .map(|c| c.0)
        .collect()
}

/// Tally of a chart sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChartReport {
    pub counts: BTreeMap<ChartCase, usize>,
    /// Configurations matching no column, or more than one.
    pub unclassified: Vec<String>,
    /// Configurations where the stringwise nilHecke recurrence fails.
    pub recurrence_failures: Vec<String>,
}

impl ChartReport {
    pub fn total(&self) -> usize {
        self.counts.values().sum::<usize>() + self.unclassified.len()
    }

    pub fn is_clean(&self) -> bool {
        self.unclassified.is_empty() && self.recurrence_failures.is_empty()
    }

    pub fn merge(&mut self, other: ChartReport) {
        for (c, n) in other.counts {
            *self.counts.entry(c).or_default() += n;
        }
        self.unclassified.extend(other.unclassified);
        self.recurrence_failures.extend(other.recurrence_failures);
    }

    /// Observed cases of the given chart.
    pub fn cases(&self, kind: ChartKind) -> BTreeSet<ChartCase> {
        self.counts.keys().copied().filter(|c| c.kind() == kind).collect()
    }
}

impl<'a> LsModel<'a> {
    fn in_pu(&self, p: &LsPath, x: &WeylElt, z: &WeylElt) -> bool {
        matches!(self.up_path(z, p), Ok(u) if &u == x)
    }

    fn in_pd(&self, p: &LsPath, w: &WeylElt, x: &WeylElt) -> bool {
        matches!(self.down_path(w, p), Ok(d) if &d == x)
    }

    fn index_set(s: &IString, pred: impl Fn(&LsPath) -> bool) -> BTreeSet<usize> {
        s.elems().iter().enumerate().filter(|(_, p)| pred(p)).map(|(k, _)| k).collect()
    }

    /// The four up-chart sets; requires `s_iz > z` and `s_ix > x`.
    pub fn up_chart_sets(&self, s: &IString, z: &WeylElt, x: &WeylElt) -> [BTreeSet<usize>; 4] {
        let i = s.node();
        let sz = self.r.left_mul(i, z);
        let sx = self.r.left_mul(i, x);
        [
            Self::index_set(s, |p| self.in_pu(p, x, z)),
            Self::index_set(s, |p| self.in_pu(p, &sx, z)),
            Self::index_set(s, |p| self.in_pu(p, x, &sz)),
            Self::index_set(s, |p| self.in_pu(p, &sx, &sz)),
        ]
    }

    /// The four down-chart sets; requires `s_iw < w` and `s_ix < x`.
    pub fn down_chart_sets(&self, s: &IString, w: &WeylElt, x: &WeylElt) -> [BTreeSet<usize>; 4] {
        let i = s.node();
        let sw = self.r.left_mul(i, w);
        let sx = self.r.left_mul(i, x);
        [
            Self::index_set(s, |p| self.in_pd(p, w, x)),
            Self::index_set(s, |p| self.in_pd(p, w, &sx)),
            Self::index_set(s, |p| self.in_pd(p, &sw, x)),
            Self::index_set(s, |p| self.in_pd(p, &sw, &sx)),
        ]
    }

    /// The up-chart column of `(S, z, x)`, if exactly one matches.
    pub fn classify_up(&self, s: &IString, z: &WeylElt, x: &WeylElt) -> Option<ChartCase> {
        let cols = matching_columns(ChartKind::Up, &self.up_chart_sets(s, z, x), s.len());
        (cols.len() == 1).then(|| cols[0])
    }

    /// The down-chart column of `(S, w, x)`, if exactly one matches.
    pub fn classify_down(&self, s: &IString, w: &WeylElt, x: &WeylElt) -> Option<ChartCase> {
        let cols = matching_columns(ChartKind::Down, &self.down_chart_sets(s, w, x), s.len());
        (cols.len() == 1).then(|| cols[0])
    }

    fn sum_weights(&self, s: &IString, set: &BTreeSet<usize>, sign: i64, negate: bool) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for &k in set {
            let mu = self.endpoint(&s.elems()[k]);
            out.add_term(if negate { -&mu } else { mu }, sign);
        }
        out
    }

    /// Classifies every configuration arising from the `i`-strings through
    /// `crystal`, with `z` (up chart) or `w` (down chart) ranging over `bases`,
    /// and checks the stringwise nilHecke recurrences.
    pub fn chart_sweep(&self, crystal: &BTreeSet<LsPath>, bases: &BTreeSet<WeylElt>) -> ChartReport {
        let mut report = ChartReport::default();
        for i in 0..self.r.rank() {
            for s in self.strings_meeting(i, crystal) {
                for b in bases {
                    let sb = self.r.left_mul(i, b);
                    if sb.length() > b.length() {
                        self.sweep_up(&s, b, &sb, &mut report);
                    } else {
                        self.sweep_down(&s, b, &sb, &mut report);
                    }
                }
            }
        }
        report
    }

    fn sweep_up(&self, s: &IString, z: &WeylElt, sz: &WeylElt, report: &mut ChartReport) {
        let i = s.node();
        let mut xs = BTreeSet::new();
        for p in s.elems() {
            for base in [z, sz] {
                if let Ok(y) = self.up_path(base, p) {
                    let sy = self.r.left_mul(i, &y);
                    xs.insert(if sy.length() > y.length() { y } else { sy });
                }
            }
        }
        for x in xs {
            let sets = self.up_chart_sets(s, z, &x);
            let cols = matching_columns(ChartKind::Up, &sets, s.len());
            if cols.len() == 1 {
                *report.counts.entry(cols[0]).or_default() += 1;
            } else {
                report.unclassified.push(self.describe(s, "z", z, &x, &sets));
            }
            // Σ(Pu_{s x,z}) = T_i Σ(Pu_{x,z}),
            // Σ(Pu_{s x,s z}) = T_i Σ(Pu_{x,s z}) + s_i(Σ(Pu_{x,z}) - Σ(Pu_{x,s z}))
            let [a, b, c, d] = sets.clone().map(|set| self.sum_weights(s, &set, 1, false));
            let ok1 = b == self.r.apply_ti(i, &a);
            let ok2 = d == &self.r.apply_ti(i, &c) + &self.r.reflect_poly(i, &(&a - &c));
            if !(ok1 && ok2) {
                report.recurrence_failures.push(self.describe(s, "z", z, &x, &sets));
            }
        }
    }

    fn sweep_down(&self, s: &IString, w: &WeylElt, sw: &WeylElt, report: &mut ChartReport) {
        let i = s.node();
        let mut xs = BTreeSet::new();
        for p in s.elems() {
            for base in [w, sw] {
                if let Ok(y) = self.down_path(base, p) {
                    let sy = self.r.left_mul(i, &y);
                    xs.insert(if sy.length() < y.length() { y } else { sy });
                }
            }
        }
        for x in xs {
            let sets = self.down_chart_sets(s, w, &x);
            let cols = matching_columns(ChartKind::Down, &sets, s.len());
            if cols.len() == 1 {
                *report.counts.entry(cols[0]).or_default() += 1;
            } else {
                report.unclassified.push(self.describe(s, "w", w, &x, &sets));
            }
            // b^w_y = (-1)^{ℓ(w)-ℓ(y)} Σ_{Pd_{w,y}} e^{-p(1)}
            let sx = self.r.left_mul(i, &x);
            let sign = |top: &WeylElt, y: &WeylElt| if (top.length() + y.length()) % 2 == 0 { 1 } else { -1 };
            let [a, b, c, d] = sets;
            let bw_x = self.sum_weights(s, &a, sign(w, &x), true);
            let bw_sx = self.sum_weights(s, &b, sign(w, &sx), true);
            let bsw_x = self.sum_weights(s, &c, sign(sw, &x), true);
            let bsw_sx = self.sum_weights(s, &d, sign(sw, &sx), true);
            let ok1 = bw_sx == self.r.apply_ti(i, &bsw_sx);
            let ok2 = bw_x == &self.r.apply_ti(i, &bsw_x) + &self.r.reflect_poly(i, &(&bsw_sx - &bsw_x));
            if !(ok1 && ok2) {
                report.recurrence_failures.push(self.describe(s, "w", w, &x, &[a, b, c, d]));
            }
        }
    }

    fn describe(&self, s: &IString, base_name: &str, base: &WeylElt, x: &WeylElt, sets: &[BTreeSet<usize>; 4]) -> String {
        let elems: Vec<String> = s.elems().iter().map(|p| self.format_path(p)).collect();
        format!(
            "i={} string=[{}] {}={} x={} sets={:?}",
            self.r.label(s.node()),
            elems.join(" -> "),
            base_name,
            self.r.format_word(base),
            self.r.format_word(x),
            sets
        )
    }
}
