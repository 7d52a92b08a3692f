//! Built-in scenario matrix and invariant suite.

use std::cmp::Ordering;

use kmchev_core::{
    lex_cmp, AlcoveModel, ChartKind, Hyperplane, LaurentPoly, LsModel, Monotone, Realization, Weight, WeylElt,
    DEFAULT_LAYER_CAP,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::output::word_of;
use crate::CliError;

pub struct Scenario {
    pub name: &'static str,
    pub cartan: &'static str,
    pub weights: &'static [&'static [i64]],
    /// Elements up to this length enter the suite.
    pub max_length: usize,
}

pub const SCENARIOS: &[Scenario] = &[
    Scenario { name: "A2", cartan: "A2", weights: &[&[1, 0], &[0, 1], &[1, 1], &[2, 1]], max_length: 3 },
    Scenario { name: "B2", cartan: "B2", weights: &[&[1, 0], &[0, 1], &[1, 1], &[2, 1]], max_length: 4 },
    Scenario { name: "G2", cartan: "G2", weights: &[&[1, 0], &[0, 1], &[1, 1], &[2, 1]], max_length: 6 },
    Scenario { name: "A2~", cartan: "A2~", weights: &[&[1, 1, 0], &[1, 0, 0]], max_length: 4 },
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// Reverse the lex order on hyperplanes in the alcove model.
    FlippedLex,
}

impl Fault {
    pub fn comparator(self) -> fn(&Hyperplane, &Hyperplane) -> Ordering {
        match self {
            Fault::FlippedLex => |a, b| lex_cmp(b, a),
        }
    }

    fn flag(self) -> &'static str {
        match self {
            Fault::FlippedLex => " --inject-fault flipped-lex",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub detail: String,
    /// Command line reproducing the failure.
    pub reproducer: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub scenario: String,
    pub check: String,
    pub passed: bool,
    pub cases: usize,
    /// Smallest failing cases first, at most a handful.
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub passed: bool,
    pub scenarios: Vec<String>,
    pub checks: Vec<CheckReport>,
}

pub const CHECKS: &[&str] = &["operator-relations", "oracle-triangle", "bijections", "charts"];

const MAX_REPORTED: usize = 5;

/// Runs the suite on the scenarios named in `filter` (all when `None`).
pub fn run(filter: Option<&[String]>, fault: Option<Fault>) -> Result<SelftestReport, CliError> {
    if let Some(names) = filter {
        if let Some(bad) = names.iter().find(|n| !SCENARIOS.iter().any(|s| s.name == n.as_str())) {
            return Err(CliError::Usage(format!("unknown scenario {bad:?}")));
        }
    }
    let mut checks = Vec::new();
    let mut scenarios = Vec::new();
    for sc in SCENARIOS {
        if filter.is_some_and(|f| !f.iter().any(|n| n == sc.name)) {
            continue;
        }
        scenarios.push(sc.name.to_string());
        let r = Realization::preset(sc.cartan)?;
        let elems: Vec<WeylElt> = r.bfs_ball(sc.max_length, DEFAULT_LAYER_CAP)?.iter().cloned().collect();
        let ctx = Ctx { sc, r: &r, elems: &elems, fault };
        checks.push(ctx.operator_relations());
        checks.push(ctx.oracle_triangle()?);
        checks.push(ctx.bijections()?);
        checks.push(ctx.charts()?);
    }
    Ok(SelftestReport { passed: checks.iter().all(|c| c.passed), scenarios, checks })
}

struct Ctx<'a> {
    sc: &'a Scenario,
    r: &'a Realization,
    elems: &'a [WeylElt],
    fault: Option<Fault>,
}

struct Collector {
    cases: usize,
    failures: Vec<(usize, Failure)>,
}

impl Collector {
    fn new() -> Collector {
        Collector { cases: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, size: usize, f: impl FnOnce() -> Failure) {
        self.cases += 1;
        if !ok {
            self.failures.push((size, f()));
        }
    }

    fn finish(mut self, sc: &Scenario, check: &str) -> CheckReport {
        self.failures.sort_by_key(|f| f.0);
        let failures: Vec<Failure> = self.failures.into_iter().take(MAX_REPORTED).map(|f| f.1).collect();
        CheckReport {
            scenario: sc.name.into(),
            check: check.into(),
            passed: failures.is_empty(),
            cases: self.cases,
            failures,
        }
    }
}

fn weight_arg(lam: &[i64]) -> String {
    lam.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn random_poly(rng: &mut ChaCha8Rng, dim: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for _ in 0..rng.gen_range(0..5) {
        let mu: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3..=3)).collect();
        p.add_term(Weight::new(mu), rng.gen_range(-3..=3));
    }
    p
}

/// Order of `s_i s_j`, when finite.
fn braid_order(r: &Realization, i: usize, j: usize) -> Option<usize> {
    match r.gcm().entry(i, j) * r.gcm().entry(j, i) {
        0 => Some(2),
        1 => Some(3),
        2 => Some(4),
        3 => Some(6),
        _ => None,
    }
}

impl Ctx<'_> {
    fn reproducer(&self, cmd: &str, lam: &[i64], sign: &str, w: &WeylElt) -> String {
        format!(
            "kmchev {cmd} --cartan {} --weight {} --sign {sign} --model all --w \"{}\"{}",
            self.sc.cartan,
            weight_arg(lam),
            word_of(self.r, w),
            self.fault.map_or("", |f| f.flag())
        )
    }

    fn alcove<'b>(&'b self, lam: &Weight) -> Result<AlcoveModel<'b>, CliError> {
        let m = AlcoveModel::new(self.r, lam)?;
        Ok(match self.fault {
            Some(f) => m.with_comparator(f.comparator()),
            None => m,
        })
    }

    fn operator_relations(&self) -> CheckReport {
        let r = self.r;
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut col = Collector::new();
        let repro = || format!("kmchev selftest --scenarios {}", self.sc.name);
        for _ in 0..50 {
            let f = random_poly(&mut rng, r.dim());
            let mu = Weight::new((0..r.dim()).map(|_| rng.gen_range(-3..=3)).collect());
            let e_mu = LaurentPoly::monomial(mu.clone());
            for i in 0..r.rank() {
                let tf = r.apply_ti(i, &f);
                col.check(r.apply_ti(i, &tf) == -&tf, 0, || Failure {
                    detail: format!("T_{0}² ≠ -T_{0} on {1}", r.label(i), r.format_poly(&f)),
                    reproducer: repro(),
                });
                let lhs = r.apply_ti(i, &e_mu.mul(&f));
                let rhs = &r.apply_ti(i, &e_mu).mul(&f) + &LaurentPoly::monomial(r.simple_reflection(i, &mu)).mul(&tf);
                col.check(lhs == rhs, 0, || Failure {
                    detail: format!("commutation fails for T_{} on e^{} · {}", r.label(i), mu, r.format_poly(&f)),
                    reproducer: repro(),
                });
                for j in (i + 1)..r.rank() {
                    let Some(m) = braid_order(r, i, j) else { continue };
                    let alt = |a: usize, b: usize| {
                        let mut g = f.clone();
                        for k in 0..m {
                            g = r.apply_ti(if k % 2 == 0 { a } else { b }, &g);
                        }
                        g
                    };
                    col.check(alt(i, j) == alt(j, i), 0, || Failure {
                        detail: format!("braid relation fails for ({}, {})", r.label(i), r.label(j)),
                        reproducer: repro(),
                    });
                }
            }
        }
        col.finish(self.sc, "operator-relations")
    }

    fn oracle_triangle(&self) -> Result<CheckReport, CliError> {
        let r = self.r;
        let mut col = Collector::new();
        for &fund in self.sc.weights {
            let lam = r.weight(fund, &[])?;
            let ls = LsModel::new(r, &lam)?;
            let alc = self.alcove(&lam)?;
            for w in self.elems {
                for (sign, nh_lam) in [("dominant", lam.clone()), ("antidominant", -&lam)] {
                    let nh = r.chevalley_recurrence(w, &nh_lam)?;
                    let (l, a) = if sign == "dominant" {
                        (ls.chevalley_dominant(w), alc.chevalley_dominant(w))
                    } else {
                        (ls.chevalley_antidominant(w), alc.chevalley_antidominant(w))
                    };
                    let ok = l == nh && a == nh;
                    col.check(ok, w.length(), || {
                        let which: Vec<&str> =
                            [("ls", &l), ("alcove", &a)].iter().filter(|x| *x.1 != nh).map(|x| x.0).collect();
                        Failure {
                            detail: format!(
                                "λ = {}, {sign}, w = {}: {} differs from nilhecke",
                                r.format_weight(&lam),
                                word_of(r, w),
                                which.join(" and ")
                            ),
                            reproducer: self.reproducer("chevalley", fund, sign, w),
                        }
                    });
                }
            }
        }
        Ok(col.finish(self.sc, "oracle-triangle"))
    }

    fn bijections(&self) -> Result<CheckReport, CliError> {
        let r = self.r;
        let mut col = Collector::new();
        for &fund in self.sc.weights {
            let lam = r.weight(fund, &[])?;
            let m = self.alcove(&lam)?;
            for w in self.elems {
                for mono in [Monotone::Increasing, Monotone::Decreasing] {
                    let tree = m.enumerate_tree(w, mono).sequences(r);
                    let expected = match mono {
                        Monotone::Increasing => m.ls().dominant_pairs(w).len(),
                        Monotone::Decreasing => m.ls().antidominant_pairs(w).len(),
                    };
                    let mut ok = tree.len() == expected;
                    for seq in &tree {
                        let round = match mono {
                            Monotone::Increasing => m.inc_to_ls(seq).and_then(|p| {
                                let back = m.ls_to_inc(&p, seq.base())?;
                                Ok(back == *seq && m.ls().endpoint(&p) == m.wt_inc(seq))
                            }),
                            Monotone::Decreasing => m.dec_to_ls(seq).and_then(|p| {
                                let back = m.ls_to_dec(&p, w)?;
                                Ok(back == *seq && m.ls().endpoint(&p) == m.wt_dec(seq))
                            }),
                        };
                        ok &= round.unwrap_or(false);
                    }
                    let sign = if mono == Monotone::Increasing { "dominant" } else { "antidominant" };
                    col.check(ok, w.length(), || Failure {
                        detail: format!(
                            "λ = {}, w = {}: {sign} bijection fails",
                            r.format_weight(&lam),
                            word_of(r, w)
                        ),
                        reproducer: self.reproducer("crystal", fund, sign, w),
                    });
                }
            }
        }
        Ok(col.finish(self.sc, "bijections"))
    }

    fn charts(&self) -> Result<CheckReport, CliError> {
        let r = self.r;
        let mut col = Collector::new();
        // maximal elements of the scenario ball carry every smaller crystal
        let top: Vec<&WeylElt> = self
            .elems
            .iter()
            .filter(|w| w.length() == self.sc.max_length || (0..r.rank()).all(|i| r.left_mul(i, w).length() < w.length()))
            .collect();
        for &fund in self.sc.weights {
            let lam = r.weight(fund, &[])?;
            let regular = fund.iter().all(|&c| c > 0);
            let m = LsModel::new(r, &lam)?;
            for w in &top {
                let rep = m.chart_sweep(&m.demazure(w), &r.lower_interval(w));
                let bad_regular = regular
                    && rep.cases(ChartKind::Up).iter().any(|c| {
                        let (a, b) = c.indices();
                        a > 2 || b > 2
                    });
                col.check(rep.is_clean() && !bad_regular, w.length(), || Failure {
                    detail: format!(
                        "λ = {}, w = {}: {} unclassified, {} recurrence failures{}",
                        r.format_weight(&lam),
                        word_of(r, w),
                        rep.unclassified.len(),
                        rep.recurrence_failures.len(),
                        if bad_regular { ", U.3.x case at regular λ" } else { "" }
                    ),
                    reproducer: format!("kmchev selftest --scenarios {}", self.sc.name),
                });
            }
        }
        Ok(col.finish(self.sc, "charts"))
    }
}

pub fn render_table(rep: &SelftestReport) -> String {
    let mut s = String::new();
    for c in &rep.checks {
        s.push_str(&format!(
            "{} {:<6} {:<20} {} cases\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.scenario,
            c.check,
            c.cases
        ));
        for f in &c.failures {
            s.push_str(&format!("    {}\n    reproduce: {}\n", f.detail, f.reproducer));
        }
    }
    s.push_str(if rep.passed { "selftest passed\n" } else { "selftest FAILED\n" });
    s
}
