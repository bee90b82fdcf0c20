//! Acceptance criteria 1-9, one PASS/FAIL line each.

use std::time::{Duration, Instant};

use facemodel::boltzmann::{all_zeta_models, check_ybe, Model, ModelParams};
use facemodel::exterior::{check_braiding_scalars, check_det_pairing, drinfeld_check};
use facemodel::fusion::{check_modular, check_unitarity, modular_families, unitary_families};
use facemodel::statesum::{admissible_params, check_invariance};
use facemodel::su2::check_su2;
use facemodel::{Check, Report};
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    failures: usize,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            pass: true,
            failures: 0,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, note: impl FnOnce() -> String) {
        if !ok {
            self.pass = false;
            self.failures += 1;
            if self.notes.len() < 8 {
                self.notes.push(note());
            }
        }
    }

    fn checks<'a>(&mut self, p: &ModelParams, checks: impl IntoIterator<Item = &'a Check>) {
        for c in checks {
            self.check(c.passed(), || {
                format!(
                    "N={} L={} eps={} iota={} kz={}: {} [{}] {}",
                    p.n,
                    p.l,
                    p.eps,
                    p.iota,
                    p.kz,
                    c.name,
                    c.anchor,
                    c.failures.first().cloned().unwrap_or_default()
                )
            });
        }
    }
}

fn report(
    k: usize,
    title: &str,
    pre: Duration,
    limit: Option<Duration>,
    f: impl FnOnce() -> Outcome,
) -> bool {
    let t = Instant::now();
    let mut o = f();
    let el = t.elapsed() + pre;
    if let Some(lim) = limit {
        o.check(el <= lim, || format!("runtime {el:.1?} exceeds {lim:?}"));
    }
    println!(
        "{} criterion {k}: {title} ({el:.2?})",
        if o.pass { "PASS" } else { "FAIL" }
    );
    for n in &o.notes {
        println!("    {n}");
    }
    if o.failures > o.notes.len() {
        println!("    ... {} failing checks in total", o.failures);
    }
    o.pass
}

fn models(pairs: &[(usize, u32)], all_zeta: bool) -> Vec<ModelParams> {
    let mut v = Vec::new();
    for &(n, l) in pairs {
        for eps in [1i8, -1] {
            let ms = all_zeta_models(n, l, eps);
            if all_zeta {
                v.extend(ms);
            } else {
                v.extend(ms.into_iter().take(1));
            }
        }
    }
    v
}

fn main() {
    let grid = [(2usize, 2u32), (2, 3), (3, 2), (3, 3)];
    let mut results = Vec::new();

    results.push(report(
        1,
        "Yang-Baxter, (N,L) in {2,3}x{2,3}, both eps, every zeta",
        Duration::ZERO,
        Some(Duration::from_secs(60)),
        || {
            let mut o = Outcome::new();
            let ps = models(&grid, true);
            let reps: Vec<Report> = ps
                .par_iter()
                .map(|p| check_ybe(&Model::new(p.clone()).unwrap()))
                .collect();
            for (p, r) in ps.iter().zip(&reps) {
                o.checks(p, r.checks.iter().filter(|c| c.name == "braid-relation"));
            }
            o.check(!ps.is_empty(), || "no parameter sets".into());
            o
        },
    ));

    results.push(report(
        2,
        "determinant pairing on paths of length <= 2, with negative control",
        Duration::ZERO,
        None,
        || {
            let mut o = Outcome::new();
            let ps = models(&grid, false);
            let reps: Vec<Report> = ps
                .par_iter()
                .map(|p| check_det_pairing(&Model::new(p.clone()).unwrap(), 2))
                .collect();
            for (p, r) in ps.iter().zip(&reps) {
                o.checks(p, &r.checks);
            }
            for (n, l) in [(2usize, 2u32), (3, 2)] {
                let good = all_zeta_models(n, l, 1).remove(0);
                let bad = (0..2 * n as i64 * (n + l as usize) as i64)
                    .filter_map(|kz| ModelParams::new(n, l, 1, 1, good.kt, kz).ok())
                    .find(|p| !p.det_relation_holds())
                    .unwrap();
                let r = check_det_pairing(&Model::new(bad.clone()).unwrap(), 1);
                o.check(!r.passed(), || {
                    format!("negative control N={n} L={l} kz={} passed", bad.kz)
                });
            }
            o
        },
    ));

    results.push(report(
        3,
        "Drinfeld value zeta^-1 t^N / [N], N in {2,3}, L in {1,2,3} (L = 1 for N = 2)",
        Duration::ZERO,
        None,
        || {
            let mut o = Outcome::new();
            let ps = models(&[(2, 1), (2, 2), (2, 3), (3, 2), (3, 3)], true);
            for p in &ps {
                let r = drinfeld_check(&Model::new(p.clone()).unwrap());
                o.checks(p, r.checks.iter().filter(|c| c.name == "value"));
            }
            o
        },
    ));

    let fams = modular_families(4, 3);
    let t4 = Instant::now();
    let modular: Vec<Report> = fams.par_iter().map(check_modular).collect();
    let t4 = t4.elapsed();

    results.push(report(
        4,
        "modular data, N <= 4, L <= 3",
        t4,
        Some(Duration::from_secs(300)),
        || {
            let mut o = Outcome::new();
            for (p, r) in fams.iter().zip(&modular) {
                o.checks(
                    p,
                    r.checks
                        .iter()
                        .filter(|c| !c.name.starts_with("szqr") && !c.name.starts_with("trace")),
                );
            }
            o
        },
    ));

    results.push(report(
        5,
        "braiding scalars: trace = Kac-Peterson S = closed-form sum, N <= 4",
        Duration::ZERO,
        None,
        || {
            let mut o = Outcome::new();
            for (p, r) in fams.iter().zip(&modular) {
                o.checks(
                    p,
                    r.checks
                        .iter()
                        .filter(|c| c.name.starts_with("szqr") || c.name.starts_with("trace")),
                );
            }
            for p in fams.iter().filter(|p| p.l >= 2 || p.n == 2) {
                let r = check_braiding_scalars(&Model::new(p.clone()).unwrap());
                o.checks(p, &r.checks);
            }
            o
        },
    ));

    results.push(report(
        6,
        "SU(2) tables, inverses and c recursions, L <= 4",
        Duration::ZERO,
        None,
        || {
            let mut o = Outcome::new();
            for l in 1..=4u32 {
                for eps in [1i8, -1] {
                    if l % 2 == 1 && eps == -1 {
                        continue;
                    }
                    let kz = (1..)
                        .find(|&k| {
                            ModelParams::from_zeta(2, l, eps, 1, k)
                                .map(|p| p.zeta_primitive())
                                .unwrap_or(false)
                        })
                        .unwrap();
                    let p = ModelParams::from_zeta(2, l, eps, 1, kz).unwrap();
                    o.checks(&p, &check_su2(&p).checks);
                }
            }
            o
        },
    ));

    let ss: Vec<ModelParams> = (1..=3).flat_map(admissible_params).collect();
    let t7 = Instant::now();
    let inv: Vec<Report> = ss.par_iter().map(check_invariance).collect();
    let t7 = t7.elapsed();

    results.push(report(
        7,
        "state-sum invariance, L in {1,2,3}, all admissible eps, iota, zeta",
        t7,
        Some(Duration::from_secs(600)),
        || {
            let mut o = Outcome::new();
            for (p, r) in ss.iter().zip(&inv) {
                o.checks(p, r.checks.iter().filter(|c| c.name != "hopf-s"));
            }
            o.check(ss.len() == 56, || format!("{} parameter sets", ss.len()));
            o
        },
    ));

    results.push(report(
        8,
        "Hopf link table = constant times the N = 2 S-matrix",
        t7,
        None,
        || {
            let mut o = Outcome::new();
            for (p, r) in ss.iter().zip(&inv) {
                o.checks(p, r.checks.iter().filter(|c| c.name == "hopf-s"));
            }
            o
        },
    ));

    results.push(report(
        9,
        "unitarity at t = +-exp(+-pi i/(N+L)), tolerance 1e-9",
        Duration::ZERO,
        None,
        || {
            let mut o = Outcome::new();
            let ps = unitary_families(4, 3);
            let reps: Vec<Report> = ps.par_iter().map(|p| check_unitarity(p, 1e-9)).collect();
            for (p, r) in ps.iter().zip(&reps) {
                o.checks(p, &r.checks);
            }
            o
        },
    ));

    let passed = results.iter().filter(|x| **x).count();
    println!("{passed}/{} criteria passed", results.len());
}
