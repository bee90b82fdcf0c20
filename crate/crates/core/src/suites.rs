//! Named verification suites over one parameter set.

use rayon::prelude::*;

use crate::boltzmann::{self, Model, ModelParams};
use crate::error::Result;
use crate::report::{Check, Report};
use crate::{exterior, fusion, statesum, su2};

pub const SUITES: [&str; 9] = [
    "ybe",
    "inversion",
    "frt",
    "det",
    "omega",
    "braiding-scalars",
    "modular",
    "su2",
    "statesum-invariance",
];

/// Whether `suite` makes sense for these parameters.
pub fn applies(suite: &str, p: &ModelParams) -> bool {
    match suite {
        "su2" => p.n == 2,
        "statesum-invariance" => p.n == 2 && (p.l.is_multiple_of(2) || p.eps == 1),
        "ybe" | "inversion" | "frt" | "det" | "omega" | "braiding-scalars" => p.l >= 2 || p.n == 2,
        _ => true,
    }
}

/// Runs one suite. `seed` drives the sampled checks.
pub fn run_suite(suite: &str, p: &ModelParams, model: Option<&Model>, seed: u64) -> Result<Report> {
    let owned;
    let model = match model {
        Some(m) => m,
        None => {
            owned = Model::new(p.clone())?;
            &owned
        }
    };
    Ok(match suite {
        "ybe" => {
            let mut r = boltzmann::check_ybe(model);
            r.merge(boltzmann::check_sigma(model));
            r
        }
        "inversion" => boltzmann::check_inversion(model),
        "frt" => boltzmann::check_frt(model),
        "det" => {
            let mut r = Report::new("det");
            let mut c = Check::new("relation", "ζ^N = ε^{N−1} t");
            c.record(p.det_relation_holds(), || {
                format!(
                    "ζ^N = ε^{{N−1}} t fails: zeta exponent {}, t exponent {}",
                    p.kz, p.kt
                )
            });
            r.push(c);
            r.merge(exterior::check_det_pairing(model, 2));
            r
        }
        "omega" => {
            let mut r = exterior::check_omega_action(model);
            r.push(exterior::check_confluence(&model.g, p.eps, p.n + 1));
            r
        }
        "braiding-scalars" => {
            let mut r = exterior::check_braiding_scalars(model);
            r.merge(exterior::drinfeld_check(model));
            r
        }
        "modular" => fusion::check_modular(p),
        "su2" => su2::check_su2(p),
        "statesum-invariance" => {
            let mut r = statesum::check_invariance(p);
            if r.passed() {
                r.push(statesum::check_sampled_closures(p, seed, 8));
            }
            r
        }
        other => return Err(crate::Error::Params(format!("unknown suite '{other}'"))),
    })
}

/// Runs the selected suites in parallel; reports come back in the order given.
pub fn run_suites(suites: &[&str], p: &ModelParams, seed: u64) -> Result<Vec<Report>> {
    let model = Model::new(p.clone())?;
    suites
        .par_iter()
        .map(|s| run_suite(s, p, Some(&model), seed))
        .collect()
}
