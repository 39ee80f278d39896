//! Seeded experiment measuring how much relative perturbations of the
//! samples are amplified in the divided differences.
//!
//! # Reproducibility
//!
//! * Generator: ChaCha with 8 rounds (`rand_chacha::ChaCha8Rng`), seeded with
//!   `seed_from_u64(seed)` (the seed is expanded by PCG32 as specified by
//!   `rand_core` 0.6).
//! * Uniform draw: `u = (next_u64() >> 11) * 2^-53 ∈ [0, 1)`, mapped to
//!   `2u - 1 ∈ [-1, 1)`.
//! * Samples: `f_i = round(e^{x_i} 2^53) / 2^53` at the nodes of `[0, ℓ]`.
//! * Perturbations: `δ_i = round((2u_i - 1) ε ‖f‖∞ 2^53) / 2^53`, drawn
//!   for `i = 0..=n` in order, one trial after another. An all-zero draw is
//!   discarded and redrawn.
//!
//! Everything after the draws is exact. For each trial the amplification is
//! `(‖Δd‖∞ / ‖d‖∞) / (‖δ‖∞ / ‖f‖∞)`, computed for the monic divided
//! differences on `[0, ℓ]` and for the same data rescaled to length 3. It
//! can never exceed `κ∞` of the matching collocation matrix.

use newton_cond_core::conditioning::kappa_l_closed;
use newton_cond_core::grid::{Grid, Interval};
use newton_cond_core::newton::{divided_differences, rescale_to_length3};
use newton_cond_core::numerics::{int, to_float};
use newton_cond_core::Scalar;
use num_traits::{Signed, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;

use crate::format::{dyadic_round, render_exact, render_float_sig, render_sig};
use crate::{CliError, Result};

const DYADIC_BITS: i32 = 53;

#[derive(Debug, Clone, PartialEq)]
pub struct PerturbConfig {
    pub n: usize,
    pub length: Scalar,
    pub eps: f64,
    pub trials: usize,
    pub seed: u64,
}

/// Outcome for one way of computing the coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineStats {
    pub name: &'static str,
    pub max_amplification: f64,
    /// Exact largest amplification over all trials.
    pub max_amplification_exact: Scalar,
    /// `κ∞` of the collocation matrix behind this pipeline.
    pub bound: Scalar,
    pub amplifications: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationResult {
    pub config: PerturbConfig,
    pub monic: PipelineStats,
    pub rescaled: PipelineStats,
}

fn uniform_signed(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * 2f64.powi(-53) * 2.0 - 1.0
}

fn max_abs(v: &[Scalar]) -> Scalar {
    v.iter().map(Signed::abs).max().unwrap_or_else(Scalar::zero)
}

fn relative_change(base: &[Scalar], moved: &[Scalar]) -> Scalar {
    let diff: Vec<Scalar> = base.iter().zip(moved).map(|(a, b)| b - a).collect();
    max_abs(&diff) / max_abs(base)
}

fn stats(name: &'static str, amps: Vec<Scalar>, bound: Scalar) -> PipelineStats {
    let max = amps.iter().max().cloned().unwrap_or_else(Scalar::zero);
    PipelineStats {
        name,
        max_amplification: to_float(&max),
        max_amplification_exact: max,
        bound,
        amplifications: amps.iter().map(to_float).collect(),
    }
}

pub fn cmd_perturb(config: &PerturbConfig) -> Result<PerturbationResult> {
    if !(config.eps > 0.0) || !config.eps.is_finite() {
        return Err(CliError::Usage(format!(
            "eps must be positive, got {}",
            config.eps
        )));
    }
    if config.trials == 0 {
        return Err(CliError::Usage("trials must be at least 1".into()));
    }
    let grid = Grid::new(Interval::from_origin(config.length.clone())?, config.n)?;
    let nodes = grid.nodes();
    let samples: Vec<Scalar> = nodes
        .iter()
        .map(|x| dyadic_round(to_float(x).exp(), DYADIC_BITS))
        .collect();
    let f_norm = max_abs(&samples);
    let f_norm_float = to_float(&f_norm);

    let d = divided_differences(nodes, &samples)?;
    let d3 = rescale_to_length3(&d, &grid.length())?;
    if d.coefficients().iter().all(Zero::is_zero) {
        return Err(CliError::Invariant(
            "divided differences of the base data vanish".into(),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut monic_amps = Vec::with_capacity(config.trials);
    let mut rescaled_amps = Vec::with_capacity(config.trials);
    for _ in 0..config.trials {
        let delta = loop {
            let draw: Vec<Scalar> = (0..=config.n)
                .map(|_| {
                    dyadic_round(
                        uniform_signed(&mut rng) * config.eps * f_norm_float,
                        DYADIC_BITS,
                    )
                })
                .collect();
            if !draw.iter().all(Zero::is_zero) {
                break draw;
            }
        };
        let perturbed: Vec<Scalar> = samples.iter().zip(&delta).map(|(f, e)| f + e).collect();
        let data_change = max_abs(&delta) / &f_norm;
        let dp = divided_differences(nodes, &perturbed)?;
        let dp3 = rescale_to_length3(&dp, &grid.length())?;
        monic_amps.push(relative_change(d.coefficients(), dp.coefficients()) / &data_change);
        rescaled_amps.push(relative_change(d3.coefficients(), dp3.coefficients()) / &data_change);
    }

    let result = PerturbationResult {
        config: config.clone(),
        monic: stats(
            "monic",
            monic_amps,
            kappa_l_closed(config.n, &config.length)?.kappa_inf,
        ),
        rescaled: stats(
            "rescaled3",
            rescaled_amps,
            kappa_l_closed(config.n, &int(3))?.kappa_inf,
        ),
    };
    for p in [&result.monic, &result.rescaled] {
        if p.max_amplification_exact > p.bound {
            return Err(CliError::Invariant(format!(
                "{} amplification {} exceeds kappa {}",
                p.name,
                render_exact(&p.max_amplification_exact),
                render_exact(&p.bound)
            )));
        }
    }
    Ok(result)
}

#[derive(Serialize)]
struct JsonPipeline<'a> {
    pipeline: &'a str,
    max_amplification: String,
    bound: String,
}

#[derive(Serialize)]
struct JsonResult<'a> {
    n: usize,
    ell: String,
    eps: f64,
    trials: usize,
    seed: u64,
    pipelines: Vec<JsonPipeline<'a>>,
}

impl PerturbationResult {
    pub fn to_csv(&self, digits: usize) -> String {
        let c = &self.config;
        let mut out = String::from("pipeline,n,ell,eps,trials,seed,max_amplification,bound\n");
        for p in [&self.monic, &self.rescaled] {
            out.push_str(&format!(
                "{},{},{},{:e},{},{},{},{}\n",
                p.name,
                c.n,
                render_exact(&c.length),
                c.eps,
                c.trials,
                c.seed,
                render_float_sig(p.max_amplification, digits),
                render_sig(&p.bound, digits)
            ));
        }
        out
    }

    pub fn to_json(&self, digits: usize) -> serde_json::Result<String> {
        let c = &self.config;
        let pipelines = [&self.monic, &self.rescaled]
            .into_iter()
            .map(|p| JsonPipeline {
                pipeline: p.name,
                max_amplification: render_float_sig(p.max_amplification, digits),
                bound: render_sig(&p.bound, digits),
            })
            .collect();
        serde_json::to_string_pretty(&JsonResult {
            n: c.n,
            ell: render_exact(&c.length),
            eps: c.eps,
            trials: c.trials,
            seed: c.seed,
            pipelines,
        })
    }
}
