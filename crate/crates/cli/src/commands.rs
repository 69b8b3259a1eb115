//! Subcommand implementations. Each returns the text that belongs on
//! standard output so the binary stays a thin argument-parsing shell and
//! tests can drive the commands directly.

use rayon::prelude::*;

use hqmm_core::{
    choi_entanglement_analysis, compare_architectures, diamond_bounds, paper_entropy_formula,
    paper_kraus_pair, success_probability_bracket, verify_paper_claims, ChannelPair,
    ClassicalHMM, DensityOperator, Effect, HQMMModel, KrausMap,
};
use hqmm_core::qubit::{build_model, QubitModelParams};

use crate::error::{CliError, CliResult};
use crate::format;

/// Entropy output base. Internally everything is in nats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogBase {
    Nat,
    Bit,
}

impl LogBase {
    fn factor(self) -> f64 {
        match self {
            LogBase::Nat => 1.0,
            LogBase::Bit => 1.0 / std::f64::consts::LN_2,
        }
    }
}

/// Fixed 17-significant-digit scientific format for CSV fields.
fn csv_float(x: f64) -> String {
    format!("{x:.16e}")
}

pub const SWEEP_HEADER: &str = "theta,conv_prob,caus_prob,prob_diff,choi_trace_norm,diamond_lower,diamond_upper,psucc_lower,psucc_upper,entropy_paper_formula,entropy_psiF_computed,entropy_psiG_computed";

pub const VERIFY_HEADER: &str =
    "claim_id,convention,theta,computed,paper_value,abs_deviation,status";

pub const COMPARE_HEADER: &str = "conv_prob,caus_prob,abs_diff";

/// File kinds accepted by `validate`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Model,
    Hmm,
    Effects,
}

fn detect_kind(text: &str) -> CliResult<FileKind> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("syntax error at line {}, column {}: {e}", e.line(), e.column())))?;
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::Input("expected a JSON object at top level".to_string()))?;
    if obj.contains_key("steps") && obj.contains_key("initial_state") {
        Ok(FileKind::Model)
    } else if obj.contains_key("pi") {
        Ok(FileKind::Hmm)
    } else if obj.contains_key("effects") {
        Ok(FileKind::Effects)
    } else {
        Err(CliError::Input(
            "unrecognised document: expected a model, hmm, or effects file".to_string(),
        ))
    }
}

pub fn run_validate(text: &str, kind: Option<FileKind>, tol: f64) -> CliResult<String> {
    let kind = match kind {
        Some(kind) => kind,
        None => detect_kind(text)?,
    };
    match kind {
        FileKind::Model => {
            let model = format::parse_model(text, tol)?;
            Ok(format!(
                "ok: model (hidden_dim={}, output_dim={}, steps={}, architecture={})\n",
                model.hidden_dim(),
                model.output_dim(),
                model.steps().len(),
                model.architecture().as_str()
            ))
        }
        FileKind::Hmm => {
            let hmm = format::parse_hmm(text, tol)?;
            Ok(format!(
                "ok: hmm (hidden={}, outputs={}, steps={})\n",
                hmm.hidden_count(),
                hmm.output_count(),
                hmm.step_count()
            ))
        }
        FileKind::Effects => {
            let file: format::EffectsFile = serde_json::from_str(text).map_err(|e| {
                CliError::Input(format!(
                    "effects file: syntax error at line {}, column {}: {e}",
                    e.line(),
                    e.column()
                ))
            })?;
            if file.effects.is_empty() {
                return Err(CliError::Input("effects file: no effect pairs".to_string()));
            }
            let hidden_dim = file.effects[0].hidden.len();
            let output_dim = file.effects[0].output.len();
            let pairs = format::parse_effects(text, hidden_dim, output_dim, tol)?;
            Ok(format!(
                "ok: effects (pairs={}, hidden_dim={hidden_dim}, output_dim={output_dim})\n",
                pairs.len()
            ))
        }
    }
}

/// Emit the qubit model as a model file, under the literal slot convention.
pub fn run_emit_qubit(theta: f64, steps: usize, architecture: &str) -> CliResult<String> {
    if !theta.is_finite() {
        return Err(CliError::Input("theta must be finite".to_string()));
    }
    let architecture = format::parse_architecture(architecture)?;
    let step = build_model(QubitModelParams::new(theta));
    let model = HQMMModel::homogeneous(
        DensityOperator::basis_state(2, 0)?,
        step,
        steps.max(1),
        architecture,
    )?;
    Ok(format::serialize_model(&model))
}

/// Evaluate one effect sequence under both wirings.
pub fn run_compare(model_text: &str, effects_text: &str, tol: f64) -> CliResult<String> {
    let model = format::parse_model(model_text, tol)?;
    let pairs = format::parse_effects(effects_text, model.hidden_dim(), model.output_dim(), tol)?;
    let effects = hqmm_core::EffectSequence::new(pairs);
    let (conv, caus, diff) = compare_architectures(model.initial_state(), model.steps(), &effects)?;
    Ok(format!(
        "{COMPARE_HEADER}\n{},{},{}\n",
        csv_float(conv),
        csv_float(caus),
        csv_float(diff)
    ))
}

fn qubit_channel_pair(theta: f64) -> CliResult<ChannelPair> {
    let (kf, kg) = paper_kraus_pair(theta);
    Ok(ChannelPair::new(
        KrausMap::new(2, 2, vec![kf])?,
        KrausMap::new(2, 2, vec![kg])?,
    )?)
}

fn sweep_row(theta: f64, log_base: LogBase) -> CliResult<String> {
    let step = build_model(QubitModelParams::new(theta));
    let initial = DensityOperator::basis_state(2, 0)?;
    let effects = hqmm_core::EffectSequence::new(vec![(
        Effect::identity(2),
        Effect::basis_projector(2, 0)?,
    )]);
    let (conv, caus, diff) = compare_architectures(&initial, &[step], &effects)?;
    let pair = qubit_channel_pair(theta)?;
    let bracket = diamond_bounds(&pair)?;
    let psucc = success_probability_bracket(&pair)?;
    let analysis = choi_entanglement_analysis(theta)?;
    let f = log_base.factor();
    Ok([
        csv_float(theta),
        csv_float(conv),
        csv_float(caus),
        csv_float(diff),
        csv_float(bracket.choi_trace_norm),
        csv_float(bracket.lower),
        csv_float(bracket.upper),
        csv_float(psucc.lower),
        csv_float(psucc.upper),
        csv_float(paper_entropy_formula(theta) * f),
        csv_float(analysis.entropy_f * f),
        csv_float(analysis.entropy_g * f),
    ]
    .join(","))
}

/// One CSV row per angle, ascending. Rows are computed in parallel and then
/// reassembled in grid order.
pub fn run_sweep_theta(
    min: f64,
    max: f64,
    steps: usize,
    log_base: LogBase,
) -> CliResult<String> {
    if !(min < max) || !min.is_finite() || !max.is_finite() {
        return Err(CliError::Input(format!(
            "invalid sweep range: need finite min < max, got {min} and {max}"
        )));
    }
    if steps < 2 {
        return Err(CliError::Input(format!(
            "invalid sweep: need at least 2 steps, got {steps}"
        )));
    }
    let thetas: Vec<f64> = (0..steps)
        .map(|k| min + (max - min) * (k as f64) / ((steps - 1) as f64))
        .collect();
    let mut rows: Vec<(usize, CliResult<String>)> = thetas
        .par_iter()
        .enumerate()
        .map(|(idx, &theta)| (idx, sweep_row(theta, log_base)))
        .collect();
    rows.sort_by_key(|(idx, _)| *idx);
    let mut out = String::from(SWEEP_HEADER);
    out.push('\n');
    for (_, row) in rows {
        out.push_str(&row?);
        out.push('\n');
    }
    Ok(out)
}

/// Lift an HMM file to a model file. `steps` truncates a per-step chain or
/// replicates a single-step one.
pub fn run_lift(
    hmm_text: &str,
    steps: Option<usize>,
    architecture: &str,
    tol: f64,
) -> CliResult<String> {
    let architecture = format::parse_architecture(architecture)?;
    let hmm = format::parse_hmm(hmm_text, tol)?;
    let hmm = match steps {
        None => hmm,
        Some(0) => return Err(CliError::Input("steps must be positive".to_string())),
        Some(want) if want <= hmm.step_count() => ClassicalHMM::new(
            hmm.initial().to_vec(),
            (0..want).map(|n| hmm.transition(n).unwrap().clone()).collect(),
            (0..want).map(|n| hmm.emission(n).unwrap().clone()).collect(),
            tol,
        )?,
        Some(want) if hmm.step_count() == 1 => ClassicalHMM::homogeneous(
            hmm.initial().to_vec(),
            hmm.transition(0)?.clone(),
            hmm.emission(0)?.clone(),
            want,
            tol,
        )?,
        Some(want) => {
            return Err(CliError::Input(format!(
                "cannot extend a {}-step chain to {} steps; only single-step chains replicate",
                hmm.step_count(),
                want
            )))
        }
    };
    let model = hmm.lifted_model(architecture)?;
    Ok(format::serialize_model(&model))
}

/// Randomized post-lift agreement summary (writes to standard error in the binary).
pub fn lift_check_summary(hmm_text: &str, trials: usize, seed: u64, tol: f64) -> CliResult<String> {
    let hmm = format::parse_hmm(hmm_text, tol)?;
    let mut max_block = 0.0f64;
    let mut max_explicit = 0.0f64;
    for n in 0..hmm.step_count() {
        let report = hqmm_core::check_equivalence(&hmm, n, trials, seed.wrapping_add(n as u64))?;
        max_block = max_block.max(report.max_block_deviation);
        max_explicit = max_explicit.max(report.max_explicit_deviation);
    }
    Ok(format!(
        "equivalence check: trials={trials} seed={seed} max_block_deviation={} max_explicit_deviation={}\n",
        csv_float(max_block),
        csv_float(max_explicit)
    ))
}

fn verify_rows(theta: f64, tol: f64, log_base: LogBase) -> CliResult<Vec<String>> {
    let report = verify_paper_claims(theta, tol)?;
    let entropy_claims = [
        "choi_entanglement_entropy",
        "entropy_formula_strictly_below_log2",
    ];
    Ok(report
        .records
        .iter()
        .map(|r| {
            let scale = if entropy_claims.contains(&r.claim_id) {
                log_base.factor()
            } else {
                1.0
            };
            [
                r.claim_id.to_string(),
                r.convention.as_str().to_string(),
                csv_float(r.theta),
                csv_float(r.computed * scale),
                csv_float(r.paper_value * scale),
                csv_float(r.abs_deviation * scale),
                r.status.as_str().to_string(),
            ]
            .join(",")
        })
        .collect())
}

/// Recompute the claim registry at one angle or across the default grid.
/// Mismatches are findings; the command succeeds either way.
pub fn run_verify_paper(
    theta: Option<f64>,
    grid: bool,
    tol: f64,
    log_base: LogBase,
) -> CliResult<String> {
    let thetas: Vec<f64> = match (theta, grid) {
        (Some(t), false) => vec![t],
        (None, _) => hqmm_core::default_theta_grid(),
        (Some(_), true) => {
            return Err(CliError::Input(
                "--theta and --grid are mutually exclusive".to_string(),
            ))
        }
    };
    let mut blocks: Vec<(usize, CliResult<Vec<String>>)> = thetas
        .par_iter()
        .enumerate()
        .map(|(idx, &t)| (idx, verify_rows(t, tol, log_base)))
        .collect();
    blocks.sort_by_key(|(idx, _)| *idx);
    let mut out = String::from(VERIFY_HEADER);
    out.push('\n');
    for (_, block) in blocks {
        for row in block? {
            out.push_str(&row);
            out.push('\n');
        }
    }
    Ok(out)
}
