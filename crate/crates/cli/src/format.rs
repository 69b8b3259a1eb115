//! On-disk JSON schemas for models, classical HMMs and effect sequences.
//!
//! Complex numbers are two-element arrays [re, im]; matrices are row-major
//! nested arrays. Serialisation uses the shortest round-tripping decimal
//! form, so parse -> serialize -> parse is the identity on every numeric
//! field.

use serde::{Deserialize, Serialize};

use hqmm_core::{
    Architecture, ClassicalHMM, ComplexMatrix, DensityOperator, Effect, HQMMModel, HQMMStep,
    TransitionExpectation,
};

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

/// Row-major matrix literal with [re, im] entries.
pub type MatrixLiteral = Vec<Vec<[f64; 2]>>;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelFile {
    pub schema_version: u32,
    pub hidden_dim: usize,
    pub output_dim: usize,
    pub initial_state: MatrixLiteral,
    pub steps: Vec<StepFile>,
    pub architecture: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StepFile {
    pub hidden_kraus: Vec<MatrixLiteral>,
    pub emission_kraus: Vec<MatrixLiteral>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HmmFile {
    pub schema_version: u32,
    pub pi: Vec<f64>,
    pub transitions: Vec<Vec<Vec<f64>>>,
    pub emissions: Vec<Vec<Vec<f64>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EffectsFile {
    pub schema_version: u32,
    pub effects: Vec<EffectPairFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EffectPairFile {
    pub hidden: MatrixLiteral,
    pub output: MatrixLiteral,
}

pub fn matrix_to_literal(m: &ComplexMatrix) -> MatrixLiteral {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| {
                    let z = m.get(i, j);
                    [z.re, z.im]
                })
                .collect()
        })
        .collect()
}

pub fn literal_to_matrix(lit: &MatrixLiteral, what: &str) -> CliResult<ComplexMatrix> {
    let rows = lit.len();
    if rows == 0 {
        return Err(CliError::Input(format!("{what}: empty matrix literal")));
    }
    let cols = lit[0].len();
    if cols == 0 || lit.iter().any(|row| row.len() != cols) {
        return Err(CliError::Input(format!(
            "{what}: ragged or empty matrix literal"
        )));
    }
    let data = lit
        .iter()
        .flat_map(|row| row.iter().map(|&[re, im]| hqmm_core::c64(re, im)))
        .collect();
    ComplexMatrix::new(rows, cols, data)
        .map_err(|e| CliError::Input(format!("{what}: {e}")))
}

fn syntax_error(what: &str, err: &serde_json::Error) -> CliError {
    CliError::Input(format!(
        "{what}: syntax error at line {}, column {}: {err}",
        err.line(),
        err.column()
    ))
}

fn check_schema_version(found: u32, what: &str) -> CliResult<()> {
    if found != SCHEMA_VERSION {
        return Err(CliError::Input(format!(
            "{what}: unsupported schema_version {found}, expected {SCHEMA_VERSION}"
        )));
    }
    Ok(())
}

pub fn parse_architecture(tag: &str) -> CliResult<Architecture> {
    match tag {
        "conventional" => Ok(Architecture::Conventional),
        "causal" => Ok(Architecture::Causal),
        other => Err(CliError::Input(format!(
            "unknown architecture {other:?}; expected \"conventional\" or \"causal\""
        ))),
    }
}

/// Parse and fully validate a model file.
pub fn parse_model(text: &str, tol: f64) -> CliResult<HQMMModel> {
    let file: ModelFile =
        serde_json::from_str(text).map_err(|e| syntax_error("model file", &e))?;
    model_from_file(&file, tol)
}

pub fn model_from_file(file: &ModelFile, tol: f64) -> CliResult<HQMMModel> {
    check_schema_version(file.schema_version, "model file")?;
    let n = file.hidden_dim;
    let m = file.output_dim;
    if n == 0 || m == 0 {
        return Err(CliError::Input(
            "model file: hidden_dim and output_dim must be positive".to_string(),
        ));
    }
    let architecture = parse_architecture(&file.architecture)?;
    let initial_matrix = literal_to_matrix(&file.initial_state, "initial_state")?;
    let initial = DensityOperator::new(initial_matrix, tol)
        .map_err(|e| CliError::Input(format!("initial_state: {e}")))?;

    let mut steps = Vec::with_capacity(file.steps.len());
    for (idx, step) in file.steps.iter().enumerate() {
        let hidden_ops = step
            .hidden_kraus
            .iter()
            .map(|lit| literal_to_matrix(lit, &format!("step {idx} hidden Kraus operator")))
            .collect::<CliResult<Vec<_>>>()?;
        let hidden = TransitionExpectation::new(n, n, hidden_ops, tol).map_err(|e| match e {
            hqmm_core::Error::NotUnital { residual, .. } => CliError::Input(format!(
                "step {idx} hidden map not unital: residual {residual:.1e}"
            )),
            other => CliError::Input(format!("step {idx} hidden map: {other}")),
        })?;
        let emission_ops = step
            .emission_kraus
            .iter()
            .map(|lit| literal_to_matrix(lit, &format!("step {idx} emission Kraus operator")))
            .collect::<CliResult<Vec<_>>>()?;
        let emission = TransitionExpectation::new(n, m, emission_ops, tol).map_err(|e| match e {
            hqmm_core::Error::NotUnital { residual, .. } => CliError::Input(format!(
                "step {idx} emission map not unital: residual {residual:.1e}"
            )),
            other => CliError::Input(format!("step {idx} emission map: {other}")),
        })?;
        steps.push(
            HQMMStep::new(hidden, emission)
                .map_err(|e| CliError::Input(format!("step {idx}: {e}")))?,
        );
    }
    HQMMModel::new(initial, steps, architecture).map_err(|e| CliError::Input(e.to_string()))
}

pub fn model_to_file(model: &HQMMModel) -> ModelFile {
    ModelFile {
        schema_version: SCHEMA_VERSION,
        hidden_dim: model.hidden_dim(),
        output_dim: model.output_dim(),
        initial_state: matrix_to_literal(model.initial_state().matrix()),
        steps: model
            .steps()
            .iter()
            .map(|step| StepFile {
                hidden_kraus: step
                    .hidden()
                    .kraus()
                    .operators()
                    .iter()
                    .map(matrix_to_literal)
                    .collect(),
                emission_kraus: step
                    .emission()
                    .kraus()
                    .operators()
                    .iter()
                    .map(matrix_to_literal)
                    .collect(),
            })
            .collect(),
        architecture: model.architecture().as_str().to_string(),
    }
}

pub fn serialize_model(model: &HQMMModel) -> String {
    let mut text = serde_json::to_string_pretty(&model_to_file(model))
        .expect("model serialisation cannot fail");
    text.push('\n');
    text
}

/// Parse and validate an HMM file.
pub fn parse_hmm(text: &str, tol: f64) -> CliResult<ClassicalHMM> {
    let file: HmmFile = serde_json::from_str(text).map_err(|e| syntax_error("hmm file", &e))?;
    check_schema_version(file.schema_version, "hmm file")?;
    ClassicalHMM::new(file.pi, file.transitions, file.emissions, tol)
        .map_err(|e| CliError::Input(format!("hmm file: {e}")))
}

pub fn serialize_hmm(hmm: &ClassicalHMM) -> String {
    let file = HmmFile {
        schema_version: SCHEMA_VERSION,
        pi: hmm.initial().to_vec(),
        transitions: (0..hmm.step_count())
            .map(|n| hmm.transition(n).expect("in range").clone())
            .collect(),
        emissions: (0..hmm.step_count())
            .map(|n| hmm.emission(n).expect("in range").clone())
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("hmm serialisation cannot fail");
    text.push('\n');
    text
}

/// Parse an effects file against the dimensions of a model.
pub fn parse_effects(
    text: &str,
    hidden_dim: usize,
    output_dim: usize,
    tol: f64,
) -> CliResult<Vec<(Effect, Effect)>> {
    let file: EffectsFile =
        serde_json::from_str(text).map_err(|e| syntax_error("effects file", &e))?;
    check_schema_version(file.schema_version, "effects file")?;
    file.effects
        .iter()
        .enumerate()
        .map(|(idx, pair)| {
            let hidden = literal_to_matrix(&pair.hidden, &format!("effect {idx} hidden"))?;
            let output = literal_to_matrix(&pair.output, &format!("effect {idx} output"))?;
            if hidden.rows() != hidden_dim || output.rows() != output_dim {
                return Err(CliError::Input(format!(
                    "effect {idx}: expected sides {hidden_dim} and {output_dim}, got {} and {}",
                    hidden.rows(),
                    output.rows()
                )));
            }
            Ok((
                Effect::new(hidden, tol)
                    .map_err(|e| CliError::Input(format!("effect {idx} hidden: {e}")))?,
                Effect::new(output, tol)
                    .map_err(|e| CliError::Input(format!("effect {idx} output: {e}")))?,
            ))
        })
        .collect()
}

pub fn serialize_effects(pairs: &[(Effect, Effect)]) -> String {
    let file = EffectsFile {
        schema_version: SCHEMA_VERSION,
        effects: pairs
            .iter()
            .map(|(h, o)| EffectPairFile {
                hidden: matrix_to_literal(h.matrix()),
                output: matrix_to_literal(o.matrix()),
            })
            .collect(),
    };
    let mut text =
        serde_json::to_string_pretty(&file).expect("effects serialisation cannot fail");
    text.push('\n');
    text
}
