//! Error type shared across the crate.
//!
//! Row numbers in messages are 1-based data rows (the CSV header is not
//! counted). Values are reported as `f64` regardless of the scalar type in
//! use.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    // ── files and parsing ────────────────────────────────────────────
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("missing column `{name}`")]
    MissingColumn { name: String },

    #[error("row {row}: column `{column}` has non-numeric value `{value}`")]
    NonNumericCell {
        row: usize,
        column: String,
        value: String,
    },

    #[error("row {row}: treatment `{value}` is not a non-negative integer")]
    NonIntegerTreatment { row: usize, value: String },

    // ── dataset invariants ───────────────────────────────────────────
    #[error("dataset has no rows")]
    EmptyDataset,

    #[error("row {row}: context has {got} features, dataset declares d={want}")]
    ContextDimension { row: usize, got: usize, want: usize },

    #[error("row {row}: treatment {treatment} outside the treatment set {{0..{m}}}")]
    TreatmentOutOfRange { row: usize, treatment: usize, m: usize },

    #[error("row {row}: propensity {value} outside (0, 1]")]
    PropensityOutOfRange { row: usize, value: f64 },

    #[error("row {row}: outcome {value} is not in {{0, 1}} but outcome_kind is binary")]
    NonBinaryOutcome { row: usize, value: f64 },

    #[error("row {row}: non-finite {field} value")]
    NonFiniteValue { row: usize, field: &'static str },

    // ── policies ─────────────────────────────────────────────────────
    #[error("treatment index {treatment} outside the treatment set {{0..{m}}}")]
    TreatmentIndex { treatment: usize, m: usize },

    #[error("context has {got} features, expected {want}")]
    DimensionMismatch { got: usize, want: usize },

    #[error("policy `{policy}`: {reason}")]
    InvalidPolicy { policy: String, reason: String },

    #[error("dataset policy `{dataset}` does not match policy `{policy}`")]
    PolicyDatasetMismatch { dataset: String, policy: String },

    // ── model fitting ────────────────────────────────────────────────
    #[error("treatment arm {arm} has no rows; model for that arm is undefined")]
    EmptyArm { arm: usize },

    #[error("treatment arm {arm} was never fitted")]
    ArmNotFitted { arm: usize },

    #[error("singular normal equations; increase lambda above 0")]
    SingularSystem,

    #[error("lambda must be non-negative, got {value}")]
    NegativeLambda { value: f64 },

    #[error("logistic outcome family requires a binary-outcome dataset")]
    FamilyOutcomeMismatch,

    #[error("clip floor {value} outside (0, 0.5]")]
    InvalidClipFloor { value: f64 },

    #[error("row {row}: no logged propensity and no propensity model available")]
    MissingPropensity { row: usize },

    #[error("cross-fit folds must satisfy 2 <= folds <= n, got folds={folds}, n={n}")]
    InvalidFoldCount { folds: usize, n: usize },

    #[error("cross-fit fold {fold} lacks treatment arm {arm}")]
    FoldMissingArm { fold: usize, arm: usize },

    // ── subsampling and selection ────────────────────────────────────
    #[error("subsample count k must be >= 1, got {k}")]
    InvalidSubsampleCount { k: usize },

    #[error("split method requires k <= n, got k={k}, n={n}")]
    SplitTooManyBlocks { k: usize, n: usize },

    #[error("split fraction {value} outside (0, 1] or blocks exceed the dataset")]
    InvalidSplitFraction { value: f64 },

    #[error("ground truth for policy `{policy}` is zero; relative RMSE undefined")]
    ZeroGroundTruth { policy: String },

    #[error("relative RMSE needs at least one estimate")]
    EmptyEstimates,

    #[error("estimator set must be non-empty and drawn from {{DM, IPW, DR}}")]
    InvalidEstimatorSet,

    // ── synthetic environments ───────────────────────────────────────
    #[error("synthetic environment: {reason}")]
    InvalidEnvironment { reason: String },

    #[error("behavior policy probability {prob} below the overlap floor {floor}")]
    OverlapViolation { prob: f64, floor: f64 },

    #[error("replications must be >= 2, got {got}")]
    TooFewReplications { got: usize },

    #[error("monte-carlo sample count must be >= 1")]
    EmptyMonteCarlo,

    #[error("unknown scenario `{name}` (expected `s1` or `s2`)")]
    UnknownScenario { name: String },
}
