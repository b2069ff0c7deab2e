//! Cake-moisture surrogate modeling for pressure filtration.
//!
//! This crate implements the numeric half of a moisture-prediction pipeline
//! for pressure-filtration experiments: a fixed seven-feature data model with
//! CSV text parsing, a full-factorial synthetic generator with a documented
//! ground-truth function, z-score standardization, a small multilayer
//! perceptron trained by backpropagation, regression metrics, and
//! connection-weight variable importance.
//!
//! Everything here is pure computation over in-memory data: the crate is
//! `no_std` (with `alloc`) and all transcendental math goes through [`libm`],
//! so results are bit-identical across platforms. File IO, JSON/SVG output,
//! and the command-line pipeline live in the companion `presscake-cli` crate.
//!
//! Determinism contract: every randomized operation takes an explicit 64-bit
//! seed and uses the fixed generator in [`rng`]. Identical inputs and seeds
//! produce bit-identical outputs on any platform, single-threaded or shared
//! across threads (all public types are immutable once constructed).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod dataset;
pub mod importance;
mod math;
pub mod matrix;
pub mod metrics;
pub mod mlp;
pub mod rng;

pub use dataset::{
    Dataset, DataError, FabricTag, FactorialDesign, FilterRun, NormalizationStats,
    NormalizedDataset, TargetPolicy, COLUMN_NAMES, FEATURE_COUNT, FEATURE_NAMES, TARGET_NAME,
};
pub use importance::{ImportanceEntry, ImportanceError, ImportanceReport};
pub use matrix::Matrix;
pub use metrics::{EvalError, EvalReport, MetricSpace, MetricsError};
pub use mlp::{
    Activation, BatchSize, Gradients, InitScheme, MlpError, MlpModel, TrainConfig, TrainHistory,
};
