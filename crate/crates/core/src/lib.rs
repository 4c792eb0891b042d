//! Post-training vector quantization of dense weight matrices.
//!
//! The pipeline quantizes a weight matrix column-block by column-block with
//! Hessian-based error feedback, fitting one small codebook per weight group
//! with a weighted EM loop. Quantized layers serialize to a bit-exact `.gvq`
//! container whose packed sub-byte indices decode through per-dimension
//! lookup tables. Uniform-quantization baselines and an SQNR sweep harness
//! are included for size/accuracy comparisons.

pub mod baselines;
pub mod codebook;
pub mod engine;
pub mod error;
pub mod format;
pub mod hessian;
mod linalg;
pub mod postproc;
pub mod synth;
pub mod tensor;

pub use error::{GvqError, Result};
pub use tensor::Tensor2D;
