//! Dense row-major `f32` matrices and the `.t2d` file format.
//!
//! File layout: magic `T2D0` | rows `u32` LE | cols `u32` LE | rows*cols
//! `f32` LE, row-major. Loads reject non-finite payloads; save/load is the
//! identity on bytes.

use std::fs;
use std::path::Path;

use crate::error::{GvqError, Result};

pub const T2D_MAGIC: [u8; 4] = *b"T2D0";

/// Dense row-major matrix of `f32`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor2D {
    rows: usize,
    cols: usize,
    data: Vec<f32>,
}

impl Tensor2D {
    pub fn new(rows: usize, cols: usize, data: Vec<f32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(GvqError::ShapeMismatch(format!(
                "{rows}x{cols} needs {} values, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f32] {
        &mut self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> f32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: f32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[f32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Serializes to `.t2d` bytes (little-endian, canonical).
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(12 + 4 * self.data.len());
        out.extend_from_slice(&T2D_MAGIC);
        out.extend_from_slice(&(self.rows as u32).to_le_bytes());
        out.extend_from_slice(&(self.cols as u32).to_le_bytes());
        for v in &self.data {
            out.extend_from_slice(&v.to_le_bytes());
        }
        out
    }

    /// Parses `.t2d` bytes; rejects bad magic, size mismatches, and
    /// non-finite payloads.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < 12 {
            return Err(GvqError::ShortBuffer { need: 12, have: bytes.len() });
        }
        let mut magic = [0u8; 4];
        magic.copy_from_slice(&bytes[0..4]);
        if magic != T2D_MAGIC {
            return Err(GvqError::BadMagic { expected: T2D_MAGIC, found: magic });
        }
        let rows = u32::from_le_bytes(bytes[4..8].try_into().unwrap()) as usize;
        let cols = u32::from_le_bytes(bytes[8..12].try_into().unwrap()) as usize;
        let need = (rows as u64) * (cols as u64) * 4 + 12;
        if bytes.len() as u64 != need {
            return Err(GvqError::ShapeMismatch(format!(
                "declared {rows}x{cols} needs {need} bytes, file has {}",
                bytes.len()
            )));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for (i, chunk) in bytes[12..].chunks_exact(4).enumerate() {
            let v = f32::from_le_bytes(chunk.try_into().unwrap());
            if !v.is_finite() {
                return Err(GvqError::NonFinite { index: i });
            }
            data.push(v);
        }
        Ok(Self { rows, cols, data })
    }
}

/// Loads a `.t2d` tensor file.
pub fn load_tensor<P: AsRef<Path>>(path: P) -> Result<Tensor2D> {
    Tensor2D::from_bytes(&fs::read(path)?)
}

/// Saves a tensor as a `.t2d` file; `load_tensor` of the result is bit-exact.
pub fn save_tensor<P: AsRef<Path>>(t: &Tensor2D, path: P) -> Result<()> {
    fs::write(path, t.to_bytes())?;
    Ok(())
}
