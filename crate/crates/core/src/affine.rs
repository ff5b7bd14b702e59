//! Similitudes `x ↦ s^m O x + q` with the exponent `m` kept as an integer.

use alloc::vec;
use alloc::vec::Vec;

use crate::math::{self, Matrix};
use crate::word::Word;

/// Words a map was built from: `f_{-context} ∘ f_{body}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub context: Word,
    pub body: Word,
}

/// An affine similitude `x ↦ s^m O x + q`.
///
/// The scale is never stored as a float; it is recomputed from the exact
/// exponent, so an isometry is recognised by `m == 0` alone.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineMap {
    base: f64,
    exponent: i32,
    orthogonal: Matrix,
    shift: Vec<f64>,
    provenance: Option<Provenance>,
}

/// An [`AffineMap`] with exponent 0.
pub type IsometryRecord = AffineMap;

impl AffineMap {
    pub fn new(base: f64, exponent: i32, orthogonal: Matrix, shift: Vec<f64>) -> Self {
        debug_assert_eq!(orthogonal.dim(), shift.len());
        AffineMap { base, exponent, orthogonal, shift, provenance: None }
    }

    pub fn identity(dim: usize, base: f64) -> Self {
        AffineMap::new(base, 0, Matrix::identity(dim), vec![0.0; dim])
    }

    /// The pure scaling `x ↦ s^m x`.
    pub fn scaling(dim: usize, base: f64, exponent: i32) -> Self {
        AffineMap::new(base, exponent, Matrix::identity(dim), vec![0.0; dim])
    }

    pub fn translation(base: f64, shift: Vec<f64>) -> Self {
        AffineMap::new(base, 0, Matrix::identity(shift.len()), shift)
    }

    pub fn dim(&self) -> usize {
        self.shift.len()
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    pub fn exponent(&self) -> i32 {
        self.exponent
    }

    pub fn is_isometry(&self) -> bool {
        self.exponent == 0
    }

    /// `s^m`.
    pub fn scale(&self) -> f64 {
        math::powi(self.base, self.exponent)
    }

    pub fn orthogonal(&self) -> &Matrix {
        &self.orthogonal
    }

    /// The full linear part `s^m O`.
    pub fn linear(&self) -> Matrix {
        self.orthogonal.scaled(self.scale())
    }

    pub fn shift(&self) -> &[f64] {
        &self.shift
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn with_provenance(mut self, context: Word, body: Word) -> Self {
        self.provenance = Some(Provenance { context, body });
        self
    }

    pub fn without_provenance(mut self) -> Self {
        self.provenance = None;
        self
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim()];
        self.apply_into(x, &mut out);
        out
    }

    pub fn apply_into(&self, x: &[f64], out: &mut [f64]) {
        self.orthogonal.mul_vec_into(x, out);
        let scale = self.scale();
        for (o, q) in out.iter_mut().zip(&self.shift) {
            *o = scale * *o + q;
        }
    }

    /// `self ∘ other`. Provenance is dropped.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let moved = self.orthogonal.mul_vec(&other.shift);
        let scale = self.scale();
        let shift = moved.iter().zip(&self.shift).map(|(m, q)| scale * m + q).collect();
        AffineMap::new(self.base, self.exponent + other.exponent, self.orthogonal.mul(&other.orthogonal), shift)
    }

    /// `x ↦ s^{-m} Oᵀ (x − q)`.
    pub fn inverse(&self) -> AffineMap {
        let ot = self.orthogonal.transpose();
        let back = math::powi(self.base, -self.exponent);
        let shift = ot.mul_vec(&self.shift).into_iter().map(|v| -back * v).collect();
        AffineMap::new(self.base, -self.exponent, ot, shift)
    }

    /// `s^m ∘ self`.
    pub fn rescaled_after(&self, m: i32) -> AffineMap {
        AffineMap::scaling(self.dim(), self.base, m).compose(self)
    }

    /// `self ∘ s^m`.
    pub fn rescaled_before(&self, m: i32) -> AffineMap {
        self.compose(&AffineMap::scaling(self.dim(), self.base, m))
    }

    /// Same exponent, with orthogonal part and translation within `tol` (max norm).
    pub fn approx_eq(&self, other: &AffineMap, tol: f64) -> bool {
        self.exponent == other.exponent
            && self.dim() == other.dim()
            && self.orthogonal.max_abs_diff(&other.orthogonal) <= tol
            && math::max_abs_diff(&self.shift, &other.shift) <= tol
    }

    /// Largest coordinate difference to `other`, ignoring the exponent.
    pub fn deviation(&self, other: &AffineMap) -> f64 {
        self.orthogonal.max_abs_diff(&other.orthogonal).max(math::max_abs_diff(&self.shift, &other.shift))
    }
}
