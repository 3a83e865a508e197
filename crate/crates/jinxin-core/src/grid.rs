//! Uniform periodic grid on [−L/2, L/2) and the FFT-backed spectral operators
//! everything else is built on. Derivatives are always spectral; there is no
//! finite-difference stencil anywhere in the crate.

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GridError {
    #[error("grid size must be a power of two >= 8, got {0}")]
    BadSize(usize),
    #[error("domain length must be positive and finite, got {0}")]
    BadLength(f64),
}

/// Pure grid geometry: n equispaced nodes x_j = −L/2 + j·dx, dx = L/n.
/// Since n is a power of two, dx is exact in binary floating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    n: usize,
    length: f64,
    dx: f64,
}

impl Grid {
    pub fn new(n: usize, length: f64) -> Result<Self, GridError> {
        if n < 8 || !n.is_power_of_two() {
            return Err(GridError::BadSize(n));
        }
        if !(length > 0.0) || !length.is_finite() {
            return Err(GridError::BadLength(length));
        }
        Ok(Self { n, length, dx: length / n as f64 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    /// Node coordinates −L/2 + j·dx, j = 0..n.
    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|j| -0.5 * self.length + j as f64 * self.dx).collect()
    }

    /// Signed mode index for storage index k: 0, 1, …, n/2, −n/2+1, …, −1.
    pub fn mode(&self, k: usize) -> i64 {
        debug_assert!(k < self.n);
        if k <= self.n / 2 {
            k as i64
        } else {
            k as i64 - self.n as i64
        }
    }

    /// Angular wavenumber ξ_k = 2π·mode(k)/L.
    pub fn xi(&self, k: usize) -> f64 {
        2.0 * std::f64::consts::PI * self.mode(k) as f64 / self.length
    }
}

/// FFT engine for one grid. Forward transforms return trigonometric
/// interpolation coefficients û_k (the 1/n normalization is applied on the
/// forward pass), so u(x_j) = Σ_k û_k · exp(i ξ_k x_j) and Parseval reads
/// ∫|u|² dx = L · Σ_k |û_k|².
pub struct Spectral {
    grid: Grid,
    xi: Vec<f64>,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
    scratch_len: usize,
}

impl Spectral {
    pub fn new(grid: Grid) -> Self {
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(grid.n());
        let inv = planner.plan_fft_inverse(grid.n());
        let scratch_len = fwd.get_inplace_scratch_len().max(inv.get_inplace_scratch_len());
        let xi = (0..grid.n()).map(|k| grid.xi(k)).collect();
        Self { grid, xi, fwd, inv, scratch_len }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn n(&self) -> usize {
        self.grid.n()
    }

    /// All wavenumbers in storage order.
    pub fn xi(&self) -> &[f64] {
        &self.xi
    }

    /// Allocates a scratch buffer usable with the `*_inplace` calls.
    pub fn make_scratch(&self) -> Vec<Complex64> {
        vec![Complex64::new(0.0, 0.0); self.scratch_len]
    }

    /// In-place forward transform of a prefilled complex buffer, including
    /// the 1/n coefficient normalization.
    pub fn fwd_inplace(&self, buf: &mut [Complex64], scratch: &mut [Complex64]) {
        debug_assert_eq!(buf.len(), self.grid.n());
        self.fwd.process_with_scratch(buf, scratch);
        let scale = 1.0 / self.grid.n() as f64;
        for c in buf.iter_mut() {
            *c *= scale;
        }
    }

    /// In-place inverse transform; with the forward normalization above this
    /// is an exact inverse (up to roundoff) and needs no extra scaling.
    pub fn inv_inplace(&self, buf: &mut [Complex64], scratch: &mut [Complex64]) {
        debug_assert_eq!(buf.len(), self.grid.n());
        self.inv.process_with_scratch(buf, scratch);
    }

    /// Coefficients of a real field.
    pub fn forward(&self, field: &[f64]) -> Vec<Complex64> {
        assert_eq!(field.len(), self.grid.n(), "field length does not match grid");
        let mut buf: Vec<Complex64> = field.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let mut scratch = self.make_scratch();
        self.fwd_inplace(&mut buf, &mut scratch);
        buf
    }

    /// Real field from coefficients, discarding the imaginary residue.
    pub fn inverse(&self, coeffs: &[Complex64]) -> Vec<f64> {
        self.inverse_with_residue(coeffs).0
    }

    /// Real field plus the max-norm imaginary residue, which callers can use
    /// to verify that a multiplier chain preserved conjugate symmetry.
    pub fn inverse_with_residue(&self, coeffs: &[Complex64]) -> (Vec<f64>, f64) {
        assert_eq!(coeffs.len(), self.grid.n(), "coefficient length does not match grid");
        let mut buf = coeffs.to_vec();
        let mut scratch = self.make_scratch();
        self.inv_inplace(&mut buf, &mut scratch);
        let mut residue = 0.0f64;
        let field = buf
            .iter()
            .map(|c| {
                residue = residue.max(c.im.abs());
                c.re
            })
            .collect();
        (field, residue)
    }

    /// Multiplies coefficients by (iξ)^order. Odd orders zero the Nyquist
    /// mode, whose derivative is sign-ambiguous on the real grid.
    pub fn apply_derivative(&self, coeffs: &mut [Complex64], order: u32) {
        debug_assert_eq!(coeffs.len(), self.grid.n());
        let n = self.grid.n();
        for (k, c) in coeffs.iter_mut().enumerate() {
            if order % 2 == 1 && k == n / 2 {
                *c = Complex64::new(0.0, 0.0);
                continue;
            }
            let ixi = Complex64::new(0.0, self.xi[k]);
            *c *= ixi.powu(order);
        }
    }

    /// Spectral derivative of a real field.
    pub fn derivative(&self, field: &[f64], order: u32) -> Vec<f64> {
        let mut coeffs = self.forward(field);
        self.apply_derivative(&mut coeffs, order);
        self.inverse(&coeffs)
    }

    /// 2/3-rule dealiasing: zeros every mode with |mode| > n/3.
    pub fn apply_dealias(&self, coeffs: &mut [Complex64]) {
        debug_assert_eq!(coeffs.len(), self.grid.n());
        let cutoff = self.grid.n() as i64 / 3;
        for (k, c) in coeffs.iter_mut().enumerate() {
            if self.grid.mode(k).abs() > cutoff {
                *c = Complex64::new(0.0, 0.0);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn grid_rejects_bad_shapes() {
        assert_eq!(Grid::new(6, 1.0).unwrap_err(), GridError::BadSize(6));
        assert_eq!(Grid::new(100, 1.0).unwrap_err(), GridError::BadSize(100));
        assert_eq!(Grid::new(4, 1.0).unwrap_err(), GridError::BadSize(4));
        assert!(matches!(Grid::new(64, 0.0), Err(GridError::BadLength(_))));
        assert!(matches!(Grid::new(64, -3.0), Err(GridError::BadLength(_))));
    }

    #[test]
    fn dx_is_exact_for_power_of_two_sizes() {
        let g = Grid::new(4096, 1000.0).unwrap();
        // L/n with n a power of two only rescales the exponent, so n·dx == L
        // exactly in f64, not merely approximately.
        assert_eq!(g.dx() * g.n() as f64, g.length());
    }

    #[test]
    fn mode_layout_matches_fft_storage_order() {
        let g = Grid::new(8, 2.0 * PI).unwrap();
        let modes: Vec<i64> = (0..8).map(|k| g.mode(k)).collect();
        assert_eq!(modes, vec![0, 1, 2, 3, 4, -3, -2, -1]);
        assert!((g.xi(1) - 1.0).abs() < 1e-15);
        assert!((g.xi(7) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn forward_inverse_round_trip() {
        let g = Grid::new(128, 7.5).unwrap();
        let sp = Spectral::new(g);
        let x = g.nodes();
        let field: Vec<f64> =
            x.iter().map(|&x| (2.0 * PI * x / 7.5).sin() + 0.3 * (6.0 * PI * x / 7.5).cos()).collect();
        let (back, residue) = sp.inverse_with_residue(&sp.forward(&field));
        for (a, b) in field.iter().zip(&back) {
            assert!((a - b).abs() < 1e-13);
        }
        assert!(residue < 1e-13);
    }

    #[test]
    fn coefficients_of_a_pure_mode() {
        let g = Grid::new(64, 2.0 * PI).unwrap();
        let sp = Spectral::new(g);
        let field: Vec<f64> = g.nodes().iter().map(|&x| (3.0 * x).cos()).collect();
        let coeffs = sp.forward(&field);
        // cos(3x) = (e^{i3x} + e^{−i3x})/2 → coefficients 1/2 at modes ±3.
        assert!((coeffs[3] - Complex64::new(0.5, 0.0)).norm() < 1e-13);
        assert!((coeffs[61] - Complex64::new(0.5, 0.0)).norm() < 1e-13);
        let others: f64 =
            coeffs.iter().enumerate().filter(|(k, _)| *k != 3 && *k != 61).map(|(_, c)| c.norm()).sum();
        assert!(others < 1e-12);
    }

    #[test]
    fn spectral_derivative_of_sin_is_cos() {
        let g = Grid::new(256, 10.0).unwrap();
        let sp = Spectral::new(g);
        let k = 2.0 * PI / 10.0;
        let field: Vec<f64> = g.nodes().iter().map(|&x| (3.0 * k * x).sin()).collect();
        let deriv = sp.derivative(&field, 1);
        for (x, d) in g.nodes().iter().zip(&deriv) {
            assert!((d - 3.0 * k * (3.0 * k * x).cos()).abs() < 1e-11);
        }
        let second = sp.derivative(&field, 2);
        for (f, d2) in field.iter().zip(&second) {
            assert!((d2 + (3.0 * k) * (3.0 * k) * f).abs() < 1e-10);
        }
    }

    #[test]
    fn real_input_gives_conjugate_symmetric_coefficients() {
        let g = Grid::new(64, 3.0).unwrap();
        let sp = Spectral::new(g);
        // Deterministic ragged field: no RNG anywhere in the crate.
        let field: Vec<f64> = (0..64).map(|j| ((j * j + 1) as f64).sin()).collect();
        let coeffs = sp.forward(&field);
        for k in 1..64 {
            let diff = (coeffs[k] - coeffs[64 - k].conj()).norm();
            assert!(diff < 1e-14, "mode {k} breaks conjugate symmetry by {diff:e}");
        }
        assert!(coeffs[0].im.abs() < 1e-15);
    }

    #[test]
    fn dealias_zeroes_the_upper_third() {
        let g = Grid::new(32, 1.0).unwrap();
        let sp = Spectral::new(g);
        let mut coeffs = vec![Complex64::new(1.0, 0.0); 32];
        sp.apply_dealias(&mut coeffs);
        for k in 0..32 {
            let kept = g.mode(k).abs() <= 10;
            assert_eq!(coeffs[k].re != 0.0, kept, "mode {}", g.mode(k));
        }
    }
}
