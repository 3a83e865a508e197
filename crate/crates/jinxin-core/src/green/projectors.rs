//! Rank-1 projector expansions of the symbol at the two ends of the
//! frequency axis: the low-frequency (parabolic) truncation P̃(z) with its
//! reduced fluxes F(z), F₋(z), and the high-frequency (transport) eigenpair
//! R₁, R₂ of the advection matrix with eigenvalues ±λ/ε.

use num_complex::Complex64;

use super::symbol::{Mat2c, ONE_C};
use crate::params::ModelParams;

/// Projector data at one point, low- and high-frequency parts together.
/// The z=∞ vectors are frequency-independent so they ride along in every
/// value of this type.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectorSet {
    /// P̃(z) = R̃(z)·L̃(z), the second-order truncation of the total
    /// projector near z = 0.
    pub p_tilde: Mat2c,
    /// Left row vector L̃(z) = (1, −εz√(λ²−a²ε²)).
    pub l_tilde: [Complex64; 2],
    /// Right column vector R̃(z), the transpose of L̃(z).
    pub r_tilde: [Complex64; 2],
    /// Reduced flux F(z) = −az + (λ²−a²ε²)z², the slow-branch drift and
    /// diffusion.
    pub f_reduced: Complex64,
    /// F₋(z) = −1/ε² + az, the fast-branch relaxation rate.
    pub f_minus: Complex64,
    /// Unit eigenvector of the advection matrix for +λ/ε.
    pub r1_inf: [f64; 2],
    /// Unit eigenvector of the advection matrix for −λ/ε.
    pub r2_inf: [f64; 2],
}

fn infinity_eigenvectors(p: &ModelParams) -> ([f64; 2], [f64; 2]) {
    let lam = p.lambda();
    let ae = p.a() * p.epsilon();
    let norm = 1.0 / (2.0 * lam).sqrt();
    let plus = (lam + ae).sqrt();
    let minus = (lam - ae).sqrt();
    ([norm * plus, norm * minus], [-norm * minus, norm * plus])
}

/// Low-frequency projector data evaluated at a complex z (callers pass
/// z = iξ with |ξ| small).
pub fn projectors_zero(z: Complex64, p: &ModelParams) -> ProjectorSet {
    let root = p.cd_root();
    let eps = p.epsilon();
    let off = -eps * root * z;
    let l_tilde = [ONE_C, off];
    let r_tilde = [ONE_C, off];
    let p_tilde = [[ONE_C, off], [off, off * off]];
    let f_reduced = -p.a() * z + p.subchar_gap() * z * z;
    let f_minus = Complex64::new(-1.0 / (eps * eps), 0.0) + p.a() * z;
    let (r1_inf, r2_inf) = infinity_eigenvectors(p);
    ProjectorSet { p_tilde, l_tilde, r_tilde, f_reduced, f_minus, r1_inf, r2_inf }
}

/// High-frequency projector data; the low-frequency fields are evaluated at
/// z = 0 where P̃ degenerates to the conservative projector diag(1, 0).
pub fn projectors_infinity(p: &ModelParams) -> ProjectorSet {
    projectors_zero(Complex64::new(0.0, 0.0), p)
}

/// Affine high-frequency eigenvalue expansions
/// λ₁(z) ≈ −(λ/ε)z − (λ−aε)/(2λε²) and λ₂(z) ≈ (λ/ε)z − (λ+aε)/(2λε²).
pub fn eigen_expansion_infinity(z: Complex64, p: &ModelParams) -> (Complex64, Complex64) {
    let lam = p.lambda();
    let eps = p.epsilon();
    let wave = lam / eps * z;
    let denom = 2.0 * lam * eps * eps;
    let slow = (lam - p.a() * eps) / denom;
    let fast = (lam + p.a() * eps) / denom;
    (-wave - slow, wave - fast)
}
