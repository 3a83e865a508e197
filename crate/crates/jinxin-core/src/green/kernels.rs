//! Decomposition of the exact propagator Γ̂(t,ξ) = e^{E(iξ)t} into the
//! advected-heat (parabolic) kernel K̂, the damped two-wave (hyperbolic)
//! kernel 𝒦̂, and the remainder R̂ = Γ̂ − K̂ − 𝒦̂ defined globally in ξ.

use num_complex::Complex64;

use super::projectors::{projectors_infinity, projectors_zero};
use super::symbol::{mat_sub, matexp_e, Mat2c, SymbolMatrix, ZERO_C};
use crate::params::ModelParams;

/// Advected heat kernel g(t,x) with drift a and diffusivity λ² − a²ε².
pub fn heat_kernel(t: f64, x: f64, p: &ModelParams) -> f64 {
    assert!(t > 0.0, "heat kernel needs t > 0, got {t}");
    let d = p.subchar_gap();
    let shifted = x - p.a() * t;
    (-shifted * shifted / (4.0 * d * t)).exp() / (2.0 * (d * std::f64::consts::PI * t).sqrt())
}

/// K̂(t,ξ) = e^{(−aiξ − (λ²−a²ε²)ξ²)t} · P̃(iξ): the Fourier transform of
/// the advected heat kernel times the low-frequency projector.
pub fn parabolic_kernel_hat(xi: f64, t: f64, p: &ModelParams) -> SymbolMatrix {
    assert!(t >= 0.0, "kernel needs t >= 0, got {t}");
    let set = projectors_zero(Complex64::new(0.0, xi), p);
    let scale = (set.f_reduced * t).exp();
    let mut entries = set.p_tilde;
    for row in entries.iter_mut() {
        for e in row.iter_mut() {
            *e *= scale;
        }
    }
    SymbolMatrix { xi, entries }
}

/// The two transport projectors 𝒫₁(∞) = R₁R₁ᵀ and 𝒫₂(∞) = R₂R₂ᵀ.
pub fn hyperbolic_projectors(p: &ModelParams) -> (Mat2c, Mat2c) {
    let set = projectors_infinity(p);
    let outer = |r: [f64; 2]| -> Mat2c {
        let mut m = [[ZERO_C; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = Complex64::new(r[i] * r[j], 0.0);
            }
        }
        m
    };
    (outer(set.r1_inf), outer(set.r2_inf))
}

/// Real decay exponents of the two waves: log-amplitudes
/// (−(λ−aε)t/(2λε²), −(λ+aε)t/(2λε²)). Exposed separately so decay checks
/// can stay in log space where the amplitudes themselves underflow.
pub fn hyperbolic_log_amplitudes(t: f64, p: &ModelParams) -> (f64, f64) {
    let lam = p.lambda();
    let ae = p.a() * p.epsilon();
    let denom = 2.0 * lam * p.epsilon() * p.epsilon();
    (-(lam - ae) * t / denom, -(lam + ae) * t / denom)
}

/// 𝒦̂(t,ξ): two counter-propagating waves at speeds ±λ/ε, each damped at
/// its O(1/ε²) rate.
pub fn hyperbolic_kernel_hat(xi: f64, t: f64, p: &ModelParams) -> SymbolMatrix {
    assert!(t >= 0.0, "kernel needs t >= 0, got {t}");
    let (p1, p2) = hyperbolic_projectors(p);
    let (log1, log2) = hyperbolic_log_amplitudes(t, p);
    let phase = p.lambda() * t * xi / p.epsilon();
    let w1 = Complex64::new(log1, -phase).exp();
    let w2 = Complex64::new(log2, phase).exp();
    let mut entries = [[ZERO_C; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            entries[i][j] = w1 * p1[i][j] + w2 * p2[i][j];
        }
    }
    SymbolMatrix { xi, entries }
}

/// The three-way split at one (ξ, t). The remainder is defined by
/// subtraction, so the sum identity is exact in floating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSplit {
    pub gamma_hat: SymbolMatrix,
    pub k_hat: SymbolMatrix,
    pub khyp_hat: SymbolMatrix,
    pub r_hat: SymbolMatrix,
}

pub fn kernel_split(xi: f64, t: f64, p: &ModelParams) -> KernelSplit {
    let gamma_hat = matexp_e(xi, t, p);
    let k_hat = parabolic_kernel_hat(xi, t, p);
    let khyp_hat = hyperbolic_kernel_hat(xi, t, p);
    let r_hat = SymbolMatrix {
        xi,
        entries: mat_sub(&mat_sub(&gamma_hat.entries, &k_hat.entries), &khyp_hat.entries),
    };
    KernelSplit { gamma_hat, k_hat, khyp_hat, r_hat }
}
