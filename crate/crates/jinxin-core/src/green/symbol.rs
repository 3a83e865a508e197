//! Fourier symbol E(iξ) of the linear conservative–dissipative system,
//! its exact eigenvalue pair and the closed-form 2×2 matrix exponential.
//!
//! Per mode the system is ∂t ŵ = E(iξ) ŵ with
//!
//!     E(iξ) = [ −a·iξ                −iξ√(λ²−a²ε²)/ε ]
//!             [ −iξ√(λ²−a²ε²)/ε      a·iξ − 1/ε²     ]
//!
//! a complex-symmetric matrix whose trace −1/ε² carries the stiff relaxation
//! rate. The exponential is evaluated through the trace-split identity
//! e^{Et} = e^{λ̄t}(cosh(δt)·I + sinh(δt)/δ · (E − λ̄I)) with λ̄ = −1/(2ε²)
//! and ±δ the eigenvalues of E − λ̄I, written entirely in terms of e^{λ₁t}
//! and e^{λ₂t} so nothing overflows for any (ξ, t, ε).

use num_complex::Complex64;

use crate::params::ModelParams;

pub type Mat2c = [[Complex64; 2]; 2];

pub const ZERO_C: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE_C: Complex64 = Complex64::new(1.0, 0.0);

pub fn mat_identity() -> Mat2c {
    [[ONE_C, ZERO_C], [ZERO_C, ONE_C]]
}

pub fn mat_mul(a: &Mat2c, b: &Mat2c) -> Mat2c {
    let mut out = [[ZERO_C; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn mat_add(a: &Mat2c, b: &Mat2c) -> Mat2c {
    let mut out = [[ZERO_C; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][j] + b[i][j];
        }
    }
    out
}

pub fn mat_sub(a: &Mat2c, b: &Mat2c) -> Mat2c {
    let mut out = [[ZERO_C; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][j] - b[i][j];
        }
    }
    out
}

pub fn mat_scale(a: &Mat2c, s: Complex64) -> Mat2c {
    let mut out = *a;
    for row in out.iter_mut() {
        for e in row.iter_mut() {
            *e *= s;
        }
    }
    out
}

pub fn mat_apply(a: &Mat2c, v: [Complex64; 2]) -> [Complex64; 2] {
    [a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]]
}

/// Max-norm over entries, used for relative-error comparisons.
pub fn mat_max_norm(a: &Mat2c) -> f64 {
    let mut m = 0.0f64;
    for row in a {
        for e in row {
            m = m.max(e.norm());
        }
    }
    m
}

/// The symbol matrix at one frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymbolMatrix {
    pub xi: f64,
    pub entries: Mat2c,
}

pub fn symbol_e(xi: f64, p: &ModelParams) -> SymbolMatrix {
    let eps = p.epsilon();
    let diag = Complex64::new(0.0, -p.a() * xi);
    let off = Complex64::new(0.0, -xi * p.cd_root() / eps);
    let relax = Complex64::new(-1.0 / (eps * eps), 0.0);
    SymbolMatrix { xi, entries: [[diag, off], [off, -diag + relax]] }
}

/// Exact eigenvalue pair of E(iξ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenData {
    /// Slow branch, analytic through ξ = 0 with lam1(0) = 0.
    pub lam1: Complex64,
    /// Fast branch, lam2(0) = −1/ε².
    pub lam2: Complex64,
    /// 1 − 4ε²(iaξ + λ²ξ²), the quantity under the square root.
    pub discriminant: Complex64,
}

pub fn eigenvalues_e(xi: f64, p: &ModelParams) -> EigenData {
    let eps2 = p.epsilon() * p.epsilon();
    // q = iaξ + λ²ξ², so the characteristic polynomial is
    // μ² + μ/ε² + q/ε² = 0.
    let q = Complex64::new(p.lambda() * p.lambda() * xi * xi, p.a() * xi);
    let discriminant = ONE_C - 4.0 * eps2 * q;
    // Principal square root has Re ≥ 0, which keeps |1 + Δ| ≥ 1 and makes
    // the rationalized quotient below cancellation-free for small ε²q.
    let delta = discriminant.sqrt();
    let lam1 = -2.0 * q / (ONE_C + delta);
    let lam2 = Complex64::new(-1.0 / eps2, 0.0) - lam1;
    EigenData { lam1, lam2, discriminant }
}

/// Closed-form e^{E(iξ)t}.
pub fn matexp_e(xi: f64, t: f64, p: &ModelParams) -> SymbolMatrix {
    assert!(t >= 0.0, "matexp_e needs t >= 0, got {t}");
    let eps2 = p.epsilon() * p.epsilon();
    let eig = eigenvalues_e(xi, p);
    let e1 = (eig.lam1 * t).exp();
    let e2 = (eig.lam2 * t).exp();
    let mean = 0.5 * (e1 + e2);

    // lam1 − lam2 = Δ/ε²; θ = (lam1 − lam2)t/2.
    let dlam = eig.delta() / eps2;
    let theta = 0.5 * dlam * t;
    let slope = if theta.norm() < 1e-4 {
        // (e^{λ₁t} − e^{λ₂t})/(λ₁ − λ₂) = t·e^{λ̄t}·sinh(θ)/θ; the quotient
        // loses all digits as θ → 0, so switch to the sinhc series.
        let lam_bar = Complex64::new(-0.5 / eps2, 0.0);
        let th2 = theta * theta;
        let sinhc = ONE_C + th2 / 6.0 + th2 * th2 / 120.0;
        t * (lam_bar * t).exp() * sinhc
    } else {
        (e1 - e2) / dlam
    };

    let sym = symbol_e(xi, p);
    let lam_bar = Complex64::new(-0.5 / eps2, 0.0);
    let mut entries = mat_scale(&sym.entries, slope);
    entries[0][0] += mean - slope * lam_bar;
    entries[1][1] += mean - slope * lam_bar;
    SymbolMatrix { xi, entries }
}

impl EigenData {
    /// λ₁ − λ₂ (equals Δ/ε² analytically; formed from the stored roots).
    fn delta(&self) -> Complex64 {
        self.lam1 - self.lam2
    }
}
