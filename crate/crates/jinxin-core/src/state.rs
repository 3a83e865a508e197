//! The three equivalent state representations — physical (u, v), kinetic
//! (f1, f2) and conservative–dissipative (w1, w2) — together with the exact
//! linear changes of variables between them, the Maxwellians, the symmetrizer
//! and the construction of well-prepared initial data.

use thiserror::Error;

use crate::grid::Spectral;
use crate::params::ModelParams;

#[derive(Debug, Error, PartialEq)]
pub enum StateError {
    #[error("component fields must have equal nonzero lengths, got {0} and {1}")]
    LengthMismatch(usize, usize),
}

fn check_pair(a: &[f64], b: &[f64]) -> Result<(), StateError> {
    if a.is_empty() || a.len() != b.len() {
        return Err(StateError::LengthMismatch(a.len(), b.len()));
    }
    Ok(())
}

/// Physical variables: conserved density u and flux-like variable v.
#[derive(Debug, Clone, PartialEq)]
pub struct StateUV {
    pub u: Vec<f64>,
    pub v: Vec<f64>,
}

impl StateUV {
    pub fn new(u: Vec<f64>, v: Vec<f64>) -> Result<Self, StateError> {
        check_pair(&u, &v)?;
        Ok(Self { u, v })
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }
}

/// Kinetic variables f1 = (u + εv/λ)/2 and f2 = (u − εv/λ)/2, the two
/// transport directions of the BGK form.
#[derive(Debug, Clone, PartialEq)]
pub struct StateBGK {
    pub f1: Vec<f64>,
    pub f2: Vec<f64>,
}

impl StateBGK {
    pub fn new(f1: Vec<f64>, f2: Vec<f64>) -> Result<Self, StateError> {
        check_pair(&f1, &f2)?;
        Ok(Self { f1, f2 })
    }

    pub fn len(&self) -> usize {
        self.f1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f1.is_empty()
    }
}

/// Conservative–dissipative variables: w1 = u is conserved, while
/// w2 = ε(v − a·u)/√(λ² − a²ε²) relaxes at the 1/ε² rate.
#[derive(Debug, Clone, PartialEq)]
pub struct StateCD {
    pub w1: Vec<f64>,
    pub w2: Vec<f64>,
}

impl StateCD {
    pub fn new(w1: Vec<f64>, w2: Vec<f64>) -> Result<Self, StateError> {
        check_pair(&w1, &w2)?;
        Ok(Self { w1, w2 })
    }

    pub fn len(&self) -> usize {
        self.w1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w1.is_empty()
    }
}

/// Pointwise flux f(u) = a·u + h(u).
pub fn f_eval(u: &[f64], p: &ModelParams) -> Vec<f64> {
    u.iter().map(|&x| p.f(x)).collect()
}

/// Local equilibria M1 = u/2 + εf(u)/(2λ), M2 = u/2 − εf(u)/(2λ).
/// M1 + M2 = u holds exactly in floating point.
pub fn maxwellians(u: &[f64], p: &ModelParams) -> (Vec<f64>, Vec<f64>) {
    let scale = p.epsilon() / (2.0 * p.lambda());
    let mut m1 = Vec::with_capacity(u.len());
    let mut m2 = Vec::with_capacity(u.len());
    for &x in u {
        let half = 0.5 * x;
        let shift = scale * p.f(x);
        m1.push(half + shift);
        m2.push(half - shift);
    }
    (m1, m2)
}

pub fn uv_to_bgk(s: &StateUV, p: &ModelParams) -> StateBGK {
    let r = p.epsilon() / p.lambda();
    let f1 = s.u.iter().zip(&s.v).map(|(&u, &v)| 0.5 * (u + r * v)).collect();
    let f2 = s.u.iter().zip(&s.v).map(|(&u, &v)| 0.5 * (u - r * v)).collect();
    StateBGK { f1, f2 }
}

pub fn bgk_to_uv(s: &StateBGK, p: &ModelParams) -> StateUV {
    let r = p.lambda() / p.epsilon();
    let u = s.f1.iter().zip(&s.f2).map(|(&a, &b)| a + b).collect();
    let v = s.f1.iter().zip(&s.f2).map(|(&a, &b)| r * (a - b)).collect();
    StateUV { u, v }
}

pub fn uv_to_cd(s: &StateUV, p: &ModelParams) -> StateCD {
    let scale = p.epsilon() / p.cd_root();
    let a = p.a();
    let w1 = s.u.clone();
    let w2 = s.u.iter().zip(&s.v).map(|(&u, &v)| scale * (v - a * u)).collect();
    StateCD { w1, w2 }
}

pub fn cd_to_uv(s: &StateCD, p: &ModelParams) -> StateUV {
    let scale = p.cd_root() / p.epsilon();
    let a = p.a();
    let u = s.w1.clone();
    let v = s.w1.iter().zip(&s.w2).map(|(&w1, &w2)| a * w1 + scale * w2).collect();
    StateUV { u, v }
}

/// The constant right symmetrizer Σ = [[1, aε²], [aε², λ²ε²]], positive
/// definite whenever λ² − a²ε² > 0.
pub fn symmetrizer(p: &ModelParams) -> [[f64; 2]; 2] {
    let e2 = p.epsilon() * p.epsilon();
    let off = p.a() * e2;
    [[1.0, off], [off, p.lambda() * p.lambda() * e2]]
}

/// Initial data on the local equilibrium manifold: v0 = f(u0) − λ²·∂x u0,
/// which suppresses the initial relaxation layer. The derivative is spectral.
pub fn well_prepared_data(u0: &[f64], sp: &Spectral, p: &ModelParams) -> StateUV {
    let du = sp.derivative(u0, 1);
    let lam2 = p.lambda() * p.lambda();
    let v = u0.iter().zip(&du).map(|(&u, &d)| p.f(u) - lam2 * d).collect();
    StateUV { u: u0.to_vec(), v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use crate::params::Nonlinearity;
    use std::f64::consts::PI;

    fn params(eps: f64, lambda: f64, a: f64, h: Nonlinearity) -> ModelParams {
        ModelParams::new(eps, lambda, a, h).unwrap()
    }

    #[test]
    fn mismatched_components_are_rejected() {
        assert_eq!(
            StateUV::new(vec![1.0], vec![1.0, 2.0]).unwrap_err(),
            StateError::LengthMismatch(1, 2)
        );
        assert!(StateBGK::new(vec![], vec![]).is_err());
        assert!(StateCD::new(vec![0.0; 4], vec![0.0; 4]).is_ok());
    }

    #[test]
    fn flux_field_evaluation() {
        let p = params(0.1, 1.0, 1.0, Nonlinearity::Quadratic { coeff: 0.5 });
        let out = f_eval(&[0.0, 0.2], &p);
        assert_eq!(out[0], 0.0);
        assert!((out[1] - 0.22).abs() < 1e-15);
    }

    #[test]
    fn maxwellians_split_u_with_the_flux_shift() {
        let p = params(0.1, 1.0, 0.0, Nonlinearity::Quadratic { coeff: 0.5 });
        let (m1, m2) = maxwellians(&[0.2], &p);
        // u/2 = 0.1, εf(u)/(2λ) = 0.1·0.02/2 = 0.001.
        assert!((m1[0] - 0.101).abs() < 1e-15);
        assert!((m2[0] - 0.099).abs() < 1e-15);
    }

    #[test]
    fn maxwellian_sum_and_difference_identities() {
        let p = params(0.3, 1.4, 0.5, Nonlinearity::Quadratic { coeff: 0.8 });
        let u: Vec<f64> = (0..16).map(|j| 0.05 * (j as f64 * 1.7).sin()).collect();
        let (m1, m2) = maxwellians(&u, &p);
        for j in 0..u.len() {
            // Sum is exact: (x/2 + s) + (x/2 − s) in floating point.
            assert_eq!(m1[j] + m2[j], u[j]);
            let diff = p.epsilon() * p.f(u[j]) / p.lambda();
            assert!((m1[j] - m2[j] - diff).abs() < 1e-16);
        }
    }

    #[test]
    fn bgk_change_of_variables_frozen_value() {
        let p = params(1.0, 2.0, 0.0, Nonlinearity::Zero);
        let s = StateUV::new(vec![1.0], vec![2.0]).unwrap();
        let k = uv_to_bgk(&s, &p);
        assert!((k.f1[0] - 1.0).abs() < 1e-15);
        assert!(k.f2[0].abs() < 1e-15);
        let back = bgk_to_uv(&k, &p);
        assert!((back.u[0] - 1.0).abs() < 1e-15);
        assert!((back.v[0] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn cd_change_of_variables_frozen_value() {
        let p = params(1.0, 1.0, 0.0, Nonlinearity::Zero);
        let s = StateUV::new(vec![3.0], vec![5.0]).unwrap();
        let w = uv_to_cd(&s, &p);
        assert!((w.w1[0] - 3.0).abs() < 1e-15);
        assert!((w.w2[0] - 5.0).abs() < 1e-15);
        let back = cd_to_uv(&w, &p);
        assert!((back.u[0] - 3.0).abs() < 1e-14);
        assert!((back.v[0] - 5.0).abs() < 1e-14);
    }

    #[test]
    fn symmetrizer_frozen_values() {
        let p = params(1.0, 1.0, 0.0, Nonlinearity::Zero);
        assert_eq!(symmetrizer(&p), [[1.0, 0.0], [0.0, 1.0]]);
        let p = params(1.0, 2.0, 1.0, Nonlinearity::Zero);
        let s = symmetrizer(&p);
        assert_eq!(s, [[1.0, 1.0], [1.0, 4.0]]);
        let det = s[0][0] * s[1][1] - s[0][1] * s[1][0];
        assert!((det - 3.0).abs() < 1e-15);
    }

    #[test]
    fn well_prepared_single_mode() {
        let length = 8.0;
        let g = Grid::new(64, length).unwrap();
        let sp = Spectral::new(g);
        let p = params(0.1, 1.0, 0.0, Nonlinearity::Zero);
        let k = 2.0 * PI / length;
        let u0: Vec<f64> = g.nodes().iter().map(|&x| (k * x).sin()).collect();
        let s = well_prepared_data(&u0, &sp, &p);
        // v0 = f(u0) − λ²∂x u0 = −k·cos(kx) here.
        for (x, v) in g.nodes().iter().zip(&s.v) {
            assert!((v + k * (k * x).cos()).abs() < 1e-12);
        }
    }

    #[test]
    fn well_prepared_data_is_a_maxwellian_fluctuation() {
        let length = 20.0;
        let g = Grid::new(128, length).unwrap();
        let sp = Spectral::new(g);
        let p = params(0.1, 1.3, 0.5, Nonlinearity::Quadratic { coeff: 0.5 });
        let u0: Vec<f64> = g.nodes().iter().map(|&x| 0.4 * (-x * x / 8.0_f64).exp()).collect();
        let s = well_prepared_data(&u0, &sp, &p);
        let k = uv_to_bgk(&s, &p);
        let (m1, m2) = maxwellians(&u0, &p);
        let du = sp.derivative(&u0, 1);
        // f1 = M1 − (ελ/2)∂x u0 and f2 = M2 + (ελ/2)∂x u0.
        let shift = 0.5 * p.epsilon() * p.lambda();
        for j in 0..u0.len() {
            assert!((k.f1[j] - (m1[j] - shift * du[j])).abs() < 1e-12);
            assert!((k.f2[j] - (m2[j] + shift * du[j])).abs() < 1e-12);
        }
    }
}
