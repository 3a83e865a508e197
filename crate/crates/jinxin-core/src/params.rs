//! Model parameters for the diffusively scaled relaxation system
//!
//!     ∂t u + ∂x v = 0,
//!     ε² ∂t v + λ² ∂x u = f(u) − v,        f(u) = a·u + h(u),
//!
//! posed on a periodic interval. Every downstream formula assumes the
//! subcharacteristic condition λ² − a²ε² > 0, so it is enforced here, at
//! construction, and nowhere else.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ParamError {
    #[error("epsilon must be positive and finite, got {0}")]
    BadEpsilon(f64),
    #[error("lambda must be positive and finite, got {0}")]
    BadLambda(f64),
    #[error("advection coefficient must be finite, got {0}")]
    BadAdvection(f64),
    #[error("nonlinearity coefficient must be finite, got {0}")]
    BadNonlinearity(f64),
    #[error("subcharacteristic condition violated: lambda^2 - a^2 eps^2 = {gap:e} <= 0")]
    Subcharacteristic { gap: f64 },
}

/// Nonlinear part of the flux. `h(0) = 0` and `h'(0) = 0` hold for every
/// variant by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Nonlinearity {
    /// h ≡ 0: the linear relaxation system.
    Zero,
    /// h(u) = c·u²; c = 1/2 is the Burgers flux.
    Quadratic { coeff: f64 },
}

impl Nonlinearity {
    pub fn eval(&self, u: f64) -> f64 {
        match *self {
            Nonlinearity::Zero => 0.0,
            Nonlinearity::Quadratic { coeff } => coeff * u * u,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Nonlinearity::Zero)
    }
}

/// Validated parameter set (ε, λ, a, h). Fields are private so that a value
/// of this type always satisfies λ² − a²ε² > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    epsilon: f64,
    lambda: f64,
    a: f64,
    h: Nonlinearity,
}

impl ModelParams {
    pub fn new(epsilon: f64, lambda: f64, a: f64, h: Nonlinearity) -> Result<Self, ParamError> {
        if !(epsilon > 0.0) || !epsilon.is_finite() {
            return Err(ParamError::BadEpsilon(epsilon));
        }
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(ParamError::BadLambda(lambda));
        }
        if !a.is_finite() {
            return Err(ParamError::BadAdvection(a));
        }
        if let Nonlinearity::Quadratic { coeff } = h {
            if !coeff.is_finite() {
                return Err(ParamError::BadNonlinearity(coeff));
            }
        }
        let gap = lambda * lambda - a * a * epsilon * epsilon;
        if !(gap > 0.0) {
            return Err(ParamError::Subcharacteristic { gap });
        }
        Ok(Self { epsilon, lambda, a, h })
    }

    /// Same parameters with a different ε (used by ε-sweeps). Fails if the
    /// new ε breaks the subcharacteristic condition.
    pub fn with_epsilon(&self, epsilon: f64) -> Result<Self, ParamError> {
        Self::new(epsilon, self.lambda, self.a, self.h)
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn h(&self) -> Nonlinearity {
        self.h
    }

    /// λ² − a²ε², positive by construction.
    pub fn subchar_gap(&self) -> f64 {
        self.lambda * self.lambda - self.a * self.a * self.epsilon * self.epsilon
    }

    /// √(λ² − a²ε²), the scale factor of the dissipative variable in the
    /// conservative–dissipative change of variables.
    pub fn cd_root(&self) -> f64 {
        self.subchar_gap().sqrt()
    }

    /// Full flux f(u) = a·u + h(u).
    pub fn f(&self, u: f64) -> f64 {
        self.a * u + self.h.eval(u)
    }
}
