use crate::{ArtError, Real};

/// Per-channel dynamics parameters: choice `α ≥ 0`, learning rate `β`,
/// contribution `γ` and vigilance `ρ`, the latter three in `[0, 1]`.
///
/// Fields are private so the bounds hold after any mutation; use the
/// `with_*` builders to derive variants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams<F: Real> {
    alpha: F,
    beta: F,
    gamma: F,
    rho: F,
}

fn check_unit<F: Real>(name: &'static str, value: F) -> Result<F, ArtError> {
    if value >= F::zero() && value <= F::one() {
        Ok(value)
    } else {
        Err(ArtError::InvalidParameter {
            name,
            value: value.to_f64().unwrap_or(f64::NAN),
        })
    }
}

impl<F: Real> ChannelParams<F> {
    /// Default choice parameter: small enough that activation approximates a
    /// pure overlap ratio, while keeping the denominator positive.
    pub fn default_alpha() -> F {
        F::from_f64(1e-3).expect("1e-3 representable")
    }

    pub fn new(alpha: F, beta: F, gamma: F, rho: F) -> Result<Self, ArtError> {
        if !(alpha >= F::zero()) {
            return Err(ArtError::InvalidParameter {
                name: "alpha",
                value: alpha.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self {
            alpha,
            beta: check_unit("beta", beta)?,
            gamma: check_unit("gamma", gamma)?,
            rho: check_unit("rho", rho)?,
        })
    }

    pub fn alpha(&self) -> F {
        self.alpha
    }

    pub fn beta(&self) -> F {
        self.beta
    }

    pub fn gamma(&self) -> F {
        self.gamma
    }

    pub fn rho(&self) -> F {
        self.rho
    }

    pub fn with_alpha(self, alpha: F) -> Result<Self, ArtError> {
        Self::new(alpha, self.beta, self.gamma, self.rho)
    }

    pub fn with_beta(self, beta: F) -> Result<Self, ArtError> {
        Self::new(self.alpha, beta, self.gamma, self.rho)
    }

    pub fn with_gamma(self, gamma: F) -> Result<Self, ArtError> {
        Self::new(self.alpha, self.beta, gamma, self.rho)
    }

    pub fn with_rho(self, rho: F) -> Result<Self, ArtError> {
        Self::new(self.alpha, self.beta, self.gamma, rho)
    }
}

/// Overwrite learning (`β = 1`), full contribution, exact vigilance.
impl<F: Real> Default for ChannelParams<F> {
    fn default() -> Self {
        Self {
            alpha: Self::default_alpha(),
            beta: F::one(),
            gamma: F::one(),
            rho: F::one(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_enforced_on_construction() {
        assert!(ChannelParams::new(-0.1, 1.0, 1.0, 1.0).is_err());
        assert!(ChannelParams::new(0.0, 1.1, 1.0, 1.0).is_err());
        assert!(ChannelParams::new(0.0, 1.0, -0.5, 1.0).is_err());
        assert!(ChannelParams::new(0.0, 1.0, 1.0, 2.0).is_err());
        assert!(ChannelParams::new(0.0, 0.0, 0.0, 0.0).is_ok());
    }

    #[test]
    fn bounds_enforced_after_mutation() {
        let p = ChannelParams::<f64>::default();
        assert!(p.with_rho(0.5).is_ok());
        assert!(p.with_rho(1.5).is_err());
        assert!(p.with_alpha(-1.0).is_err());
        assert_eq!(p.with_beta(0.25).unwrap().beta(), 0.25);
    }

    #[test]
    fn defaults() {
        let p = ChannelParams::<f64>::default();
        assert_eq!(p.alpha(), 1e-3);
        assert_eq!(p.beta(), 1.0);
        assert_eq!(p.gamma(), 1.0);
        assert_eq!(p.rho(), 1.0);
    }
}
