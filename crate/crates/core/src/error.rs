use thiserror::Error;

pub type Result<T, E = ModelError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    /// An input lies outside the domain of the operation. `field` uses the
    /// same snake_case key as the configuration schema.
    #[error("domain error in `{field}` (value {value}): {reason}")]
    Domain {
        field: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// Two or more fields are individually fine but jointly inconsistent.
    #[error("inconsistent parameters `{fields}`: {reason}")]
    Inconsistent {
        fields: &'static str,
        reason: String,
    },

    #[error("indeterminate steady state: with phi = 0 stationarity forces beta*(1+r) = 1")]
    IndeterminateSteadyState,

    #[error("no interior steady state: beta*(1+r) = {0} >= 1")]
    NoInteriorSteadyState(f64),

    #[error("solver did not converge: {0}")]
    Convergence(String),

    #[error("divergent multiplier: {0}")]
    DivergentMultiplier(String),

    #[error("period {period}: {source}")]
    AtPeriod {
        period: usize,
        #[source]
        source: Box<ModelError>,
    },
}

impl ModelError {
    pub(crate) fn domain(field: &'static str, value: f64, reason: &'static str) -> Self {
        ModelError::Domain {
            field,
            value,
            reason,
        }
    }

    pub(crate) fn at_period(self, period: usize) -> Self {
        ModelError::AtPeriod {
            period,
            source: Box::new(self),
        }
    }

    /// True for solver failures (as opposed to bad inputs).
    pub fn is_convergence(&self) -> bool {
        match self {
            ModelError::Convergence(_) => true,
            ModelError::AtPeriod { source, .. } => source.is_convergence(),
            _ => false,
        }
    }

    /// The innermost error, with any period wrappers removed.
    pub fn root_cause(&self) -> &ModelError {
        match self {
            ModelError::AtPeriod { source, .. } => source.root_cause(),
            other => other,
        }
    }
}

/// Checks that `value` is finite and strictly positive.
pub(crate) fn positive(field: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(ModelError::domain(field, value, "must be finite and > 0"))
    }
}

pub(crate) fn non_negative(field: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(ModelError::domain(field, value, "must be finite and >= 0"))
    }
}

pub(crate) fn finite(field: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(ModelError::domain(field, value, "must be finite"))
    }
}
