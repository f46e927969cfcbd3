use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function}: argument {value} outside the domain ({reason})")]
    Domain { function: &'static str, value: f64, reason: &'static str },

    #[error("{function}: order {value} outside the supported range")]
    Range { function: &'static str, value: f64 },

    #[error("{function}: result overflows at argument {value}")]
    Overflow { function: &'static str, value: f64 },

    #[error("mu must exceed -1/2 (got {0})")]
    InvalidMu(f64),

    #[error("density has a non-removable singularity at the origin")]
    SingularOrigin,

    #[error(
        "quadrature did not converge after {subdivisions} subdivisions (value {value:e}, error estimate {err_est:e})"
    )]
    NonConvergence { subdivisions: usize, value: f64, err_est: f64 },

    #[error("integrand returned a non-finite value {value} at {at}")]
    InvalidIntegrand { at: f64, value: f64 },

    #[error("entropy of the zero function is undefined")]
    ZeroFunction,

    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(&'static str),
}
