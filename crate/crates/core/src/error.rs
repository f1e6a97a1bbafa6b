use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Both phases vanish, so the spinor would be identically zero.
    #[error("null spinor: both phases alpha and beta are zero")]
    NullSpinor,

    #[error("domain error: {0}")]
    Domain(String),

    /// sigma, omega, K and S all vanish while J does not.
    #[error("bilinears fit no Lounesto class (sigma = omega = 0, K = 0, S = 0, J.t = {j_t})")]
    Anomaly { j_t: f64 },

    #[error("spinors belong to different component families: {0}")]
    FamilyMismatch(String),

    #[error("momentum off mass shell: |E^2 - p^2 - m^2| = {defect} exceeds {limit}")]
    MassShell { defect: f64, limit: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
