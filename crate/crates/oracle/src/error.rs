use su21_core::wigner::{WignerError, WignerIndex};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("matrix is not in SU(2,1) (residual {0:.3e})")]
    NotInGroup(f64),
    #[error("matrix does not have the block shape of K (residual {0:.3e})")]
    NotInK(f64),
    #[error("Iwasawa decomposition failed: {0}")]
    DecompositionFailure(String),
    #[error("index {idx} is not admissible for k = {k}")]
    NotAdmissible { idx: WignerIndex, k: i64 },
    #[error(transparent)]
    Wigner(#[from] WignerError),
}
