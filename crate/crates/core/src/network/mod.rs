//! The strong-coupling Toda spectral network: the local model at a
//! nonsimple branch point, splittings, BPS spectrum, homology bookkeeping,
//! path-lifting around the unit circle, and a numerical wall tracer.

use thiserror::Error;

use crate::annular::AnnularError;
use crate::exactalg::AlgebraError;
use crate::toda::TodaError;

pub mod homology;
pub mod trajectory;
pub mod transport;
pub mod walls;

pub use homology::{
    bps_spectrum, bps_spectrum_of, quadratic_refinement, BpsSpectrum, HomologyClass, QuadraticRefinement,
};
pub use trajectory::{trace_trajectory, Monotonicity, Trajectory};
pub use transport::{build_network_graph, crossing_sequence, holonomy_trace, holonomy_trace_for, lift_path};
pub use walls::{splitting, standard_network, theta_scan, toda_splitting, SplittingData, WallModel};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NetworkError {
    #[error("need at least 2 sheets (got {0})")]
    Rank(usize),
    #[error("nongeneric phase: {0}")]
    Degenerate(String),
    #[error("simple roots do not form a chain: {0}")]
    NotAChain(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("spin structure is -1 on the closed class {0}")]
    Refinement(String),
    #[error("quiver: {0}")]
    Quiver(String),
    #[error("singular start point {0}")]
    SingularStart(String),
    #[error("branch continuation is ambiguous near {0}")]
    Branch(String),
    #[error("step must be positive")]
    Step,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Annular(#[from] AnnularError),
    #[error(transparent)]
    Toda(#[from] TodaError),
}
