//! Independent master-equation route to the probe coherences.

pub mod compare;
pub mod generator;
pub mod golden;
pub mod linalg;
pub mod model;
pub mod response;
pub mod state;
pub mod steady;

pub use compare::{compare, Agreement, Discrepancy};
pub use generator::{build_generator, probe_generator, Superoperator};
pub use model::{Coupling, Decay, LevelModel};
pub use response::{
    finite_probe_coherences, linear_response, linear_response_at, oracle_coherences, richardson,
    LinearResponse,
};
pub use state::DensityState;
pub use steady::{steady_state, SteadyStateSolver};
