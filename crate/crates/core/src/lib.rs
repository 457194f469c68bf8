//! Central spin models coupled to spin-star baths: exact reduced dynamics via
//! total-spin sector decomposition, plus distance, entropy, speed-limit and
//! correlation measures on the resulting states.

pub mod collective;
pub mod dynamics;
pub mod measures;
pub mod models;
pub mod numerics;
pub mod oracle;
pub mod par;

pub use collective::{collective_ops, sectors, CollectiveOps, SectorSpec};
pub use dynamics::{
    evolve_single, evolve_two_qubit, evolve_two_qubit_global, evolve_two_qubit_local, qubit_map,
    qubit_maps, thermal_weights, DynamicsError, QubitSuperoperator, ThermalWeights, Trajectory,
};
pub use models::{BathSpec, CouplingAxis, ModelConfig, ModelError, Scenario, TwoQubitConfig};
pub use numerics::{DenseMatrix, NumericsError, C64};
