//! Diagnostics built on the representations.

pub mod bell;
pub mod entanglement;
pub mod nmr;
pub mod stabilizer;
pub mod teleport;
pub mod witness;

pub use bell::{bell_chsh_demo, BellReport};
pub use entanglement::{franco_penna, ppt_separability_two_qubit, EntanglementVerdict, Method, Verdict};
pub use nmr::{nmr_classicality, nmr_kernels, NmrReport};
pub use stabilizer::{stabilizer_positivity_check, StabilizerReport};
pub use teleport::{teleport_phase_space, TeleportOutcome};
pub use witness::{negativity_witness, NegativityWitness};
