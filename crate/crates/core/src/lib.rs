//! Blind interference alignment for the K-user MIMO broadcast channel with
//! reconfigurable receive antennas and no transmitter-side channel knowledge.
//!
//! The crate has three layers:
//!
//! * exact linear-DoF arithmetic over rationals ([`params`]): derived
//!   combinatorial parameters, sum/per-user LDoF, the LDoF region vertices,
//!   and the interference-channel corollary;
//! * scheme synthesis and simulation ([`indexing`], [`precoder`],
//!   [`switching`], [`receiver`], [`sim`]): Kronecker-structured transmit
//!   plans, deterministic mode-switching schedules, the noiseless channel,
//!   interference cancellation and per-block decoding, plus an independent
//!   projection-based decoder used as an oracle;
//! * numerical verification of the converse machinery ([`analysis`]):
//!   projection dimensions, rank monotonicity and rank-chain Monte-Carlo
//!   checks, the exact-rational LP bound, and the determinant/Cramer
//!   identities behind the closed-form optimum.
//!
//! All randomness is seeded; identical seeds give bit-identical plans,
//! channels, and results.

pub mod analysis;
pub mod indexing;
pub mod la;
pub mod params;
pub mod precoder;
pub mod rational;
pub mod receiver;
pub mod sim;
pub mod switching;

mod error;

pub use error::{Error, Result};
pub use la::{CMatrix, CVector, C64};
pub use params::{
    derive, ic_sum_ldof, per_user_ldof, region_vertices, sum_ldof, AntennaConfig, Case,
    DerivedParams, IcConfig, IcUser, RegionVertices, SchemeParams, UserAntennas,
};
pub use precoder::{build_ic_plan, build_plan, SchemeLayout, TransmitPlan, UserScheme};
pub use rational::Rational;
pub use receiver::{verify_ldof, LdofReport, SimulationResult, UserDecode};
pub use sim::{end_to_end, run_trials, TrialSummary};
pub use switching::{assemble_schedule, simulate, ChannelSet, ReceivedSignals, SelectionSchedule};
