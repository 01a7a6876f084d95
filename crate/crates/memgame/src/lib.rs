#![no_std]
#![warn(missing_docs)]

//! Two-player quantum games played through noisy channels with memory.
//!
//! The crate covers the whole pipeline of the generalized quantization
//! scheme: an entangled initial state, three-parameter strategy unitaries,
//! an entangled measurement basis, and dephasing / depolarizing /
//! amplitude-damping channels whose two consecutive uses are correlated
//! with degree `mu`.
//!
//! Payoffs come from two independent sources that are expected to agree:
//!
//! - [`oracle`] pushes a 4×4 density matrix through Kraus sets,
//! - [`closedform`] evaluates the analytic payoff for each of the nine
//!   channel pairings.
//!
//! [`equilibrium`] runs grid best-response scans on top of either one.
//!
//! The crate is `no_std` and only needs `alloc`.

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod channels;
pub mod closedform;
pub mod equilibrium;
mod error;
pub mod games;
pub(crate) mod math;
pub mod oracle;
pub mod protocol;
pub mod qmat;

pub use error::{Error, Result};
pub use num_complex::Complex64;
