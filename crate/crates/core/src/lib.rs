//! Desk-scale simulator for quantum-protected healthcare-style data management.
//!
//! The crate couples three pieces behind one protocol harness:
//!
//! - dense statevector / density-matrix simulation of small qubit registers
//!   ([`quantum`]), the numerical substrate for everything else;
//! - basis encoding plus quantum one-time-pad encryption with an
//!   information-theoretic secrecy verifier ([`qotp`]);
//! - rule-based breach-susceptibility scoring of data-access requests
//!   ([`scoring`]) and a trainable dissipative quantum feed-forward network
//!   that screens requests before grant ([`qfnn`]).
//!
//! [`harness`] orchestrates the multi-entity protocol: agencies upload
//! encrypted records, the service scores and screens each request, grants or
//! denies access, and emits seeded, byte-stable report artifacts. [`cli`]
//! exposes the whole pipeline as subcommands of the `iqhdm` binary.
//!
//! Everything is deterministic under an explicit seed; no operation consults
//! ambient entropy unless a seed is intentionally generated (and then it is
//! recorded in the run manifest).

pub mod bits;
pub mod cli;
pub mod harness;
pub mod qfnn;
pub mod qotp;
pub mod quantum;
pub mod scoring;

pub use bits::BitString;
