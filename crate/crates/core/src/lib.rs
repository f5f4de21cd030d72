#![cfg_attr(not(test), no_std)]
//! Skein-theoretic invariants of links: framed Homfly and Dubrovnik Kauffman
//! evaluation, eigenvalues of meridian maps on the annulus, and the mod-2
//! satellite relations tying the Kauffman polynomial of a link to Homfly
//! polynomials of its adjoint cables.

extern crate alloc;

pub mod ring;
pub mod partition;
pub mod eigen;
pub mod diagram;
pub mod corpus;
pub mod skein;
pub mod annulus;
pub mod verify;
