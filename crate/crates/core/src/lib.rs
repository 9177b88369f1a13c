//! Exact arithmetic for Galois descent of pointed fusion categories.
//!
//! The crate is organised by subsystem:
//!
//! * [`arith`]: prime powers, Fermat primes, Gauss numbers, quadratic residues.
//! * [`based_ring`]: weak unital based rings, the rank-2/3 families and
//!   Galois orbit rings, Frobenius–Perron dimensions.
//! * [`cohomology`]: `H^k(G, M)` for finite abelian `G` and finite `M` through
//!   the bar complex, cocycle checks and the carry 3-cocycles on `Z/n`.
//! * [`brauer`]: Hilbert symbols, quaternion algebras over `Q`, `Br_n(K)`.
//! * [`descent`]: forms and minimal fields of definition of `Vec_{Z/n}^ω`.
//! * [`categorify`]: categorifiability verdicts for the weak fusion rings
//!   `R_m`, `R_{p,r}`, `S_k`, `T_k` and `S_{a,b}`.

pub mod arith;
pub mod based_ring;
pub mod brauer;
pub mod categorify;
pub mod cohomology;
pub mod descent;
mod error;
pub mod field;

pub use error::{Error, Result};
