//! Reduced Grothendieck groups of the quadric rings
//! `R_{n,m} = k[x_1..x_n, y_1..y_m] / (Σ x_i^2 - Σ y_j^2 - 1)`.
//!
//! The answer depends on `k` only through its [`FieldProfile`]. It is read
//! off from the Clifford algebra of the form: `Z` when `C(q)` splits as
//! `A × A`, otherwise `0` or `Z/2` according to whether adding one more
//! square leaves the simple-module dimension unchanged or doubles it.
//!
//! * [`symbolic`] computes the Clifford algebras as labels `M_{2^t}(K|C|H)`.
//! * [`clifford`] and [`wedderburn`] build the same algebras from structure
//!   constants over `F_p` and classify them by brute force.
//! * [`witness`] checks explicit isomorphisms over `Q` and `F_p`.
//! * [`verify`] runs the label calculus against the oracle.
//! * [`report`] and [`geometry`] produce the line-oriented CLI output.

pub mod clifford;
pub mod field;
pub mod form;
pub mod geometry;
pub mod linalg;
pub mod report;
pub mod symbolic;
pub mod verify;
pub mod wedderburn;
pub mod witness;

pub use field::{FieldDescriptor, FieldProfile, PrimeField, Rationals};
pub use form::SignatureForm;
pub use symbolic::{abs_group, clifford_of_signature, closed_form_k0, AlgebraLabel, K0Class};
