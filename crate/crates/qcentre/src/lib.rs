//! Exact computer algebra for quantized enveloping algebras over a field of
//! rational functions in a fractional power of q.
//!
//! The crate builds the generalized quantum group attached to a Cartan datum
//! (generators `E_i`, `F_i` and `K_lambda` for every weight `lambda`),
//! constructs its finite-dimensional simple modules, evaluates quasi-R-matrix
//! operators on them, and produces explicit central elements together with
//! their Harish-Chandra images.  All arithmetic is exact: scalars are reduced
//! fractions of Laurent polynomials with arbitrary-precision rational
//! coefficients, and every identity checked by the test suite holds on the
//! nose, not up to a tolerance.
//!
//! Module map:
//! - [`qfield`]: the ground field of rational functions in `v`, plus
//!   q-integers, q-factorials and Gaussian binomials.
//! - [`rootdata`]: Cartan matrices, weights, Weyl group orbits, positive
//!   roots from reduced words.
//! - [`linalg`]: small dense/sparse exact matrices.
//! - [`uqalg`]: words in the generators, straightening to the semi-canonical
//!   `F.. K E..` form, Hopf structure, evaluation on modules.
//! - [`braid`]: Lusztig braid-group operators and root vectors.
//! - [`repbuilder`]: simple highest-weight modules, characters, tensor
//!   products, Freudenthal and Weyl-dimension oracles.
//! - [`rmatrix`]: quasi-R-matrix operators, `L`-operators, the operator
//!   `Gamma`, central elements and their closed-form construction.
//! - [`harishchandra`]: projection to the K-span, the twist by `-rho`,
//!   characters, Weyl invariance, decomposition into fundamental characters.
//! - [`pairing`]: the Rosso-type bilinear form, Gram ranks, the extended form
//!   on the whole algebra, and the trace identity test.
//! - [`battery`]: named, versioned lists of probe modules.
//! - [`jsonio`]: deterministic JSON encodings of scalars and elements.

pub mod battery;
pub mod braid;
pub mod error;
pub mod harishchandra;
pub mod jsonio;
pub mod linalg;
pub mod pairing;
pub mod qfield;
pub mod repbuilder;
pub mod rmatrix;
pub mod rootdata;
pub mod uqalg;

pub use error::{Error, Result};
