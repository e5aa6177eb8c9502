//! Exact interpolation of symmetric group representation theory to complex
//! rank.
//!
//! Every quantity attached to `S_n` that is polynomial in `n` (dimensions of
//! irreducibles with a long first row, central character values, Hilbert
//! series of tensor powers and of the associated graded group algebra) is
//! computed here as an exact polynomial in a formal rank `t`, and checked
//! against classical brute-force computations at integer rank.
//!
//! Module map:
//! - [`exactalg`]: rationals, polynomials in `t`, binomial basis, truncated
//!   multivariate series.
//! - [`partitions`]: Young diagram combinatorics.
//! - [`snoracle`]: classical `S_n` ground truth (hook lengths,
//!   Murnaghan-Nakayama, class sums).
//! - [`deligne`]: dimensions, Pieri rule and central eigenvalues in rank `t`.
//! - [`schurweyl`]: Hilbert series of complex tensor powers, parabolic Verma
//!   reducibility candidates, interlacing branching.
//! - [`groupalg`]: Hilbert series of the associated graded group algebra.
//! - [`bounds`]: dimension lower bounds for `S_n` irreducibles.
//! - [`verify`]: the sweeps that tie all of the above to the oracle.

pub mod bounds;
pub mod deligne;
pub mod error;
pub mod exactalg;
pub mod groupalg;
pub mod limits;
pub mod partitions;
pub mod schurweyl;
pub mod snoracle;
pub mod verify;

pub use deligne::Decomposition;
pub use error::{Error, Result};
pub use exactalg::{BinomialPoly, Poly, Rational, Series};
pub use limits::Limits;
pub use partitions::{Cell, ContentConvention, Partition};
pub use snoracle::CycleType;
