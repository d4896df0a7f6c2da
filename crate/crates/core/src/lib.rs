//! Exact polynomial algebra over the rationals for checking how connectivity
//! of minimal primes behaves under square-free Gröbner degenerations.

pub mod combinatorics;
pub mod deformation;
pub mod error;
pub mod gamma;
pub mod groebner;
pub mod io;
pub mod lyubeznik;
pub mod polyring;

pub use combinatorics::{MonomialIdeal, VariablePrime};
pub use error::{Error, Result};
pub use groebner::{Engine, Ideal, Limits, ReducedGroebnerBasis};
pub use polyring::{Coefficient, Monomial, MonomialOrder, Polynomial, RingDescriptor};
