//! Exact arithmetic over `Z[v^±1, s^±1]`, its localisation at the elements
//! `s^r - s^-r`, and the characteristic-two ring obtained by reducing
//! coefficients mod 2 (where `v -> v^2, s -> s^2` is the Frobenius map).

mod frac;
mod laurent;

pub use frac::RingElem;
pub use laurent::{Characteristic, Exponents, LaurentPoly};

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("operands have different characteristics")]
    MixedCharacteristic,
    #[error("division by zero in {op}")]
    DivisionByZero { op: &'static str },
    #[error("denominator vanishes mod 2")]
    DenominatorVanishesMod2,
    #[error("{op} requires characteristic {expected}")]
    WrongCharacteristic { op: &'static str, expected: u8 },
}
