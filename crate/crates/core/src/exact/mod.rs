//! Exact arithmetic: everything downstream is zero-tolerance, so nothing here
//! ever touches floating point.

mod matrix;
mod radical;
mod scalar;

pub use matrix::{CMatrix, Matrix, MatrixError, RMatrix};
pub use radical::Radical;
pub use scalar::{fmt_rational, rat, HalfInt, Phase, QComplex};

use std::fmt::Debug;

/// A commutative ring with complex conjugation, exact equality and an
/// embedding of the Gaussian rationals.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn add_ref(&self, o: &Self) -> Self;
    fn from_qcomplex(q: QComplex) -> Self;

    fn neg_ref(&self) -> Self {
        Self::from_qcomplex(QComplex::from_int(-1)).mul_ref(self)
    }

    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
}
