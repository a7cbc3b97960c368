use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};

use super::matrix::Matrix;

pub type Rational = BigRational;
pub type RatComplex = Complex<BigRational>;
pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<Rational>;
pub type RatComplexMatrix = Matrix<RatComplex>;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn cq(re: Rational, im: Rational) -> RatComplex {
    Complex::new(re, im)
}

pub fn int_to_rat(x: &BigInt) -> Rational {
    Rational::from_integer(x.clone())
}

pub fn int_to_rc(x: &BigInt) -> RatComplex {
    Complex::new(int_to_rat(x), Rational::zero())
}

pub fn is_integral(x: &Rational) -> bool {
    x.denom().is_one()
}

pub fn rat_to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact dyadic rational equal to a finite double.
pub fn rat_from_f64(x: f64) -> Option<Rational> {
    Rational::from_f64(x)
}

pub fn rc_to_c64(z: &RatComplex) -> Complex<f64> {
    Complex::new(rat_to_f64(&z.re), rat_to_f64(&z.im))
}
