//! Exact arithmetic in q and t over the rationals.

mod bivariate;
pub mod cyclotomic;
mod laurent;
mod parse;
mod ratfunc;
mod zbasis;

pub use bivariate::LaurentQT;
pub use laurent::LaurentQ;
pub use parse::parse_rational;
pub use ratfunc::RationalQT;
pub use zbasis::{to_z_basis, z_power, ZTPolynomial};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// 1 + (t - t^-1)/(q - q^-1), the value of the unknot colored by the vector representation.
pub fn x_value() -> RationalQT {
    let num = &(&LaurentQT::q_pow(1) - &LaurentQT::q_pow(-1)) + &(&LaurentQT::t_pow(1) - &LaurentQT::t_pow(-1));
    RationalQT::from_poly(num) * RationalQT::inv_q_binomial(1)
}
