//! Exact integer polynomial machinery: characteristic polynomials, coronals,
//! real-root isolation, and the product characteristic-polynomial identities.

mod charpoly;
mod poly;
pub mod roots;
pub(crate) mod theorems;

pub use charpoly::{char_poly, coronal, coronal_parts, shifted_coronal, Coronal};
pub use poly::{IntPolynomial, ParsePolynomialError};
pub use theorems::{
    product_char_poly, product_char_poly_a, product_char_poly_l, product_char_poly_q,
    squared_spectrum_poly, verify_theorem, TheoremCheck,
};
