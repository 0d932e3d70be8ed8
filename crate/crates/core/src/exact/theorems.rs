//! Characteristic polynomials of `g1 ⊛ g2` from the factors alone.
//!
//! With `f2 = det(xI - M2)`, `p2 = mu2^T adj(xI - M2) mu2` and
//! `g(t) = det(tI - A(G1mu)^2) = prod_i (t - lambda'_i^2)`, each closed form
//! `f2^n1 * prod_i (c(x) - lambda'_i^2)` with `c = h / f2` clears to
//!
//! ```text
//! sum_k g_k h^k f2^(n1 - k)
//! ```
//!
//! which never needs an eigenvalue. For `A`, `h = x^2 f2 - x p2`. For `L` and
//! `Q` the factor polynomials are shifted by one (`F(x) = f2(x - 1)`) and
//! `h = ((x - r1 - n2) F - P)(x - r1)` for an `r1`-regular `g1`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{GraphMatrix, SignedGraph};
use crate::products::add_vertex_corona;

use super::charpoly::{char_poly, coronal_parts};
use super::poly::IntPolynomial;

/// `det(tI - A(G_mu)^2)` for the canonical marking; roots are the squared
/// adjacency eigenvalues of the mu-signed graph.
pub fn squared_spectrum_poly(g: &SignedGraph) -> IntPolynomial {
    let a = g.adjacency();
    char_poly(&a.mul(&a))
}

pub(crate) fn mu_squared_poly(g1: &SignedGraph) -> IntPolynomial {
    let g1mu = g1.mu_signed(&g1.canonical_marking()).expect("marking has graph order");
    squared_spectrum_poly(&g1mu)
}

/// `sum_k g_k h^k f^(n - k)` where `n = deg g`.
pub(crate) fn clear_denominators(g: &IntPolynomial, h: &IntPolynomial, f: &IntPolynomial) -> IntPolynomial {
    let n = g.degree().unwrap_or(0);
    let mut acc = IntPolynomial::zero();
    let mut h_pow = IntPolynomial::one();
    let f_pows: Vec<IntPolynomial> = {
        let mut v = vec![IntPolynomial::one()];
        for k in 1..=n {
            let next = &v[k - 1] * f;
            v.push(next);
        }
        v
    };
    for k in 0..=n {
        let gk = g.coeff(k);
        if gk != BigInt::from(0) {
            let term = (&h_pow * &f_pows[n - k]).scale(&gk);
            acc = &acc + &term;
        }
        h_pow = &h_pow * h;
    }
    acc
}

/// `det(xI - A(g1 ⊛ g2))` from the adjacency theorem.
pub fn product_char_poly_a(g1: &SignedGraph, g2: &SignedGraph) -> IntPolynomial {
    let (p2, f2) = coronal_parts(&g2.adjacency(), &g2.canonical_marking())
        .expect("marking has graph order");
    let x = IntPolynomial::x();
    let h = &(&(&x * &x) * &f2) - &(&x * &p2);
    clear_denominators(&mu_squared_poly(g1), &h, &f2)
}

fn regular_degree(g1: &SignedGraph) -> Result<i64> {
    if g1.order() == 0 {
        return Ok(0);
    }
    g1.regularity().degree_regular.map(|r| r as i64).ok_or(Error::NotRegular)
}

fn laplacian_like(g1: &SignedGraph, g2: &SignedGraph, which: GraphMatrix) -> Result<IntPolynomial> {
    let r1 = regular_degree(g1)?;
    let n2 = g2.order() as i64;
    let (p2, f2) = coronal_parts(&g2.matrix(which), &g2.canonical_marking())
        .expect("marking has graph order");
    let big_f = f2.shift(-1);
    let big_p = p2.shift(-1);
    let x_minus = |c: i64| IntPolynomial::from_i64s(&[-c, 1]);
    let h = &(&(&x_minus(r1 + n2) * &big_f) - &big_p) * &x_minus(r1);
    Ok(clear_denominators(&mu_squared_poly(g1), &h, &big_f))
}

/// `det(xI - L(g1 ⊛ g2))` for degree-regular `g1`.
pub fn product_char_poly_l(g1: &SignedGraph, g2: &SignedGraph) -> Result<IntPolynomial> {
    laplacian_like(g1, g2, GraphMatrix::L)
}

/// `det(xI - Q(g1 ⊛ g2))` for degree-regular `g1`.
pub fn product_char_poly_q(g1: &SignedGraph, g2: &SignedGraph) -> Result<IntPolynomial> {
    laplacian_like(g1, g2, GraphMatrix::Q)
}

pub fn product_char_poly(
    which: GraphMatrix,
    g1: &SignedGraph,
    g2: &SignedGraph,
) -> Result<IntPolynomial> {
    match which {
        GraphMatrix::A => Ok(product_char_poly_a(g1, g2)),
        GraphMatrix::L => product_char_poly_l(g1, g2),
        GraphMatrix::Q => product_char_poly_q(g1, g2),
    }
}

/// Closed form against the characteristic polynomial of the constructed product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    pub which: GraphMatrix,
    pub formula: IntPolynomial,
    pub direct: IntPolynomial,
}

impl TheoremCheck {
    pub fn holds(&self) -> bool {
        self.formula == self.direct
    }
}

pub fn verify_theorem(which: GraphMatrix, g1: &SignedGraph, g2: &SignedGraph) -> Result<TheoremCheck> {
    let formula = product_char_poly(which, g1, g2)?;
    let (product, _) = add_vertex_corona(g1, g2);
    let direct = char_poly(&product.matrix(which));
    Ok(TheoremCheck { which, formula, direct })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn from_roots(roots: &[i64]) -> IntPolynomial {
        roots.iter().fold(IntPolynomial::one(), |acc, &r| &acc * &IntPolynomial::linear_root(r))
    }

    #[test]
    fn adjacency_small_cases() {
        let k1 = SignedGraph::empty(1);
        assert_eq!(product_char_poly_a(&k1, &k1), p(&[0, -1, 0, 1]));
        // two disjoint P3: x^2 (x^2 - 2)^2
        let want = &IntPolynomial::monomial(1.into(), 2) * &p(&[-2, 0, 1]).pow(2);
        assert_eq!(product_char_poly_a(&SignedGraph::path(2), &k1), want);
        // K4 + K1
        assert_eq!(
            product_char_poly_a(&k1, &SignedGraph::cycle(3)),
            from_roots(&[0, 3, -1, -1, -1])
        );
    }

    #[test]
    fn p2_c3_is_monic_degree_ten() {
        let c = verify_theorem(GraphMatrix::A, &SignedGraph::path(2), &SignedGraph::cycle(3)).unwrap();
        assert!(c.holds());
        assert!(c.formula.is_monic());
        assert_eq!(c.formula.degree(), Some(10));
    }

    #[test]
    fn laplacian_small_cases() {
        let k1 = SignedGraph::empty(1);
        assert_eq!(product_char_poly_l(&k1, &k1).unwrap(), from_roots(&[0, 0, 2]));
        assert_eq!(
            product_char_poly_l(&SignedGraph::path(2), &k1).unwrap(),
            from_roots(&[0, 0, 1, 1, 3, 3])
        );
    }

    #[test]
    fn signless_small_cases() {
        let k1 = SignedGraph::empty(1);
        assert_eq!(product_char_poly_q(&k1, &k1).unwrap(), from_roots(&[0, 0, 2]));
        let c = verify_theorem(GraphMatrix::Q, &SignedGraph::path(2), &k1).unwrap();
        assert!(c.holds());
    }

    #[test]
    fn balanced_product_has_laplacian_root_zero() {
        let g1 = SignedGraph::cycle(4).with_signs(0b0110);
        let g2 = SignedGraph::path(3);
        let (prod, _) = add_vertex_corona(&g1, &g2);
        assert!(prod.is_balanced());
        assert_eq!(product_char_poly_l(&g1, &g2).unwrap().coeff(0), BigInt::from(0));
    }

    #[test]
    fn bipartite_q_equals_l() {
        // P2 ⊛ K1 is two disjoint P3, bipartite and all-positive
        let k1 = SignedGraph::empty(1);
        let g1 = SignedGraph::path(2);
        assert_eq!(product_char_poly_q(&g1, &k1).unwrap(), product_char_poly_l(&g1, &k1).unwrap());
    }

    #[test]
    fn non_regular_first_factor_rejected() {
        let k1 = SignedGraph::empty(1);
        assert_eq!(product_char_poly_l(&SignedGraph::path(3), &k1), Err(Error::NotRegular));
        assert_eq!(product_char_poly_q(&SignedGraph::path(3), &k1), Err(Error::NotRegular));
    }

    #[test]
    fn balanced_first_factor_squared_spectrum_unchanged() {
        let g1 = SignedGraph::cycle(4).with_signs(0b0101);
        assert!(g1.is_balanced());
        let g1mu = g1.mu_signed(&g1.canonical_marking()).unwrap();
        assert_eq!(squared_spectrum_poly(&g1), squared_spectrum_poly(&g1mu));
    }
}
