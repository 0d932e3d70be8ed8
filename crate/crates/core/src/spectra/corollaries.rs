//! Closed-form spectra of `g1 ⊛ g2` for co-regular `g2` and for signed stars,
//! plus the matching integrality conditions.
//!
//! Each family of small factor equations (one cubic or quartic per eigenvalue
//! of the first factor) is multiplied out into a single integer polynomial
//! whose roots are found by exact isolation.

use crate::error::{Error, Result};
use crate::exact::roots::{integer_roots, real_roots};
use crate::exact::theorems::{clear_denominators, mu_squared_poly};
use crate::exact::{char_poly, squared_spectrum_poly, IntPolynomial};
use crate::graph::{GraphMatrix, Sign, SignedGraph};
use crate::products::add_vertex_corona;

use super::{is_integral, Spectrum};

const ROOT_TOL: f64 = 1e-13;

fn max_degree(g: &SignedGraph) -> usize {
    (0..g.order()).map(|v| g.degree(v)).max().unwrap_or(0)
}

/// `(k, p)`: net degree of co-regular `g2` and its multiplicity as an
/// adjacency eigenvalue.
fn coregular_parameters(g2: &SignedGraph) -> Result<(i64, usize)> {
    let (_, k) = g2.regularity().co_regular_pair.ok_or(Error::NotCoRegular)?;
    let p = char_poly(&g2.adjacency()).root_multiplicity(k);
    if p == 0 {
        return Err(Error::NetDegreeNotEigenvalue(k));
    }
    Ok((k, p))
}

/// Product over the eigenvalues `l` of `A(G1mu)` of
/// `x^3 - k x^2 - (n2 + l^2) x + k l^2`.
fn cubic_product(g1: &SignedGraph, n2: usize, k: i64) -> IntPolynomial {
    let n2 = n2 as i64;
    let c = IntPolynomial::from_i64s(&[0, -n2, -k, 1]);
    let d = IntPolynomial::from_i64s(&[-k, 1]);
    clear_denominators(&mu_squared_poly(g1), &c, &d)
}

/// Product over the eigenvalues `l` of `A(G1)` of
/// `x^4 - (2 n2 + 1 + l^2) x^2 - 2 n2 mu x + n2 l^2`.
fn quartic_product(g1: &SignedGraph, n2: usize, center: Sign) -> IntPolynomial {
    let n2 = n2 as i64;
    let c = IntPolynomial::from_i64s(&[0, -2 * n2 * center.value(), -(2 * n2 + 1), 0, 1]);
    let d = IntPolynomial::from_i64s(&[-n2, 0, 1]);
    clear_denominators(&squared_spectrum_poly(g1), &c, &d)
}

/// Adjacency spectrum of `g1 ⊛ g2` for co-regular `g2` with net degree `k`.
pub fn corollary_coregular_spectrum(g1: &SignedGraph, g2: &SignedGraph) -> Result<Spectrum> {
    let (k, p) = coregular_parameters(g2)?;
    let n1 = g1.order();
    let f2 = char_poly(&g2.adjacency());
    let rest = f2.div_exact(&IntPolynomial::linear_root(k).pow(p as u32)).expect("k has multiplicity p");

    let mut values = Vec::with_capacity(n1 * (2 + g2.order()));
    for r in real_roots(&rest, ROOT_TOL) {
        values.extend(std::iter::repeat_n(r, n1));
    }
    values.extend(real_roots(&cubic_product(g1, g2.order(), k), ROOT_TOL));
    values.extend(std::iter::repeat_n(k as f64, n1 * (p - 1)));
    Ok(Spectrum::new(values, Some(GraphMatrix::A)))
}

/// The star `K(1,n2)` with center `0` whose canonical center mark is
/// `center`: all edges positive, except the first one when `center` is negative.
pub fn signed_star(n2: usize, center: Sign) -> SignedGraph {
    assert!(n2 >= 1, "a star needs at least one leaf");
    let star = SignedGraph::star(n2);
    star.with_signs(u64::from(!center.is_pos()))
}

/// `(n2, center mark)` when `g` is a star `K(1,n2)`, `n2 >= 1`. For `K2` the
/// center is vertex `0`.
pub fn star_parameters(g: &SignedGraph) -> Result<(usize, Sign)> {
    let n = g.order();
    if n < 2 || g.size() != n - 1 {
        return Err(Error::NotAStar);
    }
    let center = (0..n).find(|&v| g.degree(v) == n - 1).ok_or(Error::NotAStar)?;
    Ok((n - 1, g.canonical_marking().get(center)))
}

/// Adjacency spectrum of `g1 ⊛ K(1,n2)` for balanced `g1`, the star's
/// center carrying canonical mark `center`.
pub fn corollary_star_spectrum(g1: &SignedGraph, n2: usize, center: Sign) -> Result<Spectrum> {
    if n2 == 0 {
        return Err(Error::NotAStar);
    }
    if !g1.is_balanced() {
        return Err(Error::Unbalanced);
    }
    let n1 = g1.order();
    let mut values = vec![0.0; n1 * (n2 - 1)];
    values.extend(real_roots(&quartic_product(g1, n2, center), ROOT_TOL));
    Ok(Spectrum::new(values, Some(GraphMatrix::A)))
}

/// The three ingredients of the integrality conditions next to the exact
/// verdict on the built product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegralityCheck {
    /// `G1mu` integral for the co-regular case, `G1` for the star case.
    pub first_factor_integral: bool,
    pub second_factor_integral: bool,
    /// Every root of every cubic (or quartic) factor equation is an integer.
    pub factor_roots_integral: bool,
    pub product_integral: bool,
}

impl IntegralityCheck {
    pub fn conditions_hold(&self) -> bool {
        self.first_factor_integral && self.second_factor_integral && self.factor_roots_integral
    }
}

fn root_bound(g1: &SignedGraph, g2: &SignedGraph) -> u64 {
    (g2.order() + max_degree(g1) + max_degree(g2) + 1) as u64
}

pub fn coregular_integrality(g1: &SignedGraph, g2: &SignedGraph) -> Result<IntegralityCheck> {
    let (k, _) = coregular_parameters(g2)?;
    let g1mu = g1.mu_signed(&g1.canonical_marking())?;
    let cubic = cubic_product(g1, g2.order(), k);
    Ok(IntegralityCheck {
        first_factor_integral: is_integral(&g1mu).is_some(),
        second_factor_integral: is_integral(g2).is_some(),
        factor_roots_integral: integer_roots(&cubic, root_bound(g1, g2)).is_some(),
        product_integral: is_integral(&add_vertex_corona(g1, g2).0).is_some(),
    })
}

pub fn star_integrality(g1: &SignedGraph, star: &SignedGraph) -> Result<IntegralityCheck> {
    let (n2, center) = star_parameters(star)?;
    if !g1.is_balanced() {
        return Err(Error::Unbalanced);
    }
    let quartic = quartic_product(g1, n2, center);
    Ok(IntegralityCheck {
        first_factor_integral: is_integral(g1).is_some(),
        second_factor_integral: is_integral(star).is_some(),
        factor_roots_integral: integer_roots(&quartic, root_bound(g1, star)).is_some(),
        product_integral: is_integral(&add_vertex_corona(g1, star).0).is_some(),
    })
}
