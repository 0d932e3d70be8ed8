//! Numeric spectra, energy, integrality and cospectrality.
//!
//! Eigenvalues come from a cyclic Jacobi solver. Every yes/no question
//! (integrality, cospectrality) is answered from exact characteristic
//! polynomials instead.

mod corollaries;
mod equienergetic;
mod jacobi;

use std::fmt;

use crate::error::Result;
use crate::exact::{char_poly, roots::integer_roots};
use crate::graph::{GraphMatrix, SignedGraph};

pub use corollaries::{
    coregular_integrality, corollary_coregular_spectrum, corollary_star_spectrum, signed_star,
    star_integrality, star_parameters, IntegralityCheck,
};
pub use equienergetic::{
    equienergetic_product_pair, search_equienergetic_pairs, EquienergeticPair, EquienergeticReport,
    Inadmissible, SearchOutcome,
};
pub use jacobi::{eig_sym_vectors, Eigen};

/// Eigenvalues in descending order, with multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// Matrix the values belong to; `None` for a bare matrix.
    pub source: Option<GraphMatrix>,
}

impl Spectrum {
    pub fn new(mut eigenvalues: Vec<f64>, source: Option<GraphMatrix>) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        Spectrum { eigenvalues, source }
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// `sum |lambda_i|`.
    pub fn energy(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x.abs()).sum()
    }

    pub fn smallest(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }

    /// Largest elementwise gap after sorting; `None` when the lengths differ.
    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        if self.len() != other.len() {
            return None;
        }
        Some(
            self.eigenvalues
                .iter()
                .zip(&other.eigenvalues)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max),
        )
    }

    pub fn matches(&self, other: &Spectrum, tol: f64) -> bool {
        self.max_deviation(other).is_some_and(|d| d <= tol)
    }
}

/// One eigenvalue per line, 12 significant digits.
impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.eigenvalues {
            writeln!(f, "{}", format_real(x))?;
        }
        Ok(())
    }
}

/// `%.12g`-style rendering; values within `1e-10` of zero print as `0`.
pub fn format_real(x: f64) -> String {
    if x.abs() < 1e-10 {
        return "0".to_string();
    }
    let sci = format!("{:.11e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific form");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim_zeros(mantissa.to_string()), exp)
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnergyReport {
    pub energy: f64,
    pub spectrum: Spectrum,
}

/// Spectrum of a real symmetric matrix.
pub fn eig_sym(m: &[Vec<f64>]) -> Result<Spectrum> {
    jacobi::eigenvalues(m).map(|v| Spectrum::new(v, None))
}

pub fn spectrum(g: &SignedGraph, which: GraphMatrix) -> Result<Spectrum> {
    let values = jacobi::eigenvalues(&g.matrix(which).to_f64())?;
    Ok(Spectrum::new(values, Some(which)))
}

pub fn energy(g: &SignedGraph) -> Result<EnergyReport> {
    let spectrum = spectrum(g, GraphMatrix::A)?;
    Ok(EnergyReport { energy: spectrum.energy(), spectrum })
}

/// Integer adjacency spectrum (descending) when every eigenvalue is an
/// integer. Decided exactly from the characteristic polynomial.
pub fn is_integral(g: &SignedGraph) -> Option<Vec<i64>> {
    let bound = (0..g.order()).map(|v| g.degree(v)).max().unwrap_or(0);
    integer_roots(&char_poly(&g.adjacency()), bound as u64)
}

/// Exact `M`-cospectrality.
pub fn cospectral(g1: &SignedGraph, g2: &SignedGraph, which: GraphMatrix) -> bool {
    g1.order() == g2.order() && char_poly(&g1.matrix(which)) == char_poly(&g2.matrix(which))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Marking;
    use crate::products::{add_vertex_corona, vertex_corona};
    use proptest::prelude::*;

    fn close(s: &Spectrum, want: &[f64], tol: f64) -> bool {
        s.matches(&Spectrum::new(want.to_vec(), s.source), tol)
    }

    #[test]
    fn small_spectra() {
        let r = 2f64.sqrt();
        assert!(close(&spectrum(&SignedGraph::cycle(3), GraphMatrix::A).unwrap(), &[2.0, -1.0, -1.0], 1e-12));
        assert!(close(&spectrum(&SignedGraph::star(2), GraphMatrix::A).unwrap(), &[r, 0.0, -r], 1e-12));
        assert!(close(&spectrum(&SignedGraph::path(2), GraphMatrix::L).unwrap(), &[2.0, 0.0], 1e-12));
        let neg_p2 = SignedGraph::path(2).negated();
        assert!(close(&spectrum(&neg_p2, GraphMatrix::L).unwrap(), &[2.0, 0.0], 1e-12));
    }

    #[test]
    fn unbalanced_triangle_laplacian_is_positive() {
        // L = I + J
        let s = spectrum(&SignedGraph::cycle(3).negated(), GraphMatrix::L).unwrap();
        assert!(close(&s, &[4.0, 1.0, 1.0], 1e-12));
        assert!(s.smallest().unwrap() > 0.5);
    }

    #[test]
    fn energies() {
        assert!((energy(&SignedGraph::cycle(3)).unwrap().energy - 4.0).abs() < 1e-12);
        assert!((energy(&SignedGraph::cycle(3).negated()).unwrap().energy - 4.0).abs() < 1e-12);
        assert_eq!(energy(&SignedGraph::empty(4)).unwrap().energy, 0.0);
    }

    #[test]
    fn integrality() {
        assert_eq!(is_integral(&SignedGraph::cycle(3)), Some(vec![2, -1, -1]));
        assert_eq!(is_integral(&SignedGraph::star(2)), None);
        assert_eq!(is_integral(&SignedGraph::empty(1)), Some(vec![0]));
    }

    #[test]
    fn cospectrality() {
        let c3 = SignedGraph::cycle(3);
        assert!(!cospectral(&c3, &c3.negated(), GraphMatrix::A));
        let theta = Marking::from_values(&[-1, 1, 1]).unwrap();
        assert!(cospectral(&c3, &c3.switch(&theta).unwrap(), GraphMatrix::A));
        let g1 = SignedGraph::path(3).with_signs(0b01);
        let g2 = SignedGraph::cycle(3).with_signs(0b100);
        let (a, _) = add_vertex_corona(&g1, &g2);
        let (b, _) = vertex_corona(&g1, &g2);
        for which in [GraphMatrix::A, GraphMatrix::L, GraphMatrix::Q] {
            assert!(cospectral(&a, &b, which));
        }
    }

    #[test]
    fn formatting() {
        assert_eq!(format_real(2.0), "2");
        assert_eq!(format_real(-1.0), "-1");
        assert_eq!(format_real(1e-13), "0");
        assert_eq!(format_real(2f64.sqrt()), "1.41421356237");
        assert_eq!(format_real(-0.5), "-0.5");
        assert_eq!(format_real(123456.789), "123456.789");
        assert_eq!(format_real(1.5e-7), "1.5e-7");
        let s = Spectrum::new(vec![-1.0, 2.0, -1.0], Some(GraphMatrix::A));
        assert_eq!(s.to_string(), "2\n-1\n-1\n");
    }

    fn signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let m = pairs.len();
            (Just(pairs), proptest::collection::vec(0u8..3, m), Just(n)).prop_map(|(pairs, pick, n)| {
                let edges = pairs.into_iter().zip(pick).filter(|(_, p)| *p > 0).map(|((u, v), p)| {
                    (u, v, if p == 1 { crate::graph::Sign::Pos } else { crate::graph::Sign::Neg })
                });
                SignedGraph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn trace_and_switching(g in signed_graph(7), bits in any::<u8>()) {
            for which in [GraphMatrix::A, GraphMatrix::L, GraphMatrix::Q] {
                let s = spectrum(&g, which).unwrap();
                prop_assert_eq!(s.len(), g.order());
                prop_assert!((s.sum() - g.matrix(which).trace() as f64).abs() < 1e-8);
            }
            let l = spectrum(&g, GraphMatrix::L).unwrap();
            prop_assert!(l.smallest().unwrap() >= -1e-10);
            let theta: Vec<i64> = (0..g.order()).map(|i| if bits >> (i % 8) & 1 == 1 { -1 } else { 1 }).collect();
            let h = g.switch(&Marking::from_values(&theta).unwrap()).unwrap();
            prop_assert!((energy(&g).unwrap().energy - energy(&h).unwrap().energy).abs() < 1e-10);
        }

        #[test]
        fn laplacian_zero_iff_balanced(g in signed_graph(7)) {
            for comp in g.components() {
                let h = g.induced(&comp);
                let low = spectrum(&h, GraphMatrix::L).unwrap().smallest().unwrap();
                prop_assert_eq!(low.abs() < 1e-8, h.is_balanced());
            }
        }

        #[test]
        fn exact_integrality_agrees_with_rounding(g in signed_graph(6)) {
            let s = spectrum(&g, GraphMatrix::A).unwrap();
            let numeric = s.eigenvalues.iter().all(|x| (x - x.round()).abs() < 1e-7);
            let exact = is_integral(&g);
            prop_assert_eq!(exact.is_some(), numeric);
            if let Some(v) = exact {
                for (a, b) in v.iter().zip(&s.eigenvalues) {
                    prop_assert!((*a as f64 - b).abs() < 1e-7);
                }
            }
        }
    }
}
