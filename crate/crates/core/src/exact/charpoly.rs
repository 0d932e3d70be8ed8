//! Characteristic polynomials and signed coronals over exact integers.
//!
//! Faddeev-LeVerrier produces the coefficients of `det(xI - M)` together with
//! the matrices `N_k` of `adj(xI - M) = sum_k N_k x^(n-k)`, so the coronal
//! numerator `mu^T adj(xI - M) mu` falls out of the same recurrence.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Marking;
use crate::matrix::IntMatrix;

use super::poly::IntPolynomial;

struct Faddeev {
    char_poly: IntPolynomial,
    adjugate_terms: Vec<Vec<BigInt>>,
}

fn faddeev(m: &IntMatrix) -> Faddeev {
    let n = m.order();
    let sparse: Vec<Vec<(usize, i64)>> = (0..n)
        .map(|i| (0..n).filter(|&j| m[(i, j)] != 0).map(|j| (j, m[(i, j)])).collect())
        .collect();

    // coefficient of x^(n-k) lives in c[k]
    let mut c = vec![BigInt::zero(); n + 1];
    c[0] = BigInt::one();
    let mut terms = Vec::with_capacity(n);
    let mut prev = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // N_k = M N_{k-1} + c_{k-1} I
        let mut cur = vec![BigInt::zero(); n * n];
        if k > 1 {
            for i in 0..n {
                for &(l, a) in &sparse[i] {
                    let a = BigInt::from(a);
                    for j in 0..n {
                        let t = &prev[l * n + j];
                        if !t.is_zero() {
                            cur[i * n + j] += &a * t;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            cur[i * n + i] += &c[k - 1];
        }
        // c_k = -tr(M N_k) / k
        let mut tr = BigInt::zero();
        for i in 0..n {
            for &(l, a) in &sparse[i] {
                tr += BigInt::from(a) * &cur[l * n + i];
            }
        }
        let kk = BigInt::from(k as u64);
        debug_assert!((&tr % &kk).is_zero(), "Faddeev-LeVerrier trace not divisible");
        c[k] = -(tr / kk);
        terms.push(cur.clone());
        prev = cur;
    }
    c.reverse();
    Faddeev { char_poly: IntPolynomial::new(c), adjugate_terms: terms }
}

/// Monic `det(xI - M)`.
pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    faddeev(m).char_poly
}

/// `mu^T adj(xI - M) mu` and `det(xI - M)`, unreduced.
pub fn coronal_parts(m: &IntMatrix, mu: &Marking) -> Result<(IntPolynomial, IntPolynomial)> {
    let n = m.order();
    if mu.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: mu.len() });
    }
    let fl = faddeev(m);
    let w = mu.values();
    // N_k multiplies x^(n-k)
    let mut num = vec![BigInt::zero(); n];
    for (k, term) in fl.adjugate_terms.iter().enumerate() {
        let mut s = BigInt::zero();
        for i in 0..n {
            for j in 0..n {
                let t = &term[i * n + j];
                if !t.is_zero() {
                    if w[i] * w[j] > 0 {
                        s += t;
                    } else {
                        s -= t;
                    }
                }
            }
        }
        num[n - 1 - k] = s;
    }
    Ok((IntPolynomial::new(num), fl.char_poly))
}

/// Signed coronal `mu^T (xI - M)^{-1} mu` as a reduced fraction `P / F`.
///
/// `F` is monic and `gcd(P, F) = 1`. `common` is the removed factor `R`, so
/// `P R` and `F R` are the adjugate numerator and the characteristic
/// polynomial. `P` keeps its content: the coronal of `K2` is `2/(x-1)`.
/// Equality compares the reduced fraction only.
#[derive(Debug, Clone)]
pub struct Coronal {
    pub numerator: IntPolynomial,
    pub denominator: IntPolynomial,
    pub common: IntPolynomial,
}

impl Coronal {
    /// Reduces `p / f` for monic `f`.
    pub fn reduce(p: &IntPolynomial, f: &IntPolynomial) -> Coronal {
        assert!(f.is_monic(), "denominator must be monic");
        let mut r = p.gcd(f);
        if r.is_zero() {
            r = IntPolynomial::one();
        }
        let numerator = p.div_exact(&r).expect("gcd divides numerator");
        let denominator = f.div_exact(&r).expect("gcd divides denominator");
        Coronal { numerator, denominator, common: r }
    }

    /// Number of poles counted with multiplicity (`d` in `P_{d-1}/F_d`).
    pub fn degree(&self) -> usize {
        self.denominator.degree().unwrap_or(0)
    }

    /// Substitutes `x -> x - 1`.
    pub fn shifted(&self) -> Coronal {
        Coronal {
            numerator: self.numerator.shift(-1),
            denominator: self.denominator.shift(-1),
            common: self.common.shift(-1),
        }
    }

    /// Rational-function equality by cross-multiplication.
    pub fn same_function(&self, p: &IntPolynomial, f: &IntPolynomial) -> bool {
        &self.numerator * f == p * &self.denominator
    }
}

impl PartialEq for Coronal {
    fn eq(&self, other: &Self) -> bool {
        self.numerator == other.numerator && self.denominator == other.denominator
    }
}

impl Eq for Coronal {}

impl std::hash::Hash for Coronal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.numerator.hash(state);
        self.denominator.hash(state);
    }
}

pub fn coronal(m: &IntMatrix, mu: &Marking) -> Result<Coronal> {
    let (p, f) = coronal_parts(m, mu)?;
    Ok(Coronal::reduce(&p, &f))
}

pub fn shifted_coronal(c: &Coronal) -> Coronal {
    c.shifted()
}
