//! Real roots of integer polynomials.
//!
//! Roots are isolated exactly (square-free decomposition, Sturm sequences and
//! sign evaluation at dyadic rationals) and then refined by bisection, so
//! multiple and clustered roots are handled without floating-point guesswork.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::IntPolynomial;

/// Yun's square-free decomposition: `p = c * prod_i s_i^i` with each `s_i`
/// square-free and primitive. Returns `(s_i, i)` for non-constant factors.
pub fn square_free_decomposition(p: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    // integer-scaled Yun: b_i and c_i always share one rational scale factor
    let dp = p.derivative();
    let a = p.gcd(&dp);
    let mut bb = p.div_exact(&a).expect("gcd divides p");
    let mut c = dp.div_exact(&a).expect("gcd divides p'");
    let mut d = &c - &bb.derivative();
    let mut i = 1;
    while bb.degree().unwrap_or(0) > 0 {
        let s = bb.gcd(&d);
        if s.degree().unwrap_or(0) > 0 {
            out.push((s.clone(), i));
        }
        bb = bb.div_exact(&s).expect("s divides b");
        c = d.div_exact(&s).expect("s divides d");
        d = &c - &bb.derivative();
        i += 1;
    }
    out
}

/// Dyadic rational `num / 2^exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    fn int(v: BigInt) -> Self {
        Dyadic { num: v, exp: 0 }
    }

    fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        let e = a.exp.max(b.exp);
        let an = &a.num << (e - a.exp);
        let bn = &b.num << (e - b.exp);
        let mut m = Dyadic { num: an + bn, exp: e + 1 };
        while m.exp > 0 && m.num.is_even() {
            m.num >>= 1;
            m.exp -= 1;
        }
        m
    }

    fn to_f64(&self) -> f64 {
        // split to avoid overflow of huge numerators
        let bits = self.num.bits();
        if bits > 1000 {
            let shift = bits - 900;
            let n = (&self.num >> shift).to_f64().unwrap();
            n * 2f64.powi(shift as i32 - self.exp as i32)
        } else {
            self.num.to_f64().unwrap() * 2f64.powi(-(self.exp as i32))
        }
    }
}

/// Sign of `p(x)` at a dyadic point.
fn sign_at(p: &IntPolynomial, x: &Dyadic) -> i8 {
    let coeffs = p.coeffs();
    let Some(d) = p.degree() else { return 0 };
    // 2^(exp*d) p(num/2^exp) = sum c_i num^i 2^(exp (d - i))
    let mut acc = coeffs[d].clone();
    for i in (0..d).rev() {
        acc = acc * &x.num + (&coeffs[i] << (x.exp as usize * (d - i)));
    }
    sign_of(&acc)
}

fn sign_of(v: &BigInt) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_negative() {
        -1
    } else {
        1
    }
}

/// Sturm sequence of a square-free polynomial, scaled by positive constants only.
fn sturm_sequence(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut seq = vec![positive_scaled(p), positive_scaled(&p.derivative())];
    loop {
        let n = seq.len();
        if seq[n - 1].degree().unwrap_or(0) == 0 {
            break;
        }
        let r = seq[n - 2].pseudo_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(positive_scaled(&-r));
    }
    seq
}

fn positive_scaled(p: &IntPolynomial) -> IntPolynomial {
    let c = p.content();
    if c.is_zero() {
        return p.clone();
    }
    IntPolynomial::new(p.coeffs().iter().map(|x| x / &c).collect())
}

fn sign_changes(seq: &[IntPolynomial], x: &Dyadic) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in seq {
        let s = sign_at(p, x);
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Power of two strictly above every root modulus (Cauchy bound).
fn root_bound(p: &IntPolynomial) -> BigInt {
    let lead = p.leading().unwrap().abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap();
    let bound = max.div_ceil(&lead) + 1u32;
    let mut b = BigInt::from(1);
    while b <= bound {
        b <<= 1;
    }
    b
}

/// Distinct real roots of a square-free polynomial, ascending, each refined to
/// an interval narrower than `tol`.
fn square_free_real_roots(p: &IntPolynomial, tol: f64) -> Vec<f64> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let seq = sturm_sequence(p);
    let b = root_bound(p);
    let lo = Dyadic::int(-b.clone());
    let hi = Dyadic::int(b);
    let count = |a: &Dyadic, b: &Dyadic| sign_changes(&seq, a) - sign_changes(&seq, b);

    // isolate: intervals (a, b] holding exactly one root
    let mut stack = vec![(lo, hi)];
    let mut isolated = Vec::new();
    while let Some((a, b)) = stack.pop() {
        match count(&a, &b) {
            0 => {}
            1 => isolated.push((a, b)),
            _ => {
                let m = Dyadic::midpoint(&a, &b);
                stack.push((m.clone(), b));
                stack.push((a, m));
            }
        }
    }

    let mut roots = Vec::with_capacity(isolated.len());
    for (mut a, mut b) in isolated {
        if sign_at(p, &b) == 0 {
            roots.push(b.to_f64());
            continue;
        }
        // move the open end off any neighbouring root
        while sign_at(p, &a) == 0 {
            let m = Dyadic::midpoint(&a, &b);
            if count(&a, &m) == 1 {
                b = m;
            } else {
                a = m;
            }
        }
        let sa = sign_at(p, &a);
        while b.to_f64() - a.to_f64() > tol {
            let m = Dyadic::midpoint(&a, &b);
            let sm = sign_at(p, &m);
            if sm == 0 {
                a = m.clone();
                b = m;
                break;
            }
            if sm == sa {
                a = m;
            } else {
                b = m;
            }
        }
        roots.push(0.5 * (a.to_f64() + b.to_f64()));
    }
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots
}

/// All real roots with multiplicity, ascending.
pub fn real_roots(p: &IntPolynomial, tol: f64) -> Vec<f64> {
    let mut out = Vec::new();
    for (s, mult) in square_free_decomposition(p) {
        for r in square_free_real_roots(&s, tol) {
            out.extend(std::iter::repeat_n(r, mult));
        }
    }
    out.sort_by(|x, y| x.partial_cmp(y).unwrap());
    out
}

/// Number of distinct real roots (Sturm count on the square-free part).
pub fn distinct_real_root_count(p: &IntPolynomial) -> usize {
    square_free_decomposition(p)
        .iter()
        .map(|(s, _)| square_free_real_roots(s, 1.0).len())
        .sum()
}

/// Integer roots with multiplicity when monic `p` splits into integer linear
/// factors, otherwise `None`. Candidates are divisors of the trailing nonzero
/// coefficient bounded by `bound` in absolute value; every division is exact.
pub fn integer_roots(p: &IntPolynomial, bound: u64) -> Option<Vec<i64>> {
    assert!(!p.is_zero());
    let mut rest = p.clone();
    let mut roots = Vec::new();
    // zero roots
    while rest.coeff(0).is_zero() && rest.degree().unwrap_or(0) > 0 {
        rest = rest.div_exact(&IntPolynomial::x()).unwrap();
        roots.push(0);
    }
    let bound = bound as i64;
    for t in 1..=bound {
        for r in [t, -t] {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            if !(rest.coeff(0) % BigInt::from(r)).is_zero() {
                continue;
            }
            let lin = IntPolynomial::linear_root(r);
            while let Some(q) = rest.div_exact(&lin) {
                rest = q;
                roots.push(r);
            }
        }
    }
    if rest.degree().unwrap_or(0) != 0 || !rest.coeff(0).abs().is_one() {
        return None;
    }
    roots.sort_unstable_by(|a, b| b.cmp(a));
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn from_roots(roots: &[i64]) -> IntPolynomial {
        roots.iter().fold(IntPolynomial::one(), |acc, &r| &acc * &IntPolynomial::linear_root(r))
    }

    #[test]
    fn square_free_parts() {
        // (x-2)(x+1)^2
        let f = p(&[-2, -3, 0, 1]);
        let parts = square_free_decomposition(&f);
        assert_eq!(parts, vec![(p(&[-2, 1]), 1), (p(&[1, 1]), 2)]);
    }

    #[test]
    fn roots_with_multiplicity() {
        let f = from_roots(&[3, -1, -1, -1, 0]);
        let r = real_roots(&f, 1e-12);
        let want = [-1.0, -1.0, -1.0, 0.0, 3.0];
        assert_eq!(r.len(), 5);
        for (a, b) in r.iter().zip(want) {
            assert!((a - b).abs() < 1e-10, "{r:?}");
        }
    }

    #[test]
    fn irrational_roots() {
        // x^2 - 2
        let r = real_roots(&p(&[-2, 0, 1]), 1e-13);
        assert!((r[0] + 2f64.sqrt()).abs() < 1e-12);
        assert!((r[1] - 2f64.sqrt()).abs() < 1e-12);
        // x^2 + 1 has none
        assert!(real_roots(&p(&[1, 0, 1]), 1e-12).is_empty());
        assert_eq!(distinct_real_root_count(&p(&[0, -1, 0, 1])), 3);
    }

    #[test]
    fn integer_root_search() {
        assert_eq!(integer_roots(&p(&[-2, -3, 0, 1]), 2), Some(vec![2, -1, -1]));
        assert_eq!(integer_roots(&p(&[0, -2, 0, 1]), 2), None);
        assert_eq!(integer_roots(&p(&[0, 1]), 0), Some(vec![0]));
        assert_eq!(integer_roots(&p(&[1]), 0), Some(vec![]));
    }

    proptest! {
        #[test]
        fn recovers_integer_roots(roots in proptest::collection::vec(-6i64..=6, 1..9)) {
            let f = from_roots(&roots);
            let mut want: Vec<f64> = roots.iter().map(|&r| r as f64).collect();
            want.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let got = real_roots(&f, 1e-12);
            prop_assert_eq!(got.len(), want.len());
            for (a, b) in got.iter().zip(&want) {
                prop_assert!((a - b).abs() < 1e-9);
            }
            let mut sorted = roots.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            prop_assert_eq!(integer_roots(&f, 6), Some(sorted));
        }

        #[test]
        fn half_integer_roots_are_found(k in -5i64..5) {
            // (2x - (2k+1)) has root k + 1/2
            let f = p(&[-(2 * k + 1), 2]);
            let r = real_roots(&f, 1e-12);
            prop_assert!((r[0] - (k as f64 + 0.5)).abs() < 1e-12);
        }
    }
}
