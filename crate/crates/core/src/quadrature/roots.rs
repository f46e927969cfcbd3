//! Real zeros of a polynomial by sign scanning and bisection.

use crate::mu_core::DensePolynomial;

const SCAN_POINTS: usize = 4000;

/// Real zeros of `p` inside `[-limit, limit]` where `p` changes sign.
///
/// Zeros of even multiplicity are not sign changes and are not reported.
pub fn real_zeros(p: &DensePolynomial, limit: f64) -> Vec<f64> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let lead = p.coeff(deg).abs();
    let cauchy = 1.0 + p.coeffs()[..deg].iter().map(|c| c.abs() / lead).fold(0.0, f64::max);
    let r = cauchy.min(limit);
    let step = 2.0 * r / SCAN_POINTS as f64;

    let mut zeros = Vec::new();
    let mut a = -r;
    let mut fa = p.eval(a);
    for i in 1..=SCAN_POINTS {
        let b = -r + step * i as f64;
        let fb = p.eval(b);
        if fa == 0.0 {
            zeros.push(a);
        } else if fa * fb < 0.0 {
            zeros.push(bisect(p, a, b, fa));
        }
        a = b;
        fa = fb;
    }
    if fa == 0.0 {
        zeros.push(a);
    }
    zeros
}

fn bisect(p: &DensePolynomial, mut a: f64, mut b: f64, mut fa: f64) -> f64 {
    loop {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            return m;
        }
        let fm = p.eval(m);
        if fm == 0.0 {
            return m;
        }
        if fa * fm < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_simple_roots() {
        // (t - 1)(t + 2)(t - 0.5)
        let p = &(&DensePolynomial::new(vec![-1.0, 1.0]) * &DensePolynomial::new(vec![2.0, 1.0]))
            * &DensePolynomial::new(vec![-0.5, 1.0]);
        let z = real_zeros(&p, 50.0);
        assert_eq!(z.len(), 3);
        for (got, want) in z.iter().zip([-2.0, 0.5, 1.0]) {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn constants_and_squares_have_no_sign_changes() {
        assert!(real_zeros(&DensePolynomial::constant(3.0), 10.0).is_empty());
        assert!(real_zeros(&DensePolynomial::new(vec![1.0, 0.0, 1.0]), 10.0).is_empty());
        assert!(real_zeros(&DensePolynomial::new(vec![1.0, -2.0, 1.0]), 10.0).is_empty());
    }

    #[test]
    fn hermite_zeros() {
        use crate::mu_core::{hermite_mu, MuParameter};
        let z = real_zeros(&hermite_mu(12, MuParameter::new(0.7).unwrap()), 40.0);
        assert_eq!(z.len(), 12);
    }
}
