use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Parity of a polynomial made only of even or only of odd powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: u64) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Real polynomial stored as `coeffs[k]` = coefficient of `t^k`.
///
/// The trailing coefficient is nonzero unless the polynomial is zero, in
/// which case the coefficient vector is empty.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DensePolynomial {
    coeffs: Vec<f64>,
}

impl DensePolynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    /// `c · t^k`.
    pub fn monomial(k: usize, c: f64) -> Self {
        let mut coeffs = vec![0.0; k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    fn filter_parity(&self, keep: u64) -> Self {
        Self::new(self.coeffs.iter().enumerate().map(|(k, &c)| if k as u64 % 2 == keep { c } else { 0.0 }).collect())
    }

    /// `(f(t) + f(-t)) / 2`.
    pub fn even_part(&self) -> Self {
        self.filter_parity(0)
    }

    /// `(f(t) - f(-t)) / 2`.
    pub fn odd_part(&self) -> Self {
        self.filter_parity(1)
    }

    /// `Some` when every nonzero coefficient has the same index parity.
    /// The zero polynomial has no parity.
    pub fn parity(&self) -> Option<Parity> {
        let mut found = None;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c != 0.0 {
                let p = Parity::of(k as u64);
                match found {
                    None => found = Some(p),
                    Some(q) if q != p => return None,
                    _ => {}
                }
            }
        }
        found
    }

    /// `Some((k, c))` when the polynomial is exactly `c · t^k` with `c ≠ 0`.
    pub fn as_monomial(&self) -> Option<(usize, f64)> {
        let mut nonzero = self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0.0);
        let first = nonzero.next()?;
        if nonzero.next().is_some() {
            return None;
        }
        Some((first.0, *first.1))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// `t ↦ f'(t)`.
    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| k as f64 * c).collect())
    }
}

impl From<Vec<f64>> for DensePolynomial {
    fn from(coeffs: Vec<f64>) -> Self {
        Self::new(coeffs)
    }
}

impl Add for &DensePolynomial {
    type Output = DensePolynomial;

    fn add(self, rhs: Self) -> DensePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &DensePolynomial {
    type Output = DensePolynomial;

    fn sub(self, rhs: Self) -> DensePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &DensePolynomial {
    type Output = DensePolynomial;

    fn neg(self) -> DensePolynomial {
        self.scale(-1.0)
    }
}

impl Mul for &DensePolynomial {
    type Output = DensePolynomial;

    fn mul(self, rhs: Self) -> DensePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return DensePolynomial::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePolynomial::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_reports_degree() {
        let p = DensePolynomial::new(vec![1.0, 2.0, 0.0, 0.0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(DensePolynomial::new(vec![0.0, 0.0]).degree(), None);
        assert!(DensePolynomial::zero().is_zero());
    }

    #[test]
    fn horner_matches_direct_sum() {
        let p = DensePolynomial::new(vec![1.5, -2.0, 0.25, 3.0]);
        let t: f64 = -1.3;
        let direct = 1.5 - 2.0 * t + 0.25 * t * t + 3.0 * t.powi(3);
        assert!((p.eval(t) - direct).abs() < 1e-14);
        let z = Complex64::new(0.4, -0.7);
        let dz = 1.5 - 2.0 * z + 0.25 * z * z + 3.0 * z.powi(3);
        assert!((p.eval_complex(z) - dz).norm() < 1e-14);
    }

    #[test]
    fn parity_split() {
        let p = DensePolynomial::new(vec![1.0, 2.0, 3.0, 4.0]);
        assert_eq!(p.even_part().coeffs(), &[1.0, 0.0, 3.0]);
        assert_eq!(p.odd_part().coeffs(), &[0.0, 2.0, 0.0, 4.0]);
        assert_eq!(p.parity(), None);
        assert_eq!(p.even_part().parity(), Some(Parity::Even));
        assert_eq!(p.odd_part().parity(), Some(Parity::Odd));
        assert_eq!(&p.even_part() + &p.odd_part(), p);
    }

    #[test]
    fn monomial_detection() {
        assert_eq!(DensePolynomial::monomial(3, 2.0).as_monomial(), Some((3, 2.0)));
        assert_eq!(DensePolynomial::new(vec![1.0, 1.0]).as_monomial(), None);
        assert_eq!(DensePolynomial::zero().as_monomial(), None);
    }

    #[test]
    fn product_and_derivative() {
        let a = DensePolynomial::new(vec![1.0, 1.0]);
        let b = DensePolynomial::new(vec![-1.0, 1.0]);
        assert_eq!((&a * &b).coeffs(), &[-1.0, 0.0, 1.0]);
        assert_eq!((&a * &b).derivative().coeffs(), &[0.0, 2.0]);
        assert_eq!((&a - &a).degree(), None);
    }
}
