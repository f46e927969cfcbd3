//! The gap sequences `E - cS` along the even or odd basis elements.

use super::{energy_xi, entropy_xi_even, entropy_xi_odd};
use crate::mu_core::{MuParameter, Parity};

/// One term of a gap sequence.
///
/// `index` is `k` for the basis element `ξ_{2k}` (even) or `ξ_{2k+1}` (odd).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharpnessPoint {
    pub index: u64,
    pub basis_index: u64,
    pub c: f64,
    pub mu: MuParameter,
    /// `E - cS` at this element.
    pub gap: f64,
    /// Leading asymptotic shape `(1-c)·2k + c(μ+1/2)·ln(μ+k+1/2)` (even) or
    /// with `ln(μ+k+3/2)` (odd).
    pub predictor: f64,
}

/// Gap sequence for `k = 0..=n_max`.
pub fn sharpness_sequence(parity: Parity, c: f64, mu: MuParameter, n_max: u64) -> Vec<SharpnessPoint> {
    (0..=n_max).map(|k| sharpness_point(parity, c, mu, k)).collect()
}

pub fn sharpness_point(parity: Parity, c: f64, mu: MuParameter, k: u64) -> SharpnessPoint {
    let (basis_index, s, shift) = match parity {
        Parity::Even => (2 * k, entropy_xi_even(k, mu).value, 0.5),
        Parity::Odd => (2 * k + 1, entropy_xi_odd(k, mu).value, 1.5),
    };
    let e = energy_xi(basis_index, mu).value;
    let kf = k as f64;
    SharpnessPoint {
        index: k,
        basis_index,
        c,
        mu,
        gap: e - c * s,
        predictor: (1.0 - c) * 2.0 * kf + c * mu.half_shifted() * (mu.value() + kf + shift).ln(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Bounded,
    Unbounded,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Bounded => "bounded",
            Verdict::Unbounded => "unbounded",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Finite-range summary of a gap sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharpnessSummary {
    pub argmax: u64,
    pub max: f64,
    /// `gap(n_max) - gap(min(100, n_max))`.
    pub growth: f64,
    /// Same difference for the predictor.
    pub predicted_growth: f64,
    pub verdict: Verdict,
}

/// Classifies a sequence from [`sharpness_sequence`].
///
/// *Bounded*: the maximum is reached before the last index and the gap is
/// strictly decreasing over the last decade `[n_max/10, n_max]`.
/// *Unbounded*: the gap grows between index 100 and `n_max`, by more than
/// half of the growth of the predictor.
pub fn summarize(points: &[SharpnessPoint]) -> SharpnessSummary {
    assert!(!points.is_empty(), "empty gap sequence");
    let last = points.len() - 1;
    let (argmax, max) =
        points
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, p)| if p.gap > acc.1 { (i, p.gap) } else { acc });
    let base = 100.min(last);
    let growth = points[last].gap - points[base].gap;
    let predicted_growth = points[last].predictor - points[base].predictor;

    let tail_start = last / 10;
    let tail_decreasing = points[tail_start..].windows(2).all(|w| w[1].gap < w[0].gap);
    let verdict = if argmax < last && tail_decreasing && last > tail_start {
        Verdict::Bounded
    } else if growth > 0.0 && predicted_growth > 0.0 && growth > 0.5 * predicted_growth {
        Verdict::Unbounded
    } else {
        Verdict::Inconclusive
    };
    SharpnessSummary { argmax: points[argmax].index, max, growth, predicted_growth, verdict }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_is_energy_minus_c_entropy() {
        let mu = MuParameter::new(0.5).unwrap();
        let p = sharpness_point(Parity::Odd, 1.3, mu, 7);
        let want = energy_xi(15, mu).value - 1.3 * entropy_xi_odd(7, mu).value;
        assert_eq!(p.basis_index, 15);
        assert!((p.gap - want).abs() < 1e-14);
    }

    #[test]
    fn bounded_example_peaks_early() {
        let seq = sharpness_sequence(Parity::Even, 1.5, MuParameter::ZERO, 50);
        let tail = &seq[25..];
        let (i, _) =
            tail.iter().enumerate().fold((0, f64::NEG_INFINITY), |a, (i, p)| if p.gap > a.1 { (i, p.gap) } else { a });
        assert_eq!(tail[i].index, 25);
        assert_eq!(summarize(&seq).verdict, Verdict::Bounded);
    }

    #[test]
    fn unbounded_at_c_one() {
        let seq = sharpness_sequence(Parity::Even, 1.0, MuParameter::ZERO, 10_000);
        let s = summarize(&seq);
        assert_eq!(s.verdict, Verdict::Unbounded);
        let half_log = 0.5 * 100f64.ln();
        assert!((s.growth - half_log).abs() < 1.0, "{s:?}");
    }

    #[test]
    fn linear_growth_below_one() {
        let mu = MuParameter::new(1.0).unwrap();
        let seq = sharpness_sequence(Parity::Odd, 0.9, mu, 1000);
        // least-squares slope over the second half
        let pts = &seq[500..];
        let n = pts.len() as f64;
        let mx = pts.iter().map(|p| p.index as f64).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.gap).sum::<f64>() / n;
        let sxy: f64 = pts.iter().map(|p| (p.index as f64 - mx) * (p.gap - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.index as f64 - mx).powi(2)).sum();
        assert!((sxy / sxx - 0.2).abs() < 0.02);
    }
}
