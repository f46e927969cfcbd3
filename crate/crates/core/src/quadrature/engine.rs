//! Globally adaptive integration on finite intervals and on `(0, ∞)`.
//!
//! On the half-line the piece `(0, c]` next to the origin is mapped by
//! `t = c e^{-x}`, which turns integrable power singularities at 0 into
//! exponential decay. The far end is truncated at a cut found by doubling.
//! Both pieces share one pool of panels, and the panel with the largest
//! error estimate is bisected until the total estimate meets the target,
//! or falls to the rounding level of `∫|f|` when the value itself cancels.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::kronrod::gk21;
use super::{Estimate, QuadratureConfig};
use crate::error::{Error, Result};

const TAIL_START: f64 = 8.0;
const TAIL_CAP: f64 = 700.0;
const ORIGIN_START: f64 = 8.0;
const ORIGIN_CAP: f64 = 700.0;
const ROUNDOFF_ULPS: f64 = 1000.0;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Coord {
    /// Original variable.
    Direct,
    /// `t = c e^{-x}` with the panel given in `x`.
    Origin { c: f64 },
}

impl Coord {
    fn to_t(self, x: f64) -> f64 {
        match self {
            Coord::Direct => x,
            Coord::Origin { c } => c * (-x).exp(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    coord: Coord,
    a: f64,
    b: f64,
    value: f64,
    err: f64,
    abs: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err.total_cmp(&other.err) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

struct Pool<'a, F> {
    f: &'a F,
    heap: BinaryHeap<Panel>,
    frozen_value: f64,
    frozen_err: f64,
    frozen_abs: f64,
}

impl<'a, F: Fn(f64) -> f64> Pool<'a, F> {
    fn new(f: &'a F) -> Self {
        Self { f, heap: BinaryHeap::new(), frozen_value: 0.0, frozen_err: 0.0, frozen_abs: 0.0 }
    }

    fn len(&self) -> usize {
        self.heap.len()
    }

    fn push(&mut self, coord: Coord, a: f64, b: f64) -> Result<()> {
        let (value, err, abs) = match coord {
            Coord::Direct => gk21(self.f, a, b, |x| x)?,
            Coord::Origin { c } => {
                let g = |x: f64| {
                    let t = c * (-x).exp();
                    if t == 0.0 {
                        0.0
                    } else {
                        (self.f)(t) * t
                    }
                };
                gk21(&g, a, b, |x| coord.to_t(x))?
            }
        };
        let panel = Panel { coord, a, b, value, err, abs };
        // panels too narrow to split keep their contribution but leave the pool
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b || (b - a) <= 64.0 * f64::EPSILON * a.abs().max(b.abs()) {
            self.frozen_value += value;
            self.frozen_err += err;
            self.frozen_abs += abs;
        } else {
            self.heap.push(panel);
        }
        Ok(())
    }

    /// `(value, error estimate, ∫|f|)` summed over all panels.
    fn totals(&self) -> (f64, f64, f64) {
        let mut v = self.frozen_value;
        let mut e = self.frozen_err;
        let mut a = self.frozen_abs;
        for p in self.heap.iter() {
            v += p.value;
            e += p.err;
            a += p.abs;
        }
        (v, e, a)
    }

    fn run(&mut self, cfg: &QuadratureConfig, extra_err: f64) -> Result<Estimate> {
        loop {
            let (value, err, abs) = self.totals();
            let total_err = err + extra_err;
            // cancellation limits the attainable accuracy to a few ulps of ∫|f|
            let floor = ROUNDOFF_ULPS * f64::EPSILON * abs;
            if total_err <= cfg.target(value).max(floor) {
                return Ok(Estimate::new(value, total_err));
            }
            if self.len() + 1 > cfg.max_subdivisions {
                return Err(Error::NonConvergence { subdivisions: self.len(), value, err_est: total_err });
            }
            let Some(worst) = self.heap.pop() else {
                return Err(Error::NonConvergence { subdivisions: 0, value, err_est: total_err });
            };
            let mid = 0.5 * (worst.a + worst.b);
            self.push(worst.coord, worst.a, mid)?;
            self.push(worst.coord, mid, worst.b)?;
        }
    }
}

/// Adaptive Gauss-Kronrod integral of `f` over the finite interval `[a, b]`.
pub fn integrate_interval<F>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<Estimate>
where
    F: Fn(f64) -> f64,
{
    cfg.validate()?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidConfig("interval ends must be finite"));
    }
    if a == b {
        return Ok(Estimate::new(0.0, 0.0));
    }
    let mut pool = Pool::new(&f);
    pool.push(Coord::Direct, a, b)?;
    pool.run(cfg, 0.0)
}

/// Adaptive integral of `f` over `(0, ∞)`.
///
/// `f` may have an integrable singularity at 0 but must be finite on the
/// open half-line. `breakpoints` are interior points where `f` is not
/// smooth (for instance zeros inside a logarithm); panels never straddle
/// them.
pub fn integrate_half_line<F>(f: F, breakpoints: &[f64], cfg: &QuadratureConfig) -> Result<Estimate>
where
    F: Fn(f64) -> f64,
{
    cfg.validate()?;
    let mut cuts: Vec<f64> = breakpoints.iter().copied().filter(|b| b.is_finite() && *b > 0.0).collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    let c = cuts.first().map_or(1.0, |&b| (0.5 * b).min(1.0));
    let scale = magnitude_scale(&f, c, &cuts);
    let threshold = 1e-3 * cfg.abs_tol.max(cfg.rel_tol * scale);

    let (upper, upper_err) = match cfg.tail_cut {
        Some(t) => (t.max(c), 0.0),
        None => upper_cut(&f, threshold, cuts.last().copied().unwrap_or(c)),
    };
    let g = |x: f64| f(c * (-x).exp()) * c * (-x).exp();
    let (depth, origin_err) = origin_depth(&g, threshold);

    let mut nodes: Vec<f64> = vec![c];
    nodes.extend(cuts.iter().copied().filter(|&b| b > c && b < upper));
    let mut p = 1.0;
    while p < upper {
        if p > c {
            nodes.push(p);
        }
        p *= 2.0;
    }
    nodes.push(upper);
    nodes.sort_by(f64::total_cmp);
    nodes.dedup();

    let mut pool = Pool::new(&f);
    let mut x = 0.0;
    while x < depth {
        let next = if x == 0.0 { 1.0 } else { (2.0 * x).min(depth) };
        pool.push(Coord::Origin { c }, x, next)?;
        x = next;
    }
    for w in nodes.windows(2) {
        pool.push(Coord::Direct, w[0], w[1])?;
    }
    pool.run(cfg, upper_err + origin_err)
}

/// Rough size of `|f|` over the bulk, used to make the tail cuts relative.
fn magnitude_scale<F: Fn(f64) -> f64>(f: &F, c: f64, cuts: &[f64]) -> f64 {
    let hi = cuts.last().copied().unwrap_or(0.0).max(TAIL_START);
    let n = 128;
    (0..=n)
        .map(|i| c + (hi - c) * f64::from(i) / f64::from(n))
        .chain(cuts.iter().copied())
        .map(|t| f(t).abs())
        .filter(|v| v.is_finite())
        .fold(0.0, f64::max)
}

/// Doubling search for the upper cut, returning it with a bound on the
/// discarded tail.
fn upper_cut<F: Fn(f64) -> f64>(f: &F, threshold: f64, floor: f64) -> (f64, f64) {
    let mut t = TAIL_START;
    while t <= floor {
        t *= 2.0;
    }
    loop {
        let v = f(t).abs() * t;
        if v.is_finite() && v <= threshold {
            return (t, v);
        }
        if t >= TAIL_CAP {
            return (TAIL_CAP, if v.is_finite() { v } else { f64::INFINITY });
        }
        t = (2.0 * t).min(TAIL_CAP);
    }
}

/// Doubling search in the origin variable `x`, with the same contract.
fn origin_depth<G: Fn(f64) -> f64>(g: &G, threshold: f64) -> (f64, f64) {
    let mut x = ORIGIN_START;
    loop {
        let v = g(x).abs() * x;
        if v.is_finite() && v <= threshold {
            return (x, v);
        }
        if x >= ORIGIN_CAP {
            return (ORIGIN_CAP, if v.is_finite() { v } else { f64::INFINITY });
        }
        x = (2.0 * x).min(ORIGIN_CAP);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn gaussian_half_line() {
        let e = integrate_half_line(|t: f64| (-t * t).exp(), &[], &cfg()).unwrap();
        assert!((e.value - PI.sqrt() / 2.0).abs() < 1e-13, "{e:?}");
        assert!(e.err_est <= 1e-10 * e.value + 1e-14);
    }

    #[test]
    fn inverse_square_root_singularity() {
        // ∫_0^∞ t^{-1/2} e^{-t} dt = √π
        let e = integrate_half_line(|t: f64| t.powf(-0.5) * (-t).exp(), &[], &cfg()).unwrap();
        assert!((e.value - PI.sqrt()).abs() < 1e-12, "{e:?}");
    }

    #[test]
    fn strong_singularity() {
        // ∫_0^∞ t^{-0.9} e^{-t} dt = Γ(0.1)
        let e = integrate_half_line(|t: f64| t.powf(-0.9) * (-t).exp(), &[], &cfg()).unwrap();
        assert!((e.value - 9.513_507_698_668_732).abs() < 1e-9, "{e:?}");
    }

    #[test]
    fn log_kink_with_breakpoint() {
        // ∫_0^∞ (t-1)² ln (t-1)² e^{-t} dt, kink at t = 1
        let f = |t: f64| {
            let u = (t - 1.0) * (t - 1.0);
            if u == 0.0 {
                0.0
            } else {
                u * u.ln() * (-t).exp()
            }
        };
        let with = integrate_half_line(f, &[1.0], &cfg()).unwrap();
        let fine = QuadratureConfig { rel_tol: 1e-12, ..cfg() };
        let without = integrate_half_line(f, &[], &fine).unwrap();
        assert!((with.value - without.value).abs() < 1e-9);
    }

    #[test]
    fn interval_rule() {
        let e = integrate_interval(|x: f64| x.sin(), 0.0, PI, &cfg()).unwrap();
        assert!((e.value - 2.0).abs() < 1e-14);
        assert_eq!(integrate_interval(|x: f64| x, 1.0, 1.0, &cfg()).unwrap().value, 0.0);
    }

    #[test]
    fn exhausting_the_budget_is_an_error() {
        let tight = QuadratureConfig { max_subdivisions: 3, rel_tol: 1e-15, ..cfg() };
        let r = integrate_interval(|x: f64| (1.0 / (x + 1e-3)).sin(), 0.0, 1.0, &tight);
        assert!(matches!(r, Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn non_finite_integrand_is_an_error() {
        let r = integrate_interval(|x: f64| if x > 0.5 { f64::NAN } else { x }, 0.0, 1.0, &cfg());
        assert!(matches!(r, Err(Error::InvalidIntegrand { .. })));
    }
}
