use mu_bargmann::entropy_energy::{energy_xi, entropy_monomial_ground, entropy_xi};
use mu_bargmann::mu_core::{xi_mu, DensePolynomial, MuParameter};
use mu_bargmann::quadrature::{energy_oracle, entropy_oracle, QuadratureConfig, Space};

const GRID: [f64; 5] = [-0.25, 0.0, 0.5, 1.0, 2.5];

fn mu(v: f64) -> MuParameter {
    MuParameter::new(v).unwrap()
}

#[test]
fn basis_entropies_match_closed_forms() {
    let cfg = QuadratureConfig::default();
    for &m in &GRID {
        for n in 0..=20u64 {
            let closed = entropy_xi(n, mu(m)).value;
            let oracle = entropy_oracle(&xi_mu(n, mu(m)), Space::Phase, mu(m), &cfg).unwrap();
            let tol = 1e-7 * closed.abs().max(1.0);
            assert!((closed - oracle.value).abs() <= tol, "mu={m} n={n}: {closed} vs {oracle:?}");
        }
    }
}

#[test]
fn basis_energies_match_closed_forms() {
    let cfg = QuadratureConfig::default();
    for &m in &GRID {
        for n in 0..=20u64 {
            let closed = energy_xi(n, mu(m)).value;
            let oracle = energy_oracle(&xi_mu(n, mu(m)), mu(m), &cfg).unwrap();
            assert!((closed - oracle.value).abs() <= 1e-7 * closed, "mu={m} n={n}: {closed} vs {oracle:?}");
        }
    }
}

#[test]
fn monomial_ground_entropies_match_closed_forms() {
    let cfg = QuadratureConfig::default();
    for &m in &GRID {
        for n in 0..=20usize {
            let closed = entropy_monomial_ground(n as u64, mu(m)).unwrap().value;
            let oracle = entropy_oracle(&DensePolynomial::monomial(n, 1.0), Space::Ground, mu(m), &cfg).unwrap();
            let tol = 1e-7 * closed.abs().max(1.0);
            assert!((closed - oracle.value).abs() <= tol, "mu={m} n={n}: {closed} vs {oracle:?}");
        }
    }
}
