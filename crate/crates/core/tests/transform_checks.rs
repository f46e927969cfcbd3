use mu_bargmann::entropy_energy::entropy_gap_zeta1;
use mu_bargmann::mu_core::{xi_mu, zeta_mu, DensePolynomial, MuParameter};
use mu_bargmann::quadrature::{entropy_oracle, norm_sq_oracle, QuadratureConfig, Space};
use mu_bargmann::transform::{bargmann_transform, bargmann_transform_exact, verify_basis_transform, ComplexGrid};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn mu(v: f64) -> MuParameter {
    MuParameter::new(v).unwrap()
}

#[test]
fn basis_is_mapped_to_normalised_monomials() {
    let cfg = QuadratureConfig::default();
    for &m in &[0.0, 0.5, 1.0] {
        let d = verify_basis_transform(6, mu(m), &ComplexGrid::default(), &cfg).unwrap();
        assert!(d <= 1e-7, "mu={m}: {d}");
    }
    let d = verify_basis_transform(4, mu(-0.4), &ComplexGrid::default(), &cfg).unwrap();
    assert!(d <= 1e-7, "mu=-0.4: {d}");
}

#[test]
fn highest_supported_index() {
    let cfg = QuadratureConfig::default();
    let d = verify_basis_transform(12, mu(0.5), &ComplexGrid::default(), &cfg).unwrap();
    assert!(d <= 1e-7, "{d}");
}

#[test]
fn integral_and_exact_routes_agree_on_random_polynomials() {
    let cfg = QuadratureConfig::default();
    let mut rng = StdRng::seed_from_u64(17);
    for &m in &[-0.25, 0.0, 2.5] {
        for _ in 0..4 {
            let f = DensePolynomial::new((0..=5).map(|_| rng.gen_range(-1.0..1.0)).collect());
            let exact = bargmann_transform_exact(&f, mu(m));
            for &z in ComplexGrid::default().points() {
                let b = bargmann_transform(&f, mu(m), z, &cfg).unwrap();
                assert!((b - exact.eval_complex(z)).norm() < 1e-7, "mu={m} z={z}");
            }
        }
    }
}

#[test]
fn unitary_on_spanned_subspaces() {
    let cfg = QuadratureConfig::default();
    let mut rng = StdRng::seed_from_u64(29);
    for &m in &[-0.25, 0.0, 0.5, 1.0, 2.5] {
        for _ in 0..5 {
            let a: Vec<f64> = (0..=6).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let f = a
                .iter()
                .enumerate()
                .fold(DensePolynomial::zero(), |acc, (n, &c)| &acc + &zeta_mu(n as u64, mu(m)).scale(c));
            let bf = a
                .iter()
                .enumerate()
                .fold(DensePolynomial::zero(), |acc, (n, &c)| &acc + &xi_mu(n as u64, mu(m)).scale(c));
            let lhs = norm_sq_oracle(&f, Space::Ground, mu(m), &cfg).unwrap().value;
            let rhs = norm_sq_oracle(&bf, Space::Phase, mu(m), &cfg).unwrap().value;
            let coef: f64 = a.iter().map(|c| c * c).sum();
            assert!((lhs - rhs).abs() < 1e-7, "mu={m}: {lhs} vs {rhs}");
            assert!((lhs - coef).abs() < 1e-7);
        }
    }
}

#[test]
fn parity_is_preserved() {
    let cfg = QuadratureConfig::default();
    for &m in &[0.0, 1.0] {
        for n in 0..6u64 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let f = zeta_mu(n, mu(m));
            for &z in ComplexGrid::default().points().iter().skip(1) {
                let plus = bargmann_transform(&f, mu(m), z, &cfg).unwrap();
                let minus = bargmann_transform(&f, mu(m), -z, &cfg).unwrap();
                assert!((minus - sign * plus).norm() < 1e-9, "mu={m} n={n} z={z}");
            }
        }
    }
}

#[test]
fn transform_lowers_the_entropy_of_the_first_basis_element() {
    let cfg = QuadratureConfig::default();
    for &m in &[0.0, 0.5, 2.0] {
        let zeta1 = zeta_mu(1, mu(m));
        let image = bargmann_transform_exact(&zeta1, mu(m));
        // the exact image must agree with the integral route before it is used
        let z = Complex64::new(0.5, 0.5);
        let b = bargmann_transform(&zeta1, mu(m), z, &cfg).unwrap();
        assert!((b - image.eval_complex(z)).norm() < 1e-8);

        let after = entropy_oracle(&image, Space::Phase, mu(m), &cfg).unwrap().value;
        let before = entropy_oracle(&zeta1, Space::Ground, mu(m), &cfg).unwrap().value;
        let gap = after - before;
        assert!((gap - entropy_gap_zeta1(mu(m))).abs() < 1e-6, "mu={m}: {gap}");
        assert!(gap < 0.0);
    }
}
