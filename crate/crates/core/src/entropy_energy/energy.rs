use super::EnergyValue;
use crate::mu_core::MuParameter;
use crate::special_functions::ln_gamma;

/// Energy `E_n^μ` of `ξ_n^μ`:
///
/// `E_{2m} = 2 Γ(m+3/2) Γ(m+μ+1) / (Γ(m+1) Γ(m+μ+1/2))`,
/// `E_{2m+1} = 2 Γ(m+3/2) Γ(m+μ+2) / (Γ(m+1) Γ(m+μ+3/2))`.
pub fn energy_xi(n: u64, mu: MuParameter) -> EnergyValue {
    let m = (n / 2) as f64;
    let a = mu.value() + m + if n.is_multiple_of(2) { 1.0 } else { 2.0 };
    let ln = std::f64::consts::LN_2 + ln_gamma(m + 1.5) + ln_gamma(a) - ln_gamma(m + 1.0) - ln_gamma(a - 0.5);
    EnergyValue { n, mu, value: ln.exp() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_energies_are_n_plus_one() {
        for n in 0..200u64 {
            let e = energy_xi(n, MuParameter::ZERO).value;
            assert!((e - (n + 1) as f64).abs() < 1e-12 * (n + 1) as f64, "n={n}");
        }
    }

    #[test]
    fn examples() {
        assert!((energy_xi(4, MuParameter::ZERO).value - 5.0).abs() < 1e-14);
        assert!((energy_xi(3, MuParameter::ZERO).value - 4.0).abs() < 1e-14);
        assert!((energy_xi(0, MuParameter::new(1.0).unwrap()).value - 2.0).abs() < 1e-14);
    }
}
