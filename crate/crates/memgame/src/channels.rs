//! Kraus sets for dephasing, depolarizing and amplitude-damping noise.
//!
//! A "two-use" channel acts on both qubits of the pair: with probability
//! `1 − μ` each qubit sees an independent error, with probability `μ` the
//! two uses are fully correlated.

use alloc::vec::Vec;

use num_complex::Complex64 as C64;

use crate::error::check_range;
use crate::math::sqrt;
use crate::qmat::{paulis, CMatrix};
use crate::{Error, Result};

/// The three noise families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChannelKind {
    /// Phase damping: `σz` errors.
    Dephasing,
    /// Energy loss `|0⟩ → |1⟩`.
    AmplitudeDamping,
    /// Uniform Pauli errors.
    Depolarizing,
}

impl ChannelKind {
    /// Short name used in pairing ids: `ph`, `ad`, `d`.
    pub fn short(self) -> &'static str {
        match self {
            ChannelKind::Dephasing => "ph",
            ChannelKind::AmplitudeDamping => "ad",
            ChannelKind::Depolarizing => "d",
        }
    }
}

/// Kind plus decoherence `p` and memory `mu`, both in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSpec {
    /// Noise family.
    pub kind: ChannelKind,
    /// Decoherence probability.
    pub p: f64,
    /// Degree of correlation between the two uses.
    pub mu: f64,
}

impl ChannelSpec {
    /// Validated constructor.
    pub fn new(kind: ChannelKind, p: f64, mu: f64) -> Result<Self> {
        check_range("p", p, 0.0, 1.0)?;
        check_range("mu", mu, 0.0, 1.0)?;
        Ok(ChannelSpec { kind, p, mu })
    }
}

/// Operators of a channel, weights folded in.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausSet {
    /// Kraus elements, all of one dimension.
    pub operators: Vec<CMatrix>,
}

impl KrausSet {
    /// `ρ ↦ Σ K ρ K†`.
    pub fn apply(&self, rho: &CMatrix) -> CMatrix {
        self.operators
            .iter()
            .fold(CMatrix::zeros(rho.dim()), |acc, k| &acc + &k.sandwich(rho))
    }

    /// `‖Σ K†K − I‖_max`.
    pub fn completeness_deviation(&self) -> f64 {
        let dim = self.operators.first().map_or(1, CMatrix::dim);
        let sum = self
            .operators
            .iter()
            .fold(CMatrix::zeros(dim), |acc, k| &acc + &k.dagger().matmul(k));
        sum.max_abs_diff(&CMatrix::identity(dim))
    }
}

/// Completeness check, returning the verdict and the deviation.
pub fn verify_completeness(ks: &KrausSet, tol: f64) -> (bool, f64) {
    let dev = ks.completeness_deviation();
    (dev <= tol, dev)
}

/// Single-use Pauli probabilities `[p0, p1, p2, p3]` for the Pauli-type kinds.
pub fn pauli_probs(kind: ChannelKind, p: f64) -> Result<[f64; 4]> {
    check_range("p", p, 0.0, 1.0)?;
    match kind {
        ChannelKind::Dephasing => Ok([1.0 - p / 2.0, 0.0, 0.0, p / 2.0]),
        ChannelKind::Depolarizing => Ok([1.0 - p, p / 3.0, p / 3.0, p / 3.0]),
        ChannelKind::AmplitudeDamping => {
            Err(Error::Unsupported("amplitude damping is not a Pauli channel"))
        }
    }
}

/// Amplitude-damping elements `A0 = diag(√(1−p), 1)`, `A1 = √p |1⟩⟨0|`.
fn ad_single(p: f64) -> [CMatrix; 2] {
    let z = C64::new(0.0, 0.0);
    let c = C64::new(sqrt(1.0 - p), 0.0);
    let s = C64::new(sqrt(p), 0.0);
    let one = C64::new(1.0, 0.0);
    [
        CMatrix::from_rows(2, &[c, z, z, one]).expect("finite"),
        CMatrix::from_rows(2, &[z, z, s, z]).expect("finite"),
    ]
}

/// Kraus set for one use of the channel.
pub fn single_use_kraus(kind: ChannelKind, p: f64) -> Result<KrausSet> {
    check_range("p", p, 0.0, 1.0)?;
    let operators = match kind {
        ChannelKind::AmplitudeDamping => ad_single(p).to_vec(),
        _ => {
            let probs = pauli_probs(kind, p)?;
            let sigma = paulis();
            (0..4)
                .filter(|&i| kind == ChannelKind::Depolarizing || i == 0 || i == 3)
                .map(|i| sigma[i].scale(C64::new(sqrt(probs[i]), 0.0)))
                .collect()
        }
    };
    Ok(KrausSet { operators })
}

/// Joint weights `w_ij = p_i[(1−μ)p_j + μδ_ij]` of error `σi` on the first
/// use and `σj` on the second.
pub fn pair_weights(kind: ChannelKind, p: f64, mu: f64) -> Result<[[f64; 4]; 4]> {
    check_range("mu", mu, 0.0, 1.0)?;
    let pr = pauli_probs(kind, p)?;
    let mut w = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let same = if i == j { mu } else { 0.0 };
            w[i][j] = pr[i] * ((1.0 - mu) * pr[j] + same);
        }
    }
    Ok(w)
}

/// Kraus set of two consecutive, correlated uses, as a 4×4 channel on the
/// qubit pair.
pub fn two_use_kraus(spec: &ChannelSpec) -> Result<KrausSet> {
    let ChannelSpec { kind, p, mu } = *spec;
    check_range("p", p, 0.0, 1.0)?;
    check_range("mu", mu, 0.0, 1.0)?;
    let mut operators = Vec::new();
    match kind {
        ChannelKind::AmplitudeDamping => {
            let a = ad_single(p);
            let free = C64::new(sqrt(1.0 - mu), 0.0);
            for ai in &a {
                for aj in &a {
                    operators.push(ai.tensor(aj).scale(free));
                }
            }
            let [c00, c11] = ad_correlated(p);
            let m = C64::new(sqrt(mu), 0.0);
            operators.push(c00.scale(m));
            operators.push(c11.scale(m));
        }
        _ => {
            let w = pair_weights(kind, p, mu)?;
            let sigma = paulis();
            for i in 0..4 {
                for j in 0..4 {
                    if w[i][j] > 0.0 {
                        let k = sigma[i].tensor(&sigma[j]);
                        operators.push(k.scale(C64::new(sqrt(w[i][j]), 0.0)));
                    }
                }
            }
            if operators.is_empty() {
                operators.push(CMatrix::identity(4));
            }
        }
    }
    Ok(KrausSet { operators })
}

/// The fully correlated amplitude-damping pair: `diag(√(1−p),1,1,1)` and
/// `√p |11⟩⟨00|`.
pub fn ad_correlated(p: f64) -> [CMatrix; 2] {
    let a00 = CMatrix::diag(&[sqrt(1.0 - p), 1.0, 1.0, 1.0]);
    let mut a11 = CMatrix::zeros(4);
    a11.set(3, 0, C64::new(sqrt(p), 0.0));
    [a00, a11]
}

#[cfg(test)]
mod tests {
    use super::*;

    const KINDS: [ChannelKind; 3] =
        [ChannelKind::Dephasing, ChannelKind::AmplitudeDamping, ChannelKind::Depolarizing];

    #[test]
    fn dephasing_p0_is_identity() {
        let ks = single_use_kraus(ChannelKind::Dephasing, 0.0).unwrap();
        assert_eq!(ks.operators[0], CMatrix::identity(2));
        assert!(ks.operators[1].max_abs_diff(&CMatrix::zeros(2)) == 0.0);
    }

    #[test]
    fn amplitude_damping_full_decay() {
        let ks = single_use_kraus(ChannelKind::AmplitudeDamping, 1.0).unwrap();
        assert_eq!(ks.operators[0], CMatrix::diag(&[0.0, 1.0]));
        let mut a1 = CMatrix::zeros(2);
        a1.set(1, 0, C64::new(1.0, 0.0));
        assert_eq!(ks.operators[1], a1);
    }

    #[test]
    fn depolarizing_full_weights() {
        assert_eq!(
            pauli_probs(ChannelKind::Depolarizing, 1.0).unwrap(),
            [0.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]
        );
    }

    #[test]
    fn pair_weight_limits() {
        let w = pair_weights(ChannelKind::Depolarizing, 0.4, 0.0).unwrap();
        let pr = pauli_probs(ChannelKind::Depolarizing, 0.4).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert!((w[i][j] - pr[i] * pr[j]).abs() < 1e-15);
            }
        }
        let w = pair_weights(ChannelKind::Dephasing, 0.4, 1.0).unwrap();
        assert!((w[0][0] - 0.8).abs() < 1e-15 && (w[3][3] - 0.2).abs() < 1e-15);
        assert_eq!(w[0][3], 0.0);
        let w = pair_weights(ChannelKind::Depolarizing, 0.6, 0.5).unwrap();
        let s: f64 = w.iter().flatten().sum();
        assert!((s - 1.0).abs() < 1e-15);
        assert!(pair_weights(ChannelKind::AmplitudeDamping, 0.3, 0.3).is_err());
    }

    #[test]
    fn correlated_ad_pair() {
        let ks = two_use_kraus(&ChannelSpec::new(ChannelKind::AmplitudeDamping, 0.3, 1.0).unwrap())
            .unwrap();
        let live: Vec<_> =
            ks.operators.iter().filter(|k| k.max_abs_diff(&CMatrix::zeros(4)) > 0.0).collect();
        assert_eq!(live.len(), 2);
        let [a00, a11] = ad_correlated(0.3);
        assert!(live[0].max_abs_diff(&a00) < 1e-15 && live[1].max_abs_diff(&a11) < 1e-15);
        let pair = KrausSet { operators: ad_correlated(0.77).to_vec() };
        assert!(pair.completeness_deviation() < 1e-15);
    }

    #[test]
    fn completeness_on_grid() {
        let grid = [0.0, 0.25, 0.5, 0.75, 1.0];
        for kind in KINDS {
            for &p in &grid {
                assert!(verify_completeness(&single_use_kraus(kind, p).unwrap(), 1e-12).0);
                for &mu in &grid {
                    let ks = two_use_kraus(&ChannelSpec::new(kind, p, mu).unwrap()).unwrap();
                    assert!(verify_completeness(&ks, 1e-12).0, "{kind:?} {p} {mu}");
                }
            }
        }
    }

    #[test]
    fn dropping_an_operator_breaks_completeness() {
        let mut ks = single_use_kraus(ChannelKind::Dephasing, 0.5).unwrap();
        assert!(verify_completeness(&ks, 1e-12).1 < 1e-15);
        ks.operators.pop();
        assert!(!verify_completeness(&ks, 1e-12).0);
    }

    #[test]
    fn p_zero_two_use_is_identity_channel() {
        let rho = crate::protocol::initial_density(1.0).unwrap();
        for kind in KINDS {
            let ks = two_use_kraus(&ChannelSpec::new(kind, 0.0, 0.6).unwrap()).unwrap();
            assert!(ks.apply(&rho).max_abs_diff(&rho) < 1e-15);
        }
    }

    #[test]
    fn correlated_ad_fixed_points() {
        let ks = two_use_kraus(&ChannelSpec::new(ChannelKind::AmplitudeDamping, 0.6, 1.0).unwrap())
            .unwrap();
        for k in 1..4 {
            let mut d = [0.0; 4];
            d[k] = 1.0;
            let rho = CMatrix::diag(&d);
            assert!(ks.apply(&rho).max_abs_diff(&rho) < 1e-15);
        }
        let mixed = CMatrix::diag(&[0.0, 0.2, 0.5, 0.3]);
        assert!(ks.apply(&mixed).max_abs_diff(&mixed) < 1e-15);
        let ground = CMatrix::diag(&[1.0, 0.0, 0.0, 0.0]);
        assert!(ks.apply(&ground).max_abs_diff(&ground) > 0.1);
    }

    #[test]
    fn range_errors() {
        assert!(ChannelSpec::new(ChannelKind::Dephasing, 1.5, 0.0).is_err());
        assert!(single_use_kraus(ChannelKind::Depolarizing, -0.1).is_err());
    }
}
