//! Brute-force density-matrix simulation of a full round.
//!
//! The arbiter's state crosses the first channel, both players apply their
//! unitaries, and the pair crosses the second channel on the way back:
//!
//! ```text
//! ρ' = Φ₁(ρ_in),  ρ'' = (U₁⊗U₂) ρ' (U₁⊗U₂)†,  ρ_f = Φ₂(ρ'')
//! ```
//!
//! Each `Φ` is the correlated two-use channel of [`crate::channels`]: the
//! two qubits of the pair are the two consecutive uses, so memory couples
//! Alice's and Bob's errors within one passage.

use crate::channels::{two_use_kraus, ChannelSpec};
use crate::games::Bimatrix;
use crate::protocol::{
    initial_density, measure_payoff, payoff_operator, strategy_unitary, EntanglementParams,
    StrategyParams,
};
use crate::qmat::CMatrix;
use crate::Result;

/// One fully specified experiment point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GameConfig {
    /// Payoff table.
    pub game: Bimatrix,
    /// First-passage channel.
    pub ch1: ChannelSpec,
    /// Second-passage channel.
    pub ch2: ChannelSpec,
    /// Entanglement angles.
    pub ent: EntanglementParams,
    /// Alice's strategy.
    pub s1: StrategyParams,
    /// Bob's strategy.
    pub s2: StrategyParams,
}

/// Final density matrix after both passages.
pub fn two_pass_state(
    ent: &EntanglementParams,
    s1: &StrategyParams,
    s2: &StrategyParams,
    ch1: &ChannelSpec,
    ch2: &ChannelSpec,
) -> Result<CMatrix> {
    let rho = initial_density(ent.gamma)?;
    let rho = two_use_kraus(ch1)?.apply(&rho);
    let u = strategy_unitary(s1).tensor(&strategy_unitary(s2));
    let rho = u.sandwich(&rho);
    Ok(two_use_kraus(ch2)?.apply(&rho))
}

/// Payoff for one entry set `[$00, $01, $10, $11]`.
pub fn oracle_payoff(entries: [f64; 4], cfg: &GameConfig) -> Result<f64> {
    let rho = two_pass_state(&cfg.ent, &cfg.s1, &cfg.s2, &cfg.ch1, &cfg.ch2)?;
    measure_payoff(&payoff_operator(cfg.ent.delta, entries)?, &rho)
}

/// `(Alice, Bob)` payoffs.
pub fn oracle_payoffs(cfg: &GameConfig) -> Result<(f64, f64)> {
    let rho = two_pass_state(&cfg.ent, &cfg.s1, &cfg.s2, &cfg.ch1, &cfg.ch2)?;
    let a = measure_payoff(&payoff_operator(cfg.ent.delta, cfg.game.a)?, &rho)?;
    let b = measure_payoff(&payoff_operator(cfg.ent.delta, cfg.game.b)?, &rho)?;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::ChannelKind::{self, *};
    use crate::games::builtin_game;
    use crate::protocol::noiseless_final_state;
    use core::f64::consts::{FRAC_PI_2, PI};

    fn spec(kind: ChannelKind, p: f64, mu: f64) -> ChannelSpec {
        ChannelSpec::new(kind, p, mu).unwrap()
    }

    fn strat(t: f64, a: f64, b: f64) -> StrategyParams {
        StrategyParams::new(t, a, b).unwrap()
    }

    #[test]
    fn noiseless_reduction() {
        let ent = EntanglementParams::new(0.9, 0.3).unwrap();
        let (s1, s2) = (strat(1.0, 0.4, -2.0), strat(2.2, -1.0, 0.5));
        for kind in [Dephasing, Depolarizing, AmplitudeDamping] {
            let rho = two_pass_state(&ent, &s1, &s2, &spec(kind, 0.0, 0.3), &spec(kind, 0.0, 0.8))
                .unwrap();
            let want = noiseless_final_state(0.9, &s1, &s2).unwrap();
            assert!(rho.max_abs_diff(&want) < 1e-14);
        }
    }

    #[test]
    fn full_dephasing_kills_coherence() {
        let ent = EntanglementParams::new(FRAC_PI_2, 0.0).unwrap();
        let id = StrategyParams::classical(0.0).unwrap();
        let ch = spec(Dephasing, 1.0, 0.0);
        let rho = two_pass_state(&ent, &id, &id, &ch, &ch).unwrap();
        assert!(rho.max_abs_diff(&CMatrix::diag(&[0.5, 0.0, 0.0, 0.5])) < 1e-15);
    }

    #[test]
    fn dephasing_coherence_factor() {
        let ent = EntanglementParams::new(FRAC_PI_2, 0.0).unwrap();
        let id = StrategyParams::classical(0.0).unwrap();
        let (c1, c2) = (spec(Dephasing, 0.3, 0.4), spec(Dephasing, 0.7, 0.1));
        let rho = two_pass_state(&ent, &id, &id, &c1, &c2).unwrap();
        let mp = |p: f64, mu: f64| (1.0 - mu) * (1.0 - p) * (1.0 - p) + mu;
        let want = -0.5 * mp(0.3, 0.4) * mp(0.7, 0.1);
        assert!((rho.get(0, 3).im - want).abs() < 1e-15);
    }

    #[test]
    fn all_ones_game_normalizes() {
        let game = Bimatrix::custom([1.0; 4], [1.0; 4]).unwrap();
        let cfg = GameConfig {
            game,
            ch1: spec(AmplitudeDamping, 0.4, 0.5),
            ch2: spec(Depolarizing, 0.9, 0.2),
            ent: EntanglementParams::new(1.2, 0.5).unwrap(),
            s1: strat(0.3, 1.0, 2.0),
            s2: strat(2.9, -0.5, 0.0),
        };
        let (a, b) = oracle_payoffs(&cfg).unwrap();
        assert!((a - 1.0).abs() < 1e-12 && (b - 1.0).abs() < 1e-12);
    }

    #[test]
    fn classical_defection() {
        let d = StrategyParams::classical(PI).unwrap();
        let cfg = GameConfig {
            game: builtin_game("pd").unwrap(),
            ch1: spec(Dephasing, 0.0, 0.0),
            ch2: spec(Dephasing, 0.0, 0.0),
            ent: EntanglementParams::new(0.0, 0.0).unwrap(),
            s1: d,
            s2: d,
        };
        let (a, b) = oracle_payoffs(&cfg).unwrap();
        assert!((a - 1.0).abs() < 1e-12 && (b - 1.0).abs() < 1e-12);
    }
}
