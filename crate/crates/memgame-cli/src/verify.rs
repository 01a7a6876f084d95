//! Closed form against the density-matrix oracle on seeded random points.
//!
//! Samples come from `ChaCha8Rng::seed_from_u64(seed)`. Each sample draws,
//! in this order and uniformly: `γ, δ ∈ [0, π/2]`; `θ₁ ∈ [0, π]`,
//! `α₁, β₁ ∈ [−π, π]`; the same for player 2; `p₁, μ₁, p₂, μ₂ ∈ [0, 1]`
//! (the `μ` draws are skipped when memory is off); then Alice's and Bob's
//! four entries in `[−5, 5)`.

use core::f64::consts::{FRAC_PI_2, PI};

use memgame::channels::ChannelSpec;
use memgame::closedform::{closed_payoff_pair, Noise, Pairing};
use memgame::games::Bimatrix;
use memgame::oracle::{oracle_payoffs, GameConfig};
use memgame::protocol::{EntanglementParams, StrategyParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliResult;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyReport {
    pub pairing: Pairing,
    pub samples: usize,
    pub max_abs_diff: f64,
    /// Index of the sample that produced the largest difference.
    pub worst: usize,
}

/// One random configuration; `n1`/`n2` carry the channel parameters.
pub fn draw(rng: &mut ChaCha8Rng, memory: bool) -> CliResult<(Bimatrix, EntanglementParams, StrategyParams, StrategyParams, Noise, Noise)> {
    let ent = EntanglementParams::new(rng.gen_range(0.0..=FRAC_PI_2), rng.gen_range(0.0..=FRAC_PI_2))?;
    let mut strat = || StrategyParams::new(rng.gen_range(0.0..=PI), rng.gen_range(-PI..=PI), rng.gen_range(-PI..=PI));
    let (s1, s2) = (strat()?, strat()?);
    let mut noise = || {
        let p = rng.gen_range(0.0..=1.0);
        let mu = if memory { rng.gen_range(0.0..=1.0) } else { 0.0 };
        Noise::new(p, mu)
    };
    let (n1, n2) = (noise()?, noise()?);
    let mut entries = || -> [f64; 4] { core::array::from_fn(|_| rng.gen_range(-5.0..5.0)) };
    let game = Bimatrix::custom(entries(), entries())?;
    Ok((game, ent, s1, s2, n1, n2))
}

pub fn verify(pairing: Pairing, samples: usize, seed: u64, mu_zero: bool) -> CliResult<VerifyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (k1, k2) = pairing.kinds();
    let mut report = VerifyReport { pairing, samples, max_abs_diff: 0.0, worst: 0 };
    for i in 0..samples {
        let (game, ent, s1, s2, n1, n2) = draw(&mut rng, !mu_zero)?;
        let cfg = GameConfig {
            game,
            ch1: ChannelSpec::new(k1, n1.p, n1.mu)?,
            ch2: ChannelSpec::new(k2, n2.p, n2.mu)?,
            ent,
            s1,
            s2,
        };
        let (oa, ob) = oracle_payoffs(&cfg)?;
        let (ca, cb) = closed_payoff_pair(pairing, &game, &ent, &s1, &s2, n1, n2)?;
        let d = (oa - ca).abs().max((ob - cb).abs());
        if d > report.max_abs_diff {
            report.max_abs_diff = d;
            report.worst = i;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_tight() {
        let a = verify(Pairing::DPh, 50, 3, false).unwrap();
        let b = verify(Pairing::DPh, 50, 3, false).unwrap();
        assert_eq!(a, b);
        assert!(a.max_abs_diff < 1e-9);
    }

    #[test]
    fn memoryless_draws_have_zero_mu() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let (.., n1, n2) = draw(&mut rng, false).unwrap();
            assert_eq!((n1.mu, n2.mu), (0.0, 0.0));
        }
    }
}
