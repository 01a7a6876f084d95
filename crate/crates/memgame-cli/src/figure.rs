//! Sweep configurations behind the payoff-versus-memory figures.
//!
//! Every figure sweeps `μ₁ = μ₂` over `[0, 1]` in 101 steps with
//! `p₁ = p₂`. Alice plays classically.

use core::f64::consts::FRAC_PI_2;

use memgame::closedform::Pairing;
use memgame::games::builtin_game;

use crate::config::{Axis, AxisRange, Point, SweepConfig};
use crate::error::{CliError, CliResult};
use crate::sweep::{evaluate, Row};

pub const FIGURE_IDS: [u32; 6] = [2, 3, 4, 5, 6, 7];

/// Memory axis resolution.
pub const MU_STEPS: usize = 101;

struct Spec {
    games: &'static [&'static str],
    pairings: &'static [Pairing],
    p: &'static [f64],
    gamma: f64,
    delta: f64,
    theta1: f64,
    bob: (f64, f64, f64),
}

fn spec(id: u32) -> CliResult<Spec> {
    use Pairing::*;
    const ALL: &[&str] = &["pd", "bos", "chicken"];
    const AD_TAIL: &[Pairing] = &[AdAd, DAd, PhAd];
    let bob_a = (FRAC_PI_2, FRAC_PI_2, 0.0);
    Ok(match id {
        2 => Spec { games: ALL, pairings: &[AdAd], p: &[0.8, 0.2], gamma: 0.0, delta: 0.0, theta1: 0.0, bob: bob_a },
        3 => Spec {
            games: &["pd", "chicken"],
            pairings: &[AdAd],
            p: &[0.8, 0.2],
            gamma: FRAC_PI_2,
            delta: 0.0,
            theta1: FRAC_PI_2,
            bob: bob_a,
        },
        4 => Spec { games: &["bos"], pairings: AD_TAIL, p: &[0.5], gamma: FRAC_PI_2, delta: 0.0, theta1: 0.0, bob: bob_a },
        5 => Spec {
            games: &["bos"],
            pairings: AD_TAIL,
            p: &[0.5],
            gamma: 0.0,
            delta: FRAC_PI_2,
            theta1: 0.0,
            bob: (FRAC_PI_2, 0.0, FRAC_PI_2),
        },
        6 => Spec { games: ALL, pairings: &[AdAd], p: &[0.5], gamma: FRAC_PI_2, delta: FRAC_PI_2, theta1: 0.0, bob: bob_a },
        7 => Spec { games: ALL, pairings: &[DD], p: &[0.5], gamma: FRAC_PI_2, delta: FRAC_PI_2, theta1: 0.0, bob: bob_a },
        _ => return Err(CliError::Usage(format!("unknown figure id {id} (expected 2..7)"))),
    })
}

/// One config per curve group, in the order the rows are emitted:
/// game, then pairing, then `p`.
pub fn figure_configs(id: u32) -> CliResult<Vec<SweepConfig>> {
    let s = spec(id)?;
    let mut out = Vec::new();
    for name in s.games {
        for &pairing in s.pairings {
            for &p in s.p {
                let base = Point {
                    gamma: s.gamma,
                    delta: s.delta,
                    p1: p,
                    p2: p,
                    theta1: s.theta1,
                    theta2: s.bob.0,
                    alpha2: s.bob.1,
                    beta2: s.bob.2,
                    ..Point::default()
                };
                out.push(SweepConfig {
                    game: builtin_game(name)?,
                    pairing,
                    base,
                    axes: vec![AxisRange { axis: Axis::Mu, start: 0.0, stop: 1.0, steps: MU_STEPS }],
                });
            }
        }
    }
    Ok(out)
}

pub fn figure_rows(id: u32) -> CliResult<Vec<Row>> {
    let mut rows = Vec::new();
    for cfg in figure_configs(id)? {
        rows.extend(evaluate(&cfg)?);
    }
    Ok(rows)
}
