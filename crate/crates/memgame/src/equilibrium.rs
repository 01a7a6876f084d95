//! Grid best responses, ε-Nash certificates and the classical-vs-quantum
//! case studies.
//!
//! Alice is the classical player (`α = β = 0`), Bob may use the full
//! three-parameter strategy. Everything here is an exhaustive scan over a
//! lattice that contains the special angles `0, ±π/2, ±π`.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use crate::closedform::{dot11, payoff_form, strategy_basis, Noise, Pairing, N_BASIS};
use crate::games::{builtin_game, Bimatrix};
use crate::protocol::{EntanglementParams, StrategyParams};
use crate::{Error, Result};

/// Two payoffs within this distance count as tied.
pub const TIE_TOL: f64 = 1e-9;

/// Default ε for the Nash certificate.
pub const NASH_EPS: f64 = 1e-6;

/// Who is responding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Player {
    /// First qubit, row player.
    Alice,
    /// Second qubit, column player.
    Bob,
}

/// Lattice of strategies: `θ` over `[0, π]`, `α` and `β` over `[−π, π]`,
/// endpoints included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrategySpace {
    /// Number of `θ` points.
    pub theta_points: usize,
    /// Number of `α` points.
    pub alpha_points: usize,
    /// Number of `β` points.
    pub beta_points: usize,
    /// Pin `α = β = 0`.
    pub classical_only: bool,
}

impl StrategySpace {
    /// Validated constructor; every count must be at least 2.
    pub fn new(theta_points: usize, alpha_points: usize, beta_points: usize, classical_only: bool) -> Result<Self> {
        for (name, n) in [("theta_points", theta_points), ("alpha_points", alpha_points), ("beta_points", beta_points)] {
            if n < 2 {
                return Err(Error::Range { name, value: n as f64, min: 2.0, max: f64::INFINITY });
            }
        }
        Ok(StrategySpace { theta_points, alpha_points, beta_points, classical_only })
    }

    /// 13 × 17 × 17 lattice.
    pub fn quantum_default() -> Self {
        StrategySpace { theta_points: 13, alpha_points: 17, beta_points: 17, classical_only: false }
    }

    /// 13 `θ` points, no phases.
    pub fn classical_default() -> Self {
        StrategySpace { theta_points: 13, alpha_points: 2, beta_points: 2, classical_only: true }
    }

    /// Grid points in lexicographic `(θ, α, β)` order.
    pub fn points(&self) -> Vec<StrategyParams> {
        let lin = |lo: f64, hi: f64, n: usize, i: usize| {
            if i + 1 == n {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        };
        let mut out = Vec::new();
        for i in 0..self.theta_points {
            let theta = lin(0.0, PI, self.theta_points, i);
            if self.classical_only {
                out.push(StrategyParams { theta, alpha: 0.0, beta: 0.0 });
                continue;
            }
            for j in 0..self.alpha_points {
                for l in 0..self.beta_points {
                    out.push(StrategyParams {
                        theta,
                        alpha: lin(-PI, PI, self.alpha_points, j),
                        beta: lin(-PI, PI, self.beta_points, l),
                    });
                }
            }
        }
        out
    }
}

/// Outcome of a unilateral-deviation scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquilibriumReport {
    /// `(Alice, Bob)` strategies checked.
    pub profile: (StrategyParams, StrategyParams),
    /// Best grid payoff Alice can reach minus her current payoff, floored at 0.
    pub max_unilateral_gain_a: f64,
    /// Same for Bob.
    pub max_unilateral_gain_b: f64,
    /// Both gains within ε.
    pub is_epsilon_nash: bool,
    /// Payoffs at the profile.
    pub payoffs: (f64, f64),
}

fn responder_payoff<F>(eval: &F, s: &StrategyParams, opponent: &StrategyParams, who: Player) -> f64
where
    F: Fn(&StrategyParams, &StrategyParams) -> (f64, f64),
{
    match who {
        Player::Alice => eval(s, opponent).0,
        Player::Bob => eval(opponent, s).1,
    }
}

/// All grid strategies within [`TIE_TOL`] of the responder's best payoff.
pub fn best_response<F>(eval: &F, space: &StrategySpace, opponent: &StrategyParams, responder: Player) -> Vec<StrategyParams>
where
    F: Fn(&StrategyParams, &StrategyParams) -> (f64, f64),
{
    let scored: Vec<(StrategyParams, f64)> = space
        .points()
        .into_iter()
        .map(|s| {
            let v = responder_payoff(eval, &s, opponent, responder);
            (s, v)
        })
        .collect();
    let best = scored.iter().map(|&(_, v)| v).fold(f64::NEG_INFINITY, f64::max);
    scored.into_iter().filter(|&(_, v)| v >= best - TIE_TOL).map(|(s, _)| s).collect()
}

/// Largest payoff the responder can reach on the grid.
fn best_value<F>(eval: &F, space: &StrategySpace, opponent: &StrategyParams, who: Player) -> f64
where
    F: Fn(&StrategyParams, &StrategyParams) -> (f64, f64),
{
    space
        .points()
        .iter()
        .map(|s| responder_payoff(eval, s, opponent, who))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Scans each player's deviations on their own lattice.
pub fn check_profile<F>(
    eval: &F,
    alice_space: &StrategySpace,
    bob_space: &StrategySpace,
    profile: (StrategyParams, StrategyParams),
    eps: f64,
) -> EquilibriumReport
where
    F: Fn(&StrategyParams, &StrategyParams) -> (f64, f64),
{
    let (s1, s2) = profile;
    let payoffs = eval(&s1, &s2);
    let ga = (best_value(eval, alice_space, &s2, Player::Alice) - payoffs.0).max(0.0);
    let gb = (best_value(eval, bob_space, &s1, Player::Bob) - payoffs.1).max(0.0);
    EquilibriumReport {
        profile,
        max_unilateral_gain_a: ga,
        max_unilateral_gain_b: gb,
        is_epsilon_nash: ga <= eps && gb <= eps,
        payoffs,
    }
}

/// Closed-form evaluator for one game at one noise point.
#[derive(Debug, Clone, Copy)]
pub struct FormEvaluator {
    a: [f64; N_BASIS],
    b: [f64; N_BASIS],
}

impl FormEvaluator {
    /// Builds the evaluator with `p₁ = p₂ = p`, `μ₁ = μ₂ = μ` unless the
    /// caller passes distinct noises.
    pub fn new(pairing: Pairing, game: &Bimatrix, ent: &EntanglementParams, n1: Noise, n2: Noise) -> Result<Self> {
        let form = payoff_form(pairing, ent, n1, n2)?;
        Ok(FormEvaluator { a: form.contract(game.a), b: form.contract(game.b) })
    }

    /// `(Alice, Bob)` payoffs.
    pub fn eval(&self, s1: &StrategyParams, s2: &StrategyParams) -> (f64, f64) {
        let basis = strategy_basis(s1, s2);
        (dot11(&self.a, &basis), dot11(&self.b, &basis))
    }
}

/// The §3-style scenarios.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseId {
    /// `γ = δ = 0`.
    I,
    /// `δ = 0, γ = π/2`, amplitude damping, memory compensates decoherence.
    IIa,
    /// `δ = 0, γ = π/2`, amplitude damping, Battle of the Sexes.
    IIb,
    /// `δ = 0, γ = π/2`, mixed pairings ending in amplitude damping.
    IIc,
    /// `δ = 0, γ = π/2`, unital pairings.
    IId,
    /// `γ = 0, δ = π/2`, depolarizing, Battle of the Sexes.
    IIIa,
    /// `γ = 0, δ = π/2`, dephasing or amplitude damping.
    IIIb,
    /// `γ = 0, δ = π/2`, mixed pairings ending in amplitude damping.
    IIIc,
    /// `γ = δ = π/2`, all pairings.
    IV,
}

impl CaseId {
    /// All ids.
    pub const ALL: [CaseId; 9] = [
        CaseId::I,
        CaseId::IIa,
        CaseId::IIb,
        CaseId::IIc,
        CaseId::IId,
        CaseId::IIIa,
        CaseId::IIIb,
        CaseId::IIIc,
        CaseId::IV,
    ];

    /// CLI name, e.g. `ii-b`.
    pub fn id(self) -> &'static str {
        match self {
            CaseId::I => "i",
            CaseId::IIa => "ii-a",
            CaseId::IIb => "ii-b",
            CaseId::IIc => "ii-c",
            CaseId::IId => "ii-d",
            CaseId::IIIa => "iii-a",
            CaseId::IIIb => "iii-b",
            CaseId::IIIc => "iii-c",
            CaseId::IV => "iv",
        }
    }

    /// Inverse of [`CaseId::id`].
    pub fn parse(s: &str) -> Result<CaseId> {
        CaseId::ALL.into_iter().find(|c| c.id() == s).ok_or(Error::Unknown("case id"))
    }
}

/// Configuration of one case.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseSetup {
    /// Entanglement angles.
    pub ent: EntanglementParams,
    /// Games covered.
    pub games: Vec<Bimatrix>,
    /// Pairings covered.
    pub pairings: Vec<Pairing>,
    /// Alice's strategy.
    pub alice: StrategyParams,
    /// Bob's strategy.
    pub bob: StrategyParams,
}

/// The fixed configuration behind each case id.
pub fn case_setup(id: CaseId) -> CaseSetup {
    use Pairing::*;
    let games = |names: &[&str]| -> Vec<Bimatrix> {
        names.iter().map(|n| builtin_game(n).expect("builtin")).collect()
    };
    let all = || games(&["pd", "bos", "chicken"]);
    let st = |t, a, b| StrategyParams { theta: t, alpha: a, beta: b };
    let ent = |g, d| EntanglementParams { gamma: g, delta: d };
    let bob_a = st(FRAC_PI_2, FRAC_PI_2, 0.0);
    let bob_b = st(FRAC_PI_2, 0.0, FRAC_PI_2);
    let cooperate = st(0.0, 0.0, 0.0);
    let (ent, games, pairings, alice, bob) = match id {
        CaseId::I => (ent(0.0, 0.0), all(), Pairing::ALL.to_vec(), cooperate, bob_a),
        CaseId::IIa => (ent(FRAC_PI_2, 0.0), games(&["pd", "chicken"]), alloc::vec![AdAd], st(FRAC_PI_2, 0.0, 0.0), bob_a),
        CaseId::IIb => (ent(FRAC_PI_2, 0.0), games(&["bos"]), alloc::vec![AdAd], cooperate, bob_a),
        CaseId::IIc => (ent(FRAC_PI_2, 0.0), all(), alloc::vec![PhAd, DAd], cooperate, bob_a),
        CaseId::IId => (ent(FRAC_PI_2, 0.0), all(), alloc::vec![PhPh, DD], cooperate, bob_a),
        CaseId::IIIa => (ent(0.0, FRAC_PI_2), games(&["bos"]), alloc::vec![DD], cooperate, bob_b),
        CaseId::IIIb => (ent(0.0, FRAC_PI_2), all(), alloc::vec![PhPh, AdAd], cooperate, bob_b),
        CaseId::IIIc => (ent(0.0, FRAC_PI_2), games(&["bos"]), alloc::vec![PhAd, DAd], cooperate, bob_b),
        CaseId::IV => (ent(FRAC_PI_2, FRAC_PI_2), all(), Pairing::ALL.to_vec(), cooperate, bob_a),
    };
    CaseSetup { ent, games, pairings, alice, bob }
}

/// Knobs for [`case_study`].
#[derive(Debug, Clone, PartialEq)]
pub struct CaseOptions {
    /// Decoherence values (`p₁ = p₂`).
    pub p_values: Vec<f64>,
    /// Memory values (`μ₁ = μ₂`).
    pub mu_values: Vec<f64>,
    /// Alice's deviation lattice.
    pub alice_space: StrategySpace,
    /// Bob's deviation lattice.
    pub bob_space: StrategySpace,
    /// Nash tolerance.
    pub epsilon: f64,
}

impl Default for CaseOptions {
    fn default() -> Self {
        let grid = alloc::vec![0.0, 0.25, 0.5, 0.75, 1.0];
        CaseOptions {
            p_values: grid.clone(),
            mu_values: grid,
            alice_space: StrategySpace::classical_default(),
            bob_space: StrategySpace::quantum_default(),
            epsilon: NASH_EPS,
        }
    }
}

/// One `(game, pairing, p, μ)` point of a case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CasePoint {
    /// Game name.
    pub game: &'static str,
    /// Pairing.
    pub pairing: Pairing,
    /// Decoherence.
    pub p: f64,
    /// Memory.
    pub mu: f64,
    /// Nash scan at the case profile.
    pub report: EquilibriumReport,
    /// Spread of either payoff over Bob's `(α, β)` lattice at fixed `θ₂`.
    pub phase_variation: f64,
}

/// Behaviour of a payoff-vs-μ curve at fixed `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSummary {
    /// Game name.
    pub game: &'static str,
    /// Pairing.
    pub pairing: Pairing,
    /// Decoherence.
    pub p: f64,
    /// Alice's payoff never drops as μ grows.
    pub alice_nondecreasing: bool,
    /// Bob's payoff never drops as μ grows.
    pub bob_nondecreasing: bool,
    /// Smallest Bob − Alice along the curve.
    pub min_advantage: f64,
    /// Largest Bob − Alice along the curve.
    pub max_advantage: f64,
}

/// Full result of a case study.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseReport {
    /// Which case.
    pub case: CaseId,
    /// Configuration used.
    pub setup: CaseSetup,
    /// Every grid point, ordered game, pairing, p, μ.
    pub points: Vec<CasePoint>,
    /// One entry per game, pairing and p.
    pub curves: Vec<CurveSummary>,
}

impl CaseReport {
    /// True iff every point is a grid ε-Nash profile.
    pub fn all_nash(&self) -> bool {
        self.points.iter().all(|p| p.report.is_epsilon_nash)
    }

    /// Largest phase variation over all points.
    pub fn max_phase_variation(&self) -> f64 {
        self.points.iter().map(|p| p.phase_variation).fold(0.0, f64::max)
    }
}

/// Runs a case over the `(p, μ)` grid with `p₁ = p₂`, `μ₁ = μ₂`.
pub fn case_study(id: CaseId, opts: &CaseOptions) -> Result<CaseReport> {
    let setup = case_setup(id);
    let profile = (setup.alice, setup.bob);
    let phase_space = StrategySpace { theta_points: 2, ..opts.bob_space };
    let phases: Vec<StrategyParams> = phase_space
        .points()
        .into_iter()
        .filter(|s| s.theta == 0.0)
        .map(|s| StrategyParams { theta: setup.bob.theta, ..s })
        .collect();
    let mut points = Vec::new();
    let mut curves = Vec::new();
    for game in &setup.games {
        for &pairing in &setup.pairings {
            for &p in &opts.p_values {
                let mut curve = Vec::new();
                for &mu in &opts.mu_values {
                    let n = Noise::new(p, mu)?;
                    let ev = FormEvaluator::new(pairing, game, &setup.ent, n, n)?;
                    let f = |a: &StrategyParams, b: &StrategyParams| ev.eval(a, b);
                    let report = check_profile(&f, &opts.alice_space, &opts.bob_space, profile, opts.epsilon);
                    let spread = |pick: fn((f64, f64)) -> f64| {
                        let vals = phases.iter().map(|s| pick(ev.eval(&setup.alice, s)));
                        let (lo, hi) = vals.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)));
                        hi - lo
                    };
                    let phase_variation = spread(|v| v.0).max(spread(|v| v.1));
                    curve.push(report.payoffs);
                    points.push(CasePoint { game: game.name, pairing, p, mu, report, phase_variation });
                }
                let nondec = |pick: fn(&(f64, f64)) -> f64| curve.windows(2).all(|w| pick(&w[1]) >= pick(&w[0]) - TIE_TOL);
                let adv = curve.iter().map(|(a, b)| b - a);
                curves.push(CurveSummary {
                    game: game.name,
                    pairing,
                    p,
                    alice_nondecreasing: nondec(|v| v.0),
                    bob_nondecreasing: nondec(|v| v.1),
                    min_advantage: adv.clone().fold(f64::INFINITY, f64::min),
                    max_advantage: adv.fold(f64::NEG_INFINITY, f64::max),
                });
            }
        }
    }
    Ok(CaseReport { case: id, setup, points, curves })
}
