//! Game protocol: initial state, strategy unitaries, measurement basis and
//! trace-rule payoffs.
//!
//! Two-qubit basis order is `|00⟩, |01⟩, |10⟩, |11⟩` with Alice on the
//! first (most significant) qubit.

use core::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64 as C64;

use crate::error::check_range;
use crate::math::{abs, cis, cos, sin};
use crate::qmat::CMatrix;
use crate::{Error, Result};

/// Imaginary residue tolerated when reading a payoff off a trace.
pub const IMAG_TOL: f64 = 1e-10;

/// One player's strategy `(θ, α, β)`, radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyParams {
    /// Mixing angle between the two classical moves, `[0, π]`.
    pub theta: f64,
    /// Phase of the "stay" component, `[−π, π]`.
    pub alpha: f64,
    /// Phase of the "flip" component, `[−π, π]`.
    pub beta: f64,
}

impl StrategyParams {
    /// Validated constructor.
    pub fn new(theta: f64, alpha: f64, beta: f64) -> Result<Self> {
        check_range("theta", theta, 0.0, PI)?;
        check_range("alpha", alpha, -PI, PI)?;
        check_range("beta", beta, -PI, PI)?;
        Ok(StrategyParams { theta, alpha, beta })
    }

    /// Classical player: `α = β = 0`.
    pub fn classical(theta: f64) -> Result<Self> {
        Self::new(theta, 0.0, 0.0)
    }
}

/// Entanglement of the initial state (`gamma`) and of the measurement
/// basis (`delta`), both in `[0, π/2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementParams {
    /// Initial-state entanglement.
    pub gamma: f64,
    /// Measurement-basis entanglement.
    pub delta: f64,
}

impl EntanglementParams {
    /// Validated constructor.
    pub fn new(gamma: f64, delta: f64) -> Result<Self> {
        check_range("gamma", gamma, 0.0, FRAC_PI_2)?;
        check_range("delta", delta, 0.0, FRAC_PI_2)?;
        Ok(EntanglementParams { gamma, delta })
    }
}

/// `cos(γ/2)|00⟩ + i sin(γ/2)|11⟩`.
pub fn initial_state(gamma: f64) -> Result<[C64; 4]> {
    check_range("gamma", gamma, 0.0, FRAC_PI_2)?;
    let z = C64::new(0.0, 0.0);
    Ok([C64::new(cos(gamma / 2.0), 0.0), z, z, C64::new(0.0, sin(gamma / 2.0))])
}

/// Density matrix of [`initial_state`].
pub fn initial_density(gamma: f64) -> Result<CMatrix> {
    Ok(CMatrix::outer(&initial_state(gamma)?))
}

/// `U = cos(θ/2) R + sin(θ/2) P` with `R = diag(e^{iα}, e^{−iα})` and
/// `P|0⟩ = e^{i(π/2−β)}|1⟩`, `P|1⟩ = e^{i(π/2+β)}|0⟩`.
pub fn strategy_unitary(s: &StrategyParams) -> CMatrix {
    let c = cos(s.theta / 2.0);
    let sn = sin(s.theta / 2.0);
    let entries = [
        cis(s.alpha) * c,
        cis(FRAC_PI_2 + s.beta) * sn,
        cis(FRAC_PI_2 - s.beta) * sn,
        cis(-s.alpha) * c,
    ];
    CMatrix::from_rows(2, &entries).expect("finite 2x2")
}

/// Measurement basis vectors `[ψ00, ψ01, ψ10, ψ11]`.
pub fn basis_vectors(delta: f64) -> Result<[[C64; 4]; 4]> {
    check_range("delta", delta, 0.0, FRAC_PI_2)?;
    let c = C64::new(cos(delta / 2.0), 0.0);
    let s = C64::new(0.0, sin(delta / 2.0));
    let z = C64::new(0.0, 0.0);
    Ok([
        [c, z, z, s],
        [z, c, -s, z],
        [z, -s, c, z],
        [s, z, z, c],
    ])
}

/// Rank-one projectors `[P00, P01, P10, P11]` onto the measurement basis.
pub fn payoff_projectors(delta: f64) -> Result<[CMatrix; 4]> {
    let v = basis_vectors(delta)?;
    Ok(v.map(|b| CMatrix::outer(&b)))
}

/// `P = Σ $_ij P_ij` with `entries = [$00, $01, $10, $11]`.
pub fn payoff_operator(delta: f64, entries: [f64; 4]) -> Result<CMatrix> {
    let proj = payoff_projectors(delta)?;
    let mut p = CMatrix::zeros(4);
    for (pr, e) in proj.iter().zip(entries) {
        p = &p + &pr.scale(C64::new(e, 0.0));
    }
    Ok(p)
}

/// `(U₁⊗U₂) ρ_in (U₁⊗U₂)†` without noise.
pub fn noiseless_final_state(gamma: f64, s1: &StrategyParams, s2: &StrategyParams) -> Result<CMatrix> {
    let rho = initial_density(gamma)?;
    let u = strategy_unitary(s1).tensor(&strategy_unitary(s2));
    Ok(u.sandwich(&rho))
}

/// `Tr(P ρ)`, required to be real within [`IMAG_TOL`].
pub fn measure_payoff(p: &CMatrix, rho: &CMatrix) -> Result<f64> {
    if p.dim() != rho.dim() {
        return Err(Error::Shape { expected: p.dim(), found: rho.dim() });
    }
    let t = p.matmul(rho).trace();
    if abs(t.im) > IMAG_TOL {
        return Err(Error::Numerical { what: "payoff trace", residue: abs(t.im) });
    }
    Ok(t.re)
}
