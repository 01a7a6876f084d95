//! Closed-form payoffs for the nine channel pairings.
//!
//! Every payoff has the same skeleton: eleven strategy-dependent basis
//! functions (see [`strategy_basis`]) multiplied by coefficients that are
//! linear in the four payoff entries and depend only on the entanglement
//! angles and the channel parameters. A [`PayoffForm`] stores those
//! coefficients as four-vectors over `[$00, $01, $10, $11]`, so a form is
//! built once per `(γ, δ, p, μ)` point and then evaluated cheaply for any
//! strategy pair, which is what the equilibrium scans need.
//!
//! Naming follows the usual shorthand: `cg = cos²(γ/2)`, `sg = sin²(γ/2)`,
//! `cd`, `sd` likewise for `δ`, `ξ = ½ sin δ sin γ`. A trailing `1`/`2`
//! on a coefficient means first/second channel.

use core::fmt;

use crate::channels::ChannelKind;
use crate::error::check_range;
use crate::games::Bimatrix;
use crate::math::{cos, sin, sqrt};
use crate::protocol::{EntanglementParams, StrategyParams};
use crate::{Error, Result};

/// Coefficient four-vector over `[$00, $01, $10, $11]`.
pub type E4 = [f64; 4];

/// Decoherence and memory of one channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Noise {
    /// Decoherence probability, `[0, 1]`.
    pub p: f64,
    /// Memory, `[0, 1]`.
    pub mu: f64,
}

impl Noise {
    /// Validated constructor.
    pub fn new(p: f64, mu: f64) -> Result<Self> {
        check_range("p", p, 0.0, 1.0)?;
        check_range("mu", mu, 0.0, 1.0)?;
        Ok(Noise { p, mu })
    }

    /// No noise at all.
    pub const NONE: Noise = Noise { p: 0.0, mu: 0.0 };
}

/// The nine ordered pairings, named first channel then second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pairing {
    /// Amplitude damping, amplitude damping.
    AdAd,
    /// Depolarizing, depolarizing.
    DD,
    /// Dephasing, dephasing.
    PhPh,
    /// Dephasing, amplitude damping.
    PhAd,
    /// Amplitude damping, dephasing.
    AdPh,
    /// Amplitude damping, depolarizing.
    AdD,
    /// Depolarizing, amplitude damping.
    DAd,
    /// Depolarizing, dephasing.
    DPh,
    /// Dephasing, depolarizing.
    PhD,
}

impl Pairing {
    /// All pairings in canonical order.
    pub const ALL: [Pairing; 9] = [
        Pairing::AdAd,
        Pairing::DD,
        Pairing::PhPh,
        Pairing::PhAd,
        Pairing::AdPh,
        Pairing::AdD,
        Pairing::DAd,
        Pairing::DPh,
        Pairing::PhD,
    ];

    /// Channel kinds `(first, second)`.
    pub fn kinds(self) -> (ChannelKind, ChannelKind) {
        use ChannelKind::*;
        match self {
            Pairing::AdAd => (AmplitudeDamping, AmplitudeDamping),
            Pairing::DD => (Depolarizing, Depolarizing),
            Pairing::PhPh => (Dephasing, Dephasing),
            Pairing::PhAd => (Dephasing, AmplitudeDamping),
            Pairing::AdPh => (AmplitudeDamping, Dephasing),
            Pairing::AdD => (AmplitudeDamping, Depolarizing),
            Pairing::DAd => (Depolarizing, AmplitudeDamping),
            Pairing::DPh => (Depolarizing, Dephasing),
            Pairing::PhD => (Dephasing, Depolarizing),
        }
    }

    /// Identifier such as `ad-d`.
    pub fn id(self) -> &'static str {
        match self {
            Pairing::AdAd => "ad-ad",
            Pairing::DD => "d-d",
            Pairing::PhPh => "ph-ph",
            Pairing::PhAd => "ph-ad",
            Pairing::AdPh => "ad-ph",
            Pairing::AdD => "ad-d",
            Pairing::DAd => "d-ad",
            Pairing::DPh => "d-ph",
            Pairing::PhD => "ph-d",
        }
    }

    /// Inverse of [`Pairing::id`].
    pub fn parse(s: &str) -> Result<Pairing> {
        Pairing::ALL.into_iter().find(|p| p.id() == s).ok_or(Error::Unknown("pairing"))
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Amplitude-damping coefficients of one channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdCoeffs {
    /// `(1−p)² + μ(1−p)p`
    pub chi00: f64,
    /// `p² + μ(1−p)p`
    pub chi11: f64,
    /// `(1−μ)(1−p) + μ√(1−p)`
    pub chi10: f64,
    /// `(1−μ)(1−p)p`
    pub chi01: f64,
    /// `(1−μ)p`
    pub chi_a: f64,
    /// `(1−p) + μp`
    pub chi_b: f64,
}

/// Amplitude-damping coefficients.
pub fn ad_coeffs(p: f64, mu: f64) -> Result<AdCoeffs> {
    Noise::new(p, mu)?;
    let q = 1.0 - p;
    Ok(AdCoeffs {
        chi00: q * q + mu * q * p,
        chi11: p * p + mu * q * p,
        chi10: (1.0 - mu) * q + mu * sqrt(q),
        chi01: (1.0 - mu) * q * p,
        chi_a: (1.0 - mu) * p,
        chi_b: q + mu * p,
    })
}

/// Which channel a depolarizing coefficient set belongs to; the two slots
/// order the same four polynomials differently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    /// First channel (before the strategies).
    First,
    /// Second channel (after the strategies).
    Second,
}

/// Depolarizing coefficients `Δ¹..Δ⁴` of one channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepolCoeffs {
    /// `Δ¹`
    pub d1: f64,
    /// `Δ²`
    pub d2: f64,
    /// `Δ³`
    pub d3: f64,
    /// `Δ⁴`
    pub d4: f64,
}

/// Depolarizing coefficients for the given slot.
pub fn depol_coeffs(p: f64, mu: f64, slot: Slot) -> Result<DepolCoeffs> {
    Noise::new(p, mu)?;
    let same = -(1.0 / 9.0) * (-3.0 + 2.0 * p) * (-2.0 * p + 2.0 * mu * p + 3.0);
    let cross = -(2.0 / 9.0) * p * (-2.0 * p + 2.0 * mu * p - 3.0 * mu);
    let memless = (2.0 / 9.0) * p * (-3.0 + 2.0 * p) * (mu - 1.0);
    let coh = -(1.0 / 9.0) * (-9.0 + 24.0 * p - 18.0 * mu * p - 16.0 * p * p + 16.0 * mu * p * p);
    Ok(match slot {
        Slot::First => DepolCoeffs { d1: same, d2: cross, d3: coh - (2.0 / 3.0) * mu * p, d4: memless },
        Slot::Second => DepolCoeffs { d1: same, d2: memless, d3: cross, d4: coh },
    })
}

/// Dephasing coherence factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DephasingCoeff {
    /// `(1−μ)(1−p)² + μ`
    pub mu_p: f64,
}

/// Dephasing coherence factor.
pub fn dephasing_coeff(p: f64, mu: f64) -> Result<DephasingCoeff> {
    Noise::new(p, mu)?;
    Ok(DephasingCoeff { mu_p: (1.0 - mu) * (1.0 - p) * (1.0 - p) + mu })
}

/// Entanglement shorthands shared by all pairings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Angles {
    /// `cos²(γ/2)`
    pub cg: f64,
    /// `sin²(γ/2)`
    pub sg: f64,
    /// `cos²(δ/2)`
    pub cd: f64,
    /// `sin²(δ/2)`
    pub sd: f64,
    /// `½ sin δ sin γ`
    pub xi: f64,
    /// `sin γ`
    pub sin_g: f64,
    /// `sin δ`
    pub sin_d: f64,
}

impl Angles {
    /// Shorthands for the given angles.
    pub fn new(ent: &EntanglementParams) -> Self {
        let (g, d) = (ent.gamma, ent.delta);
        let sq = |x: f64| x * x;
        Angles {
            cg: sq(cos(g / 2.0)),
            sg: sq(sin(g / 2.0)),
            cd: sq(cos(d / 2.0)),
            sd: sq(sin(d / 2.0)),
            xi: 0.5 * sin(d) * sin(g),
            sin_g: sin(g),
            sin_d: sin(d),
        }
    }
}

/// Coefficients of the eleven strategy basis functions.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PayoffForm {
    /// `c₁c₂`
    pub c1c2: E4,
    /// `s₁s₂`
    pub s1s2: E4,
    /// `s₁c₂`
    pub s1c2: E4,
    /// `c₁s₂`
    pub c1s2: E4,
    /// `c₁c₂ cos 2(α₁+α₂)`
    pub c1c2_cos: E4,
    /// `s₁s₂ cos 2(β₁+β₂)`
    pub s1s2_cos: E4,
    /// `s₁c₂ cos 2(α₂−β₁)`
    pub s1c2_cos: E4,
    /// `c₁s₂ cos 2(α₁−β₂)`
    pub c1s2_cos: E4,
    /// `sinθ₁ sinθ₂ sin(α₁+α₂+β₁+β₂)`
    pub sin_sum: E4,
    /// `sinθ₁ sinθ₂ sin(α₁+α₂−β₁−β₂)`
    pub sin_diff: E4,
    /// `sinθ₁ sinθ₂ sin(α₁−α₂+β₁−β₂)`
    pub sin_cross: E4,
}

/// Number of strategy basis functions.
pub const N_BASIS: usize = 11;

/// The strategy basis in [`PayoffForm`] field order.
pub fn strategy_basis(s1: &StrategyParams, s2: &StrategyParams) -> [f64; N_BASIS] {
    let sq = |x: f64| x * x;
    let (c1, s1_) = (sq(cos(s1.theta / 2.0)), sq(sin(s1.theta / 2.0)));
    let (c2, s2_) = (sq(cos(s2.theta / 2.0)), sq(sin(s2.theta / 2.0)));
    let st = sin(s1.theta) * sin(s2.theta);
    let (a1, b1, a2, b2) = (s1.alpha, s1.beta, s2.alpha, s2.beta);
    [
        c1 * c2,
        s1_ * s2_,
        s1_ * c2,
        c1 * s2_,
        c1 * c2 * cos(2.0 * (a1 + a2)),
        s1_ * s2_ * cos(2.0 * (b1 + b2)),
        s1_ * c2 * cos(2.0 * (a2 - b1)),
        c1 * s2_ * cos(2.0 * (a1 - b2)),
        st * sin(a1 + a2 + b1 + b2),
        st * sin(a1 + a2 - b1 - b2),
        st * sin(a1 - a2 + b1 - b2),
    ]
}

impl PayoffForm {
    /// Fields in basis order.
    pub fn terms(&self) -> [E4; N_BASIS] {
        [
            self.c1c2,
            self.s1s2,
            self.s1c2,
            self.c1s2,
            self.c1c2_cos,
            self.s1s2_cos,
            self.s1c2_cos,
            self.c1s2_cos,
            self.sin_sum,
            self.sin_diff,
            self.sin_cross,
        ]
    }

    /// Contracts every coefficient with the entries, leaving one scalar per
    /// basis function.
    pub fn contract(&self, entries: [f64; 4]) -> [f64; N_BASIS] {
        self.terms().map(|t| dot(t, entries))
    }

    /// Payoff for one entry set.
    pub fn eval(&self, entries: [f64; 4], s1: &StrategyParams, s2: &StrategyParams) -> f64 {
        dot11(&self.contract(entries), &strategy_basis(s1, s2))
    }
}

#[inline]
fn dot(a: E4, b: E4) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

/// Inner product of a contracted form with a strategy basis.
#[inline]
pub fn dot11(a: &[f64; N_BASIS], b: &[f64; N_BASIS]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
fn v(a: f64, b: f64, c: f64, d: f64) -> E4 {
    [a, b, c, d]
}

#[inline]
fn k(s: f64, a: E4) -> E4 {
    a.map(|x| s * x)
}

#[inline]
fn add(a: E4, b: E4) -> E4 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

/// `e00 − e11` pattern.
const DIAG: E4 = [1.0, 0.0, 0.0, -1.0];
/// `e01 − e10` pattern.
const ANTI: E4 = [0.0, 1.0, -1.0, 0.0];
/// `e00 + e11` pattern.
const DIAG_SUM: E4 = [1.0, 0.0, 0.0, 1.0];
/// `e01 + e10` pattern.
const ANTI_SUM: E4 = [0.0, 1.0, 1.0, 0.0];

/// `η_{1AD}`: population weight left on the `|00⟩/|11⟩` sector after the
/// first amplitude-damping passage, minus the leaked part.
fn eta1_ad(x: &Angles, a1: &AdCoeffs) -> f64 {
    a1.chi11 * x.cg + a1.chi00 * x.cg - 2.0 * a1.chi01 * x.cg + x.sg
}

/// `Δ^{11}, Δ^{21}` of the first depolarizing channel.
fn depol_mix(x: &Angles, a: &DepolCoeffs) -> (f64, f64) {
    (a.d1 * x.cg + a.d2 * x.sg, a.d2 * x.cg + a.d1 * x.sg)
}

/// `η_{1DP}`.
fn eta1_dp(x: &Angles, a: &DepolCoeffs) -> f64 {
    -(a.d2 * x.cg + a.d1 * x.sg) - (a.d2 * x.sg + a.d1 * x.cg) + 2.0 * a.d4
}

/// Amplitude damping on both passages.
pub fn ad_ad(x: &Angles, n1: Noise, n2: Noise) -> Result<PayoffForm> {
    let a1 = ad_coeffs(n1.p, n1.mu)?;
    let a2 = ad_coeffs(n2.p, n2.mu)?;
    let Angles { cg, sg, cd, sd, xi, .. } = *x;
    let g = sg + a1.chi11 * cg;
    let lift = a1.chi00 * a2.chi11 + 2.0 * a1.chi01 * a2.chi_a;

    let eta1 = a1.chi00 * a2.chi00 * cg * cd + g * sd + lift * sd * cg;
    let chi1 = a1.chi00 * a2.chi00 * cg * sd + g * cd + lift * cd * cg;
    let eta2 = a2.chi00 * g * cd + (a1.chi00 + 2.0 * a1.chi01 * a2.chi_a) * sd * cg + a2.chi11 * g * sd;
    let chi2 = a2.chi00 * g * sd + (a1.chi00 + 2.0 * a1.chi01 * a2.chi_a) * cd * cg + a2.chi11 * g * cd;
    let leak = a1.chi01 + a1.chi01 * a2.chi11;
    let eta3 = a1.chi01 * a2.chi00 * cg * cd + leak * cg * sd + a2.chi_a * (g + a1.chi00 * cg) * sd;
    let chi3 = leak * cg * cd + a1.chi01 * a2.chi00 * cg * sd + a2.chi_a * (g + a1.chi00 * cg) * cd;
    let d1 = (a1.chi01 * a2.chi_b + a1.chi00 * a2.chi01) * cg;
    let d2 = a1.chi01 * a2.chi_b * cg + a2.chi01 * g;
    let d3 = a2.chi_b * g * cd + (a1.chi01 * a2.chi01 + a1.chi00 * a2.chi_b * sd) * cg;
    let d4 = a2.chi_b * g * sd + (a1.chi01 * a2.chi01 + a1.chi00 * a2.chi_b * cd) * cg;
    let d5 = eta1_ad(x, &a1);
    let d6 = a1.chi10 * a2.chi01 - a1.chi10 * a2.chi_b;
    let back = a1.chi10 + a1.chi10 * a2.chi11 - 2.0 * a1.chi10 * a2.chi_a;
    let eta4 = a1.chi10 * a2.chi00 * cd + back * sd;
    let chi4 = a1.chi10 * a2.chi00 * sd + back * cd;
    let x12 = a1.chi10 * a2.chi10 * xi;
    let xb = a1.chi10 * a2.chi_b * xi;

    Ok(PayoffForm {
        c1c2: v(eta1, d1, d1, chi1),
        s1s2: v(eta2, d2, d2, chi2),
        s1c2: v(eta3, d3, d4, chi3),
        c1s2: v(eta3, d4, d3, chi3),
        c1c2_cos: k(x12, DIAG),
        s1s2_cos: k(-x12, DIAG),
        s1c2_cos: k(xb, ANTI),
        c1s2_cos: k(-xb, ANTI),
        sin_sum: k(0.25 * x.sin_d * a2.chi10 * d5, DIAG),
        sin_diff: add(k(-0.25 * x.sin_g, v(eta4, 0.0, 0.0, chi4)), k(-0.25 * x.sin_g * d6, ANTI_SUM)),
        sin_cross: k(0.25 * x.sin_d * a2.chi_b * d5, ANTI),
    })
}

/// Depolarizing on both passages.
pub fn d_d(x: &Angles, n1: Noise, n2: Noise) -> Result<PayoffForm> {
    let a = depol_coeffs(n1.p, n1.mu, Slot::First)?;
    let b = depol_coeffs(n2.p, n2.mu, Slot::Second)?;
    let Angles { cd, sd, xi, .. } = *x;
    let (d11, d21) = depol_mix(x, &a);
    let mp2 = n2.mu * n2.p;

    let eta = (b.d1 * d11 + b.d3 * d21) * cd + (b.d1 * d21 + b.d3 * d11) * sd + 2.0 * b.d2 * a.d4;
    let chi = (b.d1 * d21 + b.d3 * d11) * cd + (b.d1 * d11 + b.d3 * d21) * sd + 2.0 * b.d2 * a.d4;
    let dd = b.d2 * d11 + b.d2 * d21 + b.d1 * a.d4 + b.d3 * a.d4;
    let m = (b.d4 - (2.0 / 3.0) * mp2) * a.d3 * xi;
    let u = (0.25 * b.d1 - 0.5 * b.d2 + 0.25 * b.d3) * a.d3;
    let w = (0.25 * b.d4 - mp2 / 6.0) * eta1_dp(x, &a);

    Ok(PayoffForm {
        c1c2: v(eta, dd, dd, chi),
        s1s2: v(chi, dd, dd, eta),
        s1c2: v(dd, chi, eta, dd),
        c1s2: v(dd, eta, chi, dd),
        c1c2_cos: k(m, DIAG),
        s1s2_cos: k(-m, DIAG),
        s1c2_cos: k(m, ANTI),
        c1s2_cos: k(-m, ANTI),
        sin_sum: k(-w * x.sin_d, DIAG),
        sin_diff: add(k(-u * x.sin_g, DIAG_SUM), k(u * x.sin_g, ANTI_SUM)),
        sin_cross: k(-w * x.sin_d, ANTI),
    })
}

/// Dephasing on both passages.
pub fn ph_ph(x: &Angles, n1: Noise, n2: Noise) -> Result<PayoffForm> {
    let m1 = dephasing_coeff(n1.p, n1.mu)?.mu_p;
    let m2 = dephasing_coeff(n2.p, n2.mu)?.mu_p;
    let Angles { cg, sg, cd, sd, xi, .. } = *x;
    let eta = cg * cd + sg * sd;
    let chi = sg * cd + cg * sd;
    let f = m1 * m2 * xi;
    Ok(PayoffForm {
        c1c2: v(eta, 0.0, 0.0, chi),
        s1s2: v(chi, 0.0, 0.0, eta),
        s1c2: v(0.0, chi, eta, 0.0),
        c1s2: v(0.0, eta, chi, 0.0),
        c1c2_cos: k(f, DIAG),
        s1s2_cos: k(-f, DIAG),
        s1c2_cos: k(f, ANTI),
        c1s2_cos: k(-f, ANTI),
        sin_sum: k(0.25 * m2 * x.sin_d, DIAG),
        sin_diff: k(0.25 * m1 * x.sin_g, v(-1.0, 1.0, 1.0, -1.0)),
        sin_cross: k(0.25 * m2 * x.sin_d, ANTI),
    })
}

/// Sine terms shared by the pairings whose second channel is amplitude
/// damping: `coh` is the coherence surviving the first channel.
fn ad_second_sin_diff(x: &Angles, a2: &AdCoeffs, coh: f64) -> E4 {
    let rest = 1.0 + a2.chi11 - 2.0 * a2.chi_a;
    let e = a2.chi00 * x.cd + rest * x.sd;
    let c = a2.chi00 * x.sd + rest * x.cd;
    add(
        k(-0.25 * coh * x.sin_g, v(e, 0.0, 0.0, c)),
        k(-0.25 * coh * (a2.chi01 - a2.chi_b) * x.sin_g, ANTI_SUM),
    )
}

/// Dephasing, then amplitude damping.
pub fn ph_ad(x: &Angles, n1: Noise, n2: Noise) -> Result<PayoffForm> {
    let m1 = dephasing_coeff(n1.p, n1.mu)?.mu_p;
    let a2 = ad_coeffs(n2.p, n2.mu)?;
    let Angles { cg, sg, cd, sd, xi, .. } = *x;

    let eta1 = a2.chi00 * cg * cd + (sg + a2.chi11 * cg) * sd;
    let chi1 = (sg + a2.chi11 * cg) * cd + a2.chi00 * cg * sd;
    let eta2 = (cg + a2.chi11 * sg) * sd + a2.chi00 * sg * cd;
    let chi2 = a2.chi00 * sg * sd + (cg + a2.chi11 * sg) * cd;
    let eta3 = a2.chi_a * sg * sd + a2.chi_a * cg * sd;
    let chi3 = a2.chi_a * sg * cd + a2.chi_a * cg * cd;
    let d1 = a2.chi01 * cg * cd + a2.chi01 * cg * sd;
    let d2 = a2.chi01 * sg * cd + a2.chi01 * sg * sd;
    let d3 = a2.chi_b * sg * cd + a2.chi_b * cg * sd;
    let d4 = a2.chi_b * cg * cd + a2.chi_b * sg * sd;
    let f = m1 * a2.chi10 * xi;
    let h = m1 * a2.chi_b * xi;

    Ok(PayoffForm {
        c1c2: v(eta1, d1, d1, chi1),
        s1s2: v(eta2, d2, d2, chi2),
        s1c2: v(eta3, d3, d4, chi3),
        c1s2: v(eta3, d4, d3, chi3),
        c1c2_cos: k(f, DIAG),
        s1s2_cos: k(-f, DIAG),
        s1c2_cos: k(h, ANTI),
        c1s2_cos: k(-h, ANTI),
        sin_sum: k(0.25 * a2.chi10 * x.sin_d, DIAG),
        sin_diff: ad_second_sin_diff(x, &a2, m1),
        sin_cross: k(0.25 * a2.chi_b * x.sin_d, ANTI),
    })
}

/// Amplitude damping, then dephasing.
pub fn ad_ph(x: &Angles, n1: Noise, n2: Noise) -> Result<PayoffForm> {
    let a1 = ad_coeffs(n1.p, n1.mu)?;
    let m2 = dephasing_coeff(n2.p, n2.mu)?.mu_p;
    let Angles { cg, sg, cd, sd, xi, .. } = *x;

    let eta = a1.chi00 * cg * cd + (sg + a1.chi11 * cg) * sd;
    let chi = (sg + a1.chi11 * cg) * cd + a1.chi00 * cg * sd;
    let d = a1.chi01 * cg * cd + a1.chi01 * cg * sd;
    let f = m2 * a1.chi10 * xi;
    let h = 0.25 * m2 * eta1_ad(x, &a1) * x.sin_d;
    let t = 0.25 * a1.chi10 * x.sin_g;

    Ok(PayoffForm {
        c1c2: v(eta, d, d, chi),
        s1s2: v(chi, d, d, eta),
        s1c2: v(d, chi, eta, d),
        c1s2: v(d, eta, chi, d),
        c1c2_cos: k(f, DIAG),
        s1s2_cos: k(-f, DIAG),
        s1c2_cos: k(f, ANTI),
        c1s2_cos: k(-f, ANTI),
        sin_sum: k(h, DIAG),
        sin_diff: add(k(-t, DIAG_SUM), k(t, ANTI_SUM)),
        sin_cross: k(h, ANTI),
    })
}

/// Amplitude damping, then depolarizing.
pub fn ad_d(x: &Angles, n1: Noise, n2: Noise) -> Result<PayoffForm> {
    let a1 = ad_coeffs(n1.p, n1.mu)?;
    let b = depol_coeffs(n2.p, n2.mu, Slot::Second)?;
    let Angles { cg, sg, cd, sd, xi, .. } = *x;
    let mp2 = n2.mu * n2.p;
    let g = sg + a1.chi11 * cg;

    let near = a1.chi00 * b.d1 * cg + b.d3 * g;
    let far = b.d1 * g + a1.chi00 * b.d3 * cg;
    let eta = near * cd + far * sd + 2.0 * a1.chi01 * b.d2 * cg;
    let chi = near * sd + far * cd + 2.0 * a1.chi01 * b.d2 * cg;
    let d = a1.chi01 * (b.d1 + b.d3) * cg + b.d2 * g + a1.chi00 * b.d2 * cg;
    let f = (b.d4 - (2.0 / 3.0) * mp2) * a1.chi10 * xi;
    let t = (0.25 * b.d1 - 0.5 * b.d2 + 0.25 * b.d3) * a1.chi10 * x.sin_g;
    let w = (0.25 * b.d4 - mp2 / 6.0) * eta1_ad(x, &a1) * x.sin_d;

    Ok(PayoffForm {
        c1c2: v(eta, d, d, chi),
        s1s2: v(chi, d, d, eta),
        s1c2: v(d, chi, eta, d),
        c1s2: v(d, eta, chi, d),
        c1c2_cos: k(f, DIAG),
        s1s2_cos: k(-f, DIAG),
        s1c2_cos: k(f, ANTI),
        c1s2_cos: k(-f, ANTI),
        sin_sum: k(w, DIAG),
        sin_diff: add(k(-t, DIAG_SUM), k(t, ANTI_SUM)),
        sin_cross: k(w, ANTI),
    })
}

/// Depolarizing, then amplitude damping.
pub fn d_ad(x: &Angles, n1: Noise, n2: Noise) -> Result<PayoffForm> {
    let a = depol_coeffs(n1.p, n1.mu, Slot::First)?;
    let a2 = ad_coeffs(n2.p, n2.mu)?;
    let Angles { cd, sd, xi, .. } = *x;
    let (d11, d21) = depol_mix(x, &a);
    // The cross mixture Δ^{12} coincides with Δ^{21}.
    let d12 = d21;

    let eta1 = d11 * a2.chi00 * cd + d11 * a2.chi11 * sd + d12 * sd + 2.0 * a.d4 * a2.chi_a * sd;
    let chi1 = d11 * a2.chi00 * sd + d11 * a2.chi11 * cd + d12 * cd + 2.0 * a.d4 * a2.chi_a * cd;
    let eta2 = d21 * a2.chi00 * cd + d21 * a2.chi11 * sd + d11 * sd + 2.0 * a.d4 * a2.chi_a * sd;
    let chi2 = d21 * a2.chi00 * sd + d21 * a2.chi11 * cd + d11 * cd + 2.0 * a.d4 * a2.chi_a * cd;
    let eta3 = (d11 + d21) * a2.chi_a * sd + a.d4 * a2.chi00 * cd + (a2.chi11 + 1.0) * a.d4 * sd;
    let chi3 = (d11 + d21) * a2.chi_a * cd + a.d4 * a2.chi00 * sd + (a2.chi11 + 1.0) * a.d4 * cd;
    let off1 = d11 * a2.chi01 + a.d4 * a2.chi_b;
    let off2 = d21 * a2.chi01 + a.d4 * a2.chi_b;
    let off3 = d11 * a2.chi_b * sd + d21 * a2.chi_b * cd + a.d4 * a2.chi01;
    let off4 = d11 * a2.chi_b * cd + d21 * a2.chi_b * sd + a.d4 * a2.chi01;
    let f = a.d3 * a2.chi10 * xi;
    let h = a.d3 * a2.chi_b * xi;
    let e1 = eta1_dp(x, &a);

    Ok(PayoffForm {
        c1c2: v(eta1, off1, off1, chi1),
        s1s2: v(eta2, off2, off2, chi2),
        s1c2: v(eta3, off3, off4, chi3),
        c1s2: v(eta3, off4, off3, chi3),
        c1c2_cos: k(f, DIAG),
        s1s2_cos: k(-f, DIAG),
        s1c2_cos: k(h, ANTI),
        c1s2_cos: k(-h, ANTI),
        sin_sum: k(-0.25 * e1 * a2.chi10 * x.sin_d, DIAG),
        sin_diff: ad_second_sin_diff(x, &a2, a.d3),
        sin_cross: k(-0.25 * e1 * a2.chi_b * x.sin_d, ANTI),
    })
}

/// Depolarizing, then dephasing.
pub fn d_ph(x: &Angles, n1: Noise, n2: Noise) -> Result<PayoffForm> {
    let a = depol_coeffs(n1.p, n1.mu, Slot::First)?;
    let m2 = dephasing_coeff(n2.p, n2.mu)?.mu_p;
    let Angles { cd, sd, xi, .. } = *x;
    let (d11, d21) = depol_mix(x, &a);
    let d12 = d21;

    let eta = d11 * cd + d12 * sd;
    let chi = d11 * sd + d12 * cd;
    let d = a.d4;
    let f = a.d3 * m2 * xi;
    let t = 0.25 * a.d3 * x.sin_g;
    let w = -0.25 * eta1_dp(x, &a) * m2 * x.sin_d;

    Ok(PayoffForm {
        c1c2: v(eta, d, d, chi),
        s1s2: v(chi, d, d, eta),
        s1c2: v(d, chi, eta, d),
        c1s2: v(d, eta, chi, d),
        c1c2_cos: k(f, DIAG),
        s1s2_cos: k(-f, DIAG),
        s1c2_cos: k(f, ANTI),
        c1s2_cos: k(-f, ANTI),
        sin_sum: k(w, DIAG),
        sin_diff: add(k(-t, DIAG_SUM), k(t, ANTI_SUM)),
        sin_cross: k(w, ANTI),
    })
}

/// Dephasing, then depolarizing.
pub fn ph_d(x: &Angles, n1: Noise, n2: Noise) -> Result<PayoffForm> {
    let m1 = dephasing_coeff(n1.p, n1.mu)?.mu_p;
    let b = depol_coeffs(n2.p, n2.mu, Slot::Second)?;
    let Angles { cg, sg, cd, sd, xi, .. } = *x;
    let mp2 = n2.mu * n2.p;

    let eta = (b.d1 * cg + b.d3 * sg) * cd + (b.d1 * sg + b.d3 * cg) * sd;
    let chi = (b.d1 * sg + b.d3 * cg) * cd + (b.d1 * cg + b.d3 * sg) * sd;
    let d = b.d2;
    let f = (b.d4 - (2.0 / 3.0) * mp2) * m1 * xi;
    let t = (0.25 * b.d1 - 0.5 * b.d2 + 0.25 * b.d3) * m1 * x.sin_g;
    let w = (0.25 * b.d4 - mp2 / 6.0) * x.sin_d;

    Ok(PayoffForm {
        c1c2: v(eta, d, d, chi),
        s1s2: v(chi, d, d, eta),
        s1c2: v(d, chi, eta, d),
        c1s2: v(d, eta, chi, d),
        c1c2_cos: k(f, DIAG),
        s1s2_cos: k(-f, DIAG),
        s1c2_cos: k(f, ANTI),
        c1s2_cos: k(-f, ANTI),
        sin_sum: k(w, DIAG),
        sin_diff: add(k(-t, DIAG_SUM), k(t, ANTI_SUM)),
        sin_cross: k(w, ANTI),
    })
}

/// Coefficient form for a pairing at one `(γ, δ, p, μ)` point.
pub fn payoff_form(
    pairing: Pairing,
    ent: &EntanglementParams,
    n1: Noise,
    n2: Noise,
) -> Result<PayoffForm> {
    let x = Angles::new(ent);
    match pairing {
        Pairing::AdAd => ad_ad(&x, n1, n2),
        Pairing::DD => d_d(&x, n1, n2),
        Pairing::PhPh => ph_ph(&x, n1, n2),
        Pairing::PhAd => ph_ad(&x, n1, n2),
        Pairing::AdPh => ad_ph(&x, n1, n2),
        Pairing::AdD => ad_d(&x, n1, n2),
        Pairing::DAd => d_ad(&x, n1, n2),
        Pairing::DPh => d_ph(&x, n1, n2),
        Pairing::PhD => ph_d(&x, n1, n2),
    }
}

/// Payoff of the player whose entries are supplied.
pub fn closed_payoff(
    pairing: Pairing,
    entries: [f64; 4],
    ent: &EntanglementParams,
    s1: &StrategyParams,
    s2: &StrategyParams,
    n1: Noise,
    n2: Noise,
) -> Result<f64> {
    Ok(payoff_form(pairing, ent, n1, n2)?.eval(entries, s1, s2))
}

/// `(Alice, Bob)` payoffs.
pub fn closed_payoff_pair(
    pairing: Pairing,
    game: &Bimatrix,
    ent: &EntanglementParams,
    s1: &StrategyParams,
    s2: &StrategyParams,
    n1: Noise,
    n2: Noise,
) -> Result<(f64, f64)> {
    let form = payoff_form(pairing, ent, n1, n2)?;
    let basis = strategy_basis(s1, s2);
    Ok((dot11(&form.contract(game.a), &basis), dot11(&form.contract(game.b), &basis)))
}
