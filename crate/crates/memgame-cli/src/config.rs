//! Sweep configuration files.
//!
//! Flat `key = value` lines, `#` starts a comment. Swept axes are written
//! `sweep.<axis> = start:stop:steps`; the first axis listed varies slowest.
//!
//! ```text
//! game = pd
//! pairing = ad-ad
//! gamma = pi/2
//! p = 0.8            # sets p1 and p2
//! theta2 = pi/2
//! sweep.mu = 0:1:11  # sweeps mu1 = mu2
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;

use memgame::closedform::{Noise, Pairing};
use memgame::games::{builtin_game, Bimatrix};
use memgame::protocol::{EntanglementParams, StrategyParams};

use crate::error::{CliError, CliResult};
use crate::format::{fmt_num, parse_num};

/// Parameters that can be swept. `P` and `Mu` move both channels together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    P1,
    Mu1,
    P2,
    Mu2,
    P,
    Mu,
    Theta2,
    Alpha2,
    Beta2,
}

impl Axis {
    pub const ALL: [Axis; 9] =
        [Axis::P1, Axis::Mu1, Axis::P2, Axis::Mu2, Axis::P, Axis::Mu, Axis::Theta2, Axis::Alpha2, Axis::Beta2];

    pub fn key(self) -> &'static str {
        match self {
            Axis::P1 => "p1",
            Axis::Mu1 => "mu1",
            Axis::P2 => "p2",
            Axis::Mu2 => "mu2",
            Axis::P => "p",
            Axis::Mu => "mu",
            Axis::Theta2 => "theta2",
            Axis::Alpha2 => "alpha2",
            Axis::Beta2 => "beta2",
        }
    }

    fn parse(s: &str) -> CliResult<Axis> {
        Axis::ALL.into_iter().find(|a| a.key() == s).ok_or_else(|| CliError::Usage(format!("cannot sweep '{s}'")))
    }

    /// Underlying point fields this axis writes.
    fn fields(self) -> &'static [&'static str] {
        match self {
            Axis::P => &["p1", "p2"],
            Axis::Mu => &["mu1", "mu2"],
            Axis::P1 => &["p1"],
            Axis::Mu1 => &["mu1"],
            Axis::P2 => &["p2"],
            Axis::Mu2 => &["mu2"],
            Axis::Theta2 => &["theta2"],
            Axis::Alpha2 => &["alpha2"],
            Axis::Beta2 => &["beta2"],
        }
    }
}

/// A full parameter point, unvalidated.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub gamma: f64,
    pub delta: f64,
    pub p1: f64,
    pub mu1: f64,
    pub p2: f64,
    pub mu2: f64,
    pub theta1: f64,
    pub alpha1: f64,
    pub beta1: f64,
    pub theta2: f64,
    pub alpha2: f64,
    pub beta2: f64,
}

/// A point after domain checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Validated {
    pub ent: EntanglementParams,
    pub s1: StrategyParams,
    pub s2: StrategyParams,
    pub n1: Noise,
    pub n2: Noise,
}

/// Point fields in CSV column order.
pub const POINT_FIELDS: [&str; 12] =
    ["p1", "mu1", "p2", "mu2", "gamma", "delta", "theta1", "alpha1", "beta1", "theta2", "alpha2", "beta2"];

impl Point {
    fn slot(&mut self, name: &str) -> Option<&mut f64> {
        Some(match name {
            "gamma" => &mut self.gamma,
            "delta" => &mut self.delta,
            "p1" => &mut self.p1,
            "mu1" => &mut self.mu1,
            "p2" => &mut self.p2,
            "mu2" => &mut self.mu2,
            "theta1" => &mut self.theta1,
            "alpha1" => &mut self.alpha1,
            "beta1" => &mut self.beta1,
            "theta2" => &mut self.theta2,
            "alpha2" => &mut self.alpha2,
            "beta2" => &mut self.beta2,
            _ => return None,
        })
    }

    pub fn set(&mut self, axis: Axis, v: f64) {
        for f in axis.fields() {
            *self.slot(f).expect("axis field") = v;
        }
    }

    /// Values in [`POINT_FIELDS`] order.
    pub fn values(&self) -> [f64; 12] {
        [
            self.p1, self.mu1, self.p2, self.mu2, self.gamma, self.delta, self.theta1, self.alpha1, self.beta1,
            self.theta2, self.alpha2, self.beta2,
        ]
    }

    pub fn validate(&self) -> CliResult<Validated> {
        Ok(Validated {
            ent: EntanglementParams::new(self.gamma, self.delta)?,
            s1: StrategyParams::new(self.theta1, self.alpha1, self.beta1)?,
            s2: StrategyParams::new(self.theta2, self.alpha2, self.beta2)?,
            n1: Noise::new(self.p1, self.mu1)?,
            n2: Noise::new(self.p2, self.mu2)?,
        })
    }
}

/// `start:stop:steps`, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisRange {
    pub axis: Axis,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl AxisRange {
    pub fn values(&self) -> Vec<f64> {
        let n = self.steps;
        (0..n)
            .map(|i| if i + 1 == n { self.stop } else { self.start + (self.stop - self.start) * i as f64 / (n - 1) as f64 })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub game: Bimatrix,
    pub pairing: Pairing,
    pub base: Point,
    pub axes: Vec<AxisRange>,
}

fn entries(s: &str) -> CliResult<[f64; 4]> {
    let v = s.split(',').map(parse_num).collect::<CliResult<Vec<f64>>>()?;
    v.try_into().map_err(|_| CliError::Usage(format!("expected four comma-separated entries, got '{s}'")))
}

impl SweepConfig {
    pub fn parse(text: &str) -> CliResult<SweepConfig> {
        let mut game_name = None;
        let (mut ga, mut gb) = (None, None);
        let mut pairing = None;
        let mut base = Point::default();
        let mut axes = Vec::new();
        let mut seen = HashSet::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| CliError::Usage(format!("line {}: {msg}", n + 1));
            let (key, value) = line.split_once('=').ok_or_else(|| err(format!("expected key = value, got '{line}'")))?;
            let (key, value) = (key.trim(), value.trim());
            let mut claim = |fields: &[&str]| -> CliResult<()> {
                for f in fields {
                    if !seen.insert(f.to_string()) {
                        return Err(err(format!("'{f}' given twice")));
                    }
                }
                Ok(())
            };
            match key {
                "game" | "game.a" | "game.b" | "pairing" => {
                    claim(&[key])?;
                    match key {
                        "game" => game_name = Some(value.to_string()),
                        "game.a" => ga = Some(entries(value).map_err(|e| err(e.to_string()))?),
                        "game.b" => gb = Some(entries(value).map_err(|e| err(e.to_string()))?),
                        _ => pairing = Some(Pairing::parse(value).map_err(|_| err(format!("unknown pairing '{value}'")))?),
                    }
                }
                _ => {
                    let wrap = |e: CliError| err(e.to_string());
                    if let Some(name) = key.strip_prefix("sweep.") {
                        let axis = Axis::parse(name).map_err(wrap)?;
                        claim(axis.fields())?;
                        let parts: Vec<&str> = value.split(':').collect();
                        let [a, b, s] = parts[..] else {
                            return Err(err(format!("expected start:stop:steps, got '{value}'")));
                        };
                        let steps: usize = s.trim().parse().map_err(|_| err(format!("bad step count '{s}'")))?;
                        if steps < 2 {
                            return Err(err("steps must be at least 2".into()));
                        }
                        axes.push(AxisRange { axis, start: parse_num(a).map_err(wrap)?, stop: parse_num(b).map_err(wrap)?, steps });
                    } else {
                        let v = parse_num(value).map_err(wrap)?;
                        if let Ok(axis @ (Axis::P | Axis::Mu)) = Axis::parse(key) {
                            claim(axis.fields())?;
                            base.set(axis, v);
                        } else {
                            claim(&[key])?;
                            *base.slot(key).ok_or_else(|| err(format!("unknown key '{key}'")))? = v;
                        }
                    }
                }
            }
        }
        let game = match (game_name.as_deref(), ga, gb) {
            (Some("custom") | None, Some(a), Some(b)) => Bimatrix::custom(a, b)?,
            (Some(name), None, None) if name != "custom" => {
                builtin_game(name).map_err(|_| CliError::Usage(format!("unknown game '{name}'")))?
            }
            _ => return Err(CliError::Usage("give either game = pd|bos|chicken or both game.a and game.b".into())),
        };
        let pairing = pairing.ok_or_else(|| CliError::Usage("missing pairing".into()))?;
        if axes.is_empty() {
            return Err(CliError::Usage("no sweep.<axis> line".into()));
        }
        let cfg = SweepConfig { game, pairing, base, axes };
        for r in &cfg.axes {
            for v in [r.start, r.stop] {
                let mut p = cfg.base;
                p.set(r.axis, v);
                p.validate()?;
            }
        }
        cfg.base_with_starts().validate()?;
        Ok(cfg)
    }

    fn base_with_starts(&self) -> Point {
        let mut p = self.base;
        for r in &self.axes {
            p.set(r.axis, r.start);
        }
        p
    }

    /// All points, first axis slowest.
    pub fn points(&self) -> Vec<Point> {
        let mut out = vec![self.base];
        for r in &self.axes {
            let vals = r.values();
            out = out
                .into_iter()
                .flat_map(|p| {
                    vals.iter().map(move |&v| {
                        let mut q = p;
                        q.set(r.axis, v);
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// Canonical text that parses back to the same config.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if self.game.name == "custom" {
            let join = |e: [f64; 4]| e.map(fmt_num).join(",");
            let _ = writeln!(s, "game.a = {}\ngame.b = {}", join(self.game.a), join(self.game.b));
        } else {
            let _ = writeln!(s, "game = {}", self.game.name);
        }
        let _ = writeln!(s, "pairing = {}", self.pairing.id());
        let swept: HashSet<&str> = self.axes.iter().flat_map(|r| r.axis.fields().iter().copied()).collect();
        for (name, v) in POINT_FIELDS.iter().zip(self.base.values()) {
            if !swept.contains(name) {
                let _ = writeln!(s, "{name} = {}", fmt_exact(v));
            }
        }
        for r in &self.axes {
            let _ = writeln!(s, "sweep.{} = {}:{}:{}", r.axis.key(), fmt_exact(r.start), fmt_exact(r.stop), r.steps);
        }
        s
    }
}

/// Round-trippable number text.
fn fmt_exact(v: f64) -> String {
    if v == 0.0 { "0".into() } else { format!("{v}") }
}
