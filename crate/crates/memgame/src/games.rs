//! The three classical 2×2 games and a tiny classical solver.
//!
//! Index 0 is the first move in each game's usual naming (Cooperate for the
//! Prisoner's Dilemma and Chicken, Opera for the Battle of the Sexes);
//! `θ = 0` plays index 0 and `θ = π` plays index 1.

use alloc::vec::Vec;

use crate::error::check_range;
use crate::{Error, Result};

/// Payoff table for both players, entries ordered `[$00, $01, $10, $11]`
/// with Alice choosing the row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bimatrix {
    /// Short identifier (`pd`, `bos`, `chicken`, or `custom`).
    pub name: &'static str,
    /// Alice's entries.
    pub a: [f64; 4],
    /// Bob's entries.
    pub b: [f64; 4],
}

/// Names accepted by [`builtin_game`].
pub const GAME_NAMES: [&str; 3] = ["pd", "bos", "chicken"];

impl Bimatrix {
    /// A table with user-supplied entries.
    pub fn custom(a: [f64; 4], b: [f64; 4]) -> Result<Self> {
        if a.iter().chain(&b).any(|x| !x.is_finite()) {
            return Err(Error::Numerical { what: "bimatrix entry", residue: f64::NAN });
        }
        Ok(Bimatrix { name: "custom", a, b })
    }

    /// The same game seen with the roles of Alice and Bob exchanged.
    pub fn transposed(&self) -> Self {
        let t = |e: [f64; 4]| [e[0], e[2], e[1], e[3]];
        Bimatrix { name: self.name, a: t(self.b), b: t(self.a) }
    }

    /// Cell `(row, col)` as `(Alice, Bob)`.
    pub fn cell(&self, row: usize, col: usize) -> (f64, f64) {
        (self.a[2 * row + col], self.b[2 * row + col])
    }
}

/// Prisoner's Dilemma, Battle of the Sexes, Chicken.
pub fn builtin_game(name: &str) -> Result<Bimatrix> {
    match name {
        "pd" => Ok(Bimatrix { name: "pd", a: [3.0, 0.0, 5.0, 1.0], b: [3.0, 5.0, 0.0, 1.0] }),
        "bos" => Ok(Bimatrix { name: "bos", a: [2.0, 0.0, 0.0, 1.0], b: [1.0, 0.0, 0.0, 2.0] }),
        "chicken" => {
            Ok(Bimatrix { name: "chicken", a: [3.0, 1.0, 4.0, 0.0], b: [3.0, 4.0, 1.0, 0.0] })
        }
        _ => Err(Error::Unknown("game")),
    }
}

/// Cells where neither player gains by switching their own move.
pub fn classical_pure_nash(g: &Bimatrix) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 0..2 {
        for c in 0..2 {
            let (a, b) = g.cell(r, c);
            if g.cell(1 - r, c).0 <= a && g.cell(r, 1 - c).1 <= b {
                out.push((r, c));
            }
        }
    }
    out
}

/// Expected payoffs when Alice plays row 0 with probability `x` and Bob
/// plays column 0 with probability `y`.
pub fn classical_expected(g: &Bimatrix, x: f64, y: f64) -> Result<(f64, f64)> {
    check_range("x", x, 0.0, 1.0)?;
    check_range("y", y, 0.0, 1.0)?;
    let w = [x * y, x * (1.0 - y), (1.0 - x) * y, (1.0 - x) * (1.0 - y)];
    let dot = |e: &[f64; 4]| w.iter().zip(e).map(|(a, b)| a * b).sum();
    Ok((dot(&g.a), dot(&g.b)))
}
