//! Grid evaluation and CSV output.

use std::io::{self, Write};

use memgame::closedform::{payoff_form, strategy_basis, dot11, Pairing};
use rayon::prelude::*;

use crate::config::{Point, SweepConfig};
use crate::error::CliResult;
use crate::format::fmt_num;

pub const HEADER: &str =
    "game,pairing,p1,mu1,p2,mu2,gamma,delta,theta1,alpha1,beta1,theta2,alpha2,beta2,payoff_a,payoff_b";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Row {
    pub game: &'static str,
    pub pairing: Pairing,
    pub point: Point,
    pub payoff_a: f64,
    pub payoff_b: f64,
}

impl Row {
    pub fn csv_line(&self) -> String {
        let mut cells = vec![self.game.to_string(), self.pairing.id().to_string()];
        cells.extend(self.point.values().into_iter().map(fmt_num));
        cells.push(fmt_num(self.payoff_a));
        cells.push(fmt_num(self.payoff_b));
        cells.join(",")
    }
}

/// Evaluates every grid point with the closed form. Points are computed in
/// parallel; the returned order is the config's row order regardless of
/// thread count.
pub fn evaluate(cfg: &SweepConfig) -> CliResult<Vec<Row>> {
    cfg.points()
        .into_par_iter()
        .map(|point| {
            let v = point.validate()?;
            let form = payoff_form(cfg.pairing, &v.ent, v.n1, v.n2)?;
            let basis = strategy_basis(&v.s1, &v.s2);
            Ok(Row {
                game: cfg.game.name,
                pairing: cfg.pairing,
                point,
                payoff_a: dot11(&form.contract(cfg.game.a), &basis),
                payoff_b: dot11(&form.contract(cfg.game.b), &basis),
            })
        })
        .collect()
}

/// Header plus one LF-terminated line per row.
pub fn write_csv<W: Write>(rows: &[Row], mut w: W) -> io::Result<()> {
    writeln!(w, "{HEADER}")?;
    for r in rows {
        writeln!(w, "{}", r.csv_line())?;
    }
    w.flush()
}

pub fn to_csv(rows: &[Row]) -> String {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf).expect("in-memory write");
    String::from_utf8(buf).expect("ascii")
}
