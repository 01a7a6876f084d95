//! Text and CSV rendering of the equilibrium case studies.

use std::fmt::Write as _;

use memgame::equilibrium::{case_study, CaseId, CaseOptions, CaseReport, StrategySpace};

use crate::error::{CliError, CliResult};
use crate::format::fmt_num;

pub const GAINS_HEADER: &str = "case,game,pairing,p,mu,payoff_a,payoff_b,gain_a,gain_b,epsilon_nash,phase_variation";

/// Parses `TxAxB`; Bob gets the full lattice, Alice the `T` θ-points.
pub fn parse_grid(s: &str) -> CliResult<(StrategySpace, StrategySpace)> {
    let bad = || CliError::Usage(format!("grid must look like 13x17x17, got '{s}'"));
    let n: Vec<usize> = s.split('x').map(|t| t.trim().parse().map_err(|_| bad())).collect::<CliResult<_>>()?;
    let [t, a, b] = n[..] else { return Err(bad()) };
    let bob = StrategySpace::new(t, a, b, false).map_err(|e| CliError::Usage(e.to_string()))?;
    let alice = StrategySpace::new(t, 2, 2, true).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok((alice, bob))
}

pub fn run(case: CaseId, grid: &str) -> CliResult<CaseReport> {
    let (alice_space, bob_space) = parse_grid(grid)?;
    let opts = CaseOptions { alice_space, bob_space, ..CaseOptions::default() };
    Ok(case_study(case, &opts)?)
}

pub fn gains_csv(r: &CaseReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{GAINS_HEADER}");
    for p in &r.points {
        let e = &p.report;
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.case.id(),
            p.game,
            p.pairing.id(),
            fmt_num(p.p),
            fmt_num(p.mu),
            fmt_num(e.payoffs.0),
            fmt_num(e.payoffs.1),
            fmt_num(e.max_unilateral_gain_a),
            fmt_num(e.max_unilateral_gain_b),
            e.is_epsilon_nash,
            fmt_num(p.phase_variation),
        );
    }
    s
}

pub fn summary(r: &CaseReport) -> String {
    let mut s = String::new();
    let st = |x: &memgame::protocol::StrategyParams| {
        format!("({}, {}, {})", fmt_num(x.theta), fmt_num(x.alpha), fmt_num(x.beta))
    };
    let _ = writeln!(
        s,
        "case {}: gamma={} delta={} alice={} bob={}",
        r.case.id(),
        fmt_num(r.setup.ent.gamma),
        fmt_num(r.setup.ent.delta),
        st(&r.setup.alice),
        st(&r.setup.bob)
    );
    for c in &r.curves {
        let _ = writeln!(
            s,
            "  {} {} p={}: bob-alice in [{}, {}], alice {}, bob {}",
            c.game,
            c.pairing.id(),
            fmt_num(c.p),
            fmt_num(c.min_advantage),
            fmt_num(c.max_advantage),
            if c.alice_nondecreasing { "nondecreasing in mu" } else { "not monotone in mu" },
            if c.bob_nondecreasing { "nondecreasing in mu" } else { "not monotone in mu" },
        );
    }
    let failing = r.points.iter().filter(|p| !p.report.is_epsilon_nash).count();
    let worst = r.points.iter().map(|p| p.report.max_unilateral_gain_a.max(p.report.max_unilateral_gain_b)).fold(0.0, f64::max);
    let _ = writeln!(s, "  phase variation over bob's (alpha, beta) grid: {}", fmt_num(r.max_phase_variation()));
    let _ = writeln!(
        s,
        "  epsilon-nash at {}/{} points, largest unilateral gain {}",
        r.points.len() - failing,
        r.points.len(),
        fmt_num(worst)
    );
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let (a, b) = parse_grid("13x17x17").unwrap();
        assert_eq!((a.theta_points, a.classical_only), (13, true));
        assert_eq!((b.alpha_points, b.beta_points), (17, 17));
        for bad in ["13x17", "1x3x3", "axbxc", ""] {
            assert!(parse_grid(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn case_i_csv() {
        let r = run(CaseId::I, "5x5x5").unwrap();
        let csv = gains_csv(&r);
        assert_eq!(csv.lines().count(), 1 + r.points.len());
        assert!(summary(&r).contains("phase variation over bob's (alpha, beta) grid: 0"));
    }
}
