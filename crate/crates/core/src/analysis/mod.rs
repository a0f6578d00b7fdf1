//! Numerical checkers for the inequalities and a priori estimates behind
//! the uniqueness argument. Constants that the estimates leave unspecified
//! are never asserted; the checkers report ratios.

mod estimates;
mod gronwall;

use std::io::Write;

pub use estimates::{
    gns_ratio, lemma2_ratios, maximal_regularity_ratio, power_inequality_check,
    power_inequality_unchecked, random_forcing, uniqueness_metric,
};
pub use gronwall::{fit_gronwall_coefficient, gronwall_check, GronwallInput, GronwallReport, GronwallRow};

use crate::error::Result;

/// Outcome of comparing a left-hand side against a right-hand side.
#[derive(Clone, Debug, PartialEq)]
pub struct EstimateReport {
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
    pub holds: bool,
    pub context: String,
}

impl EstimateReport {
    pub fn new(lhs: f64, rhs: f64, context: impl Into<String>) -> Self {
        let ratio = if rhs > 0.0 {
            lhs / rhs
        } else if lhs == 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
        EstimateReport { lhs, rhs, ratio, holds: lhs <= rhs * (1.0 + 1e-9), context: context.into() }
    }
}

/// CSV with columns label, lhs, rhs, ratio, holds.
pub fn write_reports_csv<W: Write>(mut w: W, reports: &[EstimateReport]) -> Result<()> {
    writeln!(w, "context,lhs,rhs,ratio,holds")?;
    for r in reports {
        writeln!(w, "{},{:.17e},{:.17e},{:.17e},{}", r.context, r.lhs, r.rhs, r.ratio, r.holds)?;
    }
    Ok(())
}
