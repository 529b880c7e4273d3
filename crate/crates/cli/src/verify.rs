//! Checks the spin-LKT claims carried by assembled tables: every member row
//! must satisfy the exact equality `|spin_lkt|^2_spin = |2 lambda|^2`
//! (strings: at sampled parameter values).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use spinsieve_core::rat;
use spinsieve_core::root::{RootSystem, Weight};
use spinsieve_core::sieve::VerdictStatus;
use spinsieve_core::spin::spin_norm_sq;
use spinsieve_core::weyl::{involution_by_s_rho, involutions, Involution};

use crate::tables::{RowKind, Table, TableRow};
use crate::templates::SpinClaim;

#[derive(Clone, Debug)]
pub struct RowCheck {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<RowCheck>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{} {}{}",
                if c.pass { "ok  " } else { "FAIL" },
                c.label,
                if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) }
            );
        }
        out
    }
}

/// The claimed spin-LKT weight for a concrete `lambda` of a row.
fn claimed_weight(
    rs: &RootSystem,
    inv: &Involution,
    claim: &SpinClaim,
    lambda: &Weight,
    params: &BTreeMap<usize, spinsieve_core::Rat>,
) -> Weight {
    match claim {
        SpinClaim::Lkt => rs.dominant(&(lambda + &inv.element.act(lambda))).0,
        SpinClaim::TwoLambda => lambda.double(),
        SpinClaim::Template(t) => t.eval(params),
    }
}

fn check_row(rs: &RootSystem, invs: &[Involution], row: &TableRow, samples: usize) -> RowCheck {
    let label = format!("{:?} {}", row.s_rho, row.lambda_display());
    let Some(claim) = &row.spin_lkt else {
        return RowCheck { label, pass: false, detail: "row carries no spin-LKT claim".into() };
    };
    let Some(inv) = involution_by_s_rho(invs, &row.s_rho) else {
        return RowCheck { label, pass: false, detail: "unknown involution".into() };
    };
    let points: Vec<(Weight, BTreeMap<usize, spinsieve_core::Rat>)> = match &row.kind {
        RowKind::Scattered { lambda } => vec![(lambda.clone(), BTreeMap::new())],
        RowKind::Strings { family } => (1..=samples)
            .map(|k| {
                let params: BTreeMap<usize, spinsieve_core::Rat> = family
                    .free_indices
                    .iter()
                    .map(|&i| (i, rat(k as i64, 2)))
                    .collect();
                (family.lambda_at(&params), params)
            })
            .collect(),
        RowKind::Involution { .. } => {
            return RowCheck { label, pass: false, detail: "not a representation row".into() }
        }
    };
    for (lambda, params) in points {
        let delta = claimed_weight(rs, inv, claim, &lambda, &params);
        let spin = match spin_norm_sq(rs, &delta) {
            Ok(v) => v.norm_sq,
            Err(e) => {
                return RowCheck {
                    label,
                    pass: false,
                    detail: format!("claim {delta:?} not a K-type highest weight: {e:?}"),
                }
            }
        };
        let target = rs.norm_sq(&lambda.double());
        if spin != target {
            return RowCheck {
                label,
                pass: false,
                detail: format!(
                    "lambda={lambda:?}: |{delta:?}|^2_spin = {spin} but |2 lambda|^2 = {target}"
                ),
            };
        }
    }
    RowCheck { label, pass: true, detail: String::new() }
}

/// Verifies every member row of the table; strings are sampled at
/// `samples_per_string` half-integer parameter values.
pub fn verify_spin_lkt_claims(table: &Table, samples_per_string: usize) -> Report {
    let rs = RootSystem::parse(table.id.group()).expect("table group is valid");
    let invs = involutions(&rs).expect("involution enumeration fits the budget");
    let mut report = Report::default();
    for row in &table.rows {
        if row.status != VerdictStatus::UnitaryWithHd {
            continue;
        }
        report.checks.push(check_row(&rs, &invs, row, samples_per_string));
    }
    report
}
