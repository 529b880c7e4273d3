//! Assembly of the published classification tables: sieve output joined
//! with the transcribed verdicts, rendered as markdown, CSV, or records.

use std::collections::HashSet;
use std::fmt::Write as _;

use spinsieve_core::root::{RootSystem, Weight};
use spinsieve_core::sieve::{strings_for, FamilyContext, StringFamily, VerdictStatus};
use spinsieve_core::spin::is_u_small;
use spinsieve_core::weyl::{attach_appendix_indices, involutions};
use thiserror::Error;

use crate::oracle::OracleRecord;
use crate::templates::{SpinClaim, LETTERS};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableId {
    G2,
    F4Strings,
    F4Scattered,
    Appendix,
}

impl TableId {
    pub fn parse(text: &str) -> Option<TableId> {
        match text {
            "g2" => Some(TableId::G2),
            "f4-strings" => Some(TableId::F4Strings),
            "f4-scattered" => Some(TableId::F4Scattered),
            "appendix" => Some(TableId::Appendix),
            _ => None,
        }
    }

    pub fn group(&self) -> &'static str {
        match self {
            TableId::G2 => "G2",
            _ => "F4",
        }
    }
}

#[derive(Clone, Debug)]
pub enum RowKind {
    Scattered { lambda: Weight },
    Strings { family: StringFamily },
    Involution { fixed_set: Vec<usize> },
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub appendix_index: Option<u32>,
    pub s_rho: Weight,
    pub kind: RowKind,
    pub spin_lkt: Option<SpinClaim>,
    pub mult: Option<u32>,
    pub status: VerdictStatus,
    pub source: String,
    pub u_small: Option<bool>,
}

impl TableRow {
    /// The lambda column: a concrete weight or a letter pattern.
    pub fn lambda_display(&self) -> String {
        match &self.kind {
            RowKind::Scattered { lambda } => format!("{lambda:?}"),
            RowKind::Strings { family } => {
                let parts: Vec<String> = family
                    .base_lambda
                    .iter()
                    .enumerate()
                    .map(|(i, v)| match v {
                        Some(x) => format!("{x}"),
                        None => LETTERS[i].to_string(),
                    })
                    .collect();
                format!("[{}]", parts.join(","))
            }
            RowKind::Involution { .. } => String::new(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Table {
    pub id: TableId,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("sieve error: {0:?}")]
    Core(spinsieve_core::Error),
    #[error("member record matches no sieve output: {0}")]
    UnmatchedMember(String),
    #[error("{count} sieve rows have no verdict record: {details}")]
    MissingCoverage { count: usize, details: String },
}

impl Table {
    /// Rows carrying a published-membership verdict.
    pub fn member_rows(&self) -> impl Iterator<Item = &TableRow> {
        self.rows
            .iter()
            .filter(|r| r.status == VerdictStatus::UnitaryWithHd)
    }

    pub fn unknown_rows(&self) -> Vec<&TableRow> {
        self.rows
            .iter()
            .filter(|r| r.status == VerdictStatus::Unknown)
            .collect()
    }

    /// Fails loudly when any sieve row lacks verdict coverage.
    pub fn check_coverage(&self) -> Result<(), TableError> {
        let unknown = self.unknown_rows();
        if unknown.is_empty() {
            return Ok(());
        }
        let details = unknown
            .iter()
            .map(|r| format!("{:?} {}", r.s_rho, r.lambda_display()))
            .collect::<Vec<_>>()
            .join("; ");
        Err(TableError::MissingCoverage { count: unknown.len(), details })
    }

    pub fn to_markdown(&self) -> String {
        let headers = self.headers();
        let mut out = String::new();
        let _ = writeln!(out, "| {} |", headers.join(" | "));
        let _ = writeln!(out, "|{}|", vec!["---"; headers.len()].join("|"));
        for row in &self.rows {
            let _ = writeln!(out, "| {} |", self.cells(row).join(" | "));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.headers().join(",") + "\n";
        for row in &self.rows {
            out.push_str(&self.cells(row).join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_records(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let fields: Vec<String> = self
                .headers()
                .iter()
                .zip(self.cells(row))
                .filter(|(_, v)| !v.is_empty())
                .map(|(k, v)| format!("{}={v}", k.replace(' ', "_")))
                .collect();
            let _ = writeln!(out, "{}", fields.join(" "));
        }
        out
    }

    fn headers(&self) -> Vec<&'static str> {
        match self.id {
            TableId::Appendix => vec!["index", "s_rho", "fixed_set"],
            TableId::G2 => vec!["s_rho", "lambda", "spin_lkt", "mult", "status", "source"],
            TableId::F4Strings => {
                vec!["index", "s_rho", "lambda", "spin_lkt", "mult", "status", "source"]
            }
            TableId::F4Scattered => vec![
                "index", "s_rho", "lambda", "spin_lkt", "mult", "u_small", "status", "source",
            ],
        }
    }

    fn cells(&self, row: &TableRow) -> Vec<String> {
        let srho = format!("{:?}", row.s_rho).replace(',', ";");
        let idx = row.appendix_index.map(|i| i.to_string()).unwrap_or_default();
        let spin = row.spin_lkt.as_ref().map(|c| c.to_string()).unwrap_or_default();
        let mult = row.mult.map(|m| m.to_string()).unwrap_or_default();
        let status = match row.status {
            VerdictStatus::UnitaryWithHd => "UNITARY_WITH_HD",
            VerdictStatus::NonUnitary => "NON_UNITARY",
            VerdictStatus::Unknown => "UNKNOWN",
        }
        .to_string();
        match self.id {
            TableId::Appendix => {
                let fixed = match &row.kind {
                    RowKind::Involution { fixed_set } => format!(
                        "{{{}}}",
                        fixed_set
                            .iter()
                            .map(|i| (i + 1).to_string())
                            .collect::<Vec<_>>()
                            .join(";")
                    ),
                    _ => String::new(),
                };
                vec![idx, srho, fixed]
            }
            TableId::G2 => vec![
                srho,
                row.lambda_display(),
                spin,
                mult,
                status,
                row.source.clone(),
            ],
            TableId::F4Strings => vec![
                idx,
                srho,
                row.lambda_display(),
                spin,
                mult,
                status,
                row.source.clone(),
            ],
            TableId::F4Scattered => {
                let us = row
                    .u_small
                    .map(|b| if b { "Yes" } else { "No" }.to_string())
                    .unwrap_or_default();
                vec![idx, srho, row.lambda_display(), spin, mult, us, status, row.source.clone()]
            }
        }
    }
}

fn s_rho_ints(w: &Weight) -> Vec<i64> {
    w.0.iter().map(|r| *r.numer()).collect()
}

/// Joins the sieve output for `id` with the verdict records. Member records
/// that match nothing make this fail (verdicts may only remove sieve rows,
/// never add new ones); sieve rows without a record become UNKNOWN rows.
pub fn assemble_table(
    id: TableId,
    oracle: &[OracleRecord],
    appendix: &[(u32, [i64; 4])],
) -> Result<Table, TableError> {
    let rs = RootSystem::parse(id.group()).map_err(TableError::Core)?;
    let mut invs = involutions(&rs).map_err(TableError::Core)?;
    if id != TableId::G2 {
        attach_appendix_indices(appendix, &mut invs).map_err(TableError::Core)?;
    }

    if id == TableId::Appendix {
        let mut rows = Vec::new();
        for inv in &invs {
            rows.push(TableRow {
                appendix_index: inv.appendix_index,
                s_rho: inv.s_rho.clone(),
                kind: RowKind::Involution { fixed_set: inv.fixed_set.clone() },
                spin_lkt: None,
                mult: None,
                status: VerdictStatus::Unknown,
                source: String::new(),
                u_small: None,
            });
        }
        rows.sort_by_key(|r| r.appendix_index);
        return Ok(Table { id, rows });
    }

    let group_records: Vec<(usize, &OracleRecord)> = oracle
        .iter()
        .enumerate()
        .filter(|(_, r)| r.group == id.group())
        .collect();
    let mut matched: HashSet<usize> = HashSet::new();
    let mut rows = Vec::new();

    let want_strings = matches!(id, TableId::G2 | TableId::F4Strings);
    let want_scattered = matches!(id, TableId::G2 | TableId::F4Scattered);

    for inv in &invs {
        if inv.fixed_set.is_empty() {
            if !want_scattered {
                continue;
            }
            let fam = FamilyContext::new(&rs, inv.clone());
            for cand in fam.enumerate_scattered().map_err(TableError::Core)? {
                let hit = group_records.iter().find(|(_, r)| {
                    r.s_rho == s_rho_ints(&cand.s_rho) && r.two_lambda.matches_lambda(&cand.lambda)
                });
                if let Some((ri, rec)) = hit {
                    matched.insert(*ri);
                    if rec.status == VerdictStatus::NonUnitary {
                        continue;
                    }
                    let u_small_flag = rec.spin_lkt.as_ref().and_then(|c| match c {
                        SpinClaim::Template(t) => Some(is_u_small(&rs, &t.constant)),
                        _ => None,
                    });
                    rows.push(TableRow {
                        appendix_index: inv.appendix_index,
                        s_rho: inv.s_rho.clone(),
                        kind: RowKind::Scattered { lambda: cand.lambda.clone() },
                        spin_lkt: rec.spin_lkt.clone(),
                        mult: rec.mult,
                        status: rec.status,
                        source: rec.source.clone(),
                        u_small: u_small_flag,
                    });
                } else {
                    rows.push(TableRow {
                        appendix_index: inv.appendix_index,
                        s_rho: inv.s_rho.clone(),
                        kind: RowKind::Scattered { lambda: cand.lambda.clone() },
                        spin_lkt: None,
                        mult: None,
                        status: VerdictStatus::Unknown,
                        source: String::new(),
                        u_small: None,
                    });
                }
            }
        } else {
            if !want_strings {
                continue;
            }
            for family in strings_for(&rs, inv).map_err(TableError::Core)? {
                let hit = group_records.iter().find(|(_, r)| {
                    r.s_rho == s_rho_ints(&family.s_rho)
                        && r.two_lambda.matches_base(&family.base_lambda)
                });
                if let Some((ri, rec)) = hit {
                    matched.insert(*ri);
                    if rec.status == VerdictStatus::NonUnitary {
                        continue;
                    }
                    rows.push(TableRow {
                        appendix_index: inv.appendix_index,
                        s_rho: inv.s_rho.clone(),
                        kind: RowKind::Strings { family },
                        spin_lkt: rec.spin_lkt.clone(),
                        mult: rec.mult,
                        status: rec.status,
                        source: rec.source.clone(),
                        u_small: None,
                    });
                } else {
                    rows.push(TableRow {
                        appendix_index: inv.appendix_index,
                        s_rho: inv.s_rho.clone(),
                        kind: RowKind::Strings { family },
                        spin_lkt: None,
                        mult: None,
                        status: VerdictStatus::Unknown,
                        source: String::new(),
                        u_small: None,
                    });
                }
            }
        }
    }

    // Member records must resolve to a sieve row; exclusion records may
    // reference candidates the sieve already eliminates on its own.
    for (ri, rec) in &group_records {
        let relevant = match id {
            TableId::G2 => true,
            TableId::F4Strings => !rec.two_lambda.is_concrete(),
            TableId::F4Scattered => rec.two_lambda.is_concrete(),
            TableId::Appendix => false,
        };
        if relevant && rec.status == VerdictStatus::UnitaryWithHd && !matched.contains(ri) {
            return Err(TableError::UnmatchedMember(format!(
                "s_rho={:?} two_lambda={}",
                rec.s_rho, rec.two_lambda
            )));
        }
    }

    rows.sort_by(|a, b| {
        let ka = (matches!(a.kind, RowKind::Scattered { .. }), a.appendix_index, a.s_rho.clone());
        let kb = (matches!(b.kind, RowKind::Scattered { .. }), b.appendix_index, b.s_rho.clone());
        ka.cmp(&kb).then(a.lambda_display().cmp(&b.lambda_display()))
    });
    Ok(Table { id, rows })
}
