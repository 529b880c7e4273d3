//! Loader for the verdict data file: one `key=value` record per line,
//! validated for schema errors and duplicate keys with line numbers.

use std::collections::HashSet;

use spinsieve_core::sieve::VerdictStatus;
use thiserror::Error;

use crate::templates::{SpinClaim, TwoLambdaKey};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleRecord {
    pub group: String,
    pub s_rho: Vec<i64>,
    pub two_lambda: TwoLambdaKey,
    pub status: VerdictStatus,
    pub spin_lkt: Option<SpinClaim>,
    pub mult: Option<u32>,
    pub source: String,
}

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("line {line}: {msg}")]
    Schema { line: usize, msg: String },
    #[error("line {line}: duplicate key ({key})")]
    Duplicate { line: usize, key: String },
    #[error("missing `format=1` header")]
    MissingHeader,
}

fn schema(line: usize, msg: impl Into<String>) -> OracleError {
    OracleError::Schema { line, msg: msg.into() }
}

/// Parses and validates the whole verdict file.
pub fn load_oracle(text: &str) -> Result<Vec<OracleRecord>, OracleError> {
    let mut records = Vec::new();
    let mut seen = HashSet::new();
    let mut have_header = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "format=1" {
            have_header = true;
            continue;
        }
        if !have_header {
            return Err(OracleError::MissingHeader);
        }
        let record = parse_record(line, line_no)?;
        let key = format!(
            "group={} s_rho={} two_lambda={}",
            record.group,
            join_ints(&record.s_rho),
            record.two_lambda
        );
        if !seen.insert(key.clone()) {
            return Err(OracleError::Duplicate { line: line_no, key });
        }
        records.push(record);
    }
    if !have_header && !records.is_empty() {
        return Err(OracleError::MissingHeader);
    }
    Ok(records)
}

fn join_ints(v: &[i64]) -> String {
    v.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_record(line: &str, line_no: usize) -> Result<OracleRecord, OracleError> {
    let mut group = None;
    let mut s_rho = None;
    let mut two_lambda = None;
    let mut status = None;
    let mut spin_lkt = None;
    let mut mult = None;
    let mut source = None;
    for field in line.split_whitespace() {
        let (k, v) = field
            .split_once('=')
            .ok_or_else(|| schema(line_no, format!("expected key=value, got {field:?}")))?;
        match k {
            "group" => group = Some(v.to_string()),
            "s_rho" => {
                let parsed: Result<Vec<i64>, _> = v.split(',').map(|t| t.parse()).collect();
                s_rho = Some(parsed.map_err(|_| schema(line_no, format!("bad s_rho {v:?}")))?);
            }
            "two_lambda" => {
                two_lambda = Some(TwoLambdaKey::parse(v).map_err(|e| schema(line_no, e))?);
            }
            "status" => {
                status = Some(match v {
                    "UNITARY_WITH_HD" => VerdictStatus::UnitaryWithHd,
                    "NON_UNITARY" => VerdictStatus::NonUnitary,
                    _ => return Err(schema(line_no, format!("bad status {v:?}"))),
                });
            }
            "spin_lkt" => {
                spin_lkt = Some(SpinClaim::parse(v).map_err(|e| schema(line_no, e))?);
            }
            "mult" => {
                mult = Some(
                    v.parse::<u32>()
                        .map_err(|_| schema(line_no, format!("bad mult {v:?}")))?,
                );
            }
            "source" => source = Some(v.to_string()),
            _ => return Err(schema(line_no, format!("unknown field {k:?}"))),
        }
    }
    let group = group.ok_or_else(|| schema(line_no, "missing group"))?;
    let s_rho = s_rho.ok_or_else(|| schema(line_no, "missing s_rho"))?;
    let two_lambda = two_lambda.ok_or_else(|| schema(line_no, "missing two_lambda"))?;
    let status = status.ok_or_else(|| schema(line_no, "missing status"))?;
    let source = source.ok_or_else(|| schema(line_no, "missing source"))?;
    if source.is_empty() {
        return Err(schema(line_no, "empty source"));
    }
    if s_rho.len() != two_lambda.0.len() {
        return Err(schema(line_no, "s_rho and two_lambda lengths differ"));
    }
    if status == VerdictStatus::UnitaryWithHd && (spin_lkt.is_none() || mult.is_none()) {
        return Err(schema(line_no, "member record needs spin_lkt and mult"));
    }
    Ok(OracleRecord { group, s_rho, two_lambda, status, spin_lkt, mult, source })
}

/// Parses the shipped rank-4 involution index table.
pub fn parse_appendix(text: &str) -> Result<Vec<(u32, [i64; 4])>, OracleError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Result<Vec<i64>, _> = line.split_whitespace().map(|t| t.parse()).collect();
        let nums = nums.map_err(|_| schema(i + 1, format!("bad appendix row {line:?}")))?;
        if nums.len() != 5 {
            return Err(schema(i + 1, "appendix row needs 5 integers"));
        }
        out.push((nums[0] as u32, [nums[1], nums[2], nums[3], nums[4]]));
    }
    Ok(out)
}
