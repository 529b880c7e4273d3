//! Full Weyl group enumeration (breadth-first by length), involutions with
//! their fixed fundamental-weight sets, and reconciliation with an indexed
//! table of involutions keyed by `s(rho)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::root::{RootSystem, Weight, WeylElement};
use crate::{Error, Result};

/// Default enumeration budget. Everything the tables need is at most
/// |W(F4)| = 1152; the default still allows the mid-rank classical groups.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// An involution `s` of the Weyl group. `fixed_set` is `I(s) = {i :
/// s(w_i) = w_i}`; since `rho` is regular, `s_rho` determines `s`.
#[derive(Clone, Debug)]
pub struct Involution {
    pub element: WeylElement,
    pub s_rho: Weight,
    pub fixed_set: Vec<usize>,
    pub appendix_index: Option<u32>,
}

impl Involution {
    pub fn new(rs: &RootSystem, element: WeylElement) -> Involution {
        debug_assert!(element.is_involution());
        let s_rho = element.act(&rs.rho);
        let fixed_set = fixed_fundamental_weights(rs, &element);
        Involution { element, s_rho, fixed_set, appendix_index: None }
    }

    /// Complement of `I(s)`: the simple indices generating the Levi the
    /// involution lives in.
    pub fn levi_indices(&self, rank: usize) -> Vec<usize> {
        (0..rank).filter(|i| !self.fixed_set.contains(i)).collect()
    }
}

/// Indices `i` with `s(w_i) = w_i`, read off the action matrix columns.
pub fn fixed_fundamental_weights(rs: &RootSystem, w: &WeylElement) -> Vec<usize> {
    let n = rs.rank;
    let a = w.action();
    (0..n)
        .filter(|&i| (0..n).all(|k| a[k * n + i] == if k == i { 1 } else { 0 }))
        .collect()
}

/// Enumerate the whole Weyl group, breadth-first by length with lexicographic
/// action-matrix order inside each length level.
pub fn enumerate_weyl(rs: &RootSystem) -> Result<Vec<WeylElement>> {
    enumerate_weyl_with_budget(rs, DEFAULT_BUDGET)
}

pub fn enumerate_weyl_with_budget(rs: &RootSystem, budget: usize) -> Result<Vec<WeylElement>> {
    let mut seen: BTreeSet<WeylElement> = BTreeSet::new();
    let e = WeylElement::identity(rs.rank);
    seen.insert(e.clone());
    let mut out = Vec::new();
    let mut level = alloc::vec![e];
    while !level.is_empty() {
        level.sort();
        out.extend(level.iter().cloned());
        if out.len() > budget {
            return Err(Error::GroupTooLarge { order_bound: budget });
        }
        let mut next = Vec::new();
        for w in &level {
            for j in 0..rs.rank {
                let img = w.compose(&rs.simple_reflection(j));
                if seen.insert(img.clone()) {
                    next.push(img);
                }
            }
        }
        level = next;
    }
    Ok(out)
}

/// All involutions (including the identity), in the canonical enumeration
/// order.
pub fn involutions(rs: &RootSystem) -> Result<Vec<Involution>> {
    Ok(enumerate_weyl(rs)?
        .into_iter()
        .filter(|w| w.is_involution())
        .map(|w| Involution::new(rs, w))
        .collect())
}

/// Find the involution whose `s_rho` matches the given integral weight.
pub fn involution_by_s_rho<'a>(invs: &'a [Involution], s_rho: &Weight) -> Option<&'a Involution> {
    invs.iter().find(|inv| &inv.s_rho == s_rho)
}

/// Resolve an involution against a shipped `(index, s_rho)` table; the match
/// must be unique and exact, otherwise the table and the live conventions
/// have drifted apart.
pub fn appendix_lookup(table: &[(u32, [i64; 4])], inv: &Involution) -> Result<u32> {
    if inv.s_rho.rank() != 4 {
        return Err(Error::DataCorruption(format!(
            "appendix table is rank 4, involution has rank {}",
            inv.s_rho.rank()
        )));
    }
    let coords: Vec<i64> = inv
        .s_rho
        .0
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect();
    for (idx, row) in table {
        if row[..] == coords[..] {
            return Ok(*idx);
        }
    }
    Err(Error::DataCorruption(format!(
        "s_rho {:?} not found in the appendix table",
        inv.s_rho
    )))
}

/// Attach appendix indices to a list of involutions in place.
pub fn attach_appendix_indices(table: &[(u32, [i64; 4])], invs: &mut [Involution]) -> Result<()> {
    for inv in invs.iter_mut() {
        inv.appendix_index = Some(appendix_lookup(table, inv)?);
    }
    Ok(())
}
