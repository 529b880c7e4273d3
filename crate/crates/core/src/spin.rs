//! Spin norm of a K-type, the u-small criterion, and the minimal spin norm
//! along a Vogan pencil. These three quantities are what the Dirac
//! inequality sieve consumes.

use alloc::format;

use num_traits::Signed;

use crate::root::{RootSystem, Weight};
use crate::{Error, Rat, Result};

/// Squared spin norm together with its dominant witness `{d - rho} + rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinValue {
    pub norm_sq: Rat,
    pub witness: Weight,
}

fn check_dominant_integral(delta: &Weight) -> Result<()> {
    if !delta.is_dominant() || !delta.is_integral() {
        return Err(Error::BadWeight(format!(
            "expected a dominant integral weight, got {delta:?}"
        )));
    }
    Ok(())
}

/// `|d|_spin^2 = |{d - rho} + rho|^2` for a dominant integral `d`.
pub fn spin_norm_sq(rs: &RootSystem, delta: &Weight) -> Result<SpinValue> {
    check_dominant_integral(delta)?;
    let (conj, _) = rs.dominant(&(delta - &rs.rho));
    let witness = &conj + &rs.rho;
    let norm_sq = rs.norm_sq(&witness);
    Ok(SpinValue { norm_sq, witness })
}

/// u-small test: `<d - 2 rho, w_i> <= 0` for every fundamental weight.
pub fn is_u_small(rs: &RootSystem, delta: &Weight) -> bool {
    let shifted = delta - &rs.rho.double();
    rs.pair_with_fundamentals(&shifted)
        .iter()
        .all(|p| !p.is_positive())
}

/// Minimal squared spin norm along the pencil `{d + n beta : n >= 0}`.
///
/// When `d` is u-small the u-small members of the pencil form an interval
/// starting at `n = 0` (beta is dominant, so each pairing `<d + n beta -
/// 2 rho, w_i>` is nondecreasing in `n`); the minimum is taken over that
/// whole interval. Otherwise the pencil minimum is attained at `d` itself.
pub fn pencil_min_sq(rs: &RootSystem, delta: &Weight) -> Result<Rat> {
    check_dominant_integral(delta)?;
    if !is_u_small(rs, delta) {
        return Ok(spin_norm_sq(rs, delta)?.norm_sq);
    }
    let mut best: Option<Rat> = None;
    let mut current = delta.clone();
    let mut steps = 0usize;
    while is_u_small(rs, &current) {
        let v = spin_norm_sq(rs, &current)?.norm_sq;
        best = Some(match best {
            None => v,
            Some(b) if v < b => v,
            Some(b) => b,
        });
        current = &current + &rs.beta;
        steps += 1;
        assert!(steps < 10_000, "pencil iteration failed to leave the u-small region");
    }
    Ok(best.expect("n = 0 is always u-small here"))
}
