//! The special families: tempered, minimal, model, and the spherical
//! candidate enumeration with its conjectured closed-form lists.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::root::{Family, RootSystem, Weight};
use crate::sieve::{Verdict, VerdictStatus};
use crate::spin::pencil_min_sq;
use crate::{int, rat, Error, Rat, Result};

/// A spherical candidate `J(l, l)`, recorded through `2l`.
#[derive(Clone, Debug)]
pub struct SphericalCandidate {
    pub two_lambda: Weight,
    pub norm_sq: Rat,
    pub in_root_lattice: bool,
    pub verdict: Verdict,
}

/// All `2l` with integer coordinates `>= 1` such that `|2l|^2 <= P_0^2`,
/// `2l` lies in the root lattice, and `w0 l = -l`. Deterministic ascending
/// order.
///
/// The box comes from the Gram matrix: all its entries are positive for a
/// simple type, so the form is monotone in each coordinate over the
/// positive orthant and a partial assignment can be pruned as soon as its
/// minimal completion (remaining coordinates at 1) exceeds the bound.
pub fn spherical_candidates(rs: &RootSystem) -> Result<Vec<SphericalCandidate>> {
    let n = rs.rank;
    let bound = pencil_min_sq(rs, &Weight::zero(n))?;
    for g in rs.gram.iter() {
        assert!(g.is_positive(), "simple-type Gram matrices are positive");
    }
    let mut coords = vec![1i64; n];
    let mut out = Vec::new();
    search(rs, &bound, &mut coords, 0, &mut out);
    Ok(out)
}

fn form_at(rs: &RootSystem, coords: &[i64]) -> Rat {
    let n = rs.rank;
    let mut acc = Rat::zero();
    for i in 0..n {
        for j in 0..n {
            acc += int(coords[i]) * rs.gram[i * n + j] * int(coords[j]);
        }
    }
    acc
}

fn search(
    rs: &RootSystem,
    bound: &Rat,
    coords: &mut Vec<i64>,
    pos: usize,
    out: &mut Vec<SphericalCandidate>,
) {
    if pos == rs.rank {
        let two_lambda = Weight::from_ints(coords);
        let norm_sq = rs.norm_sq(&two_lambda);
        if norm_sq > *bound {
            return;
        }
        if !rs.in_root_lattice(&two_lambda) {
            return;
        }
        // w0 l = -l, checked on 2l.
        if rs.w0.act(&two_lambda) != -&two_lambda {
            return;
        }
        out.push(SphericalCandidate {
            two_lambda,
            norm_sq,
            in_root_lattice: true,
            verdict: Verdict { status: VerdictStatus::Unknown, source: alloc::string::String::new() },
        });
        return;
    }
    let mut v = 1i64;
    loop {
        coords[pos] = v;
        for c in coords[pos + 1..].iter_mut() {
            *c = 1;
        }
        // Minimal completion of this prefix; monotone in v, so the first
        // overflow ends the loop.
        if form_at(rs, coords) > *bound {
            coords[pos] = 1;
            return;
        }
        search(rs, bound, coords, pos + 1, out);
        v += 1;
    }
}

/// Zhelobenko parameter `l` (with `l_L = l_R = l`) of the minimal
/// representation, per type.
pub fn minimal_rep_lambda(rs: &RootSystem) -> Result<Weight> {
    let n = rs.rank;
    let fam = Family::from_char(rs.label.chars().next().unwrap_or('?'))
        .ok_or_else(|| Error::BadType(rs.label.clone()))?;
    let mut shift = Weight::zero(n);
    match (fam, n) {
        (Family::A, _) if n % 2 == 1 => {
            // A_{2m+1}: rho - w_{m+1} (1-based)
            shift.0[n / 2] = int(1);
        }
        (Family::A, _) => {
            // A_{2m}: rho - (w_m + w_{m+1})/2
            if n < 2 {
                return Err(Error::BadType(rs.label.clone()));
            }
            shift.0[n / 2 - 1] = rat(1, 2);
            shift.0[n / 2] = rat(1, 2);
        }
        (Family::B, _) if n >= 3 => {
            shift.0[n - 3] = rat(1, 2);
            shift.0[n - 2] = rat(1, 2);
        }
        (Family::C, _) => {
            shift.0[n - 1] = rat(1, 2);
        }
        (Family::D, _) => {
            shift.0[n - 3] = int(1);
        }
        (Family::E, _) => {
            shift.0[3] = int(1);
        }
        (Family::F, 4) => {
            shift.0[2] = rat(1, 2);
            shift.0[3] = rat(1, 2);
        }
        (Family::G, 2) => {
            shift.0[1] = rat(2, 3);
        }
        _ => {
            return Err(Error::BadType(format!(
                "no minimal-representation parameter for {}",
                rs.label
            )))
        }
    }
    Ok(&rs.rho - &shift)
}

/// Whether the minimal representation has nonzero Dirac cohomology:
/// `2l` must be a valid spherical infinitesimal character (dominant
/// regular integral) attaining the pencil minimum `P_0^2` exactly.
pub fn minimal_has_dirac(rs: &RootSystem) -> Result<bool> {
    let l = minimal_rep_lambda(rs)?;
    let two_l = l.double();
    if !(two_l.is_regular_dominant() && two_l.is_integral()) {
        return Ok(false);
    }
    Ok(pencil_min_sq(rs, &Weight::zero(rs.rank))? == rs.norm_sq(&two_l))
}

/// Whether `rho` lies in the root lattice (the model representation's
/// spherical criterion).
pub fn rho_in_root_lattice(rs: &RootSystem) -> bool {
    rs.in_root_lattice(&rs.rho)
}

fn p_ab(a: i64, b: i64) -> usize {
    (b - a - 1).max(0) as usize
}

/// Conjectured non-trivial spherical members with Dirac cohomology for the
/// classical types, as closed-form `2l` lists. Empty for `A_{2n-1}` and
/// `C_{2n-1}`.
pub fn conjectured_spherical(family: char, rank: usize) -> Result<Vec<Weight>> {
    let fam = Family::from_char(family).ok_or_else(|| Error::BadType(format!("{family}{rank}")))?;
    let n = rank as i64;
    let mut out: Vec<Weight> = Vec::new();
    match fam {
        Family::A => {
            if rank % 2 == 0 {
                // A_{2m}: [2^p, 1^{2m-2p}, 2^p] for 0 <= p <= m-1.
                let m = rank / 2;
                for p in 0..m {
                    let mut v = vec![2i64; rank];
                    for c in v.iter_mut().take(rank - p).skip(p) {
                        *c = 1;
                    }
                    out.push(Weight::from_ints(&v));
                }
            }
        }
        Family::B => {
            for a in 1..=n {
                let b = n - a;
                if b < a {
                    break;
                }
                let p = p_ab(a, b);
                let mut v = vec![1i64; rank];
                for c in v.iter_mut().take(p) {
                    *c = 2;
                }
                v[rank - 1] = 2;
                out.push(Weight::from_ints(&v));
            }
        }
        Family::C => {
            if rank % 2 == 0 {
                let rs = RootSystem::build('C', rank)?;
                out.push(minimal_rep_lambda(&rs)?.double());
            }
        }
        Family::D => {
            for a in (2..=n).filter(|a| a % 2 == 0) {
                let b = n - a;
                if b < a {
                    break;
                }
                let p = p_ab(a, b);
                let mut v = vec![1i64; rank];
                for c in v.iter_mut().take(p) {
                    *c = 2;
                }
                out.push(Weight::from_ints(&v));
            }
        }
        _ => {
            return Err(Error::BadType(format!(
                "conjectured list covers classical types only, got {family}{rank}"
            )))
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root::RootSystem;
    use crate::spin::spin_norm_sq;

    fn two_lambdas(rs: &RootSystem) -> Vec<Weight> {
        spherical_candidates(rs)
            .unwrap()
            .into_iter()
            .map(|c| c.two_lambda)
            .collect()
    }

    #[test]
    fn g2_spherical_candidates() {
        let g2 = RootSystem::build('G', 2).unwrap();
        assert_eq!(
            two_lambdas(&g2),
            vec![Weight::from_ints(&[1, 1]), Weight::from_ints(&[2, 1])]
        );
    }

    #[test]
    fn f4_spherical_candidates() {
        let f4 = RootSystem::build('F', 4).unwrap();
        let got = two_lambdas(&f4);
        assert_eq!(got.len(), 8);
        for v in [
            [2, 2, 1, 1],
            [1, 2, 1, 1],
            [2, 1, 1, 1],
            [2, 1, 1, 2],
            [1, 1, 2, 1],
            [1, 1, 1, 2],
            [1, 1, 1, 1],
            [3, 1, 1, 1],
        ] {
            assert!(got.contains(&Weight::from_ints(&v)), "{v:?}");
        }
    }

    #[test]
    fn small_rank_spherical_counts() {
        for (label, count) in [("A6", 6usize), ("B6", 28), ("D6", 18), ("E6", 11)] {
            let rs = RootSystem::parse(label).unwrap();
            assert_eq!(two_lambdas(&rs).len(), count, "{label}");
        }
    }

    #[test]
    fn a6_candidates_are_flip_symmetric_and_tight() {
        // The A6 set is pinned coordinatewise: every candidate is fixed by
        // the diagram flip, and the published unitary members all appear.
        let a6 = RootSystem::parse("A6").unwrap();
        let got = two_lambdas(&a6);
        assert_eq!(
            got,
            vec![
                Weight::from_ints(&[1, 1, 1, 1, 1, 1]),
                Weight::from_ints(&[1, 1, 2, 2, 1, 1]),
                Weight::from_ints(&[1, 2, 1, 1, 2, 1]),
                Weight::from_ints(&[2, 1, 1, 1, 1, 2]),
                Weight::from_ints(&[2, 2, 1, 1, 2, 2]),
                Weight::from_ints(&[3, 1, 1, 1, 1, 3]),
            ]
        );
    }

    #[test]
    fn minimal_lambda_table() {
        let f4 = RootSystem::build('F', 4).unwrap();
        assert_eq!(
            minimal_rep_lambda(&f4).unwrap(),
            Weight(vec![int(1), int(1), rat(1, 2), rat(1, 2)])
        );
        let g2 = RootSystem::build('G', 2).unwrap();
        assert_eq!(
            minimal_rep_lambda(&g2).unwrap(),
            Weight(vec![int(1), rat(1, 3)])
        );
        let c4 = RootSystem::build('C', 4).unwrap();
        assert_eq!(
            minimal_rep_lambda(&c4).unwrap(),
            Weight(vec![int(1), int(1), int(1), rat(1, 2)])
        );
        let b2 = RootSystem::build('B', 2);
        assert!(b2.is_ok());
        assert!(minimal_rep_lambda(&b2.unwrap()).is_err());
    }

    #[test]
    fn minimal_dirac_list() {
        for (label, expect) in [
            ("A2", true),
            ("A4", true),
            ("A6", true),
            ("B3", true),
            ("B4", true),
            ("B5", true),
            ("B6", true),
            ("C2", true),
            ("C3", false),
            ("C4", true),
            ("C5", false),
            ("C6", true),
            ("F4", true),
            ("G2", false),
            ("A3", false),
            ("A5", false),
            ("D4", false),
            ("D5", false),
            ("E6", false),
        ] {
            let rs = RootSystem::parse(label).unwrap();
            assert_eq!(minimal_has_dirac(&rs).unwrap(), expect, "{label}");
        }
    }

    #[test]
    fn rho_root_lattice_list() {
        for (label, expect) in [
            ("A2", true),
            ("A4", true),
            ("A6", true),
            ("A1", false),
            ("A3", false),
            ("B3", false),
            ("C3", true),
            ("C4", true),
            ("C5", false),
            ("C7", true),
            ("C8", true),
            ("D4", true),
            ("D5", true),
            ("D6", false),
            ("D8", true),
            ("G2", true),
            ("F4", true),
            ("E6", true),
            ("E7", false),
            ("E8", true),
        ] {
            let rs = RootSystem::parse(label).unwrap();
            assert_eq!(rho_in_root_lattice(&rs), expect, "{label}");
        }
    }

    #[test]
    fn conjecture_lists() {
        assert_eq!(
            conjectured_spherical('A', 4).unwrap(),
            vec![Weight::from_ints(&[1, 1, 1, 1]), Weight::from_ints(&[2, 1, 1, 2])]
        );
        assert_eq!(
            conjectured_spherical('B', 6).unwrap(),
            vec![
                Weight::from_ints(&[1, 1, 1, 1, 1, 2]),
                Weight::from_ints(&[2, 1, 1, 1, 1, 2]),
                Weight::from_ints(&[2, 2, 2, 1, 1, 2]),
            ]
        );
        assert_eq!(
            conjectured_spherical('D', 6).unwrap(),
            vec![Weight::from_ints(&[2, 1, 1, 1, 1, 1])]
        );
        assert!(conjectured_spherical('A', 5).unwrap().is_empty());
        assert!(conjectured_spherical('C', 5).unwrap().is_empty());
        assert_eq!(conjectured_spherical('C', 4).unwrap().len(), 1);
        assert!(conjectured_spherical('G', 2).is_err());
    }

    #[test]
    fn conjecture_contained_in_candidates() {
        for (fam, rank) in [('A', 4), ('A', 6), ('B', 4), ('B', 6), ('C', 4), ('C', 6), ('D', 6)] {
            let rs = RootSystem::build(fam, rank).unwrap();
            let candidates = two_lambdas(&rs);
            for w in conjectured_spherical(fam, rank).unwrap() {
                assert!(candidates.contains(&w), "{fam}{rank} {w:?}");
            }
        }
    }

    #[test]
    fn tempered_spin_norm_equality() {
        // J(l, -l) has spin norm exactly |2l| on its lowest K-type 2l.
        let g2 = RootSystem::build('G', 2).unwrap();
        for a in 1..4i64 {
            for b in 1..4i64 {
                let two_l = Weight::from_ints(&[a, b]);
                let v = spin_norm_sq(&g2, &two_l).unwrap();
                assert_eq!(v.norm_sq, g2.norm_sq(&two_l));
            }
        }
    }
}
