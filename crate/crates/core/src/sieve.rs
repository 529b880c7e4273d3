//! The candidate sieve. Every Hermitian candidate is a `J(l, -s l)` with
//! `s` an involution and `2l` dominant integral regular. For a fixed `s`
//! the family is cut down by two exact discriminants,
//!
//!   Delta1 = |2l|^2 - |mu|_spin^2      (mu = {l + s l})
//!   Delta2 = |2l|^2 - P_mu^2,
//!
//! either being positive certifies non-unitarity. When `I(s)` is empty the
//! surviving set is finite and found by exact box enumeration; when `I(s)`
//! is nonempty the family's survivors are strings lifted from the scattered
//! survivors of the Levi generated by the complementary simple roots.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::root::{Levi, RootSystem, Weight, WeylElement};
use crate::spin::{pencil_min_sq, spin_norm_sq};
use crate::weyl::Involution;
use crate::{int, mat, rat, Error, Rat, Result};

/// Outcome attached to a candidate or string. `Unknown` means "no oracle
/// record"; the other two are transcribed verdicts, never computed here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    UnitaryWithHd,
    NonUnitary,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub source: String,
}

impl Verdict {
    pub fn unknown() -> Verdict {
        Verdict { status: VerdictStatus::Unknown, source: String::new() }
    }
}

/// One involution family: the root system, the involution, and the
/// quadratic form `M` with `f(l) = |l - s l|^2 = l^T M l`.
#[derive(Clone, Debug)]
pub struct FamilyContext<'a> {
    pub rs: &'a RootSystem,
    pub s: Involution,
    pub quad: Vec<Rat>,
}

/// The two discriminants together with their ingredients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discriminants {
    pub f: Rat,
    pub g: Rat,
    pub delta1: Rat,
    pub delta2: Rat,
    pub mu: Weight,
}

/// One surviving candidate `J(l, -s l)` with `Delta2 <= 0`.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub s_rho: Weight,
    pub lambda: Weight,
    pub mu: Weight,
    pub delta1: Rat,
    pub delta2: Rat,
    /// Zhelobenko parameters `(l, -s l)`.
    pub zhelobenko: (Weight, Weight),
    /// `l + s l`.
    pub t_param: Weight,
    /// `l - s l`.
    pub a_param: Weight,
    /// `|2 l|^2`.
    pub inf_char_norm_sq: Rat,
    pub verdict: Verdict,
}

/// An affine weight template: coordinate `i` evaluates to
/// `constant_i + coeff_i * p_i`, where `p_i` is the free parameter attached
/// to coordinate `i` (zero coefficient where there is no parameter).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWeight {
    pub constant: Weight,
    pub coeffs: Vec<Rat>,
}

impl AffineWeight {
    pub fn constant(w: Weight) -> AffineWeight {
        let coeffs = vec![Rat::zero(); w.rank()];
        AffineWeight { constant: w, coeffs }
    }

    /// Substitute values for the free parameters, given per coordinate.
    pub fn eval(&self, params: &BTreeMap<usize, Rat>) -> Weight {
        let mut out = self.constant.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let p = params.get(&i).copied().unwrap_or_else(Rat::zero);
                out.0[i] += *c * p;
            }
        }
        out
    }
}

/// A lifted `(s, I)`-string: fixed Levi coordinates, free half-integer
/// parameters on `I(s)`, and affine parameter templates.
#[derive(Clone, Debug)]
pub struct StringFamily {
    pub s_rho: Weight,
    /// `I(s)` — the coordinates that vary along the string.
    pub free_indices: Vec<usize>,
    /// Complement of `I(s)` — the Levi simple indices.
    pub levi_indices: Vec<usize>,
    /// Fixed value per coordinate, `None` on the free coordinates.
    pub base_lambda: Vec<Option<Rat>>,
    /// `l + s l` (the G-level T-parameter).
    pub t_param: AffineWeight,
    /// `l + s l - rho(u_s)` (T-parameter of the inducing module).
    pub inducing_t_param: AffineWeight,
    /// `l - s l`, constant along the string.
    pub a_param: Weight,
    /// Claimed spin-lowest K-type (oracle data, joined later).
    pub spin_lkt_claim: Option<AffineWeight>,
    pub verdict: Verdict,
}

impl StringFamily {
    /// The concrete `l` for an assignment of the free parameters.
    pub fn lambda_at(&self, params: &BTreeMap<usize, Rat>) -> Weight {
        Weight(
            self.base_lambda
                .iter()
                .enumerate()
                .map(|(i, v)| match v {
                    Some(x) => *x,
                    None => params
                        .get(&i)
                        .copied()
                        .expect("free parameter value missing"),
                })
                .collect(),
        )
    }
}

impl<'a> FamilyContext<'a> {
    pub fn new(rs: &'a RootSystem, s: Involution) -> FamilyContext<'a> {
        let n = rs.rank;
        // M = (I - A)^T G (I - A) where A is the action matrix of s.
        let mut ima = vec![Rat::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let a = s.element.action()[i * n + j];
                ima[i * n + j] = int(if i == j { 1 } else { 0 } - a);
            }
        }
        let imat = mat::transpose(&ima, n);
        let quad = mat::mul(&imat, &mat::mul(&rs.gram, &ima, n), n);
        FamilyContext { rs, s, quad }
    }

    /// Symmetric matrix of the homogeneous quadratic form `f`.
    pub fn quad_form(&self) -> &[Rat] {
        &self.quad
    }

    /// `f(l) = |l - s l|^2` evaluated through the quadratic form.
    pub fn f_of(&self, l: &Weight) -> Rat {
        let n = self.rs.rank;
        let mut acc = Rat::zero();
        for i in 0..n {
            if l.0[i].is_zero() {
                continue;
            }
            for j in 0..n {
                acc += l.0[i] * self.quad[i * n + j] * l.0[j];
            }
        }
        acc
    }

    /// Membership in `Lambda(s)`: every `2 l_i` a positive integer and
    /// `l + s l` integral.
    pub fn lambda_in_family(&self, l: &Weight) -> bool {
        if l.rank() != self.rs.rank {
            return false;
        }
        let half_integral_positive = l.0.iter().all(|c| {
            let doubled = *c * int(2);
            doubled.is_integer() && doubled.is_positive()
        });
        if !half_integral_positive {
            return false;
        }
        (l + &self.s.element.act(l)).is_integral()
    }

    /// `f`, `g`, `Delta1`, `Delta2` at `l in Lambda(s)`.
    pub fn discriminants(&self, l: &Weight) -> Result<Discriminants> {
        let (f, g, delta1, mu) = self.delta1_parts(l)?;
        let delta2 = self.rs.norm_sq(&l.double()) - pencil_min_sq(self.rs, &mu)?;
        Ok(Discriminants { f, g, delta1, delta2, mu })
    }

    /// Everything except the pencil minimum: `(f, g, Delta1, mu)`.
    fn delta1_parts(&self, l: &Weight) -> Result<(Rat, Rat, Rat, Weight)> {
        if !self.lambda_in_family(l) {
            return Err(Error::BadWeight(format!("{l:?} is not in Lambda(s)")));
        }
        let rs = self.rs;
        let sl = self.s.element.act(l);
        let f = rs.norm_sq(&(l - &sl));
        debug_assert_eq!(f, self.f_of(l));
        let (mu, _) = rs.dominant(&(l + &sl));
        let shifted = &mu - &rs.rho;
        let (conj, _) = rs.dominant(&shifted);
        let g = rs.inner(&(&conj - &shifted), &rs.rho)? * int(2);
        let delta1 = f - g;
        debug_assert_eq!(
            delta1,
            rs.norm_sq(&l.double()) - spin_norm_sq(rs, &mu)?.norm_sq
        );
        Ok((f, g, delta1, mu))
    }

    fn candidate(&self, l: Weight, d: Discriminants) -> Candidate {
        let sl = self.s.element.act(&l);
        Candidate {
            s_rho: self.s.s_rho.clone(),
            mu: d.mu,
            delta1: d.delta1,
            delta2: d.delta2,
            zhelobenko: (l.clone(), -&sl),
            t_param: &l + &sl,
            a_param: &l - &sl,
            inf_char_norm_sq: self.rs.norm_sq(&l.double()),
            verdict: Verdict::unknown(),
            lambda: l,
        }
    }

    /// All of `{l in Lambda(s) : Delta2(l) <= 0}` for an involution with
    /// empty `I(s)`, by exact box enumeration.
    ///
    /// One deliberate exception: in the spherical family (`s l = -l` for
    /// every `l`, which happens exactly when `s rho = -rho`) the pencil
    /// bound behind `Delta2` only constrains infinite-dimensional
    /// representations, and the lone finite-dimensional unitary member is
    /// the trivial one at `l = rho`. That point is kept whenever
    /// `Delta1 <= 0` there (always: `Delta1(rho) = 0`).
    ///
    /// The box comes from `Delta2 <= 0 => Delta1 <= 0 => f <= g <= |2 rho|^2`
    /// together with `M[i][i] l_i^2 <= f(l)` (the quadratic form has positive
    /// diagonal and nonnegative off-diagonal entries when `I(s)` is empty).
    /// `slack` multiplies the bound and exists only so tests can confirm the
    /// survivor set does not depend on it.
    pub fn enumerate_scattered(&self) -> Result<Vec<Candidate>> {
        self.enumerate_scattered_with_slack(Rat::one())
    }

    pub fn enumerate_scattered_with_slack(&self, slack: Rat) -> Result<Vec<Candidate>> {
        if !self.s.fixed_set.is_empty() {
            return Err(Error::FixedSetContract(format!(
                "enumerate_scattered requires empty I(s); got {:?}",
                self.s.fixed_set
            )));
        }
        let n = self.rs.rank;
        let bound = self.rs.norm_sq(&self.rs.rho.double()) * slack;
        let mut limits = Vec::with_capacity(n);
        for i in 0..n {
            let mii = self.quad[i * n + i];
            assert!(mii.is_positive(), "empty I(s) forces a positive diagonal");
            // l_i = k/2 with M_ii k^2 / 4 <= bound.
            let k_max = mat::floor_sqrt(bound * int(4) / mii).max(1);
            limits.push(k_max);
        }
        let mut out = Vec::new();
        let mut ks = vec![1i64; n];
        'points: loop {
            let l = Weight(ks.iter().map(|&k| rat(k, 2)).collect());
            if self.lambda_in_family(&l) {
                let spherical_trivial =
                    self.s.s_rho == -&self.rs.rho && l == self.rs.rho;
                // Delta2 >= Delta1, so a positive Delta1 rules the point
                // out without touching the pencil.
                let (_, _, delta1, _) = self.delta1_parts(&l)?;
                if !delta1.is_positive() {
                    let d = self.discriminants(&l)?;
                    if !d.delta2.is_positive() || spherical_trivial {
                        out.push(self.candidate(l, d));
                    }
                }
            }
            // odometer increment, ascending order
            for i in (0..n).rev() {
                if ks[i] < limits[i] {
                    ks[i] += 1;
                    continue 'points;
                }
                ks[i] = 1;
            }
            break;
        }
        out.sort_by(|a, b| a.lambda.cmp(&b.lambda));
        Ok(out)
    }
}

/// Good-range test for a weight against the nilradical of the parabolic
/// attached to the Levi indices: `<l, a^v> > 0` for every positive root `a`
/// outside the Levi span.
pub fn good_range_check(rs: &RootSystem, levi_indices: &[usize], l: &Weight) -> bool {
    for root in &rs.positive_roots {
        let c = rs.root_coords(root);
        let inside = c
            .iter()
            .enumerate()
            .all(|(j, cj)| cj.is_zero() || levi_indices.contains(&j));
        if inside {
            continue;
        }
        if !rs.inner(l, root).expect("rank-checked").is_positive() {
            return false;
        }
    }
    true
}

/// Scattered survivors of the Levi attached to an involution with nonempty
/// `I(s)`, in Levi fundamental-weight coordinates. The Levi may be
/// reducible; each simple component is sieved on its own and the survivor
/// sets are combined, which is the sharper (and still exact) test because a
/// product module is unitary with Dirac cohomology exactly when each factor
/// is.
pub fn levi_scattered(rs: &RootSystem, s: &Involution) -> Result<(Levi, Vec<Weight>)> {
    if s.fixed_set.is_empty() {
        return Err(Error::FixedSetContract(
            "levi_scattered requires nonempty I(s)".into(),
        ));
    }
    let levi_indices = s.levi_indices(rs.rank);
    let levi = rs.levi(&levi_indices)?;
    let s_levi = restrict_weyl(&levi, &s.element);

    let comps = levi.subsystem.components.clone();
    let mut per_component: Vec<(Vec<usize>, Vec<Weight>)> = Vec::new();
    for comp in &comps {
        let (survivors, comp_indices) = if comp.len() == levi.subsystem.rank {
            let inv = Involution::new(&levi.subsystem, s_levi.clone());
            let ctx = FamilyContext::new(&levi.subsystem, inv);
            (
                ctx.enumerate_scattered()?
                    .into_iter()
                    .map(|c| c.lambda)
                    .collect::<Vec<_>>(),
                comp.clone(),
            )
        } else {
            let sub = levi.subsystem.levi(comp)?;
            let s_comp = restrict_weyl(&sub, &s_levi);
            let inv = Involution::new(&sub.subsystem, s_comp);
            let ctx = FamilyContext::new(&sub.subsystem, inv);
            (
                ctx.enumerate_scattered()?
                    .into_iter()
                    .map(|c| c.lambda)
                    .collect::<Vec<_>>(),
                comp.clone(),
            )
        };
        per_component.push((comp_indices, survivors));
    }

    // Cartesian product across components, assembled back into Levi
    // coordinates, in deterministic order.
    let mut combos: Vec<Weight> = vec![Weight::zero(levi.subsystem.rank)];
    for (comp_indices, survivors) in &per_component {
        let mut next = Vec::new();
        for base in &combos {
            for srv in survivors {
                let mut w = base.clone();
                for (pos, &j) in comp_indices.iter().enumerate() {
                    w.0[j] = srv.0[pos];
                }
                next.push(w);
            }
        }
        combos = next;
    }
    combos.sort();
    Ok((levi, combos))
}

/// Restrict a Weyl element that lives in the Levi's reflection subgroup to
/// an action matrix on Levi fundamental-weight coordinates.
fn restrict_weyl(levi: &Levi, w: &WeylElement) -> WeylElement {
    let l = levi.indices.len();
    let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(l);
    for a in 0..l {
        let mut e = Weight::zero(l);
        e.0[a] = Rat::one();
        let img = levi.restrict(&w.act(&levi.embed(&e)));
        cols.push(img.0);
    }
    let mut action = vec![0i64; l * l];
    for (a, col) in cols.iter().enumerate() {
        for k in 0..l {
            assert!(col[k].is_integer(), "restricted action must be integral");
            action[k * l + a] = col[k].to_integer();
        }
    }
    WeylElement::from_action(l, action)
}

/// Lift Levi scattered survivors to `(s, I)`-strings. When `I(s)` is the
/// whole index set (s = e) the single string is all of `Lambda(e)` with
/// `A`-parameter zero.
pub fn lift_strings(
    rs: &RootSystem,
    s: &Involution,
    levi: Option<&Levi>,
    survivors: &[Weight],
) -> Result<Vec<StringFamily>> {
    if s.fixed_set.is_empty() {
        return Err(Error::FixedSetContract(
            "lift_strings requires nonempty I(s)".into(),
        ));
    }
    let n = rs.rank;
    let levi_indices = s.levi_indices(n);
    let rho_u = match levi {
        Some(l) => l.rho_u.clone(),
        None => {
            if !levi_indices.is_empty() {
                return Err(Error::BadLevi(
                    "levi data required when I(s) is a proper subset".into(),
                ));
            }
            // Empty Levi: the nilradical is everything, rho(u) = rho.
            rs.rho.clone()
        }
    };

    let mut out = Vec::new();
    let survivor_list: Vec<Option<&Weight>> = if levi_indices.is_empty() {
        vec![None]
    } else {
        survivors.iter().map(Some).collect()
    };
    for srv in survivor_list {
        let mut base_lambda: Vec<Option<Rat>> = vec![None; n];
        if let Some(srv) = srv {
            for (pos, &j) in levi_indices.iter().enumerate() {
                base_lambda[j] = Some(srv.0[pos]);
            }
        }
        // Fixed part of lambda (free coordinates set to zero) determines the
        // constant parts of the templates; each free coordinate i
        // contributes 2 l_i w_i to l + s l and nothing to l - s l.
        let fixed = Weight(
            base_lambda
                .iter()
                .map(|v| v.unwrap_or_else(Rat::zero))
                .collect(),
        );
        let s_fixed = s.element.act(&fixed);
        let t_const = &fixed + &s_fixed;
        let a_param = &fixed - &s_fixed;
        let mut coeffs = vec![Rat::zero(); n];
        for &i in &s.fixed_set {
            coeffs[i] = int(2);
        }
        let t_param = AffineWeight { constant: t_const.clone(), coeffs: coeffs.clone() };
        let inducing_t_param = AffineWeight {
            constant: &t_const - &rho_u,
            coeffs,
        };
        out.push(StringFamily {
            s_rho: s.s_rho.clone(),
            free_indices: s.fixed_set.clone(),
            levi_indices: levi_indices.clone(),
            base_lambda,
            t_param,
            inducing_t_param,
            a_param,
            spin_lkt_claim: None,
            verdict: Verdict::unknown(),
        });
    }
    Ok(out)
}

/// Convenience: full string computation for one involution with nonempty
/// `I(s)`.
pub fn strings_for(rs: &RootSystem, s: &Involution) -> Result<Vec<StringFamily>> {
    if s.levi_indices(rs.rank).is_empty() {
        return lift_strings(rs, s, None, &[]);
    }
    let (levi, survivors) = levi_scattered(rs, s)?;
    lift_strings(rs, s, Some(&levi), &survivors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root::RootSystem;
    use crate::weyl::involutions;

    fn g2_involution(rs: &RootSystem, word: &[usize]) -> Involution {
        Involution::new(rs, rs.from_word(word))
    }

    #[test]
    fn lambda_family_membership() {
        let g2 = RootSystem::build('G', 2).unwrap();
        let s = g2_involution(&g2, &[0, 1, 0]);
        let ctx = FamilyContext::new(&g2, s);
        assert!(ctx.lambda_in_family(&Weight(vec![rat(1, 2), rat(1, 2)])));
        assert!(ctx.lambda_in_family(&g2.rho));
        assert!(!ctx.lambda_in_family(&Weight(vec![rat(1, 3), rat(1, 2)])));
        assert!(!ctx.lambda_in_family(&Weight(vec![rat(-1, 2), rat(1, 2)])));
    }

    #[test]
    fn quad_form_identity_involution_is_zero() {
        let g2 = RootSystem::build('G', 2).unwrap();
        let e = g2_involution(&g2, &[]);
        let ctx = FamilyContext::new(&g2, e);
        assert!(ctx.quad_form().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn quad_form_g2_s1s2s1() {
        // f = 6a^2 + 12ab + 6b^2 for s = s1 s2 s1.
        let g2 = RootSystem::build('G', 2).unwrap();
        let s = g2_involution(&g2, &[0, 1, 0]);
        let ctx = FamilyContext::new(&g2, s);
        assert_eq!(ctx.quad_form(), &[int(6), int(6), int(6), int(6)]);
    }

    #[test]
    fn g2_scattered_survivors_match_hand_computation() {
        let g2 = RootSystem::build('G', 2).unwrap();

        let s = g2_involution(&g2, &[0, 1, 0]);
        let ctx = FamilyContext::new(&g2, s);
        let got: Vec<Weight> = ctx
            .enumerate_scattered()
            .unwrap()
            .into_iter()
            .map(|c| c.lambda)
            .collect();
        assert_eq!(got, vec![Weight(vec![rat(1, 2), rat(1, 2)])]);
        // The borderline neighbour [3/2,1/2] already violates the Dirac
        // inequality at its lowest K-type, so the sieve drops it; its
        // transcribed verdict still reaches the reports through the
        // oracle layer.
        let borderline = Weight(vec![rat(3, 2), rat(1, 2)]);
        assert!(ctx.lambda_in_family(&borderline));
        let d = ctx.discriminants(&borderline).unwrap();
        assert_eq!(d.delta1, int(16));
        assert_eq!(d.delta2, int(16));

        let s = g2_involution(&g2, &[1, 0, 1]);
        let ctx = FamilyContext::new(&g2, s);
        let got: Vec<Weight> = ctx
            .enumerate_scattered()
            .unwrap()
            .into_iter()
            .map(|c| c.lambda)
            .collect();
        assert_eq!(got, vec![Weight(vec![rat(1, 2), rat(1, 2)])]);

        for word in [&[0usize, 1, 0, 1, 0][..], &[1usize, 0, 1, 0, 1][..]] {
            let s = g2_involution(&g2, word);
            let ctx = FamilyContext::new(&g2, s);
            assert!(ctx.enumerate_scattered().unwrap().is_empty(), "{word:?}");
        }
    }

    #[test]
    fn scattered_rejects_nonempty_fixed_set() {
        let g2 = RootSystem::build('G', 2).unwrap();
        let s = g2_involution(&g2, &[0]);
        let ctx = FamilyContext::new(&g2, s);
        assert!(matches!(
            ctx.enumerate_scattered(),
            Err(Error::FixedSetContract(_))
        ));
    }

    #[test]
    fn g2_discriminant_polynomials() {
        let g2 = RootSystem::build('G', 2).unwrap();
        // s = s2 s1 s2 s1 s2, a >= 4 integral: Delta1 = 6a^2 + 24ab + 24b^2 - 6.
        let s = g2_involution(&g2, &[1, 0, 1, 0, 1]);
        let ctx = FamilyContext::new(&g2, s);
        for a in 4i64..7 {
            for b2 in 1i64..6 {
                let l = Weight(vec![int(a), rat(b2, 2)]);
                let d = ctx.discriminants(&l).unwrap();
                let (af, bf) = (int(a), rat(b2, 2));
                let expect = int(6) * af * af + int(24) * af * bf + int(24) * bf * bf - int(6);
                assert_eq!(d.delta1, expect, "a={a} b={b2}/2");
            }
        }
        // a = 1: Delta2 = 24b^2 + 24b - 6.
        for b2 in 1i64..8 {
            let l = Weight(vec![int(1), rat(b2, 2)]);
            let d = ctx.discriminants(&l).unwrap();
            let bf = rat(b2, 2);
            assert_eq!(d.delta2, int(24) * bf * bf + int(24) * bf - int(6));
        }
    }

    #[test]
    fn good_range_examples() {
        let f4 = RootSystem::build('F', 4).unwrap();
        let l = Weight(vec![rat(1, 2); 4]);
        assert!(good_range_check(&f4, &[0, 1, 2], &l));
        assert!(!good_range_check(&f4, &[0, 1, 2], &Weight::zero(4)));
        // regular dominant half-weights pass for every Levi
        for j in 0..4usize {
            let mut idx: Vec<usize> = (0..4).collect();
            idx.retain(|&k| k != j);
            assert!(good_range_check(&f4, &idx, &l));
        }
    }

    #[test]
    fn f4_example_string_lift() {
        // Involution #15 = s2 s1 s3 s2: the Levi C3 survivor [1/2,1/2,1/2]
        // lifts to the string [1/2,1/2,1/2,d] with T-parameter
        // [2,-2,2,2d+1] and A-parameter [-1,3,-1,-1].
        let f4 = RootSystem::build('F', 4).unwrap();
        let s = Involution::new(&f4, f4.from_word(&[1, 0, 2, 1]));
        assert_eq!(s.fixed_set, vec![3]);
        let (levi, survivors) = levi_scattered(&f4, &s).unwrap();
        assert_eq!(levi.subsystem.label, "C3");
        assert!(survivors.contains(&Weight(vec![rat(1, 2); 3])));
        let strings = lift_strings(&f4, &s, Some(&levi), &survivors).unwrap();
        let target = strings
            .iter()
            .find(|st| {
                st.base_lambda[..3]
                    .iter()
                    .all(|v| *v == Some(rat(1, 2)))
            })
            .expect("string for the [1/2,1/2,1/2] survivor");
        assert_eq!(target.a_param, Weight::from_ints(&[-1, 3, -1, -1]));
        assert_eq!(target.t_param.constant, Weight::from_ints(&[2, -2, 2, 1]));
        assert_eq!(target.t_param.coeffs[3], int(2));
        // evaluate at d = 3/2: [2,-2,2,4]
        let mut params = BTreeMap::new();
        params.insert(3usize, rat(3, 2));
        assert_eq!(
            target.t_param.eval(&params),
            Weight::from_ints(&[2, -2, 2, 4])
        );
        // rho(u) = [0,0,0,4] for this Levi, so the T-parameter of the
        // inducing module differs only in the last coordinate.
        assert_eq!(levi.rho_u, Weight::from_ints(&[0, 0, 0, 4]));
        assert_eq!(
            target.inducing_t_param.constant,
            Weight::from_ints(&[2, -2, 2, -3])
        );
    }

    #[test]
    fn identity_string_is_tempered() {
        let g2 = RootSystem::build('G', 2).unwrap();
        let e = Involution::new(&g2, g2.from_word(&[]));
        let strings = strings_for(&g2, &e).unwrap();
        assert_eq!(strings.len(), 1);
        let st = &strings[0];
        assert!(st.base_lambda.iter().all(|v| v.is_none()));
        assert!(st.a_param.is_zero());
        assert_eq!(st.t_param.coeffs, vec![int(2), int(2)]);
    }

    #[test]
    fn lemma_3_4_signs_for_empty_fixed_sets() {
        for label in ["G2", "F4"] {
            let rs = RootSystem::parse(label).unwrap();
            for inv in involutions(&rs).unwrap() {
                if !inv.fixed_set.is_empty() {
                    continue;
                }
                let ctx = FamilyContext::new(&rs, inv);
                let n = rs.rank;
                for i in 0..n {
                    assert!(ctx.quad[i * n + i].is_positive(), "{label}");
                    for j in 0..n {
                        assert!(!ctx.quad[i * n + j].is_negative(), "{label}");
                    }
                }
            }
        }
    }
}
