//! Root-system data in the fundamental-weight basis: Cartan matrices, the
//! Gram form of the fundamental weights, positive roots, dominant
//! conjugation, root-lattice membership and Levi subsystems.
//!
//! Conventions. Weights are coordinate vectors on the fundamental weights,
//! so `[n_1, ..., n_l]` stands for `sum n_i w_i` and `rho = [1, ..., 1]`.
//! Row `i` of the Cartan matrix gives the simple root `alpha_i` in these
//! coordinates. The bilinear form is normalized so that a *short* simple
//! root has squared length 2. For F4 the first two simple roots are short
//! (this is the transpose of the Bourbaki convention); for G2 the first
//! simple root is short.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use core::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::{int, mat, Error, Rat, Result};

/// A weight in fundamental-weight coordinates. Coordinates are exact
/// rationals; all operations stay in exact arithmetic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Rat>);

impl core::fmt::Debug for Weight {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rat::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&n| int(n)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// All coordinates `>= 0`.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    /// All coordinates integers.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// All coordinates `> 0` (dominant regular).
    pub fn is_regular_dominant(&self) -> bool {
        self.0.iter().all(|c| c.is_positive())
    }

    pub fn scale(&self, k: Rat) -> Weight {
        Weight(self.0.iter().map(|&c| c * k).collect())
    }

    pub fn double(&self) -> Weight {
        self.scale(int(2))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

/// An element of the Weyl group, stored as its integer action matrix on
/// fundamental-weight coordinates (column convention: `(w l)_k = sum_m
/// A[k][m] l_m`). Reduced words are recomputed on demand by descent.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: usize,
    action: Vec<i64>,
}

impl core::fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "WeylElement{:?}", self.action)
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut action = vec![0i64; rank * rank];
        for i in 0..rank {
            action[i * rank + i] = 1;
        }
        WeylElement { rank, action }
    }

    pub(crate) fn from_action(rank: usize, action: Vec<i64>) -> Self {
        debug_assert_eq!(action.len(), rank * rank);
        WeylElement { rank, action }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn action(&self) -> &[i64] {
        &self.action
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank)
    }

    /// Apply the element to a weight.
    pub fn act(&self, w: &Weight) -> Weight {
        assert_eq!(self.rank, w.rank(), "weyl action dimension mismatch");
        let n = self.rank;
        let mut out = vec![Rat::zero(); n];
        for k in 0..n {
            let mut acc = Rat::zero();
            for m in 0..n {
                let a = self.action[k * n + m];
                if a != 0 {
                    acc += Rat::from_integer(a) * w.0[m];
                }
            }
            out[k] = acc;
        }
        Weight(out)
    }

    /// `self.compose(&g)` is "apply `g` first, then `self`".
    pub fn compose(&self, g: &WeylElement) -> WeylElement {
        assert_eq!(self.rank, g.rank);
        let n = self.rank;
        let mut action = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.action[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    action[i * n + j] += a * g.action[k * n + j];
                }
            }
        }
        WeylElement { rank: n, action }
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    /// Exact inverse (the action matrix is unimodular).
    pub fn inverse(&self) -> WeylElement {
        let n = self.rank;
        let a: Vec<Rat> = self.action.iter().map(|&x| int(x)).collect();
        let inv = mat::inverse(&a, n).expect("Weyl action matrix is invertible");
        let action = inv
            .iter()
            .map(|r| {
                debug_assert!(r.is_integer());
                r.to_integer()
            })
            .collect();
        WeylElement { rank: n, action }
    }
}

/// Which simple family a root system belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn from_char(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// Immutable root datum. Possibly reducible (Levi subsystems are built with
/// the same machinery); `components` lists the connected components of the
/// Dynkin diagram by simple-root index.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub label: String,
    pub rank: usize,
    /// Row-major integer Cartan matrix, `C[i][j] = <alpha_i, alpha_j^v>`.
    pub cartan: Vec<i64>,
    /// `d_i = |alpha_i|^2 / 2` in the ambient normalization.
    pub half_lengths: Vec<Rat>,
    /// Gram matrix of the fundamental weights, `G[i][j] = <w_i, w_j>`.
    pub gram: Vec<Rat>,
    /// `C^{-T}`, for converting weight coordinates to simple-root coordinates.
    inv_cartan_t: Vec<Rat>,
    pub positive_roots: Vec<Weight>,
    pub rho: Weight,
    /// Highest root (of the unique component when the system is simple).
    pub beta: Weight,
    pub w0: WeylElement,
    pub components: Vec<Vec<usize>>,
}

impl RootSystem {
    /// Build a simple root system in the paper's conventions.
    pub fn build(family: char, rank: usize) -> Result<RootSystem> {
        let fam = Family::from_char(family)
            .ok_or_else(|| Error::BadType(format!("unknown family '{family}'")))?;
        let ok = match fam {
            Family::A => (1..=8).contains(&rank),
            Family::B | Family::C => (2..=8).contains(&rank),
            Family::D => (4..=8).contains(&rank),
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::BadType(format!("{}{rank}", fam.letter())));
        }
        let (cartan, d) = simple_cartan(fam, rank);
        RootSystem::from_cartan(format!("{}{rank}", fam.letter()), cartan, d)
    }

    /// Parse a label like "F4" or "a6".
    pub fn parse(label: &str) -> Result<RootSystem> {
        let mut chars = label.chars();
        let fam = chars
            .next()
            .ok_or_else(|| Error::BadType("empty label".to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::BadType(label.to_string()))?;
        RootSystem::build(fam, rank)
    }

    /// Build from an explicit Cartan matrix plus half-length vector. Used
    /// both by `build` and by Levi restriction (where the half-lengths are
    /// inherited from the ambient system, so the "short = 2" normalization
    /// may be off by a global factor; every sign test is scale-invariant).
    pub fn from_cartan(label: String, cartan: Vec<i64>, half_lengths: Vec<Rat>) -> Result<RootSystem> {
        let rank = half_lengths.len();
        assert_eq!(cartan.len(), rank * rank);
        let cr: Vec<Rat> = cartan.iter().map(|&x| int(x)).collect();
        let inv_cartan = mat::inverse(&cr, rank)
            .ok_or_else(|| Error::BadType(format!("singular Cartan matrix for {label}")))?;
        let inv_cartan_t = mat::transpose(&inv_cartan, rank);

        // G = C^{-1} D, from <w_i, alpha_j> = delta_ij d_j.
        let mut gram = vec![Rat::zero(); rank * rank];
        for i in 0..rank {
            for j in 0..rank {
                gram[i * rank + j] = inv_cartan[i * rank + j] * half_lengths[j];
            }
        }
        for i in 0..rank {
            for j in 0..i {
                if gram[i * rank + j] != gram[j * rank + i] {
                    return Err(Error::BadType(format!(
                        "Cartan data for {label} yields an asymmetric Gram form"
                    )));
                }
            }
        }

        let components = diagram_components(&cartan, rank);

        let mut rs = RootSystem {
            label,
            rank,
            cartan,
            half_lengths,
            gram,
            inv_cartan_t,
            positive_roots: Vec::new(),
            rho: Weight(vec![Rat::one(); rank]),
            beta: Weight::zero(rank),
            w0: WeylElement::identity(rank),
            components,
        };
        rs.positive_roots = rs.generate_positive_roots();
        rs.beta = rs.highest_root();
        rs.w0 = rs.longest_element();

        // rho really is the half-sum of the positive roots.
        let mut half_sum = Weight::zero(rank);
        for r in &rs.positive_roots {
            half_sum = &half_sum + r;
        }
        half_sum = half_sum.scale(crate::rat(1, 2));
        if half_sum != rs.rho {
            return Err(Error::BadType(format!(
                "rho check failed for {}: half-sum of positive roots is {half_sum:?}",
                rs.label
            )));
        }
        Ok(rs)
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(
            self.cartan[i * self.rank..(i + 1) * self.rank]
                .iter()
                .map(|&x| int(x))
                .collect(),
        )
    }

    pub fn simple_reflection(&self, j: usize) -> WeylElement {
        let n = self.rank;
        let mut action = vec![0i64; n * n];
        for k in 0..n {
            action[k * n + k] = 1;
            action[k * n + j] -= self.cartan[j * n + k];
        }
        WeylElement { rank: n, action }
    }

    /// Apply `s_j` in place to coordinates (hot path for enumeration).
    pub fn reflect_coords(&self, j: usize, coords: &mut [Rat]) {
        let n = self.rank;
        let lj = coords[j];
        if lj.is_zero() {
            return;
        }
        for k in 0..n {
            let c = self.cartan[j * n + k];
            if c != 0 {
                coords[k] -= Rat::from_integer(c) * lj;
            }
        }
    }

    /// `<a, b>` under the ambient bilinear form.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Result<Rat> {
        if a.rank() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: a.rank() });
        }
        if b.rank() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: b.rank() });
        }
        let n = self.rank;
        let mut acc = Rat::zero();
        for i in 0..n {
            if a.0[i].is_zero() {
                continue;
            }
            for j in 0..n {
                acc += a.0[i] * self.gram[i * n + j] * b.0[j];
            }
        }
        Ok(acc)
    }

    pub fn norm_sq(&self, a: &Weight) -> Rat {
        self.inner(a, a).expect("rank-checked weight")
    }

    /// `<l, w_i>` for every fundamental weight, i.e. the Gram image.
    pub fn pair_with_fundamentals(&self, l: &Weight) -> Vec<Rat> {
        mat::apply(&self.gram, &l.0, self.rank)
    }

    /// Conjugate `l` into the dominant chamber; returns the dominant
    /// representative and the element carrying `l` onto it.
    pub fn dominant(&self, l: &Weight) -> (Weight, WeylElement) {
        let mut cur = l.clone();
        let mut w = WeylElement::identity(self.rank);
        loop {
            match cur.0.iter().position(|c| c.is_negative()) {
                None => return (cur, w),
                Some(j) => {
                    self.reflect_coords(j, &mut cur.0);
                    w = self.simple_reflection(j).compose(&w);
                }
            }
        }
    }

    /// Simple-root coordinates of a weight: solve `C^T c = n`.
    pub fn root_coords(&self, l: &Weight) -> Vec<Rat> {
        mat::apply(&self.inv_cartan_t, &l.0, self.rank)
    }

    /// Is `l` an integer combination of simple roots?
    pub fn in_root_lattice(&self, l: &Weight) -> bool {
        if !l.is_integral() {
            return false;
        }
        self.root_coords(l).iter().all(|c| c.is_integer())
    }

    fn generate_positive_roots(&self) -> Vec<Weight> {
        // Orbit of the simple roots under the simple reflections, then keep
        // the positive half. Ordered by height, ties by coordinates.
        let mut all: Vec<Weight> = (0..self.rank).map(|i| self.simple_root(i)).collect();
        let mut seen: alloc::collections::BTreeSet<Weight> = all.iter().cloned().collect();
        let mut frontier = all.clone();
        while let Some(r) = frontier.pop() {
            for j in 0..self.rank {
                let mut c = r.0.clone();
                self.reflect_coords(j, &mut c);
                let img = Weight(c);
                if seen.insert(img.clone()) {
                    all.push(img.clone());
                    frontier.push(img);
                }
            }
        }
        let mut pos: Vec<(Rat, Weight)> = Vec::new();
        for r in all {
            let c = self.root_coords(&r);
            if c.iter().all(|x| !x.is_negative()) {
                let height: Rat = c.iter().fold(Rat::zero(), |acc, x| acc + x);
                pos.push((height, r));
            }
        }
        pos.sort();
        pos.into_iter().map(|(_, r)| r).collect()
    }

    fn highest_root(&self) -> Weight {
        // positive_roots is height-sorted; the last entry is maximal.
        self.positive_roots
            .last()
            .expect("nonempty root system")
            .clone()
    }

    fn longest_element(&self) -> WeylElement {
        // w0 maps -rho to rho, and is pinned down by regularity of rho.
        let (image, w) = self.dominant(&-&self.rho);
        debug_assert_eq!(image, self.rho);
        w
    }

    /// Number of positive roots sent to negative roots, i.e. the Coxeter
    /// length of `w`.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| {
                let img = w.act(r);
                self.root_coords(&img).iter().any(|c| c.is_negative())
            })
            .count()
    }

    /// A reduced word for `w`, as simple-reflection indices applied
    /// right-to-left.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut cur = w.clone();
        let mut letters: Vec<usize> = Vec::new();
        while !cur.is_identity() {
            let j = (0..self.rank)
                .find(|&j| {
                    let img = cur.act(&self.simple_root(j));
                    self.root_coords(&img).iter().any(|c| c.is_negative())
                })
                .expect("non-identity element has a descent");
            letters.push(j);
            cur = cur.compose(&self.simple_reflection(j));
        }
        letters.reverse();
        letters
    }

    /// Recompose a word into an element (letters applied right-to-left).
    pub fn from_word(&self, word: &[usize]) -> WeylElement {
        let mut w = WeylElement::identity(self.rank);
        for &j in word {
            w = w.compose(&self.simple_reflection(j));
        }
        w
    }

    /// Does the action matrix preserve the Gram form exactly?
    pub fn preserves_gram(&self, w: &WeylElement) -> bool {
        let n = self.rank;
        let a: Vec<Rat> = w.action.iter().map(|&x| int(x)).collect();
        let at = mat::transpose(&a, n);
        let g2 = mat::mul(&at, &mat::mul(&self.gram, &a, n), n);
        g2 == self.gram
    }

    /// Levi subsystem generated by the simple roots indexed by `indices`.
    pub fn levi(&self, indices: &[usize]) -> Result<Levi> {
        if indices.is_empty() {
            return Err(Error::BadLevi("empty index set".to_string()));
        }
        let mut idx: Vec<usize> = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if idx.iter().any(|&j| j >= self.rank) {
            return Err(Error::BadLevi(format!("index out of range for rank {}", self.rank)));
        }
        let l = idx.len();
        let mut sub_cartan = vec![0i64; l * l];
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                sub_cartan[a * l + b] = self.cartan[i * self.rank + j];
            }
        }
        let sub_d: Vec<Rat> = idx.iter().map(|&i| self.half_lengths[i]).collect();
        let label = classify(&sub_cartan, &sub_d, l);
        let subsystem = RootSystem::from_cartan(label, sub_cartan, sub_d)?;

        // Embedding matrix: Levi weight coordinates -> ambient coordinates,
        // via the span-of-Levi-simple-roots representative.
        let embed = {
            let mut m = vec![Rat::zero(); self.rank * l];
            for (a, _) in idx.iter().enumerate() {
                // column a: image of the a-th Levi fundamental weight
                let mut e = Weight::zero(l);
                e.0[a] = Rat::one();
                let c = subsystem.root_coords(&e);
                let mut amb = Weight::zero(self.rank);
                for (b, &j) in idx.iter().enumerate() {
                    let cj = c[b];
                    if !cj.is_zero() {
                        amb = &amb + &self.simple_root(j).scale(cj);
                    }
                }
                for r in 0..self.rank {
                    m[r * l + a] = amb.0[r];
                }
            }
            m
        };

        // rho_u = rho - rho_L in ambient coordinates, rho_L the half sum of
        // the positive roots supported on the Levi.
        let mut rho_l = Weight::zero(self.rank);
        for r in &self.positive_roots {
            let c = self.root_coords(r);
            let supported = c
                .iter()
                .enumerate()
                .all(|(j, cj)| cj.is_zero() || idx.contains(&j));
            if supported {
                rho_l = &rho_l + r;
            }
        }
        rho_l = rho_l.scale(crate::rat(1, 2));
        let rho_u = &self.rho - &rho_l;

        Ok(Levi { subsystem, indices: idx, embed, rho_u })
    }
}

/// A Levi subsystem together with its embedding data.
#[derive(Clone, Debug)]
pub struct Levi {
    pub subsystem: RootSystem,
    /// Ambient simple-root indices generating the Levi, sorted.
    pub indices: Vec<usize>,
    /// `ambient_rank x levi_rank` matrix sending Levi fundamental-weight
    /// coordinates to the ambient weight lying in the span of the Levi roots.
    embed: Vec<Rat>,
    /// Half sum of the positive roots outside the Levi, in ambient
    /// coordinates.
    pub rho_u: Weight,
}

impl Levi {
    /// Ambient weight for a Levi weight (representative in the root span).
    pub fn embed(&self, w: &Weight) -> Weight {
        let l = self.indices.len();
        assert_eq!(w.rank(), l);
        let amb_rank = self.embed.len() / l;
        let mut out = vec![Rat::zero(); amb_rank];
        for r in 0..amb_rank {
            for a in 0..l {
                out[r] += self.embed[r * l + a] * w.0[a];
            }
        }
        Weight(out)
    }

    /// Levi coordinates of an ambient weight: the pairings with the Levi
    /// simple coroots, which are just the ambient coordinates at `indices`.
    pub fn restrict(&self, ambient: &Weight) -> Weight {
        Weight(self.indices.iter().map(|&j| ambient.0[j]).collect())
    }
}

fn simple_cartan(fam: Family, n: usize) -> (Vec<i64>, Vec<Rat>) {
    let mut c = vec![0i64; n * n];
    for i in 0..n {
        c[i * n + i] = 2;
    }
    let mut link = |i: usize, j: usize, cij: i64, cji: i64| {
        c[i * n + j] = cij;
        c[j * n + i] = cji;
    };
    let mut d = vec![Rat::one(); n];
    match fam {
        Family::A => {
            for i in 0..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            // alpha_n short, the rest long (squared length 4).
            for i in 0..n - 1 {
                link(i, i + 1, -1, -1);
            }
            c[(n - 2) * n + (n - 1)] = -2;
            c[(n - 1) * n + (n - 2)] = -1;
            for di in d.iter_mut().take(n - 1) {
                *di = int(2);
            }
        }
        Family::C => {
            // alpha_n long, the rest short.
            for i in 0..n - 1 {
                link(i, i + 1, -1, -1);
            }
            c[(n - 2) * n + (n - 1)] = -1;
            c[(n - 1) * n + (n - 2)] = -2;
            d[n - 1] = int(2);
        }
        Family::D => {
            for i in 0..n - 3 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 2, -1, -1);
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            // Bourbaki numbering: chain 1-3-4-5-6(-7)(-8) with 2 attached to 4.
            let chain: &[usize] = match n {
                6 => &[0, 2, 3, 4, 5],
                7 => &[0, 2, 3, 4, 5, 6],
                _ => &[0, 2, 3, 4, 5, 6, 7],
            };
            for w in chain.windows(2) {
                link(w[0], w[1], -1, -1);
            }
            link(1, 3, -1, -1);
        }
        Family::F => {
            // alpha_1, alpha_2 short; alpha_3, alpha_4 long. Pinned by the
            // appendix rows rho - alpha_i.
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
            d[2] = int(2);
            d[3] = int(2);
        }
        Family::G => {
            // alpha_1 short, alpha_2 long.
            link(0, 1, -1, -3);
            d[1] = int(3);
        }
    }
    (c, d)
}

fn diagram_components(cartan: &[i64], n: usize) -> Vec<Vec<usize>> {
    let mut comp: Vec<Vec<usize>> = Vec::new();
    let mut assigned = vec![false; n];
    for start in 0..n {
        if assigned[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut cur = Vec::new();
        assigned[start] = true;
        while let Some(i) = stack.pop() {
            cur.push(i);
            for j in 0..n {
                if !assigned[j] && i != j && cartan[i * n + j] != 0 {
                    assigned[j] = true;
                    stack.push(j);
                }
            }
        }
        cur.sort_unstable();
        comp.push(cur);
    }
    comp
}

/// Name a (possibly reducible) Cartan datum, e.g. "C3" or "A2+A1".
fn classify(cartan: &[i64], d: &[Rat], n: usize) -> String {
    let comps = diagram_components(cartan, n);
    let mut names: Vec<String> = Vec::new();
    for comp in &comps {
        names.push(classify_component(cartan, d, n, comp));
    }
    names.sort_by(|a, b| b.cmp(a));
    names.join("+")
}

fn classify_component(cartan: &[i64], d: &[Rat], n: usize, comp: &[usize]) -> String {
    let l = comp.len();
    if l == 1 {
        return "A1".to_string();
    }
    // Build the component subsystem to count roots by length.
    let mut sub = vec![0i64; l * l];
    for (a, &i) in comp.iter().enumerate() {
        for (b, &j) in comp.iter().enumerate() {
            sub[a * l + b] = cartan[i * n + j];
        }
    }
    let sub_d: Vec<Rat> = comp.iter().map(|&i| d[i]).collect();
    let min_d = sub_d.iter().cloned().fold(None::<Rat>, |m, x| match m {
        None => Some(x),
        Some(y) => Some(if x < y { x } else { y }),
    })
    .unwrap();
    let simply_laced = sub_d.iter().all(|&x| x == min_d);
    let total = {
        // Count positive roots via the closure used in from_cartan, but the
        // cheap way: |W|-free height recursion is unnecessary at rank <= 8.
        let rs = RootSystem::from_cartan("tmp".to_string(), sub.clone(), sub_d.clone())
            .expect("component Cartan datum is valid");
        rs.positive_roots.len() * 2
    };
    if simply_laced {
        return match (l, total) {
            (_, t) if t == l * (l + 1) => format!("A{l}"),
            (_, t) if l >= 4 && t == 2 * l * (l - 1) => format!("D{l}"),
            (6, 72) => "E6".to_string(),
            (7, 126) => "E7".to_string(),
            (8, 240) => "E8".to_string(),
            _ => format!("?{l}"),
        };
    }
    match (l, total) {
        (2, 12) => "G2".to_string(),
        (4, 48) => "F4".to_string(),
        (l, t) if t == 2 * l * l => {
            // B_l or C_l: count short roots.
            let rs = RootSystem::from_cartan("tmp".to_string(), sub, sub_d.clone())
                .expect("component Cartan datum is valid");
            let short = rs
                .positive_roots
                .iter()
                .filter(|r| rs.norm_sq(r) == min_d * int(2))
                .count();
            if short == l {
                format!("B{l}")
            } else {
                format!("C{l}")
            }
        }
        _ => format!("?{l}"),
    }
}
