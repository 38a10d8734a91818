//! Root systems, weights and Weyl groups in exact ambient coordinates.
//!
//! Rank-two systems use the tables `A2 = {e1-e2, e1-e3, e2-e3}`,
//! `B2 = {e1-e2, e1, e1+e2, e2}`, `C2 = {e1-e2, 2e1, e1+e2, 2e2}` and the
//! six-root `G2` table in the plane `x1+x2+x3 = 0`; `A_{n-1}` lives in the
//! sum-zero hyperplane of `Q^n` and `B3` in `Q^3`.  Weights are kept in the
//! span of the roots so that every weight has a unique coordinate vector.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group_algebra::GroupAlgebraElement;
use crate::linalg::{invert, q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    G,
}

/// Type label and rank, e.g. `A2` or `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SystemKind {
    family: Family,
    rank: usize,
}

impl SystemKind {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let supported = match family {
            Family::A => (2..=4).contains(&rank),
            Family::B => (2..=3).contains(&rank),
            Family::C | Family::G => rank == 2,
        };
        if supported {
            Ok(SystemKind { family, rank })
        } else {
            Err(Error::UnsupportedSystem(format!("{family:?}{rank}")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for SystemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('G') => Family::G,
            _ => return Err(Error::UnsupportedSystem(String::from(t))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnsupportedSystem(String::from(t)))?;
        SystemKind::new(family, rank).map_err(|_| Error::UnsupportedSystem(String::from(t)))
    }
}

/// A vector of `h*` in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<Q>);

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Weight(vec![Q::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| q(c)).collect())
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &Weight) -> Q {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Integer coordinates, if every coordinate is an integer.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `±` a positive root, by its position in the positive-root list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedRoot {
    pub index: usize,
    pub negative: bool,
}

impl SignedRoot {
    pub fn pos(index: usize) -> Self {
        SignedRoot { index, negative: false }
    }

    pub fn neg(index: usize) -> Self {
        SignedRoot { index, negative: true }
    }

    pub fn sign(&self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn flip(self) -> Self {
        SignedRoot {
            index: self.index,
            negative: !self.negative,
        }
    }

    /// The sign of `self` applied to an already signed root.
    pub fn times(self, other: SignedRoot) -> SignedRoot {
        SignedRoot {
            index: other.index,
            negative: self.negative != other.negative,
        }
    }
}

/// An element of the Weyl group.
///
/// Elements are canonicalized by the signed images of the positive roots;
/// equality and ordering only look at that array.  The ambient matrix is
/// carried along for acting on arbitrary weights.
#[derive(Clone, Debug)]
pub struct WeylElement {
    images: Vec<SignedRoot>,
    matrix: Vec<Vec<Q>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for WeylElement {}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.images.cmp(&other.images)
    }
}

impl WeylElement {
    pub fn images(&self) -> &[SignedRoot] {
        &self.images
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.images.iter().filter(|r| r.negative).count()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, r)| r.index == i && !r.negative)
    }

    pub fn act(&self, w: &Weight) -> Weight {
        Weight(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(&w.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    pub fn act_root(&self, r: SignedRoot) -> SignedRoot {
        let img = self.images[r.index];
        if r.negative {
            img.flip()
        } else {
            img
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.matrix.len();
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &self.matrix[i][k] * &other.matrix[k][j]).sum())
                    .collect()
            })
            .collect();
        WeylElement {
            images: other.images.iter().map(|&r| self.act_root(r)).collect(),
            matrix,
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.matrix.len();
        // Weyl group elements are orthogonal.
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| self.matrix[j][i].clone()).collect())
            .collect();
        let mut images = vec![SignedRoot::pos(0); self.images.len()];
        for (b, img) in self.images.iter().enumerate() {
            images[img.index] = SignedRoot {
                index: b,
                negative: img.negative,
            };
        }
        WeylElement { images, matrix }
    }
}

/// Rank-two configurations whose relations are tabulated in [`crate::nichols`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rank2Type {
    A1xA1,
    A2,
    B2,
    C2,
    G2,
}

impl Rank2Type {
    pub fn label(&self) -> &'static str {
        match self {
            Rank2Type::A1xA1 => "A1xA1",
            Rank2Type::A2 => "A2",
            Rank2Type::B2 => "B2",
            Rank2Type::C2 => "C2",
            Rank2Type::G2 => "G2",
        }
    }
}

/// The positive roots of a rank-two subsystem, listed in angular order from
/// one simple root `a_1` of the subsystem to the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank2Subsystem {
    pub ty: Rank2Type,
    pub roots: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: SystemKind,
    ambient_dim: usize,
    positive_roots: Vec<Weight>,
    coroots: Vec<Weight>,
    simple_indices: Vec<usize>,
    fundamental_weights: Vec<Weight>,
    rho: Weight,
    coxeter_number: usize,
    braid_orders: Vec<Vec<usize>>,
    root_lookup: BTreeMap<Weight, SignedRoot>,
    reflection_table: Vec<Vec<SignedRoot>>,
    weyl: Vec<WeylElement>,
    weyl_index: BTreeMap<Vec<SignedRoot>, usize>,
    reflection_elements: Vec<usize>,
    left_reflection: Vec<Vec<usize>>,
}

fn e(dim: usize, terms: &[(usize, i64)]) -> Weight {
    let mut v = vec![0i64; dim];
    for &(i, c) in terms {
        v[i] += c;
    }
    Weight::from_ints(&v)
}

fn root_table(kind: SystemKind) -> (usize, Vec<Weight>, Vec<usize>) {
    match (kind.family, kind.rank) {
        (Family::A, r) => {
            let n = r + 1;
            let mut roots = Vec::new();
            let mut simple = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if j == i + 1 {
                        simple.push(roots.len());
                    }
                    roots.push(e(n, &[(i, 1), (j, -1)]));
                }
            }
            // simple roots in the order e1-e2, e2-e3, ...
            simple.sort_by_key(|&k| {
                roots[k]
                    .coords()
                    .iter()
                    .position(|c| c.is_positive())
                    .unwrap_or(0)
            });
            (n, roots, simple)
        }
        (Family::B, 2) => (
            2,
            vec![
                e(2, &[(0, 1), (1, -1)]),
                e(2, &[(0, 1)]),
                e(2, &[(0, 1), (1, 1)]),
                e(2, &[(1, 1)]),
            ],
            vec![0, 3],
        ),
        (Family::C, 2) => (
            2,
            vec![
                e(2, &[(0, 1), (1, -1)]),
                e(2, &[(0, 2)]),
                e(2, &[(0, 1), (1, 1)]),
                e(2, &[(1, 2)]),
            ],
            vec![0, 3],
        ),
        (Family::G, 2) => (
            3,
            vec![
                e(3, &[(0, 1), (1, -1)]),
                e(3, &[(0, 1), (1, -2), (2, 1)]),
                e(3, &[(1, -1), (2, 1)]),
                e(3, &[(0, -1), (1, -1), (2, 2)]),
                e(3, &[(0, -1), (2, 1)]),
                e(3, &[(0, -2), (1, 1), (2, 1)]),
            ],
            vec![0, 5],
        ),
        (Family::B, 3) => {
            let n = 3;
            let mut roots = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    roots.push(e(n, &[(i, 1), (j, -1)]));
                }
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    roots.push(e(n, &[(i, 1), (j, 1)]));
                }
            }
            for i in 0..n {
                roots.push(e(n, &[(i, 1)]));
            }
            // e1-e2, e2-e3, e3
            (n, roots, vec![0, 2, 8])
        }
        _ => unreachable!("SystemKind::new rejects unsupported ranks"),
    }
}

impl RootSystem {
    pub fn build(kind: SystemKind) -> Result<Self> {
        let (ambient_dim, positive_roots, simple_indices) = root_table(kind);
        let rank = kind.rank;
        let coroots: Vec<Weight> = positive_roots
            .iter()
            .map(|a| a.scale(&(q(2) / a.dot(a))))
            .collect();

        let mut root_lookup = BTreeMap::new();
        for (i, a) in positive_roots.iter().enumerate() {
            root_lookup.insert(a.clone(), SignedRoot::pos(i));
            root_lookup.insert(-a, SignedRoot::neg(i));
        }

        let normalize = |v: &Weight| -> Result<SignedRoot> {
            root_lookup
                .get(v)
                .copied()
                .ok_or_else(|| Error::Internal(format!("{v} is not a root")))
        };

        let mut reflection_table = Vec::new();
        for a in 0..positive_roots.len() {
            let mut row = Vec::new();
            for b in &positive_roots {
                let img = b - &positive_roots[a].scale(&b.dot(&coroots[a]));
                row.push(normalize(&img)?);
            }
            reflection_table.push(row);
        }

        // Fundamental weights in the root span: omega = C^{-1} alpha.
        let cartan: Vec<Vec<Q>> = simple_indices
            .iter()
            .map(|&k| {
                simple_indices
                    .iter()
                    .map(|&j| positive_roots[k].dot(&coroots[j]))
                    .collect()
            })
            .collect();
        let inv = invert(&cartan).ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
        let fundamental_weights: Vec<Weight> = (0..rank)
            .map(|i| {
                let mut w = Weight::zero(ambient_dim);
                for (k, &sk) in simple_indices.iter().enumerate() {
                    w = &w + &positive_roots[sk].scale(&inv[i][k]);
                }
                w
            })
            .collect();

        let mut rho = Weight::zero(ambient_dim);
        for a in &positive_roots {
            rho = &rho + a;
        }
        rho = rho.scale(&Q::new(1.into(), 2.into()));

        let coxeter_number = 2 * positive_roots.len() / rank;

        let reflection_matrix = |a: usize| -> Vec<Vec<Q>> {
            let alpha = positive_roots[a].coords();
            let co = coroots[a].coords();
            (0..ambient_dim)
                .map(|i| {
                    (0..ambient_dim)
                        .map(|j| {
                            let d = if i == j { Q::one() } else { Q::zero() };
                            d - &alpha[i] * &co[j]
                        })
                        .collect()
                })
                .collect()
        };
        let reflection_elem = |a: usize| WeylElement {
            images: reflection_table[a].clone(),
            matrix: reflection_matrix(a),
        };

        let identity = WeylElement {
            images: (0..positive_roots.len()).map(SignedRoot::pos).collect(),
            matrix: (0..ambient_dim)
                .map(|i| {
                    (0..ambient_dim)
                        .map(|j| if i == j { Q::one() } else { Q::zero() })
                        .collect()
                })
                .collect(),
        };

        let simple_refl: Vec<WeylElement> =
            simple_indices.iter().map(|&k| reflection_elem(k)).collect();
        let mut weyl = vec![identity];
        let mut weyl_index = BTreeMap::new();
        weyl_index.insert(weyl[0].images.clone(), 0usize);
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for s in &simple_refl {
                let next = s.compose(&weyl[w]);
                if !weyl_index.contains_key(&next.images) {
                    weyl_index.insert(next.images.clone(), weyl.len());
                    queue.push_back(weyl.len());
                    weyl.push(next);
                }
            }
        }

        let mut reflection_elements = Vec::new();
        for a in 0..positive_roots.len() {
            let r = reflection_elem(a);
            let idx = *weyl_index
                .get(&r.images)
                .ok_or_else(|| Error::Internal("reflection missing from W".into()))?;
            reflection_elements.push(idx);
        }
        let mut left_reflection = Vec::new();
        for a in 0..positive_roots.len() {
            let s = &weyl[reflection_elements[a]];
            let mut row = Vec::with_capacity(weyl.len());
            for w in &weyl {
                let images: Vec<SignedRoot> = w.images.iter().map(|&r| s.act_root(r)).collect();
                row.push(weyl_index[&images]);
            }
            left_reflection.push(row);
        }

        let mut braid_orders = vec![vec![1usize; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                if i == j {
                    continue;
                }
                let si = reflection_elements[simple_indices[i]];
                let sj = reflection_elements[simple_indices[j]];
                let prod = weyl[si].compose(&weyl[sj]);
                let mut acc = prod.clone();
                let mut m = 1;
                while !acc.is_identity() {
                    acc = acc.compose(&prod);
                    m += 1;
                }
                braid_orders[i][j] = m;
            }
        }

        let rs = RootSystem {
            kind,
            ambient_dim,
            positive_roots,
            coroots,
            simple_indices,
            fundamental_weights,
            rho,
            coxeter_number,
            braid_orders,
            root_lookup,
            reflection_table,
            weyl,
            weyl_index,
            reflection_elements,
            left_reflection,
        };
        Ok(rs)
    }

    pub fn from_label(label: &str) -> Result<Self> {
        RootSystem::build(label.parse()?)
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn coroot(&self, r: SignedRoot) -> Weight {
        let c = &self.coroots[r.index];
        if r.negative {
            -c
        } else {
            c.clone()
        }
    }

    pub fn root(&self, r: SignedRoot) -> Weight {
        let a = &self.positive_roots[r.index];
        if r.negative {
            -a
        } else {
            a.clone()
        }
    }

    pub fn simple_indices(&self) -> &[usize] {
        &self.simple_indices
    }

    /// The i-th simple root (0-based) as a signed root.
    pub fn simple(&self, i: usize) -> SignedRoot {
        SignedRoot::pos(self.simple_indices[i])
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter_number
    }

    /// `m_ij`, the order of `s_i s_j`.
    pub fn braid_order(&self, i: usize, j: usize) -> usize {
        self.braid_orders[i][j]
    }

    /// Signed positive-root normalization of a vector that is a root.
    pub fn normalize(&self, v: &Weight) -> Option<SignedRoot> {
        self.root_lookup.get(v).copied()
    }

    /// `<λ, α^∨>`.
    pub fn pairing(&self, lambda: &Weight, alpha: SignedRoot) -> Q {
        let p = lambda.dot(&self.coroots[alpha.index]);
        if alpha.negative {
            -p
        } else {
            p
        }
    }

    /// `s_α(λ) = λ - <λ, α^∨> α`.
    pub fn reflect(&self, alpha: SignedRoot, lambda: &Weight) -> Weight {
        let a = &self.positive_roots[alpha.index];
        lambda - &a.scale(&lambda.dot(&self.coroots[alpha.index]))
    }

    /// `s_a(±b)` for positive root indices `a`, signed `b`.
    pub fn reflect_root(&self, a: usize, b: SignedRoot) -> SignedRoot {
        let img = self.reflection_table[a][b.index];
        if b.negative {
            img.flip()
        } else {
            img
        }
    }

    pub fn weyl_act_root(&self, w: &WeylElement, alpha: SignedRoot) -> SignedRoot {
        w.act_root(alpha)
    }

    /// All elements of W, the identity first.
    pub fn weyl_enumerate(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }

    pub fn weyl_element(&self, idx: usize) -> &WeylElement {
        &self.weyl[idx]
    }

    pub fn weyl_index_of(&self, w: &WeylElement) -> usize {
        self.weyl_index[&w.images]
    }

    /// Index in [`weyl_enumerate`](Self::weyl_enumerate) of `s_α`.
    pub fn reflection_index(&self, a: usize) -> usize {
        self.reflection_elements[a]
    }

    pub fn reflection(&self, a: usize) -> &WeylElement {
        &self.weyl[self.reflection_elements[a]]
    }

    pub fn simple_reflection(&self, i: usize) -> &WeylElement {
        self.reflection(self.simple_indices[i])
    }

    /// Index of `s_a ∘ w`.
    pub fn left_reflection(&self, a: usize, w: usize) -> usize {
        self.left_reflection[a][w]
    }

    /// Reduced word in simple reflections (0-based) with `w = s_{i1} ... s_{il}`.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        while !cur.is_identity() {
            // left descent: s_i with w^{-1}(α_i) < 0
            let inv = cur.inverse();
            let i = (0..self.rank())
                .find(|&i| inv.act_root(self.simple(i)).negative)
                .expect("non-identity element has a left descent");
            word.push(i);
            cur = self.simple_reflection(i).compose(&cur);
        }
        word
    }

    pub fn weight(&self, fundamental_coords: &[i64]) -> Weight {
        let mut w = Weight::zero(self.ambient_dim);
        for (c, om) in fundamental_coords.iter().zip(&self.fundamental_weights) {
            w = &w + &om.scale(&q(*c));
        }
        w
    }

    /// `(<λ, α_i^∨>)_i`.
    pub fn fundamental_coords(&self, lambda: &Weight) -> Vec<Q> {
        (0..self.rank())
            .map(|i| self.pairing(lambda, self.simple(i)))
            .collect()
    }

    pub fn in_weight_lattice(&self, lambda: &Weight) -> bool {
        self.in_root_span(lambda)
            && self
                .fundamental_coords(lambda)
                .iter()
                .all(|c| c.is_integer())
    }

    /// 1 for weights in P, h for weights in h^{-1}P, `None` otherwise.
    pub fn denominator_bound(&self, lambda: &Weight) -> Option<usize> {
        if self.in_weight_lattice(lambda) {
            Some(1)
        } else if self.in_weight_lattice(&lambda.scale(&q(self.coxeter_number as i64))) {
            Some(self.coxeter_number)
        } else {
            None
        }
    }

    pub fn in_root_span(&self, lambda: &Weight) -> bool {
        let mut back = Weight::zero(self.ambient_dim);
        for (c, om) in self.fundamental_coords(lambda).iter().zip(&self.fundamental_weights) {
            back = &back + &om.scale(c);
        }
        &back == lambda
    }

    /// The W-orbit of λ, each element once, in discovery order.
    pub fn orbit(&self, lambda: &Weight) -> Vec<Weight> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::from([lambda.clone()]);
        seen.insert(lambda.clone());
        while let Some(mu) = queue.pop_front() {
            for i in 0..self.rank() {
                let nu = self.reflect(self.simple(i), &mu);
                if seen.insert(nu.clone()) {
                    queue.push_back(nu);
                }
            }
            out.push(mu);
        }
        out
    }

    /// `Σ_{μ ∈ Wλ} e^μ`.
    pub fn orbit_sum(&self, lambda: &Weight) -> GroupAlgebraElement {
        let mut f = GroupAlgebraElement::zero();
        for mu in self.orbit(lambda) {
            f.add_term(mu, Q::one());
        }
        f
    }

    fn in_span2(&self, a: usize, b: usize, c: usize) -> bool {
        let v = [&self.positive_roots[a], &self.positive_roots[b], &self.positive_roots[c]];
        let g: Vec<Vec<Q>> = (0..3)
            .map(|i| (0..3).map(|j| v[i].dot(v[j])).collect())
            .collect();
        let det = &g[0][0] * (&g[1][1] * &g[2][2] - &g[1][2] * &g[2][1])
            - &g[0][1] * (&g[1][0] * &g[2][2] - &g[1][2] * &g[2][0])
            + &g[0][2] * (&g[1][0] * &g[2][1] - &g[1][1] * &g[2][0]);
        det.is_zero()
    }

    /// Every reflection-closed set of positive roots spanning a plane,
    /// oriented as in the relation tables.
    ///
    /// These are the sets whose span in `V_W` is a braided subspace of
    /// type A1xA1, A2, B2/C2 or G2.  Sets other than A1xA1 are returned once
    /// from each simple root; a B2 configuration read from its short simple
    /// root is labelled C2.
    pub fn rank2_subsystems(&self) -> Vec<Rank2Subsystem> {
        let n = self.num_positive();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut out = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                let plane: Vec<usize> = (0..n).filter(|&c| self.in_span2(a, b, c)).collect();
                if !seen.insert(plane.clone()) {
                    continue;
                }
                let (g1, g2) = self.plane_simple_roots(&plane);
                let ordered = self.angular_order(&plane, g1, g2);
                for mask in 1u32..(1 << ordered.len()) {
                    if mask.count_ones() < 2 {
                        continue;
                    }
                    let subset: Vec<usize> = (0..ordered.len())
                        .filter(|&k| mask & (1 << k) != 0)
                        .map(|k| ordered[k])
                        .collect();
                    let closed = subset.iter().all(|&x| {
                        subset
                            .iter()
                            .all(|&y| subset.contains(&self.reflection_table[x][y].index))
                    });
                    if closed {
                        out.extend(self.orient_subsystem(&subset));
                    }
                }
            }
        }
        out
    }

    fn plane_simple_roots(&self, members: &[usize]) -> (usize, usize) {
        let roots = &self.positive_roots;
        let member_set: BTreeSet<&Weight> = members.iter().map(|&m| &roots[m]).collect();
        let simple: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&g| {
                !members
                    .iter()
                    .any(|&d| d != g && member_set.contains(&(&roots[g] - &roots[d])))
            })
            .collect();
        assert_eq!(simple.len(), 2, "rank-two subsystem has two simple roots");
        (simple[0], simple[1])
    }

    /// `members` sorted by angle from `g1` to `g2`; every member must be a
    /// nonnegative combination of the two.
    fn angular_order(&self, members: &[usize], g1: usize, g2: usize) -> Vec<usize> {
        let roots = &self.positive_roots;
        let (u, v) = (&roots[g1], &roots[g2]);
        let (uu, uv, vv) = (u.dot(u), u.dot(v), v.dot(v));
        let det = &uu * &vv - &uv * &uv;
        let mut coeffs: Vec<(Q, Q, usize)> = members
            .iter()
            .map(|&m| {
                let (pu, pv) = (roots[m].dot(u), roots[m].dot(v));
                let c1 = (&vv * &pu - &uv * &pv) / &det;
                let c2 = (&uu * &pv - &uv * &pu) / &det;
                (c1, c2, m)
            })
            .collect();
        // increasing slope c2/c1 with c1, c2 >= 0
        coeffs.sort_by(|x, y| (&x.1 * &y.0).cmp(&(&y.1 * &x.0)));
        coeffs.into_iter().map(|t| t.2).collect()
    }

    /// `subset` is already in angular order, so its extremes are simple.
    fn orient_subsystem(&self, subset: &[usize]) -> Vec<Rank2Subsystem> {
        let roots = &self.positive_roots;
        let (g1, g2) = (subset[0], subset[subset.len() - 1]);
        let len = |g: usize| roots[g].dot(&roots[g]);
        let both = |ty: &dyn Fn(usize, usize) -> Rank2Type| -> Vec<Rank2Subsystem> {
            [(g1, g2), (g2, g1)]
                .iter()
                .map(|&(x, y)| Rank2Subsystem {
                    ty: ty(x, y),
                    roots: self.angular_order(subset, x, y),
                })
                .collect()
        };
        match subset.len() {
            2 => vec![Rank2Subsystem {
                ty: Rank2Type::A1xA1,
                roots: subset.to_vec(),
            }],
            3 => both(&|_, _| Rank2Type::A2),
            4 => both(&|x, y| if len(x) > len(y) { Rank2Type::B2 } else { Rank2Type::C2 }),
            6 => both(&|_, _| Rank2Type::G2),
            k => unreachable!("rank-two root subsystem with {k} positive roots"),
        }
    }

    /// Stable textual description of the root table, used for cache keys.
    pub fn canonical_description(&self) -> String {
        let mut s = format!("{}|", self.kind);
        for r in &self.positive_roots {
            s.push_str(&format!("{r};"));
        }
        s.push('|');
        for i in &self.simple_indices {
            s.push_str(&format!("{i},"));
        }
        s
    }
}
