//! The Nichols–Woronowicz algebra `B(V_W)`, built degree by degree.
//!
//! An element of `B_n` is determined by its braided derivatives
//! `(D_α x)_{α ∈ Δ_+} ∈ B_{n-1}^{Δ_+}` because the common kernel of the
//! `D_α` is `B_0`.  The tower therefore spans degree `n` by the products
//! `[α] b` with `b` a basis vector of degree `n - 1`, computes each
//! candidate's derivative tuple with
//! `D_β([α] b) = δ_{βα} b + s_β([α]) D_β(b)`, and keeps a maximal
//! independent set.  Candidates are grouped by W-degree, since derivative
//! tuples of different W-degrees have disjoint supports.
//!
//! Degrees are never silently truncated: an operation that needs a degree
//! beyond the computed range fails with [`Error::Truncated`] unless the
//! tower has closed, that is, some degree has dimension zero.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::braided::{d_alpha_tensor, symmetrizer, yd_degree_index, TensorElement, Word};
use crate::error::{Error, Result};
use crate::linalg::{axpy, q, scaled, unit_vec, Echelon, Insertion, SparseVec, Q};
use crate::report::{CheckOutcome, Status};
use crate::rootsys::{Rank2Type, RootSystem, SignedRoot, WeylElement};

/// One graded piece `B_n` of the tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeData {
    pub dim: usize,
    /// Basis vector `k` is the monomial `labels[k]`.
    pub labels: Vec<Word>,
    /// `(α, j)` with basis vector `k` equal to `[α] b_j`, `b_j ∈ B_{n-1}`.
    pub parents: Vec<(usize, usize)>,
    /// W-degree of each basis vector, as an index into `weyl_enumerate`.
    pub yd: Vec<usize>,
    /// `left_mul[α][j]`: coordinates of `[α] b_j` in `B_n`.
    pub left_mul: Vec<Vec<SparseVec>>,
    /// `deriv[β][k]`: coordinates of `D_β b_k` in `B_{n-1}`.
    pub deriv: Vec<Vec<SparseVec>>,
    /// `reflect[a][k]`: coordinates of `s_a(b_k)` in `B_n`, every positive `a`.
    pub reflect: Vec<Vec<SparseVec>>,
}

#[derive(Clone, Debug)]
pub struct Tower {
    rs: RootSystem,
    degrees: Vec<DegreeData>,
}

/// An element of `B(V_W)` as coordinates per degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NicholsElement {
    components: BTreeMap<usize, SparseVec>,
}

impl NicholsElement {
    pub fn zero() -> Self {
        NicholsElement::default()
    }

    pub fn one() -> Self {
        Self::from_component(0, unit_vec(0))
    }

    pub fn from_component(degree: usize, v: SparseVec) -> Self {
        let mut x = Self::zero();
        x.add_component(degree, &v, &Q::one());
        x
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &SparseVec)> {
        self.components.iter().map(|(&d, v)| (d, v))
    }

    pub fn component(&self, degree: usize) -> SparseVec {
        self.components.get(&degree).cloned().unwrap_or_default()
    }

    /// `self += c * v` in the given degree.
    pub fn add_component(&mut self, degree: usize, v: &SparseVec, c: &Q) {
        let e = self.components.entry(degree).or_default();
        axpy(e, c, v);
        if e.is_empty() {
            self.components.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.components.keys().next_back().copied()
    }

    pub fn constant_term(&self) -> Q {
        self.component(0).get(&0).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, other: &NicholsElement) -> NicholsElement {
        let mut x = self.clone();
        for (&d, v) in &other.components {
            x.add_component(d, v, &Q::one());
        }
        x
    }

    pub fn sub(&self, other: &NicholsElement) -> NicholsElement {
        let mut x = self.clone();
        for (&d, v) in &other.components {
            x.add_component(d, v, &-Q::one());
        }
        x
    }

    pub fn scale(&self, c: &Q) -> NicholsElement {
        let mut x = Self::zero();
        for (&d, v) in &self.components {
            x.add_component(d, v, c);
        }
        x
    }

    /// The homogeneous part of degree `n`.
    pub fn homogeneous(&self, n: usize) -> NicholsElement {
        Self::from_component(n, self.component(n))
    }

    /// The components of degree at most `n`.
    pub fn truncated(&self, n: usize) -> NicholsElement {
        NicholsElement {
            components: self.components.range(..=n).map(|(&d, v)| (d, v.clone())).collect(),
        }
    }
}

fn truncate(x: &NicholsElement, cap: Option<usize>) -> NicholsElement {
    match cap {
        Some(c) => x.truncated(c),
        None => x.clone(),
    }
}

fn degree_zero(r: usize) -> DegreeData {
    DegreeData {
        dim: 1,
        labels: vec![Vec::new()],
        parents: vec![(usize::MAX, usize::MAX)],
        yd: vec![0],
        left_mul: Vec::new(),
        deriv: vec![vec![SparseVec::new()]; r],
        reflect: vec![vec![unit_vec(0)]; r],
    }
}

fn signed(v: SparseVec, negative: bool) -> SparseVec {
    if negative {
        scaled(&v, &-Q::one())
    } else {
        v
    }
}

fn apply_cols(cols: &[SparseVec], x: &SparseVec) -> SparseVec {
    let mut y = SparseVec::new();
    for (&j, v) in x {
        axpy(&mut y, v, &cols[j]);
    }
    y
}

impl Tower {
    /// The tower with only `B_0 = Q` computed.
    pub fn new(rs: RootSystem) -> Self {
        let r = rs.num_positive();
        Tower {
            rs,
            degrees: vec![degree_zero(r)],
        }
    }

    pub fn build(rs: RootSystem, max_degree: usize) -> Self {
        let mut t = Self::new(rs);
        t.extend_to(max_degree);
        t
    }

    /// Reassemble a tower from stored degrees; see [`Tower::verify_degree`].
    pub fn from_degrees(rs: RootSystem, degrees: Vec<DegreeData>) -> Result<Self> {
        if degrees.first().map(|d| d.dim) != Some(1) {
            return Err(Error::Precondition("degree 0 must be one-dimensional".into()));
        }
        Ok(Tower { rs, degrees })
    }

    /// Append a stored degree after checking its shape against the tower.
    pub fn push_degree(&mut self, d: DegreeData) -> Result<()> {
        let r = self.rs.num_positive();
        let prev = self.degrees.last().map(|p| p.dim).unwrap_or(0);
        let n = d.dim;
        let fits = |cols: &[Vec<SparseVec>], len: usize, bound: usize| {
            cols.len() == r && cols.iter().all(|c| c.len() == len && c.iter().all(|v| v.keys().all(|&i| i < bound)))
        };
        let ok = !self.is_closed()
            && d.labels.len() == n
            && d.parents.len() == n
            && d.yd.len() == n
            && d.labels.iter().all(|w| w.len() == self.degrees.len() && w.iter().all(|&l| l < r))
            && d.parents.iter().all(|&(a, j)| a < r && j < prev)
            && d.yd.iter().all(|&w| w < self.rs.weyl_order())
            && fits(&d.left_mul, prev, n)
            && fits(&d.deriv, n, prev)
            && fits(&d.reflect, n, n);
        if !ok {
            return Err(Error::Precondition(format!(
                "stored degree {} does not fit the tower",
                self.degrees.len()
            )));
        }
        self.degrees.push(d);
        Ok(())
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn degrees(&self) -> &[DegreeData] {
        &self.degrees
    }

    pub fn degree(&self, n: usize) -> Option<&DegreeData> {
        self.degrees.get(n)
    }

    /// Highest computed degree.
    pub fn computed_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    /// True once a degree of dimension zero has been reached.
    pub fn is_closed(&self) -> bool {
        self.degrees.last().map(|d| d.dim == 0).unwrap_or(false)
    }

    /// Highest degree with nonzero dimension among the computed ones.
    pub fn top_degree(&self) -> usize {
        self.degrees.iter().rposition(|d| d.dim > 0).unwrap_or(0)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.degrees.iter().map(|d| d.dim).sum()
    }

    pub fn dim(&self, n: usize) -> Result<usize> {
        match self.degrees.get(n) {
            Some(d) => Ok(d.dim),
            None if self.is_closed() => Ok(0),
            None => Err(self.truncated(n)),
        }
    }

    fn truncated(&self, needed: usize) -> Error {
        Error::Truncated {
            needed,
            computed: self.computed_degree(),
        }
    }

    pub fn extend_to(&mut self, max_degree: usize) {
        while self.computed_degree() < max_degree && !self.is_closed() {
            let next = self.compute_degree(self.degrees.len());
            self.degrees.push(next);
        }
    }

    /// Compute `B_n` from `B_{n-1}` and `B_{n-2}`.
    pub fn compute_degree(&self, n: usize) -> DegreeData {
        assert!(n >= 1 && n <= self.degrees.len());
        let rs = &self.rs;
        let r = rs.num_positive();
        let prev = &self.degrees[n - 1];
        let dp = prev.dim;

        let mut groups: BTreeMap<usize, (Echelon, Vec<usize>)> = BTreeMap::new();
        let mut data = DegreeData {
            dim: 0,
            labels: Vec::new(),
            parents: Vec::new(),
            yd: Vec::new(),
            left_mul: vec![Vec::with_capacity(dp); r],
            deriv: vec![Vec::new(); r],
            reflect: vec![Vec::new(); r],
        };

        for alpha in 0..r {
            for j in 0..dp {
                let yd = rs.left_reflection(alpha, prev.yd[j]);
                let parts = self.candidate_derivatives(n, alpha, j);
                let mut tuple = SparseVec::new();
                for (beta, part) in parts.iter().enumerate() {
                    for (&k, v) in part {
                        tuple.insert(beta * dp + k, v.clone());
                    }
                }
                let (ech, globals) = groups.entry(yd).or_insert_with(|| (Echelon::new(), Vec::new()));
                match ech.insert(&tuple) {
                    Insertion::Independent(local) => {
                        debug_assert_eq!(local, globals.len());
                        let k = data.dim;
                        globals.push(k);
                        data.dim += 1;
                        let mut label = vec![alpha];
                        label.extend_from_slice(&prev.labels[j]);
                        data.labels.push(label);
                        data.parents.push((alpha, j));
                        data.yd.push(yd);
                        for (beta, part) in parts.into_iter().enumerate() {
                            data.deriv[beta].push(part);
                        }
                        data.left_mul[alpha].push(unit_vec(k));
                    }
                    Insertion::Dependent(comb) => {
                        let coords = comb.into_iter().map(|(l, c)| (globals[l], c)).collect();
                        data.left_mul[alpha].push(coords);
                    }
                }
            }
        }

        // s_a([α] b_j) = s_a([α]) s_a(b_j)
        for a in 0..r {
            let mut col = Vec::with_capacity(data.dim);
            for k in 0..data.dim {
                let (alpha, j) = data.parents[k];
                let img = rs.reflect_root(a, SignedRoot::pos(alpha));
                let sb = &prev.reflect[a][j];
                let v = apply_cols(&data.left_mul[img.index], sb);
                col.push(signed(v, img.negative));
            }
            data.reflect[a] = col;
        }
        data
    }

    /// `D_β([α] b_j)` in `B_{n-1}` for every `β`.
    fn candidate_derivatives(&self, n: usize, alpha: usize, j: usize) -> Vec<SparseVec> {
        let rs = &self.rs;
        let r = rs.num_positive();
        let prev = &self.degrees[n - 1];
        (0..r)
            .map(|beta| {
                let mut part = if beta == alpha { unit_vec(j) } else { SparseVec::new() };
                if n >= 2 {
                    let db = &prev.deriv[beta][j];
                    if !db.is_empty() {
                        let img = rs.reflect_root(beta, SignedRoot::pos(alpha));
                        let lv = apply_cols(&prev.left_mul[img.index], db);
                        let c = if img.negative { -Q::one() } else { Q::one() };
                        axpy(&mut part, &c, &lv);
                    }
                }
                part
            })
            .collect()
    }

    /// Recompute degree `n` and compare it with the stored data.
    pub fn verify_degree(&self, n: usize) -> bool {
        n >= 1 && n < self.degrees.len() && self.compute_degree(n) == self.degrees[n]
    }

    /// `[α]` for a signed root.
    pub fn generator(&self, alpha: SignedRoot) -> NicholsElement {
        let v = unit_vec(alpha.index);
        NicholsElement::from_component(1, signed(v, alpha.negative))
    }

    /// `L_α v` for `v ∈ B_q`, with `α` positive; `None` when the result
    /// lies in a degree known to vanish.
    fn lmul_vec(&self, alpha: usize, q: usize, v: &SparseVec, cap: Option<usize>) -> Result<Option<SparseVec>> {
        if cap.is_some_and(|c| q + 1 > c) {
            return Ok(None);
        }
        match self.degrees.get(q + 1) {
            Some(d) => Ok(Some(apply_cols(&d.left_mul[alpha], v))),
            None if self.is_closed() => Ok(None),
            None => Err(self.truncated(q + 1)),
        }
    }

    /// `[α] · x`.
    pub fn left_multiply(&self, alpha: SignedRoot, x: &NicholsElement) -> Result<NicholsElement> {
        self.left_multiply_capped(alpha, x, None)
    }

    /// `[α] · x` in `B / B_{>cap}` when `cap` is given.
    pub fn left_multiply_capped(&self, alpha: SignedRoot, x: &NicholsElement, cap: Option<usize>) -> Result<NicholsElement> {
        let mut out = NicholsElement::zero();
        let c = if alpha.negative { -Q::one() } else { Q::one() };
        for (d, v) in x.components() {
            if let Some(w) = self.lmul_vec(alpha.index, d, v, cap)? {
                out.add_component(d + 1, &w, &c);
            }
        }
        Ok(out)
    }

    /// `x · y`, expanding `x` over the monomial basis.
    pub fn multiply(&self, x: &NicholsElement, y: &NicholsElement) -> Result<NicholsElement> {
        self.multiply_capped(x, y, None)
    }

    /// `x · y` in the quotient `B / B_{>cap}` when `cap` is given.  Since
    /// `B_{>cap}` is an ideal, this is again an associative product.
    pub fn multiply_capped(&self, x: &NicholsElement, y: &NicholsElement, cap: Option<usize>) -> Result<NicholsElement> {
        let x = &truncate(x, cap);
        let y = &truncate(y, cap);
        let mut out = NicholsElement::zero();
        if x.is_zero() || y.is_zero() {
            return Ok(out);
        }
        let top = x.max_degree().unwrap_or(0);
        // needed[m]: basis vectors of degree m whose product with y is used
        let mut needed: Vec<BTreeMap<usize, ()>> = vec![BTreeMap::new(); top + 1];
        for (d, v) in x.components() {
            for &k in v.keys() {
                needed[d].insert(k, ());
            }
        }
        for m in (1..=top).rev() {
            let parents: Vec<usize> = needed[m].keys().map(|&k| self.degrees[m].parents[k].1).collect();
            for j in parents {
                needed[m - 1].insert(j, ());
            }
        }
        // prods[m][k] = b_k · y
        let mut prods: Vec<BTreeMap<usize, NicholsElement>> = vec![BTreeMap::new(); top + 1];
        prods[0].insert(0, y.clone());
        for m in 1..=top {
            for &k in needed[m].keys() {
                let (alpha, j) = self.degrees[m].parents[k];
                let p = self.left_multiply_capped(SignedRoot::pos(alpha), &prods[m - 1][&j], cap)?;
                prods[m].insert(k, p);
            }
        }
        for (d, v) in x.components() {
            for (k, c) in v {
                let p = &prods[d][k];
                for (e, w) in p.components() {
                    out.add_component(e, w, c);
                }
            }
        }
        Ok(out)
    }

    pub fn d_alpha(&self, alpha: SignedRoot, x: &NicholsElement) -> NicholsElement {
        let mut out = NicholsElement::zero();
        let c = if alpha.negative { -Q::one() } else { Q::one() };
        for (d, v) in x.components() {
            if d == 0 {
                continue;
            }
            let w = apply_cols(&self.degrees[d].deriv[alpha.index], v);
            out.add_component(d - 1, &w, &c);
        }
        out
    }

    /// `s_a(x)` for the reflection in the positive root `a`.
    pub fn reflect(&self, a: usize, x: &NicholsElement) -> NicholsElement {
        let mut out = NicholsElement::zero();
        for (d, v) in x.components() {
            let w = apply_cols(&self.degrees[d].reflect[a], v);
            out.add_component(d, &w, &Q::one());
        }
        out
    }

    pub fn w_act(&self, w: &WeylElement, x: &NicholsElement) -> NicholsElement {
        let word = self.rs.reduced_word(w);
        let mut out = x.clone();
        for &i in word.iter().rev() {
            out = self.reflect(self.rs.simple_indices()[i], &out);
        }
        out
    }

    /// Coordinates of a homogeneous tensor in its degree.
    pub fn tensor_coords(&self, t: &TensorElement) -> Result<SparseVec> {
        let n = t.degree();
        if n > self.computed_degree() {
            return if self.is_closed() {
                Ok(SparseVec::new())
            } else {
                Err(self.truncated(n))
            };
        }
        Ok(self.coords_rec(n, t.terms().map(|(w, c)| (w.as_slice(), c.clone())).collect()))
    }

    fn coords_rec(&self, n: usize, terms: Vec<(&[usize], Q)>) -> SparseVec {
        if n == 0 {
            let c: Q = terms.into_iter().map(|(_, c)| c).sum();
            return if c.is_zero() { SparseVec::new() } else { [(0, c)].into_iter().collect() };
        }
        let mut by_first: BTreeMap<usize, Vec<(&[usize], Q)>> = BTreeMap::new();
        for (w, c) in terms {
            by_first.entry(w[0]).or_default().push((&w[1..], c));
        }
        let mut out = SparseVec::new();
        for (alpha, rest) in by_first {
            let v = self.coords_rec(n - 1, rest);
            axpy(&mut out, &Q::one(), &apply_cols(&self.degrees[n].left_mul[alpha], &v));
        }
        out
    }

    pub fn element_from_tensor(&self, t: &TensorElement) -> Result<NicholsElement> {
        Ok(NicholsElement::from_component(t.degree(), self.tensor_coords(t)?))
    }

    /// The homogeneous tensor `Σ x_k · labels[k]` representing `x_n`.
    pub fn component_tensor(&self, x: &NicholsElement, n: usize) -> TensorElement {
        let mut t = TensorElement::zero(n);
        for (k, c) in x.component(n) {
            t.add_term(self.degrees[n].labels[k].clone(), c);
        }
        t
    }

    /// Whether `t` vanishes in `B(V_W)`.  Degrees beyond the computed range
    /// are reduced with the derivatives `D_α` until they fit.
    pub fn is_zero_in_b(&self, t: &TensorElement) -> bool {
        if t.is_zero() {
            return true;
        }
        let n = t.degree();
        if n > self.computed_degree() {
            if self.is_closed() {
                return true;
            }
            return (0..self.rs.num_positive())
                .all(|a| self.is_zero_in_b(&d_alpha_tensor(&self.rs, SignedRoot::pos(a), t)));
        }
        self.tensor_coords(t).map(|v| v.is_empty()).unwrap_or(false)
    }

    /// A sequence of positive roots `(α_1, …, α_n)` with
    /// `D_{α_n} ⋯ D_{α_1} t ≠ 0`, if `t` is nonzero in `B(V_W)`.
    pub fn nonzero_witness(&self, t: &TensorElement) -> Option<Vec<usize>> {
        if self.is_zero_in_b(t) {
            return None;
        }
        if t.degree() == 0 {
            return Some(Vec::new());
        }
        for a in 0..self.rs.num_positive() {
            let d = d_alpha_tensor(&self.rs, SignedRoot::pos(a), t);
            if let Some(mut rest) = self.nonzero_witness(&d) {
                rest.insert(0, a);
                return Some(rest);
            }
        }
        None
    }

    /// Zero test cross-checked against `σ_n` when `n ≤ oracle_bound`.
    pub fn is_zero_checked(&self, t: &TensorElement, oracle_bound: usize) -> Result<bool> {
        let tower = self.is_zero_in_b(t);
        if t.degree() <= oracle_bound {
            let sigma = symmetrizer(&self.rs, t, oracle_bound)?.is_zero();
            if sigma != tower {
                return Err(Error::Internal(format!(
                    "derivative test says {tower} but the symmetrizer says {sigma} for {t}"
                )));
            }
        }
        Ok(tower)
    }

    /// `dim` of the kernel of the stacked `D_α` on `B_n`.
    pub fn common_kernel_dim(&self, n: usize) -> Result<usize> {
        let d = self.degrees.get(n).ok_or_else(|| self.truncated(n))?;
        if n == 0 {
            return Ok(1);
        }
        let dp = self.degrees[n - 1].dim;
        let mut ech = Echelon::new();
        for k in 0..d.dim {
            let mut tuple = SparseVec::new();
            for beta in 0..self.rs.num_positive() {
                for (&i, v) in &d.deriv[beta][k] {
                    tuple.insert(beta * dp + i, v.clone());
                }
            }
            ech.insert(&tuple);
        }
        Ok(d.dim - ech.rank())
    }

    /// Basis expansion with root labels, e.g. `1 + [1] - 1/2*[2][1]`.
    pub fn format_element(&self, x: &NicholsElement) -> String {
        let mut s = String::new();
        for (d, v) in x.components() {
            for (k, c) in v {
                if !s.is_empty() {
                    s.push_str(" + ");
                }
                let label = &self.degrees[d].labels[*k];
                if label.is_empty() {
                    s.push_str(&format!("{c}"));
                } else {
                    if !c.is_one() {
                        s.push_str(&format!("{c}*"));
                    }
                    for l in label {
                        s.push_str(&format!("[{}]", l + 1));
                    }
                }
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

/// A relation as `(coefficient, word)` with letters `1..=k` naming the
/// roots of a rank-two subsystem in angular order.
pub type Pattern = &'static [(i64, &'static [usize])];

const A1XA1_RELATIONS: &[Pattern] = &[&[(1, &[1, 2]), (-1, &[2, 1])]];

const A2_RELATIONS: &[Pattern] = &[&[(1, &[1, 2]), (1, &[2, 3]), (-1, &[3, 1])]];

const B2_RELATIONS: &[Pattern] = &[
    &[(1, &[1, 2]), (1, &[2, 3]), (1, &[3, 4]), (-1, &[4, 1])],
    &[(1, &[1, 2, 3, 2]), (1, &[2, 3, 2, 1]), (1, &[3, 2, 1, 2]), (1, &[2, 1, 2, 3])],
    &[(1, &[2, 3, 4, 3]), (1, &[3, 4, 3, 2]), (1, &[4, 3, 2, 3]), (1, &[3, 2, 3, 4])],
    &[(1, &[1, 2, 3, 4]), (-1, &[4, 3, 2, 1])],
];

const G2_RELATIONS: &[Pattern] = &[
    &[(1, &[1, 2]), (1, &[2, 3]), (1, &[3, 4]), (1, &[4, 5]), (1, &[5, 6]), (-1, &[6, 1])],
    &[
        (1, &[1, 2, 1, 3]),
        (1, &[1, 3, 1, 2]),
        (1, &[1, 3, 2, 3]),
        (-1, &[2, 1, 3, 1]),
        (-1, &[3, 2, 3, 1]),
        (-1, &[3, 1, 2, 1]),
    ],
    &[
        (1, &[6, 5, 6, 4]),
        (1, &[6, 4, 6, 5]),
        (1, &[6, 4, 5, 4]),
        (-1, &[5, 6, 4, 6]),
        (-1, &[4, 5, 4, 6]),
        (-1, &[4, 6, 5, 6]),
    ],
    &[
        (1, &[1, 2, 4, 5]),
        (1, &[2, 3, 4, 5]),
        (1, &[2, 3, 5, 6]),
        (1, &[5, 3, 4, 2]),
        (-1, &[3, 4, 2, 3]),
        (-1, &[3, 4, 3, 4]),
        (-1, &[4, 5, 3, 4]),
        (-1, &[6, 4, 3, 1]),
    ],
    &[
        (1, &[5, 4, 2, 1]),
        (1, &[5, 4, 3, 2]),
        (1, &[6, 5, 3, 2]),
        (1, &[2, 4, 3, 5]),
        (-1, &[3, 2, 4, 3]),
        (-1, &[4, 3, 4, 3]),
        (-1, &[4, 3, 5, 4]),
        (-1, &[1, 3, 4, 6]),
    ],
    &[(1, &[1, 2, 3, 4, 5, 6]), (-1, &[6, 5, 4, 3, 2, 1])],
];

pub fn relation_patterns(ty: Rank2Type) -> &'static [Pattern] {
    match ty {
        Rank2Type::A1xA1 => A1XA1_RELATIONS,
        Rank2Type::A2 => A2_RELATIONS,
        Rank2Type::B2 | Rank2Type::C2 => B2_RELATIONS,
        Rank2Type::G2 => G2_RELATIONS,
    }
}

/// Instantiate a pattern on the given roots.
pub fn pattern_tensor(pattern: Pattern, roots: &[usize]) -> TensorElement {
    let degree = pattern[0].1.len();
    let mut t = TensorElement::zero(degree);
    for &(c, w) in pattern {
        t.add_term(w.iter().map(|&l| roots[l - 1]).collect(), q(c));
    }
    t
}

fn roots_label(roots: &[usize]) -> String {
    let parts: Vec<String> = roots.iter().map(|r| format!("{}", r + 1)).collect();
    format!("[{}]", parts.join(","))
}

/// Named relation tensors: every tabulated rank-two relation on every
/// rank-two subsystem, `[α]^2` for every root, and `[a][b] - [b][a]` for
/// every pair of distinct roots with commuting reflections.
pub fn relation_tensors(rs: &RootSystem) -> Vec<(String, String, TensorElement)> {
    let mut out = Vec::new();
    for sub in rs.rank2_subsystems() {
        for (k, p) in relation_patterns(sub.ty).iter().enumerate() {
            out.push((
                String::from("rank2_relation"),
                format!("{} {} #{}", sub.ty.label(), roots_label(&sub.roots), k + 1),
                pattern_tensor(p, &sub.roots),
            ));
        }
    }
    let r = rs.num_positive();
    for a in 0..r {
        out.push((
            String::from("square_zero"),
            format!("[{}]^2", a + 1),
            TensorElement::word(&[a, a]),
        ));
    }
    for a in 0..r {
        for b in (a + 1)..r {
            if rs.reflect_root(a, SignedRoot::pos(b)) == SignedRoot::pos(b) {
                out.push((
                    String::from("commuting_pair"),
                    format!("[{}][{}]", a + 1, b + 1),
                    &TensorElement::word(&[a, b]) - &TensorElement::word(&[b, a]),
                ));
            }
        }
    }
    out
}

fn zero_outcome(tower: &Tower, check: &str, instance: String, t: &TensorElement, oracle_bound: usize) -> CheckOutcome {
    match tower.is_zero_checked(t, oracle_bound) {
        Ok(true) => CheckOutcome::pass(check, instance),
        Ok(false) => {
            let path = tower.nonzero_witness(t).unwrap_or_default();
            let path: Vec<String> = path.iter().map(|a| format!("D_{}", a + 1)).collect();
            CheckOutcome::fail(check, instance, format!("nonzero after {}", path.join(" ")))
        }
        Err(e @ Error::Truncated { .. }) => CheckOutcome::skipped(check, instance, format!("{e}")),
        Err(e) => CheckOutcome::fail(check, instance, format!("{e}")),
    }
}

pub fn check_relations(tower: &Tower, oracle_bound: usize) -> Vec<CheckOutcome> {
    relation_tensors(tower.root_system())
        .into_iter()
        .map(|(check, instance, t)| zero_outcome(tower, &check, instance, &t, oracle_bound))
        .collect()
}

/// `Π_k (1 + [a_k])` expanded into homogeneous tensors.
pub fn h_product_tensors(roots: &[usize]) -> Vec<TensorElement> {
    let n = roots.len();
    let mut out: Vec<TensorElement> = (0..=n).map(TensorElement::zero).collect();
    for mask in 0u32..(1 << n) {
        let word: Word = (0..n).filter(|&k| mask & (1 << k) != 0).map(|k| roots[k]).collect();
        out[word.len()].add_term(word, Q::one());
    }
    out
}

/// The h-product identity of every rank-two subsystem, one outcome per
/// subsystem and degree.
pub fn yang_baxter_check(tower: &Tower, oracle_bound: usize) -> Vec<CheckOutcome> {
    let rs = tower.root_system();
    let mut out = Vec::new();
    for sub in rs.rank2_subsystems() {
        let rev: Vec<usize> = sub.roots.iter().rev().copied().collect();
        let lhs = h_product_tensors(&sub.roots);
        let rhs = h_product_tensors(&rev);
        for (d, (l, r)) in lhs.iter().zip(&rhs).enumerate() {
            let instance = format!("{} {} degree {d}", sub.ty.label(), roots_label(&sub.roots));
            out.push(zero_outcome(tower, "yang_baxter", instance, &(l - r), oracle_bound));
        }
    }
    out
}

/// Triviality of `⋂ Ker D_α` on `B_n` for `1 ≤ n ≤ max`, and `B_0` in degree 0.
pub fn common_kernel_check(tower: &Tower, max: usize) -> Vec<CheckOutcome> {
    (0..=max)
        .map(|n| {
            let instance = format!("{} degree {n}", tower.root_system().kind());
            match tower.common_kernel_dim(n) {
                Ok(k) => {
                    let expect = if n == 0 { 1 } else { 0 };
                    CheckOutcome::verdict("common_kernel", instance, k == expect, || {
                        format!("kernel dimension {k}")
                    })
                }
                Err(e) => CheckOutcome::new("common_kernel", instance, Status::Skipped, Some(format!("{e}"))),
            }
        })
        .collect()
}

/// `[dim B_0, dim B_1, …]` over the computed degrees.
pub fn hilbert(tower: &Tower) -> Vec<usize> {
    tower.dims()
}

pub fn is_palindromic(dims: &[usize]) -> bool {
    let trimmed: Vec<usize> = {
        let end = dims.iter().rposition(|&d| d > 0).map(|p| p + 1).unwrap_or(0);
        dims[..end].to_vec()
    };
    trimmed.iter().eq(trimmed.iter().rev())
}

/// W-degree of a monomial basis vector, for homogeneity checks.
pub fn label_degree(tower: &Tower, n: usize, k: usize) -> usize {
    yd_degree_index(tower.root_system(), &tower.degrees[n].labels[k])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tower(label: &str, max: usize) -> Tower {
        Tower::build(RootSystem::from_label(label).unwrap(), max)
    }

    #[test]
    fn a2_hilbert_series() {
        let t = tower("A2", 8);
        assert_eq!(t.dims(), vec![1, 3, 4, 3, 1, 0]);
        assert!(t.is_closed());
        assert_eq!(t.total_dim(), 12);
        assert_eq!(t.top_degree(), 4);
        assert!(is_palindromic(&t.dims()));
    }

    #[test]
    fn degree_one_derivatives_are_kronecker() {
        for l in ["A2", "B2", "G2"] {
            let t = tower(l, 1);
            let d = t.degree(1).unwrap();
            assert_eq!(d.dim, t.root_system().num_positive());
            for a in 0..d.dim {
                for b in 0..d.dim {
                    let expect = if a == b { unit_vec(0) } else { SparseVec::new() };
                    assert_eq!(d.deriv[a][b], expect);
                }
            }
        }
    }

    #[test]
    fn multiplication_examples() {
        let t = tower("A2", 8);
        let a = |i| t.generator(SignedRoot::pos(i));
        let one = NicholsElement::one();
        assert_eq!(t.multiply(&one, &a(1)).unwrap(), a(1));
        assert!(t.multiply(&a(0), &a(0)).unwrap().is_zero());
        let b2 = tower("B2", 3);
        let g = |i| b2.generator(SignedRoot::pos(i));
        // e1 and e2 commute
        assert_eq!(b2.multiply(&g(1), &g(3)).unwrap(), b2.multiply(&g(3), &g(1)).unwrap());
        let d = t.d_alpha(SignedRoot::pos(0), &t.multiply(&a(0), &a(1)).unwrap());
        assert_eq!(d, a(1));
        assert!(t.d_alpha(SignedRoot::pos(0), &one).is_zero());
        assert_eq!(t.d_alpha(SignedRoot::pos(2), &a(2)), one);
        assert_eq!(t.d_alpha(SignedRoot::neg(2), &a(2)), one.scale(&q(-1)));
    }

    #[test]
    fn zero_test_examples() {
        let t = tower("A2", 8);
        assert!(t.is_zero_checked(&TensorElement::word(&[1, 1]), 6).unwrap());
        let rel = pattern_tensor(A2_RELATIONS[0], &[0, 1, 2]);
        assert!(t.is_zero_checked(&rel, 6).unwrap());
        assert!(!t.is_zero_checked(&TensorElement::word(&[0, 1]), 6).unwrap());
        assert_eq!(t.nonzero_witness(&TensorElement::word(&[0, 1])), Some(vec![0, 1]));
    }

    #[test]
    fn truncation_is_an_error() {
        let t = tower("G2", 2);
        let x = t.multiply(&t.generator(SignedRoot::pos(0)), &t.generator(SignedRoot::pos(1))).unwrap();
        let err = t.multiply(&x, &t.generator(SignedRoot::pos(2))).unwrap_err();
        assert_eq!(err, Error::Truncated { needed: 3, computed: 2 });
        // zero tests still work above the computed range
        assert!(t.is_zero_in_b(&TensorElement::word(&[0, 1, 1])));
    }

    #[test]
    fn a2_relations_and_yang_baxter() {
        let t = tower("A2", 8);
        for o in check_relations(&t, 6).into_iter().chain(yang_baxter_check(&t, 6)) {
            assert!(o.passed(), "{o:?}");
        }
        assert!(common_kernel_check(&t, 4).iter().all(|o| o.passed()));
    }

    #[test]
    fn basis_vectors_are_yd_homogeneous_and_reflections_square_to_one() {
        let t = tower("B2", 10);
        let rs = t.root_system().clone();
        for n in 0..=t.computed_degree() {
            let d = t.degree(n).unwrap();
            for k in 0..d.dim {
                assert_eq!(label_degree(&t, n, k), d.yd[k]);
                let x = NicholsElement::from_component(n, unit_vec(k));
                for a in 0..rs.num_positive() {
                    assert_eq!(t.reflect(a, &t.reflect(a, &x)), x);
                }
            }
        }
    }
}
