//! The Yetter–Drinfeld module `V_W`, its braiding and the Woronowicz
//! symmetrizer.
//!
//! `V_W` has basis `[α]`, `α ∈ Δ_+`, with `[-α] = -[α]`; the letter `[α]` has
//! W-degree `s_α` and `w[α] = [w(α)]`.  The braiding is
//! `ψ([x] ⊗ [y]) = [s_x(y)] ⊗ [x]`.  Negative letters produced by a
//! reflection are normalized immediately and their sign moved into the
//! coefficient.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{add_entry, Q};
use crate::rootsys::{RootSystem, SignedRoot, WeylElement};

/// A monomial `[β_1] ⊗ ⋯ ⊗ [β_n]`, by positive-root indices.
pub type Word = Vec<usize>;

/// A homogeneous element of `V^{⊗n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    degree: usize,
    terms: BTreeMap<Word, Q>,
}

impl TensorElement {
    pub fn zero(degree: usize) -> Self {
        TensorElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn word(letters: &[usize]) -> Self {
        let mut t = Self::zero(letters.len());
        t.add_term(letters.to_vec(), Q::one());
        t
    }

    /// A word of signed letters, with the sign product as coefficient.
    pub fn signed_word(letters: &[SignedRoot]) -> Self {
        let sign = letters.iter().filter(|l| l.negative).count() % 2;
        let mut t = Self::zero(letters.len());
        t.add_term(
            letters.iter().map(|l| l.index).collect(),
            if sign == 1 { -Q::one() } else { Q::one() },
        );
        t
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, word: Word, c: Q) {
        assert_eq!(word.len(), self.degree, "word length must match the degree");
        add_entry(&mut self.terms, word, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &[usize]) -> Q {
        self.terms.get(word).cloned().unwrap_or_else(Q::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut t = Self::zero(self.degree);
        for (w, v) in &self.terms {
            t.add_term(w.clone(), v * c);
        }
        t
    }

    /// `self ⊗ other`, the product in the tensor algebra.
    pub fn tensor(&self, other: &TensorElement) -> Self {
        let mut t = Self::zero(self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                t.add_term(w, x * y);
            }
        }
        t
    }
}

impl Add<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        assert_eq!(self.degree, rhs.degree);
        let mut t = self.clone();
        for (w, v) in &rhs.terms {
            t.add_term(w.clone(), v.clone());
        }
        t
    }
}

impl Sub<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        assert_eq!(self.degree, rhs.degree);
        let mut t = self.clone();
        for (w, v) in &rhs.terms {
            t.add_term(w.clone(), -v);
        }
        t
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for l in w {
                write!(f, "[{}]", l + 1)?;
            }
        }
        Ok(())
    }
}

/// Index in `weyl_enumerate` of `s_{β_1} ⋯ s_{β_n}`.
pub fn yd_degree_index(rs: &RootSystem, word: &[usize]) -> usize {
    word.iter()
        .rev()
        .fold(0, |w, &b| rs.left_reflection(b, w))
}

pub fn yd_degree(rs: &RootSystem, word: &[usize]) -> WeylElement {
    rs.weyl_element(yd_degree_index(rs, word)).clone()
}

fn check_position(pos: usize, degree: usize) -> Result<()> {
    if degree < 2 || pos + 1 >= degree {
        return Err(Error::Precondition(format!(
            "braid position {} out of range for degree {degree}",
            pos + 1
        )));
    }
    Ok(())
}

/// `ψ` on one monomial at the 0-based position `pos`; returns the sign.
pub fn braid_word(rs: &RootSystem, pos: usize, word: &mut [usize]) -> bool {
    let (x, y) = (word[pos], word[pos + 1]);
    let img = rs.reflect_root(x, SignedRoot::pos(y));
    word[pos] = img.index;
    word[pos + 1] = x;
    img.negative
}

/// `ψ^{-1}` on one monomial: `[c] ⊗ [d] ↦ [d] ⊗ [s_d(c)]`.
pub fn braid_word_inverse(rs: &RootSystem, pos: usize, word: &mut [usize]) -> bool {
    let (c, d) = (word[pos], word[pos + 1]);
    let img = rs.reflect_root(d, SignedRoot::pos(c));
    word[pos] = d;
    word[pos + 1] = img.index;
    img.negative
}

fn map_monomials<F>(t: &TensorElement, mut f: F) -> TensorElement
where
    F: FnMut(&mut [usize]) -> bool,
{
    let mut out = TensorElement::zero(t.degree);
    for (w, c) in &t.terms {
        let mut w = w.clone();
        let neg = f(&mut w);
        out.add_term(w, if neg { -c } else { c.clone() });
    }
    out
}

/// `ψ_i` acting on the factors `pos` and `pos + 1` (0-based).
pub fn braid_apply(rs: &RootSystem, pos: usize, t: &TensorElement) -> Result<TensorElement> {
    check_position(pos, t.degree)?;
    Ok(map_monomials(t, |w| braid_word(rs, pos, w)))
}

pub fn braid_apply_inverse(rs: &RootSystem, pos: usize, t: &TensorElement) -> Result<TensorElement> {
    check_position(pos, t.degree)?;
    Ok(map_monomials(t, |w| braid_word_inverse(rs, pos, w)))
}

/// A reduced word `(i_1, …, i_l)` (0-based simple transpositions) with
/// `perm = s_{i_1} ⋯ s_{i_l}`, for a permutation in one-line notation.
pub fn permutation_reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut found = Vec::new();
    // strip right descents: p = p' s_i
    while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
        p.swap(i, i + 1);
        found.push(i);
    }
    found.reverse();
    found
}

fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter().all(|&x| x < perm.len() && !core::mem::replace(&mut seen[x], true))
}

/// `Ψ_w = ψ_{i_1} ⋯ ψ_{i_l}` along the given word of simple transpositions.
pub fn psi_word(rs: &RootSystem, word: &[usize], t: &TensorElement) -> Result<TensorElement> {
    let mut out = t.clone();
    for &i in word.iter().rev() {
        out = braid_apply(rs, i, &out)?;
    }
    Ok(out)
}

pub fn psi_perm(rs: &RootSystem, perm: &[usize], t: &TensorElement) -> Result<TensorElement> {
    if perm.len() != t.degree || !is_permutation(perm) {
        return Err(Error::Precondition(format!(
            "{perm:?} is not a permutation of {} letters",
            t.degree
        )));
    }
    psi_word(rs, &permutation_reduced_word(perm), t)
}

/// All of `S_n` with `Ψ_w = ψ_{pos} Ψ_{parent}` for every non-identity `w`.
#[derive(Clone, Debug)]
pub struct PermTable {
    n: usize,
    /// `(parent, pos)`, parents precede children; entry 0 is the identity.
    steps: Vec<(usize, usize)>,
}

impl PermTable {
    pub fn new(n: usize) -> Self {
        let id: Vec<usize> = (0..n).collect();
        let mut index = BTreeMap::new();
        index.insert(id.clone(), 0usize);
        let mut perms = vec![id];
        let mut steps = vec![(0usize, 0usize)];
        let mut k = 0;
        while k < perms.len() {
            for i in 0..n.saturating_sub(1) {
                // s_i w, a left multiplication, swaps the values i and i+1
                let next: Vec<usize> = perms[k]
                    .iter()
                    .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
                    .collect();
                if !index.contains_key(&next) {
                    index.insert(next.clone(), perms.len());
                    perms.push(next);
                    steps.push((k, i));
                }
            }
            k += 1;
        }
        PermTable { n, steps }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// `(parent, pos)` for entry `k`: it is `s_pos` applied after `parent`.
    pub fn step(&self, k: usize) -> (usize, usize) {
        self.steps[k]
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// All `Ψ_w(word)` as `(word, negative)`, one per permutation.
    pub fn images(&self, rs: &RootSystem, word: &[usize]) -> Vec<(Word, bool)> {
        let mut out: Vec<(Word, bool)> = Vec::with_capacity(self.steps.len());
        out.push((word.to_vec(), false));
        for &(parent, pos) in &self.steps[1..] {
            let (mut w, neg) = out[parent].clone();
            let flip = braid_word(rs, pos, &mut w);
            out.push((w, neg != flip));
        }
        out
    }
}

/// `σ_n = Σ_{w ∈ S_n} Ψ_w`, for `n` up to `oracle_bound`.
pub fn symmetrizer(rs: &RootSystem, t: &TensorElement, oracle_bound: usize) -> Result<TensorElement> {
    if t.degree > oracle_bound {
        return Err(Error::Capability(format!(
            "symmetrizer in degree {} exceeds the oracle bound {oracle_bound}",
            t.degree
        )));
    }
    let table = PermTable::new(t.degree);
    Ok(symmetrize_with(rs, &table, t))
}

pub fn symmetrize_with(rs: &RootSystem, table: &PermTable, t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero(t.degree);
    for (w, c) in &t.terms {
        for (img, neg) in table.images(rs, w) {
            out.add_term(img, if neg { -c } else { c.clone() });
        }
    }
    out
}

/// Letterwise action `w([β_1] ⊗ ⋯) = [w β_1] ⊗ ⋯`.
pub fn w_act_tensor(w: &WeylElement, t: &TensorElement) -> TensorElement {
    map_monomials(t, |word| {
        let mut neg = false;
        for l in word.iter_mut() {
            let img = w.act_root(SignedRoot::pos(*l));
            *l = img.index;
            neg ^= img.negative;
        }
        neg
    })
}

/// The braided derivative on the tensor algebra,
/// `D_α(x_1 ⋯ x_n) = Σ_{x_k = α} s_α(x_1) ⋯ s_α(x_{k-1}) x_{k+1} ⋯ x_n`,
/// and `D_{-α} = -D_α`.
pub fn d_alpha_tensor(rs: &RootSystem, alpha: SignedRoot, t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero(t.degree.saturating_sub(1));
    if t.degree == 0 {
        return out;
    }
    let a = alpha.index;
    for (w, c) in &t.terms {
        let neg = alpha.negative;
        for k in 0..w.len() {
            if w[k] == a {
                let mut nw = Vec::with_capacity(w.len() - 1);
                let mut s = neg;
                for &x in &w[..k] {
                    let img = rs.reflect_root(a, SignedRoot::pos(x));
                    nw.push(img.index);
                    s ^= img.negative;
                }
                nw.extend_from_slice(&w[k + 1..]);
                out.add_term(nw, if s { -c } else { c.clone() });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn a2() -> RootSystem {
        RootSystem::from_label("A2").unwrap()
    }

    #[test]
    fn yd_degrees() {
        let rs = a2();
        assert!(yd_degree(&rs, &[]).is_identity());
        assert_eq!(&yd_degree(&rs, &[1]), rs.reflection(1));
        assert!(yd_degree(&rs, &[2, 2]).is_identity());
        let w = yd_degree(&rs, &[0, 2]);
        assert_eq!(w, rs.reflection(0).compose(rs.reflection(2)));
    }

    #[test]
    fn braid_examples() {
        let rs = a2();
        let t = braid_apply(&rs, 0, &TensorElement::word(&[0, 0])).unwrap();
        assert_eq!(t, TensorElement::word(&[0, 0]).scale(&q(-1)));
        let t = braid_apply(&rs, 0, &TensorElement::word(&[0, 2])).unwrap();
        assert_eq!(t, TensorElement::word(&[1, 0]));
        let b2 = RootSystem::from_label("B2").unwrap();
        // e1 and e2 are orthogonal
        let t = braid_apply(&b2, 0, &TensorElement::word(&[1, 3])).unwrap();
        assert_eq!(t, TensorElement::word(&[3, 1]));
        assert!(braid_apply(&rs, 1, &TensorElement::word(&[0, 1])).is_err());
    }

    #[test]
    fn braid_relation_and_inverse() {
        let rs = RootSystem::from_label("G2").unwrap();
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    let t = TensorElement::word(&[a, b, c]);
                    let l = psi_word(&rs, &[0, 1, 0], &t).unwrap();
                    let r = psi_word(&rs, &[1, 0, 1], &t).unwrap();
                    assert_eq!(l, r);
                    let back = braid_apply_inverse(&rs, 1, &braid_apply(&rs, 1, &t).unwrap()).unwrap();
                    assert_eq!(back, t);
                }
            }
        }
    }

    #[test]
    fn reduced_words_of_permutations() {
        assert_eq!(permutation_reduced_word(&[0, 1, 2]), Vec::<usize>::new());
        assert_eq!(permutation_reduced_word(&[1, 0, 2]), vec![0]);
        assert_eq!(permutation_reduced_word(&[2, 1, 0]).len(), 3);
        let rs = a2();
        let t = TensorElement::word(&[0, 1, 2]);
        assert_eq!(psi_perm(&rs, &[0, 1, 2], &t).unwrap(), t);
        assert_eq!(psi_perm(&rs, &[1, 0, 2], &t).unwrap(), braid_apply(&rs, 0, &t).unwrap());
        assert!(psi_perm(&rs, &[0, 0, 2], &t).is_err());
    }

    #[test]
    fn perm_table_matches_psi_perm() {
        let rs = a2();
        let table = PermTable::new(4);
        assert_eq!(table.len(), 24);
        let word = [0, 1, 2, 1];
        let images = table.images(&rs, &word);
        // every image is Ψ_w(word) for a distinct w
        let mut all = Vec::new();
        for perm in permutations(4) {
            let t = psi_perm(&rs, &perm, &TensorElement::word(&word)).unwrap();
            let (w, c) = t.terms().next().unwrap();
            all.push((w.clone(), c < &Q::zero()));
        }
        let mut a = images.clone();
        a.sort();
        all.sort();
        assert_eq!(a, all);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for k in 0..n {
                let mut v = p.clone();
                v.insert(k, n - 1);
                out.push(v);
            }
        }
        out
    }

    #[test]
    fn symmetrizer_examples() {
        let rs = a2();
        let t = TensorElement::word(&[1]);
        assert_eq!(symmetrizer(&rs, &t, 6).unwrap(), t);
        assert!(symmetrizer(&rs, &TensorElement::word(&[0, 0]), 6).unwrap().is_zero());
        let b2 = RootSystem::from_label("B2").unwrap();
        let s = symmetrizer(&b2, &TensorElement::word(&[1, 3]), 6).unwrap();
        assert_eq!(s, &TensorElement::word(&[1, 3]) + &TensorElement::word(&[3, 1]));
        assert!(symmetrizer(&rs, &TensorElement::word(&[0; 7]), 6).is_err());
        let rel = &(&TensorElement::word(&[0, 1]) + &TensorElement::word(&[1, 2]))
            - &TensorElement::word(&[2, 0]);
        assert!(symmetrizer(&rs, &rel, 6).unwrap().is_zero());
        assert!(!symmetrizer(&rs, &TensorElement::word(&[0, 1]), 6).unwrap().is_zero());
    }

    #[test]
    fn symmetrizer_is_equivariant_and_degree_preserving() {
        let rs = a2();
        let table = PermTable::new(3);
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let t = TensorElement::word(&[a, b, c]);
                    let s = symmetrize_with(&rs, &table, &t);
                    let deg = yd_degree_index(&rs, &[a, b, c]);
                    assert!(s.terms().all(|(w, _)| yd_degree_index(&rs, w) == deg));
                    for w in rs.weyl_enumerate() {
                        assert_eq!(
                            w_act_tensor(w, &s),
                            symmetrize_with(&rs, &table, &w_act_tensor(w, &t))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn w_action_examples() {
        let rs = a2();
        let t = TensorElement::word(&[0, 2]);
        assert_eq!(w_act_tensor(&rs.weyl_enumerate()[0], &t), t);
        assert_eq!(
            w_act_tensor(rs.reflection(0), &TensorElement::word(&[0])),
            TensorElement::word(&[0]).scale(&q(-1))
        );
        let k = &TensorElement::word(&[1, 1]) + &TensorElement::word(&[0, 0]);
        assert!(symmetrizer(&rs, &k, 6).unwrap().is_zero());
        for w in rs.weyl_enumerate() {
            assert!(symmetrizer(&rs, &w_act_tensor(w, &k), 6).unwrap().is_zero());
        }
    }

    #[test]
    fn tensor_derivative_examples() {
        let rs = a2();
        let d = d_alpha_tensor(&rs, SignedRoot::pos(0), &TensorElement::word(&[0, 1]));
        assert_eq!(d, TensorElement::word(&[1]));
        let d = d_alpha_tensor(&rs, SignedRoot::pos(0), &TensorElement::word(&[2, 0]));
        // s_{a1}(a3) = a2
        assert_eq!(d, TensorElement::word(&[1]));
        let d = d_alpha_tensor(&rs, SignedRoot::neg(0), &TensorElement::word(&[0]));
        assert_eq!(d, TensorElement::word(&[]).scale(&q(-1)));
    }
}
