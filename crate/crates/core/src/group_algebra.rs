//! Group algebras of weight lattices: `Q[P]`, `Q[P']` and the character ring.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::linalg::{add_entry, Q};
use crate::rootsys::{RootSystem, SignedRoot, Weight, WeylElement};

/// Finite sum `Σ c_λ e^λ` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupAlgebraElement {
    terms: BTreeMap<Weight, Q>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        GroupAlgebraElement { terms: BTreeMap::new() }
    }

    /// `e^0` in ambient dimension `dim`.
    pub fn one(dim: usize) -> Self {
        Self::monomial(Weight::zero(dim), Q::one())
    }

    pub fn monomial(lambda: Weight, c: Q) -> Self {
        let mut f = Self::zero();
        f.add_term(lambda, c);
        f
    }

    pub fn add_term(&mut self, lambda: Weight, c: Q) {
        add_entry(&mut self.terms, lambda, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &Q)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn coefficient(&self, lambda: &Weight) -> Q {
        self.terms.get(lambda).cloned().unwrap_or_else(Q::zero)
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
        let mut f = Self::zero();
        for (l, v) in &self.terms {
            f.add_term(l.clone(), v * c);
        }
        f
    }

    /// `ε`, the augmentation `e^λ ↦ 1`.
    pub fn epsilon(&self) -> Q {
        self.terms.values().sum()
    }

    pub fn act(&self, w: &WeylElement) -> Self {
        let mut f = Self::zero();
        for (l, v) in &self.terms {
            f.add_term(w.act(l), v.clone());
        }
        f
    }

    pub fn reflect(&self, rs: &RootSystem, alpha: SignedRoot) -> Self {
        let mut f = Self::zero();
        for (l, v) in &self.terms {
            f.add_term(rs.reflect(alpha, l), v.clone());
        }
        f
    }

    /// Substitute a value for every monomial.
    pub fn evaluate<F: Fn(&Weight) -> Q>(&self, value: F) -> Q {
        self.terms.iter().map(|(l, c)| c * value(l)).sum()
    }
}

impl Add<&GroupAlgebraElement> for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn add(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut f = self.clone();
        for (l, v) in &rhs.terms {
            f.add_term(l.clone(), v.clone());
        }
        f
    }
}

impl Sub<&GroupAlgebraElement> for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn sub(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut f = self.clone();
        for (l, v) in &rhs.terms {
            f.add_term(l.clone(), -v);
        }
        f
    }
}

impl Neg for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn neg(self) -> GroupAlgebraElement {
        self.scale(&-Q::one())
    }
}

impl Mul<&GroupAlgebraElement> for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn mul(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut f = GroupAlgebraElement::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                f.add_term(a + b, x * y);
            }
        }
        f
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &BTreeMap<Weight, Q>, symbol: &str) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (l, c)) in terms.iter().enumerate() {
        if i > 0 {
            write!(f, " + ")?;
        }
        write!(f, "{c}*{symbol}^{l}")?;
    }
    Ok(())
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, "e")
    }
}

/// Element of the representation ring `R(T)`, written in characters `χ^λ`.
///
/// Kept as its own type so that characters never mix with the `X^μ`
/// exponents of the cross product.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusScalar(GroupAlgebraElement);

impl TorusScalar {
    pub fn zero() -> Self {
        TorusScalar(GroupAlgebraElement::zero())
    }

    pub fn one(dim: usize) -> Self {
        TorusScalar(GroupAlgebraElement::one(dim))
    }

    pub fn constant(dim: usize, c: Q) -> Self {
        TorusScalar(GroupAlgebraElement::monomial(Weight::zero(dim), c))
    }

    /// `χ^λ`.
    pub fn character(lambda: Weight) -> Self {
        TorusScalar(GroupAlgebraElement::monomial(lambda, Q::one()))
    }

    /// `ι(f)`: the same sum read in characters.
    pub fn iota(f: &GroupAlgebraElement) -> Self {
        TorusScalar(f.clone())
    }

    pub fn as_group_algebra(&self) -> &GroupAlgebraElement {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `Some(c)` if the scalar is the constant `c·χ^0`.
    pub fn as_constant(&self) -> Option<Q> {
        match self.0.len() {
            0 => Some(Q::zero()),
            1 => {
                let (l, c) = self.0.terms().next().expect("one term");
                l.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        TorusScalar(self.0.scale(c))
    }

    /// Image under `χ^λ ↦ 1`.
    pub fn specialize(&self) -> Q {
        self.0.epsilon()
    }

    pub fn evaluate<F: Fn(&Weight) -> Q>(&self, value: F) -> Q {
        self.0.evaluate(value)
    }
}

impl Add<&TorusScalar> for &TorusScalar {
    type Output = TorusScalar;
    fn add(self, rhs: &TorusScalar) -> TorusScalar {
        TorusScalar(&self.0 + &rhs.0)
    }
}

impl Sub<&TorusScalar> for &TorusScalar {
    type Output = TorusScalar;
    fn sub(self, rhs: &TorusScalar) -> TorusScalar {
        TorusScalar(&self.0 - &rhs.0)
    }
}

impl Neg for &TorusScalar {
    type Output = TorusScalar;
    fn neg(self) -> TorusScalar {
        TorusScalar(-&self.0)
    }
}

impl Mul<&TorusScalar> for &TorusScalar {
    type Output = TorusScalar;
    fn mul(self, rhs: &TorusScalar) -> TorusScalar {
        TorusScalar(&self.0 * &rhs.0)
    }
}

impl fmt::Display for TorusScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.0.terms, "chi")
    }
}

/// Collect terms with the same weight; used by callers that build sums
/// from iterators.
pub fn collect_terms<I: IntoIterator<Item = (Weight, Q)>>(it: I) -> GroupAlgebraElement {
    let mut f = GroupAlgebraElement::zero();
    for (l, c) in it {
        f.add_term(l, c);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn e(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    #[test]
    fn multiplication_is_convolution() {
        let f = &GroupAlgebraElement::monomial(e(&[1, 0]), q(2)) + &GroupAlgebraElement::one(2);
        let g = &GroupAlgebraElement::monomial(e(&[-1, 0]), q(1)) - &GroupAlgebraElement::one(2);
        let fg = &f * &g;
        // (2x + 1)(1/x - 1) = 2 - 2x + 1/x - 1
        assert_eq!(fg.coefficient(&e(&[0, 0])), q(1));
        assert_eq!(fg.coefficient(&e(&[1, 0])), q(-2));
        assert_eq!(fg.coefficient(&e(&[-1, 0])), q(1));
        assert_eq!(fg.len(), 3);
        assert_eq!(fg.epsilon(), q(0));
    }

    #[test]
    fn cancellation_drops_terms() {
        let f = GroupAlgebraElement::monomial(e(&[1, 1]), q(3));
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn torus_scalars() {
        let chi = TorusScalar::character(e(&[1, 0]));
        assert_eq!(chi.as_constant(), None);
        assert_eq!(TorusScalar::one(2).as_constant(), Some(q(1)));
        assert_eq!((&chi * &chi).specialize(), q(1));
        assert_eq!(chi.to_string(), "1*chi^(1, 0)");
    }
}
