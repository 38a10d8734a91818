//! The equivariant model: the cross product `R(T) ⊗ Q[P'] ⊗ B(V_W)`.
//!
//! Elements are finite sums `χ · X^μ · b` with `χ ∈ R(T)`, `μ ∈ P' = h^{-1}P`
//! and `b` a monomial basis vector of the tower.  Basis vectors are
//! W-homogeneous, so the twist `b X^ν = X^{w_b ν} b` is applied termwise.
//! Identities are checked in this un-quotiented ring, which maps onto
//! `R(T) ⊗_{Z[P]^W} B(V_W)⟨P'⟩`.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::alcove::{lambda_chain, LambdaChain};
use crate::error::{Error, Result};
use crate::group_algebra::{GroupAlgebraElement, TorusScalar};
use crate::kmodel::demazure;
use crate::linalg::{q, unit_vec, Echelon, SparseVec, Q};
use crate::nichols::{NicholsElement, Tower};
use crate::report::CheckOutcome;
use crate::rootsys::{RootSystem, SignedRoot, Weight};

/// `(μ, degree, basis index)`.
pub type CrossKey = (Weight, usize, usize);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossElement {
    terms: BTreeMap<CrossKey, TorusScalar>,
}

fn add_scalar<K: Ord>(map: &mut BTreeMap<K, TorusScalar>, k: K, c: &TorusScalar) {
    if c.is_zero() {
        return;
    }
    let v = match map.remove(&k) {
        Some(old) => &old + c,
        None => c.clone(),
    };
    if !v.is_zero() {
        map.insert(k, v);
    }
}

impl CrossElement {
    pub fn zero() -> Self {
        CrossElement { terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::x_monomial(Weight::zero(dim))
    }

    /// `X^μ`.
    pub fn x_monomial(mu: Weight) -> Self {
        let dim = mu.dim();
        let mut x = Self::zero();
        x.add_term(mu, 0, 0, &TorusScalar::one(dim));
        x
    }

    /// `χ · 1`.
    pub fn scalar(dim: usize, c: TorusScalar) -> Self {
        let mut x = Self::zero();
        x.add_term(Weight::zero(dim), 0, 0, &c);
        x
    }

    /// The image of `x ∈ B(V_W)` under `b ↦ X^0 b`.
    pub fn from_nichols(dim: usize, x: &NicholsElement) -> Self {
        let mut out = Self::zero();
        for (d, v) in x.components() {
            for (&k, c) in v {
                out.add_term(Weight::zero(dim), d, k, &TorusScalar::constant(dim, c.clone()));
            }
        }
        out
    }

    pub fn add_term(&mut self, mu: Weight, degree: usize, index: usize, c: &TorusScalar) {
        add_scalar(&mut self.terms, (mu, degree, index), c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CrossKey, &TorusScalar)> {
        self.terms.iter()
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

    pub fn add(&self, other: &CrossElement) -> CrossElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_scalar(&mut out.terms, k.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &CrossElement) -> CrossElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_scalar(&mut out.terms, k.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, c: &TorusScalar) -> CrossElement {
        let mut out = CrossElement::zero();
        for (k, v) in &self.terms {
            add_scalar(&mut out.terms, k.clone(), &(v * c));
        }
        out
    }

    /// Largest B-degree with a nonzero term.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|(_, d, _)| *d).max()
    }

    /// The terms of B-degree 0, as `μ ↦ χ`.
    pub fn degree_zero_part(&self) -> BTreeMap<Weight, TorusScalar> {
        let mut out = BTreeMap::new();
        for ((mu, d, _), c) in &self.terms {
            if *d == 0 {
                add_scalar(&mut out, mu.clone(), c);
            }
        }
        out
    }
}

/// `Σ χ_λ e^λ ∈ R(T)[P]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TorusPolynomial {
    terms: BTreeMap<Weight, TorusScalar>,
}

impl TorusPolynomial {
    pub fn zero() -> Self {
        TorusPolynomial { terms: BTreeMap::new() }
    }

    /// `χ e^λ`.
    pub fn monomial(lambda: Weight, c: TorusScalar) -> Self {
        let mut f = Self::zero();
        f.add_term(lambda, &c);
        f
    }

    /// `f ∈ Q[P]` with constant coefficients.
    pub fn from_group_algebra(f: &GroupAlgebraElement) -> Self {
        let mut out = Self::zero();
        for (l, c) in f.terms() {
            out.add_term(l.clone(), &TorusScalar::constant(l.dim(), c.clone()));
        }
        out
    }

    pub fn add_term(&mut self, lambda: Weight, c: &TorusScalar) {
        add_scalar(&mut self.terms, lambda, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &TorusScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &TorusPolynomial) -> TorusPolynomial {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        out
    }
}

/// The equivariant model over a tower.
pub struct Equivariant<'a> {
    tower: &'a Tower,
}

impl<'a> Equivariant<'a> {
    pub fn new(tower: &'a Tower) -> Self {
        Equivariant { tower }
    }

    fn rs(&self) -> &'a RootSystem {
        self.tower.root_system()
    }

    fn dim(&self) -> usize {
        self.rs().ambient_dim()
    }

    fn h(&self) -> Q {
        q(self.rs().coxeter_number() as i64)
    }

    /// `(X^μ b)(X^ν b') = X^{μ + w_b ν} (b b')`.
    pub fn multiply(&self, x: &CrossElement, y: &CrossElement) -> Result<CrossElement> {
        let rs = self.rs();
        let mut products: BTreeMap<(usize, usize, usize, usize), NicholsElement> = BTreeMap::new();
        let mut out = CrossElement::zero();
        for ((mu, d, k), c) in &x.terms {
            let w = rs.weyl_element(self.tower.degrees()[*d].yd[*k]);
            for ((nu, e, l), c2) in &y.terms {
                let key = (*d, *k, *e, *l);
                if let Entry::Vacant(slot) = products.entry(key) {
                    let b = NicholsElement::from_component(*d, unit_vec(*k));
                    let b2 = NicholsElement::from_component(*e, unit_vec(*l));
                    slot.insert(self.tower.multiply(&b, &b2)?);
                }
                let exponent = mu + &w.act(nu);
                let coef = c * c2;
                for (deg, v) in products[&key].components() {
                    for (&idx, val) in v {
                        out.add_term(exponent.clone(), deg, idx, &coef.scale(val));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[α]` as a cross element.
    pub fn generator(&self, alpha: SignedRoot) -> CrossElement {
        CrossElement::from_nichols(self.dim(), &self.tower.generator(alpha))
    }

    /// `X^{ρ/h} (X^{α/h} + [α]) X^{-ρ/h}`, multiplied out.
    pub fn h_eq(&self, alpha: SignedRoot) -> Result<CrossElement> {
        let rs = self.rs();
        let rh = rs.rho().scale(&(Q::one() / self.h()));
        let inner = CrossElement::x_monomial(rs.root(alpha).scale(&(Q::one() / self.h()))).add(&self.generator(alpha));
        let left = self.multiply(&CrossElement::x_monomial(rh.clone()), &inner)?;
        self.multiply(&left, &CrossElement::x_monomial(-&rh))
    }

    /// `X^{α/h} + X^{<ρ,α^∨> α/h} [α]`.
    pub fn h_eq_closed_form(&self, alpha: SignedRoot) -> CrossElement {
        let rs = self.rs();
        let a = rs.root(alpha);
        let shift = a.scale(&(rs.pairing(rs.rho(), alpha) / self.h()));
        let mut x = CrossElement::x_monomial(a.scale(&(Q::one() / self.h())));
        x.add_term(shift, 1, alpha.index, &TorusScalar::constant(self.dim(), q(alpha.sign())));
        x
    }

    /// `H_{β_l} ⋯ H_{β_1}`.
    pub fn h_product(&self, roots: &[SignedRoot]) -> Result<CrossElement> {
        let mut f = CrossElement::one(self.dim());
        for &b in roots {
            f = self.multiply(&self.h_eq(b)?, &f)?;
        }
        Ok(f)
    }

    pub fn xi_eq_from_chain(&self, chain: &LambdaChain) -> Result<CrossElement> {
        self.h_product(&chain.roots())
    }

    pub fn xi_eq(&self, lambda: &Weight) -> Result<CrossElement> {
        self.xi_eq_from_chain(&lambda_chain(self.rs(), lambda)?)
    }

    /// `ψ(Σ χ_λ e^λ) = Σ χ_λ Ξ_eq^[λ]`.
    pub fn psi(&self, f: &TorusPolynomial) -> Result<CrossElement> {
        let mut out = CrossElement::zero();
        for (l, c) in f.terms() {
            out = out.add(&self.xi_eq(l)?.scale(c));
        }
        Ok(out)
    }

    /// `D_α(χ X^μ b) = χ X^{s_α μ} D_α(b)`.
    pub fn d_alpha(&self, alpha: SignedRoot, x: &CrossElement) -> CrossElement {
        let rs = self.rs();
        let mut out = CrossElement::zero();
        for ((mu, d, k), c) in &x.terms {
            let db = self.tower.d_alpha(alpha, &NicholsElement::from_component(*d, unit_vec(*k)));
            let nu = rs.reflect(alpha, mu);
            for (e, v) in db.components() {
                for (&idx, val) in v {
                    out.add_term(nu.clone(), e, idx, &c.scale(val));
                }
            }
        }
        out
    }

    /// `X^μ ↦ 1`, `χ ↦ 1`.
    pub fn specialize(&self, x: &CrossElement) -> NicholsElement {
        let mut out = NicholsElement::zero();
        for ((_, d, k), c) in &x.terms {
            out.add_component(*d, &unit_vec(*k), &c.specialize());
        }
        out
    }

    pub fn format(&self, x: &CrossElement) -> String {
        if x.is_zero() {
            return String::from("0");
        }
        let parts: Vec<String> = x
            .terms
            .iter()
            .map(|((mu, d, k), c)| {
                let label: String = self.tower.degrees()[*d].labels[*k]
                    .iter()
                    .map(|l| format!("[{}]", l + 1))
                    .collect();
                format!("({c})*X^{mu}{}", if label.is_empty() { String::new() } else { format!("*{label}") })
            })
            .collect();
        parts.join(" + ")
    }

    fn instance(&self, s: String) -> String {
        format!("{} {s}", self.rs().kind())
    }

    fn verdict(&self, check: &str, instance: String, r: Result<(CrossElement, CrossElement)>) -> CheckOutcome {
        let r = r.map(|(a, b)| (a != b).then(|| format!("{} versus {}", self.format(&a), self.format(&b))));
        CheckOutcome::from_result(check, self.instance(instance), r)
    }

    /// `H_α` equals its closed form and `H_α H_{-α} = 1`, for every root.
    pub fn h_eq_check(&self) -> Vec<CheckOutcome> {
        let mut out = Vec::new();
        for a in 0..self.rs().num_positive() {
            for alpha in [SignedRoot::pos(a), SignedRoot::neg(a)] {
                let name = format!("H_{}{}", if alpha.negative { "-" } else { "" }, a + 1);
                out.push(self.verdict(
                    "h_eq_expansion",
                    name.clone(),
                    self.h_eq(alpha).map(|x| (x, self.h_eq_closed_form(alpha))),
                ));
                let inv = self
                    .h_eq(alpha)
                    .and_then(|x| Ok((self.multiply(&x, &self.h_eq(alpha.flip())?)?, CrossElement::one(self.dim()))));
                out.push(self.verdict("h_eq_inverse", name, inv));
            }
        }
        out
    }

    /// `[α] X^λ = X^{s_α λ} [α]`.
    pub fn commutation_check(&self, alpha: SignedRoot, lambda: &Weight) -> CheckOutcome {
        let g = self.generator(alpha);
        let x = CrossElement::x_monomial(lambda.clone());
        let r = (|| {
            let lhs = self.multiply(&g, &x)?;
            let rhs = self.multiply(&CrossElement::x_monomial(self.rs().reflect(alpha, lambda)), &g)?;
            Ok((lhs, rhs))
        })();
        self.verdict("cross_commutation", format!("root {} at {lambda}", alpha.index + 1), r)
    }

    /// The h-product identity of every rank-two subsystem with `H` in
    /// place of `h`.
    pub fn yang_baxter_check(&self) -> Vec<CheckOutcome> {
        self.rs()
            .rank2_subsystems()
            .iter()
            .map(|sub| {
                let fwd: Vec<SignedRoot> = sub.roots.iter().map(|&a| SignedRoot::pos(a)).collect();
                let rev: Vec<SignedRoot> = fwd.iter().rev().copied().collect();
                let r = (|| Ok((self.ordered_product(&fwd)?, self.ordered_product(&rev)?)))();
                let roots: Vec<String> = sub.roots.iter().map(|a| format!("{}", a + 1)).collect();
                self.verdict("eq_yang_baxter", format!("{} ({})", sub.ty.label(), roots.join(",")), r)
            })
            .collect()
    }

    /// `H_{a_1} H_{a_2} ⋯ H_{a_k}`, left to right.
    fn ordered_product(&self, roots: &[SignedRoot]) -> Result<CrossElement> {
        let mut f = CrossElement::one(self.dim());
        for &b in roots {
            f = self.multiply(&f, &self.h_eq(b)?)?;
        }
        Ok(f)
    }

    pub fn chain_independence_check(&self, lambda: &Weight, chains: &[(String, LambdaChain)]) -> CheckOutcome {
        let instance = self.instance(format!("lambda {lambda}, {} chains", chains.len()));
        let r = (|| -> Result<Option<String>> {
            let mut first: Option<(String, CrossElement)> = None;
            for (name, c) in chains {
                if c.target != *lambda {
                    return Ok(Some(format!("{name} is not a chain for {lambda}")));
                }
                let x = self.xi_eq_from_chain(c)?;
                match &first {
                    None => first = Some((name.clone(), x)),
                    Some((n0, x0)) if *x0 != x => {
                        return Ok(Some(format!("{n0} and {name} differ: {} versus {}", self.format(x0), self.format(&x))));
                    }
                    Some(_) => {}
                }
            }
            Ok(None)
        })();
        CheckOutcome::from_result("eq_chain_independence", instance, r)
    }

    pub fn additivity_check(&self, lambda: &Weight, mu: &Weight) -> Vec<CheckOutcome> {
        let instance = format!("{lambda} + {mu}");
        let parts = (|| -> Result<_> {
            let a = self.xi_eq(lambda)?;
            let b = self.xi_eq(mu)?;
            Ok((self.multiply(&a, &b)?, self.multiply(&b, &a)?, self.xi_eq(&(lambda + mu))?))
        })();
        match parts {
            Ok((ab, ba, s)) => vec![
                self.verdict("eq_additivity", instance.clone(), Ok((ab.clone(), s))),
                self.verdict("eq_commutativity", instance, Ok((ab, ba))),
            ],
            Err(e) => vec![
                self.verdict("eq_additivity", instance.clone(), Err(e.clone())),
                self.verdict("eq_commutativity", instance, Err(e)),
            ],
        }
    }

    /// `X^{ρ/h} (X^{-α_i/h} - [α_i]) X^{-s_i(ρ)/h} D_{α_i}(ψ(f)) = ψ(π_i f)`.
    pub fn intertwine_check(&self, f: &TorusPolynomial, i: usize) -> CheckOutcome {
        let rs = self.rs();
        let ai = rs.simple(i);
        let r = (|| {
            let hi = Q::one() / self.h();
            let a = rs.root(ai);
            let mid = CrossElement::x_monomial(-&a.scale(&hi)).sub(&self.generator(ai));
            let pre = self.multiply(&CrossElement::x_monomial(rs.rho().scale(&hi)), &mid)?;
            let pre = self.multiply(&pre, &CrossElement::x_monomial(-&rs.reflect(ai, rs.rho()).scale(&hi)))?;
            let lhs = self.multiply(&pre, &self.d_alpha(ai, &self.psi(f)?))?;
            let rhs = self.psi(&eq_demazure(rs, i, f)?)?;
            Ok((lhs, rhs))
        })();
        self.verdict("eq_intertwine", format!("i = {}, f with {} terms", i + 1, f.terms.len()), r)
    }

    /// For W-invariant `f ∈ Z[P]`: `ψ(f)` lies in B-degree 0 and its
    /// `X`-part, read in `Q[P]`, is `f` again, which is `ι(f)` in `B_T`.
    pub fn invariant_image_check(&self, f: &GroupAlgebraElement) -> CheckOutcome {
        let rs = self.rs();
        let instance = self.instance(format!("f = {f}"));
        let r = (|| -> Result<Option<String>> {
            for w in rs.weyl_enumerate() {
                if f.act(w) != *f {
                    return Err(Error::Precondition(format!("{f} is not W-invariant")));
                }
            }
            let x = self.psi(&TorusPolynomial::from_group_algebra(f))?;
            if let Some(d) = x.max_degree().filter(|&d| d > 0) {
                return Ok(Some(format!("component in B-degree {d}: {}", self.format(&x))));
            }
            let mut part = GroupAlgebraElement::zero();
            for (mu, c) in x.degree_zero_part() {
                match c.as_constant() {
                    Some(v) => part.add_term(mu, v),
                    None => return Ok(Some(format!("non-constant character coefficient {c}"))),
                }
            }
            if part.support().any(|mu| !rs.in_weight_lattice(mu)) {
                return Ok(Some(format!("exponents outside P: {part}")));
            }
            Ok((part != *f).then(|| format!("X-part {part}")))
        })();
        CheckOutcome::from_result("invariant_image", instance, r)
    }

    /// `specialize(Ξ_eq^[λ]) = Ξ^[λ]` against an independently computed `Ξ^[λ]`.
    pub fn specialize_check(&self, lambda: &Weight, xi: &NicholsElement) -> CheckOutcome {
        let r = self.xi_eq(lambda).map(|x| {
            let s = self.specialize(&x);
            (s != *xi).then(|| {
                format!(
                    "{} versus {}",
                    self.tower.format_element(&s),
                    self.tower.format_element(xi)
                )
            })
        });
        CheckOutcome::from_result("specialize_xi_eq", self.instance(format!("{lambda}")), r)
    }

    /// Rank over `Frac R(T)` of `ψ(e^λ)` for the given weights, in the
    /// `(μ, B-basis)` coordinates.  The coefficients of `ψ(e^λ)` are
    /// constants, so the rank is a rational rank.
    pub fn eq_rank(&self, weights: &[Weight]) -> Result<usize> {
        let mut columns: BTreeMap<CrossKey, usize> = BTreeMap::new();
        let mut ech = Echelon::new();
        for l in weights {
            let x = self.xi_eq(l)?;
            let mut v = SparseVec::new();
            for (key, c) in x.terms() {
                let c = c
                    .as_constant()
                    .ok_or_else(|| Error::Internal(format!("non-constant coefficient {c}")))?;
                let next = columns.len();
                let col = *columns.entry(key.clone()).or_insert(next);
                v.insert(col, c);
            }
            ech.insert(&v);
        }
        Ok(ech.rank())
    }

    pub fn eq_rank_probe(&self, weights: &[Weight]) -> CheckOutcome {
        let w = self.rs().weyl_order();
        let instance = self.instance(format!("{} weights", weights.len()));
        let r = self
            .eq_rank(weights)
            .map(|k| (k != w).then(|| format!("rank {k}, expected {w}")));
        CheckOutcome::from_result("eq_rank", instance, r)
    }
}

/// `π_i` extended `R(T)`-linearly, W acting trivially on `R(T)`.
pub fn eq_demazure(rs: &RootSystem, i: usize, f: &TorusPolynomial) -> Result<TorusPolynomial> {
    let mut out = TorusPolynomial::zero();
    for (l, c) in f.terms() {
        let p = demazure(rs, i, &GroupAlgebraElement::monomial(l.clone(), Q::one()))?;
        for (m, v) in p.terms() {
            out.add_term(m.clone(), &c.scale(v));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kmodel::{alternative_chains, KModel};

    fn a2() -> Tower {
        Tower::build(RootSystem::from_label("A2").unwrap(), 5)
    }

    #[test]
    fn h_eq_a2_root1() {
        let t = a2();
        let eq = Equivariant::new(&t);
        let rs = t.root_system();
        let a1 = rs.root(SignedRoot::pos(0));
        let third = a1.scale(&crate::linalg::qr(1, 3));
        let mut expect = CrossElement::x_monomial(third.clone());
        expect.add_term(third, 1, 0, &TorusScalar::one(3));
        assert_eq!(eq.h_eq(SignedRoot::pos(0)).unwrap(), expect);
        assert!(eq.h_eq_check().iter().all(|o| o.passed()));
    }

    #[test]
    fn twist_and_commutation() {
        let t = a2();
        let eq = Equivariant::new(&t);
        let rs = t.root_system();
        let nu = rs.fundamental_weights()[0].scale(&crate::linalg::qr(1, 3));
        for a in 0..3 {
            for alpha in [SignedRoot::pos(a), SignedRoot::neg(a)] {
                assert!(eq.commutation_check(alpha, &nu).passed());
            }
        }
        let x = CrossElement::x_monomial(nu.clone());
        let y = CrossElement::x_monomial(rs.rho().clone());
        let p = eq.multiply(&x, &y).unwrap();
        assert_eq!(p, CrossElement::x_monomial(&nu + rs.rho()));
    }

    #[test]
    fn yang_baxter_and_xi_eq() {
        let t = a2();
        let eq = Equivariant::new(&t);
        let km = KModel::new(&t);
        let rs = t.root_system();
        assert!(eq.yang_baxter_check().iter().all(|o| o.passed()));
        let om = rs.fundamental_weights();
        let out = eq.additivity_check(&om[0], &om[1]);
        assert!(out.iter().all(|o| o.passed()), "{out:?}");
        for l in [om[0].clone(), om[1].clone(), rs.rho().clone(), -&om[0]] {
            let xi = km.xi(&l).unwrap().element;
            assert!(eq.specialize_check(&l, &xi).passed());
            let chains = alternative_chains(rs, &l).unwrap();
            assert!(eq.chain_independence_check(&l, &chains).passed());
        }
    }

    #[test]
    fn intertwine_and_invariants() {
        let t = a2();
        let eq = Equivariant::new(&t);
        let rs = t.root_system();
        let om = rs.fundamental_weights();
        let f = TorusPolynomial::monomial(om[0].clone(), TorusScalar::character(om[1].clone()));
        for i in 0..2 {
            assert!(eq.intertwine_check(&f, i).passed());
        }
        let o1 = rs.orbit_sum(&om[0]);
        let o2 = rs.orbit_sum(&om[1]);
        for g in [o1.clone(), o2.clone(), &o1 * &o2, GroupAlgebraElement::one(3)] {
            let out = eq.invariant_image_check(&g);
            assert!(out.passed(), "{out:?}");
        }
    }

    #[test]
    fn eq_rank_a2() {
        let t = a2();
        let eq = Equivariant::new(&t);
        let rs = t.root_system();
        let ws: Vec<Weight> = [[0, 0], [1, 0], [0, 1], [1, 1], [2, 0], [0, 2]]
            .iter()
            .map(|c| rs.weight(c))
            .collect();
        assert_eq!(eq.eq_rank(&ws).unwrap(), 6);
        assert_eq!(eq.eq_rank(&ws[..1]).unwrap(), 1);
        assert_eq!(eq.eq_rank(&[ws[1].clone(), ws[1].clone()]).unwrap(), 1);
    }

    #[test]
    fn d_alpha_kills_x() {
        let t = a2();
        let eq = Equivariant::new(&t);
        let x = CrossElement::x_monomial(t.root_system().rho().clone());
        assert!(eq.d_alpha(SignedRoot::pos(0), &x).is_zero());
    }
}
