//! The K-ring of the flag variety inside `B(V_W)`.
//!
//! `Ξ^[λ]` is the product `h_{β_l} ⋯ h_{β_1}` along a λ-chain, `φ` sends
//! `e^λ` to `Ξ^[λ]`, and `Π_i = h_{α_i}^{-1} D_{α_i}` intertwines `φ` with
//! the Demazure operators `π_i` on `Q[P]`.
//!
//! A [`KModel`] evaluates products either exactly or, when built with
//! [`KModel::filtered`], in the quotient `B / B_{>N}`.  The quotient is an
//! algebra, so product identities and rank lower bounds computed there are
//! sound; identities involving `D_α` lose one degree and are compared only
//! below `N`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::alcove::{
    chain_transform_full, concat_chains, is_lambda_chain, lambda_chain, lambda_chain_variant, LambdaChain,
};
use crate::braided::TensorElement;
use crate::error::{Error, Result};
use crate::group_algebra::GroupAlgebraElement;
use crate::linalg::{q, unit_vec, Echelon, SparseVec, Q};
use crate::nichols::{NicholsElement, Tower};
use crate::report::CheckOutcome;
use crate::rootsys::{Family, RootSystem, SignedRoot, Weight};

/// `h_α = 1 + [α]`; `h_{-α} = 1 - [α]` is its inverse.
pub fn h_elem(alpha: SignedRoot) -> NicholsElement {
    let mut x = NicholsElement::one();
    x.add_component(1, &unit_vec(alpha.index), &q(alpha.sign()));
    x
}

/// `Ξ^[λ]` together with its weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChevalleyElement {
    pub lambda: Weight,
    pub element: NicholsElement,
}

/// `π_i(f) = (f - s_i f) / (e^{α_i} - 1)`, by the closed form on monomials:
/// with `m = <μ, α_i^∨>`, `π_i(e^μ)` is `Σ_{j=1}^{m} e^{μ - jα_i}` for
/// `m > 0` and `-Σ_{j=0}^{-m-1} e^{μ + jα_i}` for `m < 0`.
pub fn demazure(rs: &RootSystem, i: usize, f: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
    if i >= rs.rank() {
        return Err(Error::Precondition(format!("simple index {i} out of range")));
    }
    let ai = rs.simple(i);
    let alpha = rs.root(ai);
    let mut out = GroupAlgebraElement::zero();
    for (mu, c) in f.terms() {
        let m = rs.pairing(mu, ai);
        if !m.is_integer() {
            return Err(Error::Precondition(format!("{mu} is not in the weight lattice")));
        }
        let m = m.to_integer();
        let m: i64 = i64::try_from(m).map_err(|_| Error::Capability(String::from("pairing too large")))?;
        if m > 0 {
            for j in 1..=m {
                out.add_term(mu - &alpha.scale(&q(j)), c.clone());
            }
        } else {
            for j in 0..-m {
                out.add_term(mu + &alpha.scale(&q(j)), -c);
            }
        }
    }
    Ok(out)
}

/// All `Σ c_i ω_i` with `lo ≤ c_i ≤ hi`, ordered by `max |c_i|` and then
/// lexicographically.
pub fn weight_box(rs: &RootSystem, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let r = rs.rank();
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|c| {
                (lo..=hi).map(move |x| {
                    let mut d = c.clone();
                    d.push(x);
                    d
                })
            })
            .collect();
    }
    out.sort_by_key(|c| (c.iter().map(|x| x.abs()).max().unwrap_or(0), c.clone()));
    out
}

/// The smallest `b` with `b^r ≥ |W|`.
pub fn default_box_radius(rs: &RootSystem) -> i64 {
    let w = rs.weyl_order() as u64;
    (1..).find(|&b: &u64| b.pow(rs.rank() as u32) >= w).unwrap_or(1) as i64
}

/// Result of the rank certificate for `Q[Ξ_1, …, Ξ_r]`.
#[derive(Clone, Debug)]
pub struct KRank {
    pub rank: usize,
    pub weyl_order: usize,
    pub radius: i64,
    /// Smallest box radius at which the rank reached `|W|`.
    pub smallest_radius: Option<i64>,
    pub outcomes: Vec<CheckOutcome>,
}

pub struct KModel<'a> {
    tower: &'a Tower,
    cap: Option<usize>,
}

impl<'a> KModel<'a> {
    pub fn new(tower: &'a Tower) -> Self {
        KModel { tower, cap: None }
    }

    /// Products computed in `B / B_{>cap}`.
    pub fn filtered(tower: &'a Tower, cap: usize) -> Result<Self> {
        if cap > tower.computed_degree() && !tower.is_closed() {
            return Err(Error::Truncated {
                needed: cap,
                computed: tower.computed_degree(),
            });
        }
        Ok(KModel { tower, cap: Some(cap) })
    }

    pub fn tower(&self) -> &'a Tower {
        self.tower
    }

    pub fn cap(&self) -> Option<usize> {
        self.cap
    }

    fn rs(&self) -> &'a RootSystem {
        self.tower.root_system()
    }

    fn instance(&self, s: String) -> String {
        match self.cap {
            Some(c) => format!("{} {s} mod degree > {c}", self.rs().kind()),
            None => format!("{} {s}", self.rs().kind()),
        }
    }

    pub fn multiply(&self, x: &NicholsElement, y: &NicholsElement) -> Result<NicholsElement> {
        self.tower.multiply_capped(x, y, self.cap)
    }

    /// `h_{β_l} ⋯ h_{β_1}` for `roots = (β_1, …, β_l)`.
    pub fn h_product(&self, roots: &[SignedRoot]) -> Result<NicholsElement> {
        let mut f = NicholsElement::one();
        for &b in roots {
            let l = self.tower.left_multiply_capped(b, &f, self.cap)?;
            f = f.add(&l);
        }
        Ok(f)
    }

    pub fn xi_from_chain(&self, chain: &LambdaChain) -> Result<ChevalleyElement> {
        Ok(ChevalleyElement {
            lambda: chain.target.clone(),
            element: self.h_product(&chain.roots())?,
        })
    }

    pub fn xi(&self, lambda: &Weight) -> Result<ChevalleyElement> {
        self.xi_from_chain(&lambda_chain(self.rs(), lambda)?)
    }

    /// `Ξ_i = Ξ^[ω_i]`.
    pub fn xi_fundamental(&self, i: usize) -> Result<ChevalleyElement> {
        self.xi(&self.rs().fundamental_weights()[i])
    }

    /// `φ(Σ c_λ e^λ) = Σ c_λ Ξ^[λ]`.
    pub fn phi(&self, f: &GroupAlgebraElement) -> Result<NicholsElement> {
        let mut out = NicholsElement::zero();
        for (lambda, c) in f.terms() {
            out = out.add(&self.xi(lambda)?.element.scale(c));
        }
        Ok(out)
    }

    /// `Π_i(x) = (1 - [α_i]) D_{α_i}(x)`.
    pub fn pi_op(&self, i: usize, x: &NicholsElement) -> Result<NicholsElement> {
        let ai = self.rs().simple(i);
        let d = self.tower.d_alpha(ai, x);
        let l = self.tower.left_multiply_capped(ai, &d, self.cap)?;
        Ok(d.sub(&l))
    }

    /// Whether `a` and `b` agree in every degree that is reliable after an
    /// operator lowering degrees by `loss`.
    fn agree(&self, a: &NicholsElement, b: &NicholsElement, loss: usize) -> bool {
        let diff = a.sub(b);
        match self.cap {
            None => diff.is_zero(),
            Some(c) if c < loss => true,
            Some(c) => diff.truncated(c - loss).is_zero(),
        }
    }

    fn mismatch(&self, a: &NicholsElement, b: &NicholsElement) -> String {
        format!(
            "{} versus {}",
            self.tower.format_element(a),
            self.tower.format_element(b)
        )
    }

    /// All chains evaluate to the same element.
    pub fn chain_independence_check(&self, lambda: &Weight, chains: &[(String, LambdaChain)]) -> CheckOutcome {
        let instance = self.instance(format!("lambda {lambda}, {} chains", chains.len()));
        let r = (|| -> Result<Option<String>> {
            let mut first: Option<(String, NicholsElement)> = None;
            for (name, c) in chains {
                if c.target != *lambda || !is_lambda_chain(self.rs(), &c.roots(), lambda) {
                    return Ok(Some(format!("{name} is not a chain for {lambda}")));
                }
                let x = self.xi_from_chain(c)?.element;
                match &first {
                    None => first = Some((name.clone(), x)),
                    Some((n0, x0)) => {
                        if !self.agree(x0, &x, 0) {
                            return Ok(Some(format!("{n0} and {name} differ: {}", self.mismatch(x0, &x))));
                        }
                    }
                }
            }
            Ok(None)
        })();
        CheckOutcome::from_result("chain_independence", instance, r)
    }

    /// `Ξ^[λ] Ξ^[μ] = Ξ^[λ+μ]` and `Ξ^[λ] Ξ^[μ] = Ξ^[μ] Ξ^[λ]`.
    pub fn additivity_check(&self, lambda: &Weight, mu: &Weight) -> Vec<CheckOutcome> {
        let instance = self.instance(format!("{lambda} + {mu}"));
        let parts = (|| -> Result<(NicholsElement, NicholsElement, NicholsElement)> {
            let a = self.xi(lambda)?.element;
            let b = self.xi(mu)?.element;
            let s = self.xi(&(lambda + mu))?.element;
            Ok((self.multiply(&a, &b)?, self.multiply(&b, &a)?, s))
        })();
        let (add, comm) = match parts {
            Ok((ab, ba, s)) => (
                Ok((!self.agree(&ab, &s, 0)).then(|| self.mismatch(&ab, &s))),
                Ok((!self.agree(&ab, &ba, 0)).then(|| self.mismatch(&ab, &ba))),
            ),
            Err(e) => (Err(e.clone()), Err(e)),
        };
        vec![
            CheckOutcome::from_result("additivity", instance.clone(), add),
            CheckOutcome::from_result("commutativity", instance, comm),
        ]
    }

    /// `Π_i(φ(f)) = φ(π_i f)`.
    pub fn prop31_check(&self, f: &GroupAlgebraElement, i: usize) -> CheckOutcome {
        let instance = self.instance(format!("i = {}, f = {f}", i + 1));
        let r = (|| -> Result<Option<String>> {
            let lhs = self.pi_op(i, &self.phi(f)?)?;
            let rhs = self.phi(&demazure(self.rs(), i, f)?)?;
            Ok((!self.agree(&lhs, &rhs, 1)).then(|| self.mismatch(&lhs, &rhs)))
        })();
        CheckOutcome::from_result("pi_intertwines_demazure", instance, r)
    }

    /// `h_{α_i}^{-1} s_i(φ(f)) h_{α_i} = φ(s_i f)`.
    pub fn conjugation_check(&self, f: &GroupAlgebraElement, i: usize) -> CheckOutcome {
        let instance = self.instance(format!("i = {}, f = {f}", i + 1));
        let r = (|| -> Result<Option<String>> {
            let ai = self.rs().simple(i);
            let inner = self.tower.reflect(ai.index, &self.phi(f)?);
            let lhs = self.multiply(&self.multiply(&h_elem(ai.flip()), &inner)?, &h_elem(ai))?;
            let rhs = self.phi(&f.reflect(self.rs(), ai))?;
            Ok((!self.agree(&lhs, &rhs, 0)).then(|| self.mismatch(&lhs, &rhs)))
        })();
        CheckOutcome::from_result("conjugation", instance, r)
    }

    /// `Π_i(F F') = Π_i(F) F' + s_i(F) Π_i(F')`.
    pub fn leibniz_check(&self, f: &NicholsElement, g: &NicholsElement, i: usize) -> Result<bool> {
        let ai = self.rs().simple(i);
        let lhs = self.pi_op(i, &self.multiply(f, g)?)?;
        let rhs = self
            .multiply(&self.pi_op(i, f)?, g)?
            .add(&self.multiply(&self.tower.reflect(ai.index, f), &self.pi_op(i, g)?)?);
        Ok(self.agree(&lhs, &rhs, 1))
    }

    /// `Π_i² = -Π_i` and the braid relations of the `Π_i`, as exact
    /// operator identities on every computed graded piece.
    pub fn nilhecke_check(&self) -> Vec<CheckOutcome> {
        let tower = self.tower;
        let rs = self.rs();
        let top = if tower.is_closed() { tower.top_degree() } else { tower.computed_degree() };
        let basis: Vec<(usize, usize)> = (0..=top)
            .flat_map(|n| (0..tower.degrees()[n].dim).map(move |k| (n, k)))
            .collect();
        let span = format!("degrees 0..={top}");
        let exact = KModel::new(tower);
        let apply_word = |word: &[usize], x: &NicholsElement| -> Result<NicholsElement> {
            let mut y = x.clone();
            for &i in word.iter().rev() {
                y = exact.pi_op(i, &y)?;
            }
            Ok(y)
        };
        let first_failure = |lhs: &[usize], rhs: &[usize], plus: bool| -> Result<Option<String>> {
            for &(n, k) in &basis {
                let b = NicholsElement::from_component(n, unit_vec(k));
                let l = apply_word(lhs, &b)?;
                let r = apply_word(rhs, &b)?;
                let bad = if plus { !l.add(&r).is_zero() } else { !l.sub(&r).is_zero() };
                if bad {
                    return Ok(Some(format!("fails on basis vector {k} of degree {n}")));
                }
            }
            Ok(None)
        };
        let mut out = Vec::new();
        for i in 0..rs.rank() {
            let r = first_failure(&[i, i], &[i], true);
            out.push(CheckOutcome::from_result(
                "nil_hecke_quadratic",
                format!("{} Pi_{} on {span}", rs.kind(), i + 1),
                r,
            ));
        }
        for i in 0..rs.rank() {
            for j in (i + 1)..rs.rank() {
                let m = rs.braid_order(i, j);
                let (l, r) = alternating_words(i, j, m);
                out.push(CheckOutcome::from_result(
                    "nil_hecke_braid",
                    format!("{} Pi_{} Pi_{} m = {m} on {span}", rs.kind(), i + 1, j + 1),
                    first_failure(&l, &r, false),
                ));
            }
        }
        out
    }

    /// Rank of `span{Ξ^[λ] : 0 ≤ c_i ≤ radius}` and the collapse
    /// `φ(Σ_{μ ∈ Wω_i} e^μ) = |Wω_i|` of the fundamental orbit sums.
    pub fn k_rank(&self, radius: Option<i64>) -> Result<KRank> {
        let rs = self.rs();
        let radius = radius.unwrap_or_else(|| default_box_radius(rs));
        let weyl_order = rs.weyl_order();
        let mut ech = Echelon::new();
        let mut columns: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut smallest_radius = None;
        for c in weight_box(rs, 0, radius) {
            let x = self.xi(&rs.weight(&c))?.element;
            let mut v = SparseVec::new();
            for (d, comp) in x.components() {
                for (&k, val) in comp {
                    let next = columns.len();
                    let col = *columns.entry((d, k)).or_insert(next);
                    v.insert(col, val.clone());
                }
            }
            ech.insert(&v);
            if smallest_radius.is_none() && ech.rank() >= weyl_order {
                smallest_radius = c.iter().copied().max();
            }
        }
        let rank = ech.rank();
        let mut outcomes = vec![CheckOutcome::verdict(
            "k_rank",
            self.instance(format!("box 0..={radius}")),
            rank == weyl_order,
            || format!("rank {rank}, expected {weyl_order}"),
        )];
        for (i, om) in rs.fundamental_weights().iter().enumerate() {
            let orbit = rs.orbit_sum(om);
            let mut g = orbit.clone();
            g.add_term(Weight::zero(rs.ambient_dim()), -q(orbit.len() as i64));
            let r = self.phi(&g).map(|x| (!self.agree(&x, &NicholsElement::zero(), 0)).then(|| self.tower.format_element(&x)));
            outcomes.push(CheckOutcome::from_result(
                "invariant_collapse",
                self.instance(format!("orbit of omega_{}", i + 1)),
                r,
            ));
        }
        Ok(KRank {
            rank,
            weyl_order,
            radius,
            smallest_radius,
            outcomes,
        })
    }
}

/// The two alternating words of length `m` in `i, j`, the first starting with `i`.
pub fn alternating_words(i: usize, j: usize, m: usize) -> (Vec<usize>, Vec<usize>) {
    let l = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
    let r = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
    (l, r)
}

/// Several λ-chains obtained by different constructions.
pub fn alternative_chains(rs: &RootSystem, lambda: &Weight) -> Result<Vec<(String, LambdaChain)>> {
    let mut out: Vec<(String, LambdaChain)> = Vec::new();
    let base = lambda_chain(rs, lambda)?;
    out.push((String::from("segment"), base.clone()));
    for attempt in 1..12 {
        let c = lambda_chain_variant(rs, lambda, attempt)?;
        if out.iter().all(|(_, o)| o.roots() != c.roots()) {
            out.push((format!("segment from point {attempt}"), c));
            break;
        }
    }
    let coords = rs.fundamental_coords(lambda);
    let mut composed = LambdaChain::from_roots(rs, &[], Weight::zero(rs.ambient_dim()))?;
    for (i, c) in coords.iter().enumerate() {
        let c = c.to_integer();
        let n: i64 = i64::try_from(c).map_err(|_| Error::Capability(String::from("coefficient too large")))?;
        let sign = if n < 0 { -1 } else { 1 };
        let step = lambda_chain(rs, &rs.fundamental_weights()[i].scale(&q(sign)))?;
        for _ in 0..n.abs() {
            composed = concat_chains(rs, &composed, &step)?;
        }
    }
    out.push((String::from("concatenated fundamental chains"), composed));
    for i in 0..rs.rank() {
        let twice = chain_transform_full(rs, i, &chain_transform_full(rs, i, &base)?)?;
        out.push((format!("transformed twice at {}", i + 1), twice));
    }
    let a = rs.simple(0);
    let mut looped = vec![a, a.flip()];
    looped.extend(base.roots());
    out.push((String::from("with a loop"), LambdaChain::from_roots(rs, &looped, lambda.clone())?));
    Ok(out)
}

/// The words of `NC_W` that vanish: `u_i²` and the braid differences.
pub fn nilcoxeter_tensors(rs: &RootSystem) -> Vec<(String, TensorElement)> {
    let sim = |w: &[usize]| -> Vec<usize> { w.iter().map(|&i| rs.simple_indices()[i]).collect() };
    let mut out = Vec::new();
    for i in 0..rs.rank() {
        out.push((format!("u_{}^2", i + 1), TensorElement::word(&sim(&[i, i]))));
    }
    for i in 0..rs.rank() {
        for j in (i + 1)..rs.rank() {
            let m = rs.braid_order(i, j);
            let (l, r) = alternating_words(i, j, m);
            out.push((
                format!("braid u_{} u_{} m = {m}", i + 1, j + 1),
                &TensorElement::word(&sim(&l)) - &TensorElement::word(&sim(&r)),
            ));
        }
    }
    out
}

pub fn nilcoxeter_check(tower: &Tower, oracle_bound: usize) -> Vec<CheckOutcome> {
    let rs = tower.root_system();
    nilcoxeter_tensors(rs)
        .into_iter()
        .map(|(name, t)| {
            let r = tower
                .is_zero_checked(&t, oracle_bound)
                .map(|z| (!z).then(|| format!("{t} is nonzero")));
            CheckOutcome::from_result("nil_coxeter", format!("{} {name}", rs.kind()), r)
        })
        .collect()
}

/// `π_i² = -π_i` and the braid relations of the `π_i` on `e^μ` for `μ` in
/// the box `|c_i| ≤ radius`.
pub fn demazure_relations_check(rs: &RootSystem, radius: i64) -> Vec<CheckOutcome> {
    let monomials: Vec<GroupAlgebraElement> = weight_box(rs, -radius, radius)
        .iter()
        .map(|c| GroupAlgebraElement::monomial(rs.weight(c), Q::one()))
        .collect();
    let apply = |word: &[usize], f: &GroupAlgebraElement| -> Result<GroupAlgebraElement> {
        let mut g = f.clone();
        for &i in word.iter().rev() {
            g = demazure(rs, i, &g)?;
        }
        Ok(g)
    };
    let run = |lhs: &[usize], rhs: &[usize], plus: bool| -> Result<Option<String>> {
        for f in &monomials {
            let (l, r) = (apply(lhs, f)?, apply(rhs, f)?);
            let d = if plus { &l + &r } else { &l - &r };
            if !d.is_zero() {
                return Ok(Some(format!("fails on {f}")));
            }
        }
        Ok(None)
    };
    let span = format!("|c_i| <= {radius}");
    let mut out = Vec::new();
    for i in 0..rs.rank() {
        out.push(CheckOutcome::from_result(
            "demazure_quadratic",
            format!("{} pi_{} on {span}", rs.kind(), i + 1),
            run(&[i, i], &[i], true),
        ));
    }
    for i in 0..rs.rank() {
        for j in (i + 1)..rs.rank() {
            let m = rs.braid_order(i, j);
            let (l, r) = alternating_words(i, j, m);
            out.push(CheckOutcome::from_result(
                "demazure_braid",
                format!("{} pi_{} pi_{} m = {m} on {span}", rs.kind(), i + 1, j + 1),
                run(&l, &r, false),
            ));
        }
    }
    out
}

fn type_a_dim(rs: &RootSystem) -> Result<usize> {
    if rs.kind().family() != Family::A {
        return Err(Error::Capability(format!(
            "Dunkl elements need a type A system, not {}",
            rs.kind()
        )));
    }
    Ok(rs.ambient_dim())
}

/// `θ_i = Σ_{j ≠ i} [e_i - e_j]`, with `[-α] = -[α]`; `i` is 0-based.
pub fn dunkl_additive(rs: &RootSystem, i: usize) -> Result<NicholsElement> {
    let n = type_a_dim(rs)?;
    if i >= n {
        return Err(Error::Precondition(format!("index {i} out of range")));
    }
    let mut x = NicholsElement::zero();
    for j in (0..n).filter(|&j| j != i) {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v[j] = -1;
        let r = rs
            .normalize(&Weight::from_ints(&v))
            .ok_or_else(|| Error::Internal(String::from("e_i - e_j is not a root")))?;
        x.add_component(1, &unit_vec(r.index), &q(r.sign()));
    }
    Ok(x)
}

fn degree_one_tensor(x: &NicholsElement) -> TensorElement {
    let mut t = TensorElement::zero(1);
    for (k, c) in x.component(1) {
        t.add_term(vec![k], c);
    }
    t
}

/// `θ_i θ_j - θ_j θ_i = 0` for all `i < j`.
pub fn dunkl_commute_check(tower: &Tower, oracle_bound: usize) -> Result<Vec<CheckOutcome>> {
    let rs = tower.root_system();
    let n = type_a_dim(rs)?;
    let thetas = (0..n)
        .map(|i| dunkl_additive(rs, i).map(|x| degree_one_tensor(&x)))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let t = &thetas[i].tensor(&thetas[j]) - &thetas[j].tensor(&thetas[i]);
            let r = tower
                .is_zero_checked(&t, oracle_bound)
                .map(|z| (!z).then(|| format!("{t} is nonzero")));
            out.push(CheckOutcome::from_result(
                "dunkl_commute",
                format!("{} theta_{} theta_{}", rs.kind(), i + 1, j + 1),
                r,
            ));
        }
    }
    Ok(out)
}

/// `Σ_i θ_i`, which vanishes.
pub fn dunkl_sum(rs: &RootSystem) -> Result<NicholsElement> {
    let n = type_a_dim(rs)?;
    let mut s = NicholsElement::zero();
    for i in 0..n {
        s = s.add(&dunkl_additive(rs, i)?);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tower(label: &str, max: usize) -> Tower {
        Tower::build(RootSystem::from_label(label).unwrap(), max)
    }

    fn e(rs: &RootSystem, c: &[i64]) -> GroupAlgebraElement {
        GroupAlgebraElement::monomial(rs.weight(c), Q::one())
    }

    /// `(e^{α_i} - 1) π_i(f) = f - s_i f`, computed by polynomial arithmetic.
    #[test]
    fn demazure_closed_form_divides() {
        for label in ["A2", "B2", "G2", "A3"] {
            let rs = RootSystem::from_label(label).unwrap();
            for c in weight_box(&rs, -2, 2) {
                let f = e(&rs, &c);
                for i in 0..rs.rank() {
                    let ai = rs.simple(i);
                    let mut den = GroupAlgebraElement::monomial(rs.root(ai), Q::one());
                    den.add_term(Weight::zero(rs.ambient_dim()), -Q::one());
                    let lhs = &den * &demazure(&rs, i, &f).unwrap();
                    let rhs = &f - &f.reflect(&rs, ai);
                    assert_eq!(lhs, rhs, "{label} {c:?} {i}");
                }
            }
        }
    }

    #[test]
    fn demazure_examples() {
        let rs = RootSystem::from_label("A2").unwrap();
        let om1 = rs.fundamental_weights()[0].clone();
        let a1 = rs.root(rs.simple(0));
        let f = GroupAlgebraElement::monomial(om1.clone(), Q::one());
        assert_eq!(demazure(&rs, 0, &f).unwrap(), GroupAlgebraElement::monomial(&om1 - &a1, Q::one()));
        assert!(demazure(&rs, 1, &f).unwrap().is_zero());
        let g = GroupAlgebraElement::monomial(a1.clone(), Q::one());
        let mut expect = GroupAlgebraElement::one(rs.ambient_dim());
        expect.add_term(-&a1, Q::one());
        assert_eq!(demazure(&rs, 0, &g).unwrap(), expect);
    }

    #[test]
    fn h_inverse() {
        let t = tower("A2", 4);
        let km = KModel::new(&t);
        let a = SignedRoot::pos(1);
        let p = km.multiply(&h_elem(a), &h_elem(a.flip())).unwrap();
        assert_eq!(p, NicholsElement::one());
    }

    #[test]
    fn xi_omega1_a2() {
        let t = tower("A2", 4);
        let km = KModel::new(&t);
        let x = km.xi_fundamental(0).unwrap();
        let chain = lambda_chain(t.root_system(), &x.lambda).unwrap();
        assert_eq!(chain.roots(), vec![SignedRoot::pos(0), SignedRoot::pos(1)]);
        // 1 + [a1] + [a2] + [a2][a1]
        let mut y = NicholsElement::one();
        y.add_component(1, &unit_vec(0), &Q::one());
        y.add_component(1, &unit_vec(1), &Q::one());
        y = y.add(&t.element_from_tensor(&TensorElement::word(&[1, 0])).unwrap());
        assert_eq!(x.element, y);
    }

    #[test]
    fn xi_of_zero_and_inverse() {
        let t = tower("B2", 8);
        let km = KModel::new(&t);
        let rs = t.root_system();
        assert_eq!(km.xi(&Weight::zero(2)).unwrap().element, NicholsElement::one());
        let l = rs.weight(&[1, -1]);
        let p = km.multiply(&km.xi(&l).unwrap().element, &km.xi(&-&l).unwrap().element).unwrap();
        assert_eq!(p, NicholsElement::one());
    }

    #[test]
    fn pi_examples() {
        let t = tower("A2", 4);
        let km = KModel::new(&t);
        assert!(km.pi_op(0, &NicholsElement::one()).unwrap().is_zero());
        let a1 = SignedRoot::pos(t.root_system().simple_indices()[0]);
        let g = t.generator(a1);
        assert_eq!(km.pi_op(0, &g).unwrap(), h_elem(a1.flip()));
        let rs = t.root_system();
        let xi1 = km.xi_fundamental(0).unwrap().element;
        let target = km.xi(&(&rs.fundamental_weights()[0] - &rs.root(a1))).unwrap().element;
        assert_eq!(km.pi_op(0, &xi1).unwrap(), target);
        assert!(km.pi_op(1, &xi1).unwrap().is_zero());
    }

    #[test]
    fn chains_agree_a2_b2() {
        for label in ["A2", "B2"] {
            let t = tower(label, 10);
            let km = KModel::new(&t);
            let rs = t.root_system();
            for c in weight_box(rs, -1, 1) {
                let l = rs.weight(&c);
                let chains = alternative_chains(rs, &l).unwrap();
                assert!(chains.len() >= 4);
                assert!(km.chain_independence_check(&l, &chains).passed(), "{label} {c:?}");
            }
        }
    }

    #[test]
    fn nil_hecke_a2() {
        let t = tower("A2", 5);
        let km = KModel::new(&t);
        let out = km.nilhecke_check();
        assert_eq!(out.len(), 3);
        assert!(out.iter().all(|o| o.passed()), "{out:?}");
        assert!(nilcoxeter_check(&t, 6).iter().all(|o| o.passed()));
        assert!(demazure_relations_check(t.root_system(), 2).iter().all(|o| o.passed()));
    }

    #[test]
    fn k_rank_a2_and_b2() {
        for (label, w) in [("A2", 6), ("B2", 8)] {
            let t = tower(label, 10);
            let km = KModel::new(&t);
            let kr = km.k_rank(Some(2)).unwrap();
            assert_eq!(kr.rank, w);
            assert!(kr.outcomes.iter().all(|o| o.passed()), "{:?}", kr.outcomes);
        }
    }

    #[test]
    fn orbit_sum_collapse_a2() {
        let t = tower("A2", 5);
        let km = KModel::new(&t);
        let rs = t.root_system();
        let x = km.phi(&rs.orbit_sum(&rs.fundamental_weights()[0])).unwrap();
        assert_eq!(x, NicholsElement::one().scale(&q(3)));
    }

    #[test]
    fn dunkl_s3() {
        let t = tower("A2", 5);
        let rs = t.root_system();
        let th = dunkl_additive(rs, 0).unwrap();
        let mut expect = NicholsElement::zero();
        expect.add_component(1, &unit_vec(0), &Q::one());
        expect.add_component(1, &unit_vec(1), &Q::one());
        assert_eq!(th, expect);
        assert!(dunkl_sum(rs).unwrap().is_zero());
        assert!(dunkl_commute_check(&t, 6).unwrap().iter().all(|o| o.passed()));
        let b2 = RootSystem::from_label("B2").unwrap();
        assert!(matches!(dunkl_additive(&b2, 0), Err(Error::Capability(_))));
    }

    #[test]
    fn filtered_model_g2() {
        let t = tower("G2", 4);
        assert!(matches!(KModel::new(&t).xi_fundamental(0), Err(Error::Truncated { .. })));
        let km = KModel::filtered(&t, 4).unwrap();
        let x = km.xi_fundamental(0).unwrap().element;
        assert_eq!(x.max_degree(), Some(4));
        assert!(km.additivity_check(&x_weight(&t, 0), &x_weight(&t, 1)).iter().all(|o| o.passed()));
    }

    fn x_weight(t: &Tower, i: usize) -> Weight {
        t.root_system().fundamental_weights()[i].clone()
    }
}
