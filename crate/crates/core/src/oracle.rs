//! The symmetrizer presentation of `B_n = V^{⊗n} / Ker σ_n`, used as an
//! independent check on the derivative tower in low degrees.
//!
//! Monomials are packed into `u64` codes, four bits per letter, and
//! `σ_n` of a monomial is a sum of `n!` signed monomials.  `σ_n` preserves
//! the W-degree, so the elimination runs one W-degree block at a time.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::One;

use crate::braided::{yd_degree_index, PermTable, TensorElement, Word};
use crate::error::{Error, Result};
use crate::linalg::{add_entry, q, Echelon, Insertion, SparseVec, Q};
use crate::nichols::{NicholsElement, Tower};
use crate::report::CheckOutcome;
use crate::rootsys::{RootSystem, SignedRoot};

const BITS: u32 = 4;
const MASK: u64 = (1 << BITS) - 1;

/// Default limit on `|Δ_+|^n` for full eliminations.
pub const ELIMINATION_BUDGET: usize = 50_000;

pub fn encode(word: &[usize]) -> u64 {
    word.iter()
        .enumerate()
        .fold(0, |c, (i, &l)| c | ((l as u64) << (BITS * i as u32)))
}

pub fn decode(code: u64, n: usize) -> Word {
    (0..n).map(|i| letter(code, i)).collect()
}

fn letter(code: u64, pos: usize) -> usize {
    ((code >> (BITS * pos as u32)) & MASK) as usize
}

fn set_letter(code: u64, pos: usize, l: usize) -> u64 {
    let shift = BITS * pos as u32;
    (code & !(MASK << shift)) | ((l as u64) << shift)
}

/// Precomputed symmetrizer for one degree.
pub struct Symmetrizer<'a> {
    rs: &'a RootSystem,
    n: usize,
    steps: Vec<(usize, usize)>,
}

impl<'a> Symmetrizer<'a> {
    pub fn new(rs: &'a RootSystem, n: usize) -> Result<Self> {
        if rs.num_positive() > (1 << BITS) || n > 16 {
            return Err(Error::Capability(format!("words of length {n} cannot be packed")));
        }
        let table = PermTable::new(n);
        let steps = (0..table.len()).map(|k| table.step(k)).collect();
        Ok(Symmetrizer { rs, n, steps })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// `σ_n` of a monomial, as sorted `(code, coefficient)` pairs.
    pub fn monomial(&self, code: u64) -> Vec<(u64, i64)> {
        let mut imgs: Vec<(u64, bool)> = Vec::with_capacity(self.steps.len());
        imgs.push((code, false));
        for &(parent, pos) in &self.steps[1..] {
            let (c, neg) = imgs[parent];
            let (x, y) = (letter(c, pos), letter(c, pos + 1));
            let img = self.rs.reflect_root(x, SignedRoot::pos(y));
            let c = set_letter(set_letter(c, pos, img.index), pos + 1, x);
            imgs.push((c, neg != img.negative));
        }
        imgs.sort_unstable();
        let mut out: Vec<(u64, i64)> = Vec::new();
        for (c, neg) in imgs {
            let s = if neg { -1 } else { 1 };
            match out.last_mut() {
                Some((lc, v)) if *lc == c => *v += s,
                _ => out.push((c, s)),
            }
        }
        out.retain(|&(_, v)| v != 0);
        out
    }

    pub fn apply(&self, terms: &BTreeMap<u64, Q>) -> BTreeMap<u64, Q> {
        let mut out = BTreeMap::new();
        for (&c, v) in terms {
            for (img, s) in self.monomial(c) {
                add_entry(&mut out, img, v * q(s));
            }
        }
        out
    }
}

pub fn tensor_codes(t: &TensorElement) -> BTreeMap<u64, Q> {
    t.terms().map(|(w, c)| (encode(w), c.clone())).collect()
}

/// `D_α` on packed monomials of degree `n`.
pub fn d_alpha_codes(rs: &RootSystem, alpha: usize, n: usize, terms: &BTreeMap<u64, Q>) -> BTreeMap<u64, Q> {
    let mut out = BTreeMap::new();
    for (&c, v) in terms {
        let w = decode(c, n);
        for k in 0..n {
            if w[k] != alpha {
                continue;
            }
            let mut neg = false;
            let mut nw = Vec::with_capacity(n - 1);
            for &x in &w[..k] {
                let img = rs.reflect_root(alpha, SignedRoot::pos(x));
                neg ^= img.negative;
                nw.push(img.index);
            }
            nw.extend_from_slice(&w[k + 1..]);
            add_entry(&mut out, encode(&nw), if neg { -v } else { v.clone() });
        }
    }
    out
}

/// `B_n` in the symmetrizer presentation: a basis of monomials and, for
/// every other monomial `u`, the expansion `σ_n(u) = Σ c_i σ_n(b_i)`.
#[derive(Clone, Debug)]
pub struct OracleDegree {
    pub n: usize,
    pub rank: usize,
    pub basis: Vec<u64>,
    /// `(u, c)` with `u - Σ c_i basis[i] ∈ Ker σ_n`; these span the kernel.
    pub kernel: Vec<(u64, SparseVec)>,
}

fn all_words(r: usize, n: usize) -> Vec<Word> {
    let mut out: Vec<Word> = alloc::vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * r);
        for w in &out {
            for l in 0..r {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

fn check_budget(rs: &RootSystem, n: usize, budget: usize) -> Result<()> {
    match rs.num_positive().checked_pow(n as u32) {
        Some(size) if size <= budget => Ok(()),
        _ => Err(Error::Capability(format!(
            "{}^{n} monomials exceed the elimination budget {budget}",
            rs.num_positive()
        ))),
    }
}

pub fn oracle_degree(rs: &RootSystem, n: usize, budget: usize) -> Result<OracleDegree> {
    check_budget(rs, n, budget)?;
    let sym = Symmetrizer::new(rs, n)?;
    let mut blocks: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    for w in all_words(rs.num_positive(), n) {
        blocks.entry(yd_degree_index(rs, &w)).or_default().push(encode(&w));
    }
    let mut basis = Vec::new();
    let mut kernel = Vec::new();
    for codes in blocks.values() {
        let mut columns: BTreeMap<u64, usize> = BTreeMap::new();
        let mut ech = Echelon::new();
        let mut globals: Vec<usize> = Vec::new();
        for &c in codes {
            let mut v = SparseVec::new();
            for (img, s) in sym.monomial(c) {
                let next = columns.len();
                let col = *columns.entry(img).or_insert(next);
                v.insert(col, q(s));
            }
            match ech.insert(&v) {
                Insertion::Independent(_) => {
                    globals.push(basis.len());
                    basis.push(c);
                }
                Insertion::Dependent(comb) => {
                    kernel.push((c, comb.into_iter().map(|(l, x)| (globals[l], x)).collect()));
                }
            }
        }
    }
    Ok(OracleDegree {
        n,
        rank: basis.len(),
        basis,
        kernel,
    })
}

/// `σ_{n-1} ∘ D_α` on packed terms of degree `n`.
fn n_alpha(rs: &RootSystem, sym: &Symmetrizer<'_>, alpha: usize, n: usize, terms: &BTreeMap<u64, Q>) -> BTreeMap<u64, Q> {
    sym.apply(&d_alpha_codes(rs, alpha, n, terms))
}

fn single(c: u64) -> BTreeMap<u64, Q> {
    let mut m = BTreeMap::new();
    m.insert(c, Q::one());
    m
}

/// `D_α(Ker σ_n) ⊆ Ker σ_{n-1}` for every positive `α`, checked on the
/// spanning set `u - Σ c_i b_i` of the kernel.
pub fn well_definedness_check(rs: &RootSystem, n: usize, budget: usize) -> Result<CheckOutcome> {
    let instance = format!("{} degree {n}", rs.kind());
    if n == 0 {
        return Ok(CheckOutcome::pass("derivative_well_defined", instance));
    }
    let od = oracle_degree(rs, n, budget)?;
    let sym = Symmetrizer::new(rs, n - 1)?;
    for alpha in 0..rs.num_positive() {
        let basis_images: Vec<BTreeMap<u64, Q>> = od
            .basis
            .iter()
            .map(|&b| n_alpha(rs, &sym, alpha, n, &single(b)))
            .collect();
        for (u, comb) in &od.kernel {
            let mut lhs = n_alpha(rs, &sym, alpha, n, &single(*u));
            for (&i, c) in comb {
                for (&code, v) in &basis_images[i] {
                    add_entry(&mut lhs, code, -(c * v));
                }
            }
            if !lhs.is_empty() {
                let word: Vec<String> = decode(*u, n).iter().map(|l| format!("[{}]", l + 1)).collect();
                return Ok(CheckOutcome::fail(
                    "derivative_well_defined",
                    instance,
                    format!("D_{} of the kernel vector at {} is not in Ker σ_{}", alpha + 1, word.join(""), n - 1),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass("derivative_well_defined", instance))
}

/// Kernel dimension of the stacked `σ_{n-1} D_α` on the oracle basis of `B_n`.
pub fn oracle_common_kernel_dim(rs: &RootSystem, n: usize, budget: usize) -> Result<usize> {
    let od = oracle_degree(rs, n, budget)?;
    if n == 0 {
        return Ok(od.rank);
    }
    let sym = Symmetrizer::new(rs, n - 1)?;
    let mut columns: BTreeMap<(usize, u64), usize> = BTreeMap::new();
    let mut ech = Echelon::new();
    for &b in &od.basis {
        let mut v = SparseVec::new();
        for alpha in 0..rs.num_positive() {
            for (code, x) in n_alpha(rs, &sym, alpha, n, &single(b)) {
                let next = columns.len();
                let col = *columns.entry((alpha, code)).or_insert(next);
                v.insert(col, x);
            }
        }
        ech.insert(&v);
    }
    Ok(od.rank - ech.rank())
}

/// Dimensions by both routes and agreement of products on basis pairs.
pub fn oracle_crosscheck(tower: &Tower, n: usize, budget: usize) -> Result<Vec<CheckOutcome>> {
    let rs = tower.root_system();
    let instance = format!("{} degree {n}", rs.kind());
    let od = oracle_degree(rs, n, budget)?;
    let tdim = tower.dim(n)?;
    let mut out = alloc::vec![CheckOutcome::verdict("oracle_dimension", instance.clone(), od.rank == tdim, || {
        format!("symmetrizer rank {} but tower dimension {tdim}", od.rank)
    })];
    let sym = Symmetrizer::new(rs, n)?;
    let mut bad: Option<String> = None;
    'outer: for p in 0..=n {
        let qd = n - p;
        let (dp, dq) = (tower.dim(p)?, tower.dim(qd)?);
        for i in 0..dp {
            for j in 0..dq {
                let x = NicholsElement::from_component(p, crate::linalg::unit_vec(i));
                let y = NicholsElement::from_component(qd, crate::linalg::unit_vec(j));
                let prod = tower.multiply(&x, &y)?;
                let li = &tower.degrees()[p].labels[i];
                let lj = &tower.degrees()[qd].labels[j];
                let mut word = li.clone();
                word.extend_from_slice(lj);
                let mut diff = single(encode(&word));
                for (k, c) in prod.component(n) {
                    add_entry(&mut diff, encode(&tower.degrees()[n].labels[k]), -c);
                }
                if !sym.apply(&diff).is_empty() {
                    bad = Some(format!("product of basis vectors {i} (degree {p}) and {j} (degree {qd})"));
                    break 'outer;
                }
            }
        }
    }
    out.push(match bad {
        None => CheckOutcome::pass("oracle_products", instance),
        Some(w) => CheckOutcome::fail("oracle_products", instance, w),
    });
    Ok(out)
}

/// Whether a packed tensor lies in `Ker σ_n`.
pub fn in_symmetrizer_kernel(rs: &RootSystem, t: &TensorElement) -> Result<bool> {
    let sym = Symmetrizer::new(rs, t.degree())?;
    Ok(sym.apply(&tensor_codes(t)).is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_round_trip() {
        let w = alloc::vec![3, 0, 9, 2];
        assert_eq!(decode(encode(&w), 4), w);
    }

    #[test]
    fn packed_symmetrizer_matches_tensor_symmetrizer() {
        let rs = RootSystem::from_label("B2").unwrap();
        let sym = Symmetrizer::new(&rs, 3).unwrap();
        for w in all_words(4, 3) {
            let t = TensorElement::word(&w);
            let slow = crate::braided::symmetrizer(&rs, &t, 6).unwrap();
            let fast = sym.apply(&tensor_codes(&t));
            assert_eq!(fast, tensor_codes(&slow));
        }
    }

    #[test]
    fn oracle_dims_a2() {
        let rs = RootSystem::from_label("A2").unwrap();
        let dims: Vec<usize> = (0..=5).map(|n| oracle_degree(&rs, n, ELIMINATION_BUDGET).unwrap().rank).collect();
        assert_eq!(dims, alloc::vec![1, 3, 4, 3, 1, 0]);
    }

    #[test]
    fn budget_is_enforced() {
        let rs = RootSystem::from_label("A4").unwrap();
        assert!(matches!(oracle_degree(&rs, 5, ELIMINATION_BUDGET), Err(Error::Capability(_))));
    }
}
