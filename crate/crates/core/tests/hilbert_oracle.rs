//! Dimensions of `B_n` from a brute-force symmetrizer, compared with the
//! derivative tower and frozen.
//!
//! The oracle here shares nothing with the library beyond the root
//! coordinates: reflections are computed from inner products, every
//! permutation of `S_n` is expanded along a bubble-sort word, and the rank
//! of the full `|Δ+|^n × |Δ+|^n` matrix is taken over exact rationals.

use std::collections::HashMap;

use nichols_core::nichols::Tower;
use nichols_core::rootsys::{RootSystem, Weight};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `s_a(β)` as `(index, negative)` by `v - 2(v,a)/(a,a) a`.
fn reflect(roots: &[Weight], a: usize, b: usize) -> (usize, bool) {
    let (ra, rb) = (&roots[a], &roots[b]);
    let c = (rb.dot(ra) + rb.dot(ra)) / ra.dot(ra);
    let img = rb - &ra.scale(&c);
    for (k, r) in roots.iter().enumerate() {
        if *r == img {
            return (k, false);
        }
        if *r == -&img {
            return (k, true);
        }
    }
    panic!("reflection left the root system");
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Adjacent transpositions `t_1, …, t_l` (0-based) with
/// `perm = t_1 ∘ ⋯ ∘ t_l` read as a product of simple reflections.
fn bubble_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut word = Vec::new();
    while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
        p.swap(i, i + 1);
        word.push(i);
    }
    word.reverse();
    word
}

fn words(r: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..r).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = BigRational::one() / &rows[r][c];
        let pivot: Vec<BigRational> = rows[r].iter().map(|x| x * &inv).collect();
        for row in rows.iter_mut().skip(r + 1) {
            if !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// `rank σ_n` for the braided vector space of `rs`.
fn symmetrizer_rank(rs: &RootSystem, n: usize) -> usize {
    let roots = rs.positive_roots();
    let r = roots.len();
    let table: Vec<Vec<(usize, bool)>> = (0..r).map(|a| (0..r).map(|b| reflect(roots, a, b)).collect()).collect();
    let basis = words(r, n);
    let index: HashMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let perms: Vec<Vec<usize>> = permutations(n).iter().map(|p| bubble_word(p)).collect();
    let mut rows = vec![vec![BigRational::zero(); basis.len()]; basis.len()];
    for (col, w) in basis.iter().enumerate() {
        for word in &perms {
            let mut v = w.clone();
            let mut neg = false;
            for &i in word.iter().rev() {
                let (x, y) = (v[i], v[i + 1]);
                let (img, s) = table[x][y];
                v[i] = img;
                v[i + 1] = x;
                neg ^= s;
            }
            let entry = &mut rows[index[&v]][col];
            if neg {
                *entry -= BigRational::one();
            } else {
                *entry += BigRational::one();
            }
        }
    }
    rank(rows)
}

fn check(label: &str, frozen: &[usize]) {
    let rs = RootSystem::from_label(label).unwrap();
    let oracle: Vec<usize> = (0..frozen.len()).map(|n| symmetrizer_rank(&rs, n)).collect();
    assert_eq!(oracle, frozen, "{label}: oracle");
    let t = Tower::build(rs, frozen.len() - 1);
    let dims: Vec<usize> = (0..frozen.len()).map(|n| t.dim(n).unwrap()).collect();
    assert_eq!(dims, frozen, "{label}: tower");
}

#[test]
fn a2_is_finite_of_dimension_12() {
    check("A2", &[1, 3, 4, 3, 1, 0]);
}

#[test]
fn b2_and_c2_low_degrees() {
    check("B2", &[1, 4, 8, 12, 14]);
    check("C2", &[1, 4, 8, 12, 14]);
}

#[test]
fn a3_and_g2_low_degrees() {
    check("A3", &[1, 6, 19, 42]);
    check("G2", &[1, 6, 21, 60]);
}

#[test]
fn b3_low_degrees() {
    check("B3", &[1, 9, 46]);
}

#[test]
fn frozen_full_towers() {
    let b2 = Tower::build(RootSystem::from_label("B2").unwrap(), 12);
    assert_eq!(b2.dims(), [1, 4, 8, 12, 14, 12, 8, 4, 1, 0]);
    assert_eq!(b2.total_dim(), 64);
    let a3 = Tower::build(RootSystem::from_label("A3").unwrap(), 14);
    assert_eq!(a3.dims(), [1, 6, 19, 42, 71, 96, 106, 96, 71, 42, 19, 6, 1, 0]);
    assert_eq!(a3.total_dim(), 576);
    let g2 = Tower::build(RootSystem::from_label("G2").unwrap(), 5);
    assert_eq!(g2.dims(), [1, 6, 21, 60, 152, 354]);
    assert!(!g2.is_closed());
}

#[test]
fn sanity_of_the_oracle_rank() {
    let m = |v: &[i64]| v.iter().map(|&x| BigRational::from_integer(x.into())).collect::<Vec<_>>();
    assert_eq!(rank(vec![m(&[1, 2]), m(&[2, 4])]), 1);
    assert_eq!(rank(vec![m(&[0, 1]), m(&[1, 0])]), 2);
}
