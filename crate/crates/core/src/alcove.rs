//! Alcove paths and λ-chains.
//!
//! Alcoves are represented by interior points.  A chain is generated by
//! walking the straight segment from a generic point `p` of the fundamental
//! alcove to `p - λ` and recording the hyperplanes `H_{α,k}` it crosses; a
//! chain is validated by reflecting an interior point across one wall per
//! step and counting the hyperplanes that separate consecutive points.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{floor_i64, q, Q};
use crate::rootsys::{RootSystem, SignedRoot, Weight};

const PRIMES: [i64; 24] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
];

/// An alcove, given by a point in its interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alcove {
    point: Weight,
}

impl Alcove {
    pub fn point(&self) -> &Weight {
        &self.point
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlcoveStep {
    pub root: SignedRoot,
    /// The step crosses `H_{root, level}`.
    pub level: i64,
    /// Crossing time along the straight segment, for generated chains.
    pub crossing_time: Option<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaChain {
    pub target: Weight,
    pub steps: Vec<AlcoveStep>,
}

impl LambdaChain {
    pub fn roots(&self) -> Vec<SignedRoot> {
        self.steps.iter().map(|s| s.root).collect()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Validate `roots` as a λ-chain and record the crossed levels.
    pub fn from_roots(rs: &RootSystem, roots: &[SignedRoot], target: Weight) -> Result<Self> {
        let levels = validate_chain(rs, roots, &target)?;
        Ok(LambdaChain {
            target,
            steps: roots
                .iter()
                .zip(levels)
                .map(|(&root, level)| AlcoveStep {
                    root,
                    level,
                    crossing_time: None,
                })
                .collect(),
        })
    }
}

fn next_prime(n: i64) -> i64 {
    let mut m = n + 1;
    loop {
        if m > 1 && (2..).take_while(|d| d * d <= m).all(|d| m % d != 0) {
            return m;
        }
        m += 1;
    }
}

/// Interior point number `attempt` of the fundamental alcove.
///
/// `p = Σ (p_i / N) ω_i` with distinct primes `p_i` and a prime `N` larger
/// than every numerator `Σ p_i <ω_i, α^∨>`.
pub fn interior_point_variant(rs: &RootSystem, attempt: usize) -> Alcove {
    let r = rs.rank();
    let primes: Vec<i64> = (0..r).map(|i| PRIMES[(attempt + i) % PRIMES.len()]).collect();
    let primes: Vec<i64> = primes
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (((attempt + i) / PRIMES.len()) as i64) * 97)
        .collect();
    let numer = rs.weight(&primes);
    let max = (0..rs.num_positive())
        .map(|a| rs.pairing(&numer, SignedRoot::pos(a)))
        .max()
        .expect("nonempty root system");
    let n = next_prime(floor_i64(&max));
    Alcove {
        point: numer.scale(&(Q::one() / q(n))),
    }
}

pub fn interior_point(rs: &RootSystem) -> Alcove {
    interior_point_variant(rs, 0)
}

pub fn in_fundamental_alcove(rs: &RootSystem, x: &Weight) -> bool {
    (0..rs.num_positive()).all(|a| {
        let p = rs.pairing(x, SignedRoot::pos(a));
        p.is_positive() && p < Q::one()
    })
}

fn ensure_weight(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.dim() != rs.ambient_dim() || !rs.in_weight_lattice(lambda) {
        return Err(Error::Precondition(format!("{lambda} is not in the weight lattice")));
    }
    Ok(())
}

/// Straight-segment crossings from `p` to `p - λ`, or `None` on a tie.
fn segment_chain(rs: &RootSystem, p: &Weight, lambda: &Weight) -> Option<Vec<AlcoveStep>> {
    let mut steps = Vec::new();
    for a in 0..rs.num_positive() {
        let alpha = SignedRoot::pos(a);
        let start = rs.pairing(p, alpha);
        let m = rs.pairing(lambda, alpha);
        if m.is_zero() {
            continue;
        }
        let end = &start - &m;
        let (lo, hi) = if m.is_positive() { (&end, &start) } else { (&start, &end) };
        let root = if m.is_positive() { alpha } else { alpha.flip() };
        let mut k = floor_i64(lo) + 1;
        while q(k) < *hi {
            let t = (&start - q(k)) / &m;
            let level = if root.negative { -k } else { k };
            steps.push(AlcoveStep {
                root,
                level,
                crossing_time: Some(t),
            });
            k += 1;
        }
    }
    steps.sort_by(|x, y| x.crossing_time.cmp(&y.crossing_time));
    let tie = steps
        .windows(2)
        .any(|w| w[0].crossing_time == w[1].crossing_time);
    (!tie).then_some(steps)
}

/// The straight-segment λ-chain from interior point number `attempt`,
/// moving to the next point if two crossings coincide.
pub fn lambda_chain_variant(rs: &RootSystem, lambda: &Weight, attempt: usize) -> Result<LambdaChain> {
    ensure_weight(rs, lambda)?;
    for k in attempt..attempt + 64 {
        let p = interior_point_variant(rs, k);
        if let Some(steps) = segment_chain(rs, p.point(), lambda) {
            return Ok(LambdaChain {
                target: lambda.clone(),
                steps,
            });
        }
    }
    Err(Error::Internal(format!("no generic point found for {lambda}")))
}

pub fn lambda_chain(rs: &RootSystem, lambda: &Weight) -> Result<LambdaChain> {
    lambda_chain_variant(rs, lambda, 0)
}

/// Walk the alcove path described by `roots`; returns the crossed level of
/// every step.
pub fn validate_chain(rs: &RootSystem, roots: &[SignedRoot], lambda: &Weight) -> Result<Vec<i64>> {
    if lambda.dim() != rs.ambient_dim() {
        return Err(Error::Precondition(String::from("weight of the wrong dimension")));
    }
    let mut c = interior_point(rs).point;
    let mut levels = Vec::with_capacity(roots.len());
    let floors = |x: &Weight| -> Vec<i64> {
        (0..rs.num_positive())
            .map(|a| floor_i64(&rs.pairing(x, SignedRoot::pos(a))))
            .collect()
    };
    for (i, &beta) in roots.iter().enumerate() {
        if beta.index >= rs.num_positive() {
            return Err(Error::InvalidChain {
                step: i,
                reason: String::from("root index out of range"),
            });
        }
        let x = rs.pairing(&c, beta);
        let k = floor_i64(&x);
        let next = &c - &rs.root(beta).scale(&(&x - q(k)));
        let before = floors(&c);
        let after = floors(&next);
        let crossed: i64 = before.iter().zip(&after).map(|(a, b)| (a - b).abs()).sum();
        if crossed != 1 {
            return Err(Error::InvalidChain {
                step: i,
                reason: format!("step crosses {crossed} hyperplanes"),
            });
        }
        levels.push(k);
        c = next;
    }
    if !in_fundamental_alcove(rs, &(&c + lambda)) {
        return Err(Error::InvalidChain {
            step: roots.len(),
            reason: format!("path does not end in the alcove A - {lambda}"),
        });
    }
    Ok(levels)
}

pub fn is_lambda_chain(rs: &RootSystem, roots: &[SignedRoot], lambda: &Weight) -> bool {
    validate_chain(rs, roots, lambda).is_ok()
}

/// `Σ_α #{k ∈ Z strictly between <p, α^∨> and <p - λ, α^∨>}`.
pub fn separating_count(rs: &RootSystem, lambda: &Weight) -> Result<usize> {
    ensure_weight(rs, lambda)?;
    let p = interior_point(rs).point;
    let end = &p - lambda;
    let mut count = 0usize;
    for a in 0..rs.num_positive() {
        let x = rs.pairing(&p, SignedRoot::pos(a));
        let y = rs.pairing(&end, SignedRoot::pos(a));
        count += (floor_i64(&x) - floor_i64(&y)).unsigned_abs() as usize;
    }
    Ok(count)
}

fn check_simple(rs: &RootSystem, i: usize) -> Result<SignedRoot> {
    if i >= rs.rank() {
        return Err(Error::Precondition(format!("simple index {i} out of range")));
    }
    Ok(rs.simple(i))
}

/// `(α_i, s_i β_1, …, s_i β_l, -α_i)`, an `s_i(λ)`-chain.
pub fn chain_transform_full(rs: &RootSystem, i: usize, chain: &LambdaChain) -> Result<LambdaChain> {
    let ai = check_simple(rs, i)?;
    validate_chain(rs, &chain.roots(), &chain.target)?;
    let mut roots = Vec::with_capacity(chain.len() + 2);
    roots.push(ai);
    roots.extend(chain.steps.iter().map(|s| rs.reflect_root(ai.index, s.root)));
    roots.push(ai.flip());
    LambdaChain::from_roots(rs, &roots, rs.reflect(ai, &chain.target))
}

/// `(α_i, s_i β_1, …, s_i β_{j-1}, β_{j+1}, …, β_l)` for a 0-based position
/// `j` with `β_j = ±α_i`.
///
/// If step `j` crosses `H_{α_i, k}`, the result is a `(λ + k α_i)`-chain:
/// the new path is the old one with its first `j` alcoves reflected in
/// `H_{α_i, 0}` and then in `H_{α_i, k}`, which is translation by `k α_i`.
pub fn chain_transform_truncated(
    rs: &RootSystem,
    i: usize,
    j: usize,
    chain: &LambdaChain,
) -> Result<LambdaChain> {
    let ai = check_simple(rs, i)?;
    let levels = validate_chain(rs, &chain.roots(), &chain.target)?;
    let bj = chain
        .steps
        .get(j)
        .ok_or_else(|| Error::Precondition(format!("position {j} outside the chain")))?
        .root;
    if bj.index != ai.index {
        return Err(Error::Precondition(format!(
            "step {j} is not ±α_{}",
            i + 1
        )));
    }
    let k = if bj.negative { -levels[j] } else { levels[j] };
    let mut roots = Vec::with_capacity(chain.len());
    roots.push(ai);
    roots.extend(chain.steps[..j].iter().map(|s| rs.reflect_root(ai.index, s.root)));
    roots.extend(chain.steps[j + 1..].iter().map(|s| s.root));
    let target = &chain.target + &rs.root(ai).scale(&q(k));
    LambdaChain::from_roots(rs, &roots, target)
}

/// The chain of the composite path `A → A - λ → A - λ - μ`.
pub fn concat_chains(rs: &RootSystem, c1: &LambdaChain, c2: &LambdaChain) -> Result<LambdaChain> {
    validate_chain(rs, &c1.roots(), &c1.target)?;
    validate_chain(rs, &c2.roots(), &c2.target)?;
    let mut roots = c1.roots();
    roots.extend(c2.roots());
    LambdaChain::from_roots(rs, &roots, &c1.target + &c2.target)
}

/// The reversed path, read as a `(-λ)`-chain.
pub fn reverse_chain(rs: &RootSystem, chain: &LambdaChain) -> Result<LambdaChain> {
    let roots: Vec<SignedRoot> = chain.steps.iter().rev().map(|s| s.root.flip()).collect();
    LambdaChain::from_roots(rs, &roots, -&chain.target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> RootSystem {
        RootSystem::from_label("A2").unwrap()
    }

    #[test]
    fn interior_points_are_interior() {
        for l in ["A2", "A3", "A4", "B2", "C2", "B3", "G2"] {
            let rs = RootSystem::from_label(l).unwrap();
            for k in 0..5 {
                let p = interior_point_variant(&rs, k);
                assert!(in_fundamental_alcove(&rs, p.point()), "{l} {k}");
            }
        }
    }

    #[test]
    fn omega1_chain_in_a2() {
        let rs = a2();
        let w1 = rs.fundamental_weights()[0].clone();
        let c = lambda_chain(&rs, &w1).unwrap();
        assert_eq!(c.roots(), vec![SignedRoot::pos(0), SignedRoot::pos(1)]);
        assert_eq!(separating_count(&rs, &w1).unwrap(), 2);
        assert!(is_lambda_chain(&rs, &c.roots(), &w1));
        let rev: Vec<_> = c.roots().into_iter().rev().collect();
        assert!(!is_lambda_chain(&rs, &rev, &w1));
        let rho = rs.rho().clone();
        assert_eq!(separating_count(&rs, &rho).unwrap(), 4);
    }

    #[test]
    fn empty_chain() {
        let rs = a2();
        let z = Weight::zero(3);
        assert!(lambda_chain(&rs, &z).unwrap().is_empty());
        assert!(is_lambda_chain(&rs, &[], &z));
        let full = chain_transform_full(&rs, 0, &lambda_chain(&rs, &z).unwrap()).unwrap();
        assert_eq!(full.roots(), vec![SignedRoot::pos(0), SignedRoot::neg(0)]);
    }

    #[test]
    fn truncated_transform_examples() {
        let rs = a2();
        let w1 = rs.fundamental_weights()[0].clone();
        let c = lambda_chain(&rs, &w1).unwrap();
        let t = chain_transform_truncated(&rs, 0, 0, &c).unwrap();
        assert_eq!(t.roots(), c.roots());
        assert_eq!(t.target, w1);
        assert!(chain_transform_truncated(&rs, 0, 1, &c).is_err());
        let neg = reverse_chain(&rs, &c).unwrap();
        assert_eq!(neg.roots(), vec![SignedRoot::neg(1), SignedRoot::neg(0)]);
        let t = chain_transform_truncated(&rs, 0, 1, &neg).unwrap();
        assert_eq!(t.roots()[0], SignedRoot::pos(0));
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn non_weight_is_rejected() {
        let rs = a2();
        let half = rs.fundamental_weights()[0].scale(&crate::linalg::qr(1, 2));
        assert!(lambda_chain(&rs, &half).is_err());
    }
}
