//! The verification suites and their instance grids.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use nichols_core::alcove::{
    chain_transform_full, chain_transform_truncated, is_lambda_chain, lambda_chain, reverse_chain,
    separating_count, LambdaChain,
};
use nichols_core::equivariant::{Equivariant, TorusPolynomial};
use nichols_core::group_algebra::GroupAlgebraElement;
use nichols_core::kmodel::{
    alternative_chains, default_box_radius, demazure_relations_check, dunkl_commute_check,
    nilcoxeter_check, weight_box, KModel,
};
use nichols_core::linalg::q;
use nichols_core::nichols::{check_relations, common_kernel_check, is_palindromic, yang_baxter_check, Tower};
use nichols_core::oracle::{oracle_crosscheck, well_definedness_check, ELIMINATION_BUDGET};
use nichols_core::report::{CheckOutcome, Status};
use nichols_core::rootsys::{RootSystem, SignedRoot, Weight};
use nichols_core::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{Profile, RunConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Relations,
    YangBaxter,
    Tower,
    Chains,
    KModel,
    NilHecke,
    Equivariant,
    Dunkl,
}

pub const ALL_SUITES: [Suite; 8] = [
    Suite::Relations,
    Suite::YangBaxter,
    Suite::Tower,
    Suite::Chains,
    Suite::KModel,
    Suite::NilHecke,
    Suite::Equivariant,
    Suite::Dunkl,
];

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::YangBaxter => "yangbaxter",
            Suite::Tower => "tower",
            Suite::Chains => "chains",
            Suite::KModel => "kmodel",
            Suite::NilHecke => "nilhecke",
            Suite::Equivariant => "equivariant",
            Suite::Dunkl => "dunkl",
        }
    }

    /// `all` or a comma-separated list of suite names.
    pub fn parse_list(s: &str) -> std::result::Result<Vec<Suite>, String> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim) {
            if part.eq_ignore_ascii_case("all") {
                out.extend(ALL_SUITES);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ALL_SUITES
            .iter()
            .copied()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// One report line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub suite: Suite,
    pub outcome: CheckOutcome,
    /// Wall time of the call that produced the outcome.
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteRun {
    pub entries: Vec<Entry>,
    /// Extra facts worth recording, such as the box radius at which the
    /// K-ring rank was reached.
    pub notes: Vec<(String, String)>,
}

struct Recorder {
    suite: Suite,
    run: SuiteRun,
}

impl Recorder {
    fn new(suite: Suite) -> Self {
        Recorder {
            suite,
            run: SuiteRun::default(),
        }
    }

    fn many(&mut self, f: impl FnOnce() -> Vec<CheckOutcome>) {
        let t = Instant::now();
        let outcomes = f();
        self.push(t.elapsed().as_millis(), outcomes);
    }

    fn push(&mut self, ms: u128, outcomes: Vec<CheckOutcome>) {
        for outcome in outcomes {
            self.run.entries.push(Entry {
                suite: self.suite,
                outcome,
                elapsed_ms: ms,
            });
        }
    }

    fn one(&mut self, f: impl FnOnce() -> CheckOutcome) {
        self.many(|| vec![f()]);
    }

    /// A fallible group; an error becomes a single outcome named `check`.
    fn fallible(&mut self, check: &str, instance: String, f: impl FnOnce() -> Result<Vec<CheckOutcome>>) {
        self.many(|| match f() {
            Ok(v) => v,
            Err(e) => vec![CheckOutcome::from_result(check, instance, Err(e))],
        });
    }

    fn note(&mut self, key: &str, value: String) {
        self.run.notes.push((key.to_string(), value));
    }
}

/// The immutable inputs shared by every suite of a run.
pub struct Context<'a> {
    pub config: &'a RunConfig,
    pub tower: &'a Tower,
}

impl Context<'_> {
    fn rs(&self) -> &RootSystem {
        self.tower.root_system()
    }

    fn label(&self) -> String {
        self.rs().kind().to_string()
    }

    pub fn run(&self, suite: Suite) -> SuiteRun {
        let mut rec = Recorder::new(suite);
        match suite {
            Suite::Relations => rec.many(|| check_relations(self.tower, self.config.oracle_bound)),
            Suite::YangBaxter => rec.many(|| yang_baxter_check(self.tower, self.config.oracle_bound)),
            Suite::Tower => self.tower_suite(&mut rec),
            Suite::Chains => self.chains_suite(&mut rec),
            Suite::KModel => self.kmodel_suite(&mut rec),
            Suite::NilHecke => self.nilhecke_suite(&mut rec),
            Suite::Equivariant => self.equivariant_suite(&mut rec),
            Suite::Dunkl => {
                let inst = self.label();
                rec.fallible("dunkl_commute", inst, || {
                    dunkl_commute_check(self.tower, self.config.oracle_bound)
                });
            }
        }
        rec.run
    }

    /// Oracle degrees: up to the oracle bound and the configured maximum.
    fn oracle_degrees(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.config.oracle_bound.min(self.config.max_degree)
    }

    fn tower_suite(&self, rec: &mut Recorder) {
        let rs = self.rs();
        let t = self.tower;
        rec.note("hilbert", format!("{:?}", t.dims()));
        rec.note("closed", t.is_closed().to_string());
        rec.one(|| {
            let inst = self.label();
            if t.is_closed() {
                CheckOutcome::verdict("hilbert_palindromic", inst, is_palindromic(&t.dims()), || {
                    format!("dims {:?}", t.dims())
                })
            } else {
                CheckOutcome::skipped(
                    "hilbert_palindromic",
                    inst,
                    format!("tower not closed through degree {}", t.computed_degree()),
                )
            }
        });
        for n in 1..=t.computed_degree() {
            rec.one(|| {
                CheckOutcome::verdict("tower_degree_consistent", format!("{} degree {n}", rs.kind()), t.verify_degree(n), || {
                    String::from("stored structure maps differ from a fresh computation")
                })
            });
        }
        rec.many(|| common_kernel_check(t, t.computed_degree()));
        for n in self.oracle_degrees() {
            let inst = format!("{} degree {n}", rs.kind());
            rec.fallible("derivative_well_defined", inst.clone(), || {
                well_definedness_check(rs, n, ELIMINATION_BUDGET).map(|o| vec![o])
            });
            if n <= t.computed_degree() {
                rec.fallible("oracle_dimension", inst, || oracle_crosscheck(t, n, ELIMINATION_BUDGET));
            }
        }
    }

    fn chains_suite(&self, rec: &mut Recorder) {
        let rs = self.rs();
        for c in weight_box(rs, -2, 2) {
            let lambda = rs.weight(&c);
            let inst = format!("{} lambda {lambda}", rs.kind());
            let chain = match lambda_chain(rs, &lambda) {
                Ok(ch) => ch,
                Err(e) => {
                    rec.one(|| CheckOutcome::fail("chain_valid", inst.clone(), format!("{e}")));
                    continue;
                }
            };
            rec.one(|| {
                CheckOutcome::verdict("chain_valid", inst.clone(), is_lambda_chain(rs, &chain.roots(), &lambda), || {
                    format!("{:?} does not validate", chain_coords(rs, &chain))
                })
            });
            rec.one(|| {
                let r = separating_count(rs, &lambda)
                    .map(|s| (s != chain.len()).then(|| format!("length {} versus {s} separating hyperplanes", chain.len())));
                CheckOutcome::from_result("chain_length", inst.clone(), r)
            });
            rec.one(|| {
                let r = (|| -> Result<Option<String>> {
                    for i in 0..rs.rank() {
                        let full = chain_transform_full(rs, i, &chain)?;
                        let target = rs.reflect(rs.simple(i), &lambda);
                        if full.target != target || !is_lambda_chain(rs, &full.roots(), &target) {
                            return Ok(Some(format!("full transform at {} is not an s_i(lambda)-chain", i + 1)));
                        }
                        for (j, s) in chain.steps.iter().enumerate() {
                            if s.root.index != rs.simple(i).index {
                                continue;
                            }
                            let tr = chain_transform_truncated(rs, i, j, &chain)?;
                            if !is_lambda_chain(rs, &tr.roots(), &tr.target) {
                                return Ok(Some(format!("truncated transform at {}, position {j}", i + 1)));
                            }
                        }
                    }
                    Ok(None)
                })();
                CheckOutcome::from_result("chain_transforms", inst.clone(), r)
            });
            rec.one(|| {
                let r = reverse_chain(rs, &chain).map(|_| None);
                CheckOutcome::from_result("chain_reverse", inst, r)
            });
        }
    }

    /// `{0, ±ω_i, ρ}`.
    pub fn weight_grid(rs: &RootSystem) -> Vec<Weight> {
        let mut g = vec![Weight::zero(rs.ambient_dim())];
        for om in rs.fundamental_weights() {
            g.push(om.clone());
            g.push(-om);
        }
        g.push(rs.rho().clone());
        g
    }

    /// `e^{ω_j}`, `e^{ω_1 + ω_2}` and seeded random elements of support at
    /// most 4 over the box `|c_i| ≤ 2`.
    pub fn demazure_sample(rs: &RootSystem, seed: u64) -> Vec<GroupAlgebraElement> {
        let one = |w: Weight| GroupAlgebraElement::monomial(w, q(1));
        let mut out: Vec<GroupAlgebraElement> = rs.fundamental_weights().iter().cloned().map(one).collect();
        if rs.rank() >= 2 {
            out.push(one(&rs.fundamental_weights()[0] + &rs.fundamental_weights()[1]));
        }
        let bx = weight_box(rs, -2, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        while out.len() < rs.rank() + 1 + 5 {
            let mut f = GroupAlgebraElement::zero();
            let support = rng.gen_range(1..=4);
            for _ in 0..support {
                let c = &bx[rng.gen_range(0..bx.len())];
                let mut a: i64 = rng.gen_range(-3..=2);
                if a >= 0 {
                    a += 1;
                }
                f.add_term(rs.weight(c), q(a));
            }
            if !f.is_zero() {
                out.push(f);
            }
        }
        out
    }

    /// The exact model, or under the extended profile the filtered one
    /// when the tower is not closed.
    fn kmodel(&self) -> Result<KModel<'_>> {
        if self.tower.is_closed() || self.config.profile == Profile::Default {
            Ok(KModel::new(self.tower))
        } else {
            KModel::filtered(self.tower, self.tower.computed_degree())
        }
    }

    fn kmodel_suite(&self, rec: &mut Recorder) {
        let rs = self.rs();
        let model = match self.kmodel() {
            Ok(m) => m,
            Err(e) => {
                rec.one(|| CheckOutcome::from_result("kmodel", self.label(), Err(e)));
                return;
            }
        };
        if let Some(cap) = model.cap() {
            rec.note("kmodel_filtered_cap", cap.to_string());
        }
        let grid = Self::weight_grid(rs);
        for l in &grid {
            rec.one(|| match alternative_chains(rs, l) {
                Ok(chains) => model.chain_independence_check(l, &chains),
                Err(e) => CheckOutcome::from_result("chain_independence", format!("{} {l}", rs.kind()), Err(e)),
            });
        }
        for (a, l) in grid.iter().enumerate() {
            for m in &grid[a..] {
                rec.many(|| model.additivity_check(l, m));
            }
        }
        for f in Self::demazure_sample(rs, self.config.seed) {
            for i in 0..rs.rank() {
                rec.one(|| model.prop31_check(&f, i));
                rec.one(|| model.conjugation_check(&f, i));
            }
        }
        let radius = default_box_radius(rs);
        let t = Instant::now();
        let k = model.k_rank(Some(radius));
        let ms = t.elapsed().as_millis();
        match k {
            Ok(k) => {
                rec.note("k_rank", k.rank.to_string());
                if let Some(r) = k.smallest_radius {
                    rec.note("k_rank_smallest_radius", r.to_string());
                }
                rec.push(ms, k.outcomes);
            }
            Err(e) => rec.push(
                ms,
                vec![CheckOutcome::from_result("k_rank", format!("{} box 0..={radius}", rs.kind()), Err(e))],
            ),
        }
    }

    fn nilhecke_suite(&self, rec: &mut Recorder) {
        let rs = self.rs();
        rec.many(|| KModel::new(self.tower).nilhecke_check());
        rec.many(|| nilcoxeter_check(self.tower, self.config.oracle_bound));
        rec.many(|| demazure_relations_check(rs, 2));
    }

    fn equivariant_suite(&self, rec: &mut Recorder) {
        let rs = self.rs();
        let eq = Equivariant::new(self.tower);
        let model = KModel::new(self.tower);
        rec.many(|| eq.h_eq_check());
        for a in 0..rs.num_positive() {
            for om in rs.fundamental_weights() {
                rec.one(|| eq.commutation_check(SignedRoot::pos(a), om));
            }
        }
        rec.many(|| eq.yang_baxter_check());
        let grid = Self::weight_grid(rs);
        for l in &grid {
            rec.one(|| match alternative_chains(rs, l) {
                Ok(chains) => eq.chain_independence_check(l, &chains),
                Err(e) => CheckOutcome::from_result("eq_chain_independence", format!("{} {l}", rs.kind()), Err(e)),
            });
            rec.one(|| match model.xi(l) {
                Ok(x) => eq.specialize_check(l, &x.element),
                Err(e) => CheckOutcome::from_result("specialize_xi_eq", format!("{} {l}", rs.kind()), Err(e)),
            });
        }
        for (a, l) in grid.iter().enumerate() {
            for m in &grid[a..] {
                rec.many(|| eq.additivity_check(l, m));
            }
        }
        for f in Self::demazure_sample(rs, self.config.seed) {
            let f = TorusPolynomial::from_group_algebra(&f);
            for i in 0..rs.rank() {
                rec.one(|| eq.intertwine_check(&f, i));
            }
        }
        let orbits: Vec<GroupAlgebraElement> = rs.fundamental_weights().iter().map(|om| rs.orbit_sum(om)).collect();
        rec.one(|| eq.invariant_image_check(&GroupAlgebraElement::one(rs.ambient_dim())));
        for (a, f) in orbits.iter().enumerate() {
            rec.one(|| eq.invariant_image_check(f));
            for g in &orbits[a..] {
                rec.one(|| eq.invariant_image_check(&(f * g)));
            }
        }
        let weights = Self::rank_weights(rs);
        rec.one(|| eq.eq_rank_probe(&weights));
    }

    /// Weights for the equivariant rank probe: `0, ω_1, ω_2, ρ, 2ω_1, 2ω_2`
    /// in rank two, then box weights until there are `|W|` of them.
    pub fn rank_weights(rs: &RootSystem) -> Vec<Weight> {
        let w = rs.weyl_order();
        let mut v = Vec::new();
        if rs.rank() == 2 {
            let om = rs.fundamental_weights();
            v.push(Weight::zero(rs.ambient_dim()));
            v.push(om[0].clone());
            v.push(om[1].clone());
            v.push(rs.rho().clone());
            v.push(om[0].scale(&q(2)));
            v.push(om[1].scale(&q(2)));
        }
        for c in weight_box(rs, 0, default_box_radius(rs)) {
            if v.len() >= w {
                break;
            }
            let x = rs.weight(&c);
            if !v.contains(&x) {
                v.push(x);
            }
        }
        v.truncate(w);
        v
    }
}

fn chain_coords(rs: &RootSystem, chain: &LambdaChain) -> Vec<String> {
    chain.roots().iter().map(|&r| format!("{}", rs.root(r))).collect()
}

/// Run `suites` over one tower, concurrently, and merge the results in
/// `(suite, check, instance)` order.
pub fn run_suites(config: &RunConfig, tower: &Tower, suites: &[Suite]) -> SuiteRun {
    let ctx = Context { config, tower };
    let runs: Vec<SuiteRun> = std::thread::scope(|s| {
        let ctx = &ctx;
        let handles: Vec<_> = suites.iter().map(|&su| s.spawn(move || ctx.run(su))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    let mut merged = SuiteRun::default();
    for r in runs {
        merged.entries.extend(r.entries);
        merged.notes.extend(r.notes);
    }
    merged
        .entries
        .sort_by(|a, b| (a.suite, &a.outcome.check, &a.outcome.instance).cmp(&(b.suite, &b.outcome.check, &b.outcome.instance)));
    merged.notes.sort();
    merged
}

pub fn any_failed(run: &SuiteRun) -> bool {
    run.entries.iter().any(|e| e.outcome.status == Status::Fail)
}

