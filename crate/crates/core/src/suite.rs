//! Seeded acceptance suite: criteria 1 to 11 as ledgers of named identity checks.
//!
//! Each criterion draws from its own generator seeded by `(seed, id)`, so the
//! criteria can run in parallel and still produce byte-identical reports.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bridge::mixed_mult_volume_bridge;
use crate::closed_forms::{
    bigraded_free_mixed, filter_regular_extended, filter_regular_rees, hoang_mixed, d_sequence_rees, regular_sequence_rees_mixed,
};
use crate::error::Result;
use crate::hilbert::FitOptions;
use crate::monomial::{ExponentVector, MonomialIdeal, RingContext};
use crate::multiplicities::{
    default_fit_options, dade_multiplicity, extended_rees_multiplicity, inequality_suite, is_integrally_closed,
    milnor_sequence, mixed_multiplicities, multiplicity_sequence, order_formula_check, positivity_set, rees_algebra_multiplicity,
    rigidity_check, samuel_multiplicity, samuel_multiplicity_in, staircase_volume_multiplicity, total_grading_multiplicity,
    IdealTuple,
};
use crate::polytope::{minkowski_volume_polynomial, mixed_volume, LatticePolytope, Point};
use crate::rational::factorial;
use crate::rees::{free_bigraded_mixed, rees_mixed_multiplicities, rees_mixed_multiplicities_in};

/// One identity evaluated on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub anchor: String,
    pub instance: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub title: String,
    pub checks: Vec<Check>,
}

impl CriterionReport {
    pub fn pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub criteria: Vec<CriterionReport>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.criteria.iter().all(CriterionReport::pass)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub ehrhart_check: bool,
    /// Overrides the largest fitting box side.
    pub box_cap: Option<u32>,
}

impl SuiteOptions {
    pub fn new(seed: u64) -> Self {
        SuiteOptions { seed, ehrhart_check: true, box_cap: None }
    }

    fn fit(&self, arity: usize) -> FitOptions {
        let mut o = default_fit_options(arity);
        if let Some(cap) = self.box_cap {
            o.box_cap = cap;
        }
        o
    }

    fn rng(&self, id: u32) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ u64::from(id))
    }
}

pub const CRITERIA: [(u32, &str); 11] = [
    (1, "Samuel multiplicity equals the staircase volume"),
    (2, "order formula for e_1(m|J)"),
    (3, "Bhattacharya expansion and multiplicity inequalities"),
    (4, "Rees algebra multiplicity as a sum of mixed multiplicities"),
    (5, "multiplicity sequence values and support"),
    (6, "mixed-volume kernel"),
    (7, "mixed multiplicities equal lattice mixed volumes"),
    (8, "non-standard Rees algebra fits"),
    (9, "Milnor sequences of Brieskorn singularities"),
    (10, "total-grading and Dade sums"),
    (11, "rigidity of positive mixed multiplicities"),
];

pub fn run_suite(opts: &SuiteOptions) -> SuiteReport {
    let criteria = CRITERIA.par_iter().map(|&(id, _)| run_criterion(id, opts)).collect();
    SuiteReport { seed: opts.seed, criteria }
}

pub fn run_criterion(id: u32, opts: &SuiteOptions) -> CriterionReport {
    let title = CRITERIA.iter().find(|c| c.0 == id).map_or("unknown criterion", |c| c.1).to_string();
    let mut log = Log::default();
    let mut rng = opts.rng(id);
    match id {
        1 => samuel_staircase(&mut log, &mut rng),
        2 => order_formula(&mut log, &mut rng, opts),
        3 => bhattacharya(&mut log, &mut rng, opts),
        4 => rees_sum_of_mixed(&mut log, &mut rng, opts),
        5 => multiplicity_sequences(&mut log, &mut rng, opts),
        6 => volume_kernel(&mut log, &mut rng, opts),
        7 => bridge(&mut log, &mut rng, opts),
        8 => nonstandard_rees(&mut log, &mut rng, opts),
        9 => milnor(&mut log, &mut rng, opts),
        10 => dade_sums(&mut log, &mut rng, opts),
        11 => rigidity(&mut log, &mut rng, opts),
        _ => log.fail("criterion", "-", format!("no criterion {id}")),
    }
    CriterionReport { id, title, checks: log.checks }
}

#[derive(Default)]
struct Log {
    checks: Vec<Check>,
}

impl Log {
    fn push(&mut self, anchor: &str, instance: &str, pass: bool, detail: String) {
        self.checks.push(Check { anchor: anchor.into(), instance: instance.into(), pass, detail });
    }

    fn fail(&mut self, anchor: &str, instance: &str, detail: String) {
        self.push(anchor, instance, false, detail);
    }

    /// Records `lhs == rhs`, or the error that prevented the comparison.
    fn equal<T: PartialEq + std::fmt::Debug>(&mut self, anchor: &str, instance: &str, sides: Result<(T, T)>) {
        match sides {
            Ok((a, b)) => {
                let pass = a == b;
                self.push(anchor, instance, pass, format!("{a:?} {} {b:?}", if pass { "=" } else { "≠" }));
            }
            Err(e) => self.fail(anchor, instance, format!("error: {e}")),
        }
    }

    /// Records a list of violations; empty means pass.
    fn clean(&mut self, anchor: &str, instance: &str, violations: Result<Vec<String>>) {
        match violations {
            Ok(v) if v.is_empty() => self.push(anchor, instance, true, "no violations".into()),
            Ok(v) => self.fail(anchor, instance, v.join("; ")),
            Err(e) => self.fail(anchor, instance, format!("error: {e}")),
        }
    }
}

fn ring(n: usize) -> Arc<RingContext> {
    Arc::new(RingContext::standard(n))
}

fn parse(n: usize, text: &str) -> MonomialIdeal {
    MonomialIdeal::parse(ring(n), text).expect("suite ideals are well formed")
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, degree: u32) -> ExponentVector {
    let mut w = vec![0; n];
    for _ in 0..degree {
        w[rng.gen_range(0..n)] += 1;
    }
    w
}

/// Pure powers `x_i^{a_i}` with `a_i ≤ max_deg`, plus up to three monomials.
fn random_primary(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> MonomialIdeal {
    let mut gens: Vec<ExponentVector> = (0..n)
        .map(|i| {
            let mut w = vec![0; n];
            w[i] = rng.gen_range(1..=max_deg);
            w
        })
        .collect();
    for _ in 0..rng.gen_range(0..=3) {
        let d = rng.gen_range(1..=max_deg);
        gens.push(random_monomial(rng, n, d));
    }
    MonomialIdeal::new(ring(n), gens).expect("lengths match")
}

/// `m`-primary with order exactly `o`: every generator has degree in `[o, o + 2]`.
fn random_of_order(rng: &mut ChaCha8Rng, n: usize, o: u32) -> MonomialIdeal {
    let mut gens: Vec<ExponentVector> = (0..n)
        .map(|i| {
            let mut w = vec![0; n];
            w[i] = rng.gen_range(o..=o + 2);
            w
        })
        .collect();
    gens.push(random_monomial(rng, n, o));
    for _ in 0..rng.gen_range(0..=2) {
        let d = rng.gen_range(o..=o + 2);
        gens.push(random_monomial(rng, n, d));
    }
    MonomialIdeal::new(ring(n), gens).expect("lengths match")
}

/// A nonzero proper ideal with 1 to `max_gens` generators of degree 1 to `max_deg`.
fn random_ideal(rng: &mut ChaCha8Rng, n: usize, max_deg: u32, max_gens: usize) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            random_monomial(rng, n, d)
        })
        .collect();
    MonomialIdeal::new(ring(n), gens).expect("lengths match")
}

/// A non-`m`-primary ideal: generators avoid the last variable.
fn random_non_primary(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> MonomialIdeal {
    loop {
        let i = random_ideal(rng, n, max_deg, 3);
        if !i.is_primary_to_m() {
            return i;
        }
    }
}

fn random_polytope(rng: &mut ChaCha8Rng, n: usize) -> LatticePolytope {
    let count = rng.gen_range(n + 1..=n + 4);
    let points: Vec<Point> = (0..count).map(|_| (0..n).map(|_| rng.gen_range(0..=4)).collect()).collect();
    LatticePolytope::from_points(n, &points).expect("nonempty point set")
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn samuel_staircase(log: &mut Log, rng: &mut ChaCha8Rng) {
    const ANCHOR: &str = "e(I) = n!·vol(staircase)";
    let pinned = parse(2, "ideal(x1^2,x1*x2,x2^3)");
    log.equal(ANCHOR, &pinned.to_string(), samuel_multiplicity(&pinned).map(|e| (e, 5)));
    for k in 0..25 {
        let i = random_primary(rng, 2 + k % 2, 6);
        log.equal(ANCHOR, &i.to_string(), samuel_multiplicity(&i).and_then(|a| Ok((a, staircase_volume_multiplicity(&i)?))));
    }
}

fn order_formula(log: &mut Log, rng: &mut ChaCha8Rng, opts: &SuiteOptions) {
    for k in 0..15 {
        let (n, o) = (2 + k % 2, 1 + (k / 2) as u32 % 3);
        let j = random_of_order(rng, n, o);
        log.equal("e_1(m|J) = o(J)", &j.to_string(), order_formula_check(&j, &opts.fit(2)).map(|r| (r.e1, r.order as i64)));
    }
}

fn bhattacharya(log: &mut Log, rng: &mut ChaCha8Rng, opts: &SuiteOptions) {
    for k in 0..15 {
        let n = if k < 10 { 2 } else { 3 };
        let i = random_primary(rng, n, 4 - (n as u32 - 2));
        let j = random_primary(rng, n, 4 - (n as u32 - 2));
        let instance = format!("I = {i}, J = {j}");
        let report = inequality_suite(&i, &j, &opts.fit(2));
        log.clean(
            "e(IJ) = Σ C(d,i) e_i(I|J); e_i^d ≤ e_0^{d−i} e_d^i; e_i² ≤ e_{i−1} e_{i+1}; e(IJ)^{1/d} ≤ e(I)^{1/d} + e(J)^{1/d}",
            &instance,
            report.map(|r| r.violations.into_iter().chain(r.undecided.into_iter().map(|u| format!("undecided: {u}"))).collect()),
        );
    }
}

fn rees_sum_of_mixed(log: &mut Log, rng: &mut ChaCha8Rng, opts: &SuiteOptions) {
    const SUM: &str = "e(A[It]_M) = Σ_{j<d} e_j(m|I)";
    let sum_of_mixed = |i: &MonomialIdeal| -> Result<(i64, i64)> {
        let rees = rees_algebra_multiplicity(i, &opts.fit(1))?;
        let mm = mixed_multiplicities(&IdealTuple::maximal(i.clone())?, &opts.fit(2))?;
        Ok((rees, mm.sequence().iter().sum()))
    };
    for text in ["ideal(x1,x2)", "ideal(x1^2,x1*x2,x2^2)", "ideal(x1^2,x1*x2,x2^3)", "ideal(x1^3,x1*x2,x2^3)"] {
        let i = parse(2, text);
        log.equal("integrally closed", text, is_integrally_closed(&i).map(|c| (c, true)));
        log.equal(
            "e(A[It]_M) = 1 + o(I) for integrally closed m-primary I in k[x,y]",
            text,
            rees_algebra_multiplicity(&i, &opts.fit(1)).and_then(|e| Ok((e, 1 + i.order()? as i64))),
        );
        log.equal(SUM, text, sum_of_mixed(&i));
    }
    for k in 0..10 {
        let i = random_ideal(rng, 2 + k % 2, 3, 3);
        log.equal(SUM, &i.to_string(), sum_of_mixed(&i));
    }
}

fn multiplicity_sequences(log: &mut Log, rng: &mut ChaCha8Rng, opts: &SuiteOptions) {
    let x = parse(2, "x1");
    log.equal("c(I) = (0, 1, 0) for I = (x) in k[x,y]", "x1", multiplicity_sequence(&x, &opts.fit(2)).map(|s| (s.values, vec![0, 1, 0])));
    for k in 0..10 {
        let i = random_primary(rng, 2 + k % 2, 4);
        let expected = |e: i64, d: usize| {
            let mut v = vec![0; d + 1];
            v[0] = e;
            v
        };
        log.equal(
            "c_0(I) = e(I) and c_i(I) = 0 for m-primary I",
            &i.to_string(),
            multiplicity_sequence(&i, &opts.fit(2)).and_then(|s| Ok((s.values, expected(samuel_multiplicity(&i)?, i.num_vars())))),
        );
    }
    for k in 0..10 {
        let i = random_non_primary(rng, 2 + k % 2, 3);
        let violations = || -> Result<Vec<String>> {
            let s = multiplicity_sequence(&i, &opts.fit(2))?;
            let spread = crate::multiplicities::analytic_spread(&i)?;
            let bad = s.support_violations(spread, i.krull_dim()?);
            Ok(bad.iter().map(|j| format!("c_{j} = {} outside [d − s(I), dim A/I]", s.values[*j])).collect())
        };
        log.clean("c_j(I) = 0 unless d − s(I) ≤ j ≤ dim A/I", &i.to_string(), violations());
    }
}

fn volume_kernel(log: &mut Log, rng: &mut ChaCha8Rng, opts: &SuiteOptions) {
    let mut seen: Vec<LatticePolytope> = Vec::new();
    let seg = |p: Point| LatticePolytope::from_points(2, &[vec![0, 0], p]).expect("segment");
    let (sx, sy) = (seg(vec![1, 0]), seg(vec![0, 1]));
    log.equal("MV_2(seg_x, seg_y) = 1", "unit segments", mixed_volume(&[sx, sy]).map(|v| (v, rational(1))));
    for k in 0..20 {
        let n = 1 + k % 3;
        let q = random_polytope(rng, n);
        let copies = vec![q.clone(); n];
        let nv = q.volume() * BigRational::from_integer(factorial(n as u64));
        log.equal("MV_n(Q, ..., Q) = n!·V_n(Q)", &format!("{:?}", q.vertices()), mixed_volume(&copies).map(|v| (v, nv)));
        seen.push(q);
    }
    for n in 1..=3usize {
        for code in 0..4usize.pow(n as u32) {
            let d: Vec<i64> = (0..n).map(|k| (code / 4usize.pow(k as u32) % 4) as i64 + 1).collect();
            let simplices: Vec<LatticePolytope> = d.iter().map(|&di| LatticePolytope::dilated_simplex(n, di)).collect();
            let product: i64 = d.iter().product();
            log.equal("MV_n(d_1Δ, ..., d_nΔ) = d_1⋯d_n", &format!("{d:?}"), mixed_volume(&simplices).map(|v| (v, rational(product))));
        }
    }
    for k in 0..10 {
        let n = 2 + k % 2;
        let polys: Vec<LatticePolytope> = (0..rng.gen_range(2..=3)).map(|_| random_polytope(rng, n)).collect();
        let instance = format!("{:?}", polys.iter().map(|p| p.vertices().to_vec()).collect::<Vec<_>>());
        match minkowski_volume_polynomial(&polys) {
            Ok(_) => log.push("V_n(λQ) = Σ_{|α|=n} MV_n(Q_α) λ^α / α!", &instance, true, "coefficients match".into()),
            Err(e) => log.fail("V_n(λQ) = Σ_{|α|=n} MV_n(Q_α) λ^α / α!", &instance, format!("error: {e}")),
        }
        seen.extend(polys);
    }
    if opts.ehrhart_check {
        for q in seen.iter().filter(|q| q.is_full_dimensional()) {
            log.equal("triangulation volume = Ehrhart volume", &format!("{:?}", q.vertices()), Ok((q.volume(), q.ehrhart_volume())));
        }
    }
}

fn random_single_degree(rng: &mut ChaCha8Rng, n: usize, degree: u32) -> MonomialIdeal {
    let count = rng.gen_range(2..=4);
    let gens = (0..count).map(|_| random_monomial(rng, n, degree)).collect();
    MonomialIdeal::new(ring(n), gens).expect("lengths match")
}

fn bridge(log: &mut Log, rng: &mut ChaCha8Rng, opts: &SuiteOptions) {
    let mut cases: Vec<Vec<MonomialIdeal>> = vec![
        vec![parse(2, "ideal(x1,x2)")],
        vec![parse(2, "ideal(x1^2,x1*x2,x2^2)")],
        vec![parse(2, "ideal(x1^3,x2^3)")],
        vec![parse(3, "ideal(x1^2,x2^2,x3^2)"), parse(3, "ideal(x1^2,x2^2,x3^2)")],
        vec![parse(3, "ideal(x1^2,x2*x3)"), parse(3, "ideal(x2^2,x1*x3)")],
        vec![parse(3, "ideal(x1,x2,x3)"), parse(3, "ideal(x1*x2,x2*x3,x1*x3)")],
    ];
    cases.push(vec![random_single_degree(rng, 3, 2), random_single_degree(rng, 3, 2)]);
    for js in cases {
        let n = js.len();
        let instance = js.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(", ");
        let mut lambda = vec![1; n + 1];
        lambda[n] = 2;
        match mixed_mult_volume_bridge(&js, &[vec![1; n + 1], lambda], &opts.fit(n + 1)) {
            Ok(r) => {
                let b = r.bernstein_entry();
                log.equal("e_(0,1,...,1)(R) = MV_n(Q_1, ..., Q_n)", &instance, Ok((rational(b.multiplicity), b.mixed_volume.0.clone())));
                for e in r.entries.iter().filter(|e| e.alpha[0] > 0) {
                    log.equal("e_α(R) = MV_n(Q_α), slot 0 the simplex", &format!("{instance} at {:?}", e.alpha), Ok((rational(e.multiplicity), e.mixed_volume.0.clone())));
                }
                for d in &r.diagonals {
                    let instance = format!("{instance} at λ = {:?}", d.lambda);
                    log.equal("e(R^λ) = n!Σ e_α λ^α/α! = n!·V_n(λQ)", &instance, Ok(((rational(d.fitted), d.from_multiplicities.0.clone()), (d.from_volume.0.clone(), d.from_multiplicities.0.clone()))));
                }
            }
            Err(e) => log.fail("e_α(R) = MV_n(Q_α)", &instance, format!("error: {e}")),
        }
    }
}

/// `(x_1^{a_1}, ..., x_r^{a_r})` in `n` variables.
fn pure_powers(n: usize, a: &[u32]) -> MonomialIdeal {
    let gens = a
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let mut w = vec![0; n];
            w[i] = e;
            w
        })
        .collect();
    MonomialIdeal::new(ring(n), gens).expect("lengths match")
}

fn nonstandard_rees(log: &mut Log, rng: &mut ChaCha8Rng, opts: &SuiteOptions) {
    let cone = opts.fit(2).with_min_side(8);
    let square = parse(2, "x1^2");
    match rees_mixed_multiplicities(&square, &cone) {
        Ok(r) => {
            let p = &r.fit.polynomial.polynomial;
            let got = (p.coefficient(&[1, 0]), p.coefficient(&[0, 1]), p.coefficient(&[0, 0]), p.degree());
            log.equal("P(u,v) = u − 2v + 1 for I = (x1^2)", "x1^2", Ok((got, (rational(1), rational(-2), rational(1), Some(1)))));
            log.equal("(e_0, e_1)(A[It]) = (−2, 1) for I = (x1^2)", "x1^2", Ok((r.mixed, vec![-2, 1])));
        }
        Err(e) => log.fail("P(u,v) = u − 2v + 1 for I = (x1^2)", "x1^2", format!("error: {e}")),
    }

    const TOP: &str = "e_s(A[It]) = e(A/0:I^∞)";
    let ambient_cases = [(2, "x1*x2", "x1"), (2, "x1^2", "x2"), (3, "ideal(x1*x2,x1*x3)", "ideal(x1,x2)")];
    for (n, k, i) in ambient_cases {
        let (k, i) = (parse(n, k), parse(n, i));
        let instance = format!("I = {i} in k[x]/{k}");
        log.equal(TOP, &instance, rees_mixed_multiplicities_in(&i, &k, &cone).map(|r| (r.mixed[r.s as usize], r.saturated_multiplicity)));
    }
    for k in 0..5 {
        let i = random_ideal(rng, 2 + k % 2, 3, 3);
        log.equal(TOP, &i.to_string(), rees_mixed_multiplicities(&i, &cone).map(|r| (r.mixed[r.s as usize], r.saturated_multiplicity)));
    }

    let sequences: [(usize, Vec<u32>); 6] =
        [(2, vec![2]), (2, vec![2, 3]), (2, vec![1, 2]), (3, vec![2, 2]), (3, vec![1, 2, 2]), (3, vec![2, 2, 3])];
    for (n, a) in &sequences {
        let i = pure_powers(*n, a);
        let instance = i.to_string();
        log.equal(
            "e_i(A[It]) of a regular sequence: alternating sum over d_1^{j_1+1}⋯d_q^{j_q}",
            &instance,
            rees_mixed_multiplicities(&i, &cone).and_then(|r| Ok((r.mixed, regular_sequence_rees_mixed(a, 1, *n)?))),
        );
        log.equal(
            "e(A[It]_M) = (1 + Σ a_1⋯a_i)·e(A) for a filter-regular sequence",
            &instance,
            rees_algebra_multiplicity(&i, &opts.fit(1)).and_then(|e| Ok((e, filter_regular_rees(a, 1)?))),
        );
        log.equal(
            "e(A[It,t^{-1}]_N) = (1 + Σ_{i≥l} a_1⋯a_i)·e(A)",
            &instance,
            extended_rees_multiplicity(&i, &opts.fit(2)).and_then(|kv| Ok((kv.value, filter_regular_extended(a, 1)?))),
        );
        let quotients = || -> Result<(Vec<i64>, i64, i64)> {
            let mut q = Vec::new();
            let mut dims = Vec::new();
            for j in 0..a.len() {
                let prefix = pure_powers(*n, &a[..j]);
                let mut f = vec![0; *n];
                f[j] = a[j];
                let ij = if j == 0 { MonomialIdeal::zero(ring(*n)) } else { prefix.colon_monomial(&f)? };
                let m = MonomialIdeal::maximal(ring(*n));
                q.push(samuel_multiplicity_in(&m, &ij, &opts.fit(1))?.0);
                dims.push(ij.krull_dim()?);
            }
            // s = max{i : dim A/I_i = dim A/I_1 − i + 1}.
            let s = (1..=a.len()).filter(|&i| dims[i - 1] == dims[0] - i as i64 + 1).max().unwrap_or(0);
            Ok((q, s as i64, dims[0]))
        };
        log.equal(
            "e_i(m|I) = e(A/I_{i+1}) for i < s, 0 beyond",
            &instance,
            quotients().and_then(|(q, s, _)| {
                let mm = mixed_multiplicities(&IdealTuple::maximal(i.clone())?, &opts.fit(2))?;
                Ok((mm.sequence(), hoang_mixed(&q, s as usize, *n)?))
            }),
        );
        log.equal(
            "e(A[It]_M) by the three-branch d-sequence formula",
            &instance,
            quotients().and_then(|(q, s, dim1)| {
                Ok((rees_algebra_multiplicity(&i, &opts.fit(1))?, d_sequence_rees(&q[..s as usize], dim1, *n as i64, 1)?))
            }),
        );
    }
    for (m, d) in [(2usize, vec![2u32]), (2, vec![1, 2]), (3, vec![2]), (1, vec![2, 3]), (2, vec![3, 1]), (3, vec![1, 1])] {
        log.equal(
            "e_i of k[X;Y] with deg Y_j = (d_j,1): (−1)^{m−i−1} Σ d^j",
            &format!("m = {m}, d = {d:?}"),
            free_bigraded_mixed(m, &d, &cone).and_then(|fit| Ok((fit, bigraded_free_mixed(m, &d)?))),
        );
    }
}

fn milnor(log: &mut Log, rng: &mut ChaCha8Rng, opts: &SuiteOptions) {
    log.equal("μ*(x^3 + y^3 + z^3) = (8, 4, 2, 1)", "[3, 3, 3]", milnor_sequence(&[3, 3, 3], &opts.fit(2)).map(|m| (m.star(), vec![8, 4, 2, 1])));
    for k in 0..10 {
        let len = 2 + k % 2;
        let a: Vec<u32> = (0..len).map(|_| rng.gen_range(2..=5)).collect();
        let instance = format!("{a:?}");
        match milnor_sequence(&a, &opts.fit(2)) {
            Ok(mu) => {
                let min = i64::from(*a.iter().min().expect("nonempty")) - 1;
                let prod: i64 = a.iter().map(|&x| i64::from(x) - 1).product();
                log.equal("μ^(1) = min(a_i) − 1", &instance, Ok((mu.values[1], min)));
                log.equal("μ^(n+1) = Π(a_i − 1)", &instance, Ok((mu.values[len], prod)));
                log.equal("μ^(0) = 1", &instance, Ok((mu.values[0], 1)));
            }
            Err(e) => log.fail("Milnor sequence", &instance, format!("error: {e}")),
        }
    }
}

fn dade_sums(log: &mut Log, rng: &mut ChaCha8Rng, opts: &SuiteOptions) {
    for k in 0..8 {
        let n = 2 + k % 2;
        let i = random_primary(rng, n, 3);
        let j = random_ideal(rng, n, 3, 3);
        let instance = format!("I = {i}, J = {j}");
        let sides = || -> Result<(i64, i64)> {
            let tuple = IdealTuple::new(i.clone(), vec![j.clone()])?;
            let mm = mixed_multiplicities(&tuple, &opts.fit(2))?;
            Ok((total_grading_multiplicity(&tuple, &opts.fit(1))?, mm.values.sum()))
        };
        log.equal("e(R) = Σ_{|α|=r} e_α(R) under the total grading", &instance, sides());
    }
    for k in 0..5 {
        let i = random_primary(rng, 2 + k % 2, 3);
        let sides = || -> Result<(i64, i64)> {
            let c: i64 = multiplicity_sequence(&i, &opts.fit(2))?.values.iter().sum();
            Ok((dade_multiplicity(&i, &opts.fit(1))?, c))
        };
        log.equal("e(G_M) = Σ c_j(I)", &i.to_string(), sides());
    }
}

fn rigidity(log: &mut Log, rng: &mut ChaCha8Rng, opts: &SuiteOptions) {
    const BRACKET: &str = "e_i > 0 iff i ≤ ρ; ht J − 1 ≤ ρ ≤ s(J) − 1; downward closure of positive e_α";
    let check = |log: &mut Log, tuple: &IdealTuple, instance: &str| {
        let arity = 1 + tuple.others().len();
        let v = mixed_multiplicities(tuple, &opts.fit(arity)).and_then(|mm| rigidity_check(tuple, &mm, &opts.fit(1))).map(|r| r.violations);
        log.clean(BRACKET, instance, v);
    };
    let r4 = ring(4);
    let k = MonomialIdeal::parse(r4.clone(), "ideal(x1*x2,x1*x3)").expect("valid");
    let j = MonomialIdeal::parse(r4.clone(), "ideal(x1,x4)").expect("valid");
    let tuple = IdealTuple::with_ambient(MonomialIdeal::maximal(r4), vec![j], k).expect("valid tuple");
    check(log, &tuple, "I = m, J = (x1,x4) in k[x1..x4]/(x1x2,x1x3)");
    for step in 0..12 {
        let n = 2 + step % 2;
        let i = random_primary(rng, n, 3);
        let j = random_ideal(rng, n, 3, 3);
        let instance = format!("I = {i}, J = {j}");
        match IdealTuple::new(i, vec![j]) {
            Ok(t) => check(log, &t, &instance),
            Err(e) => log.fail(BRACKET, &instance, format!("error: {e}")),
        }
    }
    for _ in 0..3 {
        let i = random_primary(rng, 2, 2);
        let js = vec![random_ideal(rng, 2, 2, 2), random_ideal(rng, 2, 2, 2)];
        let instance = format!("I = {i}, J = ({}, {})", js[0], js[1]);
        match IdealTuple::new(i, js) {
            Ok(t) => check(log, &t, &instance),
            Err(e) => log.fail(BRACKET, &instance, format!("error: {e}")),
        }
    }
    for step in 0..10 {
        let n = 2 + step % 2;
        let (i, i2) = (random_primary(rng, n, 3), random_primary(rng, n, 3));
        let j = random_ideal(rng, n, 3, 3);
        let instance = format!("I = {i}, I′ = {i2}, J = {j}");
        let sets = || -> Result<(Vec<usize>, Vec<usize>)> {
            let a = mixed_multiplicities(&IdealTuple::new(i.clone(), vec![j.clone()])?, &opts.fit(2))?;
            let b = mixed_multiplicities(&IdealTuple::new(i2.clone(), vec![j.clone()])?, &opts.fit(2))?;
            Ok((positivity_set(&a.sequence()), positivity_set(&b.sequence())))
        };
        log.equal("{i : e_i(I|J) > 0} does not depend on I", &instance, sets());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn criterion_rngs_are_independent_of_order() {
        let opts = SuiteOptions::new(7);
        let a: u64 = opts.rng(3).gen();
        let _: u64 = opts.rng(1).gen();
        assert_eq!(a, opts.rng(3).gen::<u64>());
        assert_ne!(a, opts.rng(4).gen::<u64>());
    }

    #[test]
    fn random_ideals_have_requested_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            assert!(random_primary(&mut rng, 3, 4).is_primary_to_m());
            let o = random_of_order(&mut rng, 2, 2);
            assert_eq!(o.order().unwrap(), 2);
            assert!(!random_non_primary(&mut rng, 3, 3).is_primary_to_m());
        }
    }
}
