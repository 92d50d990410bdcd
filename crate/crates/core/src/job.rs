//! JSON job files, their dispatch, and deterministic reports.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::closed_forms::{self, OracleInput};
use crate::error::{Error, Result};
use crate::hilbert::{fit_cone, fit_stable, FitOptions, GradedPresentation, PolyDegree};
use crate::monomial::{MonomialIdeal, RingContext};
use crate::multiplicities::{
    analytic_spread_in, bhattacharya_mixed, dade_multiplicity, default_fit_options, front_multiplicity, inequality_suite,
    milnor_sequence, mixed_multiplicities, multiplicity_sequence_in, order_formula_check, rigidity_check, samuel_multiplicity,
    total_grading_multiplicity, IdealTuple,
};
use crate::polytope::{bernstein_bound, minkowski_volume_polynomial, mixed_volume, LatticePolytope, Point};
use crate::rees::{embedded_degree, quotient_hilbert_polynomial, rees_mixed_multiplicities_in};
use crate::suite::{run_suite, SuiteOptions};

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    /// Standard grading on `x1..xn`.
    #[serde(default)]
    pub vars: Option<usize>,
    /// Block sizes of a standard multigrading.
    #[serde(default)]
    pub blocks: Option<Vec<usize>>,
    /// One degree vector per variable.
    #[serde(default)]
    pub grading: Option<Vec<Vec<u32>>>,
    /// Monomial relations `K`, read as the ambient ring `k[x]/K`.
    #[serde(default)]
    pub relations: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case", deny_unknown_fields)]
enum RawJob {
    Hilbert {
        ring: RingSpec,
        #[serde(default)]
        lower: Option<Vec<u32>>,
        #[serde(default)]
        upper: Option<Vec<u32>>,
        #[serde(default)]
        degree_bound: Option<u32>,
    },
    #[serde(rename = "mixedmult")]
    MixedMult {
        ring: RingSpec,
        #[serde(rename = "I")]
        i: String,
        #[serde(rename = "J")]
        j: Vec<String>,
    },
    #[serde(rename = "multseq")]
    MultSeq {
        ring: RingSpec,
        #[serde(rename = "I")]
        i: String,
    },
    Rees {
        ring: RingSpec,
        #[serde(rename = "I")]
        i: String,
        #[serde(default)]
        c: Option<u32>,
        #[serde(default)]
        e: Option<u32>,
        #[serde(default)]
        v: Option<u32>,
    },
    #[serde(rename = "mixedvolume")]
    MixedVolume { polytopes: Vec<LatticePolytope> },
    Bernstein { supports: Vec<Vec<Point>> },
    Milnor { exponents: Vec<u32> },
    Oracle { oracle: OracleInput },
    Suite {
        #[serde(default)]
        seed: Option<u64>,
    },
}

/// A validated job.
#[derive(Clone, Debug)]
pub enum JobSpec {
    Hilbert { presentation: GradedPresentation, window: Option<(Vec<u32>, Vec<u32>)>, degree_bound: Option<u32> },
    MixedMult { tuple: IdealTuple },
    MultSeq { ideal: MonomialIdeal, ambient: MonomialIdeal },
    Rees { ideal: MonomialIdeal, ambient: MonomialIdeal, embedding: Option<(u32, u32)>, quotient_at: Option<u32> },
    MixedVolume { polytopes: Vec<LatticePolytope> },
    Bernstein { supports: Vec<Vec<Point>> },
    Milnor { exponents: Vec<u32> },
    Oracle { input: OracleInput },
    Suite { seed: Option<u64> },
}

/// A job with its input echoed verbatim in the report.
#[derive(Clone, Debug)]
pub struct Job {
    pub spec: JobSpec,
    pub input: Value,
}

fn field_error(field: &str, e: impl std::fmt::Display) -> Error {
    Error::Parse(format!("field `{field}`: {e}"))
}

fn build_ring(spec: &RingSpec) -> Result<(Arc<RingContext>, MonomialIdeal)> {
    let ring = match (spec.vars, &spec.blocks, &spec.grading) {
        (Some(n), None, None) => RingContext::standard(n),
        (None, Some(b), None) => RingContext::blocks(b).map_err(|e| field_error("ring.blocks", e))?,
        (None, None, Some(g)) => RingContext::new(g.clone()).map_err(|e| field_error("ring.grading", e))?,
        _ => return Err(field_error("ring", "give exactly one of `vars`, `blocks`, `grading`")),
    };
    let ring = Arc::new(ring);
    let relations = match &spec.relations {
        Some(text) => MonomialIdeal::parse(ring.clone(), text).map_err(|e| field_error("ring.relations", e))?,
        None => MonomialIdeal::zero(ring.clone()),
    };
    Ok((ring, relations))
}

fn ideal(ring: &Arc<RingContext>, field: &str, text: &str) -> Result<MonomialIdeal> {
    MonomialIdeal::parse(ring.clone(), text).map_err(|e| field_error(field, e))
}

pub fn parse_job(text: &str) -> Result<Job> {
    let input: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let raw: RawJob = serde_json::from_value(input.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let spec = match raw {
        RawJob::Hilbert { ring, lower, upper, degree_bound } => {
            let (_, relations) = build_ring(&ring)?;
            let window = match (lower, upper) {
                (Some(l), Some(u)) => Some((l, u)),
                (None, None) => None,
                _ => return Err(field_error("lower", "`lower` and `upper` go together")),
            };
            let presentation = GradedPresentation::new(relations).map_err(|e| field_error("ring.relations", e))?;
            JobSpec::Hilbert { presentation, window, degree_bound }
        }
        RawJob::MixedMult { ring, i, j } => {
            let (r, ambient) = build_ring(&ring)?;
            let primary = ideal(&r, "I", &i)?;
            let others = j.iter().enumerate().map(|(k, t)| ideal(&r, &format!("J[{k}]"), t)).collect::<Result<Vec<_>>>()?;
            let tuple = IdealTuple::with_ambient(primary, others, ambient).map_err(|e| field_error("I", e))?;
            JobSpec::MixedMult { tuple }
        }
        RawJob::MultSeq { ring, i } => {
            let (r, ambient) = build_ring(&ring)?;
            JobSpec::MultSeq { ideal: ideal(&r, "I", &i)?, ambient }
        }
        RawJob::Rees { ring, i, c, e, v } => {
            let (r, ambient) = build_ring(&ring)?;
            let embedding = match (c, e) {
                (Some(c), Some(e)) => Some((c, e)),
                (None, None) => None,
                _ => return Err(field_error("c", "`c` and `e` go together")),
            };
            JobSpec::Rees { ideal: ideal(&r, "I", &i)?, ambient, embedding, quotient_at: v }
        }
        RawJob::MixedVolume { polytopes } => {
            let n = polytopes.first().map(LatticePolytope::ambient_dim).ok_or_else(|| field_error("polytopes", "empty list"))?;
            if polytopes.iter().any(|p| p.ambient_dim() != n) {
                return Err(field_error("polytopes", "polytopes live in different dimensions"));
            }
            if polytopes.len() != n {
                return Err(field_error("polytopes", format!("expected {n} polytopes in dimension {n}, found {}", polytopes.len())));
            }
            JobSpec::MixedVolume { polytopes }
        }
        RawJob::Bernstein { supports } => {
            let n = supports.len();
            if supports.iter().any(|s| s.is_empty() || s.iter().any(|p| p.len() != n)) {
                return Err(field_error("supports", format!("need {n} nonempty supports of points in dimension {n}")));
            }
            JobSpec::Bernstein { supports }
        }
        RawJob::Milnor { exponents } => {
            if exponents.is_empty() || exponents.iter().any(|&a| a < 2) {
                return Err(field_error("exponents", "need at least one exponent, each at least 2"));
            }
            JobSpec::Milnor { exponents }
        }
        RawJob::Oracle { oracle } => JobSpec::Oracle { input: oracle },
        RawJob::Suite { seed } => JobSpec::Suite { seed },
    };
    Ok(Job { spec, input })
}

/// Command-line overrides.
#[derive(Clone, Debug)]
pub struct RunOptions {
    pub box_cap: Option<u32>,
    pub seed: Option<u64>,
    pub ehrhart_check: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { box_cap: None, seed: None, ehrhart_check: true }
    }
}

impl RunOptions {
    fn fit(&self, arity: usize) -> FitOptions {
        let mut o = default_fit_options(arity);
        if let Some(cap) = self.box_cap {
            o.box_cap = cap;
        }
        o
    }
}

/// One asserted identity, named by a descriptive anchor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identity {
    pub anchor: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub summary: Vec<String>,
    pub results: Value,
    pub identities: Vec<Identity>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.identities.iter().all(|i| i.pass)
    }

    /// 0 when every identity holds, 3 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.pass() {
            0
        } else {
            3
        }
    }
}

#[derive(Default)]
struct Ledger {
    summary: Vec<String>,
    identities: Vec<Identity>,
}

impl Ledger {
    fn line(&mut self, s: impl Into<String>) {
        self.summary.push(s.into());
    }

    fn check(&mut self, anchor: &str, pass: bool, detail: String) {
        self.identities.push(Identity { anchor: anchor.into(), pass, detail });
    }

    fn equal<T: PartialEq + std::fmt::Display>(&mut self, anchor: &str, a: T, b: T) {
        let pass = a == b;
        self.check(anchor, pass, format!("{a} {} {b}", if pass { "=" } else { "≠" }));
    }

    fn equal_seq<T: PartialEq + std::fmt::Debug>(&mut self, anchor: &str, a: &[T], b: &[T]) {
        let pass = a == b;
        self.check(anchor, pass, format!("{a:?} {} {b:?}", if pass { "=" } else { "≠" }));
    }

    fn clean(&mut self, anchor: &str, violations: &[String]) {
        let pass = violations.is_empty();
        let detail = if pass { "no violations".to_string() } else { violations.join("; ") };
        self.identities.push(Identity { anchor: anchor.into(), pass, detail });
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

pub fn run(job: &Job, opts: &RunOptions) -> Result<Report> {
    let mut ledger = Ledger::default();
    let (command, results) = match &job.spec {
        JobSpec::Hilbert { presentation, window, degree_bound } => ("hilbert", run_hilbert(presentation, window, *degree_bound, opts, &mut ledger)?),
        JobSpec::MixedMult { tuple } => ("mixedmult", run_mixedmult(tuple, opts, &mut ledger)?),
        JobSpec::MultSeq { ideal, ambient } => ("multseq", run_multseq(ideal, ambient, opts, &mut ledger)?),
        JobSpec::Rees { ideal, ambient, embedding, quotient_at } => ("rees", run_rees(ideal, ambient, *embedding, *quotient_at, opts, &mut ledger)?),
        JobSpec::MixedVolume { polytopes } => ("mixedvolume", run_mixedvolume(polytopes, opts, &mut ledger)?),
        JobSpec::Bernstein { supports } => {
            let bound = bernstein_bound(supports)?;
            ledger.line(format!("bound = {bound}"));
            let n = supports.len();
            let degrees: Option<Vec<i64>> = supports
                .iter()
                .map(|s| {
                    let d = s.iter().map(|p| p.iter().sum::<i64>()).max().expect("nonempty support");
                    let hull = LatticePolytope::from_points(n, s).ok()?;
                    (d > 0 && hull == LatticePolytope::dilated_simplex(n, d)).then_some(d)
                })
                .collect();
            if let Some(degrees) = degrees {
                let bezout: num_bigint::BigInt = degrees.iter().map(|&d| num_bigint::BigInt::from(d)).product();
                ledger.equal("MV(d_1Δ, ..., d_nΔ) = deg f_1 ⋯ deg f_n", bound.clone(), bezout);
            }
            ("bernstein", json!({ "bound": bound.to_string() }))
        }
        JobSpec::Milnor { exponents } => {
            let mu = milnor_sequence(exponents, &opts.fit(2))?;
            let prod: i64 = exponents.iter().map(|&a| i64::from(a) - 1).product();
            ledger.line(mu.to_string());
            ledger.equal("μ^(n+1) = e(J(f)) = Π(a_i − 1)", *mu.values.last().expect("nonempty"), prod);
            ledger.equal("μ^(1) = o(J(f)) = min(a_i) − 1", mu.values[1], i64::from(*exponents.iter().min().expect("nonempty")) - 1);
            ("milnor", json!({ "mu": mu.values, "mu_star": mu.star() }))
        }
        JobSpec::Oracle { input } => {
            let value = closed_forms::evaluate(input)?;
            ledger.line(format!("value = {value}"));
            ("oracle", json!({ "value": to_value(&value) }))
        }
        JobSpec::Suite { seed } => {
            let suite_opts = SuiteOptions { seed: opts.seed.or(*seed).unwrap_or(0), ehrhart_check: opts.ehrhart_check, box_cap: opts.box_cap };
            let report = run_suite(&suite_opts);
            for c in &report.criteria {
                let failures: Vec<String> = c.failures().map(|f| format!("{} on {}: {}", f.anchor, f.instance, f.detail)).collect();
                ledger.clean(&format!("criterion {}: {}", c.id, c.title), &failures);
                ledger.line(format!("criterion {} ({} checks): {}", c.id, c.checks.len(), if c.pass() { "pass" } else { "FAIL" }));
            }
            ("suite", to_value(&report))
        }
    };
    Ok(Report { command: command.into(), input: job.input.clone(), summary: ledger.summary, results, identities: ledger.identities })
}

fn run_hilbert(
    p: &GradedPresentation,
    window: &Option<(Vec<u32>, Vec<u32>)>,
    degree_bound: Option<u32>,
    opts: &RunOptions,
    ledger: &mut Ledger,
) -> Result<Value> {
    let ring = p.ring().clone();
    let s = ring.rank();
    let mut out = serde_json::Map::new();
    if let Some((lower, upper)) = window {
        out.insert("table".into(), to_value(&p.hilbert_function(lower, upper)?));
    }
    let fit = if ring.is_standard() {
        let degree = p.total_degree()?;
        ledger.line(format!("total degree = {degree}"));
        out.insert("total_degree".into(), to_value(&degree));
        if s == 2 {
            let (r1, r2) = p.partial_degrees()?;
            ledger.line(format!("partial degrees = ({r1}, {r2})"));
            out.insert("partial_degrees".into(), json!([r1, r2]));
        }
        let fit = p.hilbert_polynomial(&opts.fit(s))?;
        ledger.equal("deg P_R = dim R/0:R_+^∞ − s", PolyDegree::from_option(fit.polynomial.polynomial.degree()), degree);
        let e = crate::hilbert::extract_mixed_multiplicities(&fit.polynomial);
        if let Ok(e) = e {
            let negative: Vec<String> = e.entries.iter().filter(|(_, &v)| v < 0).map(|(a, v)| format!("e_{a:?} = {v}")).collect();
            ledger.clean("e_α(R) ≥ 0 for a standard multigrading", &negative);
            out.insert("mixed_multiplicities".into(), to_value(&e));
        }
        fit
    } else {
        let bound = degree_bound.ok_or_else(|| field_error("degree_bound", "required for a non-standard grading"))?;
        // A bigrading with deg = (d, 1) variables is polynomial on a cone of slope max d.
        let cone = (s == 2).then(|| ring.grading().iter().filter(|g| g[1] > 0).map(|g| g[0].div_ceil(g[1])).max().unwrap_or(0));
        let fit = match cone {
            Some(slope) => fit_cone(p, slope, bound, &opts.fit(s))?,
            None => fit_stable(p, bound, &opts.fit(s))?,
        };
        if let Ok(e) = crate::hilbert::extract_mixed_multiplicities(&fit.polynomial) {
            out.insert("mixed_multiplicities".into(), to_value(&e));
        }
        fit
    };
    ledger.line(format!("degree of P = {}", PolyDegree::from_option(fit.polynomial.polynomial.degree())));
    out.insert("polynomial".into(), to_value(&fit.polynomial));
    Ok(Value::Object(out))
}

fn run_mixedmult(tuple: &IdealTuple, opts: &RunOptions, ledger: &mut Ledger) -> Result<Value> {
    let arity = 1 + tuple.others().len();
    let mm = mixed_multiplicities(tuple, &opts.fit(arity))?;
    let mut out = serde_json::Map::new();
    out.insert("dimension".into(), json!(mm.dimension));
    out.insert("mixed_multiplicities".into(), to_value(&mm.values));
    out.insert("polynomial".into(), to_value(&mm.fit.polynomial));
    ledger.line(format!("d = dim A/0:J^∞ = {}", mm.dimension));
    for (alpha, v) in &mm.values.entries {
        ledger.line(format!("e_{alpha:?} = {v}"));
    }
    ledger.equal("e_0(I|J) = e(I, A/0:J^∞)", mm.values.get(&{
        let mut a = vec![0; arity];
        a[0] = mm.dimension - 1;
        a
    }), front_multiplicity(tuple, &opts.fit(1))?);
    let rigidity = rigidity_check(tuple, &mm, &opts.fit(1))?;
    ledger.clean("e_i > 0 iff i ≤ ρ; ht J − 1 ≤ ρ ≤ s(J) − 1; downward closure of positive e_α", &rigidity.violations);
    out.insert("rigidity".into(), to_value(&rigidity));
    ledger.equal("e(R) = Σ_{|α|=r} e_α(R) under the total grading", total_grading_multiplicity(tuple, &opts.fit(1))?, mm.values.sum());
    let ring = tuple.primary().ring().clone();
    let plain = tuple.ambient().is_zero() && tuple.others().len() == 1;
    if plain {
        let seq = mm.sequence();
        out.insert("sequence".into(), json!(seq));
        let j = &tuple.others()[0];
        if *tuple.primary() == MonomialIdeal::maximal(ring) && j.height()? >= 2 {
            let r = order_formula_check(j, &opts.fit(2))?;
            ledger.equal("e_1(m|J) = o(J)", r.e1, r.order as i64);
        }
        if j.is_primary_to_m() {
            let (full, _) = bhattacharya_mixed(tuple.primary(), j, &opts.fit(2))?;
            ledger.equal_seq("e_i(I|J) from ℓ(A/I^uJ^v) agree with R(I|J)", &full[..seq.len()], &seq);
            ledger.equal("e_d(I|J) = e(J)", full[seq.len()], samuel_multiplicity(j)?);
            let report = inequality_suite(tuple.primary(), j, &opts.fit(2))?;
            let mut bad = report.violations.clone();
            bad.extend(report.undecided.iter().map(|u| format!("undecided: {u}")));
            ledger.clean("e(IJ) = Σ C(d,i) e_i(I|J) and the Teissier, log-convexity and Minkowski inequalities", &bad);
            out.insert("bhattacharya".into(), json!(full));
        }
    }
    Ok(Value::Object(out))
}

fn run_multseq(i: &MonomialIdeal, ambient: &MonomialIdeal, opts: &RunOptions, ledger: &mut Ledger) -> Result<Value> {
    let s = multiplicity_sequence_in(i, ambient, &opts.fit(2))?;
    ledger.line(format!("c = {:?}", s.values));
    ledger.line(format!("j(I) = {}", s.values[0]));
    let (spread, _) = analytic_spread_in(i, ambient, &opts.fit(1))?;
    let dim_quotient = i.sum(ambient)?.krull_dim()?;
    let bad: Vec<String> = s.support_violations(spread, dim_quotient).iter().map(|j| format!("c_{j} = {}", s.values[*j])).collect();
    ledger.clean("c_j(I) = 0 unless d − s(I) ≤ j ≤ dim A/I", &bad);
    let mut out = json!({ "sequence": s.values, "j_multiplicity": s.values[0], "analytic_spread": spread, "polynomial": to_value(&s.fit.polynomial) });
    if ambient.is_zero() {
        let dade = dade_multiplicity(i, &opts.fit(1))?;
        ledger.equal("e(G_M) = Σ c_j(I)", dade, s.values.iter().sum());
        out["dade"] = json!(dade);
        if i.is_primary_to_m() {
            let e = samuel_multiplicity(i)?;
            let mut expected = vec![0; s.values.len()];
            expected[0] = e;
            ledger.equal_seq("c_0(I) = e(I) and c_i(I) = 0 for m-primary I", &s.values, &expected);
        }
    }
    Ok(out)
}

/// Degrees of `(x_{i_1}^{a_1}, ..., x_{i_r}^{a_r})` on distinct variables, sorted.
fn regular_power_degrees(i: &MonomialIdeal) -> Option<Vec<u32>> {
    let mut used = vec![false; i.num_vars()];
    let mut degrees = Vec::new();
    for g in i.generators() {
        let mut nz = g.iter().enumerate().filter(|(_, &e)| e > 0);
        let (Some((k, &e)), None) = (nz.next(), nz.next()) else { return None };
        if std::mem::replace(&mut used[k], true) {
            return None;
        }
        degrees.push(e);
    }
    degrees.sort_unstable();
    Some(degrees)
}

fn run_rees(
    i: &MonomialIdeal,
    ambient: &MonomialIdeal,
    embedding: Option<(u32, u32)>,
    quotient_at: Option<u32>,
    opts: &RunOptions,
    ledger: &mut Ledger,
) -> Result<Value> {
    let fit_opts = opts.fit(2).with_min_side(8);
    let r = rees_mixed_multiplicities_in(i, ambient, &fit_opts)?;
    let (u0, v0) = r.cone_offsets();
    ledger.line(format!("cone: u ≥ {}·v + {u0}, v ≥ {v0}", r.slope));
    ledger.line(format!("e(A[It]) = {:?}", r.mixed));
    ledger.equal("e_s(A[It]) = e(A/0:I^∞)", r.mixed[r.s as usize], r.saturated_multiplicity);
    if let Some(rho) = r.rho {
        ledger.check("e_ρ(A[It]) > 0 at the last nonzero index", r.mixed[rho] > 0, format!("ρ = {rho}, e_ρ = {}", r.mixed[rho]));
    }
    let mut out = json!({ "cone": { "d": r.slope, "u0": u0, "v0": v0 }, "s": r.s, "mixed": r.mixed, "rho": r.rho, "polynomial": to_value(&r.fit.polynomial) });
    if ambient.is_zero() {
        if let Some(degrees) = regular_power_degrees(i) {
            let n = i.num_vars();
            ledger.equal_seq("e_i(A[It]) of a regular sequence: alternating sum over d_1^{j_1+1}⋯d_q^{j_q}", &r.mixed, &closed_forms::regular_sequence_rees_mixed(&degrees, 1, n)?);
            if degrees.len() == 1 {
                let free = closed_forms::bigraded_free_mixed(n, &degrees)?;
                ledger.equal_seq("e_i of k[X;Y] with deg Y = (d,1): (−1)^{m−i−1} d^{m−1−i}", &r.mixed, &free[..r.mixed.len()]);
            }
        }
    }
    if let Some((c, e)) = embedding {
        let d = embedded_degree(i, &r, c, e, ambient.is_zero())?;
        ledger.line(format!("deg V = {}", d.closed_form));
        ledger.equal("deg V_{c,e} = Σ C(s,i) e_i(A[It]) c^i e^{s−i} against the (c,e)-diagonal", d.closed_form, d.diagonal);
        if let Some(count) = d.enumerated {
            ledger.equal("deg V_{c,e} = e(k[(I^e)_c])", d.closed_form, count);
        }
        out["embedded_degree"] = to_value(&d);
    }
    if let Some(v) = quotient_at {
        let p = quotient_hilbert_polynomial(&r, ambient, v, &opts.fit(1))?;
        ledger.line(format!("P_(A/I^{v}) has degree {}", PolyDegree::from_option(p.degree())));
        let relations = i.power(v).sum(ambient)?;
        let presentation = GradedPresentation::new(relations)?;
        let u = r.slope * v + u0 + 3;
        let direct = presentation.hilbert_function(&[u], &[u])?.get(&[u]).expect("in window");
        ledger.equal("P_{A/I^v}(u) = P_A(u) − P_{A[It]}(u,v) at a sampled u", p.eval_int(&[i64::from(u)]), num_rational::BigRational::from_integer(direct.into()));
        out["quotient_polynomial"] = to_value(&p);
    }
    Ok(out)
}

fn run_mixedvolume(polys: &[LatticePolytope], opts: &RunOptions, ledger: &mut Ledger) -> Result<Value> {
    let mv = mixed_volume(polys)?;
    ledger.line(format!("MV = {mv}"));
    let vp = minkowski_volume_polynomial(polys)?;
    let ones = vec![1; polys.len()];
    ledger.equal("coefficient of λ_1⋯λ_n in V_n(λQ) = MV_n(Q_1, ..., Q_n)", vp.polynomial.coefficient(&ones), mv.clone());
    let mut sum = polys[0].clone();
    for p in &polys[1..] {
        sum = sum.minkowski_sum(p)?;
    }
    ledger.equal("V_n(Q_1 + ... + Q_n) = volume polynomial at λ = 1", sum.volume(), vp.polynomial.eval_int(&vec![1; polys.len()]));
    if opts.ehrhart_check {
        for p in polys.iter().filter(|p| p.is_full_dimensional()) {
            ledger.equal("triangulation volume = Ehrhart volume", p.volume(), p.ehrhart_volume());
        }
    }
    Ok(json!({ "mixed_volume": to_value(&crate::rational::Exact(mv)), "volume_polynomial": to_value(&vp) }))
}

/// JSON is pretty-printed with sorted object keys; text lists the summary and identities.
pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize") + "\n",
        Format::Text => {
            let mut out = format!("command: {}\n", report.command);
            for line in &report.summary {
                out.push_str(line);
                out.push('\n');
            }
            for id in &report.identities {
                out.push_str(&format!("[{}] {}: {}\n", if id.pass { "pass" } else { "FAIL" }, id.anchor, id.detail));
            }
            out
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn milnor_job() {
        let job = parse_job(r#"{"command":"milnor","exponents":[3,3,3]}"#).unwrap();
        let report = run(&job, &RunOptions::default()).unwrap();
        assert!(emit(&report, Format::Text).contains("μ* = (8, 4, 2, 1)"));
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn mixedvolume_arity() {
        let text = r#"{"command":"mixedvolume","polytopes":[{"dim":3,"points":[[0,0,0],[1,0,0]]},{"dim":3,"points":[[0,0,0],[0,1,0]]}]}"#;
        let err = parse_job(text).unwrap_err();
        assert!(err.to_string().contains("polytopes"), "{err}");
    }

    #[test]
    fn mixedmult_job() {
        let text = r#"{"command":"mixedmult","ring":{"vars":2},"I":"ideal(x1,x2)","J":["ideal(x1^2,x1*x2,x2^3)"]}"#;
        let report = run(&parse_job(text).unwrap(), &RunOptions::default()).unwrap();
        assert!(report.pass(), "{:?}", report.identities);
        assert_eq!(report.results["sequence"], json!([1, 2]));
    }

    #[test]
    fn diagnostics_name_the_field() {
        let err = parse_job(r#"{"command":"mixedmult","ring":{"vars":2},"I":"ideal(x1,x2)","J":["ideal(x1^2,y)"]}"#).unwrap_err();
        assert!(err.to_string().contains("J[0]"), "{err}");
        let err = parse_job(r#"{"command":"milnor","exponent":[3]}"#).unwrap_err();
        assert!(err.to_string().contains("exponent"), "{err}");
        let err = parse_job(r#"{"command":"rees","ring":{"vars":2}}"#).unwrap_err();
        assert!(err.to_string().contains("I"), "{err}");
    }

    #[test]
    fn bernstein_job() {
        let text = r#"{"command":"bernstein","supports":[[[0,0],[2,0],[0,2]],[[0,0],[3,0],[0,3]]]}"#;
        let report = run(&parse_job(text).unwrap(), &RunOptions::default()).unwrap();
        assert_eq!(report.summary, vec!["bound = 6".to_string()]);
        assert_eq!(report.identities.len(), 1);
        assert!(report.pass());
    }

    #[test]
    fn rees_job_with_embedding_and_quotient() {
        let text = r#"{"command":"rees","ring":{"vars":2},"I":"x1^2","c":3,"e":1,"v":4}"#;
        let report = run(&parse_job(text).unwrap(), &RunOptions::default()).unwrap();
        assert!(report.pass(), "{:?}", report.identities);
        assert_eq!(report.results["mixed"], json!([-2, 1]));
    }

    #[test]
    fn hilbert_job_bigraded_free() {
        let text = r#"{"command":"hilbert","ring":{"blocks":[2,2]},"lower":[0,0],"upper":[2,2]}"#;
        let report = run(&parse_job(text).unwrap(), &RunOptions::default()).unwrap();
        assert!(report.pass(), "{:?}", report.identities);
        assert_eq!(report.results["partial_degrees"], json!([1, 1]));
    }

    #[test]
    fn multseq_job() {
        let report = run(&parse_job(r#"{"command":"multseq","ring":{"vars":2},"I":"x1"}"#).unwrap(), &RunOptions::default()).unwrap();
        assert_eq!(report.results["sequence"], json!([0, 1, 0]));
        assert!(report.pass(), "{:?}", report.identities);
    }
}
