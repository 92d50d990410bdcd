//! Mixed multiplicities of monomial ideals in `A = k[x1..xn]/K` localized at
//! `m`, and the multiplicities of blow-up algebras built from them.
//!
//! Lengths are standard-monomial counts. A graded piece
//! `m^u P / (m^{u+1} P + Q)` is never formed as a quotient: a monomial `w`
//! lies in `m^u P \ m^{u+1} P` exactly when `deg w − k(w) = u`, where `k(w)` is
//! the least degree of a generator of `P` dividing `w`, so its length is a
//! difference of graded standard-monomial counts of ideals built from `P`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::closed_forms::extended_rees_rhs;
use crate::count::{binomial, standard_count, GradedCounter};
use crate::error::{Error, Result};
use crate::hilbert::{
    compositions, extract_at_degree, fit_stable, Fit, FitOptions, HilbertSource, MixedMultiplicityVector, PrefixSums,
    TotalGrading,
};
use crate::monomial::{divides, minimalize_raw, product_raw, total_degree, ExponentVector, MonomialIdeal};
use crate::polytope::LatticePolytope;
use crate::rational::{factorial, floor_root, to_i64};

/// Minimum box sides: 14 for one or two grading axes, 8 for three, 6 beyond.
pub fn default_fit_options(arity: usize) -> FitOptions {
    let side = match arity {
        0..=2 => 14,
        3 => 8,
        _ => 6,
    };
    FitOptions::default().with_min_side(side)
}

fn require_standard(ideal: &MonomialIdeal) -> Result<()> {
    let ring = ideal.ring();
    if ring.rank() == 1 && ring.grading().iter().all(|d| d[..] == [1]) {
        Ok(())
    } else {
        Err(Error::Unsupported("multiplicities need a standard graded polynomial ring".into()))
    }
}

fn same_ring(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<()> {
    if a.ring() == b.ring() {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

fn require_primary(i: &MonomialIdeal) -> Result<()> {
    require_standard(i)?;
    if i.is_primary_to_m() {
        Ok(())
    } else {
        Err(Error::NotPrimary(i.to_string()))
    }
}

fn counter(n: usize) -> GradedCounter {
    GradedCounter::new(&vec![vec![1]; n])
}

fn small(v: u128) -> Result<u64> {
    v.to_u64().ok_or_else(|| Error::Unsupported("length exceeds 64-bit counts".into()))
}

fn union(a: &[ExponentVector], b: &[ExponentVector]) -> Vec<ExponentVector> {
    let mut out = a.to_vec();
    out.extend(b.iter().cloned());
    minimalize_raw(out)
}

/// `deg!·coeff(t^deg)` of a univariate fit known to have degree at most `deg`.
fn normalized_top(fit: &Fit, degree: u32) -> Result<i64> {
    let p = &fit.polynomial.polynomial;
    if let Some(actual) = p.degree() {
        if actual > degree {
            return Err(Error::FitCorruption(format!("fitted degree {actual} exceeds the known degree {degree}")));
        }
    }
    let v = p.coefficient(&[degree]) * BigRational::from_integer(factorial(u64::from(degree)));
    to_i64(&v).ok_or_else(|| Error::FitCorruption(format!("normalized coefficient {v} is not an integer")))
}

/// Powers `I^k` of a generator list, computed once and shared across threads.
struct Powers {
    base: Vec<ExponentVector>,
    cache: Mutex<Vec<Arc<Vec<ExponentVector>>>>,
}

impl Powers {
    fn new(base: &[ExponentVector], n: usize) -> Self {
        Powers { base: base.to_vec(), cache: Mutex::new(vec![Arc::new(vec![vec![0; n]])]) }
    }

    fn get(&self, k: u32) -> Arc<Vec<ExponentVector>> {
        let mut cache = self.cache.lock().expect("power cache");
        while cache.len() <= k as usize {
            let next = product_raw(cache.last().expect("nonempty"), &self.base);
            cache.push(Arc::new(next));
        }
        cache[k as usize].clone()
    }
}

/// Products `∏ J_i^{v_i}`, memoized by exponent vector.
struct Products {
    n: usize,
    factors: Vec<Powers>,
    memo: Mutex<HashMap<Vec<u32>, Arc<Vec<ExponentVector>>>>,
}

impl Products {
    fn new(ideals: &[MonomialIdeal], n: usize) -> Self {
        Products { n, factors: ideals.iter().map(|j| Powers::new(j.generators(), n)).collect(), memo: Mutex::default() }
    }

    fn get(&self, v: &[u32]) -> Arc<Vec<ExponentVector>> {
        if let Some(p) = self.memo.lock().expect("product memo").get(v) {
            return p.clone();
        }
        let mut acc = vec![vec![0; self.n]];
        for (f, &e) in self.factors.iter().zip(v) {
            if e > 0 {
                acc = product_raw(&acc, &f.get(e));
            }
        }
        let acc = Arc::new(acc);
        self.memo.lock().expect("product memo").insert(v.to_vec(), acc.clone());
        acc
    }
}

/// `ℓ(m^u P / (m^{u+1} P + Q))` with `Q` given by generators: the number of
/// monomials `w ∉ Q` with `deg w − k(w) = u`.
fn fresh_generators(counter: &mut GradedCounter, p: &[ExponentVector], q: &[ExponentVector], u: u32) -> u128 {
    let mut degrees: Vec<u64> = p.iter().map(|g| total_degree(g)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut acc = 0;
    for k in degrees {
        let below: Vec<ExponentVector> = p.iter().filter(|g| total_degree(g) < k).cloned().collect();
        let at: Vec<ExponentVector> = p.iter().filter(|g| total_degree(g) == k).cloned().collect();
        let below = union(&below, q);
        let upto = union(&below, &at);
        let t = u64::from(u) + k;
        acc += counter.count(&below, &[t]) - counter.count(&upto, &[t]);
    }
    acc
}

/// `(I | J_1, ..., J_s)` in `A = k[x]/K`, with `I` primary to `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealTuple {
    primary: MonomialIdeal,
    others: Vec<MonomialIdeal>,
    ambient: MonomialIdeal,
}

impl IdealTuple {
    pub fn new(primary: MonomialIdeal, others: Vec<MonomialIdeal>) -> Result<Self> {
        let zero = MonomialIdeal::zero(primary.ring().clone());
        IdealTuple::with_ambient(primary, others, zero)
    }

    /// The tuple read in `k[x]/ambient`.
    pub fn with_ambient(primary: MonomialIdeal, others: Vec<MonomialIdeal>, ambient: MonomialIdeal) -> Result<Self> {
        require_primary(&primary)?;
        same_ring(&primary, &ambient)?;
        if ambient.is_unit() {
            return Err(Error::Precondition("the ambient ideal must be proper".into()));
        }
        if others.is_empty() {
            return Err(Error::Precondition("a tuple needs at least one ideal besides I".into()));
        }
        for (k, j) in others.iter().enumerate() {
            same_ring(&primary, j)?;
            if j.is_zero() || j.is_unit() {
                return Err(Error::Precondition(format!("J_{} must be nonzero and proper", k + 1)));
            }
        }
        Ok(IdealTuple { primary, others, ambient })
    }

    /// `(m | J)` in `k[x]`.
    pub fn maximal(j: MonomialIdeal) -> Result<Self> {
        IdealTuple::new(MonomialIdeal::maximal(j.ring().clone()), vec![j])
    }

    pub fn primary(&self) -> &MonomialIdeal {
        &self.primary
    }

    pub fn others(&self) -> &[MonomialIdeal] {
        &self.others
    }

    pub fn ambient(&self) -> &MonomialIdeal {
        &self.ambient
    }

    pub fn num_vars(&self) -> usize {
        self.primary.num_vars()
    }

    /// `J = J_1 ⋯ J_s`.
    pub fn joint(&self) -> MonomialIdeal {
        self.others[1..].iter().fold(self.others[0].clone(), |acc, j| acc.product(j).expect("same ring"))
    }

    /// `dim A/0:J^∞`.
    pub fn dimension(&self) -> Result<i64> {
        self.ambient.saturate(&self.joint())?.krull_dim()
    }

    pub fn source(&self) -> TupleSource<'_> {
        let n = self.num_vars();
        let maximal = self.primary == MonomialIdeal::maximal(self.primary.ring().clone());
        let mut c = counter(n);
        let socle = (0..).find(|&t| c.count(self.primary.generators(), &[t]) == 0).expect("I is m-primary");
        TupleSource {
            tuple: self,
            maximal,
            products: Products::new(&self.others, n),
            primary_powers: Powers::new(self.primary.generators(), n),
            socle,
        }
    }
}

/// Hilbert function of `R(I|J_1..J_s) = ⊕ I^{u_0}J^v / I^{u_0+1}J^v` over `A`.
pub struct TupleSource<'a> {
    tuple: &'a IdealTuple,
    maximal: bool,
    products: Products,
    primary_powers: Powers,
    /// Least `N` with `m^N ⊆ I`.
    socle: u64,
}

impl HilbertSource for TupleSource<'_> {
    fn arity(&self) -> usize {
        1 + self.tuple.others.len()
    }

    fn value(&self, degree: &[u32]) -> Result<u64> {
        if degree.len() != self.arity() {
            return Err(Error::Dimension { expected: self.arity(), found: degree.len() });
        }
        let n = self.tuple.num_vars();
        let k = self.tuple.ambient.generators();
        let p = self.products.get(&degree[1..]);
        let mut c = counter(n);
        if self.maximal {
            return small(fresh_generators(&mut c, &p, k, degree[0]));
        }
        let lower = product_raw(&self.primary_powers.get(degree[0]), &p);
        let upper = product_raw(self.tuple.primary.generators(), &lower);
        let lo = lower.iter().map(|g| total_degree(g)).min().expect("nonzero product");
        let hi = lower.iter().map(|g| total_degree(g)).max().expect("nonzero product") + self.socle;
        let (lower, upper) = (union(&lower, k), union(&upper, k));
        let mut acc = 0;
        for t in lo..hi {
            acc += c.count(&upper, &[t]) - c.count(&lower, &[t]);
        }
        small(acc)
    }
}

/// The fitted Hilbert polynomial of `R(I|J..)` and its mixed multiplicities.
#[derive(Clone, Debug, Serialize)]
pub struct TupleMultiplicities {
    /// `d = dim A/0:J^∞`; the polynomial has total degree `d − 1`.
    pub dimension: u32,
    pub values: MixedMultiplicityVector,
    pub fit: Fit,
}

impl TupleMultiplicities {
    /// `e_j(I|J) = e_{(d−1−j, j)}` for `j = 0..d−1`, for a single `J`.
    pub fn sequence(&self) -> Vec<i64> {
        assert_eq!(self.values.entries.keys().next().map(Vec::len), Some(2), "sequence needs a pair (I|J)");
        let r = self.dimension - 1;
        (0..=r).map(|j| self.values.get(&[r - j, j])).collect()
    }

    /// Partial degree of the fitted polynomial in the variable of `J_k`.
    pub fn partial_degree(&self, k: usize) -> Option<u32> {
        self.fit.polynomial.polynomial.partial_degree(k + 1)
    }
}

pub fn mixed_multiplicities(tuple: &IdealTuple, opts: &FitOptions) -> Result<TupleMultiplicities> {
    let d = tuple.dimension()?;
    if d < 1 {
        return Err(Error::Precondition("0:J^∞ is the unit ideal, so R(I|J) vanishes".into()));
    }
    let r = (d - 1) as u32;
    let source = tuple.source();
    let fit = fit_stable(&source, r, opts)?;
    let values = extract_at_degree(&fit.polynomial, r)?;
    Ok(TupleMultiplicities { dimension: d as u32, values, fit })
}

/// `ℓ(A/I_1^{u_1} ⋯ I_k^{u_k})` for `m`-primary ideals.
pub fn bhattacharya_length(ideals: &[MonomialIdeal], u: &[u32]) -> Result<u128> {
    if ideals.len() != u.len() {
        return Err(Error::Dimension { expected: ideals.len(), found: u.len() });
    }
    let first = ideals.first().ok_or_else(|| Error::Precondition("no ideals".into()))?;
    for i in ideals {
        require_primary(i)?;
        same_ring(first, i)?;
    }
    let n = first.num_vars();
    let mut acc = vec![vec![0; n]];
    for (i, &e) in ideals.iter().zip(u) {
        acc = product_raw(&acc, i.power(e).generators());
    }
    standard_count(&acc, n).ok_or_else(|| Error::NotPrimary("product of powers".into()))
}

struct BhattacharyaSource {
    n: usize,
    products: Products,
}

impl HilbertSource for BhattacharyaSource {
    fn arity(&self) -> usize {
        self.products.factors.len()
    }

    fn value(&self, degree: &[u32]) -> Result<u64> {
        let p = self.products.get(degree);
        small(standard_count(&p, self.n).ok_or_else(|| Error::NotPrimary("product of powers".into()))?)
    }
}

/// `e_0(I|J), ..., e_d(I|J)` from the polynomial of `ℓ(A/I^uJ^v)`, both ideals `m`-primary.
pub fn bhattacharya_mixed(i: &MonomialIdeal, j: &MonomialIdeal, opts: &FitOptions) -> Result<(Vec<i64>, Fit)> {
    require_primary(i)?;
    require_primary(j)?;
    same_ring(i, j)?;
    let n = i.num_vars();
    let source = BhattacharyaSource { n, products: Products::new(&[i.clone(), j.clone()], n) };
    let d = n as u32;
    let fit = fit_stable(&source, d, opts)?;
    let top = extract_at_degree(&fit.polynomial, d)?;
    Ok(((0..=d).map(|k| top.get(&[d - k, k])).collect(), fit))
}

struct SamuelSource {
    n: usize,
    powers: Powers,
    ambient: Vec<ExponentVector>,
}

impl HilbertSource for SamuelSource {
    fn arity(&self) -> usize {
        1
    }

    fn value(&self, degree: &[u32]) -> Result<u64> {
        let gens = union(&self.powers.get(degree[0]), &self.ambient);
        small(standard_count(&gens, self.n).ok_or_else(|| Error::NotPrimary("power of I".into()))?)
    }
}

/// `e(I, k[x]/K)`: `d!` times the leading coefficient of `ℓ(A/I^t)`, `d = dim A`.
pub fn samuel_multiplicity_in(i: &MonomialIdeal, ambient: &MonomialIdeal, opts: &FitOptions) -> Result<(i64, Fit)> {
    require_primary(i)?;
    same_ring(i, ambient)?;
    let d = ambient.krull_dim()?;
    if d < 0 {
        return Err(Error::Precondition("the ambient ideal must be proper".into()));
    }
    let n = i.num_vars();
    let source = SamuelSource { n, powers: Powers::new(i.generators(), n), ambient: ambient.generators().to_vec() };
    let fit = fit_stable(&source, d as u32, opts)?;
    Ok((normalized_top(&fit, d as u32)?, fit))
}

pub fn samuel_multiplicity(i: &MonomialIdeal) -> Result<i64> {
    let zero = MonomialIdeal::zero(i.ring().clone());
    Ok(samuel_multiplicity_in(i, &zero, &default_fit_options(1))?.0)
}

/// `n!` times the volume of the bounded region under the Newton polyhedron.
///
/// With `M` at least every exponent, the polyhedron meets `[0, M]^n` in the
/// hull of the generators with any subset of coordinates raised to `M`.
pub fn staircase_volume_multiplicity(i: &MonomialIdeal) -> Result<i64> {
    require_primary(i)?;
    let n = i.num_vars();
    let big = i.generators().iter().flat_map(|g| g.iter().copied()).max().unwrap_or(1).max(1);
    let mut points = Vec::new();
    for g in i.generators() {
        for mask in 0u32..1 << n {
            points.push((0..n).map(|k| i64::from(if mask & (1 << k) != 0 { big } else { g[k] })).collect());
        }
    }
    let hull = LatticePolytope::from_points(n, &points)?;
    let boxed = BigRational::from_integer(BigInt::from(big).pow(n as u32));
    let v = (boxed - hull.volume()) * BigRational::from_integer(factorial(n as u64));
    to_i64(&v).ok_or_else(|| Error::Invariant(format!("staircase multiplicity {v} is not an integer")))
}

/// Whether a monomial ideal equals its integral closure: no monomial outside
/// `I` lies in the Newton polyhedron `conv(I) + R^n_{≥0}`.
pub fn is_integrally_closed(i: &MonomialIdeal) -> Result<bool> {
    if i.is_zero() || i.is_unit() {
        return Ok(true);
    }
    let n = i.num_vars();
    let big = i.generators().iter().flat_map(|g| g.iter().copied()).max().unwrap_or(0) + 1;
    let mut points: Vec<Vec<i64>> = Vec::new();
    for g in i.generators() {
        for mask in 0u32..1 << n {
            points.push((0..n).map(|k| i64::from(if mask & (1 << k) != 0 { big } else { g[k] })).collect());
        }
    }
    let facets = LatticePolytope::from_points(n, &points)?.inequalities();
    let inside = |w: &[u32]| facets.iter().all(|(a, b)| a.iter().zip(w).map(|(x, &y)| x * i128::from(y)).sum::<i128>() <= *b);
    Ok(crate::hilbert::box_points(&vec![0; n], &vec![big; n]).iter().all(|w| i.contains(w) || !inside(w)))
}

struct FiberSource {
    powers: Powers,
    ambient: Vec<ExponentVector>,
}

impl HilbertSource for FiberSource {
    fn arity(&self) -> usize {
        1
    }

    fn value(&self, degree: &[u32]) -> Result<u64> {
        let p = self.powers.get(degree[0]);
        Ok(p.iter().filter(|g| !self.ambient.iter().any(|k| divides(k, g))).count() as u64)
    }
}

/// `s(J) = dim ⊕ J^n/mJ^n` over `k[x]/K`, with the fit of the fiber Hilbert function.
pub fn analytic_spread_in(j: &MonomialIdeal, ambient: &MonomialIdeal, opts: &FitOptions) -> Result<(u32, Fit)> {
    require_standard(j)?;
    same_ring(j, ambient)?;
    if j.is_zero() || j.is_unit() {
        return Err(Error::Degenerate("analytic spread"));
    }
    let bound = u32::try_from(ambient.krull_dim()? - 1).unwrap_or(0);
    let source = FiberSource { powers: Powers::new(j.generators(), j.num_vars()), ambient: ambient.generators().to_vec() };
    let fit = fit_stable(&source, bound, opts)?;
    let spread = fit.polynomial.polynomial.degree().map_or(0, |d| d + 1);
    Ok((spread, fit))
}

pub fn analytic_spread(j: &MonomialIdeal) -> Result<u32> {
    let zero = MonomialIdeal::zero(j.ring().clone());
    Ok(analytic_spread_in(j, &zero, &default_fit_options(1))?.0)
}

/// `ρ = max{i : e_i > 0}`.
pub fn rho(sequence: &[i64]) -> Option<usize> {
    sequence.iter().rposition(|&e| e > 0)
}

/// Indices with `e_i > 0`.
pub fn positivity_set(sequence: &[i64]) -> Vec<usize> {
    (0..sequence.len()).filter(|&i| sequence[i] > 0).collect()
}

/// Positivity bracket and downward closure of the mixed multiplicities of a tuple.
#[derive(Clone, Debug, Serialize)]
pub struct RigidityReport {
    pub rho: Option<usize>,
    /// Height of `J_1` in `A`, for a pair.
    pub height: Option<usize>,
    /// Analytic spread of `J_1` in `A`, for a pair.
    pub spread: Option<u32>,
    /// Degree of the fitted polynomial in the `J_1` variable, for a pair.
    pub j_degree: Option<u32>,
    pub violations: Vec<String>,
}

impl RigidityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn rigidity_check(tuple: &IdealTuple, mm: &TupleMultiplicities, opts: &FitOptions) -> Result<RigidityReport> {
    let mut violations = Vec::new();
    let r = mm.dimension - 1;
    for (alpha, &e) in &mm.values.entries {
        if e < 0 {
            violations.push(format!("e_{alpha:?} = {e} is negative"));
        }
        if e <= 0 {
            continue;
        }
        // Every β ≤ α off the I-slot must also be positive.
        for beta in compositions(alpha.len(), r) {
            if beta[1..].iter().zip(&alpha[1..]).all(|(b, a)| b <= a) && mm.values.get(&beta) <= 0 {
                violations.push(format!("e_{alpha:?} > 0 but e_{beta:?} = {}", mm.values.get(&beta)));
            }
        }
    }
    let mut report = RigidityReport { rho: None, height: None, spread: None, j_degree: None, violations };
    if tuple.others.len() == 1 {
        let seq = mm.sequence();
        let rho = rho(&seq);
        let j = &tuple.others[0];
        let height = j.height_modulo(&tuple.ambient)?;
        let spread = analytic_spread_in(j, &tuple.ambient, opts)?.0;
        let j_degree = mm.partial_degree(0);
        if let Some(rho) = rho {
            if let Some(i) = (0..=rho).find(|&i| seq[i] <= 0) {
                report.violations.push(format!("e_{i} = {} with ρ = {rho}", seq[i]));
            }
            if rho + 1 < height || rho as u32 + 1 > spread {
                report.violations.push(format!("ρ = {rho} outside [height − 1, s − 1] = [{}, {}]", height as i64 - 1, spread as i64 - 1));
            }
        } else {
            report.violations.push("no positive mixed multiplicity".into());
        }
        if j_degree.is_some_and(|dj| dj >= spread) {
            report.violations.push(format!("J-degree {j_degree:?} of the Hilbert polynomial is not below s(J) = {spread}"));
        }
        report.rho = rho;
        report.height = Some(height);
        report.spread = Some(spread);
        report.j_degree = j_degree;
    }
    Ok(report)
}

/// `e(I, A/0:J^∞)`, which equals `e_0(I|J)`.
pub fn front_multiplicity(tuple: &IdealTuple, opts: &FitOptions) -> Result<i64> {
    let saturated = tuple.ambient.saturate(&tuple.joint())?;
    Ok(samuel_multiplicity_in(&tuple.primary, &saturated, opts)?.0)
}

/// `e(R)` for the total grading of `R(I|J..)`: the normalized coefficient of
/// `Σ_{|u|=t} H(u)` in degree `d − 1 + s`.
pub fn total_grading_multiplicity(tuple: &IdealTuple, opts: &FitOptions) -> Result<i64> {
    let d = tuple.dimension()?;
    if d < 1 {
        return Err(Error::Precondition("0:J^∞ is the unit ideal, so R(I|J) vanishes".into()));
    }
    let degree = (d - 1) as u32 + tuple.others.len() as u32;
    let source = tuple.source();
    let fit = fit_stable(&TotalGrading(&source), degree, &opts.with_min_side(0))?;
    normalized_top(&fit, degree)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderFormulaReport {
    pub order: u64,
    pub e1: i64,
    pub holds: bool,
}

/// Compares `e_1(m|J)` with the `m`-adic order of `J`, for `height J ≥ 2`.
pub fn order_formula_check(j: &MonomialIdeal, opts: &FitOptions) -> Result<OrderFormulaReport> {
    require_standard(j)?;
    if j.height()? < 2 {
        return Err(Error::Precondition(format!("{j} has height below 2")));
    }
    let mm = mixed_multiplicities(&IdealTuple::maximal(j.clone())?, opts)?;
    let e1 = mm.sequence()[1];
    let order = j.order()?;
    Ok(OrderFormulaReport { order, e1, holds: i64::try_from(order).ok() == Some(e1) })
}

struct MultSeqSource<'a> {
    n: usize,
    powers: Powers,
    ambient: &'a [ExponentVector],
}

impl HilbertSource for MultSeqSource<'_> {
    fn arity(&self) -> usize {
        2
    }

    /// `ℓ((m^u I^v + I^{v+1}) / (m^{u+1} I^v + I^{v+1}))`.
    fn value(&self, degree: &[u32]) -> Result<u64> {
        let p = self.powers.get(degree[1]);
        let q = union(&self.powers.get(degree[1] + 1), self.ambient);
        small(fresh_generators(&mut counter(self.n), &p, &q, degree[0]))
    }
}

/// `c_0(I), ..., c_d(I)` with the fit of the doubly summed Hilbert function.
#[derive(Clone, Debug, Serialize)]
pub struct MultiplicitySequence {
    pub dimension: u32,
    pub values: Vec<i64>,
    pub fit: Fit,
}

impl MultiplicitySequence {
    /// Indices outside `[d − s(I), dim A/I]` carrying a nonzero value.
    pub fn support_violations(&self, spread: u32, dim_quotient: i64) -> Vec<usize> {
        let d = self.dimension as i64;
        (0..self.values.len())
            .filter(|&j| self.values[j] != 0 && ((j as i64) < d - i64::from(spread) || j as i64 > dim_quotient))
            .collect()
    }
}

pub fn multiplicity_sequence_in(i: &MonomialIdeal, ambient: &MonomialIdeal, opts: &FitOptions) -> Result<MultiplicitySequence> {
    require_standard(i)?;
    same_ring(i, ambient)?;
    if i.is_zero() || i.is_unit() {
        return Err(Error::Degenerate("multiplicity sequence"));
    }
    let d = u32::try_from(ambient.krull_dim()?).map_err(|_| Error::Precondition("the ambient ideal must be proper".into()))?;
    let source = MultSeqSource { n: i.num_vars(), powers: Powers::new(i.generators(), i.num_vars()), ambient: ambient.generators() };
    let sums = PrefixSums::new(&source, &[0, 1]);
    let fit = fit_stable(&sums, d, opts)?;
    let top = extract_at_degree(&fit.polynomial, d)?;
    let values: Vec<i64> = (0..=d).map(|k| top.get(&[k, d - k])).collect();
    if let Some(k) = values.iter().position(|&c| c < 0) {
        return Err(Error::Invariant(format!("c_{k} = {} is negative", values[k])));
    }
    Ok(MultiplicitySequence { dimension: d, values, fit })
}

pub fn multiplicity_sequence(i: &MonomialIdeal, opts: &FitOptions) -> Result<MultiplicitySequence> {
    multiplicity_sequence_in(i, &MonomialIdeal::zero(i.ring().clone()), opts)
}

/// `j(I) = c_0(I)`.
pub fn j_multiplicity(i: &MonomialIdeal, opts: &FitOptions) -> Result<i64> {
    Ok(multiplicity_sequence(i, opts)?.values[0])
}

/// `e(G_M)` for `G = ⊕ (m^u I^v + I^{v+1})/(m^{u+1} I^v + I^{v+1})` under its total grading.
pub fn dade_multiplicity(i: &MonomialIdeal, opts: &FitOptions) -> Result<i64> {
    require_standard(i)?;
    if i.is_zero() || i.is_unit() {
        return Err(Error::Degenerate("multiplicity sequence"));
    }
    let n = i.num_vars();
    let source = MultSeqSource { n, powers: Powers::new(i.generators(), n), ambient: &[] };
    let degree = n as u32 - 1;
    let fit = fit_stable(&TotalGrading(&source), degree, opts)?;
    normalized_top(&fit, degree)
}

/// `e(A[It]_M)` from `ℓ(M^n/M^{n+1}) = Σ_i ℓ(m^{n−i}I^i/m^{n−i+1}I^i)`, fitted
/// in degree `d = dim A/0:I^∞`.
pub fn rees_algebra_multiplicity_in(i: &MonomialIdeal, ambient: &MonomialIdeal, opts: &FitOptions) -> Result<(i64, Fit)> {
    if i.height_modulo(ambient)? < 1 {
        return Err(Error::Precondition(format!("{i} has height 0")));
    }
    let tuple = IdealTuple::with_ambient(MonomialIdeal::maximal(i.ring().clone()), vec![i.clone()], ambient.clone())?;
    let d = u32::try_from(tuple.dimension()?).map_err(|_| Error::Precondition("0:I^∞ is the unit ideal".into()))?;
    let source = tuple.source();
    let fit = fit_stable(&TotalGrading(&source), d, opts)?;
    Ok((normalized_top(&fit, d)?, fit))
}

pub fn rees_algebra_multiplicity(i: &MonomialIdeal, opts: &FitOptions) -> Result<i64> {
    Ok(rees_algebra_multiplicity_in(i, &MonomialIdeal::zero(i.ring().clone()), opts)?.0)
}

/// Inputs and value of the extended-Rees formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendedRees {
    /// `e(m² + I)`.
    pub front: i64,
    /// `e_j(m² + I | I)`, `j = 0..d−1`.
    pub mixed: Vec<i64>,
    pub value: i64,
}

/// `e(A[It, t^{−1}]_N) = (1/2^d)[e(m²+I) + Σ 2^j e_j(m²+I|I)]`, asserted integral.
pub fn extended_rees_multiplicity(i: &MonomialIdeal, opts: &FitOptions) -> Result<ExtendedRees> {
    require_standard(i)?;
    if i.height()? < 1 {
        return Err(Error::Precondition(format!("{i} has height 0")));
    }
    let ring = i.ring().clone();
    let front_ideal = MonomialIdeal::maximal(ring.clone()).power(2).sum(i)?;
    let front = samuel_multiplicity_in(&front_ideal, &MonomialIdeal::zero(ring), &default_fit_options(1))?.0;
    let mm = mixed_multiplicities(&IdealTuple::new(front_ideal, vec![i.clone()])?, opts)?;
    let mixed = mm.sequence();
    let rhs = extended_rees_rhs(front, &mixed, mixed.len())?;
    let value = to_i64(&rhs).ok_or_else(|| Error::FitCorruption(format!("extended Rees multiplicity {rhs} is not an integer")))?;
    Ok(ExtendedRees { front, mixed, value })
}

/// `deg v_i = e_{i−1}(m|I) − e_i(m|I)` for `i = 1..d`, out-of-range terms zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StuckradVogel {
    /// `e_0(m|I), ..., e_d(m|I)` with `e_d = e(I)` for `m`-primary `I`, else 0.
    pub mixed: Vec<i64>,
    pub degrees: Vec<i64>,
    /// Indices `i` whose difference is negative.
    pub negative: Vec<usize>,
}

pub fn stuckrad_vogel_degrees(i: &MonomialIdeal, opts: &FitOptions) -> Result<StuckradVogel> {
    let mm = mixed_multiplicities(&IdealTuple::maximal(i.clone())?, opts)?;
    let mut mixed = mm.sequence();
    let d = i.num_vars();
    mixed.resize(d, 0);
    mixed.push(if i.is_primary_to_m() { samuel_multiplicity(i)? } else { 0 });
    let degrees: Vec<i64> = (1..=d).map(|k| mixed[k - 1] - mixed[k]).collect();
    let negative = (1..=d).filter(|&k| degrees[k - 1] < 0).collect();
    Ok(StuckradVogel { mixed, degrees, negative })
}

/// `μ^{(0)}, ..., μ^{(n+1)}` of `f = Σ x_i^{a_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MilnorSequence {
    pub exponents: Vec<u32>,
    pub values: Vec<i64>,
}

impl MilnorSequence {
    /// `μ* = (μ^{(n+1)}, ..., μ^{(0)})`.
    pub fn star(&self) -> Vec<i64> {
        self.values.iter().rev().copied().collect()
    }
}

impl std::fmt::Display for MilnorSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.star().iter().map(i64::to_string).collect();
        write!(f, "μ* = ({})", parts.join(", "))
    }
}

/// `μ^{(i)} = e_i(m|J(f))` for `i ≤ n` and `μ^{(n+1)} = e(J(f))`, with
/// `J(f) = (x_0^{a_0−1}, ..., x_n^{a_n−1})`.
pub fn milnor_sequence(exponents: &[u32], opts: &FitOptions) -> Result<MilnorSequence> {
    if exponents.is_empty() || exponents.iter().any(|&a| a < 2) {
        return Err(Error::Precondition(format!("exponents {exponents:?} must all be at least 2")));
    }
    let n = exponents.len();
    let ring = Arc::new(crate::monomial::RingContext::standard(n));
    let gens = (0..n).map(|k| crate::monomial::unit_vector(n, k, exponents[k] - 1)).collect();
    let jacobian = MonomialIdeal::new(ring, gens)?;
    let mm = mixed_multiplicities(&IdealTuple::maximal(jacobian.clone())?, opts)?;
    let mut values = mm.sequence();
    values.push(samuel_multiplicity(&jacobian)?);
    Ok(MilnorSequence { exponents: exponents.to_vec(), values })
}

/// Mixed-multiplicity inequalities for a pair of `m`-primary ideals.
#[derive(Clone, Debug, Serialize)]
pub struct InequalityReport {
    /// `e_0(I|J), ..., e_d(I|J)`.
    pub mixed: Vec<i64>,
    pub e_product: i64,
    pub violations: Vec<String>,
    /// Minkowski comparisons that exact refinement could not settle.
    pub undecided: Vec<String>,
}

/// `c^{1/d} ≤ a^{1/d} + b^{1/d}`, decided exactly when possible.
pub fn minkowski_holds(a: &BigInt, b: &BigInt, c: &BigInt, d: u32) -> Option<bool> {
    // Rational ratio of roots: (a^{1/d} + b^{1/d})^d = b·(r + 1)^d.
    let q = BigRational::new(a.clone(), b.clone());
    let (pn, pd) = (floor_root(q.numer(), d), floor_root(q.denom(), d));
    if pn.pow(d) == *q.numer() && pd.pow(d) == *q.denom() {
        let r = BigRational::new(pn, pd);
        let bound = BigRational::from_integer(b.clone()) * (r + BigRational::from_integer(1.into())).pow(d as i32);
        return Some(BigRational::from_integer(c.clone()) <= bound);
    }
    for bits in [16u32, 64, 256] {
        let scale = BigInt::from(1) << (bits * d);
        let lx = floor_root(&(a * &scale), d);
        let ly = floor_root(&(b * &scale), d);
        let lhs = c * &scale;
        if lhs <= (&lx + &ly).pow(d) {
            return Some(true);
        }
        if lhs > (&lx + &ly + BigInt::from(2)).pow(d) {
            return Some(false);
        }
    }
    None
}

pub fn inequality_suite(i: &MonomialIdeal, j: &MonomialIdeal, opts: &FitOptions) -> Result<InequalityReport> {
    let (mixed, _) = bhattacharya_mixed(i, j, opts)?;
    let d = mixed.len() - 1;
    let product = i.product(j)?;
    let e_product = samuel_multiplicity(&product)?;
    let mut violations = Vec::new();
    let mut undecided = Vec::new();
    let (ei, ej) = (samuel_multiplicity(i)?, samuel_multiplicity(j)?);
    if mixed[0] != ei || mixed[d] != ej {
        violations.push(format!("end terms ({}, {}) differ from e(I) = {ei}, e(J) = {ej}", mixed[0], mixed[d]));
    }
    let expansion: i128 = (0..=d).map(|k| binomial(d as u64, k as u64) as i128 * i128::from(mixed[k])).sum();
    if expansion != i128::from(e_product) {
        violations.push(format!("e(IJ) = {e_product} but Σ C(d,i) e_i = {expansion}"));
    }
    let big = |v: i64| BigInt::from(v);
    for k in 0..=d {
        let lhs = big(mixed[k]).pow(d as u32);
        let rhs = big(mixed[0]).pow((d - k) as u32) * big(mixed[d]).pow(k as u32);
        if lhs > rhs {
            violations.push(format!("e_{k}^d = {lhs} exceeds e_0^(d−{k}) e_d^{k} = {rhs}"));
        }
    }
    for k in 1..d {
        let lhs = big(mixed[k]) * big(mixed[k]);
        let rhs = big(mixed[k - 1]) * big(mixed[k + 1]);
        if lhs > rhs {
            violations.push(format!("e_{k}^2 = {lhs} exceeds e_{}·e_{} = {rhs}", k - 1, k + 1));
        }
    }
    match minkowski_holds(&big(ei), &big(ej), &big(e_product), d as u32) {
        Some(true) => {}
        Some(false) => violations.push(format!("e(IJ)^(1/d) exceeds e(I)^(1/d) + e(J)^(1/d) for ({e_product}, {ei}, {ej})")),
        None => undecided.push(format!("Minkowski comparison for ({e_product}, {ei}, {ej})")),
    }
    Ok(InequalityReport { mixed, e_product, violations, undecided })
}

/// `e(A[J_1t_1, ..., J_st_s]_M)` two ways: `Σ_{|α|=d−1} e_α(m|J..)` and the
/// total-grading fit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiRees {
    pub mixed_sum: i64,
    pub total_fit: i64,
}

pub fn multi_rees_multiplicity(js: &[MonomialIdeal], opts: &FitOptions) -> Result<MultiRees> {
    let first = js.first().ok_or_else(|| Error::Precondition("no ideals".into()))?;
    for j in js {
        if j.height()? < 1 {
            return Err(Error::Precondition(format!("{j} has height 0")));
        }
    }
    let tuple = IdealTuple::new(MonomialIdeal::maximal(first.ring().clone()), js.to_vec())?;
    let mm = mixed_multiplicities(&tuple, opts)?;
    Ok(MultiRees { mixed_sum: mm.values.sum(), total_fit: total_grading_multiplicity(&tuple, opts)? })
}

/// `e(IJ)` minus `Σ C(d,i) e_i(I|J)`, as a rational.
pub fn expansion_defect(e_product: i64, mixed: &[i64]) -> BigRational {
    let d = mixed.len() - 1;
    let sum: i128 = (0..=d).map(|k| binomial(d as u64, k as u64) as i128 * i128::from(mixed[k])).sum();
    BigRational::from_integer(BigInt::from(i128::from(e_product) - sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::RingContext;

    fn ideal(n: usize, text: &str) -> MonomialIdeal {
        MonomialIdeal::parse(Arc::new(RingContext::standard(n)), text).unwrap()
    }

    fn opts(arity: usize) -> FitOptions {
        default_fit_options(arity)
    }

    /// `ℓ(m^u J^v / m^{u+1} J^v)` by enumerating monomials of each degree.
    fn brute_piece(n: usize, j: &MonomialIdeal, u: u32, v: u32) -> u64 {
        let m = MonomialIdeal::maximal(j.ring().clone());
        let lower = m.power(u).product(&j.power(v)).unwrap();
        let upper = m.power(u + 1).product(&j.power(v)).unwrap();
        let top = lower.max_generator_degree() as u32;
        crate::hilbert::box_points(&vec![0; n], &vec![top; n])
            .into_iter()
            .filter(|w| total_degree(w) <= u64::from(top))
            .filter(|w| lower.contains(w) && !upper.contains(w))
            .count() as u64
    }

    #[test]
    fn bhattacharya_lengths() {
        let m = ideal(2, "ideal(x1,x2)");
        assert_eq!(bhattacharya_length(&[m.clone(), m.clone()], &[1, 1]).unwrap(), 3);
        let i = ideal(2, "ideal(x1^2,x1*x2,x2^3)");
        assert_eq!(bhattacharya_length(std::slice::from_ref(&i), &[1]).unwrap(), 4);
        assert_eq!(bhattacharya_length(&[i], &[2]).unwrap(), 13);
        assert!(bhattacharya_length(&[ideal(2, "x1")], &[1]).is_err());
    }

    #[test]
    fn pieces_match_enumeration() {
        let j = ideal(2, "ideal(x1^2,x1*x2,x2^3)");
        let tuple = IdealTuple::maximal(j.clone()).unwrap();
        let src = tuple.source();
        for u in 0..4 {
            for v in 0..3 {
                assert_eq!(src.value(&[u, v]).unwrap(), brute_piece(2, &j, u, v), "at ({u},{v})");
            }
        }
    }

    #[test]
    fn general_primary_path_matches_maximal_path() {
        let j = ideal(2, "ideal(x1^2,x2^2)");
        let fast = IdealTuple::maximal(j.clone()).unwrap();
        let mut slow = fast.clone();
        slow.primary = ideal(2, "ideal(x2,x1)");
        let (a, b) = (fast.source(), slow.source());
        assert!(b.maximal);
        let slow = TupleSource { maximal: false, ..slow.source() };
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(a.value(&[u, v]).unwrap(), slow.value(&[u, v]).unwrap());
            }
        }
    }

    #[test]
    fn samuel_examples() {
        assert_eq!(samuel_multiplicity(&ideal(2, "ideal(x1,x2)")).unwrap(), 1);
        assert_eq!(samuel_multiplicity(&ideal(2, "ideal(x1^2,x1*x2,x2^3)")).unwrap(), 5);
        assert_eq!(samuel_multiplicity(&ideal(2, "ideal(x1^3,x2^4)")).unwrap(), 12);
        assert!(samuel_multiplicity(&ideal(2, "x1")).is_err());
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase_volume_multiplicity(&ideal(2, "ideal(x1^2,x1*x2,x2^3)")).unwrap(), 5);
        assert_eq!(staircase_volume_multiplicity(&ideal(2, "ideal(x1^3,x2^4)")).unwrap(), 12);
        assert_eq!(staircase_volume_multiplicity(&ideal(3, "ideal(x1,x2,x3)")).unwrap(), 1);
        assert_eq!(staircase_volume_multiplicity(&ideal(1, "x1^4")).unwrap(), 4);
    }

    #[test]
    fn pair_mixed_multiplicities() {
        let j = ideal(2, "ideal(x1^2,x1*x2,x2^3)");
        let mm = mixed_multiplicities(&IdealTuple::maximal(j).unwrap(), &opts(2)).unwrap();
        assert_eq!(mm.sequence(), vec![1, 2]);
        let j = ideal(3, "ideal(x1^2,x2^2,x3^2)");
        let mm = mixed_multiplicities(&IdealTuple::maximal(j).unwrap(), &opts(2)).unwrap();
        assert_eq!(mm.sequence(), vec![1, 2, 4]);
    }

    #[test]
    fn bhattacharya_route_agrees() {
        let m = ideal(2, "ideal(x1,x2)");
        let j = ideal(2, "ideal(x1^2,x1*x2,x2^3)");
        assert_eq!(bhattacharya_mixed(&m, &j, &opts(2)).unwrap().0, vec![1, 2, 5]);
    }

    #[test]
    fn integral_closure_examples() {
        assert!(is_integrally_closed(&ideal(2, "ideal(x1^2,x1*x2,x2^3)")).unwrap());
        assert!(is_integrally_closed(&ideal(2, "ideal(x1^3,x1*x2,x2^3)")).unwrap());
        assert!(!is_integrally_closed(&ideal(2, "ideal(x1^2,x2^2)")).unwrap());
        assert!(is_integrally_closed(&ideal(3, "x1*x2")).unwrap());
        assert!(!is_integrally_closed(&ideal(2, "ideal(x1^4,x2^4)")).unwrap());
    }

    #[test]
    fn spreads() {
        assert_eq!(analytic_spread(&ideal(2, "ideal(x1,x2)")).unwrap(), 2);
        assert_eq!(analytic_spread(&ideal(2, "x1*x2")).unwrap(), 1);
        assert_eq!(analytic_spread(&ideal(2, "ideal(x1^2,x1*x2)")).unwrap(), 2);
    }

    #[test]
    fn principal_ideal_has_rho_zero() {
        let tuple = IdealTuple::maximal(ideal(2, "x1*x2")).unwrap();
        let mm = mixed_multiplicities(&tuple, &opts(2)).unwrap();
        assert_eq!(mm.sequence(), vec![1, 0]);
        let report = rigidity_check(&tuple, &mm, &opts(1)).unwrap();
        assert_eq!(report.rho, Some(0));
        assert!(report.holds(), "{:?}", report.violations);
    }

    #[test]
    fn rho_below_spread_in_a_reducible_ring() {
        // A = k[x1..x4]/((x1) ∩ (x2,x3)), I = m, J = (x1, x4).
        let ring = Arc::new(RingContext::standard(4));
        let ambient = MonomialIdeal::parse(ring.clone(), "ideal(x1*x2,x1*x3)").unwrap();
        let j = MonomialIdeal::parse(ring.clone(), "ideal(x1,x4)").unwrap();
        let tuple = IdealTuple::with_ambient(MonomialIdeal::maximal(ring), vec![j], ambient).unwrap();
        let mm = mixed_multiplicities(&tuple, &opts(2)).unwrap();
        let report = rigidity_check(&tuple, &mm, &opts(1)).unwrap();
        assert_eq!(report.spread, Some(2));
        assert_eq!(report.rho, Some(0));
        assert_eq!(mm.sequence()[1], 0);
        assert!(report.holds(), "{:?}", report.violations);
        assert_eq!(front_multiplicity(&tuple, &opts(1)).unwrap(), mm.sequence()[0]);
    }

    #[test]
    fn order_formula_examples() {
        for (text, o) in [("ideal(x1^2,x1*x2,x2^3)", 2), ("ideal(x1^3,x1^2*x2,x1*x2^2,x2^3)", 3), ("ideal(x1^3,x2^5)", 3)] {
            let r = order_formula_check(&ideal(2, text), &opts(2)).unwrap();
            assert_eq!((r.order, r.e1, r.holds), (o, o as i64, true));
        }
    }

    #[test]
    fn multiplicity_sequences() {
        assert_eq!(multiplicity_sequence(&ideal(2, "x1"), &opts(2)).unwrap().values, vec![0, 1, 0]);
        assert_eq!(multiplicity_sequence(&ideal(2, "ideal(x1^2,x1*x2,x2^3)"), &opts(2)).unwrap().values, vec![5, 0, 0]);
        assert_eq!(j_multiplicity(&ideal(2, "ideal(x1,x2)"), &opts(2)).unwrap(), 1);
        let j = j_multiplicity(&ideal(2, "ideal(x1^2,x1*x2)"), &opts(2)).unwrap();
        assert!(j > 0);
    }

    #[test]
    fn rees_multiplicities() {
        assert_eq!(rees_algebra_multiplicity(&ideal(2, "ideal(x1,x2)"), &opts(1)).unwrap(), 2);
        assert_eq!(rees_algebra_multiplicity(&ideal(2, "ideal(x1^2,x1*x2,x2^2)"), &opts(1)).unwrap(), 3);
        assert_eq!(rees_algebra_multiplicity(&ideal(2, "ideal(x1^2,x1*x2,x2^3)"), &opts(1)).unwrap(), 3);
        assert_eq!(rees_algebra_multiplicity(&ideal(2, "x1^2"), &opts(1)).unwrap(), 1);
    }

    #[test]
    fn dade_equals_samuel_for_primary_ideals() {
        assert_eq!(dade_multiplicity(&ideal(2, "ideal(x1^2,x1*x2,x2^3)"), &opts(1)).unwrap(), 5);
    }

    #[test]
    fn extended_rees_examples() {
        assert_eq!(extended_rees_multiplicity(&ideal(2, "ideal(x1,x2)"), &opts(2)).unwrap().value, 1);
        assert_eq!(extended_rees_multiplicity(&ideal(2, "ideal(x1^2,x2^2)"), &opts(2)).unwrap().value, 4);
        assert_eq!(extended_rees_multiplicity(&ideal(1, "x1^3"), &opts(2)).unwrap().value, 2);
    }

    #[test]
    fn stuckrad_vogel_examples() {
        let sv = stuckrad_vogel_degrees(&ideal(2, "x1"), &opts(2)).unwrap();
        assert_eq!(sv.degrees, vec![1, 0]);
        let sv = stuckrad_vogel_degrees(&ideal(2, "ideal(x1^2,x1*x2,x2^3)"), &opts(2)).unwrap();
        assert_eq!(sv.mixed, vec![1, 2, 5]);
        assert_eq!(sv.negative, vec![1, 2]);
        assert_eq!(sv.degrees.iter().sum::<i64>(), sv.mixed[0] - sv.mixed[2]);
    }

    #[test]
    fn milnor_of_fermat_cubic() {
        let mu = milnor_sequence(&[3, 3, 3], &opts(2)).unwrap();
        assert_eq!(mu.star(), vec![8, 4, 2, 1]);
        assert_eq!(mu.to_string(), "μ* = (8, 4, 2, 1)");
        assert!(milnor_sequence(&[1, 3], &opts(2)).is_err());
    }

    #[test]
    fn inequality_examples() {
        let m = ideal(2, "ideal(x1,x2)");
        let j = ideal(2, "ideal(x1^2,x1*x2,x2^3)");
        let r = inequality_suite(&m, &j, &opts(2)).unwrap();
        assert_eq!(r.e_product, 10);
        assert!(r.violations.is_empty() && r.undecided.is_empty(), "{:?}", r.violations);
        let r = inequality_suite(&j, &j, &opts(2)).unwrap();
        assert_eq!(r.mixed, vec![5, 5, 5]);
        assert_eq!(r.e_product, 20);
        assert!(r.violations.is_empty() && r.undecided.is_empty());
    }

    #[test]
    fn minkowski_exact_cases() {
        let b = |v: i64| BigInt::from(v);
        assert_eq!(minkowski_holds(&b(5), &b(5), &b(20), 2), Some(true));
        assert_eq!(minkowski_holds(&b(5), &b(5), &b(21), 2), Some(false));
        assert_eq!(minkowski_holds(&b(2), &b(3), &b(9), 2), Some(true));
        assert_eq!(minkowski_holds(&b(2), &b(3), &b(10), 2), Some(false));
    }

    #[test]
    fn multi_rees_examples() {
        let m = ideal(2, "ideal(x1,x2)");
        let r = multi_rees_multiplicity(std::slice::from_ref(&m), &opts(2)).unwrap();
        assert_eq!((r.mixed_sum, r.total_fit), (2, 2));
        let r = multi_rees_multiplicity(&[m.clone(), m], &opts(3)).unwrap();
        assert_eq!(r.mixed_sum, r.total_fit);
        let r = multi_rees_multiplicity(&[ideal(2, "x1"), ideal(2, "x2")], &opts(3)).unwrap();
        assert_eq!(r.mixed_sum, r.total_fit);
    }
}
