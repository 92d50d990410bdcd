//! Multigraded Hilbert functions, exact Hilbert-polynomial fitting, and
//! mixed-multiplicity extraction.
//!
//! Any integer-valued function on `N^s` is exposed through [`HilbertSource`].
//! Fits interpolate on the lattice simplex `c + α, |α| ≤ D` by forward
//! differences (exact, integer data) and are then validated on every other
//! tabulated point of the claimed region.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::count::{binomial, GradedCounter};
use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, RingContext};
use crate::poly::Poly;
use crate::rational::{factorial, int, to_i64};

/// An integer-valued function on `N^s`, typically `u ↦ ℓ(R_u)`.
pub trait HilbertSource: Sync {
    fn arity(&self) -> usize;
    fn value(&self, degree: &[u32]) -> Result<u64>;
}

/// All `α ∈ N^s` with `|α| ≤ d`, in lexicographic order.
pub fn simplex_points(s: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; s];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// All `α ∈ N^s` with `|α| = d`.
pub fn compositions(s: usize, d: u32) -> Vec<Vec<u32>> {
    simplex_points(s, d).into_iter().filter(|a| a.iter().sum::<u32>() == d).collect()
}

/// Lattice points of the box `[lower, upper]`, lexicographically.
pub fn box_points(lower: &[u32], upper: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if lower.iter().zip(upper).any(|(l, u)| l > u) {
        return out;
    }
    let mut cur = lower.to_vec();
    loop {
        out.push(cur.clone());
        let mut i = cur.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < upper[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lower[i];
        }
    }
}

/// Tabulated values of a Hilbert function.
///
/// Box tables hold every point of `[lower, upper]`; cone samples hold a
/// subset whose bounding box is `[lower, upper]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertTable {
    pub arity: usize,
    pub lower: Vec<u32>,
    pub upper: Vec<u32>,
    #[serde(with = "cells")]
    pub values: BTreeMap<Vec<u32>, u64>,
}

mod cells {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Cell {
        degree: Vec<u32>,
        value: u64,
    }

    pub fn serialize<S: Serializer>(v: &BTreeMap<Vec<u32>, u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
        let cells: Vec<Cell> = v.iter().map(|(d, &x)| Cell { degree: d.clone(), value: x }).collect();
        cells.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<Vec<u32>, u64>, D::Error> {
        let cells = Vec::<Cell>::deserialize(d)?;
        Ok(cells.into_iter().map(|c| (c.degree, c.value)).collect())
    }
}

impl HilbertTable {
    pub fn from_values(arity: usize, values: BTreeMap<Vec<u32>, u64>) -> Self {
        let mut lower = vec![u32::MAX; arity];
        let mut upper = vec![0; arity];
        for p in values.keys() {
            for i in 0..arity {
                lower[i] = lower[i].min(p[i]);
                upper[i] = upper[i].max(p[i]);
            }
        }
        if values.is_empty() {
            lower = vec![0; arity];
        }
        HilbertTable { arity, lower, upper, values }
    }

    pub fn get(&self, degree: &[u32]) -> Option<u64> {
        self.values.get(degree).copied()
    }
}

/// Evaluates `source` at every point, in parallel.
pub fn tabulate(source: &dyn HilbertSource, points: &[Vec<u32>]) -> Result<BTreeMap<Vec<u32>, u64>> {
    points.par_iter().map(|p| source.value(p).map(|v| (p.clone(), v))).collect()
}

pub fn tabulate_box(source: &dyn HilbertSource, lower: &[u32], upper: &[u32]) -> Result<HilbertTable> {
    let values = tabulate(source, &box_points(lower, upper))?;
    Ok(HilbertTable { arity: source.arity(), lower: lower.to_vec(), upper: upper.to_vec(), values })
}

/// Prefix sums of a box table along the given axes, starting at its lower corner.
pub fn sum_transform(table: &HilbertTable, axes: &[usize]) -> HilbertTable {
    let mut values = table.values.clone();
    for &axis in axes {
        for p in box_points(&table.lower, &table.upper) {
            if p[axis] > table.lower[axis] {
                let mut q = p.clone();
                q[axis] -= 1;
                let add = values[&q];
                *values.get_mut(&p).expect("box table") += add;
            }
        }
    }
    HilbertTable { values, ..table.clone() }
}

/// Degree of a polynomial, with `−∞` for the zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PolyDegree {
    MinusInfinity,
    Finite(u32),
}

impl PolyDegree {
    pub fn from_option(d: Option<u32>) -> Self {
        d.map_or(PolyDegree::MinusInfinity, PolyDegree::Finite)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            PolyDegree::Finite(d) => Some(d),
            PolyDegree::MinusInfinity => None,
        }
    }
}

impl Serialize for PolyDegree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PolyDegree::Finite(d) => s.serialize_u32(*d),
            PolyDegree::MinusInfinity => s.serialize_str("-inf"),
        }
    }
}

impl std::fmt::Display for PolyDegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PolyDegree::Finite(d) => write!(f, "{d}"),
            PolyDegree::MinusInfinity => f.write_str("-inf"),
        }
    }
}

/// Region on which a fitted polynomial was validated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StableRegion {
    /// All `u ≥ corner` componentwise.
    Corner { corner: Vec<u32> },
    /// All `(u, v)` with `u ≥ slope·v + u0` and `v ≥ v0`.
    Cone { slope: u32, u0: u32, v0: u32 },
}

impl StableRegion {
    pub fn contains(&self, p: &[u32]) -> bool {
        match self {
            StableRegion::Corner { corner } => p.iter().zip(corner).all(|(a, b)| a >= b),
            StableRegion::Cone { slope, u0, v0 } => {
                p[1] >= *v0 && u64::from(p[0]) >= u64::from(*slope) * u64::from(p[1]) + u64::from(*u0)
            }
        }
    }
}

/// Exact polynomial together with the region where it equals the Hilbert function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertPolynomial {
    pub polynomial: Poly,
    pub region: StableRegion,
}

impl HilbertPolynomial {
    pub fn arity(&self) -> usize {
        self.polynomial.arity()
    }

    pub fn degree(&self) -> PolyDegree {
        PolyDegree::from_option(self.polynomial.degree())
    }

    pub fn eval(&self, u: &[u32]) -> BigRational {
        let x: Vec<i64> = u.iter().map(|&v| i64::from(v)).collect();
        self.polynomial.eval_int(&x)
    }

    /// `deg!·(leading coefficient)` of a univariate polynomial; 0 for the zero polynomial.
    pub fn normalized_leading(&self) -> Result<i64> {
        assert_eq!(self.arity(), 1, "univariate polynomial expected");
        let Some(d) = self.polynomial.degree() else { return Ok(0) };
        let v = self.polynomial.coefficient(&[d]) * BigRational::from_integer(factorial(u64::from(d)));
        to_i64(&v).ok_or_else(|| Error::FitCorruption(format!("normalized leading coefficient {v} is not an integer")))
    }
}

/// Interpolates the polynomial of total degree ≤ `d` through `f` on the
/// simplex `corner + α, |α| ≤ d`, via forward differences.
fn interpolate(arity: usize, corner: &[u32], d: u32, f: impl Fn(&[u32]) -> Option<u64>) -> Result<Poly> {
    let basis: Vec<Vec<Poly>> = (0..arity)
        .map(|i| (0..=d).map(|k| Poly::binomial_in(arity, i, i64::from(corner[i]), k)).collect())
        .collect();
    let mut poly = Poly::zero(arity);
    for alpha in simplex_points(arity, d) {
        let mut diff = BigInt::zero();
        for beta in box_points(&vec![0; arity], &alpha) {
            let p: Vec<u32> = corner.iter().zip(&beta).map(|(c, b)| c + b).collect();
            let v = f(&p).ok_or_else(|| Error::Precondition(format!("table lacks the window point {p:?}")))?;
            let mut weight = BigInt::from(1);
            for (a, b) in alpha.iter().zip(&beta) {
                weight *= binomial(u64::from(*a), u64::from(*b));
            }
            if (alpha.iter().sum::<u32>() - beta.iter().sum::<u32>()) % 2 == 1 {
                weight = -weight;
            }
            diff += weight * v;
        }
        if !diff.is_zero() {
            let mut term = Poly::constant(arity, BigRational::from_integer(diff));
            for (i, &k) in alpha.iter().enumerate() {
                term = term.mul(&basis[i][k as usize]);
            }
            poly = poly.add(&term);
        }
    }
    Ok(poly)
}

/// Fits a polynomial of total degree ≤ `degree_bound` on the region and
/// validates it on every table point inside the region.
pub fn fit_polynomial(table: &HilbertTable, degree_bound: u32, region: &StableRegion) -> Result<HilbertPolynomial> {
    let polynomial = match region {
        StableRegion::Corner { corner } => {
            if corner.len() != table.arity {
                return Err(Error::Dimension { expected: table.arity, found: corner.len() });
            }
            interpolate(table.arity, corner, degree_bound, |p| table.get(p))?
        }
        StableRegion::Cone { slope, u0, v0 } => {
            if table.arity != 2 {
                return Err(Error::Dimension { expected: 2, found: table.arity });
            }
            let q = interpolate(2, &[*u0, *v0], degree_bound, |p| table.get(&[p[0] + slope * p[1], p[1]]))?;
            let w = Poly::var(2, 0).sub(&Poly::var(2, 1).scale(&int(i64::from(*slope))));
            q.compose(&[w, Poly::var(2, 1)])
        }
    };
    let fitted = HilbertPolynomial { polynomial, region: region.clone() };
    for (p, &v) in &table.values {
        if region.contains(p) && fitted.eval(p) != BigRational::from_integer(BigInt::from(v)) {
            return Err(Error::Unstable { point: p.clone() });
        }
    }
    Ok(fitted)
}

/// Box-growth parameters for stable-region detection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FitOptions {
    /// No sampled coordinate (in window coordinates) reaches this bound.
    pub box_cap: u32,
    /// Minimum side of the fitting-plus-validation box.
    pub min_side: u32,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions { box_cap: 40, min_side: 0 }
    }
}

impl FitOptions {
    pub fn with_min_side(&self, side: u32) -> Self {
        FitOptions { min_side: self.min_side.max(side), ..self.clone() }
    }
}

/// A validated fit and the table it was validated against.
#[derive(Clone, Debug, Serialize)]
pub struct Fit {
    pub polynomial: HilbertPolynomial,
    pub table: HilbertTable,
}

/// Candidate region offsets, tried in order.
const OFFSETS: [u32; 12] = [0, 1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48];

/// Memoizing evaluator shared by the growth loops.
struct Cache<'a> {
    source: &'a dyn HilbertSource,
    values: HashMap<Vec<u32>, u64>,
}

impl Cache<'_> {
    fn table(&mut self, points: Vec<Vec<u32>>) -> Result<HilbertTable> {
        let missing: Vec<Vec<u32>> = points.iter().filter(|p| !self.values.contains_key(*p)).cloned().collect();
        self.values.extend(tabulate(self.source, &missing)?);
        let values = points.into_iter().map(|p| {
            let v = self.values[&p];
            (p, v)
        });
        Ok(HilbertTable::from_values(self.source.arity(), values.collect()))
    }
}

fn side_for(degree_bound: u32, opts: &FitOptions) -> u32 {
    (2 * (degree_bound + 2)).max(opts.min_side)
}

/// Fits on boxes `[c, c + side)^s` for growing `c` until validation succeeds.
pub fn fit_stable(source: &dyn HilbertSource, degree_bound: u32, opts: &FitOptions) -> Result<Fit> {
    let s = source.arity();
    let side = side_for(degree_bound, opts);
    let mut cache = Cache { source, values: HashMap::new() };
    let mut last = Vec::new();
    for c in OFFSETS {
        if c + side > opts.box_cap {
            break;
        }
        let lower = vec![c; s];
        let upper = vec![c + side - 1; s];
        let table = cache.table(box_points(&lower, &upper))?;
        match fit_polynomial(&table, degree_bound, &StableRegion::Corner { corner: lower }) {
            Ok(polynomial) => return Ok(Fit { polynomial, table }),
            Err(Error::Unstable { point }) => last = point,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Inconclusive { cap: opts.box_cap, point: last })
}

/// Fits a bivariate function on cones `u ≥ slope·v + c, v ≥ c` for growing `c`.
pub fn fit_cone(source: &dyn HilbertSource, slope: u32, degree_bound: u32, opts: &FitOptions) -> Result<Fit> {
    if source.arity() != 2 {
        return Err(Error::Dimension { expected: 2, found: source.arity() });
    }
    let side = side_for(degree_bound, opts);
    let mut cache = Cache { source, values: HashMap::new() };
    let mut last = Vec::new();
    for c in OFFSETS {
        if c + side > opts.box_cap {
            break;
        }
        let points = box_points(&[c, c], &[c + side - 1, c + side - 1])
            .into_iter()
            .map(|p| vec![p[0] + slope * p[1], p[1]])
            .collect();
        let table = cache.table(points)?;
        match fit_polynomial(&table, degree_bound, &StableRegion::Cone { slope, u0: c, v0: c }) {
            Ok(polynomial) => return Ok(Fit { polynomial, table }),
            Err(Error::Unstable { point }) => last = point,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Inconclusive { cap: opts.box_cap, point: last })
}

/// Mixed multiplicities `e_α`, `|α| = r`, read from the top-degree part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedMultiplicityVector {
    pub total_degree: u32,
    pub entries: BTreeMap<Vec<u32>, i64>,
}

impl MixedMultiplicityVector {
    pub fn get(&self, alpha: &[u32]) -> i64 {
        self.entries.get(alpha).copied().unwrap_or(0)
    }

    pub fn sum(&self) -> i64 {
        self.entries.values().sum()
    }
}

impl Serialize for MixedMultiplicityVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            alpha: &'a [u32],
            value: i64,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            total_degree: u32,
            entries: Vec<Entry<'a>>,
        }
        Out {
            total_degree: self.total_degree,
            entries: self.entries.iter().map(|(a, &value)| Entry { alpha: a, value }).collect(),
        }
        .serialize(s)
    }
}

/// `e_α = α!·coeff(u^α)` for every `|α| = deg P`.
///
/// This equals the binomial-basis coefficient of the top-degree part, and in
/// the bigraded non-standard case the normalization `e_i/(i!(s−i)!)`.
pub fn extract_mixed_multiplicities(h: &HilbertPolynomial) -> Result<MixedMultiplicityVector> {
    let r = h.polynomial.degree().ok_or_else(|| Error::Precondition("the zero polynomial has no mixed multiplicities".into()))?;
    extract_at_degree(h, r)
}

/// `e_α = α!·coeff(u^α)` for every `|α| = r`, where `r` is the known degree.
///
/// Entries vanish when the fit has lower degree; a higher fitted degree is a
/// corrupted fit.
pub fn extract_at_degree(h: &HilbertPolynomial, r: u32) -> Result<MixedMultiplicityVector> {
    if let Some(deg) = h.polynomial.degree() {
        if deg > r {
            return Err(Error::FitCorruption(format!("fitted degree {deg} exceeds the known degree {r}")));
        }
    }
    let mut entries = BTreeMap::new();
    for alpha in compositions(h.arity(), r) {
        let weight: BigInt = alpha.iter().map(|&a| factorial(u64::from(a))).product();
        let v = h.polynomial.coefficient(&alpha) * BigRational::from_integer(weight);
        let e = to_i64(&v).ok_or_else(|| Error::FitCorruption(format!("e_{alpha:?} = {v} is not an integer")))?;
        entries.insert(alpha, e);
    }
    Ok(MixedMultiplicityVector { total_degree: r, entries })
}

/// `t ↦ Σ_{|u| = t} H(u)`: the Hilbert function of the total grading.
pub struct TotalGrading<'a>(pub &'a dyn HilbertSource);

impl HilbertSource for TotalGrading<'_> {
    fn arity(&self) -> usize {
        1
    }

    fn value(&self, degree: &[u32]) -> Result<u64> {
        compositions(self.0.arity(), degree[0]).iter().map(|u| self.0.value(u)).sum()
    }
}

/// `t ↦ H(t·λ)`: the Hilbert function of the `λ`-diagonal subalgebra.
pub struct Diagonal<'a> {
    pub source: &'a dyn HilbertSource,
    pub lambda: Vec<u32>,
}

impl HilbertSource for Diagonal<'_> {
    fn arity(&self) -> usize {
        1
    }

    fn value(&self, degree: &[u32]) -> Result<u64> {
        let u: Vec<u32> = self.lambda.iter().map(|l| l * degree[0]).collect();
        self.source.value(&u)
    }
}

/// Prefix sums of a source along chosen axes, with the summands memoized.
pub struct PrefixSums<'a> {
    source: &'a dyn HilbertSource,
    axes: Vec<usize>,
    memo: Mutex<HashMap<Vec<u32>, u64>>,
}

impl<'a> PrefixSums<'a> {
    pub fn new(source: &'a dyn HilbertSource, axes: &[usize]) -> Self {
        PrefixSums { source, axes: axes.to_vec(), memo: Mutex::new(HashMap::new()) }
    }

    fn inner(&self, p: &[u32]) -> Result<u64> {
        if let Some(&v) = self.memo.lock().expect("memo lock").get(p) {
            return Ok(v);
        }
        let v = self.source.value(p)?;
        self.memo.lock().expect("memo lock").insert(p.to_vec(), v);
        Ok(v)
    }
}

impl HilbertSource for PrefixSums<'_> {
    fn arity(&self) -> usize {
        self.source.arity()
    }

    fn value(&self, degree: &[u32]) -> Result<u64> {
        let mut lower = degree.to_vec();
        for &a in &self.axes {
            lower[a] = 0;
        }
        box_points(&lower, degree).iter().map(|p| self.inner(p)).sum()
    }
}

/// `deg!·(leading coefficient)` of the validated univariate fit of `source`.
pub fn univariate_multiplicity(source: &dyn HilbertSource, degree_bound: u32, opts: &FitOptions) -> Result<(i64, Fit)> {
    let fit = fit_stable(source, degree_bound, opts)?;
    Ok((fit.polynomial.normalized_leading()?, fit))
}

/// `e(R)` of the total grading of a multigraded source.
pub fn total_grading_multiplicity_of(source: &dyn HilbertSource, degree_bound: u32, opts: &FitOptions) -> Result<(i64, Fit)> {
    univariate_multiplicity(&TotalGrading(source), degree_bound, opts)
}

/// `e(R^λ)` of the diagonal subalgebra along `λ`.
pub fn diagonal_multiplicity(source: &dyn HilbertSource, lambda: &[u32], degree_bound: u32, opts: &FitOptions) -> Result<(i64, Fit)> {
    if lambda.len() != source.arity() || lambda.contains(&0) {
        return Err(Error::Precondition("λ must be strictly positive with one entry per grading axis".into()));
    }
    univariate_multiplicity(&Diagonal { source, lambda: lambda.to_vec() }, degree_bound, opts)
}

/// `n!·Σ_{|α|=n} e_α λ^α / α!`: the diagonal multiplicity predicted from mixed multiplicities.
pub fn diagonal_formula(e: &MixedMultiplicityVector, lambda: &[u32]) -> BigRational {
    let n = e.total_degree;
    let mut acc = BigRational::zero();
    for (alpha, &v) in &e.entries {
        let mut t = BigRational::from_integer(BigInt::from(v) * factorial(u64::from(n)));
        for (&a, &l) in alpha.iter().zip(lambda) {
            t = t * BigRational::from_integer(BigInt::from(l).pow(a)) / BigRational::from_integer(factorial(u64::from(a)));
        }
        acc += t;
    }
    acc
}

/// `k[x]/L` with the grading of its ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPresentation {
    relations: MonomialIdeal,
}

impl GradedPresentation {
    pub fn new(relations: MonomialIdeal) -> Result<Self> {
        if relations.is_unit() {
            return Err(Error::Precondition("relations must form a proper ideal".into()));
        }
        Ok(GradedPresentation { relations })
    }

    /// The free algebra `k[x]` with the given grading.
    pub fn free(ring: Arc<RingContext>) -> Self {
        GradedPresentation { relations: MonomialIdeal::zero(ring) }
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        self.relations.ring()
    }

    pub fn relations(&self) -> &MonomialIdeal {
        &self.relations
    }

    pub fn hilbert_function(&self, lower: &[u32], upper: &[u32]) -> Result<HilbertTable> {
        tabulate_box(self, lower, upper)
    }

    fn require_standard(&self) -> Result<()> {
        if self.ring().is_standard() {
            Ok(())
        } else {
            Err(Error::Unsupported("operation needs a standard multigrading; supply a degree bound instead".into()))
        }
    }

    /// Ideal generated by the variables of degree `e_b`.
    pub fn block_ideal(&self, b: usize) -> Result<MonomialIdeal> {
        self.require_standard()?;
        let ring = self.ring();
        let vars: Vec<usize> = (0..ring.num_vars()).filter(|&i| ring.block_of(i) == Some(b)).collect();
        MonomialIdeal::variables(ring.clone(), &vars)
    }

    /// `L : R_+^∞`, or `None` when the saturated quotient is zero.
    pub fn saturated_relations(&self) -> Result<Option<MonomialIdeal>> {
        self.require_standard()?;
        let s = self.ring().rank();
        let mut irrelevant = MonomialIdeal::unit(self.ring().clone());
        for b in 0..s {
            irrelevant = irrelevant.product(&self.block_ideal(b)?)?;
        }
        if irrelevant.is_zero() {
            return Ok(None);
        }
        let sat = self.relations.saturate(&irrelevant)?;
        Ok((!sat.is_unit()).then_some(sat))
    }

    /// `dim R/0:R_+^∞`, or `None` when that quotient is zero.
    pub fn relevant_dimension(&self) -> Result<Option<i64>> {
        match self.saturated_relations()? {
            Some(sat) => Ok(Some(sat.krull_dim()?)),
            None => Ok(None),
        }
    }

    /// Total degree of the Hilbert polynomial: relevant dimension minus `s`.
    pub fn total_degree(&self) -> Result<PolyDegree> {
        let s = self.ring().rank() as i64;
        Ok(match self.relevant_dimension()? {
            Some(r) if r >= s => PolyDegree::Finite((r - s) as u32),
            _ => PolyDegree::MinusInfinity,
        })
    }

    /// `(r_1, r_2)` for a standard bigrading; −1 marks an absent variable.
    pub fn partial_degrees(&self) -> Result<(i64, i64)> {
        self.require_standard()?;
        if self.ring().rank() != 2 {
            return Err(Error::Precondition("partial degrees need a bigrading".into()));
        }
        let Some(sat) = self.saturated_relations()? else { return Ok((-1, -1)) };
        let r1 = sat.sum(&self.block_ideal(1)?)?.krull_dim()? - 1;
        let r2 = sat.sum(&self.block_ideal(0)?)?.krull_dim()? - 1;
        Ok((r1.max(-1), r2.max(-1)))
    }

    /// Validated Hilbert polynomial, with the degree bound from the relevant dimension.
    pub fn hilbert_polynomial(&self, opts: &FitOptions) -> Result<Fit> {
        let bound = self.total_degree()?.finite().unwrap_or(0);
        fit_stable(self, bound, opts)
    }

    pub fn mixed_multiplicities(&self, opts: &FitOptions) -> Result<MixedMultiplicityVector> {
        extract_mixed_multiplicities(&self.hilbert_polynomial(opts)?.polynomial)
    }

    /// Height of the ideal generated by the degree-`e_b` variables in `R`.
    pub fn block_height(&self, b: usize) -> Result<usize> {
        self.block_ideal(b)?.height_modulo(&self.relations)
    }

    /// `e(R)` for the total grading; requires both block ideals of positive height.
    pub fn total_grading_multiplicity(&self, opts: &FitOptions) -> Result<i64> {
        self.require_standard()?;
        if self.ring().rank() != 2 {
            return Err(Error::Precondition("total grading multiplicity is defined here for bigradings".into()));
        }
        for b in 0..2 {
            let h = self.block_height(b).unwrap_or(0);
            if h == 0 {
                return Err(Error::Precondition(format!("the ideal of degree-block {} has height 0", b + 1)));
            }
        }
        let dim = self.relations.krull_dim()?;
        let bound = u32::try_from(dim - 1).unwrap_or(0);
        Ok(total_grading_multiplicity_of(self, bound, opts)?.0)
    }

    /// Length of the localization at the prime generated by `prime_vars`, if finite.
    pub fn local_length(&self, prime_vars: &[usize]) -> Option<u128> {
        let gens: Vec<Vec<u32>> =
            self.relations.generators().iter().map(|g| prime_vars.iter().map(|&i| g[i]).collect()).collect();
        crate::count::standard_count(&gens, prime_vars.len())
    }
}

impl HilbertSource for GradedPresentation {
    fn arity(&self) -> usize {
        self.ring().rank()
    }

    fn value(&self, degree: &[u32]) -> Result<u64> {
        if degree.len() != self.arity() {
            return Err(Error::Dimension { expected: self.arity(), found: degree.len() });
        }
        let target: Vec<u64> = degree.iter().map(|&d| u64::from(d)).collect();
        let mut counter = GradedCounter::new(self.ring().grading());
        let v = counter.count(self.relations.generators(), &target);
        v.to_u64().ok_or_else(|| Error::Unsupported("graded piece exceeds 64-bit counts".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn bigraded(m: usize, n: usize, rel: &str) -> GradedPresentation {
        let ring = Arc::new(RingContext::blocks(&[m, n]).unwrap());
        GradedPresentation::new(MonomialIdeal::parse(ring, rel).unwrap()).unwrap()
    }

    struct Fn1<F: Fn(u32) -> u64 + Sync>(F);
    impl<F: Fn(u32) -> u64 + Sync> HilbertSource for Fn1<F> {
        fn arity(&self) -> usize {
            1
        }
        fn value(&self, d: &[u32]) -> Result<u64> {
            Ok((self.0)(d[0]))
        }
    }

    #[test]
    fn free_bigraded_hilbert_function() {
        let p = bigraded(2, 3, "ideal()");
        let t = p.hilbert_function(&[0, 0], &[4, 4]).unwrap();
        for (d, &v) in &t.values {
            let expect = binomial(u64::from(d[0]) + 1, 1) * binomial(u64::from(d[1]) + 2, 2);
            assert_eq!(u128::from(v), expect);
        }
        assert_eq!(p.total_degree().unwrap(), PolyDegree::Finite(3));
        assert_eq!(p.partial_degrees().unwrap(), (1, 2));
        let e = p.mixed_multiplicities(&FitOptions::default()).unwrap();
        assert_eq!(e.get(&[1, 2]), 1);
        assert_eq!(e.sum(), 1);
    }

    #[test]
    fn truncated_polynomial_ring() {
        let ring = Arc::new(RingContext::standard(1));
        let p = GradedPresentation::new(MonomialIdeal::parse(ring, "x1^3").unwrap()).unwrap();
        let t = p.hilbert_function(&[0], &[5]).unwrap();
        assert_eq!(t.values.values().copied().collect::<Vec<_>>(), vec![1, 1, 1, 0, 0, 0]);
        let q = GradedPresentation::new(MonomialIdeal::parse(p.ring().clone(), "x1").unwrap()).unwrap();
        assert_eq!(q.total_degree().unwrap(), PolyDegree::MinusInfinity);
        assert!(q.hilbert_polynomial(&FitOptions::default()).unwrap().polynomial.polynomial.is_zero());
    }

    #[test]
    fn fit_product_table() {
        let p = bigraded(2, 2, "ideal()");
        let t = p.hilbert_function(&[0, 0], &[6, 6]).unwrap();
        let h = fit_polynomial(&t, 2, &StableRegion::Corner { corner: vec![0, 0] }).unwrap();
        let u = Poly::var(2, 0);
        let v = Poly::var(2, 1);
        assert_eq!(h.polynomial, u.add(&Poly::one(2)).mul(&v.add(&Poly::one(2))));
    }

    #[test]
    fn fit_samuel_function_of_staircase_ideal() {
        // Lengths ℓ(A/I^t) for I = (x², xy, y³), counted independently.
        let ring = Arc::new(RingContext::standard(2));
        let i = MonomialIdeal::parse(ring, "ideal(x1^2, x1*x2, x2^3)").unwrap();
        let lengths: Vec<u64> = (0..=8u32)
            .map(|t| {
                let p = i.power(t);
                let mut c = 0;
                for a in 0..40u32 {
                    for b in 0..40u32 {
                        if !p.contains(&[a, b]) {
                            c += 1;
                        }
                    }
                }
                c
            })
            .collect();
        assert_eq!(&lengths[1..4], &[4, 13, 27]);
        let src = Fn1(|t| lengths[t as usize]);
        let fit = fit_stable(&src, 2, &FitOptions { box_cap: 9, min_side: 0 }).unwrap();
        let expect = Poly::monomial(vec![2], ratio(5, 2)).add(&Poly::monomial(vec![1], ratio(3, 2)));
        assert_eq!(fit.polynomial.polynomial, expect);
        assert_eq!(fit.polynomial.normalized_leading().unwrap(), 5);
    }

    #[test]
    fn unstable_fits_report_the_mismatch() {
        // Zero until 5, then t: no degree-1 fit from the origin.
        let src = Fn1(|t| if t < 5 { 0 } else { u64::from(t) });
        let fit = fit_stable(&src, 1, &FitOptions::default()).unwrap();
        assert_eq!(fit.polynomial.region, StableRegion::Corner { corner: vec![6] });
        let err = fit_stable(&src, 1, &FitOptions { box_cap: 7, min_side: 0 }).unwrap_err();
        assert!(matches!(err, Error::Inconclusive { .. }));
    }

    #[test]
    fn sum_transforms() {
        let ones = HilbertTable {
            arity: 2,
            lower: vec![0, 0],
            upper: vec![2, 2],
            values: box_points(&[0, 0], &[2, 2]).into_iter().map(|p| (p, 1)).collect(),
        };
        let s = sum_transform(&ones, &[0, 1]);
        for (p, &v) in &s.values {
            assert_eq!(v, u64::from((p[0] + 1) * (p[1] + 1)));
        }
        let lin = HilbertTable {
            arity: 1,
            lower: vec![0],
            upper: vec![3],
            values: (0..4u32).map(|t| (vec![t], u64::from(t))).collect(),
        };
        assert_eq!(sum_transform(&lin, &[0]).values.values().copied().collect::<Vec<_>>(), vec![0, 1, 3, 6]);
    }

    #[test]
    fn rees_cone_fit() {
        // dim (I^v)_u for I = (x1²) in k[x1,x2]: multiples of x1^{2v} of degree u.
        struct Rees;
        impl HilbertSource for Rees {
            fn arity(&self) -> usize {
                2
            }
            fn value(&self, d: &[u32]) -> Result<u64> {
                Ok(u64::from(d[0]).saturating_sub(2 * u64::from(d[1])) + u64::from(d[0] >= 2 * d[1]))
            }
        }
        let fit = fit_cone(&Rees, 2, 1, &FitOptions::default()).unwrap();
        let expect = Poly::var(2, 0).sub(&Poly::var(2, 1).scale(&int(2))).add(&Poly::one(2));
        assert_eq!(fit.polynomial.polynomial, expect);
        let e = extract_mixed_multiplicities(&fit.polynomial).unwrap();
        assert_eq!((e.get(&[0, 1]), e.get(&[1, 0])), (-2, 1));
    }

    #[test]
    fn worked_bigraded_example() {
        // k[x1..x4, y1..y4] / (x1,y1) ∩ (x1,x2,x3) ∩ (y1,y2,y3)
        let ring = Arc::new(RingContext::blocks(&[4, 4]).unwrap());
        let parse = |s: &str| MonomialIdeal::parse(ring.clone(), s).unwrap();
        let rel = parse("ideal(x1, x5)")
            .intersect(&parse("ideal(x1, x2, x3)"))
            .unwrap()
            .intersect(&parse("ideal(x5, x6, x7)"))
            .unwrap();
        let p = GradedPresentation::new(rel).unwrap();
        assert_eq!(p.relevant_dimension().unwrap(), Some(6));
        assert_eq!(p.total_degree().unwrap(), PolyDegree::Finite(4));
        assert_eq!(p.partial_degrees().unwrap(), (3, 3));
        let e = p.mixed_multiplicities(&FitOptions::default()).unwrap();
        assert_eq!(e.get(&[1, 3]), 0);
        assert_eq!(e.get(&[3, 1]), 0);
        assert_eq!(e.get(&[2, 2]), 1);
    }

    #[test]
    fn missing_block_gives_sentinels() {
        let ring = Arc::new(RingContext::new(vec![vec![1, 0], vec![1, 0]]).unwrap());
        let p = GradedPresentation::free(ring);
        assert_eq!(p.partial_degrees().unwrap(), (-1, -1));
        assert_eq!(p.total_degree().unwrap(), PolyDegree::MinusInfinity);
        assert!(p.total_grading_multiplicity(&FitOptions::default()).is_err());
    }

    #[test]
    fn diagonal_of_free_segre() {
        let p = bigraded(2, 2, "ideal()");
        let e = p.mixed_multiplicities(&FitOptions::default()).unwrap();
        for lambda in [[1u32, 1], [2, 1], [1, 3]] {
            let (d, _) = diagonal_multiplicity(&p, &lambda, 2, &FitOptions::default()).unwrap();
            assert_eq!(BigRational::from_integer(BigInt::from(d)), diagonal_formula(&e, &lambda));
        }
        let (d, _) = diagonal_multiplicity(&p, &[1, 1], 2, &FitOptions::default()).unwrap();
        assert_eq!(d, 2);
    }
}
