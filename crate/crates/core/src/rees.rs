//! The Rees algebra `A[It]` of a monomial ideal, bigraded by `deg x_i = (1, 0)`
//! and `deg t = (0, 1)`, so `A[It]_{(u,v)} = (I^v)_u t^v`.
//!
//! Generators of `I` of degree above 1 make the grading non-standard. The
//! Hilbert function is a polynomial only on a cone `u ≥ d·v + u0, v ≥ v0`,
//! with `d` the largest generator degree, and its mixed multiplicities may be
//! negative.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::count::GradedCounter;
use crate::error::{Error, Result};
use crate::hilbert::{extract_at_degree, fit_cone, fit_stable, Diagonal, Fit, FitOptions, HilbertSource, StableRegion};
use crate::monomial::{minimalize_raw, product_raw, total_degree, ExponentVector, MonomialIdeal};
use crate::multiplicities::{default_fit_options, samuel_multiplicity_in};
use crate::poly::Poly;
use crate::rational::factorial;

fn counter(n: usize) -> GradedCounter {
    GradedCounter::new(&vec![vec![1]; n])
}

fn with_ambient(gens: &[ExponentVector], ambient: &[ExponentVector]) -> Vec<ExponentVector> {
    let mut all = gens.to_vec();
    all.extend(ambient.iter().cloned());
    minimalize_raw(all)
}

/// `H(u, v) = ℓ(((I^v + K)/K)_u)`.
pub struct ReesSource {
    n: usize,
    powers: std::sync::Mutex<Vec<Arc<Vec<ExponentVector>>>>,
    base: Vec<ExponentVector>,
    ambient: Vec<ExponentVector>,
}

impl ReesSource {
    pub fn new(i: &MonomialIdeal, ambient: &MonomialIdeal) -> Result<Self> {
        if i.ring() != ambient.ring() {
            return Err(Error::RingMismatch);
        }
        let n = i.num_vars();
        Ok(ReesSource {
            n,
            powers: std::sync::Mutex::new(vec![Arc::new(vec![vec![0; n]])]),
            base: i.generators().to_vec(),
            ambient: ambient.generators().to_vec(),
        })
    }

    fn power(&self, k: u32) -> Arc<Vec<ExponentVector>> {
        let mut cache = self.powers.lock().expect("power cache");
        while cache.len() <= k as usize {
            let next = product_raw(cache.last().expect("nonempty"), &self.base);
            cache.push(Arc::new(next));
        }
        cache[k as usize].clone()
    }
}

impl HilbertSource for ReesSource {
    fn arity(&self) -> usize {
        2
    }

    fn value(&self, degree: &[u32]) -> Result<u64> {
        let (u, v) = (u64::from(degree[0]), degree[1]);
        let mut c = counter(self.n);
        let all = c.count(&self.ambient, &[u]);
        let outside = c.count(&with_ambient(&self.power(v), &self.ambient), &[u]);
        u64::try_from(all - outside).map_err(|_| Error::Unsupported("length exceeds 64-bit counts".into()))
    }
}

/// `u ↦ ℓ((S/K)_u)`.
struct AmbientSource {
    n: usize,
    ambient: Vec<ExponentVector>,
}

impl HilbertSource for AmbientSource {
    fn arity(&self) -> usize {
        1
    }

    fn value(&self, degree: &[u32]) -> Result<u64> {
        let v = counter(self.n).count(&self.ambient, &[u64::from(degree[0])]);
        u64::try_from(v).map_err(|_| Error::Unsupported("length exceeds 64-bit counts".into()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReesReport {
    /// Largest generator degree, the slope of the cone.
    pub slope: u32,
    /// `s = dim A/0:I^∞ − 1`.
    pub s: u32,
    /// `e_0(A[It]), ..., e_s(A[It])`, with `e_i = i!(s−i)!·[u^i v^{s−i}]P`.
    pub mixed: Vec<i64>,
    /// `max{i : e_i ≠ 0}`.
    pub rho: Option<usize>,
    /// `e(A/0:I^∞)`, computed independently of the fit.
    pub saturated_multiplicity: i64,
    pub fit: Fit,
}

impl ReesReport {
    /// The top coefficient equals `e(A/0:I^∞)` and the last nonzero one is positive.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.mixed[self.s as usize] != self.saturated_multiplicity {
            out.push(format!("e_s = {} but e(A/0:I^∞) = {}", self.mixed[self.s as usize], self.saturated_multiplicity));
        }
        if let Some(r) = self.rho {
            if self.mixed[r] <= 0 {
                out.push(format!("e_ρ = {} is not positive", self.mixed[r]));
            }
        }
        out
    }

    /// `(u0, v0)` of the validated cone.
    pub fn cone_offsets(&self) -> (u32, u32) {
        match self.fit.polynomial.region {
            StableRegion::Cone { u0, v0, .. } => (u0, v0),
            StableRegion::Corner { .. } => unreachable!("Rees fits live on cones"),
        }
    }
}

pub fn rees_mixed_multiplicities_in(i: &MonomialIdeal, ambient: &MonomialIdeal, opts: &FitOptions) -> Result<ReesReport> {
    if i.is_zero() || i.is_unit() {
        return Err(Error::Degenerate("Rees algebra multiplicities"));
    }
    let saturated = ambient.saturate(i)?;
    let s = u32::try_from(saturated.krull_dim()? - 1)
        .map_err(|_| Error::Precondition(format!("{i} is nilpotent modulo the ambient ideal")))?;
    let slope = u32::try_from(i.max_generator_degree()).map_err(|_| Error::Unsupported("generator degree".into()))?;
    let source = ReesSource::new(i, ambient)?;
    let fit = fit_cone(&source, slope, s, opts)?;
    let top = extract_at_degree(&fit.polynomial, s)?;
    let mixed: Vec<i64> = (0..=s).map(|k| top.get(&[k, s - k])).collect();
    let m = MonomialIdeal::maximal(i.ring().clone());
    let saturated_multiplicity = samuel_multiplicity_in(&m, &saturated, &default_fit_options(1))?.0;
    let rho = mixed.iter().rposition(|&e| e != 0);
    Ok(ReesReport { slope, s, mixed, rho, saturated_multiplicity, fit })
}

pub fn rees_mixed_multiplicities(i: &MonomialIdeal, opts: &FitOptions) -> Result<ReesReport> {
    rees_mixed_multiplicities_in(i, &MonomialIdeal::zero(i.ring().clone()), opts)
}

/// `P_{A/I^v}(u) = P_A(u) − P_{A[It]}(u, v)`, valid for `u ≥ d·v + u0`.
pub fn quotient_hilbert_polynomial(report: &ReesReport, ambient: &MonomialIdeal, v: u32, opts: &FitOptions) -> Result<Poly> {
    let (_, v0) = report.cone_offsets();
    if v < v0 {
        return Err(Error::Precondition(format!("v = {v} lies below the validated cone (v0 = {v0})")));
    }
    let n = ambient.num_vars();
    let bound = u32::try_from(n - 1).unwrap_or(0);
    let base = fit_stable(&AmbientSource { n, ambient: ambient.generators().to_vec() }, bound, opts)?;
    let at_v = report
        .fit
        .polynomial
        .polynomial
        .compose(&[Poly::var(1, 0), Poly::constant(1, BigRational::from_integer(BigInt::from(v)))]);
    Ok(base.polynomial.polynomial.sub(&at_v))
}

/// `ℓ(((I^e)_c)^t)`: monomials in the `t`-th power of the degree-`c` part of `I^e`.
pub fn embedded_subalgebra_count(i: &MonomialIdeal, c: u32, e: u32, t: u32) -> u64 {
    let power = i.power(e);
    let piece: Vec<ExponentVector> = crate::hilbert::box_points(&vec![0; i.num_vars()], &vec![c; i.num_vars()])
        .into_iter()
        .filter(|w| total_degree(w) == u64::from(c) && power.contains(w))
        .collect();
    let mut acc: Vec<ExponentVector> = vec![vec![0; i.num_vars()]];
    for _ in 0..t {
        let mut next: Vec<ExponentVector> = acc.iter().flat_map(|a| piece.iter().map(move |p| a.iter().zip(p).map(|(x, y)| x + y).collect())).collect();
        next.sort_unstable();
        next.dedup();
        acc = next;
    }
    debug_assert!(acc.iter().all(|w| total_degree(w) == u64::from(c) * u64::from(t)));
    acc.len() as u64
}

struct EmbeddedSource<'a> {
    ideal: &'a MonomialIdeal,
    c: u32,
    e: u32,
}

impl HilbertSource for EmbeddedSource<'_> {
    fn arity(&self) -> usize {
        1
    }

    fn value(&self, degree: &[u32]) -> Result<u64> {
        Ok(embedded_subalgebra_count(self.ideal, self.c, self.e, degree[0]))
    }
}

/// Degree of the image of the embedding by `(I^e)_c`, three ways: the closed
/// form in `e_i(A[It])`, the `(c, e)`-diagonal of the fitted Rees polynomial,
/// and a fit of the enumerated subalgebra `k[(I^e)_c]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddedDegree {
    pub closed_form: i64,
    pub diagonal: i64,
    pub enumerated: Option<i64>,
}

pub fn embedded_degree(i: &MonomialIdeal, report: &ReesReport, c: u32, e: u32, enumerate: bool) -> Result<EmbeddedDegree> {
    if e == 0 || u64::from(c) <= u64::from(report.slope) * u64::from(e) {
        return Err(Error::Precondition(format!("need e ≥ 1 and c > d·e, got (c, e) = ({c}, {e})")));
    }
    let closed_form = crate::closed_forms::embedded_degree(&report.mixed, c, e)?;
    if closed_form <= 0 {
        return Err(Error::Invariant(format!("embedded degree {closed_form} is not positive")));
    }
    let s = report.s;
    let top = report.fit.polynomial.polynomial.homogeneous_part(s);
    let lead = top.eval_int(&[i64::from(c), i64::from(e)]) * BigRational::from_integer(factorial(u64::from(s)));
    let diagonal = crate::rational::to_i64(&lead).ok_or_else(|| Error::FitCorruption(format!("diagonal degree {lead}")))?;
    let enumerated = if enumerate {
        let source = EmbeddedSource { ideal: i, c, e };
        let fit = fit_stable(&source, s, &FitOptions::default().with_min_side(0))?;
        let p = &fit.polynomial.polynomial;
        let v = p.coefficient(&[s]) * BigRational::from_integer(factorial(u64::from(s)));
        Some(crate::rational::to_i64(&v).ok_or_else(|| Error::FitCorruption(format!("subalgebra degree {v}")))?)
    } else {
        None
    };
    Ok(EmbeddedDegree { closed_form, diagonal, enumerated })
}

/// `t ↦ H(ct, et)` of `A[It]`.
pub fn rees_diagonal<'a>(source: &'a ReesSource, c: u32, e: u32) -> Diagonal<'a> {
    Diagonal { source, lambda: vec![c, e] }
}

/// `k[X_1..X_m, Y_1..Y_n]` with `deg X = (1, 0)` and `deg Y_j = (d_j, 1)`.
pub struct FreeBigradedSource {
    pub m: usize,
    pub degrees: Vec<u32>,
}

impl HilbertSource for FreeBigradedSource {
    fn arity(&self) -> usize {
        2
    }

    fn value(&self, degree: &[u32]) -> Result<u64> {
        let (u, v) = (u64::from(degree[0]), degree[1]);
        let mut acc: u128 = 0;
        for beta in crate::hilbert::compositions(self.degrees.len(), v) {
            let used: u64 = beta.iter().zip(&self.degrees).map(|(&b, &d)| u64::from(b) * u64::from(d)).sum();
            if used <= u {
                acc += crate::count::binomial(u - used + self.m as u64 - 1, self.m as u64 - 1);
            }
        }
        u64::try_from(acc).map_err(|_| Error::Unsupported("length exceeds 64-bit counts".into()))
    }
}

/// `e_i`, `i = 0..m+n−2`, of the free bigraded ring, read from a cone fit.
pub fn free_bigraded_mixed(m: usize, degrees: &[u32], opts: &FitOptions) -> Result<Vec<i64>> {
    if m == 0 || degrees.is_empty() {
        return Err(Error::Precondition("both variable groups must be nonempty".into()));
    }
    let s = (m + degrees.len() - 2) as u32;
    let slope = degrees.iter().copied().max().unwrap_or(0);
    let fit = fit_cone(&FreeBigradedSource { m, degrees: degrees.to_vec() }, slope, s, opts)?;
    let top = extract_at_degree(&fit.polynomial, s)?;
    Ok((0..=s).map(|k| top.get(&[k, s - k])).collect())
}
