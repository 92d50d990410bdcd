//! Monomials and monomial ideals over a polynomial ring `k[x1..xn]` carrying an
//! `N^s` grading.
//!
//! An ideal is stored by its minimal generating set, sorted lexicographically,
//! so structural equality is ideal equality. The zero ideal has no
//! generators; the unit ideal is generated by the zero exponent vector.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector `(a_1, ..., a_n)` of the monomial `x1^a_1 * ... * xn^a_n`.
pub type ExponentVector = Vec<u32>;

/// Largest ring for which the exhaustive variable-subset searches run.
pub const MAX_SUBSET_SEARCH_VARS: usize = 24;

/// Polynomial ring with an `N^s` degree vector attached to each variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingContext {
    grading: Vec<Vec<u32>>,
}

impl RingContext {
    /// Builds a ring from one degree vector per variable.
    pub fn new(grading: Vec<Vec<u32>>) -> Result<Self> {
        let s = match grading.first() {
            Some(d) => d.len(),
            None => return Err(Error::Grading("a ring needs at least one variable".into())),
        };
        if s == 0 {
            return Err(Error::Grading("grading rank must be at least 1".into()));
        }
        for (i, d) in grading.iter().enumerate() {
            if d.len() != s {
                return Err(Error::Dimension { expected: s, found: d.len() });
            }
            if d.iter().all(|&c| c == 0) {
                return Err(Error::Grading(format!("variable x{} has degree zero", i + 1)));
            }
        }
        Ok(RingContext { grading })
    }

    /// `k[x1..xn]` with every variable in degree 1.
    pub fn standard(n: usize) -> Self {
        assert!(n > 0, "a ring needs at least one variable");
        RingContext { grading: vec![vec![1]; n] }
    }

    /// Standard multigrading: block `b` holds `sizes[b]` variables of degree `e_b`.
    pub fn blocks(sizes: &[usize]) -> Result<Self> {
        let s = sizes.len();
        let mut grading = Vec::new();
        for (b, &k) in sizes.iter().enumerate() {
            for _ in 0..k {
                let mut d = vec![0; s];
                d[b] = 1;
                grading.push(d);
            }
        }
        RingContext::new(grading)
    }

    pub fn num_vars(&self) -> usize {
        self.grading.len()
    }

    /// Grading rank `s`.
    pub fn rank(&self) -> usize {
        self.grading[0].len()
    }

    pub fn grading(&self) -> &[Vec<u32>] {
        &self.grading
    }

    pub fn degree_of_var(&self, i: usize) -> &[u32] {
        &self.grading[i]
    }

    /// True when every variable has a unit vector as its degree.
    pub fn is_standard(&self) -> bool {
        self.grading.iter().all(|d| unit_index(d).is_some())
    }

    /// Block index of variable `i` in a standard multigrading.
    pub fn block_of(&self, i: usize) -> Option<usize> {
        unit_index(&self.grading[i])
    }

    /// Multidegree of a monomial.
    pub fn degree(&self, a: &[u32]) -> Vec<u64> {
        let mut out = vec![0u64; self.rank()];
        for (e, d) in a.iter().zip(&self.grading) {
            for (o, c) in out.iter_mut().zip(d) {
                *o += u64::from(*e) * u64::from(*c);
            }
        }
        out
    }
}

fn unit_index(d: &[u32]) -> Option<usize> {
    let mut idx = None;
    for (j, &c) in d.iter().enumerate() {
        match c {
            0 => {}
            1 if idx.is_none() => idx = Some(j),
            _ => return None,
        }
    }
    idx
}

/// True iff `a` divides `b`.
#[inline]
pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn total_degree(a: &[u32]) -> u64 {
    a.iter().map(|&e| u64::from(e)).sum()
}

/// Minimal elements of a finite set of exponent vectors, sorted lexicographically.
pub fn minimalize_raw(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_unstable_by(|a, b| total_degree(a).cmp(&total_degree(b)).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    // kept[..lower] holds every kept generator of strictly smaller degree.
    let mut lower = 0;
    let mut current = None;
    for g in gens {
        let d = total_degree(&g);
        if current != Some(d) {
            current = Some(d);
            lower = kept.len();
        }
        if !kept[..lower].iter().any(|h| divides(h, &g)) {
            kept.push(g);
        }
    }
    kept.sort_unstable();
    kept
}

/// Pairwise sums of two generator lists, minimalized.
pub fn product_raw(a: &[ExponentVector], b: &[ExponentVector]) -> Vec<ExponentVector> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for g in a {
        for h in b {
            out.push(g.iter().zip(h).map(|(x, y)| x + y).collect());
        }
    }
    minimalize_raw(out)
}

/// A monomial ideal, stored by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Arc<RingContext>,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Minimalizes `gens` into an ideal of `ring`.
    pub fn new(ring: Arc<RingContext>, gens: Vec<ExponentVector>) -> Result<Self> {
        let n = ring.num_vars();
        if let Some(g) = gens.iter().find(|g| g.len() != n) {
            return Err(Error::Dimension { expected: n, found: g.len() });
        }
        Ok(MonomialIdeal { gens: minimalize_raw(gens), ring })
    }

    pub fn zero(ring: Arc<RingContext>) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Arc<RingContext>) -> Self {
        let n = ring.num_vars();
        MonomialIdeal { ring, gens: vec![vec![0; n]] }
    }

    /// The ideal `m = (x1, ..., xn)`.
    pub fn maximal(ring: Arc<RingContext>) -> Self {
        let n = ring.num_vars();
        let gens = (0..n).map(|i| unit_vector(n, i, 1)).collect();
        MonomialIdeal::new(ring, gens).expect("lengths match")
    }

    /// The ideal generated by the given variables.
    pub fn variables(ring: Arc<RingContext>, vars: &[usize]) -> Result<Self> {
        let n = ring.num_vars();
        let gens = vars
            .iter()
            .map(|&i| {
                if i < n {
                    Ok(unit_vector(n, i, 1))
                } else {
                    Err(Error::Dimension { expected: n, found: i + 1 })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(ring, gens)
    }

    /// Parses `ideal(x1^2, x1*x2)` (or a single monomial) against `ring`.
    pub fn parse(ring: Arc<RingContext>, text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let body = match compact.strip_prefix("ideal(") {
            Some(rest) => rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("missing ')' in {text:?}")))?,
            None => compact.as_str(),
        };
        let n = ring.num_vars();
        let gens = if body.is_empty() {
            Vec::new()
        } else {
            body.split(',').map(|m| parse_monomial(m, n)).collect::<Result<Vec<_>>>()?
        };
        MonomialIdeal::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn num_vars(&self) -> usize {
        self.ring.num_vars()
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].iter().all(|&e| e == 0)
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn with_gens(&self, gens: Vec<ExponentVector>) -> Self {
        MonomialIdeal { ring: self.ring.clone(), gens: minimalize_raw(gens) }
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(MonomialIdeal { ring: self.ring.clone(), gens: product_raw(&self.gens, &other.gens) })
    }

    pub fn power(&self, k: u32) -> Self {
        let mut acc = MonomialIdeal::unit(self.ring.clone());
        for _ in 0..k {
            acc.gens = product_raw(&acc.gens, &self.gens);
        }
        acc
    }

    /// `I + J`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(self.with_gens(gens))
    }

    /// `I : x^a`.
    pub fn colon_monomial(&self, a: &[u32]) -> Result<Self> {
        if a.len() != self.num_vars() {
            return Err(Error::Dimension { expected: self.num_vars(), found: a.len() });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.iter().zip(a).map(|(x, y)| x.saturating_sub(*y)).collect())
            .collect();
        Ok(self.with_gens(gens))
    }

    /// `I : J`, the intersection of `I : g` over the generators `g` of `J`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        if other.is_zero() {
            return Err(Error::ZeroColon);
        }
        let mut acc = MonomialIdeal::unit(self.ring.clone());
        for g in &other.gens {
            acc = acc.intersect(&self.colon_monomial(g)?)?;
        }
        Ok(acc)
    }

    /// `I : J^∞`.
    pub fn saturate(&self, other: &Self) -> Result<Self> {
        let mut cur = self.clone();
        loop {
            let next = cur.colon(other)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.iter().zip(h).map(|(x, y)| *x.max(y)).collect());
            }
        }
        Ok(self.with_gens(gens))
    }

    /// True iff some generator divides `m`.
    pub fn contains(&self, m: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g, m))
    }

    /// True iff every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Self) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    fn support_masks(&self) -> Vec<u64> {
        self.gens
            .iter()
            .map(|g| g.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |m, (i, _)| m | (1 << i)))
            .collect()
    }

    fn check_search_size(&self) -> Result<()> {
        if self.num_vars() > MAX_SUBSET_SEARCH_VARS {
            return Err(Error::Unsupported(format!(
                "subset search limited to {MAX_SUBSET_SEARCH_VARS} variables"
            )));
        }
        Ok(())
    }

    /// Dimension of `k[x]/I`: the largest variable set containing no generator
    /// support. The unit ideal gives −1.
    pub fn krull_dim(&self) -> Result<i64> {
        self.check_search_size()?;
        let n = self.num_vars();
        let supports = self.support_masks();
        let mut best = -1i64;
        for s in 0u64..(1u64 << n) {
            let size = i64::from(s.count_ones());
            if size > best && supports.iter().all(|&g| g & !s != 0) {
                best = size;
            }
        }
        Ok(best)
    }

    /// Smallest variable set meeting the support of every generator.
    pub fn height(&self) -> Result<usize> {
        if self.is_zero() || self.is_unit() {
            return Err(Error::Degenerate("height"));
        }
        self.check_search_size()?;
        let supports = self.support_masks();
        let n = self.num_vars();
        (0u64..(1u64 << n))
            .filter(|c| supports.iter().all(|&g| g & c != 0))
            .map(|c| c.count_ones() as usize)
            .min()
            .ok_or(Error::Degenerate("height"))
    }

    /// Minimal primes, each given as the sorted list of its variables.
    pub fn minimal_primes(&self) -> Result<Vec<Vec<usize>>> {
        self.check_search_size()?;
        if self.is_unit() {
            return Ok(Vec::new());
        }
        let supports = self.support_masks();
        let n = self.num_vars();
        let covers = |c: u64| supports.iter().all(|&g| g & c != 0);
        let mut out = Vec::new();
        for c in 0u64..(1u64 << n) {
            if covers(c) && (0..n).all(|i| c & (1 << i) == 0 || !covers(c & !(1 << i))) {
                out.push((0..n).filter(|i| c & (1 << i) != 0).collect());
            }
        }
        Ok(out)
    }

    /// Height of `(self + ambient)/ambient` in `k[x]/ambient`: the least
    /// `|p| − min{|q| : q ⊆ p}` over minimal primes `p` of `self + ambient` and
    /// minimal primes `q` of `ambient`.
    pub fn height_modulo(&self, ambient: &Self) -> Result<usize> {
        let total = self.sum(ambient)?;
        if total.is_unit() || self.is_zero() {
            return Err(Error::Degenerate("height"));
        }
        let base = ambient.minimal_primes()?;
        total
            .minimal_primes()?
            .iter()
            .map(|p| {
                let below = base.iter().filter(|q| q.iter().all(|v| p.contains(v))).map(Vec::len).min();
                p.len() - below.expect("every prime over the ambient ideal contains one of its minimal primes")
            })
            .min()
            .ok_or(Error::Degenerate("height"))
    }

    /// Replaces every generator by its support.
    pub fn radical(&self) -> Self {
        self.with_gens(self.gens.iter().map(|g| g.iter().map(|&e| e.min(1)).collect()).collect())
    }

    /// True iff every variable occurs as a pure power among the generators.
    pub fn is_primary_to_m(&self) -> bool {
        !self.is_unit() && self.pure_power_exponents().is_some()
    }

    /// `c_i` with `x_i^{c_i}` a generator, when every variable has one.
    pub fn pure_power_exponents(&self) -> Option<Vec<u32>> {
        let n = self.num_vars();
        let mut out = vec![None; n];
        for g in &self.gens {
            let mut nz = g.iter().enumerate().filter(|(_, &e)| e > 0);
            if let (Some((i, &e)), None) = (nz.next(), nz.next()) {
                out[i] = Some(e);
            }
        }
        out.into_iter().collect()
    }

    /// Least total degree of a generator: the largest `k` with `I ⊆ m^k`.
    pub fn order(&self) -> Result<u64> {
        if self.is_zero() || self.is_unit() {
            return Err(Error::Degenerate("order"));
        }
        Ok(self.gens.iter().map(|g| total_degree(g)).min().expect("nonzero"))
    }

    /// Largest total degree of a generator.
    pub fn max_generator_degree(&self) -> u64 {
        self.gens.iter().map(|g| total_degree(g)).max().unwrap_or(0)
    }

    /// Returns the same generators in another ring with the same variable count.
    pub fn in_ring(&self, ring: Arc<RingContext>) -> Result<Self> {
        if ring.num_vars() != self.num_vars() {
            return Err(Error::Dimension { expected: ring.num_vars(), found: self.num_vars() });
        }
        Ok(MonomialIdeal { ring, gens: self.gens.clone() })
    }
}

pub(crate) fn unit_vector(n: usize, i: usize, e: u32) -> ExponentVector {
    let mut v = vec![0; n];
    v[i] = e;
    v
}

/// Parses `x1^2*x3` or `1` into an exponent vector of length `n`.
pub fn parse_monomial(text: &str, n: usize) -> Result<ExponentVector> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut a = vec![0u32; n];
    if t == "1" {
        return Ok(a);
    }
    if t.is_empty() {
        return Err(Error::Parse("empty monomial".into()));
    }
    for factor in t.split('*') {
        let rest = factor
            .strip_prefix('x')
            .ok_or_else(|| Error::Parse(format!("expected a variable x<i>, found {factor:?}")))?;
        let (idx, exp) = match rest.split_once('^') {
            Some((i, e)) => (i, e),
            None => (rest, "1"),
        };
        let i: usize = idx.parse().map_err(|_| Error::Parse(format!("bad variable index in {factor:?}")))?;
        let e: u32 = exp.parse().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
        if i == 0 || i > n {
            return Err(Error::Parse(format!("variable x{i} outside x1..x{n}")));
        }
        a[i - 1] += e;
    }
    Ok(a)
}

/// Formats an exponent vector as `x1^2*x3`.
pub struct MonomialDisplay<'a>(pub &'a [u32]);

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ideal(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", MonomialDisplay(g))?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r2() -> Arc<RingContext> {
        Arc::new(RingContext::standard(2))
    }

    fn id(ring: &Arc<RingContext>, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(ring.clone(), s).unwrap()
    }

    /// Membership by brute force: does some listed vector divide `m`?
    fn brute_contains(gens: &[Vec<u32>], m: &[u32]) -> bool {
        gens.iter().any(|g| g.iter().zip(m).all(|(a, b)| a <= b))
    }

    /// Compares an ideal with a predicate on every point of a box.
    fn agrees_on_box(ideal: &MonomialIdeal, side: u32, pred: impl Fn(&[u32]) -> bool) -> bool {
        (0..side).all(|a| (0..side).all(|b| ideal.contains(&[a, b]) == pred(&[a, b])))
    }

    #[test]
    fn minimalize_examples() {
        let r = r2();
        let i = MonomialIdeal::new(r.clone(), vec![vec![2, 0], vec![3, 0], vec![1, 1]]).unwrap();
        assert_eq!(i.generators(), &[vec![1, 1], vec![2, 0]]);
        assert!(MonomialIdeal::new(r.clone(), vec![]).unwrap().is_zero());
        assert!(MonomialIdeal::new(r.clone(), vec![vec![0, 0], vec![1, 2]]).unwrap().is_unit());
        assert!(MonomialIdeal::new(r, vec![vec![1, 2, 3]]).is_err());
    }

    #[test]
    fn products_and_powers() {
        let r = r2();
        assert_eq!(id(&r, "x1").product(&id(&r, "x2")).unwrap(), id(&r, "ideal(x1*x2)"));
        assert_eq!(id(&r, "ideal(x1,x2)").power(2), id(&r, "ideal(x1^2,x1*x2,x2^2)"));
        assert!(id(&r, "ideal(x1,x2)").power(0).is_unit());
        assert_eq!(id(&r, "x1").power(3), id(&r, "x1^3"));
        // Oracle: every pairwise sum, then minimal elements by divisibility.
        let i = id(&r, "ideal(x1^2, x1*x2, x2^3)");
        let m = id(&r, "ideal(x1, x2)");
        let sums: Vec<Vec<u32>> = i
            .generators()
            .iter()
            .flat_map(|g| m.generators().iter().map(move |h| vec![g[0] + h[0], g[1] + h[1]]))
            .collect();
        let mut oracle: Vec<Vec<u32>> = sums
            .iter()
            .filter(|a| !sums.iter().any(|b| b != *a && brute_contains(std::slice::from_ref(b), a)))
            .cloned()
            .collect();
        oracle.sort();
        oracle.dedup();
        assert_eq!(oracle, vec![vec![0, 4], vec![1, 2], vec![2, 1], vec![3, 0]]);
        assert_eq!(i.product(&m).unwrap().generators(), oracle.as_slice());
        assert_eq!(i.power(2), id(&r, "ideal(x1^4, x1^3*x2, x1^2*x2^2, x1*x2^4, x2^6)"));
    }

    #[test]
    fn colon_against_membership_oracle() {
        let r = r2();
        let i = id(&r, "ideal(x1^2, x1*x2)");
        let c = i.colon(&id(&r, "x1")).unwrap();
        assert!(agrees_on_box(&c, 4, |m| i.contains(&[m[0] + 1, m[1]])));
        assert_eq!(c, id(&r, "ideal(x1, x2)"));
        assert!(id(&r, "x1").colon(&id(&r, "x1")).unwrap().is_unit());
        let j = id(&r, "ideal(x1^2, x2^2)");
        let c = j.colon(&id(&r, "ideal(x1,x2)")).unwrap();
        assert!(agrees_on_box(&c, 5, |m| j.contains(&[m[0] + 1, m[1]]) && j.contains(&[m[0], m[1] + 1])));
        assert_eq!(c, id(&r, "ideal(x1^2, x1*x2, x2^2)"));
        assert_eq!(i.colon(&MonomialIdeal::zero(r)), Err(Error::ZeroColon));
    }

    #[test]
    fn saturation_examples() {
        let r = r2();
        let i = id(&r, "ideal(x1^2, x1*x2)");
        let sat = i.saturate(&id(&r, "ideal(x1,x2)")).unwrap();
        assert_eq!(sat, id(&r, "x1"));
        assert_eq!(sat.colon(&id(&r, "ideal(x1,x2)")).unwrap(), sat);
        assert!(i.saturate(&id(&r, "x1")).unwrap().is_unit());
        assert_eq!(i.saturate(&MonomialIdeal::unit(r)).unwrap(), i);
    }

    #[test]
    fn intersections() {
        let r = r2();
        assert_eq!(id(&r, "x1").intersect(&id(&r, "x2")).unwrap(), id(&r, "x1*x2"));
        assert_eq!(id(&r, "ideal(x1,x2)").intersect(&id(&r, "x1")).unwrap(), id(&r, "x1"));
        let a = id(&r, "ideal(x1^2, x2)");
        let b = id(&r, "ideal(x1, x2^2)");
        let c = a.intersect(&b).unwrap();
        assert!(agrees_on_box(&c, 5, |m| a.contains(m) && b.contains(m)));
        assert_eq!(c, id(&r, "ideal(x1^2, x1*x2, x2^2)"));
    }

    #[test]
    fn membership() {
        let r = r2();
        let i = id(&r, "ideal(x1^2, x1*x2)");
        assert!(i.contains(&[3, 0]));
        assert!(!i.contains(&[0, 5]));
        assert!(!MonomialIdeal::zero(r).contains(&[0, 0]));
    }

    #[test]
    fn dimension_height_order() {
        let r = r2();
        assert_eq!(id(&r, "x1*x2").krull_dim().unwrap(), 1);
        assert_eq!(id(&r, "ideal(x1,x2)").krull_dim().unwrap(), 0);
        assert_eq!(MonomialIdeal::zero(r.clone()).krull_dim().unwrap(), 2);
        assert_eq!(MonomialIdeal::unit(r.clone()).krull_dim().unwrap(), -1);
        assert_eq!(id(&r, "x1*x2").height().unwrap(), 1);
        assert_eq!(id(&r, "ideal(x1^2, x1*x2, x2^3)").order().unwrap(), 2);
        assert!(id(&r, "ideal(x1^2, x2^3)").is_primary_to_m());
        assert!(!id(&r, "ideal(x1^2, x1*x2)").is_primary_to_m());
        assert!(MonomialIdeal::zero(r.clone()).height().is_err());
        assert!(MonomialIdeal::unit(r).order().is_err());
    }

    #[test]
    fn minimal_primes_of_mixed_ideal() {
        let r = Arc::new(RingContext::standard(4));
        // (x1) ∩ (x2, x3)
        let k = id(&r, "ideal(x1*x2, x1*x3)");
        assert_eq!(k.minimal_primes().unwrap(), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn text_round_trip() {
        let r = Arc::new(RingContext::standard(3));
        let i = id(&r, " ideal( x1^2 , x1 * x2, x3 ) ");
        assert_eq!(i.to_string(), "ideal(x3, x1*x2, x1^2)");
        assert_eq!(id(&r, &i.to_string()), i);
        assert_eq!(MonomialIdeal::unit(r.clone()).to_string(), "ideal(1)");
        assert!(MonomialIdeal::parse(r.clone(), "ideal(x4)").is_err());
        assert!(MonomialIdeal::parse(r, "ideal(y1)").is_err());
    }

    #[test]
    fn grading_validation() {
        assert!(RingContext::new(vec![vec![1, 0], vec![0, 0]]).is_err());
        let r = RingContext::blocks(&[2, 1]).unwrap();
        assert!(r.is_standard());
        assert_eq!(r.block_of(2), Some(1));
        let ns = RingContext::new(vec![vec![1, 0], vec![2, 1]]).unwrap();
        assert!(!ns.is_standard());
        assert_eq!(ns.degree(&[1, 2]), vec![5, 2]);
    }
}
