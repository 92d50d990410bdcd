//! Multivariate polynomials with exact rational coefficients in the power basis.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{factorial, int, Exact};

/// Sparse polynomial in `arity` variables; no stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl Poly {
    pub fn zero(arity: usize) -> Self {
        Poly { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        let mut p = Poly::zero(arity);
        p.add_term(vec![0; arity], c);
        p
    }

    pub fn one(arity: usize) -> Self {
        Poly::constant(arity, BigRational::one())
    }

    /// The variable `x_i`.
    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Poly::monomial(e, BigRational::one())
    }

    pub fn monomial(exponent: Vec<u32>, c: BigRational) -> Self {
        let mut p = Poly::zero(exponent.len());
        p.add_term(exponent, c);
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: &[u32]) -> BigRational {
        self.terms.get(exponent).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, exponent: Vec<u32>, c: BigRational) {
        debug_assert_eq!(exponent.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Total degree; `None` encodes the degree −∞ of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree in variable `i`; `None` for the zero polynomial.
    pub fn partial_degree(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    /// Terms of total degree exactly `k`.
    pub fn homogeneous_part(&self, k: u32) -> Poly {
        Poly {
            arity: self.arity,
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == k).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        let mut out = Poly::zero(self.arity);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, v) in &other.terms {
            out.add_term(e.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.arity);
        for (e, v) in &self.terms {
            for (f, w) in &other.terms {
                out.add_term(e.iter().zip(f).map(|(a, b)| a + b).collect(), v * w);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(self.arity), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    t *= xi;
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_int(&self, x: &[i64]) -> BigRational {
        let xs: Vec<BigRational> = x.iter().map(|&v| int(v)).collect();
        self.eval(&xs)
    }

    /// Substitutes `images[i]` for `x_i`; all images share one arity.
    pub fn compose(&self, images: &[Poly]) -> Poly {
        let arity = images.first().map(Poly::arity).unwrap_or(0);
        let mut out = Poly::zero(arity);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(arity, c.clone());
            for (img, &k) in images.iter().zip(e) {
                t = t.mul(&img.pow(k));
            }
            out = out.add(&t);
        }
        out
    }

    /// `C(x_i − shift, k)` as a polynomial.
    pub fn binomial_in(arity: usize, i: usize, shift: i64, k: u32) -> Poly {
        let x = Poly::var(arity, i);
        let mut acc = Poly::one(arity);
        for j in 0..k {
            let factor = x.sub(&Poly::constant(arity, int(shift + i64::from(j))));
            acc = acc.mul(&factor);
        }
        acc.scale(&BigRational::new(BigInt::one(), factorial(u64::from(k))))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest total degree first, then reverse lexicographic.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        let names: Vec<String> = match self.arity {
            1 => vec!["t".into()],
            2 => vec!["u".into(), "v".into()],
            n => (0..n).map(|i| format!("u{i}")).collect(),
        };
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let is_const = e.iter().all(|&x| x == 0);
            if !a.is_one() || is_const {
                if a.is_integer() {
                    write!(f, "{a}")?;
                } else {
                    write!(f, "({a})")?;
                }
            }
            let mut first = a.is_one() && !is_const;
            for (name, &p) in names.iter().zip(e) {
                if p == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                match p {
                    1 => write!(f, "{name}")?,
                    _ => write!(f, "{name}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

/// JSON form: arity plus a list of `{exponent, coefficient}` terms.
#[derive(Serialize, Deserialize)]
struct PolyJson {
    arity: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponent: Vec<u32>,
    coefficient: Exact,
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| TermJson { exponent: e.clone(), coefficient: Exact(c.clone()) }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        let mut p = Poly::zero(j.arity);
        for t in j.terms {
            if t.exponent.len() != j.arity {
                return Err(serde::de::Error::custom("term arity mismatch"));
            }
            p.add_term(t.exponent, t.coefficient.0);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn arithmetic_and_degree() {
        let u = Poly::var(2, 0);
        let v = Poly::var(2, 1);
        let p = u.add(&Poly::one(2)).mul(&v.add(&Poly::one(2)));
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval_int(&[2, 3]), int(12));
        assert_eq!(p.to_string(), "u*v + u + v + 1");
        assert_eq!(Poly::zero(2).degree(), None);
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn binomial_polynomials() {
        let b = Poly::binomial_in(1, 0, 1, 2);
        // C(t − 1, 2) at t = 5 is C(4, 2) = 6.
        assert_eq!(b.eval_int(&[5]), int(6));
        assert_eq!(b.coefficient(&[2]), ratio(1, 2));
    }

    #[test]
    fn composition() {
        // Q(w, v) = w + v with w = u − 2v gives u − v.
        let q = Poly::var(2, 0).add(&Poly::var(2, 1));
        let w = Poly::var(2, 0).sub(&Poly::var(2, 1).scale(&int(2)));
        let p = q.compose(&[w, Poly::var(2, 1)]);
        assert_eq!(p, Poly::var(2, 0).sub(&Poly::var(2, 1)));
    }

    #[test]
    fn json_round_trip() {
        let p = Poly::monomial(vec![2], ratio(5, 2)).add(&Poly::monomial(vec![1], ratio(3, 2)));
        let s = serde_json::to_string(&p).unwrap();
        let back: Poly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
