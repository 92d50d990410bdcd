//! Mixed multiplicities of `R(m|J_1..J_n)` in `k[x0..xn]` against lattice mixed volumes.
//!
//! Each `J_i` is generated in one degree, so its Newton polytope lies in a
//! hyperplane `Σx = c`. Dropping `x0` maps that hyperplane's lattice onto
//! `Z^n`, so ordinary volumes there are lattice-normalized volumes.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{compositions, diagonal_formula, diagonal_multiplicity, FitOptions};
use crate::monomial::{total_degree, MonomialIdeal};
use crate::multiplicities::{mixed_multiplicities, IdealTuple};
use crate::polytope::{drop_first_coordinate, mixed_volume, multiset, LatticePolytope, Point};
use crate::rational::{factorial, Exact};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeEntry {
    pub alpha: Vec<u32>,
    pub multiplicity: i64,
    pub mixed_volume: Exact,
    pub holds: bool,
}

/// `e(R^λ)` three ways: the diagonal fit, `n!Σ e_α λ^α/α!`, and `n!V_n(λQ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalCheck {
    pub lambda: Vec<u32>,
    pub fitted: i64,
    pub from_multiplicities: Exact,
    pub from_volume: Exact,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeReport {
    pub n: usize,
    /// Projected Newton polytopes; slot 0 is the hull of the variables.
    pub polytopes: Vec<LatticePolytope>,
    pub entries: Vec<BridgeEntry>,
    pub diagonals: Vec<DiagonalCheck>,
}

impl BridgeReport {
    pub fn holds(&self) -> bool {
        self.entries.iter().all(|e| e.holds) && self.diagonals.iter().all(|d| d.holds)
    }

    /// `e_{(0,1,...,1)}`, the Bernstein count.
    pub fn bernstein_entry(&self) -> &BridgeEntry {
        let mut key = vec![1; self.n + 1];
        key[0] = 0;
        self.entries.iter().find(|e| e.alpha == key).expect("every |α| = n is present")
    }
}

/// The Newton polytope of a single-degree ideal, projected to `Z^n`.
fn projected_polytope(j: &MonomialIdeal) -> Result<LatticePolytope> {
    let degrees: Vec<u64> = j.generators().iter().map(|g| total_degree(g)).collect();
    if degrees.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Precondition(format!("{j} is not generated in a single degree")));
    }
    let points: Vec<Point> = j.generators().iter().map(|g| g.iter().map(|&e| i64::from(e)).collect()).collect();
    LatticePolytope::from_points(j.num_vars() - 1, &drop_first_coordinate(&points))
}

pub fn mixed_mult_volume_bridge(js: &[MonomialIdeal], lambdas: &[Vec<u32>], opts: &FitOptions) -> Result<BridgeReport> {
    let first = js.first().ok_or_else(|| Error::Precondition("no ideals".into()))?;
    let n = js.len();
    if first.num_vars() != n + 1 {
        return Err(Error::Dimension { expected: n + 1, found: first.num_vars() });
    }
    let m = MonomialIdeal::maximal(first.ring().clone());
    let mut polytopes = vec![projected_polytope(&m)?];
    for j in js {
        polytopes.push(projected_polytope(j)?);
    }
    let tuple = IdealTuple::new(m, js.to_vec())?;
    let mm = mixed_multiplicities(&tuple, opts)?;
    if mm.dimension as usize != n + 1 {
        return Err(Error::Precondition(format!("R(m|J) has dimension {}, expected {}", mm.dimension, n + 1)));
    }
    let mut entries = Vec::new();
    for alpha in compositions(n + 1, n as u32) {
        let mv = mixed_volume(&multiset(&polytopes, &alpha))?;
        let multiplicity = mm.values.get(&alpha);
        let holds = mv == BigRational::from_integer(BigInt::from(multiplicity));
        entries.push(BridgeEntry { alpha, multiplicity, mixed_volume: Exact(mv), holds });
    }
    let source = tuple.source();
    let mut diagonals = Vec::new();
    for lambda in lambdas {
        let (fitted, _) = diagonal_multiplicity(&source, lambda, n as u32, opts)?;
        let from_multiplicities = diagonal_formula(&mm.values, lambda);
        let mut sum = polytopes[0].dilate(i64::from(lambda[0]));
        for (p, &l) in polytopes.iter().zip(lambda).skip(1) {
            sum = sum.minkowski_sum(&p.dilate(i64::from(l)))?;
        }
        let from_volume = sum.volume() * BigRational::from_integer(factorial(n as u64));
        let fit = BigRational::from_integer(BigInt::from(fitted));
        let holds = fit == from_multiplicities && fit == from_volume;
        diagonals.push(DiagonalCheck {
            lambda: lambda.clone(),
            fitted,
            from_multiplicities: Exact(from_multiplicities),
            from_volume: Exact(from_volume),
            holds,
        });
    }
    Ok(BridgeReport { n, polytopes, entries, diagonals })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::multiplicities::default_fit_options;
    use crate::RingContext;

    fn ideals(n: usize, texts: &[&str]) -> Vec<MonomialIdeal> {
        let ring = Arc::new(RingContext::standard(n));
        texts.iter().map(|t| MonomialIdeal::parse(ring.clone(), t).unwrap()).collect()
    }

    #[test]
    fn line_case() {
        let r = mixed_mult_volume_bridge(&ideals(2, &["ideal(x1,x2)"]), &[vec![1, 1]], &default_fit_options(2)).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.bernstein_entry().multiplicity, 1);
    }

    #[test]
    fn squares_of_variables() {
        let js = ideals(3, &["ideal(x1^2,x2^2,x3^2)", "ideal(x1^2,x2^2,x3^2)"]);
        let r = mixed_mult_volume_bridge(&js, &[vec![1, 1, 1]], &default_fit_options(3)).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.bernstein_entry().multiplicity, 4);
    }

    #[test]
    fn mixed_binomial_supports() {
        let js = ideals(3, &["ideal(x1^2,x2*x3)", "ideal(x2^2,x1*x3)"]);
        let r = mixed_mult_volume_bridge(&js, &[], &default_fit_options(3)).unwrap();
        assert!(r.holds(), "{r:?}");
    }

    #[test]
    fn rejects_mixed_degrees() {
        let js = ideals(2, &["ideal(x1,x2^2)"]);
        assert!(matches!(mixed_mult_volume_bridge(&js, &[], &default_fit_options(2)), Err(Error::Precondition(_))));
    }
}
