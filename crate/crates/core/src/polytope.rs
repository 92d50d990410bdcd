//! Exact lattice-polytope geometry: convex hulls, volumes, mixed volumes,
//! Minkowski's volume polynomial and the Bernstein bound.
//!
//! Hulls are built by beneath-beyond insertion in a full-dimensional
//! coordinate projection of the affine hull. Facets are simplices with exact
//! `i128` normals; coplanar facets are merged only when deciding which
//! triangulation vertices are extreme points.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::compositions;
use crate::linalg::{det, integer_kernel, solve};
use crate::poly::Poly;
use crate::rational::{factorial, from_u128};

pub type Point = Vec<i64>;

/// Convex hull of finitely many lattice points, stored by its extreme points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    ambient_dim: usize,
    vertices: Vec<Point>,
    dim: usize,
}

/// JSON form `{"dim": n, "points": [[..], ..]}`.
#[derive(Serialize, Deserialize)]
struct PolytopeJson {
    dim: usize,
    points: Vec<Point>,
}

impl Serialize for LatticePolytope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolytopeJson { dim: self.ambient_dim, points: self.vertices.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePolytope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolytopeJson::deserialize(d)?;
        LatticePolytope::from_points(j.dim, &j.points).map_err(serde::de::Error::custom)
    }
}

/// Pivot columns of the row space of `rows`, in increasing order.
fn pivot_columns(rows: &[Vec<i128>], cols: usize) -> Vec<usize> {
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if a[i][c] != 0 {
                let (x, y) = (a[r][c], a[i][c]);
                for j in 0..cols {
                    a[i][j] = a[i][j] * x - a[r][j] * y;
                }
                let g = a[i].iter().fold(0i128, |g, &v| num_integer::gcd(g, v));
                if g > 1 {
                    a[i].iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn differences(points: &[Point]) -> Vec<Vec<i128>> {
    let base = &points[0];
    points[1..].iter().map(|p| p.iter().zip(base).map(|(a, b)| i128::from(a - b)).collect()).collect()
}

/// A simplicial boundary facet `normal·x ≤ offset` of a full-dimensional hull.
#[derive(Clone, Debug)]
struct Facet {
    vertices: Vec<usize>,
    normal: Vec<i128>,
    offset: i128,
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Normal of the hyperplane through `k` points of `R^k`, by cofactor expansion.
fn hyperplane_normal(pts: &[&Vec<i128>]) -> Vec<i128> {
    let k = pts[0].len();
    let rows: Vec<Vec<i128>> = pts[1..].iter().map(|p| p.iter().zip(pts[0]).map(|(a, b)| a - b).collect()).collect();
    (0..k)
        .map(|j| {
            let minor: Vec<Vec<i128>> =
                rows.iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
            let d = det(&minor);
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

/// Triangulated boundary of the hull of full-dimensional points in `R^k`, `k ≥ 2`.
struct Hull {
    points: Vec<Vec<i128>>,
    facets: Vec<Facet>,
}

impl Hull {
    fn build(points: Vec<Vec<i128>>) -> Hull {
        let k = points[0].len();
        // Greedy affinely independent start.
        let mut simplex = vec![0usize];
        for i in 1..points.len() {
            if simplex.len() == k + 1 {
                break;
            }
            let mut rows: Vec<Vec<i128>> =
                simplex[1..].iter().map(|&j| points[j].iter().zip(&points[0]).map(|(a, b)| a - b).collect()).collect();
            rows.push(points[i].iter().zip(&points[simplex[0]]).map(|(a, b)| a - b).collect());
            if pivot_columns(&rows, k).len() == rows.len() {
                simplex.push(i);
            }
        }
        assert_eq!(simplex.len(), k + 1, "points must be full-dimensional");
        // (k+1)·interior reference point.
        let interior: Vec<i128> = (0..k).map(|c| simplex.iter().map(|&i| points[i][c]).sum()).collect();
        let scale = (k + 1) as i128;
        let make = |vs: Vec<usize>, pts: &[Vec<i128>]| -> Facet {
            let refs: Vec<&Vec<i128>> = vs.iter().map(|&i| &pts[i]).collect();
            let mut normal = hyperplane_normal(&refs);
            let mut offset = dot(&normal, &pts[vs[0]]);
            if dot(&normal, &interior) > scale * offset {
                normal.iter_mut().for_each(|v| *v = -*v);
                offset = -offset;
            }
            Facet { vertices: vs, normal, offset }
        };
        let mut facets: Vec<Option<Facet>> = Vec::new();
        let mut ridges: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        let register = |facets: &mut Vec<Option<Facet>>, ridges: &mut HashMap<Vec<usize>, Vec<usize>>, f: Facet| {
            let id = facets.len();
            for skip in 0..f.vertices.len() {
                let mut r = f.vertices.clone();
                r.remove(skip);
                ridges.entry(r).or_default().push(id);
            }
            facets.push(Some(f));
        };
        for skip in 0..=k {
            let mut vs = simplex.clone();
            vs.remove(skip);
            vs.sort_unstable();
            let f = make(vs, &points);
            register(&mut facets, &mut ridges, f);
        }
        let in_simplex: BTreeSet<usize> = simplex.iter().copied().collect();
        for p in 0..points.len() {
            if in_simplex.contains(&p) {
                continue;
            }
            let visible: BTreeSet<usize> = facets
                .iter()
                .enumerate()
                .filter_map(|(id, f)| f.as_ref().filter(|f| dot(&f.normal, &points[p]) > f.offset).map(|_| id))
                .collect();
            if visible.is_empty() {
                continue;
            }
            let mut horizon = Vec::new();
            for &id in &visible {
                let f = facets[id].as_ref().expect("visible facets are alive");
                for skip in 0..f.vertices.len() {
                    let mut r = f.vertices.clone();
                    r.remove(skip);
                    let across = ridges[&r].iter().any(|&g| g != id && !visible.contains(&g));
                    if across {
                        horizon.push(r);
                    }
                }
            }
            for &id in &visible {
                let f = facets[id].take().expect("visible facets are alive");
                for skip in 0..f.vertices.len() {
                    let mut r = f.vertices.clone();
                    r.remove(skip);
                    if let Some(list) = ridges.get_mut(&r) {
                        list.retain(|&g| g != id);
                        if list.is_empty() {
                            ridges.remove(&r);
                        }
                    }
                }
            }
            for r in horizon {
                let mut vs = r;
                vs.push(p);
                vs.sort_unstable();
                let f = make(vs, &points);
                register(&mut facets, &mut ridges, f);
            }
        }
        Hull { points, facets: facets.into_iter().flatten().collect() }
    }

    /// Distinct supporting hyperplanes, normals reduced to primitive vectors.
    fn inequalities(&self) -> Vec<(Vec<i128>, i128)> {
        let mut set = BTreeSet::new();
        for f in &self.facets {
            let g = f.normal.iter().fold(f.offset.abs(), |g, &v| num_integer::gcd(g, v));
            let g = g.max(1);
            set.insert((f.normal.iter().map(|v| v / g).collect::<Vec<_>>(), f.offset / g));
        }
        set.into_iter().collect()
    }

    /// Indices of extreme points: those on facet hyperplanes whose normals span `R^k`.
    fn extreme_points(&self) -> Vec<usize> {
        let k = self.points[0].len();
        let ineq = self.inequalities();
        let candidates: BTreeSet<usize> = self.facets.iter().flat_map(|f| f.vertices.iter().copied()).collect();
        candidates
            .into_iter()
            .filter(|&i| {
                let tight: Vec<Vec<i128>> =
                    ineq.iter().filter(|(n, o)| dot(n, &self.points[i]) == *o).map(|(n, _)| n.clone()).collect();
                pivot_columns(&tight, k).len() == k
            })
            .collect()
    }

    /// `k!·volume`, as an integer.
    fn scaled_volume(&self) -> i128 {
        let o = &self.points[self.facets[0].vertices[0]];
        self.facets
            .iter()
            .filter(|f| !f.vertices.iter().any(|&v| &self.points[v] == o))
            .map(|f| {
                let rows: Vec<Vec<i128>> =
                    f.vertices.iter().map(|&v| self.points[v].iter().zip(o).map(|(a, b)| a - b).collect()).collect();
                det(&rows).abs()
            })
            .sum()
    }
}

impl LatticePolytope {
    /// Hull of a nonempty finite point set in `Z^n`.
    pub fn from_points(ambient_dim: usize, points: &[Point]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Precondition("a polytope needs at least one point".into()));
        }
        if let Some(p) = points.iter().find(|p| p.len() != ambient_dim) {
            return Err(Error::Dimension { expected: ambient_dim, found: p.len() });
        }
        let mut pts: Vec<Point> = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() == 1 {
            return Ok(LatticePolytope { ambient_dim, vertices: pts, dim: 0 });
        }
        let coords = pivot_columns(&differences(&pts), ambient_dim);
        let dim = coords.len();
        let projected: Vec<Vec<i128>> = pts.iter().map(|p| coords.iter().map(|&c| i128::from(p[c])).collect()).collect();
        let vertices = if dim == 1 {
            let lo = (0..pts.len()).min_by_key(|&i| projected[i][0]).expect("nonempty");
            let hi = (0..pts.len()).max_by_key(|&i| projected[i][0]).expect("nonempty");
            vec![pts[lo].clone(), pts[hi].clone()]
        } else {
            let hull = Hull::build(projected);
            hull.extreme_points().into_iter().map(|i| pts[i].clone()).collect()
        };
        let mut vertices = vertices;
        vertices.sort();
        Ok(LatticePolytope { ambient_dim, vertices, dim })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim
    }

    /// The standard simplex `conv{0, d·e_1, ..., d·e_n}`.
    pub fn dilated_simplex(n: usize, d: i64) -> Self {
        let mut pts = vec![vec![0; n]];
        for i in 0..n {
            let mut p = vec![0; n];
            p[i] = d;
            pts.push(p);
        }
        LatticePolytope::from_points(n, &pts).expect("valid simplex")
    }

    /// The cube `[0, d]^n`.
    pub fn cube(n: usize, d: i64) -> Self {
        let pts: Vec<Point> = (0..1u32 << n).map(|m| (0..n).map(|i| if m & (1 << i) != 0 { d } else { 0 }).collect()).collect();
        LatticePolytope::from_points(n, &pts).expect("valid cube")
    }

    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Dimension { expected: self.ambient_dim, found: other.ambient_dim });
        }
        let mut pts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                pts.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        LatticePolytope::from_points(self.ambient_dim, &pts)
    }

    /// `λ·P`.
    pub fn dilate(&self, lambda: i64) -> Self {
        let vertices = self.vertices.iter().map(|p| p.iter().map(|x| x * lambda).collect()).collect();
        let dim = if lambda == 0 { 0 } else { self.dim };
        let mut p = LatticePolytope { ambient_dim: self.ambient_dim, vertices, dim };
        if lambda == 0 {
            p.vertices.truncate(1);
        }
        p
    }

    fn full_hull(&self) -> Option<Hull> {
        (self.is_full_dimensional() && self.dim >= 2)
            .then(|| Hull::build(self.vertices.iter().map(|p| p.iter().map(|&x| i128::from(x)).collect()).collect()))
    }

    /// Euclidean `n`-volume; zero for lower-dimensional polytopes.
    pub fn volume(&self) -> BigRational {
        if !self.is_full_dimensional() {
            return BigRational::zero();
        }
        if self.dim == 0 {
            return BigRational::one();
        }
        if self.dim == 1 {
            return BigRational::from_integer(BigInt::from(self.vertices[1][0] - self.vertices[0][0]));
        }
        let hull = self.full_hull().expect("full-dimensional");
        BigRational::new(BigInt::from(hull.scaled_volume()), factorial(self.dim as u64))
    }

    /// The same polytope in coordinates of a basis of the lattice of its
    /// affine hull: a full-dimensional lattice polytope in `Z^dim`.
    pub fn lattice_coordinates(&self) -> LatticePolytope {
        if self.dim == 0 {
            return LatticePolytope { ambient_dim: 0, vertices: vec![Vec::new()], dim: 0 };
        }
        let n = self.ambient_dim;
        let diffs = differences(&self.vertices);
        let normal_space = integer_kernel(&diffs, n);
        let basis = if normal_space.is_empty() {
            (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
        } else {
            integer_kernel(&normal_space, n)
        };
        let coords = pivot_columns(&diffs, n);
        let k = coords.len();
        // π(B) y = π(v − v0) on the pivot coordinates.
        let a: Vec<Vec<BigRational>> = coords
            .iter()
            .map(|&c| basis.iter().map(|b: &Vec<i128>| BigRational::from_integer(BigInt::from(b[c]))).collect())
            .collect();
        let v0 = &self.vertices[0];
        let vertices: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| {
                let rhs: Vec<BigRational> =
                    coords.iter().map(|&c| BigRational::from_integer(BigInt::from(v[c] - v0[c]))).collect();
                let y = solve(&a, &rhs).expect("lattice basis spans the affine hull");
                y.iter()
                    .map(|q| {
                        assert!(q.is_integer(), "vertex outside the affine lattice");
                        i64::try_from(q.to_integer()).expect("small coordinates")
                    })
                    .collect()
            })
            .collect();
        LatticePolytope::from_points(k, &vertices).expect("projected hull")
    }

    /// Volume against the lattice of the affine hull; a point has volume 1.
    pub fn normalized_volume(&self) -> BigRational {
        self.lattice_coordinates().volume()
    }

    /// Facet inequalities `a·x ≤ b` of a full-dimensional polytope.
    pub fn inequalities(&self) -> Vec<(Vec<i128>, i128)> {
        match (self.dim, self.full_hull()) {
            (_, Some(h)) => h.inequalities(),
            (1, None) if self.ambient_dim == 1 => {
                vec![(vec![1], i128::from(self.vertices[1][0])), (vec![-1], -i128::from(self.vertices[0][0]))]
            }
            _ => Vec::new(),
        }
    }

    /// Number of lattice points of `t·P` for a full-dimensional `P`.
    pub fn lattice_points_in_dilate(&self, t: i64) -> u128 {
        assert!(self.is_full_dimensional(), "lattice-point counts need a full-dimensional polytope");
        let n = self.ambient_dim;
        if n == 0 {
            return 1;
        }
        let ineq = self.inequalities();
        let lo: Vec<i64> = (0..n).map(|c| self.vertices.iter().map(|v| v[c]).min().expect("nonempty") * t).collect();
        let hi: Vec<i64> = (0..n).map(|c| self.vertices.iter().map(|v| v[c]).max().expect("nonempty") * t).collect();
        let mut count = 0u128;
        let mut cur = lo.clone();
        loop {
            let x: Vec<i128> = cur.iter().map(|&v| i128::from(v)).collect();
            if ineq.iter().all(|(a, b)| dot(a, &x) <= b * i128::from(t)) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                if cur[i] < hi[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = lo[i];
                i += 1;
            }
        }
    }

    /// Leading coefficient of the Ehrhart polynomial, fitted from `t = 0..=n`.
    pub fn ehrhart_volume(&self) -> BigRational {
        let n = self.ambient_dim;
        if !self.is_full_dimensional() {
            return BigRational::zero();
        }
        let values: Vec<BigRational> = (0..=n as i64).map(|t| from_u128(self.lattice_points_in_dilate(t))).collect();
        // n-th forward difference divided by n! is the leading coefficient.
        let mut diff = values;
        for _ in 0..n {
            diff = diff.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        &diff[0] / BigRational::from_integer(factorial(n as u64))
    }
}

/// Newton polytope of a support set.
pub fn newton_polytope(support: &[Point]) -> Result<LatticePolytope> {
    let n = support.first().map(Vec::len).ok_or_else(|| Error::Precondition("empty support".into()))?;
    LatticePolytope::from_points(n, support)
}

fn sum_all(polys: &[&LatticePolytope], n: usize) -> Result<LatticePolytope> {
    let mut acc = LatticePolytope::from_points(n, &[vec![0; n]])?;
    for p in polys {
        acc = acc.minkowski_sum(p)?;
    }
    Ok(acc)
}

/// `MV_n(Q_1, ..., Q_n)` by inclusion-exclusion over nonempty subsets.
pub fn mixed_volume(polys: &[LatticePolytope]) -> Result<BigRational> {
    let n = polys.first().map(LatticePolytope::ambient_dim).ok_or_else(|| Error::Precondition("no polytopes".into()))?;
    if polys.len() != n {
        return Err(Error::Dimension { expected: n, found: polys.len() });
    }
    if let Some(p) = polys.iter().find(|p| p.ambient_dim() != n) {
        return Err(Error::Dimension { expected: n, found: p.ambient_dim() });
    }
    let terms: Vec<BigRational> = (1u32..1 << n)
        .into_par_iter()
        .map(|mask| {
            let chosen: Vec<&LatticePolytope> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| &polys[i]).collect();
            let v = sum_all(&chosen, n)?.volume();
            Ok(if (n - chosen.len()) % 2 == 1 { -v } else { v })
        })
        .collect::<Result<_>>()?;
    Ok(terms.into_iter().fold(BigRational::zero(), |a, b| a + b))
}

/// `Q_α`: `α_i` copies of `Q_i`.
pub fn multiset(polys: &[LatticePolytope], alpha: &[u32]) -> Vec<LatticePolytope> {
    polys.iter().zip(alpha).flat_map(|(p, &a)| std::iter::repeat(p.clone()).take(a as usize)).collect()
}

/// Minkowski's volume polynomial `λ ↦ V_n(λ_1 Q_1 + ... + λ_s Q_s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VolumePolynomial {
    pub polynomial: Poly,
    /// `MV_n(Q_α)` for every `|α| = n`, by inclusion-exclusion.
    pub mixed_volumes: Vec<(Vec<u32>, BigRationalJson)>,
}

/// Serializes a rational as `{num, den}`.
pub type BigRationalJson = crate::rational::Exact;

/// Interpolates the volume polynomial on `λ = α + 1, |α| = n`, and checks its
/// coefficients against inclusion-exclusion mixed volumes.
pub fn minkowski_volume_polynomial(polys: &[LatticePolytope]) -> Result<VolumePolynomial> {
    let s = polys.len();
    let n = polys.first().map(LatticePolytope::ambient_dim).ok_or_else(|| Error::Precondition("no polytopes".into()))?;
    let monomials = compositions(s, n as u32);
    let samples: Vec<Vec<i64>> = monomials.iter().map(|a| a.iter().map(|&x| i64::from(x) + 1).collect()).collect();
    let volumes: Vec<BigRational> = samples
        .par_iter()
        .map(|lambda| {
            let scaled: Vec<LatticePolytope> = polys.iter().zip(lambda).map(|(p, &l)| p.dilate(l)).collect();
            let refs: Vec<&LatticePolytope> = scaled.iter().collect();
            Ok(sum_all(&refs, n)?.volume())
        })
        .collect::<Result<_>>()?;
    let matrix: Vec<Vec<BigRational>> = samples
        .iter()
        .map(|lambda| {
            monomials
                .iter()
                .map(|a| {
                    let v: i64 = lambda.iter().zip(a).map(|(&l, &e)| l.pow(e)).product();
                    BigRational::from_integer(BigInt::from(v))
                })
                .collect()
        })
        .collect();
    let coeffs = solve(&matrix, &volumes).ok_or_else(|| Error::Invariant("volume-polynomial sample matrix is singular".into()))?;
    let mut polynomial = Poly::zero(s);
    let mut mixed_volumes = Vec::new();
    for (a, c) in monomials.iter().zip(coeffs) {
        let mv = mixed_volume(&multiset(polys, a))?;
        let weight: BigInt = a.iter().map(|&x| factorial(u64::from(x))).product();
        if c != &mv / BigRational::from_integer(weight) {
            return Err(Error::Invariant(format!("volume-polynomial coefficient at {a:?} is {c}, mixed volume gives {mv}")));
        }
        polynomial.add_term(a.clone(), c);
        mixed_volumes.push((a.clone(), crate::rational::Exact(mv)));
    }
    Ok(VolumePolynomial { polynomial, mixed_volumes })
}

/// Bernstein's bound: the mixed volume of the Newton polytopes, an integer.
pub fn bernstein_bound(supports: &[Vec<Point>]) -> Result<BigInt> {
    let polys = supports.iter().map(|s| newton_polytope(s)).collect::<Result<Vec<_>>>()?;
    let mv = mixed_volume(&polys)?;
    if !mv.is_integer() {
        return Err(Error::Invariant(format!("mixed volume {mv} of lattice polytopes is not an integer")));
    }
    Ok(mv.to_integer())
}

/// Drops coordinate 0: a lattice isomorphism from each hyperplane `Σx = c` onto `Z^n`.
pub fn drop_first_coordinate(points: &[Point]) -> Vec<Point> {
    points.iter().map(|p| p[1..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn poly(pts: &[&[i64]]) -> LatticePolytope {
        let v: Vec<Point> = pts.iter().map(|p| p.to_vec()).collect();
        LatticePolytope::from_points(v[0].len(), &v).unwrap()
    }

    /// Extreme points by brute force: a point is extreme iff some integer
    /// direction in a small window has it as the unique maximizer.
    fn brute_extremes(pts: &[Point]) -> Vec<Point> {
        let n = pts[0].len();
        let dirs: Vec<Vec<i64>> = crate::hilbert::box_points(&vec![0; n], &vec![8; n])
            .into_iter()
            .map(|d| d.iter().map(|&x| i64::from(x) - 4).collect())
            .collect();
        let mut out = BTreeSet::new();
        for d in &dirs {
            let val = |p: &Point| p.iter().zip(d).map(|(a, b)| a * b).sum::<i64>();
            let best = pts.iter().map(val).max().unwrap();
            let arg: BTreeSet<&Point> = pts.iter().filter(|p| val(p) == best).collect();
            if arg.len() == 1 {
                out.insert(arg.into_iter().next().unwrap().clone());
            }
        }
        out.into_iter().collect()
    }

    #[test]
    fn hull_examples() {
        assert_eq!(poly(&[&[0, 0], &[1, 0], &[2, 0]]).vertices(), &[vec![0, 0], vec![2, 0]]);
        assert_eq!(poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).vertices().len(), 4);
        let t = poly(&[&[0, 0], &[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(t.vertices(), &[vec![0, 0], vec![0, 3], vec![2, 0]]);
        let pts: Vec<Point> = vec![vec![0, 0], vec![2, 0], vec![1, 1], vec![0, 3]];
        assert_eq!(brute_extremes(&pts), t.vertices().to_vec());
    }

    #[test]
    fn collinear_insertions_are_not_vertices() {
        let q = poly(&[&[0, 0], &[1, 0], &[0, 1], &[2, 0], &[0, 2], &[1, 1]]);
        assert_eq!(q.vertices(), &[vec![0, 0], vec![0, 2], vec![2, 0]]);
        assert_eq!(q.volume(), int(2));
    }

    #[test]
    fn volumes() {
        assert_eq!(LatticePolytope::cube(2, 1).volume(), int(1));
        assert_eq!(LatticePolytope::dilated_simplex(2, 1).volume(), ratio(1, 2));
        assert_eq!(poly(&[&[0, 0], &[2, 0], &[0, 3]]).volume(), int(3));
        assert_eq!(LatticePolytope::dilated_simplex(3, 2).volume(), ratio(8, 6));
        assert_eq!(poly(&[&[0, 0], &[2, 0]]).volume(), int(0));
    }

    #[test]
    fn normalized_volumes() {
        assert_eq!(poly(&[&[0, 0], &[1, 1]]).normalized_volume(), int(1));
        assert_eq!(poly(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).normalized_volume(), ratio(1, 2));
        assert_eq!(poly(&[&[3, 4]]).normalized_volume(), int(1));
        assert_eq!(poly(&[&[0, 0], &[2, 2]]).normalized_volume(), int(2));
    }

    #[test]
    fn minkowski_sums() {
        let sx = poly(&[&[0, 0], &[1, 0]]);
        let sy = poly(&[&[0, 0], &[0, 1]]);
        assert_eq!(sx.minkowski_sum(&sy).unwrap(), LatticePolytope::cube(2, 1));
        let d = LatticePolytope::dilated_simplex(2, 1);
        assert_eq!(d.minkowski_sum(&d).unwrap(), LatticePolytope::dilated_simplex(2, 2));
        let pt = poly(&[&[3, 1]]);
        assert_eq!(d.minkowski_sum(&pt).unwrap().vertices(), &[vec![3, 1], vec![3, 2], vec![4, 1]]);
    }

    #[test]
    fn mixed_volumes() {
        let sx = poly(&[&[0, 0], &[1, 0]]);
        let sy = poly(&[&[0, 0], &[0, 1]]);
        assert_eq!(mixed_volume(&[sx, sy]).unwrap(), int(1));
        let d = LatticePolytope::dilated_simplex(2, 1);
        assert_eq!(mixed_volume(&[d.clone(), d.clone()]).unwrap(), int(1));
        let sq = LatticePolytope::cube(2, 1);
        assert_eq!(mixed_volume(&[sq.clone(), sq.clone()]).unwrap(), int(2));
        assert_eq!(mixed_volume(&[d, sq]).unwrap(), int(2));
    }

    #[test]
    fn volume_polynomial_of_simplex_and_square() {
        let d = LatticePolytope::dilated_simplex(2, 1);
        let sq = LatticePolytope::cube(2, 1);
        let vp = minkowski_volume_polynomial(&[d, sq]).unwrap();
        assert_eq!(vp.polynomial.coefficient(&[2, 0]), ratio(1, 2));
        assert_eq!(vp.polynomial.coefficient(&[1, 1]), int(2));
        assert_eq!(vp.polynomial.coefficient(&[0, 2]), int(1));
    }

    #[test]
    fn bernstein_bounds() {
        let simplex_support = |n: usize, d: i64| LatticePolytope::dilated_simplex(n, d).vertices().to_vec();
        assert_eq!(bernstein_bound(&[simplex_support(2, 2), simplex_support(2, 3)]).unwrap(), BigInt::from(6));
        let sq = LatticePolytope::cube(2, 1).vertices().to_vec();
        assert_eq!(bernstein_bound(&[sq.clone(), sq]).unwrap(), BigInt::from(2));
        let line: Vec<Point> = (0..=5).map(|i| vec![i]).collect();
        assert_eq!(bernstein_bound(&[line]).unwrap(), BigInt::from(5));
    }

    #[test]
    fn ehrhart_agrees_with_triangulation() {
        for p in [
            LatticePolytope::cube(3, 2),
            LatticePolytope::dilated_simplex(3, 1),
            poly(&[&[0, 0], &[2, 0], &[1, 1], &[0, 3]]),
            poly(&[&[0, 0, 0], &[2, 1, 0], &[0, 1, 3], &[1, 3, 1], &[1, 1, 1]]),
        ] {
            assert_eq!(p.ehrhart_volume(), p.volume());
        }
    }
}
