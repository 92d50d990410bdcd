//! Counting kernels for standard monomials.
//!
//! Both kernels slice the ideal along the last variable: fixing the exponent
//! `e` of `x_n` leaves the ideal generated by the projections of the
//! generators whose `x_n`-exponent is at most `e`. Slices only change at the
//! distinct exponents occurring among the generators, which keeps the
//! recursion small.

use std::collections::HashMap;

use crate::monomial::{minimalize_raw, ExponentVector};

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Number of monomials of degree `t` in `n` standard-graded variables.
pub fn monomials_of_degree(n: usize, t: u64) -> u128 {
    match n {
        0 => u128::from(t == 0),
        _ => binomial(t + n as u64 - 1, n as u64 - 1),
    }
}

fn is_unit(gens: &[ExponentVector]) -> bool {
    gens.iter().any(|g| g.iter().all(|&e| e == 0))
}

/// Groups generators by their exponent in variable `var` and yields, for each
/// distinct exponent `b` in increasing order, the minimal generators of the
/// slice ideal valid on `[b, next b)`.
fn slices(gens: &[ExponentVector], var: usize) -> Vec<(u32, Vec<ExponentVector>)> {
    let mut sorted: Vec<&ExponentVector> = gens.iter().collect();
    sorted.sort_by_key(|g| g[var]);
    let mut out = Vec::new();
    let mut acc: Vec<ExponentVector> = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let b = sorted[i][var];
        while i < sorted.len() && sorted[i][var] == b {
            acc.push(sorted[i][..var].to_vec());
            i += 1;
        }
        acc = minimalize_raw(acc);
        out.push((b, acc.clone()));
    }
    out
}

/// `ℓ(k[x1..xn]/I)` for the ideal generated by `gens`, or `None` when the
/// quotient is infinite-dimensional.
pub fn standard_count(gens: &[ExponentVector], n: usize) -> Option<u128> {
    if is_unit(gens) {
        return Some(0);
    }
    if gens.is_empty() {
        return if n == 0 { Some(1) } else { None };
    }
    match n {
        1 => gens.iter().map(|g| u128::from(g[0])).min(),
        2 => staircase_area(gens),
        _ => {
            let sl = slices(gens, n - 1);
            if sl[0].0 > 0 {
                return None;
            }
            let mut acc = 0u128;
            for (j, (b, slice)) in sl.iter().enumerate() {
                let c = standard_count(slice, n - 1)?;
                match sl.get(j + 1) {
                    Some((next, _)) => acc += u128::from(next - b) * c,
                    None if c == 0 => {}
                    None => return None,
                }
                if c == 0 {
                    break;
                }
            }
            Some(acc)
        }
    }
}

fn staircase_area(gens: &[ExponentVector]) -> Option<u128> {
    let mut pts: Vec<(u32, u32)> = minimalize_raw(gens.to_vec()).iter().map(|g| (g[0], g[1])).collect();
    pts.sort_unstable();
    // Minimal points sorted by x have strictly decreasing y.
    if pts[0].0 != 0 || pts[pts.len() - 1].1 != 0 {
        return None;
    }
    Some(pts.windows(2).map(|w| u128::from(w[1].0 - w[0].0) * u128::from(w[0].1)).sum())
}

/// Counts standard monomials of a fixed multidegree.
///
/// Holds memo tables keyed by slice ideal and residual degree, so one counter
/// should be reused across the cells of a table built for one grading.
pub struct GradedCounter {
    degrees: Vec<Vec<u32>>,
    blocks: Option<Vec<usize>>,
    memo: HashMap<(usize, Vec<ExponentVector>, Vec<u64>), u128>,
    free_memo: HashMap<(usize, Vec<u64>), u128>,
}

impl GradedCounter {
    pub fn new(degrees: &[Vec<u32>]) -> Self {
        let blocks = degrees
            .iter()
            .map(|d| {
                let nz: Vec<usize> = (0..d.len()).filter(|&j| d[j] != 0).collect();
                (nz.len() == 1 && d[nz[0]] == 1).then(|| nz[0])
            })
            .collect::<Option<Vec<_>>>();
        GradedCounter { degrees: degrees.to_vec(), blocks, memo: HashMap::new(), free_memo: HashMap::new() }
    }

    /// Number of monomials of multidegree `target` outside the ideal `gens`.
    pub fn count(&mut self, gens: &[ExponentVector], target: &[u64]) -> u128 {
        let n = self.degrees.len();
        self.count_rec(n, gens.to_vec(), target)
    }

    /// Number of monomials in the first `k` variables of multidegree `target`.
    pub fn free(&mut self, k: usize, target: &[u64]) -> u128 {
        if let Some(blocks) = &self.blocks {
            let mut sizes = vec![0usize; target.len()];
            for &b in &blocks[..k] {
                sizes[b] += 1;
            }
            return sizes.iter().zip(target).map(|(&nb, &t)| monomials_of_degree(nb, t)).product();
        }
        if k == 0 {
            return u128::from(target.iter().all(|&t| t == 0));
        }
        let key = (k, target.to_vec());
        if let Some(&v) = self.free_memo.get(&key) {
            return v;
        }
        let deg = self.degrees[k - 1].clone();
        let mut acc = 0;
        let mut rest = target.to_vec();
        loop {
            acc += self.free(k - 1, &rest);
            if !subtract(&mut rest, &deg) {
                break;
            }
        }
        self.free_memo.insert(key, acc);
        acc
    }

    fn count_rec(&mut self, k: usize, gens: Vec<ExponentVector>, target: &[u64]) -> u128 {
        if is_unit(&gens) {
            return 0;
        }
        if gens.is_empty() {
            return self.free(k, target);
        }
        if self.free(k, target) == 0 {
            return 0;
        }
        let key = (k, gens, target.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let (_, gens, _) = &key;
        let var = k - 1;
        let deg = self.degrees[var].clone();
        let sl = slices(gens, var);
        let mut acc = 0u128;
        let mut rest = target.to_vec();
        let mut e: u32 = 0;
        let mut current: Vec<ExponentVector> = Vec::new();
        let mut next_slice = 0;
        loop {
            while next_slice < sl.len() && sl[next_slice].0 <= e {
                current = sl[next_slice].1.clone();
                next_slice += 1;
            }
            if is_unit(&current) {
                break;
            }
            acc += self.count_rec(var, current.clone(), &rest);
            if !subtract(&mut rest, &deg) {
                break;
            }
            e += 1;
        }
        self.memo.insert(key, acc);
        acc
    }
}

/// `rest -= deg` when the result stays non-negative.
fn subtract(rest: &mut [u64], deg: &[u32]) -> bool {
    if rest.iter().zip(deg).any(|(&r, &d)| r < u64::from(d)) {
        return false;
    }
    for (r, &d) in rest.iter_mut().zip(deg) {
        *r -= u64::from(d);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over a box: monomials below `side` in every coordinate
    /// that no generator divides.
    fn brute_total(gens: &[ExponentVector], n: usize, side: u32) -> u128 {
        let mut count = 0;
        let mut a = vec![0u32; n];
        loop {
            if !gens.iter().any(|g| g.iter().zip(&a).all(|(x, y)| x <= y)) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                a[i] += 1;
                if a[i] < side {
                    break;
                }
                a[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 5), 0);
        assert_eq!(monomials_of_degree(3, 2), 6);
        assert_eq!(monomials_of_degree(0, 0), 1);
    }

    #[test]
    fn lengths_of_known_quotients() {
        let i = vec![vec![2, 0], vec![1, 1], vec![0, 3]];
        assert_eq!(standard_count(&i, 2), Some(4));
        assert_eq!(standard_count(&[vec![2, 0], vec![1, 1]], 2), None);
        assert_eq!(standard_count(&[vec![0, 0]], 2), Some(0));
        assert_eq!(standard_count(&[], 0), Some(1));
        let j = vec![vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 4], vec![1, 1, 1]];
        assert_eq!(standard_count(&j, 3), Some(brute_total(&j, 3, 5)));
        assert_eq!(standard_count(&[vec![1, 0, 0], vec![0, 1, 0]], 3), None);
    }

    #[test]
    fn graded_counts_match_brute_force() {
        let degs = vec![vec![1, 0], vec![1, 0], vec![0, 1], vec![0, 1]];
        let mut c = GradedCounter::new(&degs);
        let gens = vec![vec![1, 0, 1, 0], vec![0, 2, 0, 0]];
        for u in 0..5u64 {
            for v in 0..5u64 {
                let mut brute = 0;
                for a in 0..=u as u32 {
                    for b in 0..=v as u32 {
                        let m = [a, u as u32 - a, b, v as u32 - b];
                        if !gens.iter().any(|g| g.iter().zip(&m).all(|(x, y)| x <= y)) {
                            brute += 1;
                        }
                    }
                }
                assert_eq!(c.count(&gens, &[u, v]), brute, "at ({u},{v})");
            }
        }
    }

    #[test]
    fn nonstandard_free_count() {
        // deg x1 = (1,0), deg x2 = (1,0), deg y = (2,1): degree (u,v) monomials
        // are x^a y^v with |a| = u − 2v.
        let mut c = GradedCounter::new(&[vec![1, 0], vec![1, 0], vec![2, 1]]);
        assert_eq!(c.count(&[], &[7, 2]), 4);
        assert_eq!(c.count(&[], &[3, 2]), 0);
        assert_eq!(c.count(&[vec![2, 0, 0]], &[7, 2]), 2);
    }
}
