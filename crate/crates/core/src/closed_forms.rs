//! Closed-form evaluators for Rees-algebra multiplicities and mixed
//! multiplicities of special ideals.
//!
//! Every function is total on its validated domain and uses `0^0 = 1`, empty
//! sums `0` and empty products `1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::compositions;
use crate::rational::Exact;

fn to_i64(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Unsupported(format!("closed-form value {v} exceeds 64 bits")))
}

fn pow(base: i128, e: u32) -> i128 {
    base.pow(e)
}

fn sign(e: i64) -> i128 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `e(A[It]_M)` for a homogeneous d-sequence, by the three-branch formula.
///
/// `quotients[j-1] = e(A/I_j)` for `j = 1..s`; `dim_mod_i1 = dim A/I_1`.
pub fn d_sequence_rees(quotients: &[i64], dim_mod_i1: i64, dim_a: i64, e_a: i64) -> Result<i64> {
    if dim_mod_i1 > dim_a {
        return Err(Error::Precondition(format!("dim A/I_1 = {dim_mod_i1} exceeds dim A = {dim_a}")));
    }
    let sum: i64 = quotients.iter().sum();
    Ok(if dim_mod_i1 == dim_a {
        sum
    } else if dim_mod_i1 == dim_a - 1 {
        sum + e_a
    } else {
        e_a
    })
}

/// `e_i(m|I) = e(A/I_{i+1})` for `i < s`, zero afterwards, for `i = 0..len`.
pub fn hoang_mixed(quotients: &[i64], s: usize, len: usize) -> Result<Vec<i64>> {
    if quotients.len() < s {
        return Err(Error::Precondition(format!("{} quotient multiplicities given, {s} needed", quotients.len())));
    }
    Ok((0..len).map(|i| if i < s { quotients[i] } else { 0 }).collect())
}

fn check_sorted(a: &[u32]) -> Result<()> {
    if a.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition(format!("degrees {a:?} must be non-decreasing")));
    }
    Ok(())
}

/// `Σ_{i=from}^{n-1} a_1⋯a_i`, with the `i = 0` term equal to 1.
fn partial_product_sum(a: &[u32], from: usize) -> i128 {
    let n = a.len();
    (from..n).map(|i| a[..i].iter().map(|&x| i128::from(x)).product::<i128>()).sum()
}

/// `(1 + Σ_{i=1}^{n-1} a_1⋯a_i)·e(A)` for a filter-regular system of parameters.
pub fn filter_regular_rees(a: &[u32], e_a: i64) -> Result<i64> {
    check_sorted(a)?;
    if a.is_empty() {
        return Ok(e_a);
    }
    to_i64((1 + partial_product_sum(a, 1)) * i128::from(e_a))
}

/// `(1 + Σ_{i=l}^{n-1} a_1⋯a_i)·e(A)` with `l` the last index where `a_l = 1`.
pub fn filter_regular_extended(a: &[u32], e_a: i64) -> Result<i64> {
    check_sorted(a)?;
    let l = a.iter().rposition(|&x| x == 1).map_or(0, |p| p + 1);
    to_i64((1 + partial_product_sum(a, l)) * i128::from(e_a))
}

/// `e_i(A[It])`, `i = 0..s`, for a homogeneous regular sequence of degrees
/// `d_1 ≤ … ≤ d_r` in a ring of dimension `dim_a`; the outer sum runs to
/// `min{r, s − i + 1}`.
pub fn regular_sequence_rees_mixed(d: &[u32], e_a: i64, dim_a: usize) -> Result<Vec<i64>> {
    check_sorted(d)?;
    if dim_a == 0 {
        return Err(Error::Precondition("the ambient ring must have positive dimension".into()));
    }
    let s = dim_a as i64 - 1;
    let r = d.len() as i64;
    (0..=s)
        .map(|i| {
            let mut acc: i128 = 0;
            for q in 1..=r.min(s - i + 1) {
                let total = (s - q - i + 1) as u32;
                let inner: i128 = compositions(q as usize, total)
                    .iter()
                    .map(|j| {
                        (0..q as usize)
                            .map(|k| {
                                let e = if (k as i64) < q - 1 { j[k] + 1 } else { j[k] };
                                pow(i128::from(d[k]), e)
                            })
                            .product::<i128>()
                    })
                    .sum();
                acc += sign(s - q - i + 1) * i128::from(e_a) * inner;
            }
            to_i64(acc)
        })
        .collect()
}

fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    i128::try_from(crate::count::binomial(n as u64, k as u64)).expect("small binomial")
}

/// The displayed alternating sum for maximal minors of an `(r−1)×r` generic
/// matrix, with the outer bound `min{r, s − i + 1}`.
pub fn minors_mixed(r: u32) -> Result<Vec<i64>> {
    if r < 2 {
        return Err(Error::Precondition("maximal minors need r ≥ 2".into()));
    }
    let r = i64::from(r);
    let s = (r - 1) * r - 1;
    (0..=s)
        .map(|i| {
            let mut acc: i128 = 0;
            for q in 1..=r.min(s - i + 1) {
                let e = (s - q - i + 1) as u32;
                acc += sign(s - q - i + 1) * binomial(r - 1, q - 1) * binomial(s - i, q - 1) * pow(i128::from(r), e);
            }
            to_i64(acc)
        })
        .collect()
}

/// `(1/2^d)[e(m²+I) + Σ_{j<d} 2^j e_j(m²+I|I)]`.
pub fn extended_rees_rhs(e_front: i64, e_j: &[i64], d: usize) -> Result<BigRational> {
    if e_j.len() != d {
        return Err(Error::Precondition(format!("{} mixed multiplicities given, {d} needed", e_j.len())));
    }
    let mut acc = BigInt::from(e_front);
    for (j, &e) in e_j.iter().enumerate() {
        acc += BigInt::from(e) << j;
    }
    Ok(BigRational::new(acc, BigInt::from(1) << d))
}

/// `e_{i, m+n−2−i}` of `k[X_1..X_m, Y_1..Y_n]` with `deg X = (1,0)`,
/// `deg Y_j = (d_j, 1)`, for `i = 0..m+n−2`.
pub fn bigraded_free_mixed(m: usize, d: &[u32]) -> Result<Vec<i64>> {
    let n = d.len();
    if m == 0 || n == 0 {
        return Err(Error::Precondition("both variable groups must be nonempty".into()));
    }
    (0..=m + n - 2)
        .map(|i| {
            if i >= m {
                return Ok(0);
            }
            let total = (m - 1 - i) as u32;
            let sum: i128 = compositions(n, total)
                .iter()
                .map(|j| j.iter().zip(d).map(|(&e, &b)| pow(i128::from(b), e)).product::<i128>())
                .sum();
            to_i64(sign((m - i - 1) as i64) * sum)
        })
        .collect()
}

/// `Σ_{i=0}^{s} C(s,i) e_i c^i e^{s−i}` for the embedding by `(I^e)_c`.
pub fn embedded_degree(e_rees: &[i64], c: u32, e: u32) -> Result<i64> {
    let s = e_rees.len().checked_sub(1).ok_or_else(|| Error::Precondition("no mixed multiplicities".into()))?;
    let mut acc: i128 = 0;
    for (i, &ei) in e_rees.iter().enumerate() {
        acc += binomial(s as i64, i as i64) * i128::from(ei) * pow(i128::from(c), i as u32) * pow(i128::from(e), (s - i) as u32);
    }
    to_i64(acc)
}

/// Tagged input for scripted oracle evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum OracleInput {
    DSequenceRees { quotients: Vec<i64>, dim_mod_i1: i64, dim_a: i64, e_a: i64 },
    Hoang { quotients: Vec<i64>, s: usize, len: usize },
    FilterRegular { a: Vec<u32>, e_a: i64 },
    ExtendedFilterRegular { a: Vec<u32>, e_a: i64 },
    RegularSequenceRees { degrees: Vec<u32>, e_a: i64, dim_a: usize },
    MaximalMinors { r: u32 },
    ExtendedRees { e_front: i64, e_j: Vec<i64>, d: usize },
    BigradedFree { m: usize, degrees: Vec<u32> },
    Embedded { e_rees: Vec<i64>, c: u32, e: u32 },
}

/// Oracle output: a single value, a sequence, or an exact rational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum OracleValue {
    Integer(i64),
    Sequence(Vec<i64>),
    Rational(Exact),
}

impl std::fmt::Display for OracleValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OracleValue::Integer(v) => write!(f, "{v}"),
            OracleValue::Sequence(v) => {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "({})", parts.join(", "))
            }
            OracleValue::Rational(q) => write!(f, "{}", q.0),
        }
    }
}

pub fn evaluate(input: &OracleInput) -> Result<OracleValue> {
    use OracleInput::*;
    Ok(match input {
        DSequenceRees { quotients, dim_mod_i1, dim_a, e_a } => OracleValue::Integer(d_sequence_rees(quotients, *dim_mod_i1, *dim_a, *e_a)?),
        Hoang { quotients, s, len } => OracleValue::Sequence(hoang_mixed(quotients, *s, *len)?),
        FilterRegular { a, e_a } => OracleValue::Integer(filter_regular_rees(a, *e_a)?),
        ExtendedFilterRegular { a, e_a } => OracleValue::Integer(filter_regular_extended(a, *e_a)?),
        RegularSequenceRees { degrees, e_a, dim_a } => OracleValue::Sequence(regular_sequence_rees_mixed(degrees, *e_a, *dim_a)?),
        MaximalMinors { r } => OracleValue::Sequence(minors_mixed(*r)?),
        ExtendedRees { e_front, e_j, d } => OracleValue::Rational(Exact(extended_rees_rhs(*e_front, e_j, *d)?)),
        BigradedFree { m, degrees } => OracleValue::Sequence(bigraded_free_mixed(*m, degrees)?),
        Embedded { e_rees, c, e } => OracleValue::Integer(embedded_degree(e_rees, *c, *e)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn d_sequence_branches() {
        assert_eq!(d_sequence_rees(&[1, 2], 2, 2, 1).unwrap(), 3);
        assert_eq!(d_sequence_rees(&[1, 2], 1, 2, 1).unwrap(), 4);
        assert_eq!(d_sequence_rees(&[1, 2], 0, 2, 7).unwrap(), 7);
        assert_eq!(d_sequence_rees(&[], 0, 3, 2).unwrap(), 2);
        assert!(d_sequence_rees(&[1], 3, 2, 1).is_err());
    }

    #[test]
    fn hoang_vanishes_past_s() {
        assert_eq!(hoang_mixed(&[1], 1, 2).unwrap(), vec![1, 0]);
        assert_eq!(hoang_mixed(&[1, 1], 2, 2).unwrap(), vec![1, 1]);
        assert!(hoang_mixed(&[1], 2, 2).is_err());
    }

    #[test]
    fn filter_regular_values() {
        assert_eq!(filter_regular_rees(&[1, 1], 1).unwrap(), 2);
        assert_eq!(filter_regular_rees(&[2, 3], 1).unwrap(), 3);
        assert_eq!(filter_regular_rees(&[2, 3, 4], 2).unwrap(), 2 * (1 + 2 + 6));
        assert_eq!(filter_regular_extended(&[1, 1], 1).unwrap(), 1);
        assert_eq!(filter_regular_extended(&[1, 1, 1], 3).unwrap(), 3);
        // l = 1: 1 + a_1 + a_1a_2 = 1 + 1 + 2.
        assert_eq!(filter_regular_extended(&[1, 2, 3], 1).unwrap(), 4);
        // l = 0 keeps the i = 0 term.
        assert_eq!(filter_regular_extended(&[2, 3], 1).unwrap(), 1 + 1 + 2);
        assert!(filter_regular_rees(&[3, 2], 1).is_err());
    }

    #[test]
    fn regular_sequence_single_element() {
        assert_eq!(regular_sequence_rees_mixed(&[2], 1, 2).unwrap(), vec![-2, 1]);
        assert_eq!(regular_sequence_rees_mixed(&[1, 1], 1, 2).unwrap(), vec![0, 1]);
        // Linear forms give the non-negative standard values.
        assert!(regular_sequence_rees_mixed(&[1, 1, 1], 1, 3).unwrap().iter().all(|&e| e >= 0));
    }

    #[test]
    fn minors_regression() {
        assert_eq!(minors_mixed(2).unwrap(), vec![-1, 1]);
        assert!(minors_mixed(1).is_err());
    }

    #[test]
    fn extended_rees_values() {
        assert_eq!(extended_rees_rhs(1, &[1, 1], 2).unwrap(), int(1));
        assert_eq!(extended_rees_rhs(4, &[4, 4], 2).unwrap(), int(4));
        assert_eq!(extended_rees_rhs(3, &[2], 1).unwrap(), ratio(5, 2));
    }

    #[test]
    fn bigraded_free_values() {
        assert_eq!(bigraded_free_mixed(2, &[2]).unwrap(), vec![-2, 1]);
        assert_eq!(bigraded_free_mixed(2, &[0, 0]).unwrap(), vec![0, 1, 0]);
        assert_eq!(bigraded_free_mixed(3, &[1, 2]).unwrap(), vec![7, -3, 1, 0]);
    }

    #[test]
    fn embedded_degree_of_double_line() {
        assert_eq!(embedded_degree(&[-2, 1], 3, 1).unwrap(), 1);
    }

    #[test]
    fn tagged_inputs_round_trip() {
        let text = r#"{"variant":"filter_regular","a":[2,3],"e_a":1}"#;
        let input: OracleInput = serde_json::from_str(text).unwrap();
        assert_eq!(evaluate(&input).unwrap(), OracleValue::Integer(3));
    }
}
