//! Exact matrix rank over the rationals and over prime fields.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Coefficient field: characteristic 0 (exact rationals) or a prime field.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(try_from = "u64", into = "u64")]
pub enum FieldSpec {
    #[default]
    Rational,
    Prime(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("characteristic {0} is neither 0 nor a prime below 2^32")]
pub struct BadCharacteristic(pub u64);

impl FieldSpec {
    pub fn from_characteristic(p: u64) -> Result<Self, BadCharacteristic> {
        if p == 0 {
            Ok(FieldSpec::Rational)
        } else if p < (1 << 32) && is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(BadCharacteristic(p))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => p,
        }
    }
}

impl TryFrom<u64> for FieldSpec {
    type Error = BadCharacteristic;

    fn try_from(p: u64) -> Result<Self, Self::Error> {
        FieldSpec::from_characteristic(p)
    }
}

impl From<FieldSpec> for u64 {
    fn from(k: FieldSpec) -> u64 {
        k.characteristic()
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Rank of an integer matrix (rows of equal length) over `field`.
pub fn rank(rows: &[Vec<i64>], field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rational => rank_rational(rows),
        FieldSpec::Prime(p) => rank_mod_p(rows, p),
    }
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
///
/// Runs in `i128` with checked arithmetic and restarts in `BigInt` if any
/// intermediate minor overflows.
pub fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    if let Some(r) = bareiss_rank(small) {
        return r;
    }
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss_rank(big).expect("BigInt elimination cannot overflow")
}

trait Exact: Clone + Zero + One + PartialEq {
    fn mul_sub_div(a: &Self, b: &Self, c: &Self, d: &Self, div: &Self) -> Option<Self>;
}

impl Exact for i128 {
    fn mul_sub_div(a: &i128, b: &i128, c: &i128, d: &i128, div: &i128) -> Option<i128> {
        let ab = a.checked_mul(*b)?;
        let cd = c.checked_mul(*d)?;
        let num = ab.checked_sub(cd)?;
        debug_assert_eq!(num % div, 0);
        Some(num / div)
    }
}

impl Exact for BigInt {
    fn mul_sub_div(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt, div: &BigInt) -> Option<BigInt> {
        Some((a * b - c * d) / div)
    }
}

fn bareiss_rank<T: Exact>(mut a: Vec<Vec<T>>) -> Option<usize> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in bottom.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..ncols {
                row[j] = T::mul_sub_div(&prow[col], &row[j], &lead, &prow[j], &prev)?;
            }
            row[col] = T::zero();
        }
        prev = prow[col].clone();
        rank += 1;
    }
    Some(rank)
}

/// Rank over `F_p` by ordinary elimination.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let modulus = i128::from(p);
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| i128::from(x).rem_euclid(modulus) as u64)
                .collect()
        })
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = pow_mod(a[rank][col], p - 2, p);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in bottom.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let factor = mul_mod(row[col], inv, p);
            for j in col..ncols {
                let sub = mul_mod(factor, prow[j], p);
                row[j] = (row[j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn characteristic_validation() {
        assert_eq!(FieldSpec::from_characteristic(0), Ok(FieldSpec::Rational));
        assert_eq!(FieldSpec::from_characteristic(2), Ok(FieldSpec::Prime(2)));
        assert!(FieldSpec::from_characteristic(9).is_err());
        assert!(FieldSpec::from_characteristic(1).is_err());
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank_rational(&[]), 0);
        assert_eq!(rank_rational(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_rational(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(
            rank_rational(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]),
            3
        );
        // det = 2, so the rank drops in characteristic 2.
        assert_eq!(
            rank_mod_p(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]], 2),
            2
        );
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let rows = vec![
            vec![big, big - 1, 3],
            vec![big - 7, big, 5],
            vec![2 * (big - 7) - big, big, 7],
        ];
        assert_eq!(rank_rational(&rows), 3);
    }

    /// Oracle: rank = size of the largest nonsingular square submatrix,
    /// determinants by cofactor expansion.
    fn det(m: &[Vec<i64>]) -> i128 {
        if m.is_empty() {
            return 1;
        }
        (0..m.len())
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * i128::from(m[0][c]) * det(&minor)
            })
            .sum()
    }

    fn rank_by_minors(m: &[Vec<i64>]) -> usize {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        for k in (1..=rows.min(cols)).rev() {
            for rs in crate::vertex_set::VertexSet::full(rows)
                .subsets()
                .filter(|s| s.len() == k)
            {
                for cs in crate::vertex_set::VertexSet::full(cols)
                    .subsets()
                    .filter(|s| s.len() == k)
                {
                    let sub: Vec<Vec<i64>> = rs
                        .iter()
                        .map(|r| cs.iter().map(|c| m[r - 1][c - 1]).collect())
                        .collect();
                    if det(&sub) != 0 {
                        return k;
                    }
                }
            }
        }
        0
    }

    proptest! {
        #[test]
        fn bareiss_matches_minor_oracle(
            m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
                proptest::collection::vec(proptest::collection::vec(-2i64..3, c), r)
            })
        ) {
            prop_assert_eq!(rank_rational(&m), rank_by_minors(&m));
        }

        #[test]
        fn mod_p_rank_never_exceeds_rational(
            m in proptest::collection::vec(proptest::collection::vec(-3i64..4, 4), 1..5)
        ) {
            prop_assert!(rank_mod_p(&m, 2) <= rank_rational(&m));
            prop_assert!(rank_mod_p(&m, 3) <= rank_rational(&m));
        }
    }
}
