//! Exact feasibility for small linear systems `x >= 0`, `A x = b`,
//! `G x >= h`, by phase-one simplex over the rationals with Bland's rule.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Q = BigRational;

fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Whether some `x >= 0` satisfies every `(a, b)` in `eqs` as `a·x = b` and
/// every `(g, h)` in `ges` as `g·x >= h`.
pub(crate) fn feasible(vars: usize, eqs: &[(Vec<i64>, i64)], ges: &[(Vec<i64>, i64)]) -> bool {
    let rows = eqs.len() + ges.len();
    if rows == 0 {
        return true;
    }
    // Columns: x, one surplus per `ges` row, one artificial per row, rhs.
    let surplus0 = vars;
    let art0 = vars + ges.len();
    let rhs = art0 + rows;
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(rows + 1);
    let constraints = eqs
        .iter()
        .map(|r| (r, None))
        .chain(ges.iter().enumerate().map(|(k, r)| (r, Some(k))));
    for (r, ((a, b), surplus)) in constraints.enumerate() {
        debug_assert_eq!(a.len(), vars);
        let sign = if *b < 0 { -1 } else { 1 };
        let mut row = vec![Q::zero(); rhs + 1];
        for (j, &v) in a.iter().enumerate() {
            row[j] = q(sign * v);
        }
        if let Some(k) = surplus {
            row[surplus0 + k] = q(-sign);
        }
        row[art0 + r] = Q::one();
        row[rhs] = q(sign * b);
        t.push(row);
    }
    // Objective row: minimize the sum of artificials, stored as reduced
    // costs of `-Σ art` expressed in the nonbasic columns.
    let mut obj = vec![Q::zero(); rhs + 1];
    for row in &t {
        for j in 0..art0 {
            obj[j] -= &row[j];
        }
        obj[rhs] -= &row[rhs];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (art0..art0 + rows).collect();

    loop {
        let z = &t[rows];
        let Some(enter) = (0..rhs).find(|&j| z[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Q)> = None;
        for i in 0..rows {
            if t[i][enter].is_positive() {
                let ratio = &t[i][rhs] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((p, _)) = leave else {
            // Unbounded phase-one objective cannot happen; treat as done.
            break;
        };
        pivot(&mut t, p, enter);
        basis[p] = enter;
    }
    t[rows][rhs].is_zero()
}

fn pivot(t: &mut [Vec<Q>], p: usize, c: usize) {
    let inv = t[p][c].recip();
    for v in t[p].iter_mut() {
        *v *= &inv;
    }
    let prow = t[p].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == p || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, pv) in row.iter_mut().zip(&prow) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_systems() {
        // x + y = 1, x >= 2: infeasible.
        assert!(!feasible(2, &[(vec![1, 1], 1)], &[(vec![1, 0], 2)]));
        // x - y = -1, x >= 1: x = 1, y = 2.
        assert!(feasible(2, &[(vec![1, -1], -1)], &[(vec![1, 0], 1)]));
        // -x >= 1 has no nonnegative solution.
        assert!(!feasible(1, &[], &[(vec![-1], 1)]));
        assert!(feasible(1, &[], &[(vec![-1], -3)]));
        assert!(feasible(3, &[], &[]));
    }
}
