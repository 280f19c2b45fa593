//! Exact rational linear feasibility via phase-1 simplex.
//!
//! Solves `find lambda >= 0 with A lambda = b` over exact rationals. On
//! infeasibility it also returns a Farkas certificate `y` satisfying
//! `y^T A <= 0` (componentwise) and `y^T b > 0`, which downstream code turns
//! into strict separating hyperplanes.
//!
//! Sizes here are tiny (tens of rows, up to a few thousand columns), so a
//! dense tableau with Bland's anti-cycling rule is entirely adequate.

use num_traits::{One, Signed, Zero};

use crate::semiring::Rat;

/// Outcome of the feasibility question.
#[derive(Debug, Clone)]
pub enum Feasibility {
    /// A nonnegative solution exists.
    Feasible,
    /// No solution; `farkas` certifies it: `farkas^T A <= 0`, `farkas^T b > 0`.
    Infeasible { farkas: Vec<Rat> },
}

/// Decides `exists lambda >= 0 : A lambda = b` for a dense row-major `A`.
///
/// `rows[i]` is the i-th equality constraint; all rows must have equal length.
pub fn equality_feasible(rows: &[Vec<Rat>], b: &[Rat]) -> Feasibility {
    let m = rows.len();
    assert_eq!(m, b.len(), "one right-hand side per row");
    let k = rows.first().map_or(0, Vec::len);
    debug_assert!(rows.iter().all(|r| r.len() == k));

    // Normalize to b >= 0, remembering which rows were flipped so the Farkas
    // vector can be mapped back to the original orientation.
    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let mut rhs: Vec<Rat> = b.to_vec();
    let mut flipped = vec![false; m];
    for i in 0..m {
        if rhs[i].is_negative() {
            flipped[i] = true;
            rhs[i] = -rhs[i].clone();
            for v in &mut a[i] {
                *v = -v.clone();
            }
        }
    }

    // Phase-1 tableau over columns [structural(k) | artificial(m)], minimizing
    // the sum of artificials. `tab[i]` holds the current row coefficients and
    // `rhs[i]` the current basic value; basis[i] is the column basic in row i.
    let total = k + m;
    let mut tab: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut row = Vec::with_capacity(total);
            row.extend(a[i].iter().cloned());
            for j in 0..m {
                row.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            row
        })
        .collect();
    let mut basis: Vec<usize> = (k..total).collect();

    // Reduced costs r_j = c_j - sum_i over basic rows; with all-artificial
    // basis this is r_j = -sum_i tab[i][j] for structural j, 0 for artificial.
    let mut reduced: Vec<Rat> = (0..total)
        .map(|j| {
            if j < k {
                -tab.iter().map(|row| row[j].clone()).sum::<Rat>()
            } else {
                Rat::zero()
            }
        })
        .collect();
    let mut objective: Rat = -rhs.iter().cloned().sum::<Rat>();

    loop {
        // Bland's rule: entering column is the smallest index with negative
        // reduced cost.
        let Some(enter) = (0..total).find(|&j| reduced[j].is_negative()) else {
            break;
        };
        // Ratio test; Bland ties broken by smallest basic column index.
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = &rhs[i] / &tab[i][enter];
                let better = match &best {
                    None => true,
                    Some(cur) => {
                        ratio < *cur || (ratio == *cur && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(pivot_row) = leave else {
            // Phase-1 objective is bounded below by zero, so an unbounded
            // direction cannot occur.
            unreachable!("phase-1 simplex cannot be unbounded");
        };

        // Pivot.
        let pivot = tab[pivot_row][enter].clone();
        for v in &mut tab[pivot_row] {
            *v = &*v / &pivot;
        }
        rhs[pivot_row] = &rhs[pivot_row] / &pivot;
        for i in 0..m {
            if i != pivot_row && !tab[i][enter].is_zero() {
                let factor = tab[i][enter].clone();
                for j in 0..total {
                    let delta = &factor * &tab[pivot_row][j];
                    tab[i][j] = &tab[i][j] - &delta;
                }
                let delta = &factor * &rhs[pivot_row];
                rhs[i] = &rhs[i] - &delta;
            }
        }
        if !reduced[enter].is_zero() {
            let factor = reduced[enter].clone();
            for j in 0..total {
                let delta = &factor * &tab[pivot_row][j];
                reduced[j] = &reduced[j] - &delta;
            }
            let delta = &factor * &rhs[pivot_row];
            objective = &objective - &delta;
        }
        basis[pivot_row] = enter;
    }

    // Optimal value of the phase-1 objective is -objective accumulated above;
    // we tracked z such that objective = -(current sum of artificials).
    if objective.is_zero() {
        Feasibility::Feasible
    } else {
        // Simplex multipliers: y_j = c_{art_j} - reduced[art_j] = 1 - r_{k+j}
        // for the normalized system; undo the row flips afterwards.
        let mut farkas: Vec<Rat> = (0..m)
            .map(|i| Rat::one() - reduced[k + i].clone())
            .collect();
        for i in 0..m {
            if flipped[i] {
                farkas[i] = -farkas[i].clone();
            }
        }
        debug_assert!(verify_farkas(rows, b, &farkas));
        Feasibility::Infeasible { farkas }
    }
}

/// Direct check of the Farkas conditions against the original data.
pub fn verify_farkas(rows: &[Vec<Rat>], b: &[Rat], y: &[Rat]) -> bool {
    let k = rows.first().map_or(0, Vec::len);
    let yb: Rat = y.iter().zip(b).map(|(yi, bi)| yi * bi).sum();
    if !yb.is_positive() {
        return false;
    }
    (0..k).all(|j| {
        let col: Rat = y.iter().zip(rows).map(|(yi, row)| yi * &row[j]).sum();
        !col.is_positive()
    })
}
