//! Exact linear algebra over the coefficient field.
//!
//! The interpolation constructors reduce to square linear solves whose entries
//! are rational functions (values of monomials at spectral points).  We run
//! Gaussian elimination directly in the field: every intermediate entry is a
//! gcd-reduced rational function, which keeps the heavy cancellations of these
//! structured matrices (fraction-free minors of the same systems expand into
//! enormous polynomials).  The determinant is the signed product of pivots,
//! which also powers the unisolvence checks.

use crate::error::Error;
use crate::field::FieldElement;
use crate::Result;

/// Outcome of a multi-right-hand-side solve: one solution vector per requested
/// column, plus the determinant of the coefficient matrix.
#[derive(Clone, Debug)]
pub struct LinearSolution {
    pub solutions: Vec<Vec<FieldElement>>,
    pub determinant: FieldElement,
}

struct Eliminated {
    /// Upper-triangular in the first n columns once `singular` is false.
    rows: Vec<Vec<FieldElement>>,
    /// Signed product of pivots; zero exactly when the matrix is singular.
    determinant: FieldElement,
    singular: bool,
}

fn entry_weight(e: &FieldElement) -> usize {
    e.numerator().num_terms() + e.denominator().num_terms()
}

/// In-field elimination on the n×(n+extra) augmented matrix.
fn eliminate(aug: &[Vec<FieldElement>], n: usize) -> Eliminated {
    let params = aug[0][0].params();
    let mut rows: Vec<Vec<FieldElement>> = aug.to_vec();
    let width = rows[0].len();
    let mut det = FieldElement::one(params);
    for k in 0..n {
        // Deterministic pivot: smallest entry by term count, ties to the
        // topmost row, so runs are reproducible and growth stays modest.
        let pivot_row = (k..n)
            .filter(|&r| !rows[r][k].is_zero())
            .min_by_key(|&r| (entry_weight(&rows[r][k]), r));
        let Some(r) = pivot_row else {
            return Eliminated {
                rows,
                determinant: FieldElement::zero(params),
                singular: true,
            };
        };
        if r != k {
            rows.swap(r, k);
            det = -&det;
        }
        det = &det * &rows[k][k];
        let pivot_inv = rows[k][k].recip().expect("pivot is nonzero");
        for i in k + 1..n {
            if rows[i][k].is_zero() {
                continue;
            }
            let factor = &rows[i][k] * &pivot_inv;
            for j in k + 1..width {
                if rows[k][j].is_zero() {
                    continue;
                }
                let sub = &rows[k][j] * &factor;
                rows[i][j] = &rows[i][j] - &sub;
            }
            rows[i][k] = FieldElement::zero(params);
        }
    }
    Eliminated {
        rows,
        determinant: det,
        singular: false,
    }
}

fn check_shape(matrix: &[Vec<FieldElement>], rhs_cols: &[Vec<FieldElement>]) -> Result<usize> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidArgument("matrix must be square".into()));
    }
    if rhs_cols.iter().any(|col| col.len() != n) {
        return Err(Error::InvalidArgument(
            "right-hand side length must match the matrix".into(),
        ));
    }
    Ok(n)
}

/// Determinant of a square matrix over the field; zero is a valid answer.
pub fn determinant(matrix: &[Vec<FieldElement>]) -> Result<FieldElement> {
    let n = check_shape(matrix, &[])?;
    if n == 0 {
        return Err(Error::InvalidArgument("empty matrix".into()));
    }
    Ok(eliminate(matrix, n).determinant)
}

/// Solves `matrix · x = col` for every column in `rhs_cols` with one shared
/// elimination.  Fails with `SingularSystem` when the matrix is singular.
pub fn solve_many(
    matrix: &[Vec<FieldElement>],
    rhs_cols: &[Vec<FieldElement>],
) -> Result<LinearSolution> {
    let n = check_shape(matrix, rhs_cols)?;
    if n == 0 {
        return Err(Error::InvalidArgument("empty matrix".into()));
    }
    let width = n + rhs_cols.len();
    let aug: Vec<Vec<FieldElement>> = (0..n)
        .map(|i| {
            let mut row = Vec::with_capacity(width);
            row.extend(matrix[i].iter().cloned());
            row.extend(rhs_cols.iter().map(|col| col[i].clone()));
            row
        })
        .collect();
    let el = eliminate(&aug, n);
    if el.singular {
        return Err(Error::SingularSystem(format!("{n}×{n} interpolation matrix")));
    }
    let determinant = el.determinant;
    let rows = el.rows;
    let mut solutions = Vec::with_capacity(rhs_cols.len());
    for c in 0..rhs_cols.len() {
        let mut x = vec![FieldElement::zero(matrix[0][0].params()); n];
        for i in (0..n).rev() {
            let mut acc = rows[i][n + c].clone();
            for j in i + 1..n {
                acc -= &(&rows[i][j] * &x[j]);
            }
            x[i] = acc.div(&rows[i][i])?;
        }
        solutions.push(x);
    }
    Ok(LinearSolution { solutions, determinant })
}
