//! Exact dense linear algebra over a `FieldSpec`.
//!
//! Everything here reduces to Gauss-Jordan elimination with exact scalars.
//! Reduced row echelon form is canonical (pivots 1, pivot columns cleared,
//! rows ordered by pivot, zero rows dropped), so two row spaces are equal
//! iff their RREFs are identical.

use crate::field::{FieldElement, FieldSpec};

pub type Row = Vec<FieldElement>;

/// In-place reduced row echelon form; returns the pivot columns.
pub fn rref(rows: &mut Vec<Row>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        for c in &mut rows[rank] {
            *c = &*c * &inv;
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for j in 0..ncols {
                    let t = &factor * &rows[rank][j];
                    rows[i][j] = &rows[i][j] - &t;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

pub fn rank(mut rows: Vec<Row>) -> usize {
    rref(&mut rows).len()
}

/// Basis of the solution space of `rows * x = 0` in `ncols` unknowns.
///
/// One basis vector per free column, in ascending column order, each with a
/// 1 in its free column; this form is canonical for the given system.
pub fn kernel_basis(spec: FieldSpec, rows: &[Row], ncols: usize) -> Vec<Row> {
    let mut mat: Vec<Row> = rows.to_vec();
    let pivots = rref(&mut mat);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![FieldElement::zero(spec); ncols];
        v[free] = FieldElement::one(spec);
        for (row, &p) in mat.iter().zip(&pivots) {
            v[p] = -&row[free];
        }
        basis.push(v);
    }
    basis
}

/// Reduces `v` against RREF rows in place; afterwards `v` is zero iff the
/// original vector lay in their row space.
pub fn reduce_vector(rows: &[Row], pivots: &[usize], v: &mut Row) {
    for (row, &p) in rows.iter().zip(pivots) {
        if v[p].is_zero() {
            continue;
        }
        let factor = v[p].clone();
        for j in 0..v.len() {
            let t = &factor * &row[j];
            v[j] = &v[j] - &t;
        }
    }
}

pub fn row_spaces_equal(a: &[Row], b: &[Row]) -> bool {
    let mut ra = a.to_vec();
    let mut rb = b.to_vec();
    rref(&mut ra);
    rref(&mut rb);
    ra == rb
}

/// Solves `A x = b` where `cols` are the columns of `A`. Returns `None` when
/// the system is inconsistent. With independent columns the solution is the
/// unique coordinate vector of `b` in their span.
pub fn solve_columns(spec: FieldSpec, cols: &[Row], b: &Row) -> Option<Vec<FieldElement>> {
    let nrows = b.len();
    debug_assert!(cols.iter().all(|c| c.len() == nrows));
    let n = cols.len();
    let mut aug: Vec<Row> = (0..nrows)
        .map(|i| {
            let mut row: Row = cols.iter().map(|c| c[i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![FieldElement::zero(spec); n];
    for (row, &p) in aug.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}
