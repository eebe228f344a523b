//! Dense integer matrices with exact, overflow-checked elimination.
//!
//! Elimination uses unimodular row operations built from extended gcds, so
//! the echelon form is an integral (Hermite-style) reduction and the
//! accumulated transform stays invertible over `Z`.

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[i64]) -> Result<Vec<i64>> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(x).try_fold(0i64, |acc, (&a, &b)| {
                    a.checked_mul(b).and_then(|p| acc.checked_add(p)).ok_or(Error::Overflow)
                })
            })
            .collect()
    }

    /// Replaces rows `(p, q)` by `(a·p + b·q, c·p + d·q)`.
    fn combine_rows(&mut self, p: usize, q: usize, [a, b, c, d]: [i64; 4]) -> Result<()> {
        for k in 0..self.cols {
            let x = self[(p, k)];
            let y = self[(q, k)];
            if x == 0 && y == 0 {
                continue;
            }
            let lin = |s: i64, t: i64| -> Result<i64> {
                s.checked_mul(x)
                    .zip(t.checked_mul(y))
                    .and_then(|(u, v)| u.checked_add(v))
                    .ok_or(Error::Overflow)
            };
            let nx = lin(a, b)?;
            let ny = lin(c, d)?;
            self[(p, k)] = nx;
            self[(q, k)] = ny;
        }
        Ok(())
    }

    fn negate_row(&mut self, p: usize) {
        for v in &mut self.data[p * self.cols..(p + 1) * self.cols] {
            *v = -*v;
        }
    }

    fn swap_rows(&mut self, p: usize, q: usize) {
        if p == q {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(p * self.cols + k, q * self.cols + k);
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Row echelon form `E = U·M` with `U` unimodular. Pivots are positive and
/// entries above each pivot are reduced into `[0, pivot)`.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub form: IntMatrix,
    pub transform: IntMatrix,
    /// `pivots[k]` is the pivot column of row `k`; rows past `pivots.len()`
    /// are zero.
    pub pivots: Vec<usize>,
}

pub fn echelon(m: &IntMatrix) -> Result<Echelon> {
    let mut form = m.clone();
    let mut transform = IntMatrix::identity(m.rows);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        // gather the gcd of the column into `row`
        let Some(first) = (row..m.rows).find(|&i| form[(i, col)] != 0) else {
            continue;
        };
        form.swap_rows(row, first);
        transform.swap_rows(row, first);
        for i in row + 1..m.rows {
            let b = form[(i, col)];
            if b == 0 {
                continue;
            }
            let a = form[(row, col)];
            let g = a.extended_gcd(&b);
            // [x y; -b/g a/g] has determinant 1
            let ops = [g.x, g.y, -(b / g.gcd), a / g.gcd];
            form.combine_rows(row, i, ops)?;
            transform.combine_rows(row, i, ops)?;
        }
        if form[(row, col)] < 0 {
            form.negate_row(row);
            transform.negate_row(row);
        }
        let pivot = form[(row, col)];
        for i in 0..row {
            let q = Integer::div_floor(&form[(i, col)], &pivot);
            if q != 0 {
                sub_multiple(&mut form, i, row, q)?;
                sub_multiple(&mut transform, i, row, q)?;
            }
        }
        pivots.push(col);
        row += 1;
    }
    Ok(Echelon { form, transform, pivots })
}

/// `row_i -= q · row_p`.
fn sub_multiple(m: &mut IntMatrix, i: usize, p: usize, q: i64) -> Result<()> {
    for k in 0..m.cols {
        let v = m[(p, k)];
        if v != 0 {
            let nv =
                q.checked_mul(v).and_then(|qv| m[(i, k)].checked_sub(qv)).ok_or(Error::Overflow)?;
            m[(i, k)] = nv;
        }
    }
    Ok(())
}

pub fn rank(m: &IntMatrix) -> Result<usize> {
    Ok(echelon(m)?.pivots.len())
}

/// Precomputed solver for `A·x = b` over the integers.
///
/// Factors `Aᵀ` as `U·Aᵀ = E`, so `A·Uᵀ = Eᵀ` is column echelon. A solution
/// `y` of `Eᵀ·y = b` is found by forward substitution (zero on free
/// coordinates) and mapped back with `x = Uᵀ·y`. Any integral solution of
/// the original system yields one of the triangular system, so a failed
/// division means no integral solution exists.
#[derive(Clone, Debug)]
pub struct IntSolver {
    matrix: IntMatrix,
    ech: Echelon,
    back: IntMatrix,
}

impl IntSolver {
    pub fn new(a: &IntMatrix) -> Result<Self> {
        let ech = echelon(&a.transpose())?;
        let back = ech.transform.transpose();
        Ok(IntSolver { matrix: a.clone(), ech, back })
    }

    pub fn rank(&self) -> usize {
        self.ech.pivots.len()
    }

    pub fn solve(&self, b: &[i64]) -> Result<Vec<i64>> {
        assert_eq!(b.len(), self.matrix.rows());
        let e = &self.ech.form;
        let n = self.matrix.cols();
        let mut y = vec![0i64; n];
        for (k, &p) in self.ech.pivots.iter().enumerate() {
            // equation p: Σ_{k' ≤ k} E[k'][p] y_k' = b_p
            let mut rhs = b[p];
            for (kk, yk) in y.iter().enumerate().take(k) {
                let term = e[(kk, p)].checked_mul(*yk).ok_or(Error::Overflow)?;
                rhs = rhs.checked_sub(term).ok_or(Error::Overflow)?;
            }
            let pivot = e[(k, p)];
            if rhs % pivot != 0 {
                return Err(Error::NoIntegralSolution);
            }
            y[k] = rhs / pivot;
        }
        let x = self.back.mul_vec(&y)?;
        if self.matrix.mul_vec(&x)? != b {
            return Err(Error::NoIntegralSolution);
        }
        Ok(x)
    }
}
