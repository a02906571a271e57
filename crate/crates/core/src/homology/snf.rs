use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let data = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        Self { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(src, j) * q;
            self.data[dst * self.cols + j] -= v;
        }
    }

    /// col[dst] -= q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, src) * q;
            self.data[i * self.cols + dst] -= v;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Diagonal of the Smith normal form, `d₁ | d₂ | …`, of length
/// `min(rows, cols)`, together with the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    pub fn nonzero(&self) -> &[BigInt] {
        &self.diagonal[..self.rank]
    }
}

fn smallest_pivot(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows {
        for j in t..m.cols {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < m.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smith normal form by elimination, always pivoting on the entry of least
/// absolute value in the remaining block.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut a = m.clone();
    let size = a.rows.min(a.cols);
    let mut t = 0;
    while t < size {
        let Some((pi, pj)) = smallest_pivot(&a, t) else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let p = a.get(t, t).clone();
            let mut restart = false;
            for i in t + 1..a.rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_floor(&p);
                a.row_axpy(i, t, &q);
                if !a.get(i, t).is_zero() {
                    restart = true;
                }
            }
            for j in t + 1..a.cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).div_floor(&p);
                a.col_axpy(j, t, &q);
                if !a.get(t, j).is_zero() {
                    restart = true;
                }
            }
            if restart {
                // a smaller remainder appeared in row or column t
                let (pi, pj) = smallest_pivot_cross(&a, t);
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }
            // the pivot must divide the remaining block
            let bad = (t + 1..a.rows)
                .flat_map(|i| (t + 1..a.cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a.get(i, j).is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    let minus_one = BigInt::from(-1);
                    a.row_axpy(t, i, &minus_one);
                }
                None => break,
            }
        }
        t += 1;
    }
    let diagonal: Vec<BigInt> = (0..size).map(|k| a.get(k, k).abs()).collect();
    let rank = diagonal.iter().take_while(|d| !d.is_zero()).count();
    let form = SmithForm { diagonal, rank };
    assert!(is_divisibility_chain(&form.diagonal), "Smith form lost the divisibility chain");
    form
}

// Smallest nonzero entry of row t and column t (beyond the pivot included).
fn smallest_pivot_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut best_v = a.get(t, t).abs();
    for i in t + 1..a.rows {
        let v = a.get(i, t).abs();
        if !v.is_zero() && v < best_v {
            best = (i, t);
            best_v = v;
        }
    }
    for j in t + 1..a.cols {
        let v = a.get(t, j).abs();
        if !v.is_zero() && v < best_v {
            best = (t, j);
            best_v = v;
        }
    }
    best
}

/// Nonzero entries divide their successors, and zeros only trail.
pub fn is_divisibility_chain(diag: &[BigInt]) -> bool {
    let nz = diag.iter().take_while(|d| !d.is_zero()).count();
    diag[nz..].iter().all(Zero::is_zero)
        && diag[..nz].windows(2).all(|w| w[1].is_multiple_of(&w[0]))
}
