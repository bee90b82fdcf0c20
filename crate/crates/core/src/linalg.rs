//! Dense matrices over [`CycNum`].

use std::fmt;

use num_complex::Complex64;

use crate::cyclo::CycNum;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    m: u32,
    data: Vec<CycNum>,
}

impl Mat {
    pub fn zeros(m: u32, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            m,
            data: vec![CycNum::zero(m); rows * cols],
        }
    }

    pub fn identity(m: u32, n: usize) -> Self {
        let mut a = Self::zeros(m, n, n);
        for i in 0..n {
            a.set(i, i, CycNum::one(m));
        }
        a
    }

    pub fn from_fn(
        m: u32,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycNum,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            rows,
            cols,
            m,
            data,
        }
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut r = Mat::zeros(self.m, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = r.get(i, j) + &(a * b);
                        r.set(i, j, v);
                    }
                }
            }
        }
        r
    }

    pub fn add(&self, o: &Mat) -> Mat {
        Mat::from_fn(self.m, self.rows, self.cols, |i, j| {
            self.get(i, j) + o.get(i, j)
        })
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        Mat::from_fn(self.m, self.rows, self.cols, |i, j| {
            self.get(i, j) - o.get(i, j)
        })
    }

    pub fn scale(&self, c: &CycNum) -> Mat {
        Mat::from_fn(self.m, self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.m, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> CycNum {
        let mut s = CycNum::zero(self.m);
        for i in 0..self.rows.min(self.cols) {
            s += self.get(i, i);
        }
        s
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Mat> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut b = Mat::identity(self.m, n);
        for c in 0..n {
            let p = (c..n)
                .find(|&r| !a.get(r, c).is_zero())
                .ok_or_else(|| Error::Singular(format!("column {c}")))?;
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                    b.data.swap(p * n + j, c * n + j);
                }
            }
            let inv = a.get(c, c).inv()?;
            for j in 0..n {
                let v = a.get(c, j) * &inv;
                a.set(c, j, v);
                let v = b.get(c, j) * &inv;
                b.set(c, j, v);
            }
            for r in 0..n {
                if r == c || a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c).clone();
                for j in 0..n {
                    let v = a.get(r, j) - &(&f * a.get(c, j));
                    a.set(r, j, v);
                    let v = b.get(r, j) - &(&f * b.get(c, j));
                    b.set(r, j, v);
                }
            }
        }
        Ok(b)
    }

    pub fn to_complex(&self) -> Vec<Vec<Complex64>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).to_complex())
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over Q(z_{})", self.rows, self.cols, self.m)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.get(i, j).poly_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Float matrix product, used by unitarity checks.
pub fn cmul(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum())
                .collect()
        })
        .collect()
}
