//! Compact band storage and direct banded LU with partial pivoting.
//!
//! Row `r` of an `n x n` matrix with `kl` subdiagonals and `ku`
//! superdiagonals stores its band in a slice of width `kl + ku + 1`;
//! entry `(r, c)` lives at band position `c - r + kl`. Factorisation
//! follows the classic band-elimination scheme: pivot rows are searched
//! within the `kl` rows below the diagonal, so the upper storage width
//! never grows beyond the allocated band.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct BandedMatrix {
    n: usize,
    kl: usize,
    ku: usize,
    /// Row-major compact storage, width `kl + ku + 1`.
    data: Vec<f64>,
}

impl BandedMatrix {
    pub fn zeros(n: usize, kl: usize, ku: usize) -> Self {
        assert!(n > 0, "banded matrix needs at least one row");
        Self {
            n,
            kl,
            ku,
            data: vec![0.0; n * (kl + ku + 1)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kl(&self) -> usize {
        self.kl
    }

    pub fn ku(&self) -> usize {
        self.ku
    }

    fn width(&self) -> usize {
        self.kl + self.ku + 1
    }

    fn band_pos(&self, r: usize, c: usize) -> Option<usize> {
        let offset = c as isize - r as isize + self.kl as isize;
        if c < self.n && offset >= 0 && (offset as usize) < self.width() {
            Some(r * self.width() + offset as usize)
        } else {
            None
        }
    }

    pub fn add(&mut self, r: usize, c: usize, v: f64) {
        let pos = self.band_pos(r, c).unwrap_or_else(|| {
            panic!(
                "entry ({r}, {c}) outside band kl={} ku={}",
                self.kl, self.ku
            )
        });
        self.data[pos] += v;
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.band_pos(r, c).map_or(0.0, |pos| self.data[pos])
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        let mut y = vec![0.0; self.n];
        for (r, out) in y.iter_mut().enumerate() {
            let lo = r.saturating_sub(self.kl);
            let hi = (r + self.ku).min(self.n - 1);
            let mut acc = 0.0;
            for (c, value) in x.iter().enumerate().take(hi + 1).skip(lo) {
                acc += self.get(r, c) * value;
            }
            *out = acc;
        }
        y
    }

    /// Banded LU factorisation with partial pivoting. The matrix itself is
    /// left untouched (so residuals can be evaluated afterwards).
    pub fn factor(&self) -> Result<BandedLu> {
        let n = self.n;
        let kl = self.kl;
        let mm = self.width();
        let mut upper = self.data.clone();
        let mut lower = vec![0.0; n * kl.max(1)];
        let mut pivots = vec![0usize; n];

        // Left-edge rows: shift storage so position 0 holds the leftmost
        // in-matrix entry of each row.
        let mut l = kl;
        for i in 0..kl.min(n) {
            for j in (kl - i)..mm {
                upper[i * mm + j - l] = upper[i * mm + j];
            }
            l -= 1;
            for j in (mm - 1 - l)..mm {
                upper[i * mm + j] = 0.0;
            }
        }

        for k in 0..n {
            let window_end = (k + kl + 1).min(n);
            let mut pivot_row = k;
            let mut pivot_val = upper[k * mm];
            for j in (k + 1)..window_end {
                if upper[j * mm].abs() > pivot_val.abs() {
                    pivot_val = upper[j * mm];
                    pivot_row = j;
                }
            }
            pivots[k] = pivot_row;
            if pivot_val == 0.0 {
                return Err(Error::SingularSystem { node: k });
            }
            if pivot_row != k {
                for j in 0..mm {
                    upper.swap(k * mm + j, pivot_row * mm + j);
                }
            }
            for i in (k + 1)..window_end {
                let f = upper[i * mm] / upper[k * mm];
                lower[k * kl.max(1) + (i - k - 1)] = f;
                for j in 1..mm {
                    upper[i * mm + j - 1] = upper[i * mm + j] - f * upper[k * mm + j];
                }
                upper[i * mm + mm - 1] = 0.0;
            }
        }

        Ok(BandedLu {
            n,
            kl,
            mm,
            upper,
            lower,
            pivots,
        })
    }
}

/// Factorised band matrix ready for repeated right-hand sides.
#[derive(Debug, Clone)]
pub struct BandedLu {
    n: usize,
    kl: usize,
    mm: usize,
    upper: Vec<f64>,
    lower: Vec<f64>,
    pivots: Vec<usize>,
}

impl BandedLu {
    pub fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        assert_eq!(rhs.len(), self.n);
        let mut b = rhs.to_vec();
        let stride = self.kl.max(1);
        for k in 0..self.n {
            let ip = self.pivots[k];
            if ip != k {
                b.swap(k, ip);
            }
            let window_end = (k + self.kl + 1).min(self.n);
            for i in (k + 1)..window_end {
                b[i] -= self.lower[k * stride + (i - k - 1)] * b[k];
            }
        }
        let mut l = 1usize;
        for i in (0..self.n).rev() {
            let mut acc = b[i];
            for k in 1..l {
                acc -= self.upper[i * self.mm + k] * b[i + k];
            }
            b[i] = acc / self.upper[i * self.mm];
            if l < self.mm {
                l += 1;
            }
        }
        b
    }
}
