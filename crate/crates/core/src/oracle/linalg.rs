//! Dense complex LU with partial pivoting.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{Cplx, Real};

/// Square complex matrix, row major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix<T> {
    n: usize,
    data: Vec<Cplx<T>>,
}

impl<T: Real> CMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex::zero(); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Cplx<T> {
        self.data[r * self.n + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Cplx<T>) {
        self.data[r * self.n + c] = v;
    }

    #[inline]
    pub fn add(&mut self, r: usize, c: usize, v: Cplx<T>) {
        self.data[r * self.n + c] = self.data[r * self.n + c] + v;
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [Cplx<T>] {
        let n = self.n;
        &mut self.data[r * n..(r + 1) * n]
    }

    pub fn mul_vec(&self, x: &[Cplx<T>]) -> Vec<Cplx<T>> {
        assert_eq!(x.len(), self.n);
        self.data
            .chunks_exact(self.n)
            .map(|row| {
                row.iter()
                    .zip(x)
                    .fold(Complex::zero(), |acc, (a, b)| acc + *a * *b)
            })
            .collect()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, z| m.max(z.norm()))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| z.is_zero())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| *a - *b)
                .collect(),
        }
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| *a + *b)
                .collect(),
        }
    }
}

/// LU factors of a matrix, PA = LU.
#[derive(Debug, Clone)]
pub struct Lu<T> {
    lu: CMatrix<T>,
    perm: Vec<usize>,
    /// max |pivot| / min |pivot|, a cheap conditioning indicator.
    pub pivot_ratio: T,
}

impl<T: Real> Lu<T> {
    /// Factors `a`; fails when a pivot drops below `rel_threshold·max|a|`.
    pub fn factor(mut a: CMatrix<T>, rel_threshold: T) -> Result<Self> {
        let n = a.n;
        let threshold = rel_threshold * a.max_abs();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut pmax = T::zero();
        let mut pmin = T::infinity();
        for k in 0..n {
            let (p, best) = (k..n)
                .map(|r| (r, a.get(r, k).norm()))
                .fold((k, -T::one()), |acc, x| if x.1 > acc.1 { x } else { acc });
            if !(best > threshold) {
                return Err(Error::DegenerateSteadyState {
                    pivot: best.to_f64().unwrap_or(f64::NAN),
                    threshold: threshold.to_f64().unwrap_or(f64::NAN),
                });
            }
            pmax = pmax.max(best);
            pmin = pmin.min(best);
            if p != k {
                for c in 0..n {
                    a.data.swap(k * n + c, p * n + c);
                }
                perm.swap(k, p);
            }
            let pivot = a.get(k, k);
            for r in k + 1..n {
                let f = a.get(r, k) / pivot;
                a.set(r, k, f);
                if f.is_zero() {
                    continue;
                }
                for c in k + 1..n {
                    let v = a.get(r, c) - f * a.get(k, c);
                    a.set(r, c, v);
                }
            }
        }
        Ok(Self {
            lu: a,
            perm,
            pivot_ratio: pmax / pmin,
        })
    }

    pub fn solve(&self, b: &[Cplx<T>]) -> Vec<Cplx<T>> {
        let n = self.lu.n;
        assert_eq!(b.len(), n);
        let mut x: Vec<Cplx<T>> = self.perm.iter().map(|&p| b[p]).collect();
        for r in 0..n {
            let mut acc = x[r];
            for (c, &xc) in x[..r].iter().enumerate() {
                acc = acc - self.lu.get(r, c) * xc;
            }
            x[r] = acc;
        }
        for r in (0..n).rev() {
            let mut acc = x[r];
            for (c, &xc) in x.iter().enumerate().skip(r + 1) {
                acc = acc - self.lu.get(r, c) * xc;
            }
            x[r] = acc / self.lu.get(r, r);
        }
        x
    }
}
