use num_complex::Complex;

use crate::oracle::model::LEVELS;
use crate::scalar::{Cplx, Real};

/// 4×4 density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityState<T> {
    pub rho: [[Cplx<T>; LEVELS]; LEVELS],
}

impl<T: Real> DensityState<T> {
    pub fn zero() -> Self {
        Self {
            rho: [[Complex::new(T::zero(), T::zero()); LEVELS]; LEVELS],
        }
    }

    /// |k⟩⟨k| (0-based level index).
    pub fn pure_level(k: usize) -> Self {
        let mut s = Self::zero();
        s.rho[k][k] = Complex::new(T::one(), T::zero());
        s
    }

    pub fn from_vec(v: &[Cplx<T>]) -> Self {
        assert_eq!(v.len(), LEVELS * LEVELS);
        let mut s = Self::zero();
        for (k, z) in v.iter().enumerate() {
            s.rho[k / LEVELS][k % LEVELS] = *z;
        }
        s
    }

    pub fn to_vec(&self) -> Vec<Cplx<T>> {
        self.rho.iter().flat_map(|r| r.iter().copied()).collect()
    }

    pub fn trace(&self) -> Cplx<T> {
        (0..LEVELS).fold(Complex::new(T::zero(), T::zero()), |a, k| {
            a + self.rho[k][k]
        })
    }

    /// max |ρ_ij − conj(ρ_ji)|.
    pub fn hermiticity_error(&self) -> T {
        let mut e = T::zero();
        for i in 0..LEVELS {
            for j in 0..LEVELS {
                e = e.max((self.rho[i][j] - self.rho[j][i].conj()).norm());
            }
        }
        e
    }

    pub fn populations(&self) -> [T; LEVELS] {
        let mut p = [T::zero(); LEVELS];
        for (k, pk) in p.iter_mut().enumerate() {
            *pk = self.rho[k][k].re;
        }
        p
    }

    pub fn max_abs(&self) -> T {
        self.rho
            .iter()
            .flat_map(|r| r.iter())
            .fold(T::zero(), |m, z| m.max(z.norm()))
    }
}
