//! Liouvillian superoperator dρ/dt = L(ρ) on the 16-dimensional space of
//! 4×4 density matrices, vectorized row major (ρ_ij ↦ 4i + j).

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::oracle::linalg::CMatrix;
use crate::oracle::model::{Coupling, LevelModel, LEVELS};
use crate::oracle::state::DensityState;
use crate::scalar::{Cplx, Real};

pub const DIM: usize = LEVELS * LEVELS;

#[inline]
pub(crate) fn idx(i: usize, j: usize) -> usize {
    LEVELS * i + j
}

#[derive(Debug, Clone, PartialEq)]
pub struct Superoperator<T> {
    pub matrix: CMatrix<T>,
}

impl<T: Real> Superoperator<T> {
    pub fn zero() -> Self {
        Self {
            matrix: CMatrix::zeros(DIM),
        }
    }

    /// −i[H, ·] for a Hamiltonian given over ħ.
    #[allow(clippy::needless_range_loop)]
    pub fn coherent(h: &[[Cplx<T>; LEVELS]; LEVELS]) -> Self {
        let mut m = CMatrix::zeros(DIM);
        let minus_i = Complex::new(T::zero(), -T::one());
        for i in 0..LEVELS {
            for j in 0..LEVELS {
                let row = idx(i, j);
                for k in 0..LEVELS {
                    // (Hρ)_ij = H_ik ρ_kj, (ρH)_ij = ρ_ik H_kj
                    if h[i][k] != Complex::new(T::zero(), T::zero()) {
                        m.add(row, idx(k, j), minus_i * h[i][k]);
                    }
                    if h[k][j] != Complex::new(T::zero(), T::zero()) {
                        m.add(row, idx(i, k), -minus_i * h[k][j]);
                    }
                }
            }
        }
        Self { matrix: m }
    }

    /// Population transfer plus coherence-wise damping −Γ(i,j)·ρ_ij.
    pub fn dissipative(model: &LevelModel<T>) -> Self {
        let mut m = CMatrix::zeros(DIM);
        let re = |x: T| Complex::new(x, T::zero());
        for d in &model.decays {
            m.add(idx(d.to, d.to), idx(d.from, d.from), re(d.rate));
            m.add(idx(d.from, d.from), idx(d.from, d.from), re(-d.rate));
        }
        for i in 0..LEVELS {
            for j in 0..LEVELS {
                if i != j {
                    m.add(idx(i, j), idx(i, j), re(-model.dephasing[i][j]));
                }
            }
        }
        Self { matrix: m }
    }

    pub fn apply(&self, rho: &DensityState<T>) -> DensityState<T> {
        DensityState::from_vec(&self.matrix.mul_vec(&rho.to_vec()))
    }

    pub fn plus(&self, other: &Self) -> Self {
        Self {
            matrix: self.matrix.sum(&other.matrix),
        }
    }
}

fn check_frame<T: Real>(couplings: &[Coupling<T>]) -> Result<()> {
    for c in couplings {
        if c.frame_residual != T::zero() && c.rabi != T::zero() {
            return Err(Error::InconsistentFrame(format!(
                "coupling {}–{} keeps a residual frequency {} rad/s",
                c.lower + 1,
                c.upper + 1,
                c.frame_residual
            )));
        }
    }
    Ok(())
}

/// Full generator of `model`.
pub fn build_generator<T: Real>(model: &LevelModel<T>) -> Result<Superoperator<T>> {
    check_frame(&model.couplings)?;
    let h = LevelModel::hamiltonian(Some(&model.energies), &model.couplings);
    Ok(Superoperator::coherent(&h).plus(&Superoperator::dissipative(model)))
}

/// Probe part of the generator: −i[H_probe, ·] with no level energies.
pub fn probe_generator<T: Real>(model: &LevelModel<T>) -> Result<Superoperator<T>> {
    check_frame(&model.couplings)?;
    let h = LevelModel::hamiltonian(None, model.probe_couplings());
    Ok(Superoperator::coherent(&h))
}
