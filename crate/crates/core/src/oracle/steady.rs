//! Steady state of a generator as a bordered linear system: the ρ11 row of
//! L(ρ) = 0 is replaced by the trace constraint.

use num_complex::Complex;

use crate::error::Result;
use crate::oracle::generator::{idx, Superoperator, DIM};
use crate::oracle::linalg::Lu;
use crate::oracle::model::LEVELS;
use crate::oracle::state::DensityState;
use crate::scalar::Real;

/// Pivot threshold of the bordered system relative to its largest entry,
/// in units of machine epsilon.
const DEGENERACY_EPSILONS: f64 = 1e3 * DIM as f64;

/// Factored bordered system, reusable for the steady state and for
/// traceless perturbation solves against the same generator.
#[derive(Debug, Clone)]
pub struct SteadyStateSolver<T> {
    lu: Lu<T>,
    border_scale: T,
}

impl<T: Real> SteadyStateSolver<T> {
    pub fn new(l: &Superoperator<T>) -> Result<Self> {
        let mut a = l.matrix.clone();
        let border_scale = {
            let m = a.max_abs();
            if m > T::zero() {
                m
            } else {
                T::one()
            }
        };
        let trace_row = a.row_mut(idx(0, 0));
        trace_row.fill(Complex::new(T::zero(), T::zero()));
        for k in 0..LEVELS {
            trace_row[idx(k, k)] = Complex::new(border_scale, T::zero());
        }
        let lu = Lu::factor(a, T::lit(DEGENERACY_EPSILONS) * T::epsilon())?;
        Ok(Self { lu, border_scale })
    }

    /// Unit-trace ρ with L(ρ) = 0.
    pub fn steady_state(&self) -> DensityState<T> {
        let mut b = vec![Complex::new(T::zero(), T::zero()); DIM];
        b[idx(0, 0)] = Complex::new(self.border_scale, T::zero());
        DensityState::from_vec(&self.lu.solve(&b))
    }

    /// Traceless x with L(x) = rhs, assuming rhs is itself traceless (the
    /// ρ11 component of rhs is dropped).
    pub fn solve_traceless(&self, rhs: &DensityState<T>) -> DensityState<T> {
        let mut b = rhs.to_vec();
        b[idx(0, 0)] = Complex::new(T::zero(), T::zero());
        DensityState::from_vec(&self.lu.solve(&b))
    }

    /// Ratio of largest to smallest LU pivot.
    pub fn pivot_ratio(&self) -> T {
        self.lu.pivot_ratio
    }
}

pub fn steady_state<T: Real>(l: &Superoperator<T>) -> Result<DensityState<T>> {
    Ok(SteadyStateSolver::new(l)?.steady_state())
}
