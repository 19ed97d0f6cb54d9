//! Exact scalars and the two matrix kinds used everywhere else.

mod dense;
mod monomial;
pub mod rational;
mod solve;

pub use dense::DenseMatrix;
pub use monomial::MonomialMatrix;
pub use rational::{int, ratio, Rational};
pub use solve::{solve_linear, verify_certificate, LinearSolve, SolveOutcome};

/// Dot product of two rational vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum()
}

/// `acc += s * x`, skipping zeros.
pub fn axpy(acc: &mut [Rational], s: &Rational, x: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (a, v) in acc.iter_mut().zip(x) {
        if !v.is_zero() {
            *a += s * v;
        }
    }
}
