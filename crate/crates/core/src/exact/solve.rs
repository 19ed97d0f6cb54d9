use serde::Serialize;

use super::{DenseMatrix, Rational};
use crate::{Error, Result};

/// Result of [`solve_linear`]: one solution or a proof that none exists,
/// together with a basis of the homogeneous solution space of `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearSolve {
    pub outcome: SolveOutcome,
    pub nullspace: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveOutcome {
    Solution(Vec<Rational>),
    /// Sparse left multiplier `y` (pairs of row index and weight) with
    /// `yᵀA = 0` and `yᵀb ≠ 0`.
    Infeasible(Vec<(usize, Rational)>),
}

impl LinearSolve {
    pub fn solution(&self) -> Option<&[Rational]> {
        match &self.outcome {
            SolveOutcome::Solution(x) => Some(x),
            SolveOutcome::Infeasible(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&[(usize, Rational)]> {
        match &self.outcome {
            SolveOutcome::Infeasible(y) => Some(y),
            SolveOutcome::Solution(_) => None,
        }
    }
}

struct Pivot {
    col: usize,
    coeffs: Vec<Rational>,
    rhs: Rational,
    combo: Vec<(usize, Rational)>,
}

/// Exact Gaussian elimination of `A x = b` over the rationals.
///
/// Rows are inserted one at a time against the current echelon basis, and
/// each basis row carries the combination of original rows that produced it.
/// Tall systems with few columns therefore cost `O(rows * rank * cols)` and
/// certificates stay as small as the rank.
pub fn solve_linear(a: &DenseMatrix, b: &[Rational]) -> Result<LinearSolve> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch(format!("{} rows with rhs of length {}", a.rows(), b.len())));
    }
    let cols = a.cols();
    let mut pivots: Vec<Pivot> = Vec::new();
    let mut certificate: Option<Vec<(usize, Rational)>> = None;

    for (i, bi) in b.iter().enumerate() {
        let row = a.row(i);
        if row.iter().all(Rational::is_zero) && bi.is_zero() {
            continue;
        }
        let mut coeffs = row.to_vec();
        let mut rhs = bi.clone();
        let mut combo = vec![(i, Rational::ONE)];
        for p in &pivots {
            if coeffs[p.col].is_zero() {
                continue;
            }
            let f = &coeffs[p.col] / &p.coeffs[p.col];
            for (c, pc) in coeffs.iter_mut().zip(&p.coeffs).skip(p.col) {
                if !pc.is_zero() {
                    *c -= &f * pc;
                }
            }
            rhs -= &f * &p.rhs;
            if certificate.is_none() {
                for (r, w) in &p.combo {
                    add_term(&mut combo, *r, &(-&f * w));
                }
            }
        }
        match coeffs.iter().position(|c| !c.is_zero()) {
            Some(col) => pivots.push(Pivot { col, coeffs, rhs, combo }),
            None if !rhs.is_zero() && certificate.is_none() => {
                combo.retain(|(_, w)| !w.is_zero());
                combo.sort_by_key(|(r, _)| *r);
                certificate = Some(combo);
            }
            None => {}
        }
    }

    // back substitution to reduced row echelon form
    pivots.sort_by_key(|p| p.col);
    for k in (0..pivots.len()).rev() {
        let inv = pivots[k].coeffs[pivots[k].col].recip();
        let p = &mut pivots[k];
        for c in p.coeffs.iter_mut() {
            *c *= &inv;
        }
        p.rhs *= &inv;
        let (head, tail) = pivots.split_at_mut(k);
        let pk = &tail[0];
        for q in head.iter_mut() {
            let f = q.coeffs[pk.col].clone();
            if f.is_zero() {
                continue;
            }
            for (c, pc) in q.coeffs.iter_mut().zip(&pk.coeffs) {
                if !pc.is_zero() {
                    *c -= &f * pc;
                }
            }
            q.rhs -= &f * &pk.rhs;
        }
    }

    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for p in &pivots {
            v[p.col] = true;
        }
        v
    };
    let nullspace = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![Rational::ZERO; cols];
            x[f] = Rational::ONE;
            for p in &pivots {
                x[p.col] = -&p.coeffs[f];
            }
            x
        })
        .collect();

    let outcome = match certificate {
        Some(y) => SolveOutcome::Infeasible(y),
        None => {
            let mut x = vec![Rational::ZERO; cols];
            for p in &pivots {
                x[p.col] = p.rhs.clone();
            }
            SolveOutcome::Solution(x)
        }
    };
    Ok(LinearSolve { outcome, nullspace })
}

fn add_term(combo: &mut Vec<(usize, Rational)>, row: usize, w: &Rational) {
    match combo.iter_mut().find(|(r, _)| *r == row) {
        Some((_, v)) => *v += w,
        None => combo.push((row, w.clone())),
    }
}

/// Checks `yᵀA = 0` and `yᵀb ≠ 0` exactly.
pub fn verify_certificate(a: &DenseMatrix, b: &[Rational], y: &[(usize, Rational)]) -> bool {
    let mut lhs = vec![Rational::ZERO; a.cols()];
    let mut rhs = Rational::ZERO;
    for (r, w) in y {
        if *r >= a.rows() {
            return false;
        }
        for (acc, v) in lhs.iter_mut().zip(a.row(*r)) {
            if !v.is_zero() {
                *acc += w * v;
            }
        }
        rhs += w * &b[*r];
    }
    lhs.iter().all(Rational::is_zero) && !rhs.is_zero()
}
