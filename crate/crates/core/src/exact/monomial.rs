use serde::{Deserialize, Serialize};

use super::{DenseMatrix, Rational};
use crate::{Error, Result};

/// Signed permutation matrix: column `j` holds a single `sign[j]` in row `row[j]`.
///
/// Products, Kronecker products, transposes and inverses stay monomial and
/// cost `O(dim)`. Entries other than -1, 0, +1 are unrepresentable.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "MonomialWire", into = "MonomialWire")]
pub struct MonomialMatrix {
    row: Vec<u32>,
    sign: Vec<i8>,
}

#[derive(Serialize, Deserialize)]
struct MonomialWire {
    dim: usize,
    cols: Vec<(u32, i8)>,
}

impl MonomialMatrix {
    pub fn identity(dim: usize) -> MonomialMatrix {
        MonomialMatrix { row: (0..dim as u32).collect(), sign: vec![1; dim] }
    }

    /// Builds from `(row, sign)` per column, checking the permutation invariant.
    pub fn new(cols: Vec<(u32, i8)>) -> Result<MonomialMatrix> {
        let dim = cols.len();
        let mut seen = vec![false; dim];
        for &(r, s) in &cols {
            let r = r as usize;
            if r >= dim || seen[r] {
                return Err(Error::Monomial(format!("row {r} is out of range or repeated")));
            }
            if s != 1 && s != -1 {
                return Err(Error::Monomial(format!("sign {s} is not +1 or -1")));
            }
            seen[r] = true;
        }
        let (row, sign) = cols.into_iter().unzip();
        Ok(MonomialMatrix { row, sign })
    }

    /// Converts a dense matrix, failing unless it is a signed permutation.
    pub fn from_dense(m: &DenseMatrix) -> Result<MonomialMatrix> {
        if m.rows() != m.cols() {
            return Err(Error::Monomial("not square".into()));
        }
        let mut cols = Vec::with_capacity(m.cols());
        for j in 0..m.cols() {
            let mut hit = None;
            for i in 0..m.rows() {
                let v = &m[(i, j)];
                if v.is_zero() {
                    continue;
                }
                let s = match v.to_i64() {
                    Some(1) => 1,
                    Some(-1) => -1,
                    _ => return Err(Error::Monomial(format!("entry {v} at ({i},{j})"))),
                };
                if hit.replace((i as u32, s)).is_some() {
                    return Err(Error::Monomial(format!("column {j} has several nonzeros")));
                }
            }
            cols.push(hit.ok_or_else(|| Error::Monomial(format!("column {j} is zero")))?);
        }
        MonomialMatrix::new(cols)
    }

    pub fn dim(&self) -> usize {
        self.row.len()
    }

    /// `(row, sign)` for every column in order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.row.iter().zip(&self.sign).map(|(&r, &s)| (r as usize, s))
    }

    /// `(row, sign)` of column `j`.
    #[inline]
    pub fn col(&self, j: usize) -> (usize, i8) {
        (self.row[j] as usize, self.sign[j])
    }

    /// Entry `(i, j)` as -1, 0 or +1.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        if self.row[j] as usize == i {
            self.sign[j]
        } else {
            0
        }
    }

    pub fn mul(&self, other: &MonomialMatrix) -> Result<MonomialMatrix> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!("monomial {} * {}", self.dim(), other.dim())));
        }
        let (row, sign) = other.entries().map(|(r, s)| (self.row[r], self.sign[r] * s)).unzip();
        Ok(MonomialMatrix { row, sign })
    }

    /// Kronecker product with `self`-index major ordering.
    pub fn kron(&self, other: &MonomialMatrix) -> MonomialMatrix {
        let n = other.dim();
        let mut row = Vec::with_capacity(self.dim() * n);
        let mut sign = Vec::with_capacity(self.dim() * n);
        for (ra, sa) in self.entries() {
            for (rb, sb) in other.entries() {
                row.push((ra * n + rb) as u32);
                sign.push(sa * sb);
            }
        }
        MonomialMatrix { row, sign }
    }

    pub fn transpose(&self) -> MonomialMatrix {
        let mut row = vec![0u32; self.dim()];
        let mut sign = vec![0i8; self.dim()];
        for (j, (r, s)) in self.entries().enumerate() {
            row[r] = j as u32;
            sign[r] = s;
        }
        MonomialMatrix { row, sign }
    }

    /// Inverse; signed permutations are orthogonal.
    pub fn inverse(&self) -> MonomialMatrix {
        self.transpose()
    }

    pub fn neg(&self) -> MonomialMatrix {
        MonomialMatrix { row: self.row.clone(), sign: self.sign.iter().map(|s| -s).collect() }
    }

    /// Multiplies by a scalar; only ±1 keep the matrix monomial.
    pub fn scaled(&self, s: i64) -> Result<MonomialMatrix> {
        match s {
            1 => Ok(self.clone()),
            -1 => Ok(self.neg()),
            _ => Err(Error::Monomial(format!("scaling by {s} leaves the signed permutations"))),
        }
    }

    /// `Some(s)` when `self = s * I`.
    pub fn as_scalar(&self) -> Option<i8> {
        let s = *self.sign.first()?;
        self.entries().enumerate().all(|(j, (r, t))| r == j && t == s).then_some(s)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().enumerate().all(|(j, (r, _))| r == j)
    }

    /// `Some(+1)` if symmetric, `Some(-1)` if antisymmetric.
    pub fn symmetry(&self) -> Option<i8> {
        let t = self.transpose();
        if t == *self {
            Some(1)
        } else if t == self.neg() {
            Some(-1)
        } else {
            None
        }
    }

    /// `self * x`.
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim(), "vector length");
        let mut y = vec![Rational::ZERO; x.len()];
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            let (r, s) = self.col(j);
            y[r] = if s > 0 { xj.clone() } else { -xj };
        }
        y
    }

    /// `selfᵀ * x`.
    pub fn apply_transpose(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim(), "vector length");
        self.entries().map(|(r, s)| if s > 0 { x[r].clone() } else { -&x[r] }).collect()
    }

    /// `xᵀ * self * y`.
    pub fn bilinear(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut acc = Rational::ZERO;
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let (r, s) = self.col(j);
            let xr = &x[r];
            if xr.is_zero() {
                continue;
            }
            let t = xr * yj;
            if s > 0 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        acc
    }

    /// Conjugates by a basis permutation: new basis vector `k` is old `perm[k]`.
    pub fn permute_basis(&self, perm: &[usize]) -> MonomialMatrix {
        let mut inv = vec![0usize; perm.len()];
        for (k, &old) in perm.iter().enumerate() {
            inv[old] = k;
        }
        let (row, sign) = perm
            .iter()
            .map(|&old| {
                let (r, s) = self.col(old);
                (inv[r] as u32, s)
            })
            .unzip();
        MonomialMatrix { row, sign }
    }
}

impl From<MonomialMatrix> for MonomialWire {
    fn from(m: MonomialMatrix) -> Self {
        MonomialWire { dim: m.dim(), cols: m.row.into_iter().zip(m.sign).collect() }
    }
}

impl TryFrom<MonomialWire> for MonomialMatrix {
    type Error = Error;
    fn try_from(w: MonomialWire) -> Result<Self> {
        if w.cols.len() != w.dim {
            return Err(Error::Monomial(format!("dim {} with {} columns", w.dim, w.cols.len())));
        }
        MonomialMatrix::new(w.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;
    use proptest::prelude::*;

    pub(crate) fn eps() -> MonomialMatrix {
        MonomialMatrix::new(vec![(1, 1), (0, -1)]).unwrap()
    }

    #[test]
    fn epsilon_squares_to_minus_identity() {
        let e = eps();
        let sq = e.mul(&e).unwrap();
        assert_eq!(sq, MonomialMatrix::new(vec![(0, -1), (1, -1)]).unwrap());
        assert_eq!(sq.as_scalar(), Some(-1));
        assert_eq!(e.symmetry(), Some(-1));
    }

    #[test]
    fn kron_of_epsilon_with_identity_squares_to_minus_i4() {
        let k = eps().kron(&MonomialMatrix::identity(2));
        assert_eq!(k.dim(), 4);
        assert_eq!(k.mul(&k).unwrap().as_scalar(), Some(-1));
    }

    #[test]
    fn kron_identity_left_is_block_diagonal() {
        let k = MonomialMatrix::identity(2).kron(&eps());
        let d = DenseMatrix::from(&k);
        let e = DenseMatrix::from(&eps());
        for blk in 0..2 {
            for i in 0..2 {
                for j in 0..2 {
                    assert_eq!(d[(2 * blk + i, 2 * blk + j)], e[(i, j)]);
                    assert!(d[(2 * blk + i, 2 * (1 - blk) + j)].is_zero());
                }
            }
        }
        let big = MonomialMatrix::identity(16).kron(&eps());
        assert_eq!(big.dim(), 32);
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(MonomialMatrix::new(vec![(0, 1), (0, 1)]).is_err());
        assert!(MonomialMatrix::new(vec![(0, 2)]).is_err());
        assert!(eps().scaled(2).is_err());
        let bad = DenseMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        assert!(MonomialMatrix::from_dense(&bad).is_err());
        assert!(eps().mul(&MonomialMatrix::identity(3)).is_err());
    }

    #[test]
    fn serde_wire_format() {
        let s = serde_json::to_string(&eps()).unwrap();
        assert_eq!(s, r#"{"dim":2,"cols":[[1,1],[0,-1]]}"#);
        assert_eq!(serde_json::from_str::<MonomialMatrix>(&s).unwrap(), eps());
        assert!(serde_json::from_str::<MonomialMatrix>(r#"{"dim":2,"cols":[[0,1],[0,1]]}"#).is_err());
    }

    pub(crate) fn arb_monomial(dim: usize) -> impl Strategy<Value = MonomialMatrix> {
        (Just((0..dim as u32).collect::<Vec<_>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), dim))
            .prop_map(|(perm, signs)| {
                MonomialMatrix::new(perm.into_iter().zip(signs).map(|(r, s)| (r, if s { 1 } else { -1 })).collect())
                    .unwrap()
            })
    }

    proptest! {
        #[test]
        fn agrees_with_dense(a in arb_monomial(6), b in arb_monomial(6), c in arb_monomial(2)) {
            let (da, db) = (DenseMatrix::from(&a), DenseMatrix::from(&b));
            prop_assert_eq!(DenseMatrix::from(&a.mul(&b).unwrap()), da.mul(&db).unwrap());
            prop_assert_eq!(DenseMatrix::from(&a.kron(&c)), da.kron(&DenseMatrix::from(&c)));
            prop_assert_eq!(DenseMatrix::from(&a.transpose()), da.transpose());
            prop_assert_eq!(a.mul(&a.inverse()).unwrap().as_scalar(), Some(1));
            let x: Vec<_> = (0..6).map(|i| int(i * i - 7)).collect();
            prop_assert_eq!(a.apply(&x), da.mul_vec(&x).unwrap());
            prop_assert_eq!(a.apply_transpose(&x), da.transpose().mul_vec(&x).unwrap());
            // closure: reconverting the dense product succeeds
            prop_assert!(MonomialMatrix::from_dense(&da.mul(&db).unwrap()).is_ok());
        }

        #[test]
        fn associativity(a in arb_monomial(5), b in arb_monomial(5), c in arb_monomial(5)) {
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        }
    }
}
