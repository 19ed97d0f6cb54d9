use epalg::exact::{int, ratio, solve_linear, verify_certificate, DenseMatrix, MonomialMatrix, Rational};
use epalg::sample::Sampler;
use proptest::prelude::*;

fn eps() -> MonomialMatrix {
    MonomialMatrix::new(vec![(1, 1), (0, -1)]).unwrap()
}

#[test]
fn epsilon_squares_to_minus_identity() {
    let e = eps();
    let sq = e.mul(&e).unwrap();
    assert_eq!(sq, MonomialMatrix::new(vec![(0, -1), (1, -1)]).unwrap());
    assert_eq!(MonomialMatrix::identity(2).mul(&e).unwrap(), e);
}

#[test]
fn kron_shapes() {
    let e = eps();
    let m = e.kron(&MonomialMatrix::identity(2));
    assert_eq!(m.mul(&m).unwrap(), MonomialMatrix::identity(4).neg());
    let block = MonomialMatrix::identity(2).kron(&e);
    let dense = DenseMatrix::from(&block);
    assert_eq!(dense[(0, 1)], int(-1));
    assert_eq!(dense[(3, 2)], int(1));
    assert_eq!(dense[(0, 3)], int(0));
    assert_eq!(MonomialMatrix::identity(16).kron(&e).dim(), 32);
}

#[test]
fn dense_product_matches_schoolbook() {
    let mut s = Sampler::new(4);
    let a = DenseMatrix::from_fn(4, 4, |_, _| s.nonzero_ratio());
    let b = DenseMatrix::from_fn(4, 4, |_, _| s.nonzero_ratio());
    let p = a.mul(&b).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = Rational::ZERO;
            for k in 0..4 {
                acc += &a[(i, k)] * &b[(k, j)];
            }
            assert_eq!(p[(i, j)], acc);
        }
    }
}

#[test]
fn monomial_product_matches_dense() {
    let a = MonomialMatrix::new(vec![(2, 1), (0, -1), (1, -1)]).unwrap();
    let b = MonomialMatrix::new(vec![(1, -1), (2, 1), (0, 1)]).unwrap();
    let dense = DenseMatrix::from(&a).mul(&DenseMatrix::from(&b)).unwrap();
    assert_eq!(DenseMatrix::from(&a.mul(&b).unwrap()), dense);
}

#[test]
fn solve_identity_and_rank_deficient() {
    let b = vec![int(3), ratio(-1, 2)];
    let s = solve_linear(&DenseMatrix::identity(2), &b).unwrap();
    assert_eq!(s.solution().unwrap(), &b[..]);
    assert!(s.nullspace.is_empty());

    let a = DenseMatrix::from_i64(&[&[1, 1]]);
    let s = solve_linear(&a, &[int(0)]).unwrap();
    assert_eq!(s.solution().unwrap(), &[int(0), int(0)][..]);
    assert_eq!(s.nullspace.len(), 1);
    let v = &s.nullspace[0];
    assert_eq!(&v[0] + &v[1], int(0));
    assert!(!v[0].is_zero());
}

#[test]
fn random_invertible_system() {
    let mut smp = Sampler::new(6);
    let a = DenseMatrix::from_fn(6, 6, |i, j| if i == j { int(20) } else { smp.ratio() });
    let b = smp.ratio_vector(6);
    let x = solve_linear(&a, &b).unwrap().solution().unwrap().to_vec();
    assert_eq!(a.mul_vec(&x).unwrap(), b);
}

#[test]
fn inconsistent_system_has_certificate() {
    let a = DenseMatrix::from_i64(&[&[1, 2], &[2, 4], &[0, 1]]);
    let b = vec![int(1), int(3), int(5)];
    let s = solve_linear(&a, &b).unwrap();
    let y = s.certificate().unwrap();
    assert!(verify_certificate(&a, &b, y));
}

proptest! {
    #[test]
    fn rational_field_laws(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
        let x = ratio(a, b);
        let y = ratio(c, d);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x * &y) / &y, x.clone());
        prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
    }

    #[test]
    fn large_products_promote_exactly(a in i64::MAX / 4..i64::MAX, b in i64::MAX / 4..i64::MAX) {
        let p = int(a) * int(b);
        prop_assert_eq!(p / int(b), int(a));
    }
}
