use epalg::exact::{dot, int, ratio, Rational};
use epalg::sample::Sampler;
use epalg::talg::{
    entropy_of, jordan_determinant, lightcone_inverse, lightcone_map, Octonion, OctonionHermitian3, TElement, TSpace,
};
use epalg::Error;

#[test]
fn lightcone_round_trip() {
    assert_eq!(lightcone_map(&int(0), &int(0)), (int(0), int(0)));
    let mut s = Sampler::new(1);
    for _ in 0..20 {
        let (a, b) = (s.ratio(), s.ratio());
        let (p, m) = lightcone_map(&a, &b);
        assert_eq!(lightcone_inverse(&p, &m), (a, b));
    }
}

#[test]
fn diagonal_values() {
    let s = TSpace::new(4, 0).unwrap();
    assert_eq!(s.cubic_norm(&s.diag(int(2), int(3), int(5))).unwrap(), int(30));
    assert_eq!(s.cubic_norm(&s.diag(int(1), int(1), int(0))).unwrap(), int(0));
    let e = s.entropy(&s.diag(int(1), int(2), int(2))).unwrap();
    assert_eq!(e.abs_norm, int(4));
    assert_eq!(e.value, 2.0 * std::f64::consts::PI);
    assert_eq!(entropy_of(&int(0)).value, 0.0);
}

#[test]
fn metadata() {
    let s = TSpace::new(4, 1).unwrap();
    assert_eq!((s.vector_dim(), s.spinor_width(), s.fund_dim(), s.r_symmetry()), (12, 64, 2, "su(2)"));
    assert_eq!(TSpace::new(2, 0).unwrap().r_symmetry(), "so(2)");
    assert!(matches!(TSpace::new(16, 0), Err(Error::Precondition(_))));
}

#[test]
fn gradient_matches_finite_differences() {
    let mut smp = Sampler::new(5);
    for (q, n) in [(1, 0), (2, 0), (4, 0), (8, 0), (2, 1)] {
        let s = TSpace::new(q, n).unwrap();
        let t = s.random(&mut smp);
        let g = s.norm_gradient(&t).unwrap();
        let base = t.flatten();
        for k in (0..base.len()).step_by(base.len() / 7 + 1) {
            let at = |h: i64| {
                let mut c = base.clone();
                c[k] += int(h);
                s.cubic_norm(&s.from_flat(&c).unwrap()).unwrap()
            };
            let fd = (int(8) * (at(1) - at(-1)) - (at(2) - at(-2))) / int(12);
            assert_eq!(fd, g[k], "q={q} n={n} k={k}");
        }
    }
}

#[test]
fn rank_is_scale_invariant() {
    let s = TSpace::new(8, 0).unwrap();
    let mut smp = Sampler::new(8);
    for _ in 0..10 {
        let t = s.random(&mut smp);
        assert_eq!(s.rank(&t).unwrap(), s.rank(&t.scale(&ratio(-3, 7))).unwrap());
    }
}

#[test]
fn element_json_round_trip() {
    let s = TSpace::new(2, 0).unwrap();
    let t = s.random(&mut Sampler::new(4));
    let json = serde_json::to_string(&t).unwrap();
    assert!(json.starts_with("{\"q\":2,\"n\":0,\"r\":["));
    assert_eq!(serde_json::from_str::<TElement>(&json).unwrap(), t);
    let bad = TElement { v: vec![int(1)], ..t };
    assert!(matches!(s.cubic_norm(&bad), Err(Error::DimensionMismatch(_))));
}

#[test]
fn jordan_determinant_examples() {
    let d = OctonionHermitian3::diag(int(2), int(-3), int(5));
    assert_eq!(jordan_determinant(&d), int(-30));
    for i in 1..8 {
        let j = OctonionHermitian3 {
            r: [int(0), int(0), int(0)],
            a: [Octonion::unit(i), Octonion::unit(i), Octonion::unit(0)],
        };
        assert_eq!(jordan_determinant(&j).abs(), int(2));
    }
}

#[test]
fn embedding_structure() {
    let mut s = TSpace::new(8, 0).unwrap();
    let j = OctonionHermitian3::diag(int(1), int(2), int(3));
    assert!(matches!(s.embed_jordan(&j), Err(Error::Precondition(_))));
    let e = s.calibrate_embedding().unwrap();
    assert_eq!(e.kappa, ratio(1, 4));
    assert!(e.nullspace_dim >= 1);
    let mut smp = Sampler::new(3);
    let a1 = Octonion(std::array::from_fn(|_| smp.int()));
    let j = OctonionHermitian3 { r: [int(0), int(0), int(0)], a: [a1, Octonion::zero(), Octonion::zero()] };
    let t = s.embed_jordan(&j).unwrap();
    assert!(t.psi.iter().flatten().all(Rational::is_zero));
    assert_eq!(dot(&t.v, &t.v), j.a[0].norm());
    for _ in 0..20 {
        let j = OctonionHermitian3::random(&mut smp);
        assert_eq!(s.cubic_norm(&s.embed_jordan(&j).unwrap()).unwrap(), jordan_determinant(&j));
    }
    assert!(TSpace::new(4, 0).unwrap().calibrate_embedding().is_err());
}
