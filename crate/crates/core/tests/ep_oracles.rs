use epalg::ep::{
    calibrate, dimension, find_witness, grade_profile, jacobi_infeasibility, make_ep, make_ep_polarized, BracketCoeffs,
    Channel, Infeasibility, Level, Polarization, Variant,
};
use epalg::exact::{ratio, Rational};
use epalg::sample::Sampler;
use epalg::Error;

#[test]
fn dimensions_and_profiles() {
    let dims: Vec<usize> = Level::ALL.iter().map(|&l| dimension(l, 0)).collect();
    assert_eq!(dims, [52, 78, 133, 248]);
    assert_eq!(dimension(Level::Der, 1), 392);
    for level in Level::ALL {
        for n in 0..3 {
            let total: usize = grade_profile(level, n, Variant::Canonical).unwrap().iter().map(|g| g.1).sum();
            assert_eq!(total, dimension(level, n));
        }
    }
    assert!(matches!(grade_profile(Level::Der, 1, Variant::Extended), Err(Error::Variant(_))));
}

#[test]
fn qconf_one_shapes() {
    let ep = make_ep(Level::Qconf, 1, BracketCoeffs::ones(Level::Qconf)).unwrap();
    assert_eq!((ep.rep().sig().p, ep.rep().sig().q), (20, 4));
    assert_eq!(ep.plus_block().len, 2048);
    assert_eq!(ep.dimension(), dimension(Level::Qconf, 1));
}

#[test]
fn calibrated_coefficients() {
    let get = |l| calibrate(l).unwrap().coeffs;
    assert_eq!(get(Level::Der).get(Channel::SpinorSo), ratio(1, 1));
    assert_eq!(get(Level::Qconf).get(Channel::SpinorSo), ratio(1, 1));
    assert_eq!(get(Level::Str0).get(Channel::SpinorScalar), ratio(3, 2));
    let conf = get(Level::Conf);
    let vals: Vec<Rational> = Level::Conf.channels().iter().map(|&c| conf.get(c)).collect();
    assert_eq!(vals, [1, 1, -2, 2, 1, 1, 1].map(|v| ratio(v, 1)));
    let ep = make_ep(Level::Str0, 0, get(Level::Str0)).unwrap();
    assert_eq!(ep.dimension(), 78);
}

#[test]
fn primed_polarization_calibrates() {
    for level in [Level::Str0, Level::Qconf] {
        let cal = epalg::ep::calibrate_polarized(level, Polarization::Primed).unwrap();
        let ep = make_ep_polarized(level, 0, cal.coeffs, Polarization::Primed).unwrap();
        let mut s = Sampler::new(2);
        let t = [ep.random_element(&mut s), ep.random_element(&mut s), ep.random_element(&mut s)];
        assert!(ep.jacobiator(&t[0], &t[1], &t[2]).unwrap().is_zero());
    }
}

#[test]
fn equivariance_holds_beyond_n0() {
    let ep = make_ep(Level::Der, 1, BracketCoeffs::ones(Level::Der)).unwrap();
    let mut s = Sampler::new(3);
    let mut m = ep.zero();
    m.so = s.ratio_vector(m.so.len());
    let x = ep.random_spinor_element(&mut s, false);
    let y = ep.random_spinor_element(&mut s, false);
    assert!(ep.jacobiator(&m, &x, &y).unwrap().is_zero());
}

#[test]
fn der_one_has_a_witness() {
    let ep = make_ep(Level::Der, 1, BracketCoeffs::ones(Level::Der)).unwrap();
    let w = find_witness(&ep, 10_000).unwrap().unwrap();
    assert_eq!(w, [0, 1, 16]);
    let basis = |i| ep.basis_plus(i);
    assert!(!ep.jacobiator(&basis(w[0]), &basis(w[1]), &basis(w[2])).unwrap().is_zero());
}

#[test]
fn infeasibility_certificates() {
    for (level, samples) in [(Level::Der, 50), (Level::Qconf, 20)] {
        let rep = jacobi_infeasibility(level, 1, samples, 7).unwrap();
        assert_eq!(rep.seed, 7);
        assert!(matches!(rep.outcome, Infeasibility::Certificate { verified: true, .. }), "{level}");
    }
    assert!(matches!(jacobi_infeasibility(Level::Der, 0, 10, 7), Err(Error::Precondition(_))));
}

#[test]
fn unknown_channel_rejected() {
    let mut c = BracketCoeffs::ones(Level::Der);
    c.set(Channel::TopBottom, ratio(1, 1));
    assert!(matches!(make_ep(Level::Der, 0, c), Err(Error::Precondition(_))));
}
