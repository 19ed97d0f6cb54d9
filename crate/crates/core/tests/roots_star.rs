use epalg::exact::int;
use epalg::roots::{cartan_matrix, generate_roots, AlgebraLabel};
use epalg::star::{chart_counts, emit_chart, find_a2, ChartFormat};
use epalg::Error;

fn label(s: &str) -> AlgebraLabel {
    s.parse().unwrap()
}

#[test]
fn cartan_matrices() {
    assert_eq!(cartan_matrix(label("A2")).to_rows(), vec![vec![int(2), int(-1)], vec![int(-1), int(2)]]);
    let g2 = cartan_matrix(label("G2"));
    let mut off = vec![g2[(0, 1)].clone(), g2[(1, 0)].clone()];
    off.sort();
    assert_eq!(off, vec![int(-3), int(-1)]);
    let e8 = cartan_matrix(label("E8"));
    let mut bonds = 0;
    for i in 0..8 {
        for j in i + 1..8 {
            assert_eq!(e8[(i, j)], e8[(j, i)]);
            if e8[(i, j)] == int(-1) {
                bonds += 1;
            }
        }
    }
    assert_eq!(bonds, 7);
}

#[test]
fn root_counts_match_dimension_minus_rank() {
    for s in ["A2", "G2", "F4", "E6", "E7", "E8", "B3", "D4"] {
        let l = label(s);
        let rs = generate_roots(l);
        assert_eq!(rs.roots().len(), l.root_count(), "{s}");
        assert_eq!(rs.roots().len(), l.dimension() - l.rank(), "{s}");
    }
}

#[test]
fn g2_lengths_and_pairings() {
    let rs = generate_roots(label("G2"));
    let lens = rs.squared_lengths();
    assert_eq!(lens.len(), 2);
    let long = lens.last().unwrap();
    assert_eq!(rs.roots().iter().filter(|r| rs.inner(r, r) == *long).count(), 6);
    let simple = rs.simple_roots();
    let (short, long) = if rs.inner(&simple[0], &simple[0]) < rs.inner(&simple[1], &simple[1]) {
        (&simple[0], &simple[1])
    } else {
        (&simple[1], &simple[0])
    };
    assert_eq!(rs.coroot_pairing(long, short).unwrap(), -3);
    assert_eq!(rs.coroot_pairing(short, short).unwrap(), 2);
    let a2 = generate_roots(label("A2"));
    assert_eq!(a2.coroot_pairing(&a2.simple_roots()[0], &a2.simple_roots()[1]).unwrap(), -1);
}

#[test]
fn non_root_is_rejected() {
    let rs = generate_roots(label("A2"));
    let zero = vec![int(0); rs.ambient_dim()];
    assert!(matches!(rs.coroot_pairing(&zero, &rs.simple_roots()[0]), Err(Error::NotARoot(_))));
}

#[test]
fn bucket_counts() {
    for (s, tip, center) in [("G2", 1, 0), ("F4", 6, 6), ("E6", 9, 12), ("E7", 15, 30)] {
        let rs = generate_roots(label(s));
        let search = find_a2(&rs).unwrap();
        let c = chart_counts(&search.chart);
        assert_eq!(c.tips, [tip; 6], "{s}");
        assert_eq!((c.center, c.hexagon), (center, 6), "{s}");
        assert_eq!(c.total(), rs.roots().len());
        assert!(search.counts_agree);
    }
}

#[test]
fn g2_choice_uses_long_roots() {
    let rs = generate_roots(label("G2"));
    let chart = find_a2(&rs).unwrap().chart;
    let long = rs.squared_lengths().into_iter().max().unwrap();
    assert_eq!(rs.inner(&chart.choice().alpha, &chart.choice().alpha), long);
    assert_eq!(rs.inner(&chart.choice().beta, &chart.choice().beta), long);
}

#[test]
fn a2_host_has_no_star() {
    assert!(matches!(find_a2(&generate_roots(label("A2"))), Err(Error::NoMagicStar(_))));
}

#[test]
fn chart_files() {
    let g2 = find_a2(&generate_roots(label("G2"))).unwrap().chart;
    let csv = emit_chart(&g2, ChartFormat::Csv);
    assert_eq!(csv.lines().count(), 13);
    assert_eq!(csv.lines().next().unwrap(), "root;weight_a;weight_b;bucket");

    let e8 = find_a2(&generate_roots(label("E8"))).unwrap().chart;
    let svg = emit_chart(&e8, ChartFormat::Svg);
    assert_eq!(svg.matches("<circle").count(), 13);
    assert!(svg.starts_with("<svg"));
}
