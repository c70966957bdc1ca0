mod common;

use vertexfreq::fiedler::{
    default_partition, fiedler, partition_distance_check, sign_connectivity_check, verify_barren, zero_ball_scan,
};
use vertexfreq::generators::{barren, complete, duplicated_middle_path, generalized_ladder, path, star};
use vertexfreq::spectral::eigendecompose;
use vertexfreq::{Distance, VertexSet};

#[test]
fn ladder_zero_set_is_middle_rung() {
    for n in [3, 5, 7, 9] {
        for m in 2..=5 {
            let g = generalized_ladder(n, m).unwrap();
            let fv = fiedler(&eigendecompose(&g), 1e-8).unwrap();
            assert_eq!(fv.multiplicity, 1, "ladder({n}, {m})");
            let p = default_partition(&fv.vector);
            let mid = n / 2;
            let rung: Vec<usize> = (mid * m..(mid + 1) * m).collect();
            assert_eq!(p.zero.as_slice(), rung.as_slice(), "ladder({n}, {m})");
            assert_eq!(partition_distance_check(&g, &p).unwrap(), Distance::Finite(2));
            let balls = zero_ball_scan(&g, &p).unwrap();
            assert_eq!(balls.contained_balls.len(), m.saturating_sub(2), "ladder({n}, {m})");
        }
    }
}

#[test]
fn duplicated_middles_vanish_and_are_independent() {
    for k in 2..=5 {
        for m in 1..=5 {
            let g = duplicated_middle_path(k, m).unwrap();
            let fv = fiedler(&eigendecompose(&g), 1e-8).unwrap();
            let p = default_partition(&fv.vector);
            let centers = VertexSet::new(g.vertex_count(), k..k + m).unwrap();
            assert!(
                centers.is_subset(&p.zero),
                "k={k} m={m}: zero set {:?}",
                p.zero.as_slice()
            );
            for &a in &centers {
                for &b in &centers {
                    assert!(!g.has_edge(a, b));
                }
            }
        }
    }
}

#[test]
fn single_vertex_arms_give_a_degenerate_fiedler_space() {
    // k = 1 is K_{2,m}, spectrum {0, 2^(m−1), m, m + 2}: λ_1 = 2 is repeated
    // (m = 2 is the 4-cycle, where the eigenvalue m joins the cluster).
    for m in 2..=5 {
        let g = duplicated_middle_path(1, m).unwrap();
        let fv = fiedler(&eigendecompose(&g), 1e-8).unwrap();
        assert!((fv.eigenvalue - 2.0).abs() < 1e-10);
        assert_eq!(fv.multiplicity, if m == 2 { 2 } else { m - 1 });
        assert!(fv.basis_dependent);
    }
}

#[test]
fn barren_degrees() {
    let (g, layout) = barren(4).unwrap();
    for &v in layout.class(1) {
        assert_eq!(g.degree(v).unwrap(), 5);
    }
    assert_eq!(g.degree(layout.hub()).unwrap(), 4);
    assert_eq!(g.edge_count(), 24);
}

#[test]
fn barren_sides_are_connected() {
    let (g, _) = barren(6).unwrap();
    let p = default_partition(&fiedler(&eigendecompose(&g), 1e-8).unwrap().vector);
    assert_eq!(sign_connectivity_check(&g, &p).unwrap(), (true, true));
}

#[test]
fn barren_verification_range() {
    for n in 3..=20 {
        let r = verify_barren(n, 1e-8).unwrap();
        assert!(r.passed, "N={n}: {:?}", r.failures);
        // a simple λ_1 pins the zero set down
        assert_eq!(r.fiedler_multiplicity, 1);
    }
}

#[test]
fn algebraic_connectivity_increases_below_two() {
    let mut prev = 0.0;
    for n in 3..=60 {
        let (g, _) = barren(n).unwrap();
        let l1 = common::jacobi_eigenvalues(&common::dense_laplacian(&g))[1];
        assert!(l1 > prev && l1 < 2.0, "N={n}: λ_1 = {l1}");
        prev = l1;
    }
}

#[test]
fn complete_and_star_multiplicities() {
    let fv = fiedler(&eigendecompose(&complete(4).unwrap()), 1e-8).unwrap();
    assert_eq!(fv.multiplicity, 3);
    for n in 3..=10 {
        let b = eigendecompose(&star(n).unwrap());
        assert_eq!(
            b.eigenvalues().iter().filter(|l| (*l - 1.0).abs() < 1e-9).count(),
            n - 1
        );
        assert!((b.eigenvalue(n) - (n as f64 + 1.0)).abs() < 1e-9);
    }
}

#[test]
fn short_paths() {
    let b = eigendecompose(&path(2).unwrap());
    let f = fiedler(&b, 1e-8).unwrap();
    assert!((f.vector[0] - 0.5f64.sqrt()).abs() < 1e-12);
    let p = default_partition(&fiedler(&eigendecompose(&path(5).unwrap()), 1e-8).unwrap().vector);
    assert_eq!(sign_connectivity_check(&path(5).unwrap(), &p).unwrap(), (true, true));
}
