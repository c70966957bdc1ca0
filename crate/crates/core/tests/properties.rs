mod common;

use proptest::prelude::*;

use vertexfreq::fiedler::{constant_ball_scan, constant_ball_tol, default_partition, fiedler, partition};
use vertexfreq::io::{parse_edge_list, parse_graph_json, to_edge_list, to_graph_json};
use vertexfreq::spectral::{eigendecompose, multiplicity};
use vertexfreq::tolerance::translation_tol;
use vertexfreq::vertex_freq::{
    apply_multiplier, convolve, gft, igft, invert_multiplier, modulate, translate, translation_analysis,
    translation_symbol,
};
use vertexfreq::{Distance, Graph, Signal, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn graph_and_signal(max_n: usize) -> impl Strategy<Value = (Graph, Vec<f64>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), proptest::collection::vec(-10.0f64..10.0, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laplacian_is_degree_minus_adjacency(g in graph_strategy(10)) {
        let l = g.laplacian();
        prop_assert_eq!(&l, &(g.degree_matrix() - g.adjacency_matrix()));
        prop_assert_eq!(&l, &common::dense_laplacian(&g));
        prop_assert_eq!(&l, &l.transpose());
        for row in l.row_iter() {
            prop_assert_eq!(row.sum(), 0.0);
        }
    }

    #[test]
    fn pointwise_laplacian_and_energy((g, f) in graph_and_signal(10)) {
        let l = common::dense_laplacian(&g);
        let fv = nalgebra::DVector::from_vec(f.clone());
        let lf = &l * &fv;
        for x in 0..g.vertex_count() {
            prop_assert!((g.laplacian_apply(&f, x).unwrap() - lf[x]).abs() < 1e-10);
        }
        let quad = fv.dot(&lf);
        prop_assert!((g.dirichlet_energy(&f).unwrap() - quad).abs() < 1e-9 * quad.abs().max(1.0));
    }

    #[test]
    fn distances_match_floyd_warshall(g in graph_strategy(10)) {
        let oracle = common::floyd_warshall(&g);
        for x in 0..g.vertex_count() {
            for y in 0..g.vertex_count() {
                let want = oracle[x][y].map_or(Distance::Infinite, Distance::Finite);
                prop_assert_eq!(g.distance(x, y).unwrap(), want);
            }
            let ball = g.ball(x, 1).unwrap();
            let want: Vec<usize> = (0..g.vertex_count()).filter(|&y| oracle[x][y].is_some_and(|d| d <= 1)).collect();
            prop_assert_eq!(ball.as_slice(), want.as_slice());
        }
    }

    #[test]
    fn components_match_union_find(g in graph_strategy(10)) {
        let comps = g.connected_components();
        prop_assert_eq!(comps.len(), common::component_count(&g));
        let firsts: Vec<usize> = comps.iter().map(|c| c.as_slice()[0]).collect();
        let mut sorted = firsts.clone();
        sorted.sort_unstable();
        prop_assert_eq!(firsts, sorted);
    }

    #[test]
    fn eigenbasis_matches_jacobi(g in graph_strategy(10)) {
        let b = eigendecompose(&g);
        let oracle = common::jacobi_eigenvalues(&common::dense_laplacian(&g));
        for (a, o) in b.eigenvalues().iter().zip(&oracle) {
            prop_assert!((a - o).abs() < 1e-9 * o.abs().max(1.0));
        }
        prop_assert!(b.orthonormality_error() <= 1e-10);
        let res = b.residuals().unwrap();
        for (k, r) in res.iter().enumerate() {
            prop_assert!(*r <= 1e-9 * b.eigenvalue(k).max(1.0));
        }
        // kernel dimension counts components
        prop_assert_eq!(multiplicity(&b, 0.0, 1e-8), common::component_count(&g));
    }

    #[test]
    fn eigendecomposition_is_deterministic(g in graph_strategy(9)) {
        let a = eigendecompose(&g);
        let b = eigendecompose(&g.clone());
        prop_assert_eq!(a.eigenvalues(), b.eigenvalues());
        prop_assert_eq!(a.vectors(), b.vectors());
    }

    #[test]
    fn parseval_and_inversion((g, f) in graph_and_signal(10)) {
        let b = eigendecompose(&g);
        let f = Signal::from_real(&f);
        let fh = gft(&b, &f).unwrap();
        prop_assert!((fh.norm() - f.norm()).abs() < 1e-10 * f.norm().max(1.0));
        prop_assert!(igft(&b, &fh).unwrap().max_abs_diff(&f) < 1e-10 * f.norm().max(1.0));
    }

    #[test]
    fn convolution_identity_element((g, f) in graph_and_signal(9)) {
        // δ with unit spectrum: Σ_k φ_k
        let b = eigendecompose(&g);
        let n = b.dim();
        let unit = Signal::new((0..n).map(|v| (0..n).map(|k| b.entry(v, k)).sum()).collect());
        let f = Signal::from_real(&f);
        prop_assert!(convolve(&b, &f, &unit).unwrap().max_abs_diff(&f) < 1e-9);
    }

    #[test]
    fn translation_is_a_multiplier((g, f) in graph_and_signal(9), pick in any::<prop::sample::Index>()) {
        let b = eigendecompose(&g);
        let i = pick.index(b.dim());
        let f = Signal::from_real(&f);
        let symbol = translation_symbol(&b, i).unwrap();
        prop_assert!(translate(&b, i, &f).unwrap().max_abs_diff(&apply_multiplier(&b, &symbol, &f).unwrap()) < 1e-12);
        let a = translation_analysis(&b, i, translation_tol(b.dim())).unwrap();
        prop_assert_eq!(a.rank + a.vanishing_indices.len(), b.dim());
        match invert_multiplier(&symbol, translation_tol(b.dim()) * (b.dim() as f64).sqrt()) {
            Ok(inv) => {
                prop_assert!(a.invertible);
                let back = apply_multiplier(&b, &inv, &translate(&b, i, &f).unwrap()).unwrap();
                prop_assert!(back.max_abs_diff(&f) < 1e-6 * a.kappa.unwrap() * f.norm().max(1.0));
            }
            Err(_) => prop_assert!(!a.invertible),
        }
    }

    #[test]
    fn modulation_by_constant_is_identity((g, f) in graph_and_signal(9)) {
        let g_conn = g.vertex_count() == 1 || g.is_connected();
        prop_assume!(g_conn);
        let b = eigendecompose(&g);
        let f = Signal::from_real(&f);
        prop_assert!(modulate(&b, 0, &f).unwrap().max_abs_diff(&f) < 1e-10);
    }

    #[test]
    fn partition_is_a_partition(f in proptest::collection::vec(-1.0f64..1.0, 0..20), tol in 0.0f64..0.5) {
        let p = partition(&f, tol);
        let n = f.len();
        prop_assert_eq!(p.positive.len() + p.negative.len() + p.zero.len(), n);
        let all = p.positive.union(&p.negative).union(&p.zero);
        prop_assert_eq!(all, VertexSet::all(n));
        for &i in &p.zero {
            prop_assert!(f[i].abs() <= tol);
        }
        for &i in &p.positive {
            prop_assert!(f[i] > tol);
        }
        for &i in &p.negative {
            prop_assert!(f[i] < -tol);
        }
    }

    #[test]
    fn eigenvectors_never_constant_on_signed_balls(g in graph_strategy(10)) {
        let b = eigendecompose(&g);
        for k in 0..b.dim() {
            if b.eigenvalue(k) <= 1e-8 {
                continue;
            }
            let f = b.real_column(k).unwrap();
            let v = constant_ball_scan(&g, &default_partition(&f), constant_ball_tol(&f)).unwrap();
            prop_assert!(v.is_empty(), "eigenvector {} has constant balls {:?}", k, v);
        }
    }

    #[test]
    fn fiedler_sides_within_distance_two(g in graph_strategy(10)) {
        prop_assume!(g.vertex_count() >= 2 && g.is_connected());
        let fv = fiedler(&eigendecompose(&g), 1e-8).unwrap();
        let p = default_partition(&fv.vector);
        let d = g.set_distance(&p.positive, &p.negative).unwrap();
        prop_assert!(d.finite().is_some_and(|d| d <= 2));
    }

    #[test]
    fn text_formats_roundtrip(g in graph_strategy(12)) {
        prop_assert_eq!(&parse_edge_list(&to_edge_list(&g)).unwrap(), &g);
        prop_assert_eq!(&parse_graph_json(&to_graph_json(&g)).unwrap(), &g);
    }

    #[test]
    fn handshake_lemma(g in graph_strategy(12)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }
}
