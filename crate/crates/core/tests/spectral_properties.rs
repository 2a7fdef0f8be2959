use aalpha::alpha_matrix::AlphaMatrix;
use aalpha::bounds::bound_g;
use aalpha::graph::Graph;
use aalpha::spectral::{spectral_radius, spectral_radius_jacobi, spectral_radius_power, Method};
use proptest::prelude::*;

const ALPHAS: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

fn lambda1(g: &Graph, alpha: f64, method: Method) -> f64 {
    let m = AlphaMatrix::build(g, alpha).unwrap();
    spectral_radius(&m, Some(method)).unwrap().lambda1
}

/// Largest root of the star quotient matrix
/// `[[αΔ, (1−α)Δ], [1−α, α]]` by bisection on its characteristic polynomial.
fn star_root_by_bisection(d: u32, alpha: f64) -> f64 {
    let dd = f64::from(d);
    let p = |x: f64| (alpha * dd - x) * (alpha - x) - (1.0 - alpha) * (1.0 - alpha) * dd;
    // p(Δ + 1) > 0 and p at the larger diagonal entry is <= 0
    let (mut lo, mut hi) = ((alpha * dd).max(alpha), dd + 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if p(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn method_agreement_on_random_corpus() {
    let mut checked = 0;
    for seed in 0..120u64 {
        let n = 2 + (seed % 11) as usize;
        let p = [0.2, 0.5, 0.8][(seed % 3) as usize];
        let g = Graph::random(n, p, seed).unwrap();
        for alpha in ALPHAS {
            let j = lambda1(&g, alpha, Method::Jacobi);
            let pw = lambda1(&g, alpha, Method::Power);
            assert!(
                (j - pw).abs() <= 1e-7,
                "seed {seed} alpha {alpha}: {j} vs {pw}"
            );
            checked += 1;
        }
    }
    assert!(checked >= 500);
}

#[test]
fn star_spectral_radius_is_the_quotient_root() {
    for d in 1..=12 {
        let star = Graph::star(d as usize + 1).unwrap();
        for k in 0..=20 {
            let alpha = f64::from(k) / 20.0;
            let oracle = star_root_by_bisection(d, alpha);
            let got = lambda1(&star, alpha, Method::Jacobi);
            assert!((got - oracle).abs() <= 1e-10, "Δ={d} α={alpha}");
            assert!((bound_g(d, alpha) - oracle).abs() <= 1e-10);
            assert!((lambda1(&star, alpha, Method::Power) - oracle).abs() <= 1e-8);
        }
    }
}

#[test]
fn regular_graphs_have_radius_r() {
    let graphs = [
        (Graph::complete(6).unwrap(), 5.0),
        (Graph::cycle(7).unwrap(), 2.0),
        (Graph::circulant(8, &[1, 4]).unwrap(), 3.0),
        (Graph::circulant(10, &[1, 2, 5]).unwrap(), 5.0),
        (Graph::cycle(4).unwrap(), 2.0),
    ];
    for (g, r) in &graphs {
        for k in 0..=20 {
            let alpha = f64::from(k) / 20.0;
            let m = AlphaMatrix::build(g, alpha).unwrap();
            let j = spectral_radius_jacobi(&m).unwrap().lambda1;
            assert!((j - r).abs() <= 1e-10, "jacobi α={alpha}: {j}");
            let p = spectral_radius_power(&m, 1e-10, 100_000).unwrap().lambda1;
            assert!((p - r).abs() <= 1e-10, "power α={alpha}: {p}");
        }
    }
}

#[test]
fn alpha_one_gives_max_degree_exactly() {
    for seed in 0..30 {
        let g = Graph::random(9, 0.4, seed).unwrap();
        let delta = f64::from(g.degree_profile().unwrap().max_degree);
        let m = AlphaMatrix::build(&g, 1.0).unwrap();
        assert_eq!(spectral_radius(&m, None).unwrap().lambda1, delta);
    }
}

#[test]
fn degenerate_dominant_eigenvalue() {
    // two disjoint triangles: λ1 = 2 with multiplicity two
    let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    for alpha in ALPHAS {
        assert!((lambda1(&g, alpha, Method::Power) - 2.0).abs() <= 1e-9);
        assert!((lambda1(&g, alpha, Method::Jacobi) - 2.0).abs() <= 1e-10);
    }
}

#[test]
fn isolated_vertices_leave_the_radius_unchanged() {
    let star = Graph::star(4).unwrap();
    let padded = star.add_isolated(2);
    for alpha in ALPHAS {
        let a = lambda1(&star, alpha, Method::Jacobi);
        let b = lambda1(&padded, alpha, Method::Jacobi);
        assert!((a - b).abs() <= 1e-12);
    }
    assert!((lambda1(&padded, 0.5, Method::Jacobi) - 2.0).abs() <= 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn average_degree_and_max_degree_sandwich(
        n in 2usize..13, p in 0.05f64..1.0, seed: u64, k in 0usize..5,
    ) {
        let g = Graph::random(n, p, seed).unwrap();
        prop_assume!(g.edge_count() > 0);
        let profile = g.degree_profile().unwrap();
        let avg = 2.0 * g.edge_count() as f64 / n as f64;
        let alpha = ALPHAS[k];
        for method in [Method::Jacobi, Method::Power] {
            let r = spectral_radius(&AlphaMatrix::build(&g, alpha).unwrap(), Some(method)).unwrap();
            prop_assert!(r.lambda1 >= avg - 1e-9);
            prop_assert!(r.lambda1 <= f64::from(profile.max_degree) + 1e-9);
            prop_assert!(r.lambda1 >= 0.0);
        }
    }

    #[test]
    fn adding_edges_never_decreases_radius(n in 3usize..11, seed: u64, k in 0usize..5) {
        let alpha = ALPHAS[k];
        let mut g = Graph::random(n, 0.2, seed).unwrap();
        let mut last = lambda1(&g, alpha, Method::Jacobi);
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        for (u, v) in missing.into_iter().take(8) {
            g = g.with_edge(u, v).unwrap();
            let next = lambda1(&g, alpha, Method::Jacobi);
            prop_assert!(next >= last - 1e-9, "{} -> {}", last, next);
            last = next;
        }
    }
}
