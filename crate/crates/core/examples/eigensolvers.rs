//! Jacobi rotations and shifted power iteration on the same matrices.

use aalpha::alpha_matrix::AlphaMatrix;
use aalpha::graph::Graph;
use aalpha::spectral::{spectral_radius, Method};

fn main() -> aalpha::Result<()> {
    let graphs = [
        ("C4 (bipartite)", Graph::cycle(4)?),
        ("K1,5", Graph::star(6)?),
        (
            "two triangles",
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])?,
        ),
        ("G(12, 0.5)", Graph::random(12, 0.5, 7)?),
    ];
    for (name, g) in &graphs {
        for alpha in [0.0, 0.5, 1.0] {
            let m = AlphaMatrix::build(g, alpha)?;
            let j = spectral_radius(&m, Some(Method::Jacobi))?;
            let p = spectral_radius(&m, Some(Method::Power))?;
            println!(
                "{name:<15} α={alpha:<3}  jacobi {:.12} ({} sweeps, off {:.1e})  power {:.12} ({} its, res {:.1e})",
                j.lambda1, j.iterations, j.residual, p.lambda1, p.iterations, p.residual
            );
        }
    }
    Ok(())
}
