//! Stars attain `g` exactly; other connected graphs sit strictly above it.

use aalpha::alpha_matrix::AlphaMatrix;
use aalpha::bounds::bound_g;
use aalpha::graph::Graph;
use aalpha::harness::{certify_star_equality, non_star_set};
use aalpha::spectral::spectral_radius;

fn main() -> aalpha::Result<()> {
    for d in [1u32, 3, 8] {
        let star = Graph::star(d as usize + 1)?;
        for alpha in [0.0, 0.3, 0.7, 1.0] {
            let l = spectral_radius(&AlphaMatrix::build(&star, alpha)?, None)?.lambda1;
            println!(
                "K1,{d:<2} α={alpha:<4} λ1={l:.12} g={:.12}",
                bound_g(d, alpha)
            );
        }
    }
    println!();
    for (name, g) in non_star_set() {
        let dd = g.degree_profile()?.max_degree;
        let l = spectral_radius(&AlphaMatrix::build(&g, 0.5)?, None)?.lambda1;
        println!("{name:<5} α=0.5  λ1 - g = {:.6}", l - bound_g(dd, 0.5));
    }

    let cert = certify_star_equality(20, 100)?;
    println!("\n{cert:#?}");
    Ok(())
}
