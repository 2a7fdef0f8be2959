//! graph6 and edge-list input/output, plus the `A_α` CSV dump.

use aalpha::alpha_matrix::AlphaMatrix;
use aalpha::graph::Graph;
use aalpha::graph6::{emit_graph6, parse_graph6};

fn main() -> aalpha::Result<()> {
    let star = Graph::star(4)?;
    let s = emit_graph6(&star)?;
    println!("K1,3 as graph6: {s}");
    assert_eq!(parse_graph6(&s)?, star);

    let padded = star.add_isolated(1);
    println!("K1,3 + K1 as edge list:\n{}", padded.to_edge_list());
    let p = padded.degree_profile()?;
    println!(
        "degrees {:?}, Δ={}, δ={}",
        p.degrees, p.max_degree, p.min_degree
    );

    match parse_graph6("DQ") {
        Err(e) => println!("truncated input: {e}"),
        Ok(_) => unreachable!(),
    }

    println!(
        "\nA_0.5(K1,3) =\n{}",
        AlphaMatrix::build(&star, 0.5)?.to_csv()
    );
    Ok(())
}
