//! Falsification attempt: random graphs, with and without isolated
//! vertices, checked against both lower bounds. Writes a CSV report to the
//! system temp directory.

use aalpha::graph::Graph;
use aalpha::harness::{check_verification, verify_graph};
use aalpha::report::{emit_report, Format};

fn main() -> aalpha::Result<()> {
    let alphas = [0.0, 0.25, 0.5, 0.75, 1.0];
    let mut records = Vec::new();
    for seed in 0..300u64 {
        let n = 2 + (seed % 11) as usize;
        let p = [0.2, 0.5, 0.8][(seed % 3) as usize];
        let isolated = (seed / 3 % 3) as usize;
        let g = Graph::random(n, p, seed)?.add_isolated(isolated);
        records.extend(verify_graph(
            &g,
            &format!("random:{n},{p},{seed}+iso{isolated}"),
            &alphas,
            None,
        )?);
    }
    check_verification(&records)?;

    let tightest = records
        .iter()
        .filter(|r| r.edge_count > 0)
        .min_by(|a, b| (a.lambda1 - a.g_value).total_cmp(&(b.lambda1 - b.g_value)))
        .expect("some graph has edges");
    println!("{} records, no violations", records.len());
    println!(
        "closest to g: {} at α={} (λ1 - g = {:.2e}, star: {})",
        tightest.graph_id,
        tightest.alpha,
        tightest.lambda1 - tightest.g_value,
        tightest.is_star
    );

    let path = std::env::temp_dir().join("aalpha_random_campaign.csv");
    emit_report(&records, Format::Csv, &path)?;
    println!("report: {}", path.display());
    Ok(())
}
