//! Check the classifier against numeric evaluation on the full
//! `δ ≤ Δ ≤ 60`, `α = k/100` grid and tally each witness.

use std::collections::BTreeMap;
use std::time::Instant;

use aalpha::harness::sweep_grid;

fn main() -> aalpha::Result<()> {
    let started = Instant::now();
    let sweep = sweep_grid(60, 60, 100)?;
    let elapsed = started.elapsed();

    let mut by_witness: BTreeMap<&str, usize> = BTreeMap::new();
    for r in &sweep.records {
        *by_witness.entry(r.witness.as_str()).or_default() += 1;
    }
    let s = sweep.summary;
    println!("{} grid points in {elapsed:?}", s.total());
    println!(
        "greater={} equal={} less={} inconsistent={}",
        s.greater, s.equal, s.less, s.inconsistent
    );
    for (witness, count) in by_witness {
        println!("  {witness:<16} {count}");
    }

    // closest calls the numeric route had to resolve
    let tightest = sweep
        .records
        .iter()
        .filter(|r| r.symbolic_ordering != aalpha::bounds::BoundOrdering::Equal)
        .min_by(|a, b| a.difference.abs().total_cmp(&b.difference.abs()))
        .expect("grid has strict points");
    println!(
        "smallest strict gap: |f - g| = {:.3e} at δ={}, Δ={}, α={}",
        tightest.difference.abs(),
        tightest.min_degree,
        tightest.max_degree,
        tightest.alpha
    );
    Ok(())
}
