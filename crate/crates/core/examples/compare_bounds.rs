//! Evaluate both lower bounds at a few points and show where the ordering
//! flips. Run with `cargo run --example compare_bounds`.

use aalpha::bounds::{compare_numeric, DEFAULT_EPSILON};

fn main() -> aalpha::Result<()> {
    println!(
        "{:>3} {:>3} {:>5} {:>12} {:>12} {:>12}  ordering  witness",
        "δ", "Δ", "α", "f", "g", "f - g"
    );
    let points = [
        (2, 3, 0.5),
        (0, 3, 0.5),
        (1, 7, 0.3),
        (5, 5, 0.0),
        (3, 8, 1.0),
        (0, 0, 1.0),
        (4, 10, 0.9),
    ];
    for (d, dd, a) in points {
        let c = compare_numeric(d, dd, a, DEFAULT_EPSILON)?;
        println!(
            "{d:>3} {dd:>3} {a:>5} {:>12.8} {:>12.8} {:>12.3e}  {:<8}  {}",
            c.f_value,
            c.g_value,
            c.difference,
            c.ordering.to_string(),
            c.witness
        );
    }
    Ok(())
}
