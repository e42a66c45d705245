//! Exact identities between the bound formulas and the improvement grid.

use schlicht::verify::{verify_improvement_grid, verify_specialization_lattice};

fn main() {
    let lattice = verify_specialization_lattice().unwrap();
    for check in &lattice.checks {
        println!(
            "{:<55} {:>4} points {:>6} comparisons  {}",
            check.identity,
            check.grid_points,
            check.comparisons,
            if check.failures.is_empty() { "ok" } else { "FAILED" }
        );
    }
    let improvement = verify_improvement_grid(20).unwrap();
    println!(
        "improvement grid: {} points, {} strict, {} equal (B = -1), {} failures",
        improvement.grid_points,
        improvement.strict,
        improvement.equal,
        improvement.failures.len()
    );
}
