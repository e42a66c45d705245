//! How much the Janowski-class corollaries sharpen the earlier bounds,
//! as `B` moves away from `-1`.

use schlicht::bounds::compare_improvement;
use schlicht::scalar::{format_rational, rat};

fn main() {
    let lambda = rat(1, 4);
    let a = rat(1, 1);
    for b in [rat(-1, 1), rat(-1, 2), rat(0, 1), rat(1, 2)] {
        println!("lambda = 1/4, A = 1, B = {}", format_rational(&b));
        println!("{:>3} {:>10} {:>10} {:>10}", "n", "cor1", "thmA", "cor1/thmA");
        for row in compare_improvement(&lambda, &a, &b, 8).unwrap() {
            println!(
                "{:>3} {:>10} {:>10} {:>10}",
                row.n,
                format_rational(&row.values["cor1"]),
                format_rational(&row.values["thmA"]),
                format_rational(&row.values["ratio_A"])
            );
        }
        println!();
    }
}
