//! Starlike and convex auxiliary functions. With the half-plane map and the
//! identity witness the generators reproduce the Koebe function `z/(1-z)^2`
//! and its convex partner `z/(1-z)`, saturating the product bounds.

use schlicht::classes::{lemma3_bound, lemma4_bound, make_convex, make_starlike, PhiFamily, SchwarzSpec};
use schlicht::scalar::{exact, int, rat, ExactComplex, ScalarValue};

fn main() {
    let order = 10;
    let id = SchwarzSpec::identity();
    let koebe = make_starlike::<ExactComplex>(&PhiFamily::HalfPlane, &id, order).unwrap();
    let convex = make_convex::<ExactComplex>(&PhiFamily::HalfPlane, &id, order).unwrap();
    println!("{:>3} {:>8} {:>8} {:>8} {:>8}", "n", "b_n(S*)", "lemma4", "b_n(K)", "lemma3");
    for n in 2..=order {
        println!(
            "{n:>3} {:>8} {:>8} {:>8} {:>8}",
            text(&koebe.series.coeff(n)),
            schlicht::scalar::format_rational(&lemma4_bound(&int(2), n).unwrap()),
            text(&convex.series.coeff(n)),
            schlicht::scalar::format_rational(&lemma3_bound(&int(2), n).unwrap()),
        );
    }

    // A Blaschke witness stays strictly inside the bounds.
    let w = SchwarzSpec::Blaschke { c: exact(rat(1, 2), rat(0, 1)) };
    let g = make_starlike::<ExactComplex>(&PhiFamily::HalfPlane, &w, 6).unwrap();
    let b: Vec<String> = (1..=6).map(|n| text(&g.series.coeff(n))).collect();
    println!("starlike member from {w}: {b:?}");
}

fn text(z: &ExactComplex) -> String {
    ScalarValue::of(z).text_parts().0
}
