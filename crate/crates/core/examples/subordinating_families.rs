//! Built-in subordinating functions, Schwarz witnesses, and the coefficient
//! domination of `φ∘ω` by `|φ'(0)|`.

use schlicht::classes::{PhiFamily, SchwarzSpec};
use schlicht::scalar::{exact, rat, ExactComplex, ScalarValue};
use schlicht::verify::check_subordination_coeffs;

fn main() {
    let families = [
        PhiFamily::HalfPlane,
        PhiFamily::janowski(rat(3, 5), rat(-1, 5)).unwrap(),
        PhiFamily::order_alpha(rat(1, 3)).unwrap(),
    ];
    let witnesses = [
        SchwarzSpec::identity(),
        SchwarzSpec::Monomial { m: 3 },
        SchwarzSpec::Blaschke { c: exact(rat(1, 2), rat(-1, 4)) },
        SchwarzSpec::Rotation { theta: 0.7 },
    ];
    for phi in &families {
        let s = phi.series::<ExactComplex>(6).unwrap();
        let text: Vec<String> = s.coeffs().iter().map(|c| ScalarValue::of(c).text_parts().0).collect();
        println!("{phi}: |phi'(0)| = {:?}, series {:?}", phi.prime0_abs().unwrap(), text);
        for w in &witnesses {
            let check = check_subordination_coeffs(phi, w, 24).unwrap();
            println!(
                "  after {w:<20} max |B_n|/|A_1| = {:.6}  holds = {}",
                check.worst_ratio,
                check.holds()
            );
        }
    }
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(5);
    let sampled: Vec<String> = (0..6).map(|_| SchwarzSpec::sample(&mut rng).to_string()).collect();
    println!("sampled witnesses: {sampled:?}");
}
