//! A member of the starlike-type class `S_{λ,δ}(φ,ψ)`, including a
//! floating-point run forced by an irrational rotation witness.

use schlicht::bounds::{thm2_bound, BoundParams};
use schlicht::classes::{PhiFamily, SchwarzSpec};
use schlicht::membership::{make_member, ClassKind, ClassSpec, OperatorParams};
use schlicht::scalar::{rat, rational_to_f64, ExactComplex, FloatComplex, Scalar};

fn main() {
    let spec = ClassSpec::new(
        ClassKind::S,
        OperatorParams::new(rat(3, 4), rat(1, 2)).unwrap(),
        PhiFamily::janowski(rat(3, 5), rat(-1, 5)).unwrap(),
        PhiFamily::janowski(rat(1, 1), rat(-1, 3)).unwrap(),
    )
    .unwrap();
    let params = BoundParams::from_spec(&spec).unwrap();
    let order = 10;

    let exact_member =
        make_member::<ExactComplex>(&spec, &SchwarzSpec::Monomial { m: 2 }, &SchwarzSpec::identity(), order).unwrap();
    let rotation = SchwarzSpec::Rotation { theta: 2.0 };
    assert!(!rotation.is_exact());
    let float_member = make_member::<FloatComplex>(&spec, &rotation, &SchwarzSpec::identity(), order).unwrap();

    println!("class {spec}");
    println!("{:>3} {:>12} {:>12} {:>12}", "n", "bound", "|a_n| exact", "|a_n| float");
    for n in 2..=order {
        let bound = rational_to_f64(&thm2_bound(&params, n).unwrap());
        println!(
            "{n:>3} {bound:>12.6} {:>12.6} {:>12.6}",
            exact_member.f.coeff(n).to_float().norm(),
            float_member.f.coeff(n).norm()
        );
    }
}
