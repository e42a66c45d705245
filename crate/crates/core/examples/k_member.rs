//! A member of the convex-type class `K_{λ,δ}(φ,ψ)` built from two Schwarz
//! witnesses, checked against its coefficient bound and its defining
//! subordination quotient.

use schlicht::bounds::{thm1_bound, BoundParams};
use schlicht::classes::{PhiFamily, SchwarzSpec};
use schlicht::membership::{make_member, ClassKind, ClassSpec, OperatorParams};
use schlicht::scalar::{exact, format_rational, rat, rational_to_f64, ExactComplex, Scalar};

fn main() {
    let spec = ClassSpec::new(
        ClassKind::K,
        OperatorParams::new(rat(1, 2), rat(1, 4)).unwrap(),
        PhiFamily::janowski(rat(1, 2), rat(-1, 2)).unwrap(),
        PhiFamily::HalfPlane,
    )
    .unwrap();
    let wg = SchwarzSpec::identity();
    let wp = SchwarzSpec::Blaschke { c: exact(rat(-1, 4), rat(1, 5)) };
    let order = 12;
    let m = make_member::<ExactComplex>(&spec, &wg, &wp, order).unwrap();
    let params = BoundParams::from_spec(&spec).unwrap();
    println!("class {spec}, witnesses g: {wg}, p: {wp}");
    println!("{:>3} {:>14} {:>14} {:>8}", "n", "|a_n|", "bound", "ratio");
    for n in 2..=order {
        let a = m.f.coeff(n).to_float().norm();
        let bound = thm1_bound(&params, n).unwrap();
        println!("{n:>3} {a:>14.8} {:>14} {:>8.5}", format_rational(&bound), a / rational_to_f64(&bound));
    }
    let q = m.recomputed_quotient().unwrap();
    let agree = (0..order).all(|n| q.coeff(n) == m.quotient.coeff(n));
    println!("L_K f / g' reproduces phi(w(z)) through z^{}: {agree}", order - 1);
}
