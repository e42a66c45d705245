//! Truncated power series in both backends: products, quotients,
//! composition and evaluation.

use schlicht::scalar::{exact, rat, ExactComplex, FloatComplex, Scalar};
use schlicht::series::Series;

fn main() {
    let order = 8;
    let one_minus_z = Series::<ExactComplex>::from_i64s(&[1, -1], order).unwrap();
    let geometric = Series::one(order).unwrap().div(&one_minus_z).unwrap();
    println!("1/(1-z)       = {:?}", coeff_text(&geometric));

    let koebe = Series::variable(order).unwrap().div(&one_minus_z.mul(&one_minus_z).unwrap()).unwrap();
    println!("z/(1-z)^2     = {:?}", coeff_text(&koebe));

    // (1+z)/(1-z) composed with z^2 gives (1+z^2)/(1-z^2).
    let half_plane = Series::<ExactComplex>::from_i64s(&[1, 1], order).unwrap().div(&one_minus_z).unwrap();
    let z2 = Series::monomial(ExactComplex::one(), 2, order).unwrap();
    println!("p(z^2)        = {:?}", coeff_text(&half_plane.compose(&z2).unwrap()));

    let shifted = koebe.z_shift_derivative(1).unwrap();
    println!("z k'(z)       = {:?}", coeff_text(&shifted));

    let half = exact(rat(1, 2), rat(0, 1));
    println!("1/(1-z) at 1/2 = {:?} (exact, truncated at z^{order})", geometric.eval(&half));

    let long = Series::<FloatComplex>::from_i64s(&[1, -1], 30).unwrap();
    let g = Series::one(30).unwrap().div(&long).unwrap();
    println!("1/(1-z) at 0.5 = {} (float, order 30)", g.eval(&FloatComplex::new(0.5, 0.0)).re);
}

fn coeff_text(s: &Series<ExactComplex>) -> Vec<String> {
    s.coeffs().iter().map(|c| schlicht::scalar::ScalarValue::of(c).text_parts().0).collect()
}
