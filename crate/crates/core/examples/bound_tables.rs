//! Exact bound tables for the main theorems and their specializations.

use schlicht::bounds::{bound_table, Formula, FormulaInputs};
use schlicht::scalar::{format_rational, int, rat};

fn main() {
    let general = FormulaInputs {
        lambda: rat(1, 2),
        delta: rat(1, 4),
        phi1: Some(int(2)),
        psi1: Some(int(2)),
        ..FormulaInputs::default()
    };
    print_table("lambda = 1/2, delta = 1/4, |phi'(0)| = |psi'(0)| = 2", &[Formula::Thm1, Formula::Thm2], &general);

    let quasi = FormulaInputs { lambda: int(1), phi1: Some(rat(4, 3)), psi1: Some(rat(3, 2)), ..FormulaInputs::default() };
    print_table("lambda = 1, delta = 0", &[Formula::Thm1, Formula::CorQk, Formula::Lemma3], &quasi);

    let janowski = FormulaInputs {
        lambda: rat(1, 3),
        a: Some(rat(1, 2)),
        b: Some(rat(-1, 2)),
        alpha: Some(rat(1, 4)),
        beta: Some(rat(1, 2)),
        ..FormulaInputs::default()
    };
    print_table("A = 1/2, B = -1/2, lambda = 1/3; alpha = 1/4, beta = 1/2", &[Formula::Cor1, Formula::Cor2, Formula::Libera], &janowski);
}

fn print_table(title: &str, formulas: &[Formula], inputs: &FormulaInputs) {
    println!("{title}");
    let rows = bound_table(formulas, inputs, 2..=8).unwrap();
    print!("{:>3}", "n");
    for f in formulas {
        print!(" {:>16}", f.id());
    }
    println!();
    for row in rows {
        print!("{:>3}", row.n);
        for f in formulas {
            print!(" {:>16}", format_rational(&row.values[f.id()]));
        }
        println!();
    }
    println!();
}
