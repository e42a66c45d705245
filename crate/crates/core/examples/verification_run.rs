//! Randomized verification of both theorems over the built-in presets.
//! Pass a sample count as the first argument (default 200).

use schlicht::verify::{default_presets, verify_class, VerificationConfig};

fn main() {
    let samples = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200);
    for spec in default_presets() {
        let cfg = VerificationConfig { samples, ..VerificationConfig::new(spec, 2024) };
        let report = verify_class(&cfg).unwrap();
        let worst = report.per_n.iter().max_by(|a, b| a.worst_ratio.total_cmp(&b.worst_ratio)).unwrap();
        println!(
            "{:<60} {} exact + {} float  worst {:.6} at n = {:>2} ({} / {})  violations {}",
            report.spec.to_string(),
            report.exact_samples,
            report.float_samples,
            worst.worst_ratio,
            worst.n,
            worst.worst_witness.g,
            worst.worst_witness.quotient,
            report.violations.len()
        );
    }
}
