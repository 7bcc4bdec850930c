//! Label sizes against their explicit ceilings, through the same code path
//! as `isolabel bench`, printed as CSV.
//!
//!     cargo run --release --example label_size_sweep

use isolabel::cli::{cmd_bench, BenchFamily};
use isolabel::universal::Scheme;

fn main() {
    for (scheme, family) in [
        (Scheme::Dv, BenchFamily::Random),
        (Scheme::Hdv, BenchFamily::Random),
        (Scheme::Dv, BenchFamily::Tree),
        (Scheme::Hdv, BenchFamily::Tree),
        (Scheme::Sep, BenchFamily::Tree),
    ] {
        let report = cmd_bench(scheme, family, &[64, 256, 1024], &[0.05, 0.3], 5).unwrap();
        print!("{}", report.csv);
        assert!(report.all_within_bound);
    }
    println!("every configuration stayed within its bound");
}
