//! One line per acceptance criterion; exits non-zero if any fails.

use orrforge_cli::suite::{theorem1, Status};

fn main() {
    let mut failed = 0;
    for c in theorem1() {
        let r = c.run(3);
        println!(
            "{} {:<18} {:>8.2}s  {}: {}",
            r.status.label(),
            r.id,
            r.seconds,
            c.summary,
            r.detail
        );
        failed += usize::from(r.status == Status::Fail);
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
