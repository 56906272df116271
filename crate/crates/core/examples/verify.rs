//! Run every check and summarise by verdict.

use fano42::report::{verify_all, Verdict};

fn main() -> fano42::Result<()> {
    let report = verify_all()?;
    for c in report.checks.iter().filter(|c| c.verdict != Verdict::Pass) {
        println!("{}: {}", c.verdict.as_str(), c.id);
        println!("  claimed  {}", c.claimed);
        println!("  computed {}", c.computed);
    }
    let s = &report.summary;
    println!("{} pass, {} fail, {} discrepancy-noted", s.pass, s.fail, s.discrepancy_noted);
    Ok(())
}
