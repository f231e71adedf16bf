//! Acceptance criteria, one printed line each. Run with
//! `cargo test --test acceptance -- --nocapture` to see the table.

use hubnet::suite::{Suite, SuiteConfig};

#[test]
fn acceptance() {
    let suite = Suite::new(SuiteConfig::default());
    let results = suite.run_all();
    for r in &results {
        println!("{}", r.timed());
    }
    let failed: Vec<u32> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
