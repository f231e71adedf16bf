// The fast acceptance criteria on a chosen seed.
// Usage: `cargo run --example acceptance_table -- 11`

use hubnet::suite::{Suite, SuiteConfig, DEFAULT_SEED};

pub fn run_example() -> hubnet::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED);
    let suite = Suite::new(SuiteConfig::with_seed(seed));
    for id in [1, 5, 8, 9] {
        let r = suite.run(id);
        println!("{}", r.timed());
        assert!(r.passed);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hubnet::Result<()> {
    run_example()
}
