// Interconnecting paths through every hub of a representation, with the
// event trace and the postcondition report.

use hubnet::extremal::worked_example;
use hubnet::interconnect::{run_interconnect, verify_run};
use hubnet::representation::to_representation;

pub fn run_example() -> hubnet::Result<()> {
    let rep = to_representation(&worked_example())?;
    let run = run_interconnect(&rep)?;
    for event in run.trace.iter().take(6) {
        println!("{}", serde_json::to_string(event).expect("events serialize"));
    }
    println!("... {} events", run.trace.len());
    for p in &run.paths {
        println!("path {:?}", p.vertices);
    }
    let report = verify_run(&rep, &run)?;
    for c in &report.checks {
        println!("{:<26} {}", c.name, if c.passed { "ok" } else { &c.detail });
    }
    println!("hubs {} <= bound {}", report.hubs, report.bound);
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> hubnet::Result<()> {
    run_example()
}
