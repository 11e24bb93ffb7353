//! Full audit of one catalog entry, as text and as JSON.
//!
//! ```text
//! cargo run --example audit_report [catalog-id]
//! ```

use cubicsym::audit::check_criterion;
use cubicsym::catalog::Catalog;
use cubicsym::smoothprobe::ProbeConfig;

pub fn main() -> cubicsym::Result<()> {
    let id = std::env::args().nth(1).unwrap_or_else(|| "alt4-klein".into());
    run(&id)
}

pub fn run(id: &str) -> cubicsym::Result<()> {
    let g = Catalog::from_env().load(id)?.group;
    let report = check_criterion(id, &g, &ProbeConfig::default())?;
    println!("{report}");
    println!("annotation: {}", report.annotation());
    println!("{}", report.to_json());
    Ok(())
}
