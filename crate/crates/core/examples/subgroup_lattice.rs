//! Audit every subgroup class of a group. The PSL(2,11) entry takes a few
//! seconds per core.
//!
//! ```text
//! cargo run --example subgroup_lattice [catalog-id]
//! cargo run --release --example subgroup_lattice psl2-11-klein
//! ```

use cubicsym::audit::{lattice_report, lattice_table};
use cubicsym::catalog::Catalog;
use cubicsym::smoothprobe::ProbeConfig;

pub fn main() -> cubicsym::Result<()> {
    let id = std::env::args().nth(1).unwrap_or_else(|| "z11-z5-klein".into());
    run(&id)
}

pub fn run(id: &str) -> cubicsym::Result<()> {
    let g = Catalog::from_env().load(id)?.group;
    let nodes = lattice_report(&g, &ProbeConfig::default())?;
    print!("{}", lattice_table(&nodes));
    let holds = nodes.iter().filter(|n| n.report.criterion_holds == Some(true)).count();
    println!("{} subgroup classes, equality in {holds}", nodes.len());
    Ok(())
}
