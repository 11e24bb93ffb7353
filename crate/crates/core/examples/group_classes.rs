//! Close a set of matrices under multiplication and list its conjugacy classes.
//!
//! ```text
//! cargo run --example group_classes [catalog-id]
//! ```

use cubicsym::catalog::Catalog;

pub fn main() -> cubicsym::Result<()> {
    let id = std::env::args().nth(1).unwrap_or_else(|| "alt4-klein".into());
    run(&id)
}

pub fn run(id: &str) -> cubicsym::Result<()> {
    let entry = Catalog::from_env().load(id)?;
    let g = &entry.group;
    println!("{id}: order {}, exponent {}, conductor {}", g.order(), g.exponent(), g.conductor());
    println!("abelian: {}, projectively faithful: {}", g.is_abelian(), g.is_projectively_faithful());
    println!("{:>5} {:>5} {:>12}  eigenvalues", "order", "size", "trace");
    for c in g.classes() {
        let profile = g.eigen_profile(c.representative)?;
        println!(
            "{:>5} {:>5} {:>12}  {profile}",
            c.element_order,
            c.size(),
            g.trace_of(c.representative).to_string()
        );
    }
    let sat = g.scalar_saturate()?;
    println!("with cube roots of unity adjoined: order {}", sat.order());
    Ok(())
}
