//! Invariant cubic forms via the Reynolds operator.
//!
//! ```text
//! cargo run --example invariant_cubics [catalog-id]
//! ```

use cubicsym::catalog::Catalog;
use cubicsym::invariants::{reynolds_basis, CubicForm};

pub fn main() -> cubicsym::Result<()> {
    let id = std::env::args().nth(1).unwrap_or_else(|| "family-43".into());
    run(&id)
}

pub fn run(id: &str) -> cubicsym::Result<()> {
    let g = Catalog::from_env().load(id)?.group;
    let space = reynolds_basis(&g)?;
    space.check_invariance()?;
    println!("{id}: {} invariant cubics", space.dim());
    for f in space.basis() {
        println!("  {f}");
    }
    match space.cone_point() {
        Some(v) => println!("x{v} appears in no invariant, so every member is a cone"),
        None => println!("all variables occur"),
    }

    // The Klein cubic spans the invariants of its order-55 symmetry group.
    let core = Catalog::from_env().load("z11-z5-klein")?.group;
    let klein = CubicForm::klein();
    let space = reynolds_basis(&core)?;
    println!("order 55: dim {}, contains {klein}: {}", space.dim(), space.contains(&klein));
    let h = &core.generators()[0];
    println!("diagonal generator acting on x0^2*x1 + x1*x2^2: {}", "x0^2*x1 + x1*x2^2".parse::<CubicForm>()?.act(h)?);
    Ok(())
}
