//! Symmetric powers and inner products of characters, starting either from
//! an abstract character table or from explicit matrices.
//!
//! ```text
//! cargo run --example character_inner_products
//! ```

use cubicsym::catalog::Catalog;
use cubicsym::chars::{character_of, det_character, dim_invariant_cubics, dim_special_subvariety};

pub fn main() -> cubicsym::Result<()> {
    let catalog = Catalog::from_env();

    let table = catalog.table("z3-semi-z4")?;
    table.check_orthonormal()?;
    println!("table {} ({} classes, order {})", table.id, table.structure.len(), table.structure.group_order);
    let chi = table.combination(&[("chi1", 2), ("chi4", 1), ("chi6", 1)])?;
    let det = chi.determinant_from_values()?;
    println!("  chi = 2 chi1 + chi4 + chi6: {:?}", chi.values().iter().map(|v| v.to_string()).collect::<Vec<_>>());
    println!("  <chi, chi> = {}", chi.norm()?.value);
    println!("  <S^3 chi, 1> = {}", dim_invariant_cubics(&chi)?);
    println!("  <S^2(det chi ⊗ chi), 1> = {}", dim_special_subvariety(&chi, &det)?);

    let g = catalog.load("psl2-11-klein")?.group;
    let chi = character_of(&g);
    let det = det_character(&g, &chi)?;
    println!("psl2-11-klein (order {})", g.order());
    println!("  <chi, chi> = {}", chi.norm()?.value);
    println!("  <S^3 chi, 1> = {}", dim_invariant_cubics(&chi)?);
    println!("  <S^2(det chi ⊗ chi), 1> = {}", dim_special_subvariety(&chi, &det)?);
    Ok(())
}
