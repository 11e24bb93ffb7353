//! Build a group from explicit matrices and turn it into a catalog file.
//!
//! ```text
//! cargo run --example new_catalog_entry > z11-z5.json
//! cargo run --bin cubicsym -- audit z11-z5.json
//! ```

use cubicsym::catalog::{Catalog, GroupFile};
use cubicsym::exact::Cyclotomic;
use cubicsym::groups::{Limits, MatrixGroup};
use cubicsym::invariants::CubicForm;
use cubicsym::linalg::Matrix;

pub fn main() -> cubicsym::Result<()> {
    // x_i -> x_{i+1} and a diagonal element of order 11, both fixing the Klein cubic
    let shift = Matrix::permutation(&[1, 2, 3, 4, 0]);
    let diag = Matrix::diag(&[1, 5, 3, 4, 9].map(|k| Cyclotomic::root_of_unity(11, k)));
    let g = MatrixGroup::generate(&[diag, shift], Limits::default())?;
    let klein = CubicForm::klein();
    for h in g.generators() {
        assert_eq!(klein.act(h)?, klein);
    }

    let mut file = GroupFile::describe("z11-z5-example", "Order 55 symmetries of the Klein cubic.", &g);
    file.contract.fixed_form = Some(klein.to_string());
    // loading rechecks the contract we just wrote
    let entry = Catalog::from_env().load_file(file.clone())?;
    eprintln!("order {} with {} classes", entry.group.order(), entry.group.classes().len());
    println!("{}", file.to_json());
    Ok(())
}
