//! Exact arithmetic in cyclotomic fields.
//!
//! ```text
//! cargo run --example cyclotomic_arithmetic
//! ```

use cubicsym::exact::Cyclotomic;

pub fn main() -> cubicsym::Result<()> {
    let w: Cyclotomic = "E(3)".parse()?;
    let one = Cyclotomic::one();
    println!("w = {w}, w^2 = {}, 1 + w + w^2 = {}", w.pow(2), &(&one + &w) + &w.pow(2));

    // The quadratic Gauss sum for 11 is a square root of -11.
    let residues = [1, 3, 4, 5, 9];
    let gauss = Cyclotomic::sum(&residues.map(|k| Cyclotomic::root_of_unity(11, k)));
    let root = &(&gauss * &Cyclotomic::from_int(2)) + &one;
    println!("2*(sum of E(11)^r over residues r) + 1 = {root}");
    println!("its square: {}", root.pow(2));

    // Elements are stored in the smallest field containing them.
    let i = Cyclotomic::root_of_unity(12, 3);
    println!("E(12)^3 = {i} (conductor {})", i.conductor());
    let x: Cyclotomic = "1/2 + 3*E(5)^2 - E(5)^4".parse()?;
    let y = x.inv()?;
    println!("x = {x}\n1/x = {y}\nx * (1/x) = {}", &x * &y);
    println!("galois(x, 2) = {}", x.galois(2));
    let (re, im) = x.approx();
    println!("x ≈ {re:.6} + {im:.6}i");
    Ok(())
}
