//! Reduce cubic forms modulo a prime and test smoothness.
//!
//! ```text
//! cargo run --example smoothness_probe
//! ```

use cubicsym::catalog::Catalog;
use cubicsym::invariants::{reynolds_basis, CubicForm};
use cubicsym::smoothprobe::{point_count, probe_nonempty, PrimeReduction, ProbeConfig, ProbeOutcome};

pub fn main() -> cubicsym::Result<()> {
    let forms = [
        ("Fermat", CubicForm::fermat()),
        ("Klein", CubicForm::klein()),
        ("cone", "x0^3 + x1^3 + x2^3 + x3^3".parse()?),
    ];
    for p in [7, 11, 13] {
        let r = PrimeReduction::new(p, 1)?;
        println!("p = {p} ({} points in P^4)", point_count(p));
        for (name, f) in &forms {
            let red = r.reduce(f)?;
            let scan = match red.singular_scan() {
                Some(x) => format!("singular at {x:?}"),
                None => "no singular F_p-point".into(),
            };
            println!("  {name:<7} {scan}; smooth over the closure: {}", red.is_geometrically_smooth());
        }
    }

    let g = Catalog::from_env().load("diag-order5")?.group;
    let space = reynolds_basis(&g)?;
    match probe_nonempty(&space, &ProbeConfig::default())? {
        ProbeOutcome::NonEmptyCertified(c) => {
            println!("diag-order5: smooth member found over F_{} at trial {}", c.prime, c.trial);
            for (a, name) in c.coefficients.iter().zip(&c.forms) {
                if *a != 0 {
                    println!("  {a} * {name}");
                }
            }
        }
        ProbeOutcome::Inconclusive { primes, .. } => println!("no smooth member found over {primes:?}"),
    }
    Ok(())
}
