//! Golden values for the shipped catalog, checked end to end.

use crate::audit::{check_criterion, lattice_report, CyclicLocus};
use crate::catalog::Catalog;
use crate::invariants::{reynolds_basis, CubicForm};
use crate::smoothprobe::ProbeConfig;
use crate::Result;

/// Expected audit numbers for one catalog entry.
pub struct Golden {
    pub entry: &'static str,
    pub dim_u: usize,
    pub commutant: usize,
    pub dim_moduli: Option<usize>,
    pub dim_special: u64,
}

pub const GOLDEN: &[Golden] = &[
    Golden { entry: "trivial", dim_u: 35, commutant: 25, dim_moduli: Some(10), dim_special: 15 },
    Golden { entry: "diag-involution", dim_u: 19, commutant: 13, dim_moduli: Some(6), dim_special: 9 },
    Golden { entry: "diag-order3", dim_u: 13, commutant: 9, dim_moduli: Some(4), dim_special: 5 },
    Golden { entry: "diag-order5", dim_u: 7, commutant: 5, dim_moduli: Some(2), dim_special: 3 },
    Golden { entry: "klein-four", dim_u: 11, commutant: 7, dim_moduli: Some(4), dim_special: 6 },
    Golden { entry: "fermat-cyclic", dim_u: 21, commutant: 17, dim_moduli: Some(4), dim_special: 4 },
    Golden { entry: "z3-double", dim_u: 14, commutant: 13, dim_moduli: Some(1), dim_special: 3 },
    Golden { entry: "z3-pair", dim_u: 12, commutant: 11, dim_moduli: Some(1), dim_special: 1 },
    Golden { entry: "alt4-klein", dim_u: 5, commutant: 3, dim_moduli: Some(2), dim_special: 2 },
    Golden { entry: "alt5", dim_u: 2, commutant: 1, dim_moduli: Some(1), dim_special: 1 },
    Golden { entry: "z3-semi-z4", dim_u: 7, commutant: 6, dim_moduli: None, dim_special: 1 },
    Golden { entry: "family-43", dim_u: 6, commutant: 5, dim_moduli: Some(1), dim_special: 1 },
    Golden { entry: "z11-z5-klein", dim_u: 1, commutant: 1, dim_moduli: Some(0), dim_special: 0 },
];

/// Subgroup types and `dim M vs dim Z` annotations of the order-55 group.
pub const ORDER_55_LATTICE: &[(&str, &str)] =
    &[("1", "10 < 15"), ("Z/5", "2 < 3"), ("Z/11", "0 = 0"), ("Z/11:Z/5", "0 = 0")];

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, f: impl FnOnce() -> Result<std::result::Result<String, String>>) -> CheckResult {
    let name = name.into();
    match f() {
        Ok(Ok(detail)) => CheckResult { name, passed: true, detail },
        Ok(Err(detail)) => CheckResult { name, passed: false, detail },
        Err(e) => CheckResult { name, passed: false, detail: format!("error: {e}") },
    }
}

fn verdict(ok: bool, detail: String) -> std::result::Result<String, String> {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

pub fn run(catalog: &Catalog, config: &ProbeConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for g in GOLDEN {
        out.push(check(format!("audit {}", g.entry), || {
            let e = catalog.load(g.entry)?;
            let r = check_criterion(g.entry, &e.group, config)?;
            let got = (r.dim_u, r.commutant_dim, r.dim_moduli, r.dim_special);
            let want = (g.dim_u, g.commutant, g.dim_moduli, g.dim_special);
            Ok(verdict(got == want, format!("(dim U, commutant, dim M, dim Z) = {got:?}, expected {want:?}")))
        }));
    }
    out.push(check("invariants family-43", || {
        let e = catalog.load("family-43")?;
        let s = reynolds_basis(&e.group)?;
        let want: Vec<CubicForm> = ["x0^3", "x0*x2*x3", "x1^3", "x2^3", "x3^3", "x4^3"]
            .iter()
            .map(|t| t.parse())
            .collect::<Result<_>>()?;
        let got: Vec<String> = s.basis().iter().map(|f| f.to_string()).collect();
        Ok(verdict(s.basis() == want, got.join(", ")))
    }));
    out.push(check("cyclic locus family-43", || {
        let e = catalog.load("family-43")?;
        let r = check_criterion("family-43", &e.group, config)?;
        Ok(verdict(matches!(r.cyclic_locus, CyclicLocus::CertifiedYes(_)), format!("{:?}", r.cyclic_locus)))
    }));
    out.push(check("z3-semi-z4 omits x2", || {
        let e = catalog.load("z3-semi-z4")?;
        let s = reynolds_basis(&e.group)?;
        Ok(verdict(s.cone_point() == Some(2), format!("variable support {:?}", s.variable_support())))
    }));
    out.push(check("lattice z11-z5-klein", || {
        let e = catalog.load("z11-z5-klein")?;
        let nodes = lattice_report(&e.group, config)?;
        let got: Vec<(String, String)> = nodes.iter().map(|n| (n.type_name.clone(), n.report.annotation())).collect();
        let want: Vec<(String, String)> =
            ORDER_55_LATTICE.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        Ok(verdict(got == want, format!("{got:?}")))
    }));
    out.push(check("character tables orthonormal", || {
        let tables = catalog.tables()?;
        for t in &tables {
            t.check_orthonormal()?;
        }
        Ok(Ok(format!("{} tables", tables.len())))
    }));
    out
}
