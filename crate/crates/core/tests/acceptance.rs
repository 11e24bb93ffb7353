//! End-to-end acceptance checks. Runs without the test harness so that each
//! criterion prints exactly one PASS/FAIL line.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use cubicsym::audit::{check_criterion, lattice_report, AuditReport, CyclicLocus, NonEmpty};
use cubicsym::catalog::Catalog;
use cubicsym::chars::{character_of, dim_invariant_cubics, dim_special_subvariety, match_classes, ClassFunction};
use cubicsym::groups::{Limits, MatrixGroup};
use cubicsym::invariants::{reynolds_basis, CubicForm, InvariantSpace};
use cubicsym::linalg::commutant_dimension;
use cubicsym::smoothprobe::{point_count, probe_nonempty, PrimeReduction, ProbeConfig, ProbeOutcome};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn catalog() -> Catalog {
    Catalog::builtin()
}

fn audit(id: &str) -> Result<AuditReport, String> {
    let e = catalog().load(id).map_err(|e| format!("{id}: {e}"))?;
    check_criterion(id, &e.group, &ProbeConfig::default()).map_err(|e| format!("{id}: {e}"))
}

fn pair(r: &AuditReport) -> (Option<usize>, u64) {
    (r.dim_moduli, r.dim_special)
}

fn forms(list: &[&str]) -> Vec<CubicForm> {
    list.iter().map(|s| s.parse().expect("valid form")).collect()
}

fn diagonal_nodes() -> Outcome {
    let expected = [
        ("trivial", 10, 15),
        ("diag-involution", 6, 9),
        ("diag-order3", 4, 5),
        ("diag-order5", 2, 3),
        ("klein-four", 4, 6),
    ];
    let mut seen = Vec::new();
    for (id, m, z) in expected {
        let r = audit(id)?;
        ensure(pair(&r) == (Some(m), z), format!("{id}: got {:?}, expected ({m}, {z})", pair(&r)))?;
        seen.push(format!("{id} {}", r.annotation()));
    }
    Ok(seen.join("; "))
}

fn order_55() -> Outcome {
    let e = catalog().load("z11-z5-klein").map_err(|e| e.to_string())?;
    let full = check_criterion("z11-z5-klein", &e.group, &ProbeConfig::default()).map_err(|e| e.to_string())?;
    ensure(pair(&full) == (Some(0), 0), format!("order 55: {:?}", pair(&full)))?;
    let d = e.group.generators()[0].clone();
    let z11 = MatrixGroup::generate(&[d], Limits::default()).map_err(|e| e.to_string())?;
    ensure(z11.order() == 11, "first generator should have order 11")?;
    let r = check_criterion("Z/11", &z11, &ProbeConfig::default()).map_err(|e| e.to_string())?;
    ensure(pair(&r) == (Some(0), 0), format!("Z/11: {:?}", pair(&r)))?;
    let nodes = lattice_report(&e.group, &ProbeConfig::default()).map_err(|e| e.to_string())?;
    let got: Vec<(String, String)> = nodes.iter().map(|n| (n.type_name.clone(), n.report.annotation())).collect();
    let want = [("1", "10 < 15"), ("Z/5", "2 < 3"), ("Z/11", "0 = 0"), ("Z/11:Z/5", "0 = 0")];
    let want: Vec<(String, String)> = want.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    ensure(got == want, format!("lattice {got:?}"))?;
    Ok(format!("order 55 and Z/11 both 0 = 0; lattice {got:?}"))
}

fn alt4() -> Outcome {
    let r = audit("alt4-klein")?;
    let got = (r.dim_u, r.commutant_dim, r.dim_moduli, r.dim_special, r.criterion_holds);
    ensure(got == (5, 3, Some(2), 2, Some(true)), format!("got {got:?}"))?;
    let e = catalog().load("alt4-klein").map_err(|e| e.to_string())?;
    let s = reynolds_basis(&e.group).map_err(|e| e.to_string())?;
    let members = forms(&[
        "x0^3",
        "x1^3",
        "x2*x3*x4",
        "x0*(x2^2 + E(3)^2*x3^2 + E(3)*x4^2)",
        "x1*(x2^2 + E(3)*x3^2 + E(3)^2*x4^2)",
    ]);
    for f in &members {
        ensure(s.contains(f), format!("{f} is not invariant"))?;
    }
    let spanned = InvariantSpace::from_forms(Vec::new(), &members);
    ensure(spanned.basis() == s.basis(), "the five forms do not span the invariants")?;
    Ok(format!("(dim U, commutant, dim M, dim Z, criterion) = {got:?}; general member spans the invariants"))
}

fn alt5() -> Outcome {
    let c = catalog();
    let e = c.load("alt5").map_err(|e| e.to_string())?;
    let table = c.table("alt5").map_err(|e| e.to_string())?;
    let chi5 = table.get("chi5").ok_or("no chi5")?;
    let chi = character_of(&e.group);
    let m = match_classes(&chi, chi5).ok_or("character differs from chi5 on every class matching")?;
    let r = audit("alt5")?;
    let got = (r.dim_u, r.commutant_dim, r.dim_moduli, r.dim_special, r.criterion_holds);
    ensure(got == (2, 1, Some(1), 1, Some(true)), format!("got {got:?}"))?;
    let labels: Vec<&str> = m.iter().map(|&j| table.structure.labels[j].as_str()).collect();
    Ok(format!("classes match chi5 as {labels:?}; {got:?}"))
}

fn psl_datum() -> Outcome {
    let t = catalog().table("psl2-11").map_err(|e| e.to_string())?;
    let chi2 = t.get("chi2").ok_or("no chi2")?;
    let norm = chi2.norm().map_err(|e| e.to_string())?.count().map_err(|e| e.to_string())?;
    let s3 = dim_invariant_cubics(chi2).map_err(|e| e.to_string())?;
    let det = chi2.determinant_from_values().map_err(|e| e.to_string())?;
    let s2 = dim_special_subvariety(chi2, &det).map_err(|e| e.to_string())?;
    ensure((norm, s3, s2) == (1, 1, 0), format!("<chi2,chi2>, <S3 chi2,1>, <S2(det chi2 chi2),1> = {:?}", (norm, s3, s2)))?;
    Ok(format!("<chi2,chi2> = {norm}, <S3 chi2, chi1> = {s3}, <S2(det chi2 * chi2), chi1> = {s2}"))
}

fn z3_semi_z4() -> Outcome {
    let e = catalog().load("z3-semi-z4").map_err(|e| e.to_string())?;
    let s = reynolds_basis(&e.group).map_err(|e| e.to_string())?;
    let expected = InvariantSpace::from_forms(
        Vec::new(),
        &forms(&["x0^3", "x0^2*x1", "x0*x1^2", "x1^3", "x0*x3*x4", "x1*x3*x4", "x3^3 + x4^3"]),
    );
    ensure(s.dim() == 7, format!("dimension {}", s.dim()))?;
    ensure(s.basis() == expected.basis(), "basis differs")?;
    ensure(s.variable_support() == [0, 1, 3, 4], format!("support {:?}", s.variable_support()))?;
    let r = audit("z3-semi-z4")?;
    ensure(r.nonempty.is_empty_certified(), format!("{:?}", r.nonempty))?;
    ensure(r.dim_moduli.is_none() && r.criterion_holds.is_none(), "dim M should be withheld")?;
    Ok("dimension 7 with the expected basis; x2 missing; empty, dim M withheld".into())
}

fn family_43() -> Outcome {
    let e = catalog().load("family-43").map_err(|e| e.to_string())?;
    let s = reynolds_basis(&e.group).map_err(|e| e.to_string())?;
    let want = forms(&["x0^3", "x0*x2*x3", "x1^3", "x2^3", "x3^3", "x4^3"]);
    ensure(s.basis() == want, format!("basis {:?}", s.basis().iter().map(|f| f.to_string()).collect::<Vec<_>>()))?;
    ensure(s.split_variable() == Some(1), format!("split variable {:?}", s.split_variable()))?;
    let r = audit("family-43")?;
    match &r.cyclic_locus {
        CyclicLocus::CertifiedYes(reason) if reason.contains("x1") => Ok(format!("basis exact; cyclic: {reason}")),
        other => Err(format!("cyclic locus {other:?}")),
    }
}

fn rank_one_pair() -> Outcome {
    let g = audit("z3-double")?;
    ensure(pair(&g) == (Some(1), 3) && g.criterion_holds == Some(false), format!("G: {:?}", pair(&g)))?;
    let h = audit("z3-pair")?;
    ensure(pair(&h) == (Some(1), 1) && h.criterion_holds == Some(true), format!("H: {:?}", pair(&h)))?;
    // the same number from characters alone
    let e = catalog().load("z3-pair").map_err(|e| e.to_string())?;
    let chi = character_of(&e.group);
    let s3 = dim_invariant_cubics(&chi).map_err(|e| e.to_string())?;
    let norm = chi.norm().map_err(|e| e.to_string())?.count().map_err(|e| e.to_string())?;
    let linear = reynolds_basis(&e.group).map_err(|e| e.to_string())?.dim() - commutant_dimension(e.group.generators());
    ensure(s3 - norm == 1 && linear == 1, format!("characters {}, linear algebra {linear}", s3 - norm))?;
    Ok(format!("G {}, H {} (characters {s3} - {norm}, linear algebra {linear})", g.annotation(), h.annotation()))
}

fn cyclic_generator() -> Outcome {
    let r = audit("fermat-cyclic")?;
    ensure(r.dim_moduli == Some(4), format!("dim M {:?}", r.dim_moduli))?;
    Ok(format!("dim M = 4 ({})", r.annotation()))
}

fn eigen_profiles_ok(g: &MatrixGroup) -> Result<(), String> {
    for i in 0..g.order() {
        let p = g.eigen_profile(i).map_err(|e| format!("element {i}: {e}"))?;
        ensure(p.dim() == 5, format!("element {i}: multiplicities sum to {}", p.dim()))?;
    }
    Ok(())
}

fn properties() -> Outcome {
    let c = catalog();
    let ids = c.ids().map_err(|e| e.to_string())?;
    for id in &ids {
        let g = c.load(id).map_err(|e| format!("{id}: {e}"))?.group;
        let chi: ClassFunction = character_of(&g);
        let s = reynolds_basis(&g).map_err(|e| e.to_string())?;
        let s3 = dim_invariant_cubics(&chi).map_err(|e| e.to_string())?;
        ensure(s.dim() as u64 == s3, format!("{id}: Reynolds {} vs character {s3}", s.dim()))?;
        let norm = chi.norm().map_err(|e| e.to_string())?.count().map_err(|e| e.to_string())?;
        let comm = commutant_dimension(g.generators());
        ensure(comm as u64 == norm, format!("{id}: commutant {comm} vs <chi,chi> {norm}"))?;
        eigen_profiles_ok(&g).map_err(|e| format!("{id}: {e}"))?;
        let total: usize = g.classes().iter().map(|k| k.size()).sum();
        ensure(total == g.order(), format!("{id}: class sizes sum to {total}"))?;
        s.check_invariance().map_err(|e| format!("{id}: {e}"))?;
    }
    Ok(format!("{} catalog groups: Reynolds = <S3 chi,1>, commutant = <chi,chi>, profiles, class sizes", ids.len()))
}

fn smoothness() -> Outcome {
    let r7 = PrimeReduction::new(7, 1).map_err(|e| e.to_string())?;
    ensure(point_count(7) == 2801, "P^4(F_7) should have 2801 points")?;
    let fermat = r7.reduce(&CubicForm::fermat()).map_err(|e| e.to_string())?;
    ensure(fermat.singular_scan().is_none(), "Fermat cubic singular over F_7")?;
    let r23 = PrimeReduction::new(23, 11).map_err(|e| e.to_string())?;
    let klein = r23.reduce(&CubicForm::klein()).map_err(|e| e.to_string())?;
    let t = Instant::now();
    let scan = klein.singular_scan();
    let elapsed = t.elapsed();
    ensure(scan.is_none(), format!("Klein cubic singular at {scan:?} over F_23"))?;
    ensure(elapsed.as_secs_f64() < 5.0, format!("Klein scan took {elapsed:?}"))?;
    let e = catalog().load("z3-semi-z4").map_err(|e| e.to_string())?;
    let s = reynolds_basis(&e.group).map_err(|e| e.to_string())?;
    let probe = probe_nonempty(&s, &ProbeConfig::default()).map_err(|e| e.to_string())?;
    ensure(matches!(probe, ProbeOutcome::Inconclusive { .. }), format!("{probe:?}"))?;
    ensure(s.cone_point() == Some(2), format!("cone point {:?}", s.cone_point()))?;
    Ok(format!(
        "Fermat smooth over F_7 (2801 points); Klein smooth over F_23 ({} points, {elapsed:.2?}); Z/3:Z/4 inconclusive, cone point e2",
        point_count(23)
    ))
}

fn psl_lattice() -> Outcome {
    let e = catalog().load("psl2-11-klein").map_err(|e| e.to_string())?;
    let nodes = lattice_report(&e.group, &ProbeConfig::default()).map_err(|e| e.to_string())?;
    let want = [
        ("1", "10 < 15"),
        ("Z/2", "6 < 9"),
        ("Z/3", "4 < 5"),
        ("(Z/2)^2", "4 < 6"),
        ("Z/5", "2 < 3"),
        ("Sym(3)", "3 < 4"),
        ("Sym(3)", "3 < 4"),
        ("Z/6", "2 < 3"),
        ("D10", "2 < 3"),
        ("Z/11", "0 = 0"),
        ("Alt(4)", "2 = 2"),
        ("D12", "2 < 3"),
        ("Z/11:Z/5", "0 = 0"),
        ("Alt(5)", "1 = 1"),
        ("Alt(5)", "1 = 1"),
        ("PSL(2,11)", "0 = 0"),
    ];
    let got: Vec<(String, String)> = nodes.iter().map(|n| (n.type_name.clone(), n.report.annotation())).collect();
    let want: Vec<(String, String)> = want.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    ensure(got == want, format!("{got:?}"))?;
    let mut types: Vec<&str> = got.iter().map(|(t, _)| t.as_str()).collect();
    types.dedup();
    ensure(types.len() == 14, format!("{} types", types.len()))?;
    for n in &nodes {
        if let (Some(m), NonEmpty::Certified { .. }) = (n.report.dim_moduli, &n.report.nonempty) {
            ensure(m as u64 <= n.report.dim_special, format!("{}: dim M > dim Z", n.type_name))?;
        }
    }
    Ok(format!("{} subgroup classes, 14 types, all annotations match", nodes.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("1 root and diagonal lattice nodes", diagonal_nodes),
        ("2 order-55 group, Z/11 and their lattice", order_55),
        ("3 Alt(4) family", alt4),
        ("4 Alt(5) model", alt5),
        ("5 PSL(2,11) from character data", psl_datum),
        ("6 Z/3:Z/4 invariants and emptiness", z3_semi_z4),
        ("7 family 43 basis and cyclic locus", family_43),
        ("8 rank-one diagonal pair", rank_one_pair),
        ("9 cyclic cubic generator", cyclic_generator),
        ("10 property suites over the catalog", properties),
        ("11 smoothness probe", smoothness),
        ("12 PSL(2,11) subgroup lattice", psl_lattice),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{:.2?}]", t.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} [{:.2?}]", t.elapsed());
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
