//! Runs each example with its default arguments.

#[allow(dead_code)]
#[path = "../examples/cyclotomic_arithmetic.rs"]
mod cyclotomic_arithmetic;
#[allow(dead_code)]
#[path = "../examples/group_classes.rs"]
mod group_classes;
#[allow(dead_code)]
#[path = "../examples/character_inner_products.rs"]
mod character_inner_products;
#[allow(dead_code)]
#[path = "../examples/invariant_cubics.rs"]
mod invariant_cubics;
#[allow(dead_code)]
#[path = "../examples/smoothness_probe.rs"]
mod smoothness_probe;
#[allow(dead_code)]
#[path = "../examples/audit_report.rs"]
mod audit_report;
#[allow(dead_code)]
#[path = "../examples/subgroup_lattice.rs"]
mod subgroup_lattice;
#[allow(dead_code)]
#[path = "../examples/new_catalog_entry.rs"]
mod new_catalog_entry;

#[test]
fn examples_run() {
    cyclotomic_arithmetic::main().unwrap();
    group_classes::run("alt4-klein").unwrap();
    character_inner_products::main().unwrap();
    invariant_cubics::run("family-43").unwrap();
    smoothness_probe::main().unwrap();
    audit_report::run("alt4-klein").unwrap();
    subgroup_lattice::run("z11-z5-klein").unwrap();
    new_catalog_entry::main().unwrap();
}
