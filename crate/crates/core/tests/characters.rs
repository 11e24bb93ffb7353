use cubicsym::catalog::Catalog;
use cubicsym::chars::{character_of, det_character, dim_invariant_cubics, dim_special_subvariety};

#[test]
fn tables_are_orthonormal() {
    for t in Catalog::builtin().tables().unwrap() {
        t.check_orthonormal().unwrap_or_else(|e| panic!("{}: {e}", t.id));
        assert_eq!(t.structure.sizes.iter().sum::<usize>(), t.structure.group_order, "{}", t.id);
    }
}

#[test]
fn alt4_combination() {
    let t = Catalog::builtin().table("alt4").unwrap();
    let chi = t.combination(&[("chi2", 1), ("chi3", 1), ("chi4", 1)]).unwrap();
    let values: Vec<String> = chi.values().iter().map(|v| v.to_string()).collect();
    assert_eq!(values, ["5", "1", "-1", "-1"]);
    let det = chi.determinant_from_values().unwrap();
    assert!(det.values().iter().all(|v| v.is_one()));
    assert_eq!(dim_invariant_cubics(&chi).unwrap(), 5);
    assert_eq!(dim_special_subvariety(&chi, &det).unwrap(), 2);
}

#[test]
fn z3_semi_z4_combination() {
    let t = Catalog::builtin().table("z3-semi-z4").unwrap();
    for other in ["chi3", "chi4"] {
        let chi = t.combination(&[("chi1", 2), (other, 1), ("chi6", 1)]).unwrap();
        let det = chi.determinant_from_values().unwrap();
        assert_eq!(dim_invariant_cubics(&chi).unwrap(), 7);
        assert_eq!(chi.norm().unwrap().count().unwrap(), 6);
        assert_eq!(dim_special_subvariety(&chi, &det).unwrap(), 1);
    }
}

#[test]
fn determinants_agree_between_matrices_and_values() {
    let c = Catalog::builtin();
    for id in ["alt4-klein", "alt5", "z3-semi-z4", "z3-x-s3-5-8-9", "psl2-11-klein"] {
        let g = c.load(id).unwrap().group;
        let chi = character_of(&g);
        let direct = det_character(&g, &chi).unwrap();
        let from_values = chi.determinant_from_values().unwrap();
        assert_eq!(direct.values(), from_values.values(), "{id}");
    }
}
