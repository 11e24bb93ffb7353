use cubicsym::exact::Cyclotomic;
use cubicsym::groups::{Limits, MatrixGroup};
use cubicsym::invariants::{reynolds_basis, reynolds_matrix, CubicForm, NCUBICS};
use cubicsym::linalg::Matrix;
use cubicsym::smoothprobe::{PrimeReduction, ProbeConfig, probe_nonempty, ProbeOutcome};
use proptest::prelude::*;

fn diag(n: u32, e: &[i64]) -> Matrix {
    Matrix::diag(&e.iter().map(|&k| Cyclotomic::root_of_unity(n, k)).collect::<Vec<_>>())
}

fn small_form() -> impl Strategy<Value = CubicForm> {
    proptest::collection::vec((-2i64..=2, 0i64..3), NCUBICS).prop_map(|v| {
        CubicForm::from_vector(
            v.into_iter()
                .map(|(a, k)| &Cyclotomic::from_int(a) * &Cyclotomic::root_of_unity(3, k))
                .collect(),
        )
    })
}

fn permutation() -> impl Strategy<Value = Vec<usize>> {
    Just((0..5).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn action_is_a_left_action(f in small_form(), p in permutation(), e in proptest::collection::vec(0i64..3, 5)) {
        let g = Matrix::permutation(&p);
        let h = diag(3, &e);
        let lhs = f.act(&g.mul(&h)).unwrap();
        let rhs = f.act(&h).unwrap().act(&g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_round_trips(f in small_form()) {
        let back: CubicForm = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn reynolds_projects_onto_invariants(p in permutation(), e in proptest::collection::vec(0i64..3, 5)) {
        let g = MatrixGroup::generate(&[Matrix::permutation(&p), diag(3, &e)], Limits::default()).unwrap();
        prop_assume!(g.order() <= 200);
        let r = reynolds_matrix(&g).unwrap();
        prop_assert_eq!(r.mul(&r), r);
        let s = reynolds_basis(&g).unwrap();
        s.check_invariance().unwrap();
    }

    #[test]
    fn saturation_keeps_invariant_dimension(e in proptest::collection::vec(0i64..3, 5)) {
        // ζ3·I acts trivially on cubics, so adjoining it changes nothing
        let g = MatrixGroup::generate(&[diag(3, &e)], Limits::default()).unwrap();
        let sat = g.scalar_saturate().unwrap();
        prop_assert_eq!(reynolds_basis(&g).unwrap().dim(), reynolds_basis(&sat).unwrap().dim());
    }
}

#[test]
fn smooth_examples_agree_across_primes() {
    for f in [CubicForm::fermat(), CubicForm::klein()] {
        for p in [7, 13, 23] {
            let r = PrimeReduction::new(p, 1).unwrap();
            let red = r.reduce(&f).unwrap();
            assert_eq!(red.singular_scan(), None, "{f} over F_{p}");
            assert!(red.is_geometrically_smooth(), "{f} over F_{p}");
        }
    }
}

#[test]
fn klein_is_singular_mod_11() {
    let red = PrimeReduction::new(11, 1).unwrap().reduce(&CubicForm::klein()).unwrap();
    let x = red.singular_scan().expect("singular point over F_11");
    assert!(red.is_singular_at(&x));
    assert!(!red.is_geometrically_smooth());
}

#[test]
fn cone_agrees_with_scan() {
    // every member of a family missing x2 is singular at e2
    let r = PrimeReduction::new(13, 1).unwrap();
    let f: CubicForm = "x0^3 + 2*x0^2*x1 - x1^3 + 5*x0*x3*x4 + x1*x3*x4 + 3*x3^3 + 3*x4^3".parse().unwrap();
    let red = r.reduce(&f).unwrap();
    assert!(red.is_singular_at(&[0, 0, 1, 0, 0]));
    assert!(red.singular_scan().is_some());
}

#[test]
fn probe_is_deterministic() {
    let g = MatrixGroup::generate(&[diag(5, &[0, 1, 2, 3, 4])], Limits::default()).unwrap();
    let s = reynolds_basis(&g).unwrap();
    let a = probe_nonempty(&s, &ProbeConfig::default()).unwrap();
    let b = probe_nonempty(&s, &ProbeConfig::default()).unwrap();
    assert_eq!(a, b);
    assert!(matches!(a, ProbeOutcome::NonEmptyCertified(_)));
}
