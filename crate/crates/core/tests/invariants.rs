//! Property tests for the exact-arithmetic kernel: field axioms on both
//! coefficient fields, rank invariance under row operations and field
//! change, and the lattice laws of projective subspaces that the whole
//! dimension engine leans on.

use proptest::prelude::*;

use jembed_core::field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
use jembed_core::linalg::{Matrix, ProjSubspace};

const AMBIENT: usize = 5;

fn small_rows() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(
        prop::collection::vec(-9i64..=9, AMBIENT + 1),
        1..=AMBIENT + 2,
    )
}

fn sub(rows: &[Vec<i64>]) -> ProjSubspace<Rationals> {
    ProjSubspace::from_i64_rows(Rationals, AMBIENT, rows).unwrap()
}

fn field_axioms<F: Field>(f: &F, a: i64, b: i64, c: i64) {
    let (x, y, z) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
    assert_eq!(f.add(&f.add(&x, &y), &z), f.add(&x, &f.add(&y, &z)));
    assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
    assert_eq!(
        f.mul(&x, &f.add(&y, &z)),
        f.add(&f.mul(&x, &y), &f.mul(&x, &z))
    );
    assert_eq!(f.add(&x, &f.neg(&x)), f.zero());
    if !f.is_zero(&x) {
        assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms_hold(a in -1000000i64..1000000, b in -1000000i64..1000000, c in -1000000i64..1000000) {
        field_axioms(&Rationals, a, b, c);
        field_axioms(&PrimeField::new(DEFAULT_PRIME).unwrap(), a, b, c);
    }

    #[test]
    fn rank_is_stable_under_row_shuffle_and_scaling(rows in small_rows(), k in 1i64..50) {
        let base = Matrix::from_i64_rows(Rationals, &rows).unwrap().rank();

        let mut reversed = rows.clone();
        reversed.reverse();
        prop_assert_eq!(Matrix::from_i64_rows(Rationals, &reversed).unwrap().rank(), base);

        let mut scaled = rows.clone();
        for v in scaled[0].iter_mut() {
            *v *= k;
        }
        prop_assert_eq!(Matrix::from_i64_rows(Rationals, &scaled).unwrap().rank(), base);
    }

    // Entries are tiny, so no minor can be divisible by a 61-bit prime:
    // the ranks must agree exactly, not just generically.
    #[test]
    fn rank_agrees_across_fields(rows in small_rows()) {
        let rat = Matrix::from_i64_rows(Rationals, &rows).unwrap().rank();
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let pri = Matrix::from_i64_rows(f, &rows).unwrap().rank();
        prop_assert_eq!(rat, pri);
    }

    #[test]
    fn span_and_intersection_satisfy_the_dimension_formula(
        a in small_rows(),
        b in small_rows(),
    ) {
        let (a, b) = (sub(&a), sub(&b));
        let join = a.span2(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(a.dim() + b.dim(), join.dim() + meet.dim());
        prop_assert!(join.contains(&a).unwrap() && join.contains(&b).unwrap());
        prop_assert!(a.contains(&meet).unwrap() && b.contains(&meet).unwrap());
    }

    // With A inside C the lattice of subspaces is modular:
    // A + (B meet C) = (A + B) meet C.
    #[test]
    fn subspace_lattice_is_modular(
        c_rows in small_rows(),
        b_rows in small_rows(),
        keep in 0usize..3,
    ) {
        let c = sub(&c_rows);
        let b = sub(&b_rows);
        let kept: Vec<Vec<i64>> = c_rows.iter().take(keep.min(c_rows.len())).cloned().collect();
        let a = if kept.is_empty() {
            ProjSubspace::empty(Rationals, AMBIENT)
        } else {
            sub(&kept)
        };
        prop_assert!(c.contains(&a).unwrap());

        let lhs = a.span2(&b.intersect(&c).unwrap()).unwrap();
        let rhs = a.span2(&b).unwrap().intersect(&c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn containment_matches_span_absorption(a in small_rows(), b in small_rows()) {
        let (a, b) = (sub(&a), sub(&b));
        let contains = b.contains(&a).unwrap();
        let absorbed = b.span2(&a).unwrap() == b;
        prop_assert_eq!(contains, absorbed);
    }
}
