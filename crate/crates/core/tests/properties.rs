use proptest::prelude::*;
use quasispin::arith::{ExactMatrix, QuadScalar, Rational};
use quasispin::gt::{enumerate_tableaux, ClassificationTable, StateRow};
use quasispin::lie::weyl_dimension_o5;
use quasispin::report::{read_report, read_table, write_report, write_table, Check, Format, Status, VerificationReport};
use quasispin::uea::{evaluate, Uea, UeaElement};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(p, q)| Rational::frac(p, q))
}

fn quad() -> impl Strategy<Value = QuadScalar> {
    (rational(), rational()).prop_map(|(a, b)| QuadScalar::new(a, b))
}

fn small_matrix(n: usize) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(quad(), n * n).prop_map(move |xs| {
        ExactMatrix::from_rows(xs.chunks(n).map(<[QuadScalar]>::to_vec).collect()).unwrap()
    })
}

/// Horner evaluation of a polynomial with matrix argument.
fn poly_at(coeffs: &[QuadScalar], m: &ExactMatrix) -> ExactMatrix {
    let n = m.rows();
    let mut acc = ExactMatrix::zeros(n, n);
    for c in coeffs.iter().rev() {
        acc = acc.mul(m).unwrap().add(&ExactMatrix::identity(n).scale(c)).unwrap();
    }
    acc
}

proptest! {
    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.recip().unwrap()).is_one());
        }
        let back: Rational = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn quad_field_laws(x in quad(), y in quad(), z in quad()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!((&x * &y).norm(), &x.norm() * &y.norm());
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<QuadScalar>(&json).unwrap(), x);
    }

    #[test]
    fn cayley_hamilton(m in (1usize..5).prop_flat_map(small_matrix)) {
        let p = m.characteristic_polynomial().unwrap();
        prop_assert_eq!(p.len(), m.rows() + 1);
        prop_assert!(p.last().unwrap().is_one());
        prop_assert!(poly_at(&p, &m).is_zero());
        prop_assert_eq!(-&p[m.rows() - 1], m.trace());
    }

    #[test]
    fn rank_nullity(m in (1usize..5).prop_flat_map(small_matrix)) {
        let (rank, kernel) = m.rank_and_kernel();
        prop_assert_eq!(rank + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(QuadScalar::is_zero));
        }
    }

    #[test]
    fn tableaux_count_weyl_dimension(d1 in -8i64..=0, gap in 0i64..=8) {
        // doubled coordinates: λ1 = d1/2, λ2 = λ1 - gap
        let l1 = Rational::frac(d1, 2);
        let l2 = &l1 - &Rational::from_int(gap);
        prop_assert_eq!(enumerate_tableaux(&l1, &l2).unwrap().len() as u64, weyl_dimension_o5(&l1, &l2).unwrap());
    }
}

fn status() -> impl Strategy<Value = Status> {
    prop_oneof![Just(Status::Pass), Just(Status::Fail), Just(Status::Anomaly)]
}

fn check() -> impl Strategy<Value = Check> {
    ("[a-z][a-z0-9.,-]{0,12}", status(), proptest::option::of((any::<i32>(), "[ -~]{1,10}")), rational()).prop_map(
        |(id, status, w, r)| {
            let witness = match (status, w) {
                (Status::Pass, None) => None,
                (_, w) => Some(serde_json::json!({ "n": w.as_ref().map_or(0, |x| x.0), "s": w.map(|x| x.1), "r": r })),
            };
            Check { id, status, witness }
        },
    )
}

fn state_row() -> impl Strategy<Value = StateRow> {
    (rational(), rational(), rational(), 0u32..5, prop_oneof![Just("A"), Just("B"), Just("C"), Just("D")], 0u8..2, 1usize..9)
        .prop_map(|(t, tau0, n, k, case, sigma, slice_dim)| StateRow { t, tau0, n, k, case: case.to_string(), sigma, slice_dim })
}

proptest! {
    #[test]
    fn report_round_trip(suite in "[a-z-]{1,10}", checks in proptest::collection::vec(check(), 0..6), ms in any::<u32>()) {
        let mut r = VerificationReport::new(suite);
        r.extend(checks);
        r.wall_time_ms = ms as u64;
        for f in [Format::Json, Format::Csv] {
            let mut buf = Vec::new();
            write_report(&r, f, &mut buf).unwrap();
            let back = read_report(f, buf.as_slice()).unwrap();
            if f == Format::Csv && r.checks.is_empty() {
                // an empty CSV carries no suite row
                continue;
            }
            prop_assert_eq!(&back, &r);
        }
    }

    #[test]
    fn table_round_trip(l1 in rational(), l2 in rational(), states in proptest::collection::vec(state_row(), 0..8)) {
        let t = ClassificationTable { weight: [l1, l2], states };
        for f in [Format::Json, Format::Csv] {
            let mut buf = Vec::new();
            write_table(&t, f, &mut buf).unwrap();
            if f == Format::Csv && t.states.is_empty() {
                continue;
            }
            prop_assert_eq!(read_table(f, buf.as_slice()).unwrap(), t.clone());
        }
    }
}

fn word(len: usize) -> impl Strategy<Value = Vec<u16>> {
    proptest::collection::vec(0u16..10, 0..=len)
}

fn element() -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
    proptest::collection::vec((word(3), -3i64..=3), 1..4)
}

fn build(terms: &[(Vec<u16>, i64)]) -> UeaElement {
    let mut e = UeaElement::zero();
    for (w, c) in terms {
        e.add_term(w.clone(), Rational::from_int(*c));
    }
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_order_associative_and_faithful(a in element(), b in element(), c in element()) {
        let u = Uea::new(5).unwrap();
        let (a, b, c) = (build(&a), build(&b), build(&c));
        let left = u.multiply(&u.multiply(&a, &b), &c);
        let right = u.multiply(&a, &u.multiply(&b, &c));
        prop_assert_eq!(&left, &right);
        prop_assert!(Uea::is_normal(&left));
        let mats = u.algebra().defining_sparse();
        let raw = a.concat(&b).concat(&c);
        prop_assert_eq!(evaluate(&raw, &mats), evaluate(&left, &mats));
    }
}
