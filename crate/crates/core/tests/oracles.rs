use kaclie::datum::{d_theta, datum_of, nreg_dims};
use kaclie::grading::dims_of;
use kaclie::kac::{canonicalize, equivalent, n_regular_inner, KacDiagram};
use kaclie::rootsystem::{Family, SimpleType};
use num_integer::Integer;
use proptest::prelude::*;

/// `dim g_i` for an inner grading of `sl_n`, counted from the diagonal element directly.
fn sl_dims(labels: &[i64]) -> Vec<usize> {
    let m: i64 = labels.iter().sum();
    let n = labels.len();
    let s: Vec<i64> = (0..n).map(|a| labels[1..=a].iter().sum()).collect();
    let mut dims = vec![0usize; m as usize];
    for a in 0..n {
        for b in 0..n {
            dims[(s[a] - s[b]).rem_euclid(m) as usize] += 1;
        }
    }
    dims[0] -= 1;
    dims
}

fn sl(n: usize) -> SimpleType {
    SimpleType::new(Family::A, n - 1).unwrap()
}

fn labels(max_n: usize) -> impl Strategy<Value = Vec<i64>> {
    (2..=max_n).prop_flat_map(|n| prop::collection::vec(0i64..4, n)).prop_filter("coprime labels", |v| v.iter().fold(0, |g, &x| g.gcd(&x)) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn sl_dimension_vector_matches_counting(l in labels(6)) {
        let d = KacDiagram::new(sl(l.len()), 1, l.clone()).unwrap();
        prop_assert_eq!(dims_of(&d), sl_dims(&l));
    }

    #[test]
    fn rotated_sl_labels_are_equivalent(l in labels(6), k in 0usize..6) {
        let n = l.len();
        let mut r = l.clone();
        r.rotate_left(k % n);
        let a = KacDiagram::new(sl(n), 1, l).unwrap();
        let b = KacDiagram::new(sl(n), 1, r).unwrap();
        prop_assert!(equivalent(&a, &b));
        prop_assert_eq!(dims_of(&a), dims_of(&b));
    }

    #[test]
    fn canonical_form_is_idempotent(l in labels(6)) {
        let d = KacDiagram::new(sl(l.len()), 1, l).unwrap();
        let c = canonicalize(&d);
        prop_assert_eq!(canonicalize(&c).to_string(), c.to_string());
    }

    #[test]
    fn d_theta_of_sl_gradings(l in labels(6)) {
        let d = KacDiagram::new(sl(l.len()), 1, l).unwrap();
        prop_assert!(d_theta(&dims_of(&d)).is_ok());
    }
}

#[test]
fn principal_sl_grading_has_height_counts() {
    for n in 2..=6usize {
        for m in 1..=(2 * n as i64) {
            let d = n_regular_inner(sl(n), m).unwrap();
            let dt = datum_of(sl(n), 1, m).unwrap();
            assert_eq!(dims_of(&d), nreg_dims(&dt).unwrap(), "sl_{n} m={m}");
        }
    }
    let ones = vec![1i64; 4];
    let d = KacDiagram::new(sl(4), 1, ones.clone()).unwrap();
    assert_eq!(dims_of(&d), vec![3, 4, 4, 4]);
    assert_eq!(sl_dims(&ones), vec![3, 4, 4, 4]);
}
