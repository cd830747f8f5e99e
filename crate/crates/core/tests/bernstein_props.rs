use ccl_core::range::{range, sign_eval, SignSet, Tolerance};
use ccl_core::{BernsteinPoly, FaceRef, HyperRect};
use proptest::prelude::*;

/// Random polynomial of degree <= (3, 3) on a random box, plus a point in it.
fn poly_and_point() -> impl Strategy<Value = (BernsteinPoly<f64>, Vec<f64>)> {
    (1usize..=3, 1usize..=3, -2.0..2.0f64, -2.0..2.0f64, 0.1..3.0f64, 0.1..3.0f64).prop_flat_map(
        |(n0, n1, x0, y0, w, h)| {
            let count = (n0 + 1) * (n1 + 1);
            (prop::collection::vec(-1.0..1.0f64, count), 0.0..=1.0f64, 0.0..=1.0f64).prop_map(move |(c, s, t)| {
                let dom = HyperRect::from_bounds(&[(x0, x0 + w), (y0, y0 + h)]).unwrap();
                let p = BernsteinPoly::new(vec![n0, n1], dom, c).unwrap();
                (p, vec![x0 + s * w, y0 + t * h])
            })
        },
    )
}

fn rel_close(a: f64, b: f64, scale: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * scale.max(1.0)
}

proptest! {
    #[test]
    fn partition_of_unity((p, x) in poly_and_point()) {
        let ones = BernsteinPoly::new(p.degree().to_vec(), p.domain().clone(), vec![1.0; p.coeffs().len()]).unwrap();
        prop_assert!((ones.evaluate(&x).unwrap() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn value_within_coefficient_hull((p, x) in poly_and_point()) {
        let v = p.evaluate(&x).unwrap();
        let slack = 1e-14 * p.max_abs_coeff();
        prop_assert!(p.min_coeff() - slack <= v && v <= p.max_coeff() + slack);
    }

    #[test]
    fn subdivision_narrows_bounds_and_preserves_values((p, x) in poly_and_point(), axis in 0usize..2, t in 0.05..0.95f64) {
        let (left, right) = p.subdivide(axis, t).unwrap();
        let slack = 1e-15 * p.max_abs_coeff();
        for child in [&left, &right] {
            prop_assert!(child.min_coeff() >= p.min_coeff() - slack);
            prop_assert!(child.max_coeff() <= p.max_coeff() + slack);
        }
        let child = if left.domain().contains(&x) { &left } else { &right };
        let (a, b) = (child.evaluate(&x).unwrap(), p.evaluate(&x).unwrap());
        prop_assert!(rel_close(a, b, p.max_abs_coeff(), 1e-12));
    }

    #[test]
    fn split_children_agree_with_parent((p, x) in poly_and_point()) {
        let code = p.domain().child_index_of(&x);
        let child = p.child(code);
        prop_assert!(child.domain().contains(&x));
        prop_assert!(rel_close(child.evaluate(&x).unwrap(), p.evaluate(&x).unwrap(), p.max_abs_coeff(), 1e-12));
    }

    #[test]
    fn face_restriction_commutes_with_evaluation((p, x) in poly_and_point(), axis in 0usize..2, upper in any::<bool>()) {
        let face = if upper { FaceRef::upper(axis) } else { FaceRef::lower(axis) };
        let f = p.restrict_to_face(face);
        let y: Vec<f64> = x.iter().enumerate().filter(|&(k, _)| k != axis).map(|(_, &v)| v).collect();
        let on_face = p.domain().embed_face_point(face, &y);
        prop_assert!(rel_close(f.evaluate(&y).unwrap(), p.evaluate(&on_face).unwrap(), p.max_abs_coeff(), 1e-12));
    }

    #[test]
    fn restrict_to_box_matches((p, x) in poly_and_point(), a in 0.0..0.5f64, b in 0.5..1.0f64) {
        let lo = p.domain().lo().to_vec();
        let sub = HyperRect::from_bounds(&[
            (lo[0] + a * p.domain().width(0), lo[0] + b * p.domain().width(0)),
            (lo[1] + a * p.domain().width(1), lo[1] + b * p.domain().width(1)),
        ]).unwrap();
        let q = p.restrict_to_box(&sub).unwrap();
        let inside: Vec<f64> = (0..2).map(|k| sub.lo()[k] + (x[k] - lo[k]) / p.domain().width(k) * sub.width(k)).collect();
        prop_assert!(rel_close(q.evaluate(&inside).unwrap(), p.evaluate(&inside).unwrap(), p.max_abs_coeff(), 1e-12));
    }

    #[test]
    fn derivative_matches_finite_differences((p, x) in poly_and_point(), axis in 0usize..2) {
        let dp = p.derivative(axis).unwrap();
        let h = 1e-6 * p.domain().width(axis);
        let (mut a, mut b) = (x.clone(), x.clone());
        a[axis] = (x[axis] - h).max(p.domain().lo()[axis]);
        b[axis] = (x[axis] + h).min(p.domain().hi()[axis]);
        let fd = (p.evaluate(&b).unwrap() - p.evaluate(&a).unwrap()) / (b[axis] - a[axis]);
        let scale = p.max_abs_coeff() / p.domain().width(axis) * 3.0;
        prop_assert!(rel_close(dp.evaluate(&x).unwrap(), fd, scale, 1e-6));
    }

    #[test]
    fn range_contains_sampled_values((p, x) in poly_and_point()) {
        let r = range(&p);
        let v = p.evaluate(&x).unwrap();
        let slack = 1e-12 * p.max_abs_coeff();
        prop_assert!(r.lo - slack <= v && v <= r.hi + slack, "{v} not in {r:?}");
        prop_assert!(p.min_coeff() - slack <= r.lo && r.hi <= p.max_coeff() + slack);
    }

    #[test]
    fn sign_eval_is_sound((p, x) in poly_and_point(), eps in prop_oneof![Just(0.0), 1e-12..1e-3f64]) {
        let s = sign_eval(&p, Tolerance::absolute(eps));
        let v = p.evaluate(&x).unwrap();
        // Values clear of rounding noise must have their sign in the set.
        if v.abs() > 1e-12 * p.max_abs_coeff() {
            prop_assert!(s.contains_sign(if v > 0.0 { 1 } else { -1 }), "{v} vs {s:?}");
        }
        prop_assert!(!s.is_empty());
        prop_assert!(s.is_subset_of(SignSet::ALL));
    }
}

#[test]
fn one_dimensional_range_is_exact_for_low_degree() {
    // (2x - 1)^2 on [0, 1]: Bernstein coefficients (1, -1, 1).
    let p = BernsteinPoly::new(vec![2], HyperRect::unit(1), vec![1.0, -1.0, 1.0]).unwrap();
    let r = range(&p);
    assert_eq!((r.lo, r.hi), (0.0, 1.0));
}

#[test]
fn single_precision_instantiation() {
    let p = BernsteinPoly::<f32>::new(vec![1, 1], HyperRect::unit(2), vec![-1.0, 1.0, 1.0, 3.0]).unwrap();
    let v = p.evaluate(&[0.5, 0.5]).unwrap();
    assert!((v - 1.0).abs() < 1e-6);
    let r = range(&p);
    assert!(r.lo <= -1.0 + 1e-6 && r.hi >= 3.0 - 1e-6);
}
