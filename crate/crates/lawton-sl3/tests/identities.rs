use lawton_sl3::*;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * 1f64.max(a.norm()).max(b.norm())
}

#[test]
fn ten_thousand_random_pairs() {
    let t = std::time::Instant::now();
    let report = run_selftest(10_000, 42, Tolerances::default(), 4);
    assert!(report.passed(), "{report:?}");
    assert!(report.max_lawton_residual <= 1e-8);
    assert!(report.max_cayley_hamilton <= 1e-9);
    assert!(t.elapsed().as_secs_f64() < 30.0);
}

#[test]
fn conjugation_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let (a, _) = random_unimodular(&mut rng);
        let (b, _) = random_unimodular(&mut rng);
        let (g, _) = random_unimodular(&mut rng);
        let c0 = trace_coords(&a, &b);
        let c1 = trace_coords(&a.conjugate_by(g.matrix()), &b.conjugate_by(g.matrix()));
        for (p, q) in c0.to_array().into_iter().zip(c1.to_array()) {
            assert!(close(p, q, 1e-9), "{p} vs {q}");
        }
        assert!(close(c0.tau, c1.tau, 1e-9));
    }
}

#[test]
fn swap_gives_the_other_root() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let (a, _) = random_unimodular(&mut rng);
        let (b, _) = random_unimodular(&mut rng);
        let ab = trace_coords(&a, &b);
        let ba = trace_coords(&b, &a);
        let expect = [ab.y, ab.x, ab.z, ab.v, ab.u, ab.w, ab.s, ab.r];
        for (p, q) in ba.to_array().into_iter().zip(expect) {
            assert!(close(p, q, 1e-9));
        }
        let (p, q) = (eval_p(&ab), eval_q(&ab));
        assert!(close(ab.tau + ba.tau, p, 1e-8));
        assert!(close(ab.tau * ba.tau, q, 1e-8));
    }
}

#[test]
fn inversion_swaps_coordinates() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..300 {
        let (a, _) = random_unimodular(&mut rng);
        let (b, _) = random_unimodular(&mut rng);
        let c0 = trace_coords(&a, &b);
        let c1 = trace_coords(&a.inverse(), &b.inverse());
        let expect = [c0.u, c0.v, c0.w, c0.x, c0.y, c0.z, c0.s, c0.r];
        for (p, q) in c1.to_array().into_iter().zip(expect) {
            assert!(close(p, q, 1e-9));
        }
        assert!(lawton_residual(&a.inverse(), &b.inverse()) < 1e-8);
    }
}

#[test]
fn z_w_slice_of_p() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let r = c(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
        let s = c(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
        let pt = TraceCoords::from_array([c(0., 0.), c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.), c(1., 0.), r, s]);
        assert!(close(eval_p(&pt), r * s - 2.0, 1e-12));
    }
}

#[test]
fn hopf_slice_of_q() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..1000 {
        let mut draw = || c(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
        let (z, w, r, s) = (draw(), draw(), draw(), draw());
        let zero = c(0., 0.);
        let pt = TraceCoords::from_array([zero, zero, z, zero, zero, w, r, s]);
        let expected = r.powi(3) + s.powi(3) + z.powi(3) + w.powi(3) + r * s * z * w - 6.0 * r * s - 6.0 * z * w + 9.0;
        assert!(close(eval_q(&pt), expected, 1e-12));
    }
}

#[test]
fn hopf_pair_in_floating_point() {
    let w = c(-0.5, 3f64.sqrt() / 2.0);
    let (o, l) = (c(0., 0.), c(1., 0.));
    let a = Sl3Matrix::from_rows([[l, o, o], [o, w, o], [o, o, w * w]], 1e-12).unwrap();
    let b = Sl3Matrix::from_rows([[o, o, l], [l, o, o], [o, l, o]], 1e-12).unwrap();
    let t = trace_coords(&a, &b);
    assert!(t.to_array().iter().all(|v| v.norm() < 1e-12));
    assert!((t.tau * t.tau + 3.0 * t.tau + 9.0).norm() < 1e-12);
    assert!(lawton_residual(&a, &b) < 1e-12);
}

#[test]
fn exact_integer_pairs() {
    // unimodular integer matrices: the identity holds exactly in ℤ
    let a = Mat3::<i128>([[2, 1, 0], [1, 1, 0], [0, 0, 1]]);
    let b = Mat3::<i128>([[1, 0, 2], [0, 1, 0], [-1, 3, -1]]);
    assert_eq!((a.det(), b.det()), (1, 1));
    let t = trace_coords_exact(&a, &b).unwrap();
    assert_eq!(t.tau * t.tau - eval_p(&t) * t.tau + eval_q(&t), 0);
}

proptest! {
    #[test]
    fn display_and_table_agree(vals in prop::array::uniform8(-60i128..60)) {
        let display = parse_polynomial(Q_DISPLAY).unwrap().eval(&vals);
        let table = q_polynomial().eval(&vals);
        prop_assert_eq!(display, table);
        prop_assert_eq!(parse_polynomial(P_DISPLAY).unwrap().eval(&vals), p_polynomial().eval(&vals));
    }

    #[test]
    fn integer_matrix_identity(e in prop::array::uniform3(-3i128..4), f in prop::array::uniform3(-3i128..4)) {
        // products of elementary matrices have determinant one
        let a = Mat3([[1, e[0], e[1]], [0, 1, e[2]], [0, 0, 1]]).mul(&Mat3([[1, 0, 0], [f[0], 1, 0], [f[1], f[2], 1]]));
        let b = Mat3([[1, 0, 0], [e[2], 1, 0], [f[2], e[0], 1]]).mul(&Mat3([[1, f[1], e[1]], [0, 1, f[0]], [0, 0, 1]]));
        let t = trace_coords_exact(&a, &b).unwrap();
        prop_assert_eq!(t.tau * t.tau - eval_p(&t) * t.tau + eval_q(&t), 0);
    }
}
