use facemodel::boltzmann::{
    check_convolution_inverse, check_frt, check_inversion, check_sigma, check_ybe, Model,
    ModelParams,
};
use facemodel::lattice::{kappa_sq, Path};
use facemodel::CycNum;

fn model(n: usize, l: u32, eps: i8, kz: i64) -> Model {
    Model::new(ModelParams::from_zeta(n, l, eps, 1, kz).unwrap()).unwrap()
}

fn edge(v: usize, i: u8) -> Path {
    Path::new(v, vec![i])
}

#[test]
fn ybe_and_hecke_small() {
    for (n, l) in [(2, 2), (2, 3), (3, 2)] {
        for eps in [1, -1] {
            let m = model(
                n,
                l,
                eps,
                if (n + l as usize) % 2 == 1 && eps == -1 && n % 2 == 0 {
                    2
                } else {
                    1
                },
            );
            let r = check_ybe(&m);
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn inversion_n3_l2() {
    let m = model(3, 2, 1, 1);
    let r = check_inversion(&m);
    assert!(r.passed(), "{r}");
}

#[test]
fn frt_ideal_and_convolution_inverse() {
    for (n, l, eps, kz) in [(2, 2, 1, 1), (2, 3, -1, 2), (3, 2, 1, 1)] {
        let m = model(n, l, eps, kz);
        let r = check_frt(&m);
        assert!(r.passed(), "{r}");
    }
    let m = model(2, 2, -1, 3);
    let c = check_convolution_inverse(&m, 3);
    assert!(c.passed(), "{:?}", c.failures);
}

#[test]
fn sigma_gauge_matches_transpose() {
    for (n, l) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let m = model(n, l, 1, 1);
        let r = check_sigma(&m);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn sigma_n2_table() {
    // Explicit SU(2) table in corner form, vertex i = lambda_1.
    let m = model(2, 3, -1, 2);
    let g = &m.g;
    let zi = &m.zeta_inv;
    for v in 0..g.num_vertices() {
        let i = g.weight(v).0[0] as i64;
        // w^Sigma[i, i+1; i+1, i]: top-right (v|1,2), left-bottom (v|1,2).
        if g.walk(v, &[1, 2]).is_some() {
            let expect = -(&(zi * &m.tp(-(i + 1))) * &m.qi(i + 1).inv().unwrap());
            assert_eq!(m.sigma_weight(v, 1, 2, 1, 2), expect);
        }
        if g.walk(v, &[2, 1]).is_some() {
            let expect = &(zi * &m.tp(i + 1)) * &m.qi(i + 1).inv().unwrap();
            assert_eq!(m.sigma_weight(v, 2, 1, 2, 1), expect);
        }
        if g.walk(v, &[1, 2]).is_some() && g.walk(v, &[2, 1]).is_some() {
            let up = &(zi * m.qi(i + 2)) * &m.qi(i + 1).inv().unwrap();
            assert_eq!(m.sigma_weight(v, 1, 2, 2, 1), up.scale(m.params.eps as i64));
            let dn = &(zi * m.qi(i)) * &m.qi(i + 1).inv().unwrap();
            assert_eq!(m.sigma_weight(v, 2, 1, 1, 2), dn.scale(m.params.eps as i64));
        }
        for s in [1u8, 2] {
            if g.walk(v, &[s, s]).is_some() {
                assert_eq!(m.sigma_weight(v, s, s, s, s), zi * &m.t);
            }
        }
    }
}

#[test]
fn kappa_n2_l3_crossing_face() {
    // kappa(1^|1)^2 = A_2^2 = a_2/a_-2 with a_d = [d+1]/([2][d]).
    let m = model(2, 3, 1, 1);
    let g = &m.g;
    let v1 = g.next(g.zero(), 1).unwrap();
    let k = kappa_sq(g, &Path::new(v1, vec![1]), &m.q).unwrap();
    let a = |d: i64| m.qi(d + 1) * &(m.qi(2) * m.qi(d)).inv().unwrap();
    assert_eq!(k, &a(2) * &a(-2).inv().unwrap());
    assert!(kappa_sq(g, &Path::new(g.zero(), vec![1]), &m.q)
        .unwrap()
        .is_one());
    // Rescaling oracle on the crossing face at 1^.
    let w = m.weight(v1, 1, 2, 2, 1);
    let kin = kappa_sq(g, &Path::new(v1, vec![1, 2]), &m.q).unwrap();
    let kout = kappa_sq(g, &Path::new(v1, vec![2, 1]), &m.q).unwrap();
    assert_eq!(
        m.sigma_weight(v1, 1, 2, 2, 1),
        &(&kin * &kout.inv().unwrap()) * &w
    );
}

#[test]
fn kappa_multiplicative() {
    let m = model(3, 2, 1, 1);
    let g = &m.g;
    for p in g.all_paths(2) {
        for q in g.paths_from(g.target(&p), 2) {
            let pq = g.concat(&p, &q).unwrap();
            let lhs = kappa_sq(g, &pq, &m.q).unwrap();
            let rhs = &kappa_sq(g, &p, &m.q).unwrap() * &kappa_sq(g, &q, &m.q).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn partition_recursions_agree() {
    for (n, l) in [(2, 2), (3, 2)] {
        let m = model(n, l, -1, 1);
        let g = &m.g;
        for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3)] {
            for p in g.all_paths(b) {
                for r in g.paths_from(p.src, a) {
                    for s in g.paths_from(g.target(&p), a) {
                        for q in g.paths(g.target(&r), g.target(&s), b) {
                            let x = m.partition(&r, &p, &q, &s);
                            assert_eq!(x, m.partition_recursive(&r, &p, &q, &s, true));
                            assert_eq!(x, m.partition_recursive(&r, &p, &q, &s, false));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn partition_two_by_two_brute_force() {
    // Sum over the four internal edges of a 2x2 block.
    let m = model(2, 2, 1, 1);
    let g = &m.g;
    let nv = g.num_vertices();
    for p in g.all_paths(2) {
        for r in g.paths_from(p.src, 2) {
            for s in g.paths_from(g.target(&p), 2) {
                for q in g.paths(g.target(&r), g.target(&s), 2) {
                    let v = |p: &Path, k| g.vertex_at(p, k);
                    let mut acc = m.zero();
                    for c in 0..nv {
                        for i1 in 1..=2u8 {
                            for i2 in 1..=2u8 {
                                for i3 in 1..=2u8 {
                                    for i4 in 1..=2u8 {
                                        // Centre vertex c; internal edges: top-mid (v(p,1) -> c),
                                        // left-mid (v(r,1) -> c), c -> v(s,1), c -> v(q,1).
                                        let tm = edge(v(&p, 1), i1);
                                        let lm = edge(v(&r, 1), i2);
                                        let rm = edge(c, i3);
                                        let bm = edge(c, i4);
                                        if g.next(v(&p, 1), i1) != Some(c)
                                            || g.next(v(&r, 1), i2) != Some(c)
                                        {
                                            continue;
                                        }
                                        if g.next(c, i3) != Some(v(&s, 1))
                                            || g.next(c, i4) != Some(v(&q, 1))
                                        {
                                            continue;
                                        }
                                        let e = |p: &Path, k: usize| {
                                            Path::new(v(p, k), vec![p.steps[k]])
                                        };
                                        let f1 = m.face(&e(&r, 0), &e(&p, 0), &lm, &tm);
                                        let f2 = m.face(&tm, &e(&p, 1), &rm, &e(&s, 0));
                                        let f3 = m.face(&e(&r, 1), &lm, &e(&q, 0), &bm);
                                        let f4 = m.face(&bm, &rm, &e(&q, 1), &e(&s, 1));
                                        acc = &acc + &(&(&f1 * &f2) * &(&f3 * &f4));
                                    }
                                }
                            }
                        }
                    }
                    assert_eq!(m.partition(&r, &p, &q, &s), acc);
                }
            }
        }
    }
}

#[test]
fn r_plus_on_generators_is_the_weight() {
    let m = model(2, 2, 1, 1);
    let g = &m.g;
    for p in g.all_paths(1) {
        for q in g.all_paths(1) {
            for r in g.all_paths(1) {
                for s in g.all_paths(1) {
                    assert_eq!(m.r_plus(&p, &q, &r, &s), m.face(&r, &q, &p, &s));
                }
            }
        }
    }
    // Length-0 arguments are vertex idempotents: the counit cases.
    let z = g.zero();
    let p = Path::new(z, vec![1]);
    let (ez, e1) = (Path::empty(z), Path::empty(g.target(&p)));
    assert!(m.r_plus(&e1, &ez, &p, &p).is_one());
    assert!(m.r_plus(&p, &p, &ez, &e1).is_one());
    assert!(m.r_plus(&ez, &ez, &p, &p).is_zero());
}

#[test]
fn r_plus_is_multiplicative_in_second_argument() {
    // R+(a, bc) = sum R+(a1, c) R+(a2, b) on path generators.
    let m = model(2, 3, -1, 2);
    let g = &m.g;
    for p in g.all_paths(1) {
        for q in g.all_paths(1) {
            for r in g.all_paths(1) {
                for u in g.paths_from(g.target(&r), 1) {
                    for s in g.all_paths(1) {
                        for v in g.paths_from(g.target(&s), 1) {
                            let ru = g.concat(&r, &u).unwrap();
                            let sv = g.concat(&s, &v).unwrap();
                            let lhs = m.r_plus(&p, &q, &ru, &sv);
                            let mut rhs = m.zero();
                            for x in g.all_paths(1) {
                                rhs =
                                    &rhs + &(&m.r_plus(&p, &x, &u, &v) * &m.r_plus(&x, &q, &r, &s));
                            }
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn unitarity_of_weights() {
    for (n, l) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let h = (n + l as usize) as i64;
        let mut kts = vec![1, 2 * h - 1];
        if h % 2 == 0 {
            kts.extend([h + 1, h - 1]);
        }
        for kt in kts {
            for eps in [1i8, -1] {
                // Any zeta on the unit circle with zeta^N = eps^(N-1) t.
                let pz = 2 * n as i64 * h;
                let Some(kz) = (0..pz).find(|kz| {
                    ModelParams::new(n, l, eps, 1, kt, *kz)
                        .map(|p| p.det_relation_holds())
                        .unwrap_or(false)
                }) else {
                    continue;
                };
                let m = Model::new(ModelParams::new(n, l, eps, 1, kt, kz).unwrap()).unwrap();
                let g = &m.g;
                for v in 0..g.num_vertices() {
                    for p in g.all_paths(2).into_iter().filter(|p| p.src == v) {
                        let kp = kappa_sq(g, &p, &m.q).unwrap().to_complex();
                        assert!(kp.im.abs() < 1e-9 && kp.re > 0.0, "kappa^2 not positive");
                        for r in g.paths(v, g.target(&p), 2) {
                            let kr = kappa_sq(g, &r, &m.q).unwrap().to_complex();
                            // W^-1 entry from p to r versus the conjugate of W from r to p.
                            let winv = m
                                .inv_weight(v, p.steps[0], p.steps[1], r.steps[0], r.steps[1])
                                .to_complex();
                            let w = m
                                .weight(v, r.steps[0], r.steps[1], p.steps[0], p.steps[1])
                                .to_complex();
                            let rhs = (kr / kp) * w.conj();
                            assert!(
                                (winv - rhs).norm() < 1e-9,
                                "unitarity fails at n={n} l={l} kt={kt}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn sparse_face_op_matches_raw_weight_matrix() {
    let m = model(2, 2, 1, 1);
    let op = m.face_op(2, 1, false);
    for b in &op.blocks {
        for (c, p) in b.basis.iter().enumerate() {
            for (o, r) in b.basis.iter().enumerate() {
                let expect = m.weight(p.src, p.steps[0], p.steps[1], r.steps[0], r.steps[1]);
                assert_eq!(b.mat.get(o, c), &expect);
            }
        }
    }
    let inv = m.face_op(2, 1, true);
    assert!(op.compose(&inv).is_identity());
    let _ = CycNum::one(m.m);
}
