use facemodel::boltzmann::{Model, ModelParams};
use facemodel::fusion::{kac_peterson, theta_weight, verlinde};
use facemodel::lattice::{Graph, Weight};
use facemodel::su2::*;
use facemodel::CycNum;
use num_complex::Complex64;
use proptest::prelude::*;

fn su2(l: u32, eps: i8) -> Su2 {
    let kz = (1..)
        .find(|&k| {
            ModelParams::from_zeta(2, l, eps, 1, k)
                .map(|p| p.zeta_primitive())
                .unwrap_or(false)
        })
        .unwrap();
    Su2::from_zeta(l, eps, 1, kz).unwrap()
}

fn all() -> Vec<Su2> {
    let mut v = Vec::new();
    for l in 1..=4 {
        v.push(su2(l, 1));
        if l % 2 == 0 {
            v.push(su2(l, -1));
        }
    }
    v
}

/// Fixed by every Galois automorphism that fixes `t`.
fn in_q_t(s: &Su2, x: &CycNum) -> bool {
    let m = s.m as i64;
    let te = s.params.t_exp().rem_euclid(m);
    (1..m)
        .filter(|a| num_integer::Integer::gcd(a, &m) == 1 && (a * te).rem_euclid(m) == te)
        .all(|a| x.galois(a) == *x)
}

#[test]
fn b_set_examples() {
    assert!(b_set(3).contains(&BTriple { k: 0, i: 0, j: 0 }));
    let b1 = b_set(1);
    let e: Vec<BTriple> = [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]
        .iter()
        .map(|&(k, i, j)| BTriple { k, i, j })
        .collect();
    assert_eq!(b1, e);
    assert_eq!(b_set(2).len(), 10);
}

#[test]
fn b_set_matches_fusion_rules() {
    for l in [2u32, 3] {
        let p = ModelParams::from_zeta(2, l, 1, 1, 1).unwrap();
        let f = verlinde(&kac_peterson(&p, 1).unwrap()).unwrap();
        let b = b_set(l);
        for k in 0..=l {
            for i in 0..=l {
                for j in 0..=l {
                    let n = f.get(i as usize, j as usize, k as usize);
                    assert_eq!(
                        n == 1,
                        b.contains(&BTriple { k, i, j }),
                        "L={l} ({k};{i},{j})"
                    );
                    assert!(n <= 1);
                }
            }
        }
    }
}

#[test]
fn c_coeff_examples() {
    for s in all() {
        assert!(s.c_coeff(0, 0, 0).unwrap().is_one());
        assert!(s.c_coeff(1, 1, 1).is_err());
        for t in b_set(s.l) {
            let (k, i, j) = (t.k, t.i, t.j);
            let r = s
                .c_coeff(k, i, j)
                .unwrap()
                .div(&s.c_coeff(k, j, i).unwrap())
                .unwrap();
            let sg = if s.eps == 1 && (i + j) % 2 == 1 {
                -1
            } else {
                1
            };
            let e = s
                .qi(j as i64 + 1)
                .div(&s.qi(i as i64 + 1))
                .unwrap()
                .scale(sg);
            assert_eq!(r, e, "{:?} {t:?}", s.params);
        }
    }
}

#[test]
fn c_coeff_eps_minus_in_q_t() {
    for l in [2u32, 4] {
        let s = su2(l, -1);
        for t in b_set(l) {
            assert!(in_q_t(&s, &s.c_coeff(t.k, t.i, t.j).unwrap()), "{t:?}");
        }
    }
    // with eps = 1 an odd color needs sqrt(-1), which is outside Q(z_10)
    let s = su2(3, 1);
    assert!(!in_q_t(&s, &s.c_coeff(1, 0, 1).unwrap()));
}

#[test]
fn c_recursion_from_action_coefficients() {
    // sigma_k(i,j) e(i,i+1; j,j+1) and its dual counterpart; the ratio of the
    // two coefficients is c(k; i+1, j+1) / c(k; i, j).
    for s in all() {
        for t in b_set(s.l) {
            if !admissible(s.l, t.k, t.i + 1, t.j + 1) {
                continue;
            }
            let (k, i, j) = (t.k as i64, t.i as i64, t.j as i64);
            let pre = &s.zp(-k) * &s.tp((-i + j + k) / 2);
            let pre = pre.scale(if s.eps == -1 && ((i - j + k) / 2) % 2 != 0 {
                -1
            } else {
                1
            });
            let a = &pre * &s.qi((i + j - k) / 2 + 1).div(&s.qi(i + 1)).unwrap();
            let b = &pre * &s.qi((i + j + k) / 2 + 2).div(&s.qi(i + 2)).unwrap();
            let r = s
                .c_coeff(t.k, t.i + 1, t.j + 1)
                .unwrap()
                .div(&s.c_coeff(t.k, t.i, t.j).unwrap())
                .unwrap();
            assert_eq!(r, b.div(&a).unwrap(), "{:?} {t:?}", s.params);
        }
    }
}

#[test]
fn base_weight_matches_face_model() {
    for (l, eps) in [(2u32, 1i8), (2, -1), (3, 1), (4, -1)] {
        let s = su2(l, eps);
        let model = Model::new(s.params.clone()).unwrap();
        let g: &Graph = &model.g;
        let vx = |a: u32| g.index_of(&Weight(vec![a as i32, 0])).unwrap();
        let step = |a: u32, b: u32| if b > a { 1u8 } else { 2u8 };
        for tl in 0..=l {
            for tr in 0..=l {
                for bl in 0..=l {
                    for br in 0..=l {
                        if tl.abs_diff(tr) != 1
                            || tl.abs_diff(bl) != 1
                            || br.abs_diff(tr) != 1
                            || br.abs_diff(bl) != 1
                        {
                            continue;
                        }
                        let w = model.sigma_weight(
                            vx(tl),
                            step(tl, tr),
                            step(tr, br),
                            step(tl, bl),
                            step(bl, br),
                        );
                        assert_eq!(
                            s.face(tl, tr, bl, br),
                            w,
                            "L={l} eps={eps} [{tl} {tr}; {bl} {br}]"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn w_tables_base_and_inverse() {
    for s in all() {
        let r = check_su2(&s.params);
        assert!(r.passed(), "{:?}\n{r}", s.params);
    }
}

#[test]
fn w_inadmissible_is_zero() {
    let s = su2(2, 1);
    assert!(s.w_pm(1, 1, true, 0, 0, 1, 0).is_zero());
    assert!(s.w_pm(2, 2, false, 0, 0, 0, 0).is_zero());
}

#[test]
fn ising_block_float_oracle() {
    // L = 2, m = n = 1, all corners spin 1: a 2x2 block on i, j in {0, 2}
    // whose eigenvalues are zeta^-1 t and -zeta^-1 t^-1.
    let s = su2(2, 1);
    let t = Complex64::from_polar(1.0, std::f64::consts::PI * s.params.kt as f64 / 4.0);
    let z = Complex64::from_polar(1.0, std::f64::consts::PI * s.params.kz as f64 / 8.0);
    let q2 = t + 1.0 / t;
    let e = s.params.eps as f64;
    let oracle = [
        [t * t / (z * q2), e / (z * q2)],
        [
            e * (t * t + 1.0 + 1.0 / (t * t)) / (z * q2),
            -1.0 / (z * t * t * q2),
        ],
    ];
    let idx = [0u32, 2];
    for (a, &i) in idx.iter().enumerate() {
        for (b, &j) in idx.iter().enumerate() {
            let x = s.w_pm(1, 1, true, 1, i, j, 1).to_complex();
            assert!(
                (x - oracle[b][a]).norm() < 1e-12,
                "i={i} j={j}: {x} vs {}",
                oracle[b][a]
            );
        }
    }
    let tr = oracle[0][0] + oracle[1][1];
    let det = oracle[0][0] * oracle[1][1] - oracle[0][1] * oracle[1][0];
    let (l1, l2) = (t / z, -1.0 / (z * t));
    assert!((tr - (l1 + l2)).norm() < 1e-12);
    assert!((det - l1 * l2).norm() < 1e-12);
}

#[test]
fn theta_examples() {
    let s = su2(3, 1);
    assert!(s.theta(0, 1).is_one());
    assert!(s.theta(0, -1).is_one());
    assert_eq!(s.theta(1, 1), s.zp(3));
    assert_eq!(s.theta(1, -1), -s.zp(3));
    for i in 0..=3 {
        assert_eq!(
            s.theta(i, 1),
            theta_weight(&s.params, &Weight(vec![i as i32, 0]))
        );
    }
}

#[test]
fn hopf_trace_is_s_matrix() {
    for s in all() {
        for iota in [1i8, -1] {
            let p = ModelParams {
                iota,
                ..s.params.clone()
            };
            let kp = kac_peterson(&p, facemodel::fusion::effective_iota(&p)).unwrap();
            for a in 0..=s.l {
                for b in 0..=s.l {
                    assert_eq!(&hopf_trace(&s, iota, a, b), kp.get(a as usize, b as usize));
                }
            }
        }
    }
}

#[test]
fn valley_has_length_zero() {
    for (i, j, k) in [(0, 0, 0), (2, 1, 3), (3, 3, 4), (1, 2, 1)] {
        let v = valley(i, j, k);
        assert_eq!(v.len(), k as usize + 1);
        assert_eq!((v[0], *v.last().unwrap()), (i, j));
        assert_eq!(sgn_len(&v), 0);
    }
    assert_eq!(sgn_len(&[1, 2, 1]), 1);
    assert_eq!(sgn_len(&[0, 1, 2, 1, 0]), 4);
}

proptest! {
    #[test]
    fn sgn_len_two_definitions_agree(start in 10u32..20, ups in proptest::collection::vec(any::<bool>(), 0..10)) {
        let mut p = vec![start];
        for u in ups {
            let x = *p.last().unwrap();
            p.push(if u { x + 1 } else { x - 1 });
        }
        prop_assert_eq!(sgn_len(&p), sgn_len_inversions(&p));
    }
}
