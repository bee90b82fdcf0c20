use facemodel::boltzmann::{Model, ModelParams};
use facemodel::exterior::*;
use facemodel::lattice::{Graph, Path};
use facemodel::CycNum;

fn model(n: usize, l: u32, eps: i8, kz: i64) -> Model {
    Model::new(ModelParams::from_zeta(n, l, eps, 1, kz).unwrap()).unwrap()
}

/// Smallest zeta exponent giving a primitive t for these parameters.
fn first_kz(n: usize, l: u32, eps: i8) -> i64 {
    (1..)
        .find(|&k| ModelParams::from_zeta(n, l, eps, 1, k).is_ok())
        .unwrap()
}

fn models() -> Vec<Model> {
    let mut v = Vec::new();
    for (n, l) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        for eps in [1, -1] {
            v.push(model(n, l, eps, first_kz(n, l, eps)));
        }
    }
    v
}

#[test]
fn bomega_examples() {
    let g = Graph::new(2, 2);
    let b0 = bomega(&g, 0);
    assert_eq!(b0.len(), 3);
    assert!(b0.iter().all(|x| x.lambda == x.mu));
    let b2 = bomega(&g, 2);
    assert!(b2.iter().all(|x| x.lambda == x.mu));
    assert_eq!(b2.len(), 3);
    // m = 1: exactly the edges of the graph.
    let mut edges: Vec<(usize, usize)> = g
        .all_paths(1)
        .iter()
        .map(|p| (p.src, g.target(p)))
        .collect();
    edges.sort();
    let b1: Vec<(usize, usize)> = bomega(&g, 1).iter().map(|x| (x.lambda, x.mu)).collect();
    assert_eq!(b1, edges);
    assert!(bomega(&g, 3).is_empty());
}

#[test]
fn bomega_paths_nonempty() {
    for (n, l) in [(2, 3), (3, 2), (3, 3), (4, 2)] {
        let g = Graph::new(n, l);
        for m in 0..=n {
            for x in bomega(&g, m) {
                assert!(representative(&g, x.lambda, x.mu, m).is_some());
            }
        }
    }
}

#[test]
fn sign_rewriting_is_confluent() {
    for (n, l) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let g = Graph::new(n, l);
        for eps in [1, -1] {
            let c = check_confluence(&g, eps, n + 1);
            assert!(c.passed(), "{:?}", c.failures);
        }
    }
}

#[test]
fn project_examples() {
    assert_eq!(project(&Path::new(0, vec![2, 1]), 1), Some(1));
    assert_eq!(project(&Path::new(0, vec![1, 2]), 1), Some(-1));
    assert_eq!(project(&Path::new(0, vec![1, 2]), -1), Some(1));
    assert_eq!(project(&Path::new(0, vec![1, 2, 1]), 1), None);
}

#[test]
fn dq_examples() {
    let m = model(2, 3, 1, 1);
    for v in 0..m.g.num_vertices() {
        let l1 = m.g.weight(v).0[0] as i64;
        assert_eq!(dq(&m, v), m.qi(l1 + 1).clone());
    }
    let m = model(3, 2, 1, 1);
    let g = &m.g;
    assert!(dq(&m, g.zero()).is_one());
    let lam1 = g.next(g.zero(), 1).unwrap();
    assert_eq!(dq(&m, lam1), m.qi(3).clone());
}

#[test]
fn det_element_examples() {
    let m = model(2, 2, 1, 1);
    let g = &m.g;
    let z = g.zero();
    let d = det_element(&m, z, z, None).unwrap();
    assert_eq!(d.reference, Path::new(z, vec![1, 2]));
    assert_eq!(d.terms.len(), 1);
    assert_eq!(d.terms[0].0, Path::new(z, vec![1, 2]));
    assert!(d.terms[0].1.is_one());
    let v1 = g.next(z, 1).unwrap();
    let d = det_element(&m, v1, v1, None).unwrap();
    // G^2 at lambda = (1): (1|1,2) and (1|2,1), signs (-1)^{L(p) + L(q)}.
    assert_eq!(d.terms.len(), 2);
    assert!(d.terms[0].1.is_one());
    assert_eq!(d.terms[1].1, CycNum::from_int(m.m, -1));
}

#[test]
fn det_pairing_all_small_models() {
    for m in models() {
        let r = check_det_pairing(&m, 2);
        assert!(r.passed(), "{:?}\n{r}", m.params);
    }
}

#[test]
fn det_pairing_negative_control() {
    // zeta^2 = z_8 but t = z_8^3.
    let p = ModelParams::new(2, 2, 1, 1, 3, 1).unwrap();
    assert!(!p.det_relation_holds());
    let m = Model::new(p).unwrap();
    let r = check_det_pairing(&m, 1);
    assert!(!r.passed());
    let p = ModelParams::new(3, 2, -1, 1, 1, 2).unwrap();
    assert!(!p.det_relation_holds());
    let r = check_det_pairing(&Model::new(p).unwrap(), 1);
    assert!(!r.passed());
}

#[test]
fn omega_action_closed_form() {
    for m in models() {
        let r = check_omega_action(&m);
        assert!(r.passed(), "{:?}\n{r}", m.params);
    }
}

#[test]
fn omega_action_vanishing_case() {
    let m = model(3, 2, 1, 1);
    let g = &m.g;
    for x in bomega(g, 1) {
        let i = representative(g, x.lambda, x.mu, 1).unwrap().steps[0];
        for k in 1..=3u8 {
            if k != i {
                assert!(omega_act(&m, x, k, i).is_none());
            }
        }
    }
}

#[test]
fn braiding_scalars() {
    for m in models() {
        let r = check_braiding_scalars(&m);
        assert!(r.passed(), "{:?}\n{r}", m.params);
    }
}

#[test]
fn braiding_scalar_examples() {
    let m = model(2, 2, 1, 1);
    let zt = &m.zeta * &m.t;
    let zt2 = (&zt * &zt).inv().unwrap();
    let s1 = double_braiding_scalar(&m, 1, 1, 1).unwrap().unwrap();
    assert_eq!(s1, &zt2 * &m.tp(4));
    let s0 = double_braiding_scalar(&m, 1, 1, 0).unwrap().unwrap();
    assert_eq!(s0, zt2);
}

#[test]
fn ribbon_m_examples() {
    let m = model(2, 2, 1, 1);
    let g = &m.g;
    let z = g.zero();
    let p = Path::new(z, vec![1]);
    assert_eq!(ribbon_m(&m, 1, &p, &p).unwrap(), m.qi(2).clone());
    assert_eq!(ribbon_m(&m, -1, &p, &p).unwrap(), -m.qi(2));
    let q = Path::new(z, vec![1, 2]);
    assert!(ribbon_m(&m, 1, &q, &q).unwrap().is_one());
    let v1 = g.next(z, 1).unwrap();
    let a = Path::new(v1, vec![1]);
    let b = Path::new(v1, vec![2]);
    assert!(ribbon_m(&m, 1, &a, &b).unwrap().is_zero());
    let m3 = model(3, 2, 1, 1);
    assert!(ribbon_m(&m3, -1, &Path::new(0, vec![]), &Path::new(0, vec![])).is_err());
}

#[test]
fn ribbon_m_group_like() {
    let m = model(3, 2, -1, 1);
    let g = &m.g;
    for a in g.all_paths(1) {
        for b in g.paths_from(g.target(&a), 2) {
            let ab = g.concat(&a, &b).unwrap();
            let lhs = ribbon_m(&m, 1, &ab, &ab).unwrap();
            let rhs = &ribbon_m(&m, 1, &a, &a).unwrap() * &ribbon_m(&m, 1, &b, &b).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn qtrace_identity_is_quantum_dimension() {
    let m = model(2, 2, 1, 1);
    let id = omega_identity(&m, 1);
    assert_eq!(qtrace(&m, &id, m.g.zero(), 1).unwrap(), m.qi(2).clone());
    let zero = GradedMap {
        blocks: id
            .blocks
            .iter()
            .map(|(k, b)| (*k, b.scale(&m.zero())))
            .collect(),
    };
    assert!(qtrace(&m, &zero, m.g.zero(), 1).unwrap().is_zero());
    for m in models() {
        let g = &m.g;
        for k in 0..=g.n {
            let id = omega_identity(&m, k);
            let lk = g
                .index_of(&facemodel::lattice::Weight::fundamental(g.n, k))
                .unwrap();
            let d = dq(&m, lk);
            for v in 0..g.num_vertices() {
                assert_eq!(
                    qtrace(&m, &id, v, 1).unwrap(),
                    d,
                    "{:?} m={k} v={v}",
                    m.params
                );
            }
        }
    }
}

#[test]
fn qtrace_double_braiding_independent_of_vertex() {
    for m in [model(2, 3, 1, 1), model(3, 2, 1, 1), model(3, 2, -1, 1)] {
        let g = &m.g;
        let all: Vec<usize> = (0..g.num_vertices()).collect();
        for (q, r) in [(1, 1), (2, 1)] {
            let f = double_braiding_map(&m, q, r, &all);
            let t0 = qtrace(&m, &f, g.zero(), 1).unwrap();
            for &v in &all {
                assert_eq!(
                    qtrace(&m, &f, v, 1).unwrap(),
                    t0,
                    "{:?} q={q} r={r} v={v}",
                    m.params
                );
            }
        }
    }
}

#[test]
fn drinfeld_values() {
    for (n, l) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)] {
        for eps in [1, -1] {
            let Some(kz) = (1..200).find(|&k| ModelParams::from_zeta(n, l, eps, 1, k).is_ok())
            else {
                continue;
            };
            let m = model(n, l, eps, kz);
            let r = drinfeld_check(&m);
            assert!(r.passed(), "{:?}\n{r}", m.params);
        }
    }
}

#[test]
fn drinfeld_n2_l2_explicit() {
    let m = model(2, 2, 1, 1);
    let e = &(&m.zp(-1) * &m.tp(2)) * &m.qi(2).inv().unwrap();
    assert_eq!(drinfeld_value(&m), e);
}
