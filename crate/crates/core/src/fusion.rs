//! Modular data of SU(N)_L: Kac-Peterson S-matrices, twists, Verlinde
//! fusion rules and their cross-checks against the face model.

use itertools::Itertools;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::boltzmann::{Model, ModelParams};
use crate::cyclo::CycNum;
use crate::error::{Error, Result};
use crate::exterior::{bomega, dq_with, fundamental_pair, s_from_trace, s_range};
use crate::lattice::{inner_tilde, inversions, Graph, QInts, Weight};
use crate::linalg::{cmul, Mat};
use crate::report::{Check, Report};

/// `S^iota(zeta)` indexed by the vertices in canonical order.
#[derive(Clone, Debug)]
pub struct SMatrix {
    pub n: usize,
    pub l: u32,
    pub iota: i8,
    /// `zeta` as an exponent of `z_M`, `M = mat.order()`.
    pub zeta_exp: i64,
    pub verts: Vec<Weight>,
    pub mat: Mat,
}

impl SMatrix {
    pub fn dim(&self) -> usize {
        self.verts.len()
    }

    pub fn get(&self, a: usize, b: usize) -> &CycNum {
        self.mat.get(a, b)
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.verts.iter().position(|v| v == w)
    }
}

/// Integer fusion coefficients `N^nu_{lambda mu}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionTensor {
    pub dim: usize,
    data: Vec<u32>,
}

impl FusionTensor {
    pub fn get(&self, a: usize, b: usize, c: usize) -> u32 {
        self.data[(a * self.dim + b) * self.dim + c]
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|a| (0..d).all(|b| (0..d).all(|c| self.get(a, b, c) == self.get(b, a, c))))
    }

    /// `(a b) c = a (b c)` as integer tensors.
    pub fn is_associative(&self) -> bool {
        let d = self.dim;
        (0..d).into_par_iter().all(|a| {
            (0..d).all(|b| {
                (0..d).all(|c| {
                    (0..d).all(|e| {
                        let l: u64 = (0..d)
                            .map(|x| self.get(a, b, x) as u64 * self.get(x, c, e) as u64)
                            .sum();
                        let r: u64 = (0..d)
                            .map(|x| self.get(b, c, x) as u64 * self.get(a, x, e) as u64)
                            .sum();
                        l == r
                    })
                })
            })
        })
    }
}

fn perm_sign(p: &[usize]) -> i64 {
    let w: Vec<u8> = p.iter().map(|&x| x as u8).collect();
    // inversions() counts ascending pairs; descending pairs have the same parity
    // shift for a fixed length.
    let asc = inversions(&w);
    let n = p.len();
    let desc = n * (n - 1) / 2 - asc;
    if desc.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `sum_w (-1)^l(w) z^(-2 e (w(a) | b)~)` with `zeta = z^e`.
fn weyl_sum(m: u32, e: i64, a: &[i32], b: &[i32]) -> CycNum {
    let n = a.len();
    let terms = (0..n).permutations(n).map(|p| {
        let mut wa = vec![0i32; n];
        for (i, &pi) in p.iter().enumerate() {
            wa[pi] = a[i];
        }
        let ip = inner_tilde(&Weight(wa), &Weight(b.to_vec()));
        (-2 * e * ip, perm_sign(&p))
    });
    CycNum::from_exponent_sum(m, terms)
}

/// The S-matrix for `zeta = exp(2 pi i kz / 2N(N+L))`.
pub fn kac_peterson_raw(n: usize, l: u32, kz: i64, iota: i8) -> Result<SMatrix> {
    let p = ModelParams::new(n, l, 1, 1, 1, kz)?;
    if !p.zeta_primitive() {
        return Err(Error::Params(format!(
            "zeta must be a primitive {}-th root of unity",
            2 * n as i64 * p.h()
        )));
    }
    if iota == -1 && n % 2 == 1 {
        return Err(Error::Params("iota = -1 requires N even".into()));
    }
    let m = p.order();
    let e = p.zeta_exp();
    let verts = crate::lattice::vertices(n, l);
    let rho = Weight::rho(n);
    let shifted: Vec<Vec<i32>> = verts.iter().map(|v| v.plus(&rho).0).collect();
    let den = weyl_sum(m, e, &rho.0, &rho.0);
    if den.is_zero() {
        return Err(Error::Singular("Weyl denominator vanishes".into()));
    }
    let dinv = den.inv()?;
    let d = verts.len();
    let entries: Vec<CycNum> = (0..d * d)
        .into_par_iter()
        .map(|k| {
            let (a, b) = (k / d, k % d);
            if b < a {
                return CycNum::zero(m);
            }
            let s = if iota == -1 && (verts[a].size() + verts[b].size()) % 2 != 0 {
                -1
            } else {
                1
            };
            (&weyl_sum(m, e, &shifted[a], &shifted[b]) * &dinv).scale(s)
        })
        .collect();
    let mat = Mat::from_fn(m, d, d, |a, b| {
        if b >= a {
            entries[a * d + b].clone()
        } else {
            entries[b * d + a].clone()
        }
    });
    Ok(SMatrix {
        n,
        l,
        iota,
        zeta_exp: e,
        verts,
        mat,
    })
}

/// `S^iota(zeta)` at the parameters' `zeta`.
pub fn kac_peterson(params: &ModelParams, iota: i8) -> Result<SMatrix> {
    kac_peterson_raw(params.n, params.l, params.kz, iota)
}

/// Unsymmetrized S-matrix, used to test symmetry independently.
pub fn kac_peterson_full(params: &ModelParams, iota: i8) -> Result<Mat> {
    let s = kac_peterson(params, iota)?;
    let m = s.mat.order();
    let rho = Weight::rho(params.n);
    let den = weyl_sum(m, s.zeta_exp, &rho.0, &rho.0).inv()?;
    let sh: Vec<Vec<i32>> = s.verts.iter().map(|v| v.plus(&rho).0).collect();
    Ok(Mat::from_fn(m, s.dim(), s.dim(), |a, b| {
        let sg = if iota == -1 && (s.verts[a].size() + s.verts[b].size()) % 2 != 0 {
            -1
        } else {
            1
        };
        (&weyl_sum(m, s.zeta_exp, &sh[a], &sh[b]) * &den).scale(sg)
    }))
}

/// `theta_lambda = zeta^{(lambda | lambda + 2 rho)~}`.
pub fn theta_weight(params: &ModelParams, w: &Weight) -> CycNum {
    let rho2 = Weight(Weight::rho(params.n).0.iter().map(|x| 2 * x).collect());
    let e = inner_tilde(w, &w.plus(&rho2));
    CycNum::root(params.order(), e * params.zeta_exp())
}

/// `S^2 / (S^2)_00`, which is a permutation matrix for a modular S.
pub fn charge_conjugation(s: &SMatrix) -> Result<Option<Vec<usize>>> {
    let s2 = s.mat.mul(&s.mat);
    let c = s2.get(0, 0).clone();
    if c.is_zero() {
        return Ok(None);
    }
    let ci = c.inv()?;
    let d = s.dim();
    let mut perm = vec![usize::MAX; d];
    for a in 0..d {
        for b in 0..d {
            let v = s2.get(a, b) * &ci;
            if v.is_one() {
                if perm[a] != usize::MAX {
                    return Ok(None);
                }
                perm[a] = b;
            } else if !v.is_zero() {
                return Ok(None);
            }
        }
    }
    if perm.contains(&usize::MAX) {
        return Ok(None);
    }
    Ok(Some(perm))
}

fn to_float(s: &SMatrix) -> Vec<Vec<Complex64>> {
    s.mat.to_complex()
}

fn float_inverse(a: &[Vec<Complex64>]) -> Option<Vec<Vec<Complex64>>> {
    let n = a.len();
    let mut m: Vec<Vec<Complex64>> = a.to_vec();
    let mut inv: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Complex64::new((i == j) as u8 as f64, 0.0))
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).max_by(|&x, &y| m[x][c].norm().total_cmp(&m[y][c].norm()))?;
        if m[p][c].norm() < 1e-12 {
            return None;
        }
        m.swap(p, c);
        inv.swap(p, c);
        let d = m[c][c];
        for j in 0..n {
            m[c][j] /= d;
            inv[c][j] /= d;
        }
        for r in 0..n {
            if r != c {
                let f = m[r][c];
                if f.norm() != 0.0 {
                    for j in 0..n {
                        let (a, b) = (m[c][j], inv[c][j]);
                        m[r][j] -= f * a;
                        inv[r][j] -= f * b;
                    }
                }
            }
        }
    }
    Some(inv)
}

/// Verlinde identity `S_{nu 0} sum_xi N^xi S_{xi nu} = S_{lambda nu} S_{mu nu}`
/// for one `(lambda, mu)` and all `nu`, with integer candidates `row[xi]`.
fn verlinde_row_holds(s: &SMatrix, a: usize, b: usize, row: &[i64]) -> bool {
    let d = s.dim();
    (0..d).all(|nu| {
        let mut acc = CycNum::zero(s.mat.order());
        for (xi, &k) in row.iter().enumerate() {
            if k != 0 {
                acc += &s.get(xi, nu).scale(k);
            }
        }
        &acc * s.get(nu, 0) == s.get(a, nu) * s.get(b, nu)
    })
}

/// Fusion rules from the Verlinde formula. A float solve proposes integer
/// coefficients which are then verified exactly; rows that fail are solved
/// exactly with the inverse S-matrix.
pub fn verlinde(s: &SMatrix) -> Result<FusionTensor> {
    let d = s.dim();
    let sf = to_float(s);
    let sinv_f = float_inverse(&sf);
    let exact_inv = std::sync::OnceLock::new();
    for nu in 0..d {
        if s.get(nu, 0).is_zero() {
            return Err(Error::Singular(format!("S_{{{nu},0}} = 0")));
        }
    }
    let rows: Vec<Result<Vec<u32>>> = (0..d * d)
        .into_par_iter()
        .map(|k| {
            let (a, b) = (k / d, k % d);
            if let Some(si) = &sinv_f {
                let v: Vec<Complex64> =
                    (0..d).map(|nu| sf[a][nu] * sf[b][nu] / sf[nu][0]).collect();
                let cand: Vec<f64> = (0..d)
                    .map(|xi| (0..d).map(|nu| v[nu] * si[nu][xi]).sum::<Complex64>().re)
                    .collect();
                let ints: Vec<i64> = cand.iter().map(|x| x.round() as i64).collect();
                if ints.iter().all(|&x| x >= 0) && verlinde_row_holds(s, a, b, &ints) {
                    return Ok(ints.into_iter().map(|x| x as u32).collect());
                }
            }
            let inv: &Mat = match exact_inv.get() {
                Some(m) => m,
                None => {
                    let m = s.mat.inverse()?;
                    let _ = exact_inv.set(m);
                    exact_inv.get().unwrap()
                }
            };
            let mut out = Vec::with_capacity(d);
            for xi in 0..d {
                let mut acc = CycNum::zero(s.mat.order());
                for nu in 0..d {
                    let t = &(s.get(a, nu) * s.get(b, nu)) * inv.get(nu, xi);
                    acc += &t.div(s.get(nu, 0))?;
                }
                let q = acc
                    .as_rational()
                    .ok_or_else(|| Error::BadFusion(format!("N^{xi}_{{{a},{b}}} = {acc}")))?;
                if !q.is_integer() || q < num_rational::BigRational::from_integer(0.into()) {
                    return Err(Error::BadFusion(format!("N^{xi}_{{{a},{b}}} = {q}")));
                }
                out.push(num_traits::ToPrimitive::to_u32(&q.to_integer()).unwrap());
            }
            Ok(out)
        })
        .collect();
    let mut data = Vec::with_capacity(d * d * d);
    for r in rows {
        data.extend(r?);
    }
    Ok(FusionTensor { dim: d, data })
}

/// The S-matrix the face model's category should have: `S^iota` in the
/// first family, `S^-iota` when `N` is even and `eps = -1`.
pub fn effective_iota(params: &ModelParams) -> i8 {
    if params.n.is_multiple_of(2) && params.eps == -1 {
        -params.iota
    } else {
        params.iota
    }
}

/// Quantum integers at `t' = zeta^N`.
pub fn qints_zeta_n(params: &ModelParams) -> Result<QInts> {
    let tp = CycNum::root(params.order(), params.zeta_exp() * params.n as i64);
    QInts::new(&tp, 2 * params.h() + 2)
}

/// `iota^{q+r} sum_s (zeta t')^{-2qr} t'^{2s(q+r-s+1)} D(Lambda_{q+r-s} + Lambda_s)_{t'}`.
pub fn szqr_closed(params: &ModelParams, iota: i8, q: usize, r: usize) -> Result<CycNum> {
    let g = Graph::new(params.n, params.l);
    let qi = qints_zeta_n(params)?;
    let m = params.order();
    let ze = params.zeta_exp();
    let te = ze * params.n as i64;
    let mut acc = CycNum::zero(m);
    for s in s_range(params.n, q, r) {
        let Some(nu) = fundamental_pair(&g, q, r, s) else {
            continue;
        };
        let (qq, rr, ss) = (q as i64, r as i64, s as i64);
        let e = -2 * qq * rr * (ze + te) + te * 2 * ss * (qq + rr - ss + 1);
        acc += &(&CycNum::root(m, e) * &dq_with(&g, &qi, nu)?);
    }
    Ok(if iota == -1 && (q + r) % 2 == 1 {
        -acc
    } else {
        acc
    })
}

/// The modular-data suite for one parameter set.
pub fn check_modular(params: &ModelParams) -> Report {
    let mut rep = Report::new("modular");
    if let Err(e) = params.check_modular() {
        let mut c = Check::new("parameters", "zeta primitive and zeta^N = eps^(N-1) t");
        c.fail(e.to_string());
        rep.push(c);
        return rep;
    }
    let iota = effective_iota(params);
    let s = match kac_peterson(params, iota) {
        Ok(s) => s,
        Err(e) => {
            let mut c = Check::new("kac-peterson", "S^iota(zeta) is defined");
            c.fail(e.to_string());
            rep.push(c);
            return rep;
        }
    };
    let g = Graph::new(params.n, params.l);
    let d = s.dim();

    let mut c = Check::new("symmetric", "S^iota(zeta) is symmetric");
    match kac_peterson_full(params, iota) {
        Ok(full) => c.record(full.is_symmetric() && full == s.mat, || {
            "asymmetric entry".into()
        }),
        Err(e) => c.fail(e.to_string()),
    }
    rep.push(c);

    let mut c = Check::new(
        "invertible",
        "S^2 / (S^2)_00 is a permutation matrix, so S is invertible",
    );
    let perm = charge_conjugation(&s).ok().flatten();
    c.record(perm.is_some(), || {
        "S^2 is not a multiple of a permutation".into()
    });
    rep.push(c);

    let mut c = Check::new("s00", "S_00 = 1");
    c.record(s.get(0, 0).is_one(), || format!("S_00 = {}", s.get(0, 0)));
    rep.push(c);

    let mut c = Check::new(
        "szl0",
        "S_{lambda 0} = iota^|lambda| D(lambda)_t, t = zeta^N",
    );
    match qints_zeta_n(params) {
        Ok(qi) => {
            for v in 0..d {
                let dv = dq_with(&g, &qi, v).unwrap();
                let e = if iota == -1 && g.weight(v).size() % 2 == 1 {
                    -dv
                } else {
                    dv
                };
                c.record(*s.get(v, 0) == e, || format!("lambda = {}", g.weight(v)));
            }
        }
        Err(e) => c.fail(e.to_string()),
    }
    rep.push(c);

    let fusion = verlinde(&s);
    let mut c = Check::new(
        "verlinde",
        "Verlinde coefficients are non-negative integers",
    );
    match &fusion {
        Ok(_) => c.record(true, String::new),
        Err(e) => c.fail(e.to_string()),
    }
    rep.push(c);
    let Ok(nf) = fusion else { return rep };

    let mut c = Check::new(
        "fusion-unit",
        "N^nu_{0 mu} = delta_{mu nu}, commutative, associative",
    );
    for a in 0..d {
        for b in 0..d {
            c.record(nf.get(0, a, b) == (a == b) as u32, || {
                format!("N^{b}_{{0,{a}}}")
            });
        }
    }
    c.record(nf.is_commutative(), || "not commutative".into());
    c.record(nf.is_associative(), || "not associative".into());
    if let Some(p) = &perm {
        let ok = (0..d)
            .all(|a| (0..d).all(|b| (0..d).all(|x| nf.get(a, b, x) == nf.get(p[a], p[b], p[x]))));
        c.record(ok, || {
            "fusion is not invariant under charge conjugation".into()
        });
    }
    rep.push(c);

    let mut c = Check::new(
        "fundamental-fusion",
        "N^mu_{lambda Lambda_m} is the indicator of B Omega^m",
    );
    for m in 0..=params.n {
        let lm = g.index_of(&Weight::fundamental(params.n, m)).unwrap();
        let bo: std::collections::HashSet<(usize, usize)> = bomega(&g, m)
            .into_iter()
            .map(|x| (x.lambda, x.mu))
            .collect();
        for a in 0..d {
            for b in 0..d {
                let e = bo.contains(&(a, b)) as u32;
                c.record(nf.get(a, lm, b) == e, || {
                    format!("m={m}, lambda={}, mu={}", g.weight(a), g.weight(b))
                });
            }
        }
    }
    rep.push(c);

    let theta: Vec<CycNum> = s.verts.iter().map(|w| theta_weight(params, w)).collect();
    let tinv: Vec<CycNum> = theta.iter().map(|t| t.conj()).collect();
    let mut recon = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            let mut acc = CycNum::zero(s.mat.order());
            for x in 0..d {
                let k = nf.get(a, b, x);
                if k > 0 {
                    acc +=
                        &(&(&theta[x] * s.get(x, 0)) * &CycNum::from_int(s.mat.order(), k as i64));
                }
            }
            recon.push(&(&acc * &tinv[a]) * &tinv[b]);
        }
    }
    let mut c = Check::new(
        "reconstruction",
        "S_{lambda mu} = sum_nu theta_nu / (theta_lambda theta_mu) N^nu_{lambda mu} dim_q(nu)",
    );
    for a in 0..d {
        for b in 0..d {
            c.record(recon[a * d + b] == *s.get(a, b), || {
                format!("lambda={}, mu={}", g.weight(a), g.weight(b))
            });
        }
    }
    rep.push(c);
    if let Some(p) = &perm {
        let mut c = Check::new(
            "reconstruction-dual",
            "the theta/N/dim_q sum equals S_{lambda* mu}",
        );
        for a in 0..d {
            for b in 0..d {
                c.record(recon[a * d + b] == *s.get(p[a], b), || {
                    format!("lambda={}, mu={}", g.weight(a), g.weight(b))
                });
            }
        }
        rep.push(c);
    }

    rep.merge(check_fundamental_rows(params, &s, perm.as_deref()));
    rep
}

/// `S_{Lambda_q Lambda_r}` three ways: Kac-Peterson, the closed form, and the
/// quantum trace of the double braiding on `Omega^q (x) Omega^r`. With a
/// duality permutation the closed form and trace are also compared with
/// `S_{Lambda_q* Lambda_r}`.
pub fn check_fundamental_rows(params: &ModelParams, s: &SMatrix, dual: Option<&[usize]>) -> Report {
    let mut rep = Report::new("modular");
    let iota = effective_iota(params);
    let model = match Model::new(params.clone()) {
        Ok(m) => m,
        Err(e) => {
            let mut c = Check::new("trace", "face model is defined");
            c.fail(e.to_string());
            rep.push(c);
            return rep;
        }
    };
    let n = params.n;
    let mut closed = Check::new(
        "szqr",
        "S_{Lambda_q Lambda_r} equals the (zeta t)^-2qr t^2s(q+r-s+1) sum",
    );
    let mut trace = Check::new(
        "trace",
        "S_{Lambda_q Lambda_r} = Tr(M_iota c c) on Omega^q (x) Omega^r",
    );
    let mut tc = Check::new(
        "trace-closed",
        "Tr(M_iota c c) equals the (zeta t)^-2qr t^2s(q+r-s+1) sum",
    );
    let mut dual_c = Check::new(
        "szqr-dual",
        "closed-form sum and trace equal S_{Lambda_q* Lambda_r}",
    );
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|q| (1..=q).map(move |r| (q, r))).collect();
    let traces: Vec<Result<CycNum>> = pairs
        .par_iter()
        .map(|&(q, r)| s_from_trace(&model, q, r, params.iota))
        .collect();
    for (&(q, r), tr) in pairs.iter().zip(traces) {
        let lq = s.index_of(&Weight::fundamental(n, q)).unwrap();
        let lr = s.index_of(&Weight::fundamental(n, r)).unwrap();
        let kp = s.get(lq, lr);
        let cl = szqr_closed(params, iota, q, r);
        match &cl {
            Ok(v) => closed.record(v == kp, || format!("q={q} r={r}: closed {v}, KP {kp}")),
            Err(e) => closed.fail(e.to_string()),
        }
        match (&tr, &cl) {
            (Ok(v), Ok(w)) => {
                trace.record(v == kp, || format!("q={q} r={r}: trace {v}, KP {kp}"));
                tc.record(v == w, || format!("q={q} r={r}: trace {v}, closed {w}"));
                if let Some(p) = dual {
                    let kd = s.get(p[lq], lr);
                    dual_c.record(v == kd && w == kd, || {
                        format!("q={q} r={r}: trace {v}, closed {w}, KP dual {kd}")
                    });
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                trace.fail(e.to_string());
                tc.fail(e.to_string());
            }
        }
    }
    rep.push(closed);
    rep.push(trace);
    rep.push(tc);
    if dual.is_some() {
        rep.push(dual_c);
    }
    rep
}

/// The parameter sets of both modular families with
/// `N <= n_max`, `L <= l_max`: every primitive `zeta`, both `eps` where
/// allowed and both `iota` for even `N`.
pub fn modular_families(n_max: usize, l_max: u32) -> Vec<ModelParams> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for l in 1..=l_max {
            let pz = 2 * n as i64 * (n as i64 + l as i64);
            for eps in [1i8, -1] {
                let iotas: &[i8] = if n % 2 == 0 { &[1, -1] } else { &[1] };
                for &iota in iotas {
                    for kz in 1..pz {
                        if let Ok(p) = ModelParams::from_zeta(n, l, eps, iota, kz) {
                            if p.check_modular().is_ok() {
                                out.push(p);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Float check that `S` is unitary up to the scale `S_00 / sqrt(sum dims^2)`.
pub fn float_unitarity_residual(s: &SMatrix) -> f64 {
    let a = to_float(s);
    let d = a.len();
    let norm: f64 = (0..d).map(|v| a[v][0].norm_sqr()).sum::<f64>().sqrt();
    let u: Vec<Vec<Complex64>> = a
        .iter()
        .map(|r| r.iter().map(|x| x / norm).collect())
        .collect();
    let uh: Vec<Vec<Complex64>> = (0..d)
        .map(|i| (0..d).map(|j| u[j][i].conj()).collect())
        .collect();
    let p = cmul(&u, &uh);
    let mut r: f64 = 0.0;
    for (i, row) in p.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            r = r.max((x - Complex64::new((i == j) as u8 as f64, 0.0)).norm());
        }
    }
    r
}

/// Unitary parameter sets: `t = exp(+-pi i/(N+L))`, and `-exp(+-pi i/(N+L))`
/// when `N + L` is even, with every `zeta` solving `zeta^N = eps^(N-1) t`.
/// `L >= 2`, plus `L = 1` for `N = 2`.
pub fn unitary_families(n_max: usize, l_max: u32) -> Vec<ModelParams> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for l in 1..=l_max {
            if l == 1 && n != 2 {
                continue;
            }
            let h = n as i64 + l as i64;
            let mut kts = vec![1, 2 * h - 1];
            if h % 2 == 0 {
                kts.extend([h + 1, h - 1]);
            }
            let pz = 2 * n as i64 * h;
            for &kt in &kts {
                for eps in [1i8, -1] {
                    for kz in 0..pz {
                        if let Ok(p) = ModelParams::new(n, l, eps, 1, kt, kz) {
                            if p.det_relation_holds() {
                                out.push(p);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Float unitarity checks at a unitary `t`: positivity of `D(lambda)`
/// (with the sign `(-1)^|lambda|` for `t = -exp(...)` and `N` even), the
/// inverse-weight identity `w^-1 = (kappa ratio)^2 conj(w)` on every face,
/// and positivity of the diagonal ribbon matrix on paths of length 1 and 2.
pub fn check_unitarity(params: &ModelParams, tol: f64) -> Report {
    let mut rep = Report::new("unitarity");
    let model = match Model::new(params.clone()) {
        Ok(m) => m,
        Err(e) => {
            let mut c = Check::new("model", "face model builds");
            c.fail(e.to_string());
            rep.push(c);
            return rep;
        }
    };
    let g = &model.g;
    let h = params.h();
    let negative = params.kt == h + 1 || params.kt == h - 1;
    let signed = negative && params.n.is_multiple_of(2);

    let mut c = Check::new(
        "dims",
        "D(lambda) > 0, or (-1)^|lambda| D(lambda) > 0 for t = -exp(+-pi i/(N+L)), N even",
    );
    for v in 0..g.num_vertices() {
        let d = crate::exterior::dq(&model, v).to_complex();
        let s = if signed && g.weight(v).size() % 2 != 0 {
            -1.0
        } else {
            1.0
        };
        c.record(d.im.abs() < tol && s * d.re > tol, || {
            format!("lambda = {}: D = {d}", g.weight(v))
        });
    }
    rep.push(c);

    let mut c = Check::new(
        "weights",
        "w^-1[r p/s q] = (kappa(r.s)/kappa(p.q))^2 conj w[p r/q s]",
    );
    let n = params.n as u8;
    for v in 0..g.num_vertices() {
        for a in 1..=n {
            for b in 1..=n {
                for x in 1..=n {
                    for y in 1..=n {
                        let (Some(e1), Some(e2)) = (g.walk(v, &[a, b]), g.walk(v, &[x, y])) else {
                            continue;
                        };
                        if e1 != e2 {
                            continue;
                        }
                        let lhs = model.inv_weight(v, a, b, x, y).to_complex();
                        let k1 = crate::lattice::kappa_sq(
                            g,
                            &crate::lattice::Path::new(v, vec![x, y]),
                            &model.q,
                        );
                        let k2 = crate::lattice::kappa_sq(
                            g,
                            &crate::lattice::Path::new(v, vec![a, b]),
                            &model.q,
                        );
                        let (Ok(k1), Ok(k2)) = (k1, k2) else {
                            c.fail(format!(
                                "kappa undefined at {} ({a},{b}) ({x},{y})",
                                g.weight(v)
                            ));
                            continue;
                        };
                        let ratio = k1.to_complex() / k2.to_complex();
                        let rhs = ratio * model.weight(v, x, y, a, b).to_complex().conj();
                        c.record(
                            (lhs - rhs).norm() < tol && ratio.im.abs() < tol && ratio.re > 0.0,
                            || format!("{} ({a},{b}) ({x},{y}): {lhs} vs {rhs}", g.weight(v)),
                        );
                    }
                }
            }
        }
    }
    rep.push(c);

    let iota = if signed { -1 } else { 1 };
    let mut c = Check::new(
        "ribbon-positive",
        "M(e_u(p, p)) > 0 on paths of length 1 and 2",
    );
    for m in 1..=2 {
        for p in g.all_paths(m) {
            match crate::exterior::ribbon_m(&model, iota, &p, &p) {
                Ok(x) => {
                    let z = x.to_complex();
                    c.record(z.im.abs() < tol && z.re > tol, || {
                        format!("{}: {z}", g.path_string(&p))
                    });
                }
                Err(e) => c.fail(e.to_string()),
            }
        }
    }
    rep.push(c);
    rep
}
