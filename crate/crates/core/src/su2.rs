//! SU(2)_L specialization: admissible triples, duality constants, colored
//! braiding tables on the rational basis `Sigma`, and twists.
//!
//! Vertices are the integers `0..=L`; an SU(2) path is its vertex sequence.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::boltzmann::ModelParams;
use crate::cyclo::{qfact, qint, CycNum};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::report::{Check, Report};

/// An admissible triple `(k; i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BTriple {
    pub k: u32,
    pub i: u32,
    pub j: u32,
}

pub fn admissible(l: u32, k: u32, i: u32, j: u32) -> bool {
    i <= l
        && j <= l
        && k <= l
        && i.abs_diff(j) <= k
        && k <= i + j
        && (i + j + k).is_multiple_of(2)
        && i + j + k <= 2 * l
}

/// The set `B` of admissible triples, ordered by `(k, i, j)`.
pub fn b_set(l: u32) -> Vec<BTriple> {
    let mut v = Vec::new();
    for k in 0..=l {
        for i in 0..=l {
            for j in 0..=l {
                if admissible(l, k, i, j) {
                    v.push(BTriple { k, i, j });
                }
            }
        }
    }
    v
}

/// Sign length by the recursive rule: valley paths have length 0, each
/// `n, n-1, n -> n, n+1, n` flip adds one.
pub fn sgn_len(path: &[u32]) -> usize {
    let mut p: Vec<i64> = path.iter().map(|&x| x as i64).collect();
    let mut count = 0;
    // turn peaks into valleys until none are left
    loop {
        let Some(pos) =
            (1..p.len().saturating_sub(1)).find(|&a| p[a] > p[a - 1] && p[a] > p[a + 1])
        else {
            return count;
        };
        p[pos] -= 2;
        count += 1;
    }
}

/// Sign length as the number of (up, later down) step pairs.
pub fn sgn_len_inversions(path: &[u32]) -> usize {
    let ups: Vec<bool> = path.windows(2).map(|w| w[1] > w[0]).collect();
    let mut c = 0;
    for a in 0..ups.len() {
        for b in a + 1..ups.len() {
            if ups[a] && !ups[b] {
                c += 1;
            }
        }
    }
    c
}

/// All paths of length `k` from `i` to `j` in `0..=l`.
pub fn paths(l: u32, i: u32, j: u32, k: u32) -> Vec<Vec<u32>> {
    fn rec(l: u32, j: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let last = *cur.last().unwrap();
        if left == 0 {
            if last == j {
                out.push(cur.clone());
            }
            return;
        }
        if last.abs_diff(j) > left {
            return;
        }
        for nx in [last.wrapping_sub(1), last + 1] {
            if nx <= l {
                cur.push(nx);
                rec(l, j, left - 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if i <= l {
        rec(l, j, k, &mut vec![i], &mut out);
    }
    out
}

/// The valley path `i, i-1, ..., (i+j-k)/2, ..., j`.
pub fn valley(i: u32, j: u32, k: u32) -> Vec<u32> {
    let bottom = (i + j - k) / 2;
    let mut p: Vec<u32> = (bottom..=i).rev().collect();
    p.extend(bottom + 1..=j);
    p
}

/// One colored braiding table `w^{+-}_{mn}[h i/j k]`.
#[derive(Clone, Debug)]
pub struct WTable {
    pub m: u32,
    pub n: u32,
    pub plus: bool,
    pub entries: HashMap<(u32, u32, u32, u32), CycNum>,
}

impl WTable {
    pub fn get(&self, h: u32, i: u32, j: u32, k: u32) -> Option<&CycNum> {
        self.entries.get(&(h, i, j, k))
    }
}

type Vector = HashMap<Vec<u32>, CycNum>;

/// Two-step block at fixed outer corners: middle vertices, `w[out][in]` and
/// its inverse.
#[derive(Clone, Debug)]
struct Block {
    mids: Vec<u32>,
    w: Mat,
    winv: Mat,
}

/// SU(2) data for one parameter set.
pub struct Su2 {
    pub params: ModelParams,
    pub l: u32,
    pub m: u32,
    pub eps: i8,
    pub t: CycNum,
    pub zeta: CycNum,
    blocks: HashMap<(u32, u32), Block>,
    tables: HashMap<(u32, u32, bool), WTable>,
}

impl std::fmt::Debug for Su2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Su2({:?})", self.params)
    }
}

impl Su2 {
    pub fn new(params: ModelParams) -> Result<Self> {
        if params.n != 2 {
            return Err(Error::Params(format!(
                "SU(2) tables need N = 2, got N = {}",
                params.n
            )));
        }
        if !params.det_relation_holds() {
            return Err(Error::Params("zeta^2 = eps t does not hold".into()));
        }
        let mut s = Su2 {
            l: params.l,
            m: params.order(),
            eps: params.eps,
            t: params.t(),
            zeta: params.zeta(),
            params,
            blocks: HashMap::new(),
            tables: HashMap::new(),
        };
        s.build_blocks()?;
        s.build_tables()?;
        Ok(s)
    }

    pub fn from_zeta(l: u32, eps: i8, iota: i8, kz: i64) -> Result<Self> {
        Self::new(ModelParams::from_zeta(2, l, eps, iota, kz)?)
    }

    pub fn zero(&self) -> CycNum {
        CycNum::zero(self.m)
    }

    pub fn one(&self) -> CycNum {
        CycNum::one(self.m)
    }

    /// `[n]` at `t`.
    pub fn qi(&self, n: i64) -> CycNum {
        qint(n, &self.t).expect("t is not +-1")
    }

    pub fn tp(&self, k: i64) -> CycNum {
        CycNum::root(self.m, k * self.params.t_exp())
    }

    pub fn zp(&self, k: i64) -> CycNum {
        CycNum::root(self.m, k * self.params.zeta_exp())
    }

    /// `eps^k`.
    pub fn eps_pow(&self, k: usize) -> i64 {
        if self.eps == -1 && k % 2 == 1 {
            -1
        } else {
            1
        }
    }

    /// The base weight `w^Sigma` with corners `tl, tr` (top), `bl, br` (bottom).
    pub fn face(&self, tl: u32, tr: u32, bl: u32, br: u32) -> CycNum {
        let l = self.l;
        if [tl, tr, bl, br].iter().any(|&x| x > l)
            || tl.abs_diff(tr) != 1
            || tl.abs_diff(bl) != 1
            || tr.abs_diff(br) != 1
            || bl.abs_diff(br) != 1
        {
            return self.zero();
        }
        let i = tl as i64;
        let zi = self.zp(-1);
        let up = tr > tl;
        if tr == bl {
            if br == tl {
                // -zeta^-1 (+- t^{-+(i+1)}) / [i+1]
                let x = &(&zi * &self.tp(if up { -(i + 1) } else { i + 1 }))
                    * &self.qi(i + 1).inv().unwrap();
                if up {
                    -x
                } else {
                    x
                }
            } else {
                &zi * &self.t
            }
        } else {
            let num = self.qi(if up { i + 2 } else { i });
            (&(&zi * &num) * &self.qi(i + 1).inv().unwrap()).scale(self.eps as i64)
        }
    }

    fn build_blocks(&mut self) -> Result<()> {
        let l = self.l;
        for tl in 0..=l {
            for br in 0..=l {
                if tl.abs_diff(br) != 0 && tl.abs_diff(br) != 2 {
                    continue;
                }
                let mids: Vec<u32> = [tl.wrapping_sub(1), tl + 1]
                    .into_iter()
                    .filter(|&x| x <= l && x.abs_diff(br) == 1)
                    .collect();
                if mids.is_empty() {
                    continue;
                }
                let k = mids.len();
                let w = Mat::from_fn(self.m, k, k, |o, i| self.face(tl, mids[i], mids[o], br));
                let winv = w
                    .inverse()
                    .map_err(|_| Error::Singular(format!("su2 corners ({tl}, {br})")))?;
                self.blocks.insert((tl, br), Block { mids, w, winv });
            }
        }
        Ok(())
    }

    /// Apply the two-step face at vertex position `pos` (middle vertex `pos+1`).
    fn apply(&self, inverse: bool, v: &Vector, pos: usize) -> Vector {
        let mut out: Vector = HashMap::new();
        for (p, c) in v {
            let b = &self.blocks[&(p[pos], p[pos + 2])];
            let ii = b.mids.iter().position(|&x| x == p[pos + 1]).unwrap();
            let tab = if inverse { &b.winv } else { &b.w };
            for (oo, &mid) in b.mids.iter().enumerate() {
                let x = tab.get(oo, ii);
                if x.is_zero() {
                    continue;
                }
                let mut q = p.clone();
                q[pos + 1] = mid;
                let val = c * x;
                match out.get_mut(&q) {
                    Some(y) => *y += &val,
                    None => {
                        out.insert(q, val);
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Box with top of length `a` and right side of length `b`, as the face
    /// positions applied to `top . right`.
    fn box_sequence(a: usize, b: usize) -> Vec<usize> {
        let mut seq = Vec::with_capacity(a * b);
        for row in 0..b {
            for k in (row..a + row).rev() {
                seq.push(k);
            }
        }
        seq
    }

    /// The box partition function applied to a path: forward for a box with
    /// top `a`, right `b` (input `top . right`); inverse of that box
    /// (input `left . bottom`).
    pub fn box_apply(&self, inverse: bool, x: &[u32], a: usize, b: usize) -> Vector {
        let mut seq = Self::box_sequence(a, b);
        if inverse {
            seq.reverse();
        }
        let mut v: Vector = HashMap::new();
        v.insert(x.to_vec(), self.one());
        for pos in seq {
            v = self.apply(inverse, &v, pos);
        }
        v
    }

    /// `w^{+-}_{mn}[h i/j k]` from the signed partition sums, with explicit
    /// representatives `q in G^m_{hi}`, `r in G^n_{ik}`.
    pub fn w_from_reps(&self, plus: bool, q: &[u32], r: &[u32]) -> HashMap<u32, CycNum> {
        let (m, n) = (q.len() - 1, r.len() - 1);
        let mut x = q.to_vec();
        x.extend_from_slice(&r[1..]);
        let v = if plus {
            self.box_apply(false, &x, m, n)
        } else {
            self.box_apply(true, &x, n, m)
        };
        let s0 = self.eps_pow(sgn_len(q) + sgn_len(r));
        let mut out: HashMap<u32, CycNum> = HashMap::new();
        for (y, c) in v {
            let (u, w) = (&y[..=n], &y[n..]);
            let s = s0 * self.eps_pow(sgn_len(u) + sgn_len(w));
            let val = c.scale(s);
            match out.get_mut(&y[n]) {
                Some(z) => *z += &val,
                None => {
                    out.insert(y[n], val);
                }
            }
        }
        out
    }

    fn build_tables(&mut self) -> Result<()> {
        let l = self.l;
        let keys: Vec<(u32, u32, bool)> = (0..=l)
            .flat_map(|m| (0..=l).flat_map(move |n| [(m, n, true), (m, n, false)]))
            .collect();
        let tables: Vec<WTable> = keys
            .par_iter()
            .map(|&(m, n, plus)| {
                let mut entries = HashMap::new();
                for h in 0..=l {
                    for i in 0..=l {
                        if !admissible(l, m, h, i) {
                            continue;
                        }
                        for k in 0..=l {
                            if !admissible(l, n, i, k) {
                                continue;
                            }
                            let vals = self.w_from_reps(plus, &valley(h, i, m), &valley(i, k, n));
                            for j in 0..=l {
                                if admissible(l, n, h, j) && admissible(l, m, j, k) {
                                    let x = vals.get(&j).cloned().unwrap_or_else(|| self.zero());
                                    entries.insert((h, i, j, k), x);
                                }
                            }
                        }
                    }
                }
                WTable {
                    m,
                    n,
                    plus,
                    entries,
                }
            })
            .collect();
        for t in tables {
            self.tables.insert((t.m, t.n, t.plus), t);
        }
        Ok(())
    }

    pub fn table(&self, m: u32, n: u32, plus: bool) -> &WTable {
        &self.tables[&(m, n, plus)]
    }

    /// `w^{+-}_{mn}[h i/j k]`; zero off the admissible set.
    pub fn w_pm(&self, m: u32, n: u32, plus: bool, h: u32, i: u32, j: u32, k: u32) -> CycNum {
        self.tables
            .get(&(m, n, plus))
            .and_then(|t| t.get(h, i, j, k))
            .cloned()
            .unwrap_or_else(|| self.zero())
    }

    /// `(-eps)^{(i-j)/2}` with `(-1)^{1/2} = z_4`.
    pub fn half_sign(&self, i: u32, j: u32) -> CycNum {
        let d = i as i64 - j as i64;
        if self.eps == -1 {
            self.one()
        } else {
            CycNum::root(self.m, d * self.m as i64 / 4)
        }
    }

    /// The duality constant `c(k; i, j)`.
    pub fn c_coeff(&self, k: u32, i: u32, j: u32) -> Result<CycNum> {
        if !admissible(self.l, k, i, j) {
            return Err(Error::NotAdmissible(k, i, j));
        }
        let (i, j, k) = (i as i64, j as i64, k as i64);
        let f = |n: i64| qfact(n, &self.t);
        let num = &(&f((i + j + k) / 2 + 1)? * &f((i - j + k) / 2)?) * &f((-i + j + k) / 2)?;
        let den = &self.qi(i + 1) * &f((i + j - k) / 2)?;
        Ok(&self.half_sign(i as u32, j as u32) * &num.div(&den)?)
    }

    /// `theta_i = iota^i zeta^{i(i+2)}`.
    pub fn theta(&self, i: u32, iota: i8) -> CycNum {
        theta_su2(&self.params, i, iota)
    }

    /// Admissible vertex chains `h = x_0, x_1, ..., x_r = k` for the colors.
    pub fn chains(&self, colors: &[u32], h: u32, k: u32) -> Vec<Vec<u32>> {
        let mut cur = vec![vec![h]];
        for &c in colors {
            let mut next = Vec::new();
            for ch in &cur {
                let a = *ch.last().unwrap();
                for b in 0..=self.l {
                    if admissible(self.l, c, a, b) {
                        let mut x = ch.clone();
                        x.push(b);
                        next.push(x);
                    }
                }
            }
            cur = next;
        }
        cur.retain(|c| *c.last().unwrap() == k);
        cur
    }

    /// The braiding of positions `pos, pos+1` on the colored chain basis, as
    /// a sparse image of one chain.
    pub fn braid_chain(
        &self,
        plus: bool,
        colors: &[u32],
        chain: &[u32],
        pos: usize,
    ) -> (Vec<u32>, Vec<(Vec<u32>, CycNum)>) {
        let (m, n) = (colors[pos], colors[pos + 1]);
        let (h, i, k) = (chain[pos], chain[pos + 1], chain[pos + 2]);
        let mut cols = colors.to_vec();
        cols.swap(pos, pos + 1);
        let mut out = Vec::new();
        for j in 0..=self.l {
            let x = self.w_pm(m, n, plus, h, i, j, k);
            if !x.is_zero() {
                let mut c = chain.to_vec();
                c[pos + 1] = j;
                out.push((c, x));
            }
        }
        (cols, out)
    }
}

/// `theta_i = iota^i zeta^{i(i+2)}`.
pub fn theta_su2(params: &ModelParams, i: u32, iota: i8) -> CycNum {
    let e = (i * (i + 2)) as i64 * params.zeta_exp();
    let z = CycNum::root(params.order(), e);
    if iota == -1 && i % 2 == 1 {
        -z
    } else {
        z
    }
}

type Sparse = HashMap<(Vec<u32>, Vec<u32>), CycNum>;

fn braid_word(s: &Su2, colors: &[u32], start: &[u32], word: &[usize]) -> Sparse {
    let mut cur: Sparse = HashMap::new();
    cur.insert((colors.to_vec(), start.to_vec()), s.one());
    for &pos in word {
        let mut next: Sparse = HashMap::new();
        for ((cols, ch), c) in &cur {
            let (nc, img) = s.braid_chain(true, cols, ch, pos);
            for (ch2, x) in img {
                let key = (nc.clone(), ch2);
                let v = c * &x;
                match next.get_mut(&key) {
                    Some(y) => *y += &v,
                    None => {
                        next.insert(key, v);
                    }
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
    }
    cur
}

/// Braid relation `c1 c2 c1 = c2 c1 c2` on `Sigma^a (x) Sigma^b (x) Sigma^c`
/// for all colors with `a + b + c <= max_total`.
pub fn check_colored_ybe(s: &Su2, max_total: u32) -> Check {
    let l = s.l;
    let mut c = Check::new(
        "colored-ybe",
        "c12 c23 c12 = c23 c12 c23 on Sigma^a Sigma^b Sigma^c",
    );
    for a in 0..=l {
        for b in 0..=l {
            for d in 0..=l {
                if a + b + d > max_total {
                    continue;
                }
                let cols = [a, b, d];
                for h in 0..=l {
                    for k in 0..=l {
                        for ch in s.chains(&cols, h, k) {
                            let lhs = braid_word(s, &cols, &ch, &[0, 1, 0]);
                            let rhs = braid_word(s, &cols, &ch, &[1, 0, 1]);
                            c.record(lhs == rhs, || format!("colors {cols:?} chain {ch:?}"));
                        }
                    }
                }
            }
        }
    }
    c
}

/// `sum_mu iota^mu [mu+1] w^+_{mn}[0 m/n mu] w^+_{nm}[0 n/m mu]`, the trace
/// of the double braiding on `Sigma^m (x) Sigma^n`.
pub fn hopf_trace(s: &Su2, iota: i8, m: u32, n: u32) -> CycNum {
    let mut acc = s.zero();
    for mu in 0..=s.l {
        if !admissible(s.l, n, m, mu) {
            continue;
        }
        let w = &s.w_pm(m, n, true, 0, m, n, mu) * &s.w_pm(n, m, true, 0, n, m, mu);
        let sg = if iota == -1 && mu % 2 == 1 { -1 } else { 1 };
        acc += &(&s.qi(mu as i64 + 1) * &w).scale(sg);
    }
    acc
}

/// The SU(2) suite.
pub fn check_su2(params: &ModelParams) -> Report {
    let mut rep = Report::new("su2");
    let s = match Su2::new(params.clone()) {
        Ok(s) => s,
        Err(e) => {
            let mut c = Check::new("parameters", "zeta^2 = eps t, t primitive");
            c.fail(e.to_string());
            rep.push(c);
            return rep;
        }
    };
    let l = s.l;

    let mut c = Check::new("base-table", "w^+_11 = w^Sigma");
    for h in 0..=l {
        for i in 0..=l {
            for j in 0..=l {
                for k in 0..=l {
                    if admissible(l, 1, h, i)
                        && admissible(l, 1, i, k)
                        && admissible(l, 1, h, j)
                        && admissible(l, 1, j, k)
                    {
                        let a = s.w_pm(1, 1, true, h, i, j, k);
                        let b = s.face(h, i, j, k);
                        c.record(a == b, || format!("[{h} {i}/{j} {k}]: {a} vs {b}"));
                    }
                }
            }
        }
    }
    rep.push(c);

    let mut c = Check::new(
        "inverse",
        "sum_j w^+_mn[h i/j k] w^-_nm[h j/i' k] = delta_ii'",
    );
    for m in 0..=l {
        for n in 0..=l {
            for h in 0..=l {
                for k in 0..=l {
                    let is: Vec<u32> = (0..=l)
                        .filter(|&i| admissible(l, m, h, i) && admissible(l, n, i, k))
                        .collect();
                    let js: Vec<u32> = (0..=l)
                        .filter(|&j| admissible(l, n, h, j) && admissible(l, m, j, k))
                        .collect();
                    for &i in &is {
                        for &i2 in &is {
                            let mut acc = s.zero();
                            for &j in &js {
                                acc += &(&s.w_pm(m, n, true, h, i, j, k)
                                    * &s.w_pm(n, m, false, h, j, i2, k));
                            }
                            let ok = if i == i2 { acc.is_one() } else { acc.is_zero() };
                            c.record(ok, || {
                                format!("m={m} n={n} h={h} k={k} i={i} i'={i2}: {acc}")
                            });
                        }
                    }
                }
            }
        }
    }
    rep.push(c);

    let mut c = Check::new(
        "representative",
        "w^+-_mn independent of the representatives q, r",
    );
    for m in 1..=l.min(3) {
        for n in 1..=l.min(3) {
            for h in 0..=l {
                for i in 0..=l {
                    for k in 0..=l {
                        if !admissible(l, m, h, i) || !admissible(l, n, i, k) {
                            continue;
                        }
                        for plus in [true, false] {
                            let base = s.w_from_reps(plus, &valley(h, i, m), &valley(i, k, n));
                            for q in paths(l, h, i, m) {
                                for r in paths(l, i, k, n) {
                                    let v = s.w_from_reps(plus, &q, &r);
                                    let ok = (0..=l).all(|j| {
                                        if !(admissible(l, n, h, j) && admissible(l, m, j, k)) {
                                            return true;
                                        }
                                        v.get(&j).unwrap_or(&s.zero())
                                            == base.get(&j).unwrap_or(&s.zero())
                                    });
                                    c.record(ok, || format!("q={q:?} r={r:?} plus={plus}"));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    rep.push(c);

    let mut c = Check::new(
        "c-recursion",
        "c(k; i+1, j+1) / c(k; i, j) = [i+1][(i+j+k)/2+2] / [i+2][(i+j-k)/2+1]",
    );
    let mut c2 = Check::new(
        "c-recursion-cross",
        "c(k; i+-1, j-+1) / c(k; i, j) = -eps [i+1][(+-i-+j+k)/2+1] / [i+1+-1][(-+i+-j+k)/2]",
    );
    for t in b_set(l) {
        let (k, i, j) = (t.k as i64, t.i as i64, t.j as i64);
        let base = s.c_coeff(t.k, t.i, t.j).unwrap();
        if admissible(l, t.k, t.i + 1, t.j + 1) {
            let r = s
                .c_coeff(t.k, t.i + 1, t.j + 1)
                .unwrap()
                .div(&base)
                .unwrap();
            let e = (&s.qi(i + 1) * &s.qi((i + j + k) / 2 + 2))
                .div(&(&s.qi(i + 2) * &s.qi((i + j - k) / 2 + 1)))
                .unwrap();
            c.record(r == e, || format!("{t:?}"));
        }
        for sg in [1i64, -1] {
            let (ni, nj) = (i + sg, j - sg);
            if ni < 0 || nj < 0 || !admissible(l, t.k, ni as u32, nj as u32) {
                continue;
            }
            let r = s
                .c_coeff(t.k, ni as u32, nj as u32)
                .unwrap()
                .div(&base)
                .unwrap();
            let e = (&s.qi(i + 1) * &s.qi((sg * i - sg * j + k) / 2 + 1))
                .div(&(&s.qi(i + 1 + sg) * &s.qi((-sg * i + sg * j + k) / 2)))
                .unwrap()
                .scale(-(s.eps as i64));
            c2.record(r == e, || format!("{t:?} sign {sg}"));
        }
    }
    rep.push(c);
    rep.push(c2);

    let mut c = Check::new("sgn-length", "recursive L agrees with the inversion count");
    for i in 0..=l {
        for j in 0..=l {
            for k in 0..=(2 * l).min(6) {
                for p in paths(l, i, j, k) {
                    c.record(sgn_len(&p) == sgn_len_inversions(&p), || format!("{p:?}"));
                }
            }
        }
    }
    rep.push(c);

    rep.push(check_colored_ybe(&s, 6.min(3 * l)));

    let mut c = Check::new(
        "theta",
        "theta_i = iota^i zeta^{i(i+2)} matches zeta^{(l|l+2rho)~}",
    );
    for i in 0..=l {
        let w = crate::lattice::Weight(vec![i as i32, 0]);
        let a = theta_su2(params, i, 1);
        let b = crate::fusion::theta_weight(params, &w);
        c.record(a == b, || format!("i={i}"));
    }
    rep.push(c);

    if params.zeta_primitive() {
        let mut c = Check::new("hopf-trace", "Tr(M c c) on Sigma^m Sigma^n = S_mn");
        let iota = params.iota;
        match crate::fusion::kac_peterson(params, crate::fusion::effective_iota(params)) {
            Ok(kp) => {
                for a in 0..=l {
                    for b in 0..=l {
                        let x = hopf_trace(&s, iota, a, b);
                        c.record(&x == kp.get(a as usize, b as usize), || {
                            format!("({a},{b}): {x}")
                        });
                    }
                }
            }
            Err(e) => c.fail(e.to_string()),
        }
        rep.push(c);
    }
    rep
}
