//! The SU(N)_L SOS Boltzmann weights, face operators, partition functions
//! and the universal pairings on path generators.
//!
//! Face notation: `w[r p/q s]` has top edge `p`, bottom `q`, left `r` and
//! right `s`; the corners are `s(p) = s(r)`, `r(p) = s(s)`, `r(r) = s(q)` and
//! `r(q) = r(s)`. As an operator the face maps the top-right path `p.s`
//! to the left-bottom path `r.q`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_integer::Integer;

use crate::cyclo::CycNum;
use crate::error::{Error, Result};
use crate::lattice::{kappa_sq, Graph, Path, QInts};
use crate::linalg::Mat;
use crate::report::{Check, Report};

/// Parameters selecting one face model.
///
/// `t = exp(2 pi i kt / 2(N+L))`, `zeta = exp(2 pi i kz / 2N(N+L))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModelParams {
    pub n: usize,
    pub l: u32,
    pub eps: i8,
    pub iota: i8,
    pub kt: i64,
    pub kz: i64,
}

impl ModelParams {
    pub fn new(n: usize, l: u32, eps: i8, iota: i8, kt: i64, kz: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Params(format!("N = {n} must be at least 2")));
        }
        if l < 1 {
            return Err(Error::Params("L must be at least 1".into()));
        }
        if eps.abs() != 1 || iota.abs() != 1 {
            return Err(Error::Params("eps and iota must be +1 or -1".into()));
        }
        if iota == -1 && n % 2 == 1 {
            return Err(Error::Params(format!(
                "iota = -1 requires N even, got N = {n}"
            )));
        }
        let p = ModelParams {
            n,
            l,
            eps,
            iota,
            kt: kt.rem_euclid(2 * (n as i64 + l as i64)),
            kz: kz.rem_euclid(p_zeta(n, l)),
        };
        if p.kt.gcd(&(2 * p.h())) != 1 {
            return Err(Error::Params(format!(
                "t = exp(2 pi i {}/{}) is not a primitive root",
                p.kt,
                2 * p.h()
            )));
        }
        Ok(p)
    }

    /// Parameters with `t = eps^(N-1) zeta^N`, so the determinant relation holds.
    pub fn from_zeta(n: usize, l: u32, eps: i8, iota: i8, kz: i64) -> Result<Self> {
        let h = n as i64 + l as i64;
        let mut kt = kz.rem_euclid(p_zeta(n, l)) % (2 * h);
        if eps == -1 && n.is_multiple_of(2) {
            kt += h;
        }
        Self::new(n, l, eps, iota, kt, kz)
    }

    /// `N + L`.
    pub fn h(&self) -> i64 {
        self.n as i64 + self.l as i64
    }

    /// Global cyclotomic order `lcm(4, 2N(N+L))`.
    pub fn order(&self) -> u32 {
        (p_zeta(self.n, self.l) as u32).lcm(&4)
    }

    /// Exponent of `t` in `Q(z_M)`.
    pub fn t_exp(&self) -> i64 {
        self.kt * self.order() as i64 / (2 * self.h())
    }

    /// Exponent of `zeta` in `Q(z_M)`.
    pub fn zeta_exp(&self) -> i64 {
        self.kz * self.order() as i64 / p_zeta(self.n, self.l)
    }

    pub fn t(&self) -> CycNum {
        CycNum::root(self.order(), self.t_exp())
    }

    pub fn zeta(&self) -> CycNum {
        CycNum::root(self.order(), self.zeta_exp())
    }

    /// `zeta^N = eps^(N-1) t`, checked exactly.
    pub fn det_relation_holds(&self) -> bool {
        let lhs = self.zeta().pow(self.n as i64).unwrap();
        let sign = if self.eps == -1 && self.n.is_multiple_of(2) {
            -1
        } else {
            1
        };
        lhs == self.t().scale(sign)
    }

    pub fn zeta_primitive(&self) -> bool {
        self.kz.gcd(&p_zeta(self.n, self.l)) == 1
    }

    /// Conditions under which the category is modular.
    pub fn check_modular(&self) -> Result<()> {
        if !self.zeta_primitive() {
            return Err(Error::Params(format!(
                "zeta must be a primitive {}-th root of unity",
                p_zeta(self.n, self.l)
            )));
        }
        if !self.det_relation_holds() {
            return Err(Error::Params("zeta^N = eps^(N-1) t does not hold".into()));
        }
        Ok(())
    }
}

fn p_zeta(n: usize, l: u32) -> i64 {
    2 * n as i64 * (n as i64 + l as i64)
}

/// One block of the two-step operator: all 2-paths from `v` with a fixed
/// multiset of steps.
#[derive(Clone, Debug)]
struct FaceBlock {
    words: Vec<(u8, u8)>,
    /// `w[out][in]`.
    w: Vec<Vec<CycNum>>,
    winv: Vec<Vec<CycNum>>,
}

type Column = Arc<HashMap<Vec<u8>, CycNum>>;

/// A face model with its derived tables.
pub struct Model {
    pub params: ModelParams,
    pub g: Graph,
    pub m: u32,
    pub t: CycNum,
    pub zeta: CycNum,
    pub zeta_inv: CycNum,
    pub q: QInts,
    blocks: HashMap<(usize, u8, u8), FaceBlock>,
    cache: RwLock<HashMap<(bool, Path, usize), Column>>,
}

impl std::fmt::Debug for Model {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Model({:?})", self.params)
    }
}

impl Model {
    pub fn new(params: ModelParams) -> Result<Self> {
        let g = Graph::new(params.n, params.l);
        let m = params.order();
        let t = params.t();
        let zeta = params.zeta();
        let zeta_inv = zeta.conj();
        let q = QInts::new(&t, 2 * params.h() + 2)?;
        let mut model = Model {
            params,
            g,
            m,
            t,
            zeta,
            zeta_inv,
            q,
            blocks: HashMap::new(),
            cache: RwLock::new(HashMap::new()),
        };
        model.build_blocks()?;
        Ok(model)
    }

    /// `t^k`.
    pub fn tp(&self, k: i64) -> CycNum {
        CycNum::root(self.m, k * self.params.t_exp())
    }

    /// `zeta^k`.
    pub fn zp(&self, k: i64) -> CycNum {
        CycNum::root(self.m, k * self.params.zeta_exp())
    }

    pub fn qi(&self, n: i64) -> &CycNum {
        self.q.get(n)
    }

    pub fn zero(&self) -> CycNum {
        CycNum::zero(self.m)
    }

    pub fn one(&self) -> CycNum {
        CycNum::one(self.m)
    }

    pub fn int(&self, k: i64) -> CycNum {
        CycNum::from_int(self.m, k)
    }

    /// The raw weight on corner data: top-right path `(v | i, j)`,
    /// left-bottom path `(v | k, l)`.
    pub fn raw_weight(&self, v: usize, i: u8, j: u8, k: u8, l: u8) -> Result<CycNum> {
        let g = &self.g;
        let (Some(a), Some(b)) = (g.walk(v, &[i, j]), g.walk(v, &[k, l])) else {
            return Ok(self.zero());
        };
        if a != b {
            return Ok(self.zero());
        }
        if i == j {
            return Ok(if k == i && l == i {
                &self.zeta_inv * &self.t
            } else {
                self.zero()
            });
        }
        let d = g.depth(v, i, j);
        if (k, l) == (i, j) {
            let x = &(&self.zeta_inv * &self.tp(-d)) * self.q.inv(d)?;
            Ok(-x)
        } else if (k, l) == (j, i) {
            let x = &(&self.zeta_inv * self.q.get(d - 1)) * self.q.inv(d)?;
            Ok(x.scale(self.params.eps as i64))
        } else {
            Ok(self.zero())
        }
    }

    fn build_blocks(&mut self) -> Result<()> {
        let n = self.params.n as u8;
        for v in 0..self.g.num_vertices() {
            for a in 1..=n {
                for b in a..=n {
                    let mut words = Vec::new();
                    for &(x, y) in &[(a, b), (b, a)] {
                        if self.g.walk(v, &[x, y]).is_some() && !words.contains(&(x, y)) {
                            words.push((x, y));
                        }
                    }
                    if words.is_empty() {
                        continue;
                    }
                    let k = words.len();
                    let mut w = vec![vec![self.zero(); k]; k];
                    for (o, &(c, d)) in words.iter().enumerate() {
                        for (i, &(x, y)) in words.iter().enumerate() {
                            w[o][i] = self.raw_weight(v, x, y, c, d)?;
                        }
                    }
                    let mat = Mat::from_fn(self.m, k, k, |r, c| w[r][c].clone());
                    let inv = mat.inverse().map_err(|_| {
                        Error::Singular(format!("{} steps ({a},{b})", self.g.weight(v)))
                    })?;
                    let winv = (0..k)
                        .map(|r| (0..k).map(|c| inv.get(r, c).clone()).collect())
                        .collect();
                    self.blocks.insert((v, a, b), FaceBlock { words, w, winv });
                }
            }
        }
        Ok(())
    }

    fn block_entry(&self, inverse: bool, v: usize, i: u8, j: u8, k: u8, l: u8) -> CycNum {
        let key = (v, i.min(j), i.max(j));
        let Some(b) = self.blocks.get(&key) else {
            return self.zero();
        };
        let (Some(ii), Some(oo)) = (
            b.words.iter().position(|&w| w == (i, j)),
            b.words.iter().position(|&w| w == (k, l)),
        ) else {
            return self.zero();
        };
        if inverse {
            b.winv[oo][ii].clone()
        } else {
            b.w[oo][ii].clone()
        }
    }

    /// Weight with the top-right path `(v | i, j)` and left-bottom path `(v | k, l)`.
    pub fn weight(&self, v: usize, i: u8, j: u8, k: u8, l: u8) -> CycNum {
        self.block_entry(false, v, i, j, k, l)
    }

    /// Entry of the inverse operator in the same index positions.
    pub fn inv_weight(&self, v: usize, i: u8, j: u8, k: u8, l: u8) -> CycNum {
        self.block_entry(true, v, i, j, k, l)
    }

    /// `w[r p/q s]` on single edges; zero unless they form a face.
    pub fn face(&self, r: &Path, p: &Path, q: &Path, s: &Path) -> CycNum {
        self.face_gen(false, r, p, q, s)
    }

    fn face_gen(&self, inverse: bool, r: &Path, p: &Path, q: &Path, s: &Path) -> CycNum {
        assert!(r.len() == 1 && p.len() == 1 && q.len() == 1 && s.len() == 1);
        let g = &self.g;
        if r.src != p.src
            || g.next(p.src, p.steps[0]) != Some(s.src)
            || g.next(r.src, r.steps[0]) != Some(q.src)
        {
            return self.zero();
        }
        self.block_entry(
            inverse, p.src, p.steps[0], s.steps[0], r.steps[0], q.steps[0],
        )
    }

    /// The transposed weight `w^Sigma[r p/q s] = w[p r/s q]`.
    pub fn sigma_face(&self, r: &Path, p: &Path, q: &Path, s: &Path) -> CycNum {
        self.face(p, r, s, q)
    }

    /// `w^Sigma` in corner form: top-right `(v|i,j)`, left-bottom `(v|k,l)`.
    pub fn sigma_weight(&self, v: usize, i: u8, j: u8, k: u8, l: u8) -> CycNum {
        self.weight(v, k, l, i, j)
    }

    /// `w^Sigma` computed as the `kappa^2` rescaling of `w`.
    pub fn sigma_weight_kappa(&self, v: usize, i: u8, j: u8, k: u8, l: u8) -> Result<CycNum> {
        let w = self.weight(v, i, j, k, l);
        if w.is_zero() {
            return Ok(w);
        }
        let kin = kappa_sq(&self.g, &Path::new(v, vec![i, j]), &self.q)?;
        let kout = kappa_sq(&self.g, &Path::new(v, vec![k, l]), &self.q)?;
        Ok(&(&kin * &kout.inv()?) * &w)
    }

    /// Apply the two-step operator at steps `pos, pos+1` (0-based).
    fn apply_face(
        &self,
        inverse: bool,
        src: usize,
        steps: &[u8],
        pos: usize,
        coeff: &CycNum,
        out: &mut HashMap<Vec<u8>, CycNum>,
    ) {
        let v = self.g.walk(src, &steps[..pos]).expect("invalid path");
        let (i, j) = (steps[pos], steps[pos + 1]);
        let Some(b) = self.blocks.get(&(v, i.min(j), i.max(j))) else {
            return;
        };
        let Some(ii) = b.words.iter().position(|&w| w == (i, j)) else {
            return;
        };
        let tab = if inverse { &b.winv } else { &b.w };
        for (oo, &(k, l)) in b.words.iter().enumerate() {
            let c = &tab[oo][ii];
            if c.is_zero() {
                continue;
            }
            let mut s = steps.to_vec();
            s[pos] = k;
            s[pos + 1] = l;
            let val = coeff * c;
            match out.get_mut(&s) {
                Some(x) => *x += &val,
                None => {
                    out.insert(s, val);
                }
            }
        }
    }

    fn apply_seq(
        &self,
        inverse: bool,
        src: usize,
        x: &[u8],
        seq: &[usize],
    ) -> HashMap<Vec<u8>, CycNum> {
        let mut cur: HashMap<Vec<u8>, CycNum> = HashMap::new();
        cur.insert(x.to_vec(), self.one());
        for &pos in seq {
            let mut next = HashMap::new();
            for (s, c) in &cur {
                self.apply_face(inverse, src, s, pos, c, &mut next);
            }
            next.retain(|_, c| !c.is_zero());
            cur = next;
        }
        cur
    }

    /// Face positions carrying an `m`-edge right side through an `n`-edge top.
    fn block_sequence(n: usize, m: usize) -> Vec<usize> {
        let mut seq = Vec::with_capacity(n * m);
        for row in 0..m {
            for k in (row..n + row).rev() {
                seq.push(k);
            }
        }
        seq
    }

    /// `W_{n,m}(x)` for `x = top(n) . right(m)` (or its inverse applied to
    /// `x = left(m) . bottom(n)`), as a sparse vector over step words.
    pub fn block_column(&self, inverse: bool, x: &Path, n: usize) -> Column {
        let key = (inverse, x.clone(), n);
        if let Some(c) = self.cache.read().unwrap().get(&key) {
            return c.clone();
        }
        let m = x.len() - n;
        let col = if inverse {
            let mut seq = Self::block_sequence(n, m);
            seq.reverse();
            self.apply_seq(true, x.src, &x.steps, &seq)
        } else {
            self.apply_seq(false, x.src, &x.steps, &Self::block_sequence(n, m))
        };
        let col = Arc::new(col);
        self.cache
            .write()
            .unwrap()
            .entry(key)
            .or_insert(col)
            .clone()
    }

    fn cat(&self, a: &Path, b: &Path) -> Option<Path> {
        if !self.g.is_path(a) || !self.g.is_path(b) {
            return None;
        }
        self.g.concat(a, b)
    }

    /// Partition function `w[r p/q s]`, `p, q` of length `n`, `r, s` of length `m`.
    pub fn partition(&self, r: &Path, p: &Path, q: &Path, s: &Path) -> CycNum {
        assert_eq!(p.len(), q.len(), "top and bottom lengths differ");
        assert_eq!(r.len(), s.len(), "left and right lengths differ");
        if r.src != p.src {
            return self.zero();
        }
        let (Some(x), Some(y)) = (self.cat(p, s), self.cat(r, q)) else {
            return self.zero();
        };
        if self.g.target(&x) != self.g.target(&y) {
            return self.zero();
        }
        let col = self.block_column(false, &x, p.len());
        col.get(&y.steps).cloned().unwrap_or_else(|| self.zero())
    }

    /// Coefficient of `p.s` in `W^{-1}(r.q)`: the inverse block read with the
    /// same corner labels as [`Model::partition`].
    pub fn partition_inv(&self, r: &Path, p: &Path, q: &Path, s: &Path) -> CycNum {
        if r.src != p.src {
            return self.zero();
        }
        let (Some(x), Some(y)) = (self.cat(p, s), self.cat(r, q)) else {
            return self.zero();
        };
        if self.g.target(&x) != self.g.target(&y) {
            return self.zero();
        }
        let col = self.block_column(true, &y, p.len());
        col.get(&x.steps).cloned().unwrap_or_else(|| self.zero())
    }

    /// Row-first or column-first evaluation of the two defining recursions.
    pub fn partition_recursive(
        &self,
        r: &Path,
        p: &Path,
        q: &Path,
        s: &Path,
        rows_first: bool,
    ) -> CycNum {
        let g = &self.g;
        let (m, n) = (r.len(), p.len());
        if m == 0 {
            return if p == q { self.one() } else { self.zero() };
        }
        if n == 0 {
            return if r == s { self.one() } else { self.zero() };
        }
        if r.src != p.src
            || q.src != g.target(r)
            || s.src != g.target(p)
            || g.target(q) != g.target(s)
        {
            return self.zero();
        }
        if m == 1 && n == 1 {
            return self.face(r, p, q, s);
        }
        let split_rows = (rows_first && m > 1) || n == 1;
        let mut acc = self.zero();
        if split_rows {
            let (r1, r2) = split(g, r, 1);
            let (s1, s2) = split(g, s, 1);
            for a in g.paths(g.target(&r1), g.target(&s1), n) {
                let x = self.partition_recursive(&r1, p, &a, &s1, rows_first);
                if x.is_zero() {
                    continue;
                }
                acc = &acc + &(&x * &self.partition_recursive(&r2, &a, q, &s2, rows_first));
            }
        } else {
            let (p1, p2) = split(g, p, 1);
            let (q1, q2) = split(g, q, 1);
            for a in g.paths(g.target(&p1), g.target(&q1), m) {
                let x = self.partition_recursive(r, &p1, &q1, &a, rows_first);
                if x.is_zero() {
                    continue;
                }
                acc = &acc + &(&x * &self.partition_recursive(&a, &p2, &q2, s, rows_first));
            }
        }
        acc
    }

    /// `R^+(e(p, q), e(r, s)) = w[r q/p s]`.
    pub fn r_plus(&self, p: &Path, q: &Path, r: &Path, s: &Path) -> CycNum {
        if p.len() != q.len() || r.len() != s.len() {
            return self.zero();
        }
        self.partition(r, q, p, s)
    }

    /// `R^-(e(p, q), e(r, s))`, the convolution inverse of `R^+`: the
    /// coefficient of `p.r` in `W^{-1}(s.q)`.
    pub fn r_minus(&self, p: &Path, q: &Path, r: &Path, s: &Path) -> CycNum {
        if p.len() != q.len() || r.len() != s.len() {
            return self.zero();
        }
        self.partition_inv(s, p, q, r)
    }

    /// The operator `w_{i/m}` (1-based `i`), blockwise over `(source, range)`.
    pub fn face_op(&self, m: usize, i: usize, inverse: bool) -> FaceOperator {
        assert!(1 <= i && i < m, "face position out of range");
        let nv = self.g.num_vertices();
        let mut blocks = Vec::new();
        for a in 0..nv {
            for b in 0..nv {
                let basis = self.g.paths(a, b, m);
                if basis.is_empty() {
                    continue;
                }
                let mat = self.op_matrix(&basis, i - 1, inverse);
                blocks.push(OpBlock {
                    src: a,
                    tgt: b,
                    basis,
                    mat,
                });
            }
        }
        FaceOperator { m, i, blocks }
    }

    fn op_matrix(&self, basis: &[Path], pos: usize, inverse: bool) -> Mat {
        let idx: HashMap<&Vec<u8>, usize> = basis
            .iter()
            .enumerate()
            .map(|(k, p)| (&p.steps, k))
            .collect();
        let mut mat = Mat::zeros(self.m, basis.len(), basis.len());
        for (c, p) in basis.iter().enumerate() {
            let mut out = HashMap::new();
            self.apply_face(inverse, p.src, &p.steps, pos, &self.one(), &mut out);
            for (s, v) in out {
                mat.set(idx[&s], c, v);
            }
        }
        mat
    }

    /// Generators `w_1, ..., w_{m-1}` on the span of `G^m_{lambda mu}`.
    pub fn braid_rep(&self, m: usize, lambda: usize, mu: usize) -> Vec<Mat> {
        let basis = self.g.paths(lambda, mu, m);
        (1..m)
            .map(|i| self.op_matrix(&basis, i - 1, false))
            .collect()
    }
}

fn split(g: &Graph, p: &Path, k: usize) -> (Path, Path) {
    let a = Path::new(p.src, p.steps[..k].to_vec());
    let b = Path::new(g.target(&a), p.steps[k..].to_vec());
    (a, b)
}

/// One `(source, range)` block of a face operator; `mat[out][in]`.
#[derive(Clone, Debug)]
pub struct OpBlock {
    pub src: usize,
    pub tgt: usize,
    pub basis: Vec<Path>,
    pub mat: Mat,
}

#[derive(Clone, Debug)]
pub struct FaceOperator {
    pub m: usize,
    pub i: usize,
    pub blocks: Vec<OpBlock>,
}

impl FaceOperator {
    /// Blockwise product `self * other`.
    pub fn compose(&self, o: &FaceOperator) -> FaceOperator {
        assert_eq!(self.m, o.m);
        let blocks = self
            .blocks
            .iter()
            .zip(&o.blocks)
            .map(|(a, b)| {
                debug_assert_eq!((a.src, a.tgt), (b.src, b.tgt));
                OpBlock {
                    src: a.src,
                    tgt: a.tgt,
                    basis: a.basis.clone(),
                    mat: a.mat.mul(&b.mat),
                }
            })
            .collect();
        FaceOperator {
            m: self.m,
            i: 0,
            blocks,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(|b| b.mat.is_identity())
    }
}

/// Models covering every primitive `t` for the given `(N, L, eps)`.
pub fn all_zeta_models(n: usize, l: u32, eps: i8) -> Vec<ModelParams> {
    let pz = p_zeta(n, l);
    (0..pz)
        .filter_map(|kz| ModelParams::from_zeta(n, l, eps, 1, kz).ok())
        .collect()
}

/// Braid relation, far commutation and the Hecke condition on `G^3`, `G^4`.
pub fn check_ybe(model: &Model) -> Report {
    let mut rep = Report::new("ybe");
    let g = &model.g;
    let nv = g.num_vertices();
    let mut braid = Check::new("braid-relation", "w1 w2 w1 = w2 w1 w2 on paths of length 3");
    let mut hecke = Check::new("hecke", "(w - zeta^-1 t)(w + zeta^-1 t^-1) = 0");
    let a = &model.zeta_inv * &model.t;
    let b = &model.zeta_inv * &model.tp(-1);
    for x in 0..nv {
        for y in 0..nv {
            let gens = model.braid_rep(3, x, y);
            if gens[0].rows == 0 {
                continue;
            }
            let (w1, w2) = (&gens[0], &gens[1]);
            let ok = w1.mul(w2).mul(w1) == w2.mul(w1).mul(w2);
            braid.record(ok, || format!("block {} -> {}", g.weight(x), g.weight(y)));
            let id = Mat::identity(model.m, w1.rows);
            for (k, w) in gens.iter().enumerate() {
                let z = w.sub(&id.scale(&a)).mul(&w.add(&id.scale(&b)));
                hecke.record(z.is_zero(), || {
                    format!("w{} on block {} -> {}", k + 1, g.weight(x), g.weight(y))
                });
            }
        }
    }
    rep.push(braid);
    let mut far = Check::new("far-commutation", "w1 w3 = w3 w1 on paths of length 4");
    for x in 0..nv {
        for y in 0..nv {
            let gens = model.braid_rep(4, x, y);
            if gens[0].rows == 0 {
                continue;
            }
            far.record(gens[0].mul(&gens[2]) == gens[2].mul(&gens[0]), || {
                format!("block {} -> {}", g.weight(x), g.weight(y))
            });
        }
    }
    rep.push(far);
    rep.push(hecke);
    rep
}

/// Every block of `w` is invertible and `w w^-1 = w^-1 w = id` on `G^2`, `G^3`.
pub fn check_inversion(model: &Model) -> Report {
    let mut rep = Report::new("inversion");
    let mut c = Check::new(
        "blockwise-inverse",
        "w w^-1 = id on every (source, range) block",
    );
    for m in 2..=3 {
        for i in 1..m {
            let w = model.face_op(m, i, false);
            let wi = model.face_op(m, i, true);
            for (a, b) in w.blocks.iter().zip(&wi.blocks) {
                let ok = a.mat.mul(&b.mat).is_identity() && b.mat.mul(&a.mat).is_identity();
                c.record(ok, || {
                    format!(
                        "w_{i}/{m} block {} -> {}",
                        model.g.weight(a.src),
                        model.g.weight(a.tgt)
                    )
                });
            }
        }
    }
    rep.push(c);
    rep
}

/// The pairing vanishes on the FRT ideal and `R^-` is the convolution inverse of `R^+`.
pub fn check_frt(model: &Model) -> Report {
    let mut rep = Report::new("frt");
    let g = &model.g;
    let nv = g.num_vertices();
    let p2: Vec<Vec<Vec<Path>>> = (0..nv)
        .map(|a| (0..nv).map(|b| g.paths(a, b, 2)).collect())
        .collect();
    let mut left = Check::new("ideal-left", "R+(generator of the FRT ideal, e(r,s)) = 0");
    let mut right = Check::new("ideal-right", "R+(e(r,s), generator of the FRT ideal) = 0");
    // X(pq, ab) = sum_{rs} w[r p/s q] e(ab, rs) - sum_{cd} w[a c/b d] e(cd, pq).
    let gen_terms = |pq: &Path, ab: &Path| -> Vec<(Path, Path, CycNum)> {
        let mut out = Vec::new();
        for (s, v) in model.block_column(false, pq, 1).iter() {
            out.push((ab.clone(), Path::new(pq.src, s.clone()), v.clone()));
        }
        let (a, b) = split(g, ab, 1);
        for cd in &p2[ab.src][g.target(ab)] {
            let (c, d) = split(g, cd, 1);
            let v = model.partition(&a, &c, &b, &d);
            if !v.is_zero() {
                out.push((cd.clone(), pq.clone(), -v));
            }
        }
        out
    };
    for a1 in 0..nv {
        for b1 in 0..nv {
            for pq in &p2[a1][b1] {
                for a2 in 0..nv {
                    for b2 in 0..nv {
                        for ab in &p2[a2][b2] {
                            let terms = gen_terms(pq, ab);
                            // R+(e(x,y), e(u,v)) = w[u y/x v]: u in G2[s(y), s(x)], v in G2[r(y), r(x)].
                            for u in &p2[a1][a2] {
                                for v in &p2[b1][b2] {
                                    let mut s = model.zero();
                                    for (x, y, c) in &terms {
                                        s = &s + &(c * &model.r_plus(x, y, u, v));
                                    }
                                    left.record(s.is_zero(), || {
                                        format!(
                                            "X({}, {}) vs e({}, {})",
                                            g.path_string(pq),
                                            g.path_string(ab),
                                            g.path_string(u),
                                            g.path_string(v)
                                        )
                                    });
                                }
                            }
                            // R+(e(u,v), e(x,y)) = w[x v/u y]: v in G2[s(x), s(y)], u in G2[r(x), r(y)].
                            for u in &p2[b2][b1] {
                                for v in &p2[a2][a1] {
                                    let mut s = model.zero();
                                    for (x, y, c) in &terms {
                                        s = &s + &(c * &model.r_plus(u, v, x, y));
                                    }
                                    right.record(s.is_zero(), || {
                                        format!(
                                            "e({}, {}) vs X({}, {})",
                                            g.path_string(u),
                                            g.path_string(v),
                                            g.path_string(pq),
                                            g.path_string(ab)
                                        )
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    rep.push(left);
    rep.push(right);
    rep.push(check_convolution_inverse(model, 2));
    rep
}

/// `sum_{x,y} R-(e(p,x), e(r,y)) R+(e(x,q), e(y,s)) = delta_pq delta_rs` for `p.r` composable.
pub fn check_convolution_inverse(model: &Model, max_len: usize) -> Check {
    let g = &model.g;
    let nv = g.num_vertices();
    let mut c = Check::new(
        "convolution-inverse",
        "R- R+ = counit on products e(p,q) e(r,s)",
    );
    for m in 1..=max_len {
        let by_src: Vec<Vec<Path>> = (0..nv).map(|v| g.paths_from(v, m)).collect();
        for p in g.all_paths(m) {
            for r in &by_src[g.target(&p)] {
                for q in &by_src[p.src] {
                    for s in by_src[g.target(q)]
                        .iter()
                        .filter(|s| g.target(s) == g.target(r))
                    {
                        let mut acc = model.zero();
                        for y in &by_src[p.src] {
                            for x in by_src[g.target(y)]
                                .iter()
                                .filter(|x| g.target(x) == g.target(r))
                            {
                                let a = model.r_minus(&p, x, r, y);
                                if !a.is_zero() {
                                    acc = &acc + &(&a * &model.r_plus(x, q, y, s));
                                }
                            }
                        }
                        let ok = if &p == q && r == s {
                            acc.is_one()
                        } else {
                            acc.is_zero()
                        };
                        c.record(ok, || {
                            format!(
                                "p={} q={} r={} s={}",
                                g.path_string(&p),
                                g.path_string(q),
                                g.path_string(r),
                                g.path_string(s)
                            )
                        });
                    }
                }
            }
        }
    }
    c
}

/// `w^Sigma` transpose identity against the `kappa^2` rescaling, on all faces.
pub fn check_sigma(model: &Model) -> Report {
    let mut rep = Report::new("sigma");
    let mut c = Check::new("kappa-gauge", "w^Sigma = (kappa(p.q)/kappa(r.s))^2 w");
    let n = model.params.n as u8;
    for v in 0..model.g.num_vertices() {
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    for l in 1..=n {
                        let a = model.sigma_weight(v, i, j, k, l);
                        match model.sigma_weight_kappa(v, i, j, k, l) {
                            Ok(b) => c.record(a == b, || {
                                format!("{}|{i},{j} / {k},{l}", model.g.weight(v))
                            }),
                            Err(e) => c.fail(format!("{e}")),
                        }
                    }
                }
            }
        }
    }
    rep.push(c);
    rep
}
