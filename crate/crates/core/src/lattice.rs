//! Level-L dominant weights of sl_N, the graph of single-box steps between
//! them, path enumeration and the statistics built on paths.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::cyclo::CycNum;
use crate::error::{Error, Result};

/// A weight `(l_1, ..., l_N)` normalized so that `l_N = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `|l| = l_1 + ... + l_N`.
    pub fn size(&self) -> i64 {
        self.0.iter().map(|&x| x as i64).sum()
    }

    pub fn is_valid(&self, l: u32) -> bool {
        let v = &self.0;
        !v.is_empty()
            && v[v.len() - 1] == 0
            && v[0] <= l as i32
            && v.windows(2).all(|w| w[0] >= w[1])
    }

    /// The fundamental weight `Lambda_m = 1^ + ... + m^`.
    pub fn fundamental(n: usize, m: usize) -> Self {
        let mut v = vec![0; n];
        if m < n {
            for x in v.iter_mut().take(m) {
                *x = 1;
            }
        }
        Weight(v)
    }

    /// `rho = Lambda_1 + ... + Lambda_{N-1} = (N-1, ..., 1, 0)`.
    pub fn rho(n: usize) -> Self {
        Weight((0..n).map(|i| (n - 1 - i) as i32).collect())
    }

    /// Componentwise sum, renormalized.
    pub fn plus(&self, o: &Weight) -> Weight {
        let v: Vec<i32> = self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect();
        let last = *v.last().unwrap();
        Weight(v.into_iter().map(|x| x - last).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        let parts: Vec<String> = self.0[..n - 1].iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All weights with `L >= l_1 >= ... >= l_N = 0`, in lexicographic order.
pub fn vertices(n: usize, l: u32) -> Vec<Weight> {
    fn rec(n: usize, pos: usize, max: i32, cur: &mut Vec<i32>, out: &mut Vec<Weight>) {
        if pos == n - 1 {
            let mut w = cur.clone();
            w.push(0);
            out.push(Weight(w));
            return;
        }
        for v in 0..=max {
            cur.push(v);
            rec(n, pos + 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, l as i32, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `l + i^`, or `None` when it leaves the vertex set.
pub fn step(lambda: &Weight, i: usize, l: u32) -> Option<Weight> {
    let n = lambda.rank();
    assert!((1..=n).contains(&i), "step index out of range");
    let mut v = lambda.0.clone();
    v[i - 1] += 1;
    let last = v[n - 1];
    for x in v.iter_mut() {
        *x -= last;
    }
    let w = Weight(v);
    w.is_valid(l).then_some(w)
}

/// `d(l | i, j) = l_i - l_j + j - i`.
pub fn depth(lambda: &Weight, i: usize, j: usize) -> i64 {
    (lambda.0[i - 1] - lambda.0[j - 1]) as i64 + j as i64 - i as i64
}

/// Number of pairs `k < l` in the step word with `i_k < i_l`.
pub fn inversions(steps: &[u8]) -> usize {
    let mut c = 0;
    for k in 0..steps.len() {
        for l in k + 1..steps.len() {
            if steps[k] < steps[l] {
                c += 1;
            }
        }
    }
    c
}

/// `N (l | m)` for weights given in hat coordinates with integer entries.
pub fn inner_tilde(a: &Weight, b: &Weight) -> i64 {
    let n = a.rank() as i64;
    let dot: i64 =
        a.0.iter()
            .zip(&b.0)
            .map(|(x, y)| *x as i64 * *y as i64)
            .sum();
    n * dot - a.size() * b.size()
}

/// `N (a | b)` for arbitrary rational hat coordinates; fails unless integral.
pub fn inner_tilde_q(a: &[BigRational], b: &[BigRational]) -> Result<i64> {
    let n = BigRational::from_integer(BigInt::from(a.len()));
    let dot: BigRational = a
        .iter()
        .zip(b)
        .map(|(x, y)| x * y)
        .fold(BigRational::zero(), |s, v| s + v);
    let sa: BigRational = a.iter().fold(BigRational::zero(), |s, v| s + v);
    let sb: BigRational = b.iter().fold(BigRational::zero(), |s, v| s + v);
    let v = n * dot - sa * sb;
    if v.is_integer() {
        v.to_integer()
            .to_i64()
            .ok_or_else(|| Error::NonIntegral(v.to_string()))
    } else {
        Err(Error::NonIntegral(v.to_string()))
    }
}

/// A path `(l | i_1, ..., i_m)`; `src` indexes [`Graph::vertices`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Path {
    pub src: usize,
    pub steps: Vec<u8>,
}

impl Path {
    pub fn new(src: usize, steps: Vec<u8>) -> Self {
        Path { src, steps }
    }
    pub fn empty(src: usize) -> Self {
        Path {
            src,
            steps: Vec::new(),
        }
    }
    pub fn len(&self) -> usize {
        self.steps.len()
    }
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// The oriented graph on level-L weights.
#[derive(Debug, Clone)]
pub struct Graph {
    pub n: usize,
    pub l: u32,
    verts: Vec<Weight>,
    index: HashMap<Weight, usize>,
    next: Vec<Vec<Option<usize>>>,
}

impl Graph {
    pub fn new(n: usize, l: u32) -> Self {
        let verts = vertices(n, l);
        let index = verts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect::<HashMap<_, _>>();
        let next = verts
            .iter()
            .map(|w| (1..=n).map(|i| step(w, i, l).map(|u| index[&u])).collect())
            .collect();
        Graph {
            n,
            l,
            verts,
            index,
            next,
        }
    }

    pub fn vertices(&self) -> &[Weight] {
        &self.verts
    }

    pub fn num_vertices(&self) -> usize {
        self.verts.len()
    }

    pub fn weight(&self, v: usize) -> &Weight {
        &self.verts[v]
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn zero(&self) -> usize {
        self.index[&Weight::zero(self.n)]
    }

    /// Target of the edge `(v | i)`.
    pub fn next(&self, v: usize, i: u8) -> Option<usize> {
        self.next[v][i as usize - 1]
    }

    /// Endpoint of the step word from `v`, if every prefix is valid.
    pub fn walk(&self, v: usize, steps: &[u8]) -> Option<usize> {
        steps.iter().try_fold(v, |u, &i| self.next(u, i))
    }

    pub fn target(&self, p: &Path) -> usize {
        self.walk(p.src, &p.steps).expect("invalid path")
    }

    pub fn is_path(&self, p: &Path) -> bool {
        self.walk(p.src, &p.steps).is_some()
    }

    /// Vertex reached after the first `k` steps.
    pub fn vertex_at(&self, p: &Path, k: usize) -> usize {
        self.walk(p.src, &p.steps[..k]).expect("invalid path")
    }

    /// All paths of length `m` starting at `v`, depth-first in step order.
    pub fn paths_from(&self, v: usize, m: usize) -> Vec<Path> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(m);
        self.dfs(v, m, &mut cur, &mut |s| out.push(Path::new(v, s.to_vec())));
        out
    }

    fn dfs(&self, v: usize, m: usize, cur: &mut Vec<u8>, f: &mut dyn FnMut(&[u8])) {
        if cur.len() == m {
            f(cur);
            return;
        }
        for i in 1..=self.n as u8 {
            if let Some(u) = self.next(v, i) {
                cur.push(i);
                self.dfs(u, m, cur, f);
                cur.pop();
            }
        }
    }

    /// All paths of length `m` from `a` to `b`.
    pub fn paths(&self, a: usize, b: usize, m: usize) -> Vec<Path> {
        self.paths_from(a, m)
            .into_iter()
            .filter(|p| self.target(p) == b)
            .collect()
    }

    /// All paths of length `m`, grouped by source in vertex order.
    pub fn all_paths(&self, m: usize) -> Vec<Path> {
        (0..self.verts.len())
            .flat_map(|v| self.paths_from(v, m))
            .collect()
    }

    pub fn concat(&self, p: &Path, q: &Path) -> Option<Path> {
        if self.target(p) != q.src {
            return None;
        }
        let mut s = p.steps.clone();
        s.extend_from_slice(&q.steps);
        Some(Path::new(p.src, s))
    }

    pub fn path_string(&self, p: &Path) -> String {
        let s: Vec<String> = p.steps.iter().map(|i| i.to_string()).collect();
        format!("{}|{}", self.verts[p.src], s.join(","))
    }

    /// `d` of the two-step data `(v | i, j)`.
    pub fn depth(&self, v: usize, i: u8, j: u8) -> i64 {
        depth(&self.verts[v], i as usize, j as usize)
    }
}

/// Quantum integers `[n]` and their inverses at a fixed `t`, `|n| <= bound`.
#[derive(Clone, Debug)]
pub struct QInts {
    bound: i64,
    vals: Vec<CycNum>,
    invs: Vec<Option<CycNum>>,
}

impl QInts {
    pub fn new(t: &CycNum, bound: i64) -> Result<Self> {
        let mut vals = Vec::new();
        let mut invs = Vec::new();
        let pos: Vec<CycNum> = (0..=bound)
            .map(|k| crate::cyclo::qint(k, t))
            .collect::<Result<_>>()?;
        for n in -bound..=bound {
            let v = if n < 0 {
                -&pos[(-n) as usize]
            } else {
                pos[n as usize].clone()
            };
            invs.push(if v.is_zero() { None } else { Some(v.inv()?) });
            vals.push(v);
        }
        Ok(QInts { bound, vals, invs })
    }

    pub fn get(&self, n: i64) -> &CycNum {
        assert!(n.abs() <= self.bound, "quantum integer [{n}] out of table");
        &self.vals[(n + self.bound) as usize]
    }

    pub fn inv(&self, n: i64) -> Result<&CycNum> {
        assert!(n.abs() <= self.bound, "quantum integer [{n}] out of table");
        self.invs[(n + self.bound) as usize]
            .as_ref()
            .ok_or(Error::ZeroInverse)
    }

    /// `A_d^2 = a_d / a_{-d} = [d+1] / [d-1]`.
    pub fn a_sq(&self, d: i64) -> Result<CycNum> {
        Ok(self.get(d + 1) * self.inv(d - 1)?)
    }
}

/// `kappa(l | i)^2`.
pub fn kappa_sq_edge(g: &Graph, v: usize, i: u8, q: &QInts) -> Result<CycNum> {
    let lam = g.weight(v);
    let zero = Weight::zero(g.n);
    let m = q.get(0).order();
    let mut acc = CycNum::one(m);
    for k in i as usize + 1..=g.n {
        let lo = depth(&zero, i as usize, k) + 1;
        let hi = depth(lam, i as usize, k);
        for d in lo..=hi {
            acc = &acc * &q.a_sq(d)?;
        }
    }
    Ok(acc)
}

/// `kappa(p)^2`, multiplicative over the edges of `p`.
pub fn kappa_sq(g: &Graph, p: &Path, q: &QInts) -> Result<CycNum> {
    let m = q.get(0).order();
    let mut acc = CycNum::one(m);
    let mut v = p.src;
    for &i in &p.steps {
        acc = &acc * &kappa_sq_edge(g, v, i, q)?;
        v = g.next(v, i).expect("invalid path");
    }
    Ok(acc)
}
