//! Sliced link diagrams, their linking data, and the SU(2) state-sum
//! invariant of the 3-manifold obtained by surgery.
//!
//! Diagram text, one event per line, top to bottom:
//! `cap i`, `cup i`, `x+ i`, `x- i` (0-based strand positions), `#` comments.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::boltzmann::ModelParams;
use crate::cyclo::{CycNum, QuadNum};
use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::su2::{admissible, Su2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Event {
    Cap(usize),
    Cup(usize),
    Xp(usize),
    Xn(usize),
}

impl Event {
    pub fn pos(&self) -> usize {
        match *self {
            Event::Cap(i) | Event::Cup(i) | Event::Xp(i) | Event::Xn(i) => i,
        }
    }

    /// The crossing reflected in the plane of the diagram.
    pub fn mirror(&self) -> Event {
        match *self {
            Event::Xp(i) => Event::Xn(i),
            Event::Xn(i) => Event::Xp(i),
            e => e,
        }
    }
}

impl std::fmt::Display for Event {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Event::Cap(i) => write!(f, "cap {i}"),
            Event::Cup(i) => write!(f, "cup {i}"),
            Event::Xp(i) => write!(f, "x+ {i}"),
            Event::Xn(i) => write!(f, "x- {i}"),
        }
    }
}

/// A validated sliced diagram with its derived arc and component data.
#[derive(Clone, Debug)]
pub struct SlicedDiagram {
    pub events: Vec<Event>,
    /// Component of each strand, per slice: `strands[s]` lists the components
    /// of the strands just below event `s` (`strands[0]` is above event 0).
    pub strands: Vec<Vec<usize>>,
    pub components: usize,
    /// Direction of each strand just below event `s`: `true` when the
    /// traversal goes down.
    pub down: Vec<Vec<bool>>,
    /// Rotation number of each oriented component.
    pub rotation: Vec<i64>,
}

impl SlicedDiagram {
    pub fn width(&self, s: usize) -> usize {
        self.strands[s].len()
    }

    pub fn crossings(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e, Event::Xp(_) | Event::Xn(_)))
            .count()
    }

    pub fn mirror(&self) -> SlicedDiagram {
        SlicedDiagram {
            events: self.events.iter().map(|e| e.mirror()).collect(),
            ..self.clone()
        }
    }

    pub fn to_text(&self) -> String {
        self.events.iter().map(|e| format!("{e}\n")).collect()
    }
}

pub fn parse_diagram(text: &str) -> Result<SlicedDiagram> {
    let mut events = Vec::new();
    let mut width = 0usize;
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let col0 = line.len() - trimmed.len() + 1;
        let err = |col: usize, msg: String| Error::Parse {
            line: ln + 1,
            col,
            msg,
        };
        let mut parts = trimmed.split_whitespace();
        let kw = parts.next().unwrap();
        let arg = parts
            .next()
            .ok_or_else(|| err(col0 + kw.len(), format!("'{kw}' needs a position")))?;
        let col1 = col0 + trimmed.find(arg).unwrap_or(0);
        if let Some(extra) = parts.next() {
            let c = col0 + trimmed.rfind(extra).unwrap_or(0);
            return Err(err(c, format!("unexpected '{extra}'")));
        }
        let i: usize = arg
            .parse()
            .map_err(|_| err(col1, format!("bad position '{arg}'")))?;
        let ev = match kw {
            "cap" => {
                if i > width {
                    return Err(err(col1, format!("cap at {i} with {width} strands")));
                }
                width += 2;
                Event::Cap(i)
            }
            "cup" => {
                if width < 2 {
                    return Err(err(
                        col0,
                        format!("strands underflow: cup with {width} strands"),
                    ));
                }
                if i + 1 >= width {
                    return Err(err(col1, format!("cup at {i} with {width} strands")));
                }
                width -= 2;
                Event::Cup(i)
            }
            "x+" | "x-" => {
                if i + 1 >= width {
                    return Err(err(col1, format!("crossing at {i} with {width} strands")));
                }
                if kw == "x+" {
                    Event::Xp(i)
                } else {
                    Event::Xn(i)
                }
            }
            _ => return Err(err(col0, format!("unknown event '{kw}'"))),
        };
        events.push(ev);
    }
    if width != 0 {
        let n = text.lines().count().max(1);
        return Err(Error::Parse {
            line: n,
            col: 1,
            msg: format!("{width} strands left open"),
        });
    }
    from_events(events)
}

/// Build a diagram from an event list, validating it.
pub fn from_events(events: Vec<Event>) -> Result<SlicedDiagram> {
    // arcs: each strand segment between singular points
    let mut parent: Vec<usize> = Vec::new();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let n = p[y];
            p[y] = r;
            y = n;
        }
        r
    }
    // ends[arc] = (top connection, bottom connection), each (other arc, other end is top)
    let mut top: Vec<Option<(usize, bool)>> = Vec::new();
    let mut bot: Vec<Option<(usize, bool)>> = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut slices: Vec<Vec<usize>> = vec![Vec::new()];
    let new_arc = |parent: &mut Vec<usize>,
                   top: &mut Vec<Option<(usize, bool)>>,
                   bot: &mut Vec<Option<(usize, bool)>>| {
        let id = parent.len();
        parent.push(id);
        top.push(None);
        bot.push(None);
        id
    };
    for (s, ev) in events.iter().enumerate() {
        let w = cur.len();
        let bad = |msg: String| Error::Parse {
            line: s + 1,
            col: 1,
            msg,
        };
        match *ev {
            Event::Cap(i) => {
                if i > w {
                    return Err(bad(format!("cap at {i} with {w} strands")));
                }
                let a = new_arc(&mut parent, &mut top, &mut bot);
                let b = new_arc(&mut parent, &mut top, &mut bot);
                top[a] = Some((b, true));
                top[b] = Some((a, true));
                parent[b] = a;
                cur.splice(i..i, [a, b]);
            }
            Event::Cup(i) => {
                if i + 1 >= w {
                    return Err(bad(format!("cup at {i} with {w} strands")));
                }
                let (a, b) = (cur[i], cur[i + 1]);
                bot[a] = Some((b, false));
                bot[b] = Some((a, false));
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
                cur.drain(i..i + 2);
            }
            Event::Xp(i) | Event::Xn(i) => {
                if i + 1 >= w {
                    return Err(bad(format!("crossing at {i} with {w} strands")));
                }
                let (a, b) = (cur[i], cur[i + 1]);
                let na = new_arc(&mut parent, &mut top, &mut bot);
                let nb = new_arc(&mut parent, &mut top, &mut bot);
                // a continues to the right, b to the left
                bot[a] = Some((na, true));
                top[na] = Some((a, false));
                bot[b] = Some((nb, true));
                top[nb] = Some((b, false));
                parent[na] = a;
                parent[nb] = b;
                cur[i] = nb;
                cur[i + 1] = na;
            }
        }
        slices.push(cur.clone());
    }
    if !cur.is_empty() {
        return Err(Error::Parse {
            line: events.len().max(1),
            col: 1,
            msg: format!("{} strands left open", cur.len()),
        });
    }
    let n = parent.len();
    let mut comp_of_root: HashMap<usize, usize> = HashMap::new();
    let mut comp = vec![0usize; n];
    for a in 0..n {
        let r = find(&mut parent, a);
        let k = comp_of_root.len();
        comp[a] = *comp_of_root.entry(r).or_insert(k);
    }
    // orient each component: start at its first arc going down
    let mut dir: Vec<Option<bool>> = vec![None; n];
    for a in 0..n {
        if dir[a].is_some() {
            continue;
        }
        let (mut x, mut down) = (a, true);
        while dir[x].is_none() {
            dir[x] = Some(down);
            let (y, at_top) = if down {
                bot[x].unwrap()
            } else {
                top[x].unwrap()
            };
            x = y;
            down = at_top;
        }
    }
    let strands: Vec<Vec<usize>> = slices
        .iter()
        .map(|sl| sl.iter().map(|&a| comp[a]).collect())
        .collect();
    let down: Vec<Vec<bool>> = slices
        .iter()
        .map(|sl| sl.iter().map(|&a| dir[a].unwrap()).collect())
        .collect();
    // twice the rotation number: +1 per counterclockwise half turn
    let mut rot2 = vec![0i64; comp_of_root.len()];
    for (s, ev) in events.iter().enumerate() {
        match *ev {
            Event::Cap(i) => rot2[strands[s + 1][i]] += if down[s + 1][i] { 1 } else { -1 },
            Event::Cup(i) => rot2[strands[s][i]] += if down[s][i] { 1 } else { -1 },
            _ => {}
        }
    }
    let rotation = rot2.iter().map(|r| r / 2).collect();
    Ok(SlicedDiagram {
        events,
        strands,
        components: comp_of_root.len(),
        down,
        rotation,
    })
}

/// Linking matrix and signature of the framed link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingData {
    pub matrix: Vec<Vec<i64>>,
    pub signature: i64,
}

/// Sign of each crossing: `+1` for `x+` when both strands run the same
/// vertical way.
pub fn crossing_signs(d: &SlicedDiagram) -> Vec<(usize, usize, i64)> {
    let mut out = Vec::new();
    for (s, ev) in d.events.iter().enumerate() {
        let (i, ty) = match *ev {
            Event::Xp(i) => (i, 1),
            Event::Xn(i) => (i, -1),
            _ => continue,
        };
        let above = &d.down[s];
        let same = above[i] == above[i + 1];
        let comps = &d.strands[s];
        out.push((comps[i], comps[i + 1], if same { ty } else { -ty }));
    }
    out
}

pub fn linking(d: &SlicedDiagram) -> LinkingData {
    let p = d.components;
    let mut twice = vec![vec![0i64; p]; p];
    for (a, b, s) in crossing_signs(d) {
        if a == b {
            twice[a][a] += 2 * s;
        } else {
            twice[a][b] += s;
            twice[b][a] += s;
        }
    }
    for (a, row) in twice.iter().enumerate() {
        for (b, &x) in row.iter().enumerate() {
            assert!(a == b || x % 2 == 0, "odd inter-component crossing count");
        }
    }
    let mut matrix: Vec<Vec<i64>> = twice
        .iter()
        .map(|r| r.iter().map(|x| x / 2).collect())
        .collect();
    // orient components so the first nonzero linking number with an earlier
    // component is positive; this is a congruence and keeps the signature
    for q in 1..p {
        if let Some(&x) = matrix[q][..q].iter().find(|&&x| x != 0) {
            if x < 0 {
                for r in 0..p {
                    if r != q {
                        matrix[q][r] = -matrix[q][r];
                        matrix[r][q] = -matrix[r][q];
                    }
                }
            }
        }
    }
    let signature = signature(&matrix);
    LinkingData { matrix, signature }
}

/// Signature of a symmetric integer matrix by rational congruence
/// elimination.
pub fn signature(m: &[Vec<i64>]) -> i64 {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect();
    let mut sig = 0i64;
    loop {
        let n = a.len();
        if n == 0 {
            return sig;
        }
        if let Some(k) = (0..n).find(|&k| !a[k][k].is_zero()) {
            let p = a[k][k].clone();
            sig += if p.is_positive() { 1 } else { -1 };
            let rest: Vec<usize> = (0..n).filter(|&x| x != k).collect();
            a = rest
                .iter()
                .map(|&i| {
                    rest.iter()
                        .map(|&j| &a[i][j] - &(&a[i][k] * &a[k][j]) / &p)
                        .collect()
                })
                .collect();
            continue;
        }
        let Some((i, j)) = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
        else {
            return sig;
        };
        // hyperbolic block [[0, b], [b, 0]]: one positive, one negative
        let b = a[i][j].clone();
        let binv = BigRational::one() / &b;
        let rest: Vec<usize> = (0..n).filter(|&x| x != i && x != j).collect();
        a = rest
            .iter()
            .map(|&r| {
                rest.iter()
                    .map(|&c| {
                        // C B^-1 C^T with B^-1 = [[0, 1/b], [1/b, 0]]
                        let corr = &(&(&a[r][i] * &a[j][c]) + &(&a[r][j] * &a[i][c])) * &binv;
                        &a[r][c] - &corr
                    })
                    .collect()
            })
            .collect();
    }
}

/// Which braiding table a crossing type uses, and how the arc labels are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conventions {
    /// `x+` uses `w^+` (otherwise `w^-`).
    pub xp_plus: bool,
    /// Cups use `c(l; inner, outer)^-1` (otherwise `c(l; outer, inner)^-1`).
    pub cup_reversed: bool,
    /// Multiply by `((-eps iota)^c)^rot` per component.
    pub rotation: bool,
}

pub const CONVENTIONS: Conventions = Conventions {
    xp_plus: true,
    cup_reversed: true,
    rotation: true,
};

/// Normalization of the invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// `Delta^sigma D^{-sigma-p-1}` as printed.
    Literal,
    /// `D^sigma Delta^{-sigma-p-1}`: the Gauss sum carries the signature.
    Swapped,
}

fn c_inv_table(s: &Su2) -> HashMap<(u32, u32, u32), (CycNum, CycNum)> {
    let mut t = HashMap::new();
    for b in crate::su2::b_set(s.l) {
        let c = s.c_coeff(b.k, b.i, b.j).unwrap();
        let ci = c.inv().unwrap();
        t.insert((b.k, b.i, b.j), (c, ci));
    }
    t
}

/// State sum with the outer region labeled `outer`, without the color
/// prefactor.
pub fn state_sum_with(
    s: &Su2,
    d: &SlicedDiagram,
    coloring: &[u32],
    outer: u32,
    conv: Conventions,
) -> CycNum {
    let l = s.l;
    let cs = c_inv_table(s);
    let mut states: HashMap<Vec<u32>, CycNum> = HashMap::new();
    states.insert(vec![outer], s.one());
    for (e, ev) in d.events.iter().enumerate() {
        let above = &d.strands[e];
        let below = &d.strands[e + 1];
        let mut next: HashMap<Vec<u32>, CycNum> = HashMap::new();
        let mut push = |k: Vec<u32>, v: CycNum| {
            if v.is_zero() {
                return;
            }
            match next.get_mut(&k) {
                Some(x) => *x += &v,
                None => {
                    next.insert(k, v);
                }
            }
        };
        for (r, val) in &states {
            match *ev {
                Event::Cap(i) => {
                    let col = coloring[below[i]];
                    let h = r[i];
                    for x in 0..=l {
                        if !admissible(l, col, h, x) {
                            continue;
                        }
                        let mut nr = r.clone();
                        nr.splice(i + 1..i + 1, [x, h]);
                        push(nr, val * &cs[&(col, h, x)].0);
                    }
                }
                Event::Cup(i) => {
                    let col = coloring[above[i]];
                    let (h, x, k) = (r[i], r[i + 1], r[i + 2]);
                    if h != k {
                        continue;
                    }
                    let key = if conv.cup_reversed {
                        (col, x, h)
                    } else {
                        (col, h, x)
                    };
                    let Some(c) = cs.get(&key) else { continue };
                    let mut nr = r.clone();
                    nr.drain(i + 1..i + 3);
                    push(nr, val * &c.1);
                }
                Event::Xp(i) | Event::Xn(i) => {
                    let (m, n) = (coloring[above[i]], coloring[above[i + 1]]);
                    let plus = matches!(ev, Event::Xp(_)) == conv.xp_plus;
                    let (h, mid, k) = (r[i], r[i + 1], r[i + 2]);
                    for e2 in 0..=l {
                        let w = s.w_pm(m, n, plus, h, mid, e2, k);
                        if w.is_zero() {
                            continue;
                        }
                        let mut nr = r.clone();
                        nr[i + 1] = e2;
                        push(nr, val * &w);
                    }
                }
            }
        }
        states = next;
    }
    states.remove(&vec![outer]).unwrap_or_else(|| s.zero())
}

/// `prod_q iota^{c_q} [c_q + 1]`.
pub fn color_weight(s: &Su2, coloring: &[u32], iota: i8) -> CycNum {
    let mut acc = s.one();
    for &c in coloring {
        let x = s.qi(c as i64 + 1);
        acc = &acc * &(if iota == -1 && c % 2 == 1 { -x } else { x });
    }
    acc
}

/// Framed link invariant of a colored diagram: the state sum with the
/// unbounded region labeled 0, with the rotation correction applied.
pub fn link_invariant(s: &Su2, d: &SlicedDiagram, coloring: &[u32]) -> CycNum {
    link_invariant_with(s, d, coloring, CONVENTIONS)
}

pub fn link_invariant_with(
    s: &Su2,
    d: &SlicedDiagram,
    coloring: &[u32],
    conv: Conventions,
) -> CycNum {
    assert_eq!(coloring.len(), d.components, "one color per component");
    let v = state_sum_with(s, d, coloring, 0, conv);
    if conv.rotation && s.params.iota == s.params.eps {
        let odd: i64 = coloring
            .iter()
            .zip(&d.rotation)
            .filter(|(c, _)| *c % 2 == 1)
            .map(|(_, r)| r)
            .sum();
        if odd % 2 != 0 {
            return -v;
        }
    }
    v
}

/// Colored evaluation: color prefactor times the link invariant.
pub fn colored_eval(s: &Su2, d: &SlicedDiagram, coloring: &[u32]) -> CycNum {
    colored_eval_with(s, d, coloring, CONVENTIONS)
}

pub fn colored_eval_with(
    s: &Su2,
    d: &SlicedDiagram,
    coloring: &[u32],
    conv: Conventions,
) -> CycNum {
    &color_weight(s, coloring, s.params.iota) * &link_invariant_with(s, d, coloring, conv)
}

/// All colorings `0..=L` of `p` components, lexicographic.
pub fn colorings(l: u32, p: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..p {
        out = out
            .into_iter()
            .flat_map(|c| (0..=l).map(move |x| [c.clone(), vec![x]].concat()))
            .collect();
    }
    out
}

/// Sum of colored evaluations over all colorings.
pub fn link_sum(s: &Su2, d: &SlicedDiagram, conv: Conventions) -> CycNum {
    colorings(s.l, d.components)
        .par_iter()
        .map(|c| colored_eval_with(s, d, c, conv))
        .reduce(|| s.zero(), |a, b| &a + &b)
}

/// Validates the state-sum parameter constraints.
pub fn check_params(p: &ModelParams) -> Result<()> {
    if p.n != 2 {
        return Err(Error::Params("state sums need N = 2".into()));
    }
    if p.l % 2 == 1 && p.eps != 1 {
        return Err(Error::Params("eps = 1 is required when L is odd".into()));
    }
    if !p.det_relation_holds() {
        return Err(Error::Params("zeta^2 = eps t does not hold".into()));
    }
    Ok(())
}

/// `Delta^2 = sum_i [i+1]^2` and `D = sum_i iota^i zeta^{-i(i+2)} [i+1]^2`.
pub fn normalization_constants(s: &Su2) -> (CycNum, CycNum) {
    let mut d2 = s.zero();
    let mut g = s.zero();
    for i in 0..=s.l {
        let q = s.qi(i as i64 + 1);
        let q2 = &q * &q;
        d2 += &q2;
        g += &(&s.theta(i, s.params.iota).inv().unwrap() * &q2);
    }
    (d2, g)
}

/// The result of one invariant evaluation.
#[derive(Clone, Debug)]
pub struct TauValue {
    pub value: QuadNum,
    pub sigma: i64,
    pub components: usize,
    pub delta_sq: CycNum,
    pub gauss: CycNum,
    pub link_sum: CycNum,
}

pub fn tau(d: &SlicedDiagram, params: &ModelParams) -> Result<TauValue> {
    tau_with(d, &Su2::new(params.clone())?, CONVENTIONS, NORMALIZATION)
}

pub const NORMALIZATION: Normalization = Normalization::Swapped;

pub fn tau_with(
    d: &SlicedDiagram,
    s: &Su2,
    conv: Conventions,
    norm: Normalization,
) -> Result<TauValue> {
    check_params(&s.params)?;
    let (d2, g) = normalization_constants(s);
    if g.is_zero() {
        return Err(Error::Params("the Gauss sum D vanishes".into()));
    }
    let lk = linking(d);
    let p = d.components as i64;
    let sig = lk.signature;
    let sum = link_sum(s, d, conv);
    let (delta_exp, gauss_exp) = match norm {
        Normalization::Literal => (sig, -sig - p - 1),
        Normalization::Swapped => (-sig - p - 1, sig),
    };
    let v = QuadNum::delta_pow(delta_exp, &d2)?
        .scale(&g.pow(gauss_exp)?)
        .scale(&sum);
    Ok(TauValue {
        value: v,
        sigma: sig,
        components: d.components,
        delta_sq: d2,
        gauss: g,
        link_sum: sum,
    })
}

pub const UNKNOT: &str = "cap 0\ncup 0\n";
pub const UNKNOT_PLUS: &str = "cap 0\ncap 2\nx+ 1\ncup 2\ncup 0\n";
pub const UNKNOT_MINUS: &str = "cap 0\ncap 2\nx- 1\ncup 2\ncup 0\n";
pub const HOPF: &str = "cap 0\ncap 2\nx+ 1\nx+ 1\ncup 0\ncup 0\n";
pub const TREFOIL: &str = "cap 0\ncap 2\nx+ 1\nx+ 1\nx+ 1\ncup 2\ncup 0\n";

/// Pairs of diagrams related by a planar isotopy or Reidemeister II/III move.
pub fn move_battery() -> Vec<(&'static str, String, String)> {
    let three = |mid: &str| format!("cap 0\ncap 2\ncap 4\n{mid}cup 4\ncup 2\ncup 0\n");
    vec![
        (
            "zigzag-right",
            UNKNOT.into(),
            "cap 0\ncap 2\ncup 1\ncup 0\n".into(),
        ),
        (
            "zigzag-left",
            UNKNOT.into(),
            "cap 0\ncap 0\ncup 1\ncup 0\n".into(),
        ),
        (
            "zigzag-hopf",
            HOPF.into(),
            "cap 0\ncap 2\nx+ 1\nx+ 1\ncap 2\ncup 1\ncup 0\ncup 0\n".into(),
        ),
        (
            "r2",
            "cap 0\ncap 2\ncup 2\ncup 0\n".into(),
            "cap 0\ncap 2\nx+ 1\nx- 1\ncup 2\ncup 0\n".into(),
        ),
        (
            "r2-reversed",
            "cap 0\ncap 2\ncup 2\ncup 0\n".into(),
            "cap 0\ncap 2\nx- 1\nx+ 1\ncup 2\ncup 0\n".into(),
        ),
        (
            "r3",
            three("x+ 1\nx+ 2\nx+ 1\n"),
            three("x+ 2\nx+ 1\nx+ 2\n"),
        ),
        (
            "r3-negative",
            three("x- 1\nx- 2\nx- 1\n"),
            three("x- 2\nx- 1\nx- 2\n"),
        ),
        (
            "r3-mixed",
            three("x+ 1\nx+ 2\nx- 1\n"),
            three("x- 2\nx+ 1\nx+ 2\n"),
        ),
        (
            "distant-crossings",
            three("x+ 0\nx- 3\n"),
            three("x- 3\nx+ 0\n"),
        ),
        (
            "distant-cap",
            "cap 0\ncap 2\nx+ 1\ncap 4\nx- 3\ncup 4\ncup 2\ncup 0\n".into(),
            "cap 0\ncap 2\ncap 4\nx+ 1\nx- 3\ncup 4\ncup 2\ncup 0\n".into(),
        ),
        (
            "distant-cup",
            "cap 0\ncap 2\ncap 4\nx+ 3\ncup 0\nx- 1\ncup 2\ncup 0\n".into(),
            "cap 0\ncap 2\ncap 4\nx+ 3\nx- 3\ncup 0\ncup 2\ncup 0\n".into(),
        ),
    ]
}

fn disjoint(a: &str, b: &str) -> SlicedDiagram {
    parse_diagram(&format!("{a}{b}")).expect("battery diagram")
}

/// Invariance suite for one parameter set: surgery presentations of the
/// 3-sphere, Kirby stabilization, slide moves, framing twists, mirror image
/// and the Hopf table.
pub fn check_invariance(params: &ModelParams) -> Report {
    let mut rep = Report::new("statesum-invariance");
    let mut pre = Check::new("params", "N = 2, eps = 1 for odd L, zeta^2 = eps t");
    if let Err(e) = check_params(params) {
        pre.fail(e.to_string());
        rep.push(pre);
        return rep;
    }
    pre.record(true, String::new);
    rep.push(pre);
    let s = match Su2::new(params.clone()) {
        Ok(s) => s,
        Err(e) => {
            let mut c = Check::new("tables", "SU(2) braiding tables");
            c.fail(e.to_string());
            rep.push(c);
            return rep;
        }
    };
    let t = |d: &SlicedDiagram| tau_with(d, &s, CONVENTIONS, NORMALIZATION).map(|v| v.value);
    let p = |x: &str| parse_diagram(x).expect("battery diagram");
    let empty = p("");

    let mut c = Check::new("s3", "tau(empty) = tau(Hopf 0,0) = tau(unknot +-1)");
    match t(&empty) {
        Ok(e) => {
            for (name, d) in [
                ("hopf", HOPF),
                ("unknot+1", UNKNOT_PLUS),
                ("unknot-1", UNKNOT_MINUS),
            ] {
                let v = t(&p(d));
                c.record(v.as_ref().ok() == Some(&e), || {
                    format!("{name}: {v:?} vs {e:?}")
                });
            }
        }
        Err(err) => c.fail(err.to_string()),
    }
    rep.push(c);

    let mut c = Check::new("kirby", "tau(D + unknot +-1) = tau(D)");
    for (name, d) in [
        ("empty", ""),
        ("unknot", UNKNOT),
        ("trefoil", TREFOIL),
        ("hopf", HOPF),
    ] {
        let base = t(&p(d));
        for u in [UNKNOT_PLUS, UNKNOT_MINUS] {
            let v = t(&disjoint(d, u));
            c.record(
                base.is_ok() && v.as_ref().ok() == base.as_ref().ok(),
                || format!("{name}: {v:?} vs {base:?}"),
            );
        }
    }
    rep.push(c);

    let mut c = Check::new(
        "slide-moves",
        "colored evaluation invariant under sliced moves",
    );
    for (name, a, b) in move_battery() {
        let (da, db) = (p(&a), p(&b));
        if da.components != db.components {
            c.fail(format!("{name}: component counts differ"));
            continue;
        }
        for col in colorings(s.l, da.components) {
            let (x, y) = (colored_eval(&s, &da, &col), colored_eval(&s, &db, &col));
            c.record(x == y, || format!("{name} {col:?}"));
        }
    }
    rep.push(c);

    let mut c = Check::new(
        "framing",
        "a +-1 curl scales the colored unknot by theta_c^{+-1}",
    );
    let (u0, up, un) = (p(UNKNOT), p(UNKNOT_PLUS), p(UNKNOT_MINUS));
    for col in 0..=s.l {
        let base = colored_eval(&s, &u0, &[col]);
        let th = s.theta(col, params.iota);
        c.record(colored_eval(&s, &up, &[col]) == &base * &th, || {
            format!("+1 color {col}")
        });
        c.record(
            colored_eval(&s, &un, &[col]) == &base * &th.inv().unwrap(),
            || format!("-1 color {col}"),
        );
    }
    rep.push(c);

    let mut c = Check::new("mirror", "tau(mirror D) = conj tau(D)");
    for (name, d) in [
        ("unknot+1", UNKNOT_PLUS),
        ("trefoil", TREFOIL),
        ("hopf", HOPF),
    ] {
        let d = p(d);
        let (a, b) = (t(&d.mirror()), t(&d));
        c.record(matches!((&a, &b), (Ok(x), Ok(y)) if *x == y.conj()), || {
            name.to_string()
        });
    }
    rep.push(c);

    let mut c = Check::new(
        "hopf-s",
        "Hopf link table = lambda S, lambda independent of colors",
    );
    match crate::fusion::kac_peterson(params, crate::fusion::effective_iota(params)) {
        Ok(kp) => {
            let hopf = p(HOPF);
            let h = |a: u32, b: u32| link_invariant(&s, &hopf, &[a, b]);
            let lambda = h(0, 0).div(kp.get(0, 0)).unwrap();
            for a in 0..=s.l {
                for b in 0..=s.l {
                    c.record(h(a, b) == &lambda * kp.get(a as usize, b as usize), || {
                        format!("({a},{b})")
                    });
                }
            }
        }
        Err(e) => c.fail(e.to_string()),
    }
    rep.push(c);
    rep
}

/// All admissible parameter sets with N = 2 and the given L.
pub fn admissible_params(l: u32) -> Vec<ModelParams> {
    let m = 4 * (l as i64 + 2);
    let mut out = Vec::new();
    for eps in [1i8, -1] {
        for iota in [1i8, -1] {
            for kz in 0..m {
                if let Ok(p) = ModelParams::from_zeta(2, l, eps, iota, kz) {
                    if check_params(&p).is_ok() {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Closure of a braid word on `n` strands; generator `i` crosses braid
/// strands `i` and `i + 1`.
pub fn braid_closure(n: usize, word: &[(usize, bool)]) -> String {
    let mut t = String::new();
    for i in 0..n {
        t += &format!("cap {i}\n");
    }
    for &(i, pos) in word {
        t += &format!("{} {}\n", if pos { "x+" } else { "x-" }, n + i);
    }
    for i in (0..n).rev() {
        t += &format!("cup {i}\n");
    }
    t
}

/// Random 3-braid closures: stabilization and an inserted RII pair leave
/// tau unchanged.
pub fn check_sampled_closures(params: &ModelParams, seed: u64, count: usize) -> Check {
    use rand::{Rng, SeedableRng};
    let mut c = Check::new(
        "sampled-closures",
        "tau(D) = tau(D + unknot+-1) = tau(D with an RII pair), random braid closures",
    );
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let len = rng.gen_range(0..5);
        let word: Vec<(usize, bool)> = (0..len).map(|_| (rng.gen_range(0..2), rng.gen())).collect();
        let text = braid_closure(3, &word);
        let at = rng.gen_range(0..2);
        let r2 = text.replacen(
            "cup 2\n",
            &format!("x+ {}\nx- {}\ncup 2\n", 3 + at, 3 + at),
            1,
        );
        let plus = rng.gen::<bool>();
        let stab = format!("{text}{}", if plus { UNKNOT_PLUS } else { UNKNOT_MINUS });
        let v = |t: &str| {
            parse_diagram(t)
                .and_then(|d| tau(&d, params))
                .map(|x| x.value)
        };
        let base = v(&text);
        let ok =
            base.is_ok() && v(&r2).ok() == base.clone().ok() && v(&stab).ok() == base.clone().ok();
        c.record(ok, || format!("word {word:?}"));
    }
    c
}
