//! Exact arithmetic in cyclotomic fields `Q(z)`, `z = exp(2 pi i / M)`,
//! a quadratic extension by one square root, and quantum integers.
//!
//! Elements are stored as `num / den` with `num` a vector of `phi(M)`
//! integers, reduced modulo the cyclotomic polynomial, so equality of
//! values is equality of representations.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest order accepted when promoting two operands to a common field.
pub const MAX_ORDER: u32 = 1 << 14;

/// Precomputed data for `Q(z_M)`.
#[derive(Debug)]
pub struct Field {
    m: u32,
    phi: usize,
    cyclo: Vec<i64>,
    /// `pow[k]` = coefficients of `x^k mod Phi_M`, `0 <= k < M`.
    pow: Vec<Vec<i64>>,
}

impl Field {
    pub fn order(&self) -> u32 {
        self.m
    }
    pub fn degree(&self) -> usize {
        self.phi
    }
    /// Coefficients of `Phi_M`, constant term first.
    pub fn cyclotomic_poly(&self) -> &[i64] {
        &self.cyclo
    }
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dn = den.len() - 1;
    let lead = den[dn];
    let mut q = vec![0i64; r.len() - dn];
    for k in (0..q.len()).rev() {
        let c = r[k + dn] / lead;
        q[k] = c;
        for (j, d) in den.iter().enumerate() {
            r[k + j] -= c * d;
        }
    }
    debug_assert!(r.iter().all(|x| *x == 0));
    q
}

fn cyclotomic(m: u32, memo: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&m) {
        return p.clone();
    }
    let mut p = vec![0i64; m as usize + 1];
    p[0] = -1;
    p[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            let c = cyclotomic(d, memo);
            p = poly_div_exact(&p, &c);
        }
    }
    memo.insert(m, p.clone());
    p
}

fn build_field(m: u32) -> Field {
    let mut memo = HashMap::new();
    let cyclo = cyclotomic(m, &mut memo);
    let phi = cyclo.len() - 1;
    let mut pow = Vec::with_capacity(m as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..m {
        pow.push(cur.clone());
        let top = cur[phi - 1];
        let mut next = vec![0i64; phi];
        for t in (1..phi).rev() {
            next[t] = cur[t - 1];
        }
        if top != 0 {
            for t in 0..phi {
                next[t] = next[t]
                    .checked_sub(top.checked_mul(cyclo[t]).expect("overflow"))
                    .expect("overflow");
            }
        }
        cur = next;
    }
    Field { m, phi, cyclo, pow }
}

/// Shared field data for order `m`.
pub fn field(m: u32) -> Arc<Field> {
    assert!(m >= 1, "cyclotomic order must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut g = cache.lock().unwrap();
    g.entry(m)
        .or_insert_with(|| Arc::new(build_field(m)))
        .clone()
}

/// An element of `Q(z_M)`.
#[derive(Clone)]
pub struct CycNum {
    f: Arc<Field>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for CycNum {
    fn eq(&self, o: &Self) -> bool {
        self.f.m == o.f.m && self.den == o.den && self.num == o.num
    }
}
impl Eq for CycNum {}

impl std::hash::Hash for CycNum {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.f.m.hash(h);
        self.num.hash(h);
        self.den.hash(h);
    }
}

const SMALL: i64 = 1 << 40;

fn small(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| x.to_i64().filter(|y| y.abs() < SMALL))
        .collect()
}

impl CycNum {
    fn from_parts(f: Arc<Field>, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut x = CycNum { f, num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in self.num.iter_mut() {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den = &self.den / &g;
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
        }
    }

    pub fn zero(m: u32) -> Self {
        let f = field(m);
        let phi = f.phi;
        CycNum {
            f,
            num: vec![BigInt::zero(); phi],
            den: BigInt::one(),
        }
    }

    pub fn one(m: u32) -> Self {
        Self::from_int(m, 1)
    }

    pub fn from_int(m: u32, n: i64) -> Self {
        let mut x = Self::zero(m);
        x.num[0] = BigInt::from(n);
        x
    }

    pub fn from_rational(m: u32, q: &BigRational) -> Self {
        let mut x = Self::zero(m);
        x.num[0] = q.numer().clone();
        x.den = q.denom().clone();
        x.normalize();
        x
    }

    /// `z_M^k`; exponents reduce mod `M`.
    pub fn root(m: u32, k: i64) -> Self {
        let f = field(m);
        let e = k.rem_euclid(m as i64) as usize;
        let num = f.pow[e].iter().map(|&c| BigInt::from(c)).collect();
        CycNum {
            f,
            num,
            den: BigInt::one(),
        }
    }

    /// Build from coefficients of `z^0 .. z^(len-1)`; any length, reduced mod `Phi_M`.
    pub fn from_coeffs(m: u32, coeffs: &[BigRational]) -> Self {
        let mut acc = Self::zero(m);
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(&Self::root(m, k as i64) * &Self::from_rational(m, c));
            }
        }
        acc
    }

    /// Sum of `c_k z^(e_k)` with integer coefficients, reduced once.
    pub fn from_exponent_sum(m: u32, terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let f = field(m);
        let mut bucket = vec![0i64; m as usize];
        for (e, c) in terms {
            let k = e.rem_euclid(m as i64) as usize;
            bucket[k] += c;
        }
        let mut acc = vec![0i64; f.phi];
        for (k, c) in bucket.iter().enumerate() {
            if *c != 0 {
                for (a, p) in acc.iter_mut().zip(&f.pow[k]) {
                    *a += c * p;
                }
            }
        }
        let num = acc.into_iter().map(BigInt::from).collect();
        CycNum::from_parts(f, num, BigInt::one())
    }

    pub fn order(&self) -> u32 {
        self.f.m
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.f
    }

    /// Coefficients in lowest terms, constant term first.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational if it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(|c| c.is_zero()) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn check(&self, o: &Self) {
        assert_eq!(
            self.f.m, o.f.m,
            "cyclotomic order mismatch; use checked_* or promote"
        );
    }

    fn add_impl(&self, o: &Self, sign: i32) -> Self {
        self.check(o);
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if sign > 0 { o.clone() } else { -o };
        }
        let (num, den) = if self.den == o.den {
            let num = self
                .num
                .iter()
                .zip(&o.num)
                .map(|(a, b)| if sign > 0 { a + b } else { a - b })
                .collect();
            (num, self.den.clone())
        } else {
            let num = self
                .num
                .iter()
                .zip(&o.num)
                .map(|(a, b)| {
                    let x = a * &o.den;
                    let y = b * &self.den;
                    if sign > 0 {
                        x + y
                    } else {
                        x - y
                    }
                })
                .collect();
            (num, &self.den * &o.den)
        };
        CycNum::from_parts(self.f.clone(), num, den)
    }

    fn mul_impl(&self, o: &Self) -> Self {
        self.check(o);
        if self.is_zero() || o.is_zero() {
            return CycNum::zero(self.f.m);
        }
        let phi = self.f.phi;
        let m = self.f.m as usize;
        let den = &self.den * &o.den;
        if let (Some(a), Some(b)) = (small(&self.num), small(&o.num)) {
            let mut acc = vec![0i128; 2 * phi - 1];
            for (i, x) in a.iter().enumerate() {
                if *x == 0 {
                    continue;
                }
                for (j, y) in b.iter().enumerate() {
                    acc[i + j] += *x as i128 * *y as i128;
                }
            }
            for k in (phi..2 * phi - 1).rev() {
                let c = acc[k];
                if c != 0 {
                    for (t, p) in self.f.pow[k % m].iter().enumerate() {
                        acc[t] += c * *p as i128;
                    }
                }
            }
            let num = acc[..phi].iter().map(|&c| BigInt::from(c)).collect();
            return CycNum::from_parts(self.f.clone(), num, den);
        }
        let mut acc = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.num.iter().enumerate() {
                if !y.is_zero() {
                    acc[i + j] += x * y;
                }
            }
        }
        for k in (phi..2 * phi - 1).rev() {
            let c = std::mem::take(&mut acc[k]);
            if !c.is_zero() {
                for (t, p) in self.f.pow[k % m].iter().enumerate() {
                    if *p != 0 {
                        acc[t] += &c * *p;
                    }
                }
            }
        }
        acc.truncate(phi);
        CycNum::from_parts(self.f.clone(), acc, den)
    }

    /// Multiply by an integer.
    pub fn scale(&self, k: i64) -> Self {
        let num = self.num.iter().map(|c| c * k).collect();
        CycNum::from_parts(self.f.clone(), num, self.den.clone())
    }

    /// Multiply by a rational.
    pub fn scale_q(&self, q: &BigRational) -> Self {
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        CycNum::from_parts(self.f.clone(), num, &self.den * q.denom())
    }

    /// Multiplication by `z^k`: a coefficient permutation up to reduction.
    pub fn mul_root(&self, k: i64) -> Self {
        self.mul_impl(&CycNum::root(self.f.m, k))
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let phi = self.f.phi;
        if self.num[1..].iter().all(|c| c.is_zero()) {
            let mut x = CycNum::zero(self.f.m);
            x.num[0] = self.den.clone();
            x.den = self.num[0].clone();
            x.normalize();
            return Ok(x);
        }
        // Columns of the multiplication matrix are num * x^j mod Phi.
        let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(phi);
        let mut cur = self.num.clone();
        for _ in 0..phi {
            cols.push(cur.clone());
            let top = cur[phi - 1].clone();
            let mut next = vec![BigInt::zero(); phi];
            for t in (1..phi).rev() {
                next[t] = cur[t - 1].clone();
            }
            if !top.is_zero() {
                for (t, c) in self.f.cyclo[..phi].iter().enumerate() {
                    if *c != 0 {
                        next[t] -= &top * *c;
                    }
                }
            }
            cur = next;
        }
        let mut a: Vec<Vec<BigInt>> = (0..phi)
            .map(|i| (0..phi).map(|j| cols[j][i].clone()).collect())
            .collect();
        let mut rhs = vec![BigInt::zero(); phi];
        rhs[0] = BigInt::one();
        let (y, det) = bareiss_solve(&mut a, &mut rhs).ok_or(Error::ZeroInverse)?;
        let num = y.into_iter().map(|v| v * &self.den).collect();
        Ok(CycNum::from_parts(self.f.clone(), num, det))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul_impl(&o.inv()?))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = CycNum::one(self.f.m);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_impl(&base);
            }
        }
        Ok(acc)
    }

    /// Galois automorphism `z -> z^k`, `gcd(k, M) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let m = self.f.m as i64;
        assert_eq!(k.rem_euclid(m).gcd(&m), 1, "not a Galois exponent");
        let phi = self.f.phi;
        let mut acc = vec![BigInt::zero(); phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (j as i64 * k).rem_euclid(m) as usize;
            for (t, p) in self.f.pow[e].iter().enumerate() {
                if *p != 0 {
                    acc[t] += c * *p;
                }
            }
        }
        CycNum::from_parts(self.f.clone(), acc, self.den.clone())
    }

    /// Complex conjugation `z -> z^-1`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Re-express in `Q(z_M')`, `M | M'`.
    pub fn promote(&self, m2: u32) -> Result<Self> {
        let m = self.f.m;
        if !m2.is_multiple_of(m) {
            return Err(Error::OrderMismatch(m, m2));
        }
        let r = (m2 / m) as i64;
        let f2 = field(m2);
        let mut acc = vec![BigInt::zero(); f2.phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (j as i64 * r) as usize % m2 as usize;
            for (t, p) in f2.pow[e].iter().enumerate() {
                if *p != 0 {
                    acc[t] += c * *p;
                }
            }
        }
        Ok(CycNum::from_parts(f2, acc, self.den.clone()))
    }

    /// Bring two operands to a common order not exceeding [`MAX_ORDER`].
    pub fn unify(a: &Self, b: &Self) -> Result<(Self, Self)> {
        let (m1, m2) = (a.order(), b.order());
        if m1 == m2 {
            return Ok((a.clone(), b.clone()));
        }
        let l = m1.lcm(&m2);
        if l > MAX_ORDER {
            return Err(Error::OrderMismatch(m1, m2));
        }
        Ok((a.promote(l)?, b.promote(l)?))
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        let (a, b) = Self::unify(self, o)?;
        Ok(&a + &b)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        let (a, b) = Self::unify(self, o)?;
        Ok(&a * &b)
    }

    /// Float embedding under `z -> exp(2 pi i / M)`.
    pub fn to_complex(&self) -> Complex64 {
        let m = self.f.m as f64;
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut s = Complex64::new(0.0, 0.0);
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let a = c.to_f64().unwrap_or(f64::NAN) / den;
            s += Complex64::from_polar(a, 2.0 * std::f64::consts::PI * j as f64 / m);
        }
        s
    }

    /// Polynomial in `z` only, without the float part.
    pub fn poly_string(&self) -> String {
        let mut out = String::new();
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = BigRational::new(c.clone(), self.den.clone());
            let neg = q.is_negative();
            let a = q.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match j {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{j}"),
            };
            if j == 0 {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

pub fn format_complex(c: Complex64) -> String {
    let re = if c.re.abs() < 5e-13 { 0.0 } else { c.re };
    let im = if c.im.abs() < 5e-13 { 0.0 } else { c.im };
    if im >= 0.0 {
        format!("{re:.12}+{im:.12}i")
    } else {
        format!("{re:.12}-{:.12}i", -im)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (z = exp(2*pi*i/{})) ~ {}",
            self.poly_string(),
            self.f.m,
            format_complex(self.to_complex())
        )
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[M={}]({})", self.f.m, self.poly_string())
    }
}

/// Fraction-free elimination for `A y = b`; returns `(y * det, det)`.
fn bareiss_solve(a: &mut [Vec<BigInt>], b: &mut [BigInt]) -> Option<(Vec<BigInt>, BigInt)> {
    let n = a.len();
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    for k in 0..n {
        let piv = (k..n).find(|&r| !a[r][k].is_zero())?;
        if piv != k {
            a.swap(piv, k);
            b.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            b[i] = (&b[i] * &a[k][k] - &a[i][k] * &b[k]) / &prev;
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    let mut y = vec![BigInt::zero(); n];
    for i in (0..n).rev() {
        let mut s = &b[i] * &det;
        for j in i + 1..n {
            s -= &a[i][j] * &y[j];
        }
        y[i] = s / &a[i][i];
    }
    let _ = sign;
    Some((y, det))
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, o: &CycNum) -> CycNum {
        self.add_impl(o, 1)
    }
}
impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, o: &CycNum) -> CycNum {
        self.add_impl(o, -1)
    }
}
impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, o: &CycNum) -> CycNum {
        self.mul_impl(o)
    }
}
impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        let num = self.num.iter().map(|c| -c).collect();
        CycNum {
            f: self.f.clone(),
            num,
            den: self.den.clone(),
        }
    }
}
impl Add for CycNum {
    type Output = CycNum;
    fn add(self, o: CycNum) -> CycNum {
        self.add_impl(&o, 1)
    }
}
impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, o: CycNum) -> CycNum {
        self.add_impl(&o, -1)
    }
}
impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, o: CycNum) -> CycNum {
        self.mul_impl(&o)
    }
}
impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}
impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, o: &CycNum) {
        *self = self.add_impl(o, 1);
    }
}

/// Quantum integer `[n] = (t^n - t^-n)/(t - t^-1)`.
pub fn qint(n: i64, t: &CycNum) -> Result<CycNum> {
    let ti = t.inv()?;
    if *t == ti {
        return Err(Error::DegenerateT);
    }
    let m = t.order();
    if n == 0 {
        return Ok(CycNum::zero(m));
    }
    let k = n.abs();
    // t^(k-1) + t^(k-3) + ... + t^-(k-1)
    let t2 = t * t;
    let mut term = ti.pow(k - 1)?;
    let mut acc = CycNum::zero(m);
    for _ in 0..k {
        acc = &acc + &term;
        term = &term * &t2;
    }
    Ok(if n < 0 { -acc } else { acc })
}

/// `[n]! = [n][n-1]...[1]`, `[0]! = 1`.
pub fn qfact(n: i64, t: &CycNum) -> Result<CycNum> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    let mut acc = CycNum::one(t.order());
    for k in 1..=n {
        acc = &acc * &qint(k, t)?;
    }
    Ok(acc)
}

/// `a + b Delta` with `Delta^2 = radicand`.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadNum {
    pub a: CycNum,
    pub b: CycNum,
    pub radicand: CycNum,
}

impl QuadNum {
    pub fn new(a: CycNum, b: CycNum, radicand: CycNum) -> Self {
        QuadNum { a, b, radicand }
    }

    pub fn from_base(a: CycNum, radicand: &CycNum) -> Self {
        let z = CycNum::zero(a.order());
        QuadNum {
            a,
            b: z,
            radicand: radicand.clone(),
        }
    }

    /// `Delta^k`.
    pub fn delta_pow(k: i64, radicand: &CycNum) -> Result<Self> {
        let m = radicand.order();
        let half = k.div_euclid(2);
        let r = radicand.pow(half)?;
        Ok(if k.rem_euclid(2) == 0 {
            QuadNum {
                a: r,
                b: CycNum::zero(m),
                radicand: radicand.clone(),
            }
        } else {
            QuadNum {
                a: CycNum::zero(m),
                b: r,
                radicand: radicand.clone(),
            }
        })
    }

    pub fn add(&self, o: &Self) -> Self {
        QuadNum {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            radicand: self.radicand.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let a = &(&self.a * &o.a) + &(&(&self.b * &o.b) * &self.radicand);
        let b = &(&self.a * &o.b) + &(&self.b * &o.a);
        QuadNum {
            a,
            b,
            radicand: self.radicand.clone(),
        }
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        QuadNum {
            a: &self.a * c,
            b: &self.b * c,
            radicand: self.radicand.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        let n = &(&self.a * &self.a) - &(&(&self.b * &self.b) * &self.radicand);
        let ni = n.inv()?;
        Ok(QuadNum {
            a: &self.a * &ni,
            b: -&(&self.b * &ni),
            radicand: self.radicand.clone(),
        })
    }

    /// Complex conjugate, for a real positive radicand.
    pub fn conj(&self) -> Self {
        QuadNum {
            a: self.a.conj(),
            b: self.b.conj(),
            radicand: self.radicand.clone(),
        }
    }

    /// Float value using the principal square root of the radicand.
    pub fn to_complex(&self) -> Complex64 {
        let d = self.radicand.to_complex().sqrt();
        self.a.to_complex() + self.b.to_complex() * d
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) + ({})*Delta ~ {}",
            self.a.poly_string(),
            self.b.poly_string(),
            format_complex(self.to_complex())
        )
    }
}

impl fmt::Debug for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quad({:?} + {:?} D)", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_basic() {
        assert!(CycNum::root(4, 0).is_one());
        assert_eq!(CycNum::root(4, 2), CycNum::from_int(4, -1));
        assert!((&CycNum::root(8, 1) * &CycNum::root(8, 7)).is_one());
        assert_eq!(CycNum::root(8, 1).inv().unwrap(), CycNum::root(8, 7));
        assert_eq!(CycNum::root(12, -5), CycNum::root(12, 7));
    }

    #[test]
    fn cyclotomic_vanishes() {
        for m in 1..=240u32 {
            let f = field(m);
            let z = CycNum::root(m, 1);
            let mut acc = CycNum::zero(m);
            let mut p = CycNum::one(m);
            for c in f.cyclotomic_poly() {
                acc = &acc + &p.scale(*c);
                p = &p * &z;
            }
            assert!(acc.is_zero(), "Phi_{m}(z) != 0");
            assert_eq!(f.degree(), (1..=m).filter(|k| k.gcd(&m) == 1).count());
        }
    }

    #[test]
    fn qint_values() {
        let t = CycNum::root(8, 1);
        assert!(qint(0, &t).unwrap().is_zero());
        assert!(qint(1, &t).unwrap().is_one());
        assert!(qint(4, &t).unwrap().is_zero());
        assert_eq!(qint(-3, &t).unwrap(), -qint(3, &t).unwrap());
        let v = qint(2, &t).unwrap().to_complex();
        assert!((v.re - 2f64.sqrt()).abs() < 1e-12 && v.im.abs() < 1e-12);
        assert_eq!(qint(2, &CycNum::one(8)), Err(Error::DegenerateT));
        assert_eq!(qint(2, &CycNum::from_int(8, -1)), Err(Error::DegenerateT));
    }

    #[test]
    fn qfact_values() {
        let t = CycNum::root(10, 1);
        assert!(qfact(0, &t).unwrap().is_one());
        assert!(qfact(1, &t).unwrap().is_one());
        let direct = &qint(3, &t).unwrap() * &qint(2, &t).unwrap();
        assert_eq!(qfact(3, &t).unwrap(), direct);
        assert_eq!(qfact(-1, &t), Err(Error::NegativeFactorial(-1)));
    }

    #[test]
    fn quad_delta_squared() {
        let r = CycNum::from_int(8, 3);
        let d = QuadNum::delta_pow(1, &r).unwrap();
        let d2 = d.mul(&d);
        assert_eq!(d2.a, r);
        assert!(d2.b.is_zero());
        let di = d.inv().unwrap();
        let one = d.mul(&di);
        assert!(one.a.is_one() && one.b.is_zero());
        assert_eq!(QuadNum::delta_pow(-1, &r).unwrap(), di);
    }

    #[test]
    fn promote_and_unify() {
        let a = CycNum::root(4, 1);
        let b = CycNum::root(6, 1);
        let s = a.checked_mul(&b).unwrap();
        assert_eq!(s, CycNum::root(12, 3 + 2));
        assert!(CycNum::root(MAX_ORDER, 1)
            .checked_add(&CycNum::root(3, 1))
            .is_err());
    }

    #[test]
    fn display_has_poly_and_float() {
        let s = format!("{}", CycNum::root(4, 1));
        assert!(s.starts_with("z (z = exp(2*pi*i/4))"), "{s}");
        assert!(s.contains("1.000000000000i"), "{s}");
    }
}
