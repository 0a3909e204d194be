//! Permutations, Bruhat order and Kazhdan–Lusztig polynomials.

use std::cell::RefCell;
use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank handled by the packed kernel.
pub const MAX_RANK: usize = 16;

/// A permutation of `[1, m]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &v in &images {
            let v = v as usize;
            if v == 0 || v > m || seen[v] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[v] = true;
        }
        if m > MAX_RANK {
            return Err(Error::OutOfRange(format!("rank {m} exceeds {MAX_RANK}")));
        }
        Ok(Permutation(images))
    }

    /// Parses one-line digits such as `"31245"` (ranks up to 9).
    pub fn parse(s: &str) -> Result<Self> {
        let images = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::InvalidPermutation(Vec::new()))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }

    pub fn identity(m: usize) -> Self {
        Permutation((1..=m as u8).collect())
    }

    /// The longest element `w₀`.
    pub fn longest(m: usize) -> Self {
        Permutation((1..=m as u8).rev().collect())
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `x(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&y| y < v[i]).count())
            .sum()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        same_rank(self, other)?;
        Ok(Permutation(other.0.iter().map(|&i| self.0[i as usize - 1]).collect()))
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_321_avoiding(&self) -> bool {
        let v = &self.0;
        (0..v.len()).all(|j| {
            let left = v[..j].iter().any(|&x| x > v[j]);
            let right = v[j + 1..].iter().any(|&x| x < v[j]);
            !(left && right)
        })
    }

    fn code(&self) -> Code {
        encode(&self.0.iter().map(|v| v - 1).collect::<Vec<_>>())
    }
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<u8>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<u8> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() > 9 { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
        write!(f, "{}", parts.join(sep))
    }
}

fn same_rank(x: &Permutation, y: &Permutation) -> Result<()> {
    if x.rank() != y.rank() {
        return Err(Error::SizeMismatch(x.rank(), y.rank()));
    }
    Ok(())
}

/// Bruhat order by the tableau criterion.
pub fn bruhat_leq(x: &Permutation, y: &Permutation) -> Result<bool> {
    same_rank(x, y)?;
    let xs: Vec<u8> = x.0.iter().map(|v| v - 1).collect();
    let ys: Vec<u8> = y.0.iter().map(|v| v - 1).collect();
    Ok(leq_arr(&xs, &ys))
}

/// Every permutation in the lower Bruhat interval of `w` for which
/// `allowed(position, value)` holds at each position (both 1-based).
pub fn lower_interval_filtered<F>(w: &Permutation, allowed: F) -> Vec<Permutation>
where
    F: Fn(usize, usize) -> bool,
{
    let m = w.rank();
    let wa: Vec<u8> = w.0.iter().map(|v| v - 1).collect();
    let mut out = Vec::new();
    let mut walk = BelowWalk::new(&wa, 0, 0);
    walk.run(
        &mut |x| out.push(Permutation(x.iter().map(|v| v + 1).collect())),
        &|p, v| allowed(p + 1, v as usize + 1),
    );
    debug_assert!(out.iter().all(|x| x.rank() == m));
    out
}

pub fn lower_interval(w: &Permutation) -> Vec<Permutation> {
    lower_interval_filtered(w, |_, _| true)
}

/// The longest `x'` with `m_{x'}(λ, μ) = m_x(λ, μ)`, found by walking the
/// fiber: swapping positions with equal `λ` or values with equal `μ`
/// preserves `Σ [λ_i, μ_{x(i)}]`.
pub fn longest_coset_representative(x: &Permutation, lambda: &[i64], mu: &[i64]) -> Result<Permutation> {
    let m = x.rank();
    if lambda.len() != m || mu.len() != m {
        return Err(Error::SizeMismatch(lambda.len().max(mu.len()), m));
    }
    let mut seen: FxHashSet<Permutation> = FxHashSet::default();
    let mut queue = VecDeque::from([x.clone()]);
    seen.insert(x.clone());
    let mut best = x.clone();
    let mut best_len = x.length();
    while let Some(y) = queue.pop_front() {
        for i in 0..m {
            for j in i + 1..m {
                let mut next = Vec::new();
                if lambda[i] == lambda[j] {
                    let mut z = y.0.clone();
                    z.swap(i, j);
                    next.push(z);
                }
                if mu[i] == mu[j] {
                    let (a, b) = (i as u8 + 1, j as u8 + 1);
                    next.push(
                        y.0.iter()
                            .map(|&v| {
                                if v == a {
                                    b
                                } else if v == b {
                                    a
                                } else {
                                    v
                                }
                            })
                            .collect(),
                    );
                }
                for z in next {
                    let z = Permutation(z);
                    if seen.insert(z.clone()) {
                        let len = z.length();
                        if len > best_len || (len == best_len && z > best) {
                            best_len = len;
                            best = z.clone();
                        }
                        queue.push_back(z);
                    }
                }
            }
        }
    }
    Ok(best)
}

/// Integer polynomial in `q`, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// `self += c · q^shift · other`.
    fn add_scaled(&mut self, other: &IntPolynomial, c: i64, shift: usize) {
        if self.coeffs.len() < other.coeffs.len() + shift {
            self.coeffs.resize(other.coeffs.len() + shift, 0);
        }
        for (d, &v) in other.coeffs.iter().enumerate() {
            self.coeffs[d + shift] += c * v;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(d, &c)| match (d, c) {
                (0, c) => c.to_string(),
                (1, 1) => "q".into(),
                (1, c) => format!("{c}q"),
                (d, 1) => format!("q^{d}"),
                (d, c) => format!("{c}q^{d}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

// 4 bits per position, values 0-based.
type Code = u64;

fn encode(v: &[u8]) -> Code {
    v.iter()
        .enumerate()
        .fold(0, |acc, (i, &x)| acc | (u64::from(x) << (4 * i)))
}

fn decode(code: Code, m: usize) -> [u8; MAX_RANK] {
    let mut out = [0u8; MAX_RANK];
    for (i, slot) in out.iter_mut().enumerate().take(m) {
        *slot = ((code >> (4 * i)) & 0xF) as u8;
    }
    out
}

fn inversions(v: &[u8]) -> u32 {
    let mut n = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                n += 1;
            }
        }
    }
    n
}

fn leq_arr(x: &[u8], w: &[u8]) -> bool {
    // slack[t] = #{w-prefix ≥ t} - #{x-prefix ≥ t}
    let mut slack = [0i32; MAX_RANK];
    for (&xv, &wv) in x.iter().zip(w) {
        for s in slack.iter_mut().take(wv as usize + 1) {
            *s += 1;
        }
        for s in slack.iter_mut().take(xv as usize + 1) {
            *s -= 1;
            if *s < 0 {
                return false;
            }
        }
    }
    true
}

fn right_descents(v: &[u8]) -> u32 {
    (0..v.len().saturating_sub(1))
        .filter(|&i| v[i] > v[i + 1])
        .fold(0, |m, i| m | (1 << i))
}

fn left_descents(v: &[u8]) -> u32 {
    let mut pos = [0u8; MAX_RANK];
    for (i, &x) in v.iter().enumerate() {
        pos[x as usize] = i as u8;
    }
    (0..v.len().saturating_sub(1))
        .filter(|&s| pos[s + 1] < pos[s])
        .fold(0, |m, s| m | (1 << s))
}

// Depth-first walk over the lower interval of `w`, restricted to elements
// whose right descent set contains `dr` and left descent set contains `dl`.
struct BelowWalk<'a> {
    w: &'a [u8],
    dl: u32,
    dr: u32,
    x: Vec<u8>,
    used: u32,
    slack: [i32; MAX_RANK],
}

impl<'a> BelowWalk<'a> {
    fn new(w: &'a [u8], dl: u32, dr: u32) -> Self {
        BelowWalk {
            w,
            dl,
            dr,
            x: Vec::with_capacity(w.len()),
            used: 0,
            slack: [0; MAX_RANK],
        }
    }

    fn run(&mut self, emit: &mut dyn FnMut(&[u8]), allowed: &dyn Fn(usize, u8) -> bool) {
        let m = self.w.len();
        let i = self.x.len();
        if i == m {
            emit(&self.x);
            return;
        }
        let wv = self.w[i] as usize;
        for s in self.slack.iter_mut().take(wv + 1) {
            *s += 1;
        }
        for v in 0..m as u8 {
            if self.used & (1 << v) != 0 || !allowed(i, v) {
                continue;
            }
            if i > 0 && self.dr & (1 << (i - 1)) != 0 && v > self.x[i - 1] {
                continue;
            }
            if self.dl & (1 << v) != 0 && self.used & (1 << (v + 1)) == 0 {
                continue;
            }
            if self.slack[..=v as usize].iter().any(|&s| s < 1) {
                continue;
            }
            for s in self.slack.iter_mut().take(v as usize + 1) {
                *s -= 1;
            }
            self.used |= 1 << v;
            self.x.push(v);
            self.run(emit, allowed);
            self.x.pop();
            self.used &= !(1 << v);
            for s in self.slack.iter_mut().take(v as usize + 1) {
                *s += 1;
            }
        }
        for s in self.slack.iter_mut().take(wv + 1) {
            *s -= 1;
        }
    }
}

struct KlTable {
    dl: u32,
    dr: u32,
    /// `P_{x,w}` for `x < w` maximal in its `(D_L(w), D_R(w))` double coset.
    polys: FxHashMap<Code, IntPolynomial>,
    /// `(z, μ(z,w))` for all `z < w` with `μ ≠ 0`.
    mu: Vec<(Code, i64)>,
}

/// Memoized Kazhdan–Lusztig polynomials of `S_m`.
///
/// One table per upper element `w`, storing only the lower elements that are
/// maximal with respect to the descents of `w` (every other value is read off
/// through `P_{x,w} = P_{sx,w} = P_{xs,w}` for descents `s` of `w`).
pub struct KlEngine {
    m: usize,
    tables: FxHashMap<Code, Arc<KlTable>>,
}

impl KlEngine {
    pub fn new(m: usize) -> Self {
        assert!(m <= MAX_RANK, "rank {m} exceeds {MAX_RANK}");
        KlEngine {
            m,
            tables: FxHashMap::default(),
        }
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    /// Number of cached upper elements.
    pub fn cached(&self) -> usize {
        self.tables.len()
    }

    pub fn kl_poly(&mut self, x: &Permutation, w: &Permutation) -> Result<IntPolynomial> {
        same_rank(x, w)?;
        if x.rank() != self.m {
            return Err(Error::SizeMismatch(x.rank(), self.m));
        }
        Ok(self.lookup(x.code(), w.code()))
    }

    /// `P_{x,w}(1)` for every `x ≤ w` passing `allowed(position, value)`
    /// (1-based), in depth-first order.
    pub fn lower_values<F>(&mut self, w: &Permutation, allowed: F) -> Vec<(Permutation, i64)>
    where
        F: Fn(usize, usize) -> bool,
    {
        let below = lower_interval_filtered(w, allowed);
        let wc = w.code();
        below
            .into_iter()
            .map(|x| {
                let p = self.lookup(x.code(), wc).at_one();
                (x, p)
            })
            .collect()
    }

    fn lookup(&mut self, x: Code, w: Code) -> IntPolynomial {
        if x == w {
            return IntPolynomial::one();
        }
        let m = self.m;
        let (xa, wa) = (decode(x, m), decode(w, m));
        if !leq_arr(&xa[..m], &wa[..m]) {
            return IntPolynomial::zero();
        }
        let table = self.table(w);
        let xn = normalize(&xa[..m], table.dl, table.dr);
        if xn == w {
            return IntPolynomial::one();
        }
        table
            .polys
            .get(&xn)
            .cloned()
            .unwrap_or_else(|| unreachable!("extremal element missing from the table of its upper bound"))
    }

    fn table(&mut self, w: Code) -> Arc<KlTable> {
        if let Some(t) = self.tables.get(&w) {
            return Arc::clone(t);
        }
        let t = Arc::new(self.build(w));
        self.tables.insert(w, Arc::clone(&t));
        t
    }

    fn build(&mut self, w: Code) -> KlTable {
        let m = self.m;
        let wa = decode(w, m);
        let wv = &wa[..m];
        let length = inversions(wv);
        let (dl, dr) = (left_descents(wv), right_descents(wv));
        let mut polys = FxHashMap::default();
        if dr != 0 {
            let s = dr.trailing_zeros() as usize;
            let mut va = wa;
            va.swap(s, s + 1);
            let v = encode(&va[..m]);
            let vt = self.table(v);
            let mu_v: Vec<(Code, i64, u32)> = vt
                .mu
                .iter()
                .filter_map(|&(z, mu)| {
                    let za = decode(z, m);
                    (za[s] > za[s + 1]).then(|| (z, mu, inversions(&za[..m])))
                })
                .collect();

            let mut extremal = Vec::new();
            BelowWalk::new(wv, dl, dr).run(&mut |x| extremal.push(encode(x)), &|_, _| true);

            for x in extremal {
                if x == w {
                    continue;
                }
                let mut xsa = decode(x, m);
                xsa.swap(s, s + 1);
                let xs = encode(&xsa[..m]);
                let mut p = self.lookup(xs, v);
                p.add_scaled(&self.lookup(x, v), 1, 1);
                let xa = decode(x, m);
                for &(z, mu, zlen) in &mu_v {
                    let za = decode(z, m);
                    if !leq_arr(&xa[..m], &za[..m]) {
                        continue;
                    }
                    let pxz = self.lookup(x, z);
                    p.add_scaled(&pxz, -mu, ((length - zlen) / 2) as usize);
                }
                polys.insert(x, p);
            }
        }

        let mut mu = Vec::new();
        let mut seen = FxHashSet::default();
        for (&x, p) in &polys {
            let diff = length - inversions(&decode(x, m)[..m]);
            if diff % 2 == 1 {
                let c = p.coeff(((diff - 1) / 2) as usize);
                if c != 0 && seen.insert(x) {
                    mu.push((x, c));
                }
            }
        }
        for s in 0..m.saturating_sub(1) {
            if dr & (1 << s) != 0 {
                let mut z = wa;
                z.swap(s, s + 1);
                let z = encode(&z[..m]);
                if seen.insert(z) {
                    mu.push((z, 1));
                }
            }
            if dl & (1 << s) != 0 {
                let z: Vec<u8> = wv
                    .iter()
                    .map(|&v| match v as usize {
                        t if t == s => v + 1,
                        t if t == s + 1 => v - 1,
                        _ => v,
                    })
                    .collect();
                let z = encode(&z);
                if seen.insert(z) {
                    mu.push((z, 1));
                }
            }
        }
        mu.sort_unstable();
        KlTable { dl, dr, polys, mu }
    }
}

// Climbs to the maximal element of the `(dl, dr)` double coset of `x`.
fn normalize(x: &[u8], dl: u32, dr: u32) -> Code {
    let m = x.len();
    let mut v = [0u8; MAX_RANK];
    v[..m].copy_from_slice(x);
    let mut pos = [0u8; MAX_RANK];
    for (i, &val) in x.iter().enumerate() {
        pos[val as usize] = i as u8;
    }
    loop {
        let mut changed = false;
        for s in 0..m.saturating_sub(1) {
            if dr & (1 << s) != 0 && v[s] < v[s + 1] {
                v.swap(s, s + 1);
                pos[v[s] as usize] = s as u8;
                pos[v[s + 1] as usize] = s as u8 + 1;
                changed = true;
            }
            if dl & (1 << s) != 0 && pos[s] < pos[s + 1] {
                let (a, b) = (pos[s] as usize, pos[s + 1] as usize);
                v.swap(a, b);
                pos.swap(s, s + 1);
                changed = true;
            }
        }
        if !changed {
            return encode(&v[..m]);
        }
    }
}

thread_local! {
    static ENGINES: RefCell<FxHashMap<usize, KlEngine>> = RefCell::new(FxHashMap::default());
}

/// Runs `f` with this thread's engine for rank `m`.
pub fn with_engine<R>(m: usize, f: impl FnOnce(&mut KlEngine) -> R) -> R {
    ENGINES.with(|cell| {
        let mut map = cell.borrow_mut();
        let engine = map.entry(m).or_insert_with(|| KlEngine::new(m));
        f(engine)
    })
}

/// `P_{x,w}` using the thread-local cache.
pub fn kl_poly(x: &Permutation, w: &Permutation) -> Result<IntPolynomial> {
    same_rank(x, w)?;
    with_engine(x.rank(), |e| e.kl_poly(x, w))
}

/// All permutations of `[1, m]` in lexicographic order.
pub fn all_permutations(m: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (1..=m as u8).collect();
    loop {
        out.push(Permutation(cur.clone()));
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..m).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}
