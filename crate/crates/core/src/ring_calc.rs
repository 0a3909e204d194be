//! Grothendieck ring arithmetic on multisegments.
//!
//! Classes are integer combinations of multisegments in either the simple
//! basis `[Z(m)]` or the standard basis `ζ(m) = Π Z(Δ)`.

use std::collections::BTreeMap;
use std::fmt;

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::segments::{Multisegment, Segment};
use crate::symmetric_group::{longest_coset_representative, with_engine, Permutation};

/// Default cap on the number of segments for permutation enumeration.
pub const DEFAULT_SEGMENT_CAP: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Simple,
    Standard,
}

/// An integer combination of canonical multisegments in one basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingElement {
    basis: Basis,
    terms: BTreeMap<Multisegment, i64>,
}

impl RingElement {
    pub fn zero(basis: Basis) -> Self {
        RingElement {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The class of `m` with coefficient one.
    pub fn basis_element(basis: Basis, m: &Multisegment) -> Self {
        let mut e = Self::zero(basis);
        e.add(m, 1);
        e
    }

    /// The unit, i.e. the class of the empty multisegment.
    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, &Multisegment::empty())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Multisegment, i64> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Multisegment) -> i64 {
        self.terms.get(&m.canonical()).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · [m]`, keeping no zero coefficients.
    pub fn add(&mut self, m: &Multisegment, c: i64) {
        self.add_canonical(m.canonical(), c);
    }

    fn add_canonical(&mut self, key: Multisegment, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&key);
        }
    }

    fn add_scaled(&mut self, other: &RingElement, c: i64) {
        for (k, &v) in &other.terms {
            self.add_canonical(k.clone(), c * v);
        }
    }

    /// The element expressed in `basis`.
    pub fn to_basis(&self, basis: Basis) -> RingElement {
        match (self.basis, basis) {
            (a, b) if a == b => self.clone(),
            (Basis::Simple, Basis::Standard) => {
                let mut out = RingElement::zero(Basis::Standard);
                for (k, &c) in &self.terms {
                    out.add_scaled(&simple_to_standard(k), c);
                }
                out
            }
            _ => standard_to_simple(self),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.basis {
            Basis::Simple => "Z",
            Basis::Standard => "ζ",
        };
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            match (i, *c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "{sym}({k})")?;
        }
        Ok(())
    }
}

/// Begins ascending, ends descending and the permutation `σ` with
/// `m = Σ [a_{σ⁻¹(i)}, b_i]`, minimal in its double coset.
fn kl_data(m: &Multisegment) -> (Vec<i64>, Vec<i64>, Permutation) {
    let mut segs = m.segments().to_vec();
    segs.sort_by(|x, y| x.begin().cmp(&y.begin()).then(y.end().cmp(&x.end())));
    let a: Vec<i64> = segs.iter().map(Segment::begin).collect();
    let mut ends: Vec<(i64, usize)> = segs.iter().enumerate().map(|(j, s)| (s.end(), j)).collect();
    ends.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
    let b: Vec<i64> = ends.iter().map(|e| e.0).collect();
    let mut sigma = vec![0u8; segs.len()];
    for (i, &(_, j)) in ends.iter().enumerate() {
        sigma[j] = i as u8 + 1;
    }
    let sigma = Permutation::new(sigma).expect("bijection by construction");
    (a, b, sigma)
}

/// `[Z(m)]` in the standard basis, by the Kazhdan–Lusztig expansion
/// `Z(m) = Σ_{σ'≤σ} sgn(σ'σ) P_{σ',σ}(1) Π Z([a_{σ'⁻¹(i)}, b_i])`.
pub fn simple_to_standard(m: &Multisegment) -> RingElement {
    let mut out = RingElement::zero(Basis::Standard);
    if m.is_empty() {
        out.add(m, 1);
        return out;
    }
    let (a, b, sigma) = kl_data(m);
    let len_sigma = sigma.length();
    // position j (a begin) may map to i (an end) only if a_j ≤ b_i + 1
    let values = with_engine(sigma.rank(), |e| {
        e.lower_values(&sigma, |j, i| a[j - 1] <= b[i - 1] + 1)
    });
    for (x, p1) in values {
        if p1 == 0 {
            continue;
        }
        let sign = if (x.length() + len_sigma) % 2 == 0 { 1 } else { -1 };
        let key: Multisegment = (1..=x.rank())
            .filter_map(|j| Segment::or_empty(a[j - 1], b[x.apply(j) - 1]))
            .collect();
        out.add(&key, sign * p1);
    }
    out
}

// Strictly smaller on every proper degeneration (union/intersection moves).
fn square_weight(m: &Multisegment) -> i64 {
    m.iter().map(|s| s.len() * s.len()).sum()
}

/// Inverts the unitriangular change of basis.
pub fn standard_to_simple(e: &RingElement) -> RingElement {
    if e.basis == Basis::Simple {
        return e.clone();
    }
    let mut rest = e.clone();
    let mut out = RingElement::zero(Basis::Simple);
    while let Some((key, c)) = rest
        .terms
        .iter()
        .min_by(|x, y| square_weight(x.0).cmp(&square_weight(y.0)).then(x.0.cmp(y.0)))
        .map(|(k, &c)| (k.clone(), c))
    {
        out.add_canonical(key.clone(), c);
        rest.add_scaled(&simple_to_standard(&key), -c);
        debug_assert_eq!(rest.terms.get(&key), None);
    }
    out
}

/// Product; simple inputs are multiplied through the standard basis.
pub fn multiply(e1: &RingElement, e2: &RingElement) -> RingElement {
    let x = e1.to_basis(Basis::Standard);
    let y = e2.to_basis(Basis::Standard);
    let mut out = RingElement::zero(Basis::Standard);
    for (k1, c1) in &x.terms {
        for (k2, c2) in &y.terms {
            out.add(&k1.sum(k2), c1 * c2);
        }
    }
    out.to_basis(e1.basis)
}

/// Image of one multisegment in the quotient by `k`: `None` for zero.
pub fn reduce_multisegment(m: &Multisegment, k: u32) -> Option<Multisegment> {
    let k = i64::from(k);
    if m.iter().any(|s| s.len() > k) {
        return None;
    }
    Some(
        m.iter()
            .filter(|s| s.len() < k)
            .copied()
            .collect::<Multisegment>()
            .canonical(),
    )
}

/// Term-wise reduction modulo `k`, summing coefficients of keys that collide.
pub fn reduce_mod_k(e: &RingElement, k: u32) -> RingElement {
    let mut out = RingElement::zero(e.basis);
    for (key, &c) in &e.terms {
        if let Some(r) = reduce_multisegment(key, k) {
            out.add_canonical(r, c);
        }
    }
    out
}

/// Result of the ring computation for `Z(m) × Z(n)` modulo `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub irreducible: bool,
    pub decomposition: RingElement,
}

/// Decides irreducibility of `Z(m) × Z(n)` in the quotient by `k` from the
/// Kazhdan–Lusztig basis change alone.
pub fn tensor_oracle(m: &Multisegment, n: &Multisegment, k: u32) -> Result<OracleResult> {
    for s in m.iter().chain(n.iter()) {
        if s.len() >= i64::from(k) {
            return Err(Error::TooLong {
                begin: s.begin(),
                end: s.end(),
                k,
            });
        }
    }
    let zm = RingElement::basis_element(Basis::Simple, m);
    let zn = RingElement::basis_element(Basis::Simple, n);
    let decomposition = reduce_mod_k(&multiply(&zm, &zn), k);
    let top = reduce_multisegment(&m.sum(n), k).expect("inputs lie in Mult_k");
    let irreducible = decomposition == RingElement::basis_element(Basis::Simple, &top);
    Ok(OracleResult {
        irreducible,
        decomposition,
    })
}

/// Which factor a tile comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    M,
    N,
}

/// One step of a tiling sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TileStep {
    pub sub_segment: Segment,
    pub source: Segment,
    /// 1-based position of the source in `m + n` sorted by `≤_b`.
    pub source_index: usize,
    pub side: Side,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingSequence {
    pub steps: Vec<TileStep>,
    pub tiled: bool,
}

type Residual = Vec<(Segment, Side)>;

fn residual(m: &Multisegment, n: &Multisegment) -> Residual {
    let mut r: Residual = m
        .iter()
        .map(|&s| (s, Side::M))
        .chain(n.iter().map(|&s| (s, Side::N)))
        .collect();
    sort_residual(&mut r);
    r
}

// `≤_b` order, segments of `m` before equal ones of `n`
fn sort_residual(r: &mut Residual) {
    r.sort_by(|x, y| x.0.cmp_b(&y.0).then(x.1.cmp(&y.1)));
}

fn seq_residual(res: &Residual, delta: &Segment) -> TilingSequence {
    let (lo, hi) = (delta.begin(), delta.end());
    let mut steps = Vec::new();
    let start = res
        .iter()
        .enumerate()
        .filter(|(_, (s, _))| lo <= s.begin() && s.begin() <= hi)
        .map(|(i, (s, _))| (s.begin(), i))
        .min();
    let Some((b0, _)) = start else {
        return TilingSequence { steps, tiled: false };
    };
    // among the segments starting first, the longest one still inside Δ
    let same: Vec<usize> = (0..res.len()).filter(|&i| res[i].0.begin() == b0).collect();
    let fitting: Vec<usize> = same.iter().copied().filter(|&i| res[i].0.end() <= hi).collect();
    let pool = if fitting.is_empty() { &same } else { &fitting };
    let mut cur = pool[0];
    for &i in pool {
        if res[i].0.end() > res[cur].0.end() {
            cur = i;
        }
    }

    let mut used = vec![false; res.len()];
    let mut p = lo;
    let mut tiled = true;
    loop {
        let (src, side) = res[cur];
        let piece = Segment::new(src.begin().max(p), src.end().min(hi)).expect("source meets the remainder");
        steps.push(TileStep {
            sub_segment: piece,
            source: src,
            source_index: cur + 1,
            side,
        });
        used[cur] = true;
        if piece.begin() != p || piece.end() != src.end() {
            tiled = false;
        }
        if piece.begin() != p {
            break;
        }
        p = piece.end() + 1;
        if p > hi {
            break;
        }
        let next =
            (0..res.len()).find(|&i| !used[i] && res[i].1 != side && res[i].0.begin() <= hi && res[i].0.end() >= p);
        match next {
            Some(i) => cur = i,
            None => {
                tiled = false;
                break;
            }
        }
    }
    if p <= hi {
        tiled = false;
    }
    TilingSequence { steps, tiled }
}

/// The alternating sequence of sub-segments of `m + n` covering `delta`.
pub fn seq(m: &Multisegment, n: &Multisegment, delta: &Segment) -> TilingSequence {
    seq_residual(&residual(m, n), delta)
}

pub fn is_tiled(m: &Multisegment, n: &Multisegment, delta: &Segment) -> bool {
    seq(m, n, delta).tiled
}

/// Whether `mx` tiles `(m, n)`: its segments, in `≤_b` order, each tile the
/// residual pair left after removing the tiles of the previous ones.
pub fn tiles(mx: &Multisegment, m: &Multisegment, n: &Multisegment) -> bool {
    let mut res = residual(m, n);
    for delta in mx.sorted_b().iter() {
        let s = seq_residual(&res, delta);
        if !s.tiled {
            return false;
        }
        let mut cut: Vec<Option<i64>> = vec![None; res.len()];
        for step in &s.steps {
            cut[step.source_index - 1] = Some(step.sub_segment.begin());
        }
        res = res
            .iter()
            .zip(cut)
            .filter_map(|(&(src, side), c)| match c {
                None => Some((src, side)),
                Some(b) => Segment::or_empty(src.begin(), b - 1).map(|t| (t, side)),
            })
            .collect();
        sort_residual(&mut res);
    }
    true
}

fn require_ladder(m: &Multisegment) -> Result<()> {
    if m.is_ladder() {
        Ok(())
    } else {
        Err(Error::NotLadder)
    }
}

/// The multisegments `m_x` with `[Z(m) × Z(n)] = Σ_x [Z(m_x)]`, for ladders
/// `m` and `n`, sorted.
pub fn ladder_decomposition(m: &Multisegment, n: &Multisegment) -> Result<Vec<Multisegment>> {
    ladder_decomposition_capped(m, n, DEFAULT_SEGMENT_CAP)
}

/// As [`ladder_decomposition`] with an explicit cap on `|m| + |n|`.
pub fn ladder_decomposition_capped(m: &Multisegment, n: &Multisegment, cap: usize) -> Result<Vec<Multisegment>> {
    require_ladder(m)?;
    require_ladder(n)?;
    let total = m.sum(n);
    let size = total.len();
    if size > cap {
        return Err(Error::OverBudget(format!("{size} segments exceed the cap of {cap}")));
    }
    let lambda = total.begins();
    let mu = total.ends();
    let mut seen: FxHashSet<Vec<(i64, i64)>> = FxHashSet::default();
    let mut out = Vec::new();
    let mut x = Vec::with_capacity(size);
    let mut used = vec![false; size];
    enumerate_exchanges(&lambda, &mu, &mut x, &mut used, &mut |x| {
        let mut pairs: Vec<(i64, i64)> = x.iter().enumerate().map(|(i, &j)| (lambda[i], mu[j])).collect();
        pairs.sort_unstable();
        if !seen.insert(pairs.clone()) {
            return;
        }
        let mx: Multisegment = pairs.iter().filter_map(|&(a, b)| Segment::or_empty(a, b)).collect();
        if !tiles(&mx, m, n) {
            return;
        }
        let perm = Permutation::new(x.iter().map(|&j| j as u8 + 1).collect()).expect("bijection");
        let longest = longest_coset_representative(&perm, &lambda, &mu).expect("sizes agree");
        if longest.is_321_avoiding() {
            out.push(mx.canonical());
        }
    });
    out.sort();
    Ok(out)
}

fn enumerate_exchanges(
    lambda: &[i64],
    mu: &[i64],
    x: &mut Vec<usize>,
    used: &mut [bool],
    emit: &mut dyn FnMut(&[usize]),
) {
    let i = x.len();
    if i == lambda.len() {
        emit(x);
        return;
    }
    for j in 0..mu.len() {
        if used[j] || lambda[i] > mu[j] + 1 {
            continue;
        }
        used[j] = true;
        x.push(j);
        enumerate_exchanges(lambda, mu, x, used, emit);
        x.pop();
        used[j] = false;
    }
}

/// The decomposition modulo `k`: each term reduced, zeros dropped, sorted.
pub fn ladder_decomposition_k(m: &Multisegment, n: &Multisegment, k: u32) -> Result<Vec<Multisegment>> {
    ladder_decomposition_k_capped(m, n, k, DEFAULT_SEGMENT_CAP)
}

pub fn ladder_decomposition_k_capped(
    m: &Multisegment,
    n: &Multisegment,
    k: u32,
    cap: usize,
) -> Result<Vec<Multisegment>> {
    if !m.in_mult_k(k) || !n.in_mult_k(k) {
        return Err(Error::OutOfRange(format!("inputs must have all lengths below k={k}")));
    }
    let mut out: Vec<Multisegment> = ladder_decomposition_capped(m, n, cap)?
        .iter()
        .filter_map(|t| reduce_multisegment(t, k))
        .collect();
    out.sort();
    Ok(out)
}

/// Collects terms into a simple-basis element.
pub fn terms_to_element(terms: &[Multisegment]) -> RingElement {
    let mut e = RingElement::zero(Basis::Simple);
    for t in terms {
        e.add(t, 1);
    }
    e
}
