//! The matching criterion for irreducibility of products.
//!
//! Index pairs are 1-based and refer to the stored order of the segments of
//! each argument.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::segments::{Multisegment, Segment};
use crate::tableaux::{promotion, weakly_separated, Column, Tableau};

pub type Pair = (usize, usize);
pub type PairSet = BTreeSet<Pair>;

/// The relation `(i₂, j₂) ⇝ (i₁, j₁)` between `Y` and `X` for a pair of
/// multisegments, optionally `k`-bounded.
#[derive(Debug, Clone, Copy)]
pub struct MatchRelation<'a> {
    m: &'a [Segment],
    n: &'a [Segment],
    k: Option<u32>,
}

impl<'a> MatchRelation<'a> {
    pub fn new(m: &'a Multisegment, n: &'a Multisegment, k: Option<u32>) -> Self {
        MatchRelation {
            m: m.segments(),
            n: n.segments(),
            k,
        }
    }

    fn prec(&self, s: &Segment, t: &Segment) -> bool {
        match self.k {
            Some(k) => s.k_precedes(t, k),
            None => s.precedes(t),
        }
    }

    /// Whether `y ⇝ x`.
    pub fn relates(&self, y: Pair, x: Pair) -> bool {
        (y.0 == x.0 && self.prec(&self.n[y.1 - 1], &self.n[x.1 - 1]))
            || (y.1 == x.1 && self.prec(&self.m[x.0 - 1], &self.m[y.0 - 1]))
    }
}

/// A partial injective map `X → Y`, listed by increasing source.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub pairs: Vec<(Pair, Pair)>,
}

impl Matching {
    pub fn get(&self, x: Pair) -> Option<Pair> {
        self.pairs.iter().find(|(s, _)| *s == x).map(|&(_, t)| t)
    }

    pub fn domain(&self) -> PairSet {
        self.pairs.iter().map(|&(s, _)| s).collect()
    }

    /// Whether this is a `⇝`-matching function from all of `x` into `y`.
    pub fn is_matching_function(&self, x: &PairSet, y: &PairSet, rel: &MatchRelation<'_>) -> bool {
        let targets: BTreeSet<Pair> = self.pairs.iter().map(|&(_, t)| t).collect();
        targets.len() == self.pairs.len()
            && self.domain() == *x
            && self.pairs.iter().all(|&(s, t)| y.contains(&t) && rel.relates(t, s))
    }
}

fn pair_sets(m: &Multisegment, n: &Multisegment, prec: impl Fn(&Segment, &Segment) -> bool) -> (PairSet, PairSet) {
    let mut x = PairSet::new();
    let mut y = PairSet::new();
    for (i, s) in m.iter().enumerate() {
        for (j, t) in n.iter().enumerate() {
            if prec(s, t) {
                x.insert((i + 1, j + 1));
            }
            if prec(&s.shift_left(), t) {
                y.insert((i + 1, j + 1));
            }
        }
    }
    (x, y)
}

/// `X_{m,n} = {(i,j): Δ_i ≺ Δ'_j}` and `Y_{m,n} = {(i,j): ←Δ_i ≺ Δ'_j}`.
pub fn xy_sets(m: &Multisegment, n: &Multisegment) -> (PairSet, PairSet) {
    pair_sets(m, n, |s, t| s.precedes(t))
}

/// The `k`-bounded sets, with `≺_k` in place of `≺`.
pub fn xy_sets_k(m: &Multisegment, n: &Multisegment, k: u32) -> (PairSet, PairSet) {
    pair_sets(m, n, |s, t| s.k_precedes(t, k))
}

fn require_compatible(t: &Tableau, u: &Tableau) -> Result<()> {
    if t.k() != u.k() || t.n() != u.n() {
        return Err(Error::ShapeMismatch(format!(
            "SSYT({}, [{}]) against SSYT({}, [{}])",
            t.k(),
            t.n(),
            u.k(),
            u.n()
        )));
    }
    Ok(())
}

fn min_entry(c: &Column) -> u32 {
    c.entries()[0]
}

/// `X_{T,T'}` and `Y_{T,T'}` over the lex-ordered small gap columns.
pub fn xy_sets_tableaux(t: &Tableau, u: &Tableau) -> Result<(PairSet, PairSet)> {
    require_compatible(t, u)?;
    let tc = t.small_gap_columns()?;
    let uc = u.small_gap_columns()?;
    let mut x = PairSet::new();
    let mut y = PairSet::new();
    for (i, a) in tc.iter().enumerate() {
        let pa = promotion(a, t.n())?;
        for (j, b) in uc.iter().enumerate() {
            if !weakly_separated(a.entries(), b.entries()) && min_entry(b) < min_entry(a) {
                x.insert((i + 1, j + 1));
            }
            if !weakly_separated(pa.entries(), b.entries()) && min_entry(b) <= min_entry(a) {
                y.insert((i + 1, j + 1));
            }
        }
    }
    Ok((x, y))
}

/// Maximum matching by augmenting paths; `None` unless every element of `x`
/// is matched.
pub fn full_matching(x: &PairSet, y: &PairSet, rel: impl Fn(Pair, Pair) -> bool) -> Option<Matching> {
    let xs: Vec<Pair> = x.iter().copied().collect();
    let ys: Vec<Pair> = y.iter().copied().collect();
    let adj: Vec<Vec<usize>> = xs
        .iter()
        .map(|&xv| (0..ys.len()).filter(|&j| rel(ys[j], xv)).collect())
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; ys.len()];
    for i in 0..xs.len() {
        let mut seen = vec![false; ys.len()];
        if !augment(i, &adj, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut pairs: Vec<(Pair, Pair)> = owner
        .iter()
        .enumerate()
        .filter_map(|(j, o)| o.map(|i| (xs[i], ys[j])))
        .collect();
    pairs.sort();
    Some(Matching { pairs })
}

fn augment(i: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &j in &adj[i] {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        if owner[j].is_none_or(|o| augment(o, adj, owner, seen)) {
            owner[j] = Some(i);
            return true;
        }
    }
    false
}

/// A witness for `LC(m, n)`.
pub fn lc_matching(m: &Multisegment, n: &Multisegment) -> Option<Matching> {
    let (x, y) = xy_sets(m, n);
    let rel = MatchRelation::new(m, n, None);
    full_matching(&x, &y, |a, b| rel.relates(a, b))
}

/// A witness for `LC_k(m, n)`.
pub fn lc_k_matching(m: &Multisegment, n: &Multisegment, k: u32) -> Option<Matching> {
    let (x, y) = xy_sets_k(m, n, k);
    let rel = MatchRelation::new(m, n, Some(k));
    full_matching(&x, &y, |a, b| rel.relates(a, b))
}

pub fn lc(m: &Multisegment, n: &Multisegment) -> bool {
    lc_matching(m, n).is_some()
}

pub fn lc_k(m: &Multisegment, n: &Multisegment, k: u32) -> bool {
    lc_k_matching(m, n, k).is_some()
}

/// `LC(T, T')` with the relation read off the columns.
pub fn lc_tableaux(t: &Tableau, u: &Tableau) -> Result<bool> {
    let (x, y) = xy_sets_tableaux(t, u)?;
    let tc = t.small_gap_columns()?;
    let uc = u.small_gap_columns()?;
    let related = |a: &Column, b: &Column| !weakly_separated(a.entries(), b.entries()) && min_entry(a) < min_entry(b);
    let rel = |to: Pair, from: Pair| {
        (to.0 == from.0 && related(&uc[from.1 - 1], &uc[to.1 - 1]))
            || (to.1 == from.1 && related(&tc[to.0 - 1], &tc[from.0 - 1]))
    };
    Ok(full_matching(&x, &y, rel).is_some())
}

/// The best `⇝`-matching for `xs` and `ys` listed in increasing order:
/// elements of `xs` are handled from the largest down, each taking the
/// smallest free `y` with `rel(y, x)`. Returns `(x, f(x))` by increasing `x`.
pub fn best_matching<T: Copy + PartialEq>(xs: &[T], ys: &[T], rel: impl Fn(T, T) -> bool) -> Vec<(T, T)> {
    let mut taken = vec![false; ys.len()];
    let mut out = Vec::new();
    for &x in xs.iter().rev() {
        if let Some(j) = (0..ys.len()).find(|&j| !taken[j] && rel(ys[j], x)) {
            taken[j] = true;
            out.push((x, ys[j]));
        }
    }
    out.reverse();
    out
}

fn require_ladder_k(m: &Multisegment, k: u32) -> Result<()> {
    if !m.is_ladder() {
        return Err(Error::NotLadder);
    }
    require_mult_k(m, k)
}

fn require_mult_k(m: &Multisegment, k: u32) -> Result<()> {
    match m.iter().find(|s| s.len() >= i64::from(k)) {
        Some(s) => Err(Error::TooLong {
            begin: s.begin(),
            end: s.end(),
            k,
        }),
        None => Ok(()),
    }
}

/// Witness `(i, j, m)` for `NC_k(m, n)`, indices 1-based into the ladders
/// sorted by increasing begins.
pub fn nc_k_witness(m: &Multisegment, n: &Multisegment, k: u32) -> Result<Option<(usize, usize, usize)>> {
    require_ladder_k(m, k)?;
    require_ladder_k(n, k)?;
    let (m, n) = (m.sorted_b(), n.sorted_b());
    let (x, y) = xy_sets_k(&m, &n, k);
    let in_x = |i: usize, j: usize| x.contains(&(i, j));
    // indices out of range (in particular j-1 = 0) are not in Y
    let in_y = |i: usize, j: usize| y.contains(&(i, j));
    for &(i, j) in &x {
        let mut len = 0;
        loop {
            if !in_x(i + len, j + len) {
                break;
            }
            if !in_y(i, j - 1) && !in_y(i + len + 1, j + len) {
                return Ok(Some((i, j, len)));
            }
            // extend the chain through (i+l+1, j+l) ∈ Y \ X
            if !(in_y(i + len + 1, j + len) && !in_x(i + len + 1, j + len)) {
                break;
            }
            len += 1;
        }
    }
    Ok(None)
}

pub fn nc_k(m: &Multisegment, n: &Multisegment, k: u32) -> Result<bool> {
    Ok(nc_k_witness(m, n, k)?.is_some())
}

/// The parameter of `soc(Z([a,a]) × Z(n))` in the quotient by `k`.
///
/// `n` is taken in order of decreasing begins; the best matching processes
/// larger indices first.
pub fn socle_with_cuspidal(a: i64, n: &Multisegment, k: u32) -> Result<Multisegment> {
    require_mult_k(n, k)?;
    let mut segs = n.segments().to_vec();
    segs.sort_by(|s, t| t.cmp_b(s));
    let point = Segment::new(a, a)?;
    let xs: Vec<usize> = (0..segs.len()).filter(|&i| point.k_precedes(&segs[i], k)).collect();
    let ys: Vec<usize> = (0..segs.len())
        .filter(|&i| point.shift_left().k_precedes(&segs[i], k))
        .collect();
    let f = best_matching(&xs, &ys, |y, x| segs[y].k_precedes(&segs[x], k));
    let unmatched = xs.iter().find(|x| !f.iter().any(|(d, _)| d == *x));
    let out: Multisegment = match unmatched {
        None => std::iter::once(point).chain(segs.iter().copied()).collect(),
        Some(&i) => {
            segs[i] = Segment::new(a, segs[i].end())?;
            segs.into_iter().collect()
        }
    };
    Ok(out.iter().filter(|s| s.len() < i64::from(k)).copied().collect())
}

/// Simplicity of `L(M) ⊗ L(M')` for snake modules: `LC_k` both ways.
pub fn irreducible_snake_pair(m: &Multisegment, n: &Multisegment, k: u32) -> Result<bool> {
    require_ladder_k(m, k)?;
    require_ladder_k(n, k)?;
    Ok(lc_k(m, n, k) && lc_k(n, m, k))
}

/// Simplicity of the product with a fundamental module at an extremal node,
/// i.e. a segment of length 1 or `k - 1`, for arbitrary `m`.
pub fn irreducible_extremal(s: &Segment, m: &Multisegment, k: u32) -> Result<bool> {
    let len = s.len();
    if len != 1 && len != i64::from(k) - 1 {
        return Err(Error::OutOfRange(format!(
            "segment {s} has length {len}, expected 1 or {}",
            i64::from(k) - 1
        )));
    }
    require_mult_k(m, k)?;
    let single: Multisegment = std::iter::once(*s).collect();
    Ok(lc_k(&single, m, k) && lc_k(m, &single, k))
}
