//! q-characters of fundamental modules of quantum affine `sl_k` and the
//! classification of products of two fundamentals.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::correspond::{DominantMonomial, YVariable};
use crate::error::{Error, Result};

/// A Laurent monomial in the `Y_{i,s}`; factors at nodes `0` and `k` are 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentYMonomial {
    exponents: BTreeMap<(i64, i64), i64>,
}

impl LaurentYMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// Product of `Y_{i,s}^e`, dropping nodes outside `1..k`.
    pub fn from_factors<I: IntoIterator<Item = (i64, i64, i64)>>(k: u32, it: I) -> Self {
        let mut m = Self::one();
        for (i, s, e) in it {
            m.mul_var(k, i, s, e);
        }
        m
    }

    fn mul_var(&mut self, k: u32, i: i64, s: i64, e: i64) {
        if i <= 0 || i >= i64::from(k) || e == 0 {
            return;
        }
        let slot = self.exponents.entry((i, s)).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exponents.remove(&(i, s));
        }
    }

    pub fn exponents(&self) -> &BTreeMap<(i64, i64), i64> {
        &self.exponents
    }

    pub fn exponent(&self, i: i64, s: i64) -> i64 {
        self.exponents.get(&(i, s)).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &LaurentYMonomial) -> LaurentYMonomial {
        let mut out = self.clone();
        for (&(i, s), &e) in &other.exponents {
            let slot = out.exponents.entry((i, s)).or_insert(0);
            *slot += e;
            if *slot == 0 {
                out.exponents.remove(&(i, s));
            }
        }
        out
    }

    pub fn is_dominant(&self) -> bool {
        self.exponents.values().all(|&e| e > 0)
    }

    pub fn negative_count(&self) -> usize {
        self.exponents.values().filter(|&&e| e < 0).count()
    }

    /// The monomial as a [`DominantMonomial`], when all exponents are positive.
    pub fn to_dominant(&self) -> Option<DominantMonomial> {
        if !self.is_dominant() {
            return None;
        }
        let mut out = DominantMonomial::one();
        for (&(i, s), &e) in &self.exponents {
            out.mul_var(YVariable::new(i, s).ok()?, e as u32);
        }
        Some(out)
    }

    /// Triples `(i, s, e)` in increasing `(i, s)` order.
    pub fn triples(&self) -> Vec<(i64, i64, i64)> {
        self.exponents.iter().map(|(&(i, s), &e)| (i, s, e)).collect()
    }
}

impl fmt::Display for LaurentYMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        for (&(i, s), &e) in &self.exponents {
            write!(f, "Y_{{{i},{s}}}")?;
            if e != 1 {
                write!(f, "^{{{e}}}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialRepr {
    exponents: Vec<(i64, i64, i64)>,
}

impl Serialize for LaurentYMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MonomialRepr {
            exponents: self.triples(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentYMonomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = MonomialRepr::deserialize(d)?;
        let mut m = LaurentYMonomial::one();
        for (i, s, e) in repr.exponents {
            m.mul_var(u32::MAX, i, s, e);
        }
        Ok(m)
    }
}

/// A q-character as a multiset of monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QCharacter {
    k: u32,
    terms: BTreeMap<LaurentYMonomial, u64>,
}

impl QCharacter {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<LaurentYMonomial, u64> {
        &self.terms
    }

    /// Number of terms counted with multiplicity.
    pub fn term_count(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn multiplicity(&self, m: &LaurentYMonomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &QCharacter) -> QCharacter {
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                *terms.entry(a.mul(b)).or_insert(0) += ca * cb;
            }
        }
        QCharacter { k: self.k, terms }
    }

    /// Dominant monomials with multiplicity, in increasing order.
    pub fn dominant_terms(&self) -> Vec<DominantMonomial> {
        let mut out = Vec::new();
        for (m, &c) in &self.terms {
            if let Some(d) = m.to_dominant() {
                out.extend(std::iter::repeat_n(d, c as usize));
            }
        }
        out.sort();
        out
    }
}

#[derive(Serialize)]
struct TermRepr {
    exponents: Vec<(i64, i64, i64)>,
    mult: u64,
}

impl Serialize for QCharacter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(m, &mult)| TermRepr {
                exponents: m.triples(),
                mult,
            })
            .collect();
        terms.serialize(s)
    }
}

impl fmt::Display for QCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if *c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

fn check_node(i: i64, p: i64, k: u32) -> Result<()> {
    if k < 2 || i < 1 || i >= i64::from(k) {
        return Err(Error::OutOfRange(format!(
            "node {i} outside 1..{} for k={k}",
            i64::from(k) - 1
        )));
    }
    YVariable::new(i, p).map(|_| ())
}

/// `χ_q(L(Y_{i,p}))` by the closed formula over increasing `i`-tuples.
pub fn fundamental_qchar(i: i64, p: i64, k: u32) -> Result<QCharacter> {
    check_node(i, p, k)?;
    let mut terms = BTreeMap::new();
    let mut tuple: Vec<i64> = (1..=i).collect();
    loop {
        let factors = tuple.iter().enumerate().flat_map(|(idx, &j)| {
            let shift = p + i + j - 2 * (idx as i64 + 1);
            [(j, shift, 1), (j - 1, shift + 1, -1)]
        });
        *terms.entry(LaurentYMonomial::from_factors(k, factors)).or_insert(0) += 1;
        if !next_combination(&mut tuple, i64::from(k)) {
            break;
        }
    }
    Ok(QCharacter { k, terms })
}

// Next increasing tuple in [1, top] in lex order.
fn next_combination(t: &mut [i64], top: i64) -> bool {
    let len = t.len();
    for pos in (0..len).rev() {
        if t[pos] < top - (len - 1 - pos) as i64 {
            t[pos] += 1;
            for q in pos + 1..len {
                t[q] = t[q - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A monomial of `χ_q(L(Y_{i,p}))` with one negative exponent, and its
/// parameters `(q, r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingleNegative {
    pub q: i64,
    pub r: i64,
    pub monomial: LaurentYMonomial,
}

/// `Y_{q,p+i-q} Y_{q+r,p+i+r-q}^{-1} Y_{i+r,p+r}` for `0 ≤ q < i`,
/// `1 ≤ r ≤ k - i`.
pub fn single_negative_monomials(i: i64, p: i64, k: u32) -> Result<Vec<SingleNegative>> {
    check_node(i, p, k)?;
    let mut out = Vec::new();
    for q in 0..i {
        for r in 1..=i64::from(k) - i {
            let monomial =
                LaurentYMonomial::from_factors(k, [(q, p + i - q, 1), (q + r, p + i + r - q, -1), (i + r, p + r, 1)]);
            out.push(SingleNegative { q, r, monomial });
        }
    }
    Ok(out)
}

/// Reducibility of `L(Y_{j,s}) ⊗ L(Y_{i,p})` and, when reducible, the
/// parameters and highest weights of its two composition factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairStatus {
    pub reducible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sub_weight: Option<DominantMonomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_weight: Option<DominantMonomial>,
}

/// Classifies the product of two fundamentals. The pair is swapped first
/// when `p > s`.
pub fn fundamental_pair_status(i: i64, p: i64, j: i64, s: i64, k: u32) -> Result<PairStatus> {
    check_node(i, p, k)?;
    check_node(j, s, k)?;
    let (i, p, j, s) = if p <= s { (i, p, j, s) } else { (j, s, i, p) };
    let k64 = i64::from(k);
    let reducible = p + i + 2 <= j + s && j + s <= 2 * k64 + p - i && -p - i <= j - s && j - s <= i - p - 2;
    if !reducible {
        return Ok(PairStatus {
            reducible,
            q: None,
            r: None,
            sub_weight: None,
            quotient_weight: None,
        });
    }
    let q = (i + j + p - s) / 2;
    let r = (-i + j - p + s) / 2;
    let sub = LaurentYMonomial::from_factors(k, [(q, p + i - q, 1), (i + r, p + r, 1)]);
    let top = LaurentYMonomial::from_factors(k, [(j, s, 1), (i, p, 1)]);
    Ok(PairStatus {
        reducible,
        q: Some(q),
        r: Some(r),
        sub_weight: sub.to_dominant(),
        quotient_weight: top.to_dominant(),
    })
}

/// `{2m - i - j + 2 : 1 ≤ i, j ≤ k-1, max(i, j) ≤ m ≤ k, m ≤ i + j - 1}`.
pub fn cyclicity_gap_set(k: u32) -> BTreeSet<i64> {
    let k = i64::from(k);
    let mut out = BTreeSet::new();
    for i in 1..k {
        for j in 1..k {
            for m in i.max(j)..=k.min(i + j - 1) {
                out.insert(2 * m - i - j + 2);
            }
        }
    }
    out
}

/// Sufficient condition for `L(Y_{j,s}) ⊗ L(Y_{i,p})` to be cyclic on the
/// tensor product of highest weight vectors.
pub fn is_cyclic_pair(i: i64, p: i64, j: i64, s: i64, k: u32) -> Result<bool> {
    check_node(i, p, k)?;
    check_node(j, s, k)?;
    Ok(!cyclicity_gap_set(k).contains(&(p - s)))
}

/// Dominant monomials, with multiplicity, of `χ_q(L(Y_{j,s})) χ_q(L(Y_{i,p}))`.
pub fn dominant_terms_of_product(i: i64, p: i64, j: i64, s: i64, k: u32) -> Result<Vec<DominantMonomial>> {
    let a = fundamental_qchar(j, s, k)?;
    let b = fundamental_qchar(i, p, k)?;
    Ok(a.mul(&b).dominant_terms())
}
