//! Dictionary between segments, `Y`-variables and fundamental columns.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::segments::{Multisegment, Segment};
use crate::tableaux::{fundamental_column_in, Column, Tableau};

/// The variable `Y_{i,s}`; `i + s` is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YVariable {
    pub node: i64,
    pub shift: i64,
}

impl YVariable {
    pub fn new(node: i64, shift: i64) -> Result<Self> {
        if (node + shift).rem_euclid(2) != 1 {
            return Err(Error::Parity { i: node, s: shift });
        }
        Ok(YVariable { node, shift })
    }
}

impl fmt::Display for YVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y_{{{},{}}}", self.node, self.shift)
    }
}

/// `[a, b] ↦ Y_{b-a+1, -a-b}`.
pub fn segment_to_y(s: &Segment) -> YVariable {
    YVariable {
        node: s.len(),
        shift: -s.begin() - s.end(),
    }
}

/// `Y_{i,p} ↦ [(1-i-p)/2, (i-p-1)/2]`.
pub fn y_to_segment(v: YVariable) -> Result<Segment> {
    let YVariable { node: i, shift: p } = YVariable::new(v.node, v.shift)?;
    if i < 1 {
        return Err(Error::OutOfRange(format!("node {i} of {v} must be positive")));
    }
    Segment::new((1 - i - p) / 2, (i - p - 1) / 2)
}

/// `T_{a,b}` for `k+1-n ≤ a ≤ 0` and length below `k`.
pub fn segment_to_column(s: &Segment, k: u32, n: u32) -> Result<Column> {
    fundamental_column_in(s.begin(), s.end(), k, n)
}

/// `{i, ..., i+k} \ {r} ↦ [1-i, k-r]`.
pub fn column_to_segment(c: &Column) -> Result<Segment> {
    let (a, b) = c.segment_params()?;
    Segment::new(a, b)
}

pub fn y_to_column(v: YVariable, k: u32, n: u32) -> Result<Column> {
    let sum = v.node + v.shift;
    let bound = 2 * (i64::from(n) - i64::from(k));
    if !(1..=bound).contains(&sum) {
        return Err(Error::OutOfRange(format!(
            "{v} needs 1 ≤ i+p ≤ {bound} for k={k}, n={n}"
        )));
    }
    segment_to_column(&y_to_segment(v)?, k, n)
}

/// `{i, ..., i+k} \ {r} ↦ Y_{k-r+i, r-k+i-1}`.
pub fn column_to_y(c: &Column) -> Result<YVariable> {
    let (i, r) = c
        .fundamental_params()
        .ok_or_else(|| Error::NotFundamental(c.entries().to_vec()))?;
    let (i, r, k) = (i64::from(i), i64::from(r), i64::from(c.k()));
    YVariable::new(k - r + i, r - k + i - 1)
}

/// A product of `Y`-variables with positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct DominantMonomial {
    factors: BTreeMap<YVariable, u32>,
}

impl DominantMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_factors<I: IntoIterator<Item = (YVariable, u32)>>(it: I) -> Self {
        let mut m = Self::one();
        for (v, e) in it {
            m.mul_var(v, e);
        }
        m
    }

    pub fn mul_var(&mut self, v: YVariable, exp: u32) {
        if exp > 0 {
            *self.factors.entry(v).or_insert(0) += exp;
        }
    }

    pub fn factors(&self) -> &BTreeMap<YVariable, u32> {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Triples `(i, s, exponent)` in increasing `(i, s)` order.
    pub fn triples(&self) -> Vec<(i64, i64, u32)> {
        self.factors.iter().map(|(v, &e)| (v.node, v.shift, e)).collect()
    }
}

impl fmt::Display for DominantMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (v, e) in &self.factors {
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialRepr {
    factors: Vec<(i64, i64, u32)>,
}

impl Serialize for DominantMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MonomialRepr {
            factors: self.triples(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DominantMonomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = MonomialRepr::deserialize(d)?;
        let mut m = DominantMonomial::one();
        for (i, s, e) in repr.factors {
            let v = YVariable::new(i, s).map_err(serde::de::Error::custom)?;
            m.mul_var(v, e);
        }
        Ok(m)
    }
}

pub fn multisegment_to_monomial(m: &Multisegment) -> DominantMonomial {
    DominantMonomial::from_factors(m.iter().map(|s| (segment_to_y(s), 1)))
}

/// Segments sorted ascending by `(node, shift)` of their variables.
pub fn monomial_to_multisegment(mono: &DominantMonomial) -> Result<Multisegment> {
    let mut segs = Vec::new();
    for (v, &e) in mono.factors() {
        let s = y_to_segment(*v)?;
        segs.extend(std::iter::repeat_n(s, e as usize));
    }
    Ok(Multisegment::new(segs))
}

/// Union of the fundamental columns of the segments.
pub fn multisegment_to_tableau(m: &Multisegment, k: u32, n: u32) -> Result<Tableau> {
    let cols = m
        .iter()
        .map(|s| segment_to_column(s, k, n))
        .collect::<Result<Vec<_>>>()?;
    Tableau::from_columns(k, n, &cols)
}

/// Columns of a multisegment in ascending lex order (begin descending, end
/// ascending).
pub fn multisegment_to_columns(m: &Multisegment, k: u32, n: u32) -> Result<Vec<Column>> {
    let mut cols = m
        .iter()
        .map(|s| segment_to_column(s, k, n))
        .collect::<Result<Vec<_>>>()?;
    cols.sort();
    Ok(cols)
}

/// The multisegment of the small gap representative, in lex column order.
pub fn tableau_to_multisegment(t: &Tableau) -> Result<Multisegment> {
    t.small_gap_columns()?.iter().map(column_to_segment).collect()
}
