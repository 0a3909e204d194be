//! Rectangular semistandard tableaux with `k` rows and entries in `[1, n]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A strictly increasing column of `k` entries in `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Column {
    entries: Vec<u32>,
    k: u32,
    n: u32,
}

impl Column {
    pub fn new(k: u32, n: u32, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != k as usize {
            return Err(Error::ShapeMismatch(format!(
                "column has {} entries, expected {k}",
                entries.len()
            )));
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotSemistandard(format!(
                "column {entries:?} not strictly increasing"
            )));
        }
        if entries.first().is_some_and(|&e| e < 1) || entries.last().is_some_and(|&e| e > n) {
            return Err(Error::OutOfRange(format!("column {entries:?} leaves [1,{n}]")));
        }
        Ok(Column { entries, k, n })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `(i, r)` when the content is `[i, i+k] \ {r}` with `r` interior.
    pub fn fundamental_params(&self) -> Option<(u32, u32)> {
        let (first, last) = (*self.entries.first()?, *self.entries.last()?);
        if last != first + self.k {
            return None;
        }
        let missing = missing_numbers(&self.entries);
        match missing.as_slice() {
            [r] => Some((first, *r)),
            _ => None,
        }
    }

    pub fn is_fundamental(&self) -> bool {
        self.fundamental_params().is_some()
    }

    /// Consecutive entries: the column of a length-`k` segment.
    pub fn is_trivial(&self) -> bool {
        self.entries.windows(2).all(|w| w[1] == w[0] + 1)
    }

    fn require_fundamental(&self) -> Result<(u32, u32)> {
        self.fundamental_params()
            .ok_or_else(|| Error::NotFundamental(self.entries.clone()))
    }

    /// The segment `[a, b]` with `self = T_{a,b}`.
    pub fn segment_params(&self) -> Result<(i64, i64)> {
        let (i, r) = self.require_fundamental()?;
        Ok((1 - i64::from(i), i64::from(self.k) - i64::from(r)))
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

fn missing_numbers(entries: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    for w in entries.windows(2) {
        out.extend(w[0] + 1..w[1]);
    }
    out
}

/// `T_{a,b}`: entries `{1-a, ..., k-a+1} \ {k-b}`, with `n` taken as the
/// largest entry.
pub fn fundamental_column(a: i64, b: i64, k: u32) -> Result<Column> {
    let top = i64::from(k) - a + 1;
    let n = u32::try_from(top).map_err(|_| Error::OutOfRange(format!("T_({a},{b}) for k={k}")))?;
    fundamental_column_in(a, b, k, n)
}

/// `T_{a,b}` inside `[1, n]`.
pub fn fundamental_column_in(a: i64, b: i64, k: u32, n: u32) -> Result<Column> {
    if a > b {
        return Err(Error::InvalidSegment { begin: a, end: b });
    }
    if b - a + 1 >= i64::from(k) {
        return Err(Error::TooLong { begin: a, end: b, k });
    }
    let lo = 1 - a;
    let hi = i64::from(k) - a + 1;
    if lo < 1 || hi > i64::from(n) {
        return Err(Error::OutOfRange(format!(
            "T_({a},{b}) has entries in [{lo},{hi}], outside [1,{n}]"
        )));
    }
    let gap = i64::from(k) - b;
    let entries = (lo..=hi).filter(|&v| v != gap).map(|v| v as u32).collect();
    Column::new(k, n, entries)
}

/// Leclerc–Zelevinsky weak separation of two subsets of equal size.
pub fn weakly_separated(i: &[u32], j: &[u32]) -> bool {
    let i_minus_j: Vec<u32> = i.iter().copied().filter(|x| !j.contains(x)).collect();
    let j_minus_i: Vec<u32> = j.iter().copied().filter(|x| !i.contains(x)).collect();
    surrounds(&j_minus_i, &i_minus_j) || surrounds(&i_minus_j, &j_minus_i)
}

// Every element of `outer` lies strictly below or strictly above all of `inner`.
fn surrounds(outer: &[u32], inner: &[u32]) -> bool {
    let (Some(&lo), Some(&hi)) = (inner.iter().min(), inner.iter().max()) else {
        return true;
    };
    outer.iter().all(|&x| x < lo || x > hi)
}

/// Fast test that `T_{a,b}` and `T_{c,d}` are not weakly separated.
pub fn not_ws_small_gap(c1: &Column, c2: &Column) -> Result<bool> {
    let (a, b) = c1.segment_params()?;
    let (c, d) = c2.segment_params()?;
    let k = i64::from(c1.k);
    let has = |col: &Column, v: i64| u32::try_from(v).is_ok_and(|v| col.entries.contains(&v));
    Ok(has(c2, k - b) && has(c1, k - d) && (a - c) * (b - d) > 0)
}

/// Promotion of a single column in `[1, n]`.
pub fn promotion(c: &Column, n: u32) -> Result<Column> {
    let max = c.entries.last().copied().unwrap_or(0);
    if max > n {
        return Err(Error::OutOfRange(format!("column {c} exceeds n={n}")));
    }
    let entries = if max < n {
        c.entries.iter().map(|t| t + 1).collect()
    } else {
        let mut e = vec![1];
        e.extend(c.entries.iter().filter(|&&t| t < n).map(|t| t + 1));
        e
    };
    Column::new(c.k, n, entries)
}

/// A `k`-row rectangular tableau; rows weakly increase, columns strictly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    k: u32,
    n: u32,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(k: u32, n: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != k as usize {
            return Err(Error::ShapeMismatch(format!("{} rows, expected {k}", rows.len())));
        }
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::ShapeMismatch("rows of unequal length".into()));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::NotSemistandard(format!("row {} decreases", r + 1)));
            }
            if row.iter().any(|&v| v < 1 || v > n) {
                return Err(Error::OutOfRange(format!("row {} leaves [1,{n}]", r + 1)));
            }
        }
        for r in 1..rows.len() {
            if (0..width).any(|c| rows[r - 1][c] >= rows[r][c]) {
                return Err(Error::NotSemistandard(format!(
                    "column not strictly increasing between rows {r} and {}",
                    r + 1
                )));
            }
        }
        Ok(Tableau { k, n, rows })
    }

    /// The empty tableau `𝟙`.
    pub fn unit(k: u32, n: u32) -> Self {
        Tableau {
            k,
            n,
            rows: vec![Vec::new(); k as usize],
        }
    }

    pub fn from_column(c: &Column) -> Self {
        Tableau {
            k: c.k,
            n: c.n,
            rows: c.entries.iter().map(|&e| vec![e]).collect(),
        }
    }

    /// Union of the given columns (which must share `k`).
    pub fn from_columns(k: u32, n: u32, cols: &[Column]) -> Result<Self> {
        let mut t = Tableau::unit(k, n);
        for c in cols {
            if c.k != k || c.entries.iter().any(|&e| e > n) {
                return Err(Error::ShapeMismatch(format!("column {c} does not fit k={k}, n={n}")));
            }
            for (row, &e) in t.rows.iter_mut().zip(&c.entries) {
                row.push(e);
            }
        }
        for row in &mut t.rows {
            row.sort_unstable();
        }
        Ok(t)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn is_unit(&self) -> bool {
        self.width() == 0
    }

    pub fn columns(&self) -> Vec<Column> {
        (0..self.width())
            .map(|c| Column {
                entries: self.rows.iter().map(|r| r[c]).collect(),
                k: self.k,
                n: self.n,
            })
            .collect()
    }

    fn same_context(&self, other: &Tableau) -> Result<()> {
        if self.k != other.k || self.n != other.n {
            return Err(Error::ShapeMismatch(format!(
                "(k,n) = ({},{}) vs ({},{})",
                self.k, self.n, other.k, other.n
            )));
        }
        Ok(())
    }

    /// Row-wise multiset union. The result is again semistandard.
    pub fn union(&self, other: &Tableau) -> Result<Tableau> {
        self.same_context(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| merge_sorted(a, b))
            .collect();
        Ok(Tableau {
            k: self.k,
            n: self.n,
            rows,
        })
    }

    /// Whether `self` is a factor of `t` (row-wise multiset containment).
    pub fn is_factor_of(&self, t: &Tableau) -> bool {
        self.k == t.k
            && self.n == t.n
            && self.width() <= t.width()
            && self.rows.iter().zip(&t.rows).all(|(s, r)| multiset_sub(r, s).is_some())
    }

    /// `self / s`, row-wise multiset difference.
    pub fn quotient(&self, s: &Tableau) -> Result<Tableau> {
        self.same_context(s)?;
        if s.width() > self.width() {
            return Err(Error::NotAFactor);
        }
        let rows = self
            .rows
            .iter()
            .zip(&s.rows)
            .map(|(r, q)| multiset_sub(r, q).ok_or(Error::NotAFactor))
            .collect::<Result<Vec<_>>>()?;
        Ok(Tableau {
            k: self.k,
            n: self.n,
            rows,
        })
    }

    /// Removes the maximal trivial factor.
    pub fn reduce(&self) -> Tableau {
        let k = self.k as usize;
        let top = self.n as usize + 1;
        // counts[r][v] = multiplicity of value v in row r
        let mut counts = vec![vec![0usize; top + 1]; k];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                counts[r][v as usize] += 1;
            }
        }
        for start in 1..top {
            if start + k > top {
                break;
            }
            let x = (0..k).map(|r| counts[r][start + r]).min().unwrap_or(0);
            for (r, c) in counts.iter_mut().enumerate() {
                c[start + r] -= x;
            }
        }
        let rows = counts
            .iter()
            .map(|c| {
                c.iter()
                    .enumerate()
                    .flat_map(|(v, &m)| std::iter::repeat_n(v as u32, m))
                    .collect()
            })
            .collect();
        Tableau {
            k: self.k,
            n: self.n,
            rows,
        }
    }

    /// `S ∼ T`.
    pub fn equivalent(&self, other: &Tableau) -> bool {
        self.k == other.k && self.n == other.n && self.reduce() == other.reduce()
    }

    /// The fundamental columns, lex-sorted, whose union is equivalent to
    /// `self`.
    ///
    /// Adding a trivial column changes no difference between consecutive
    /// rows, and the fundamental column `[i, i+k] \ {i+p}` is the only kind
    /// of column that separates row `p` from row `p+1`. Counting how far row
    /// `p` runs ahead of row `p+1` therefore recovers the multiplicities.
    pub fn small_gap_columns(&self) -> Result<Vec<Column>> {
        let k = self.k;
        let mut out = Vec::new();
        if self.is_unit() || k < 2 {
            return Ok(out);
        }
        let count_le = |row: &[u32], bound: u32| row.partition_point(|&v| v <= bound);
        for p in 1..k {
            let upper = &self.rows[p as usize - 1];
            let lower = &self.rows[p as usize];
            for i in 1..=self.n {
                let ahead = count_le(upper, i + p - 1);
                let behind = count_le(lower, i + p);
                let mult = ahead
                    .checked_sub(behind)
                    .ok_or_else(|| Error::NotSemistandard(format!("rows {p} and {} cross", p + 1)))?;
                if mult > 0 {
                    let gap = i + p;
                    let entries: Vec<u32> = (i..=i + k).filter(|&v| v != gap).collect();
                    let col = Column::new(k, self.n, entries)?;
                    out.extend(std::iter::repeat_n(col, mult));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// The concatenated `i_T` and `j_T` sequences over the columns.
    pub fn ij_sequences(&self) -> IJSequences {
        let mut seqs = IJSequences::default();
        for c in self.columns() {
            let ij = column_ij(&c);
            seqs.i_seq.extend(ij.i_seq);
            seqs.j_seq.extend(ij.j_seq);
        }
        seqs
    }

    /// Whether the column sequence is that of a ladder multisegment.
    pub fn is_ladder_tableau(&self) -> Result<bool> {
        let cols = self.fundamental_columns()?;
        Ok(cols
            .windows(2)
            .all(|w| column_ij(&w[0]).j_seq.iter().max() < column_ij(&w[1]).j_seq.iter().min()))
    }

    /// Whether the column sequence is that of a regular multisegment.
    pub fn is_regular_tableau(&self) -> Result<bool> {
        self.fundamental_columns()?;
        let seqs = self.ij_sequences();
        Ok(all_distinct(&seqs.i_seq) && all_distinct(&seqs.j_seq))
    }

    fn fundamental_columns(&self) -> Result<Vec<Column>> {
        let cols = self.columns();
        if let Some(bad) = cols.iter().find(|c| !c.is_fundamental()) {
            return Err(Error::NotFundamental(bad.entries.clone()));
        }
        Ok(cols)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The `i` and `j` sequences of a tableau.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IJSequences {
    pub i_seq: Vec<u32>,
    pub j_seq: Vec<u32>,
}

/// `j` lists the numbers missing from the column; `i` counts up from the top
/// entry for as many steps.
pub fn column_ij(c: &Column) -> IJSequences {
    let j_seq = missing_numbers(&c.entries);
    let first = c.entries.first().copied().unwrap_or(0);
    let i_seq = (first..first + j_seq.len() as u32).collect();
    IJSequences { i_seq, j_seq }
}

fn all_distinct(v: &[u32]) -> bool {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

fn merge_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

// Sorted multiset difference `r - s`, `None` unless `s ⊆ r`.
fn multiset_sub(r: &[u32], s: &[u32]) -> Option<Vec<u32>> {
    let mut out = Vec::with_capacity(r.len());
    let mut j = 0;
    for &v in r {
        if j < s.len() && s[j] == v {
            j += 1;
        } else {
            if j < s.len() && s[j] < v {
                return None;
            }
            out.push(v);
        }
    }
    (j == s.len()).then_some(out)
}
