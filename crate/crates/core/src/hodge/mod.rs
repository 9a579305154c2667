//! Hodge diamonds with possibly unknown entries.
//!
//! Row `r` of the displayed diamond (top to bottom) holds the cells with
//! `p + q = r`, listed left to right with `p` decreasing. A diamond of complex
//! dimension `m` has `2m + 1` rows.

mod fixtures;

use std::fmt;

use serde_json::{json, Value};

pub use fixtures::{fixture, fixture_names, resolve_diamond};

use crate::error::{Error, Result};

/// One cell of a diamond.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Entry {
    Known(u64),
    Unknown,
}

impl Entry {
    pub fn known(self) -> Option<u64> {
        match self {
            Entry::Known(v) => Some(v),
            Entry::Unknown => None,
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Known(v) => write!(f, "{v}"),
            Entry::Unknown => f.write_str("?"),
        }
    }
}

impl From<u64> for Entry {
    fn from(v: u64) -> Self {
        Entry::Known(v)
    }
}

/// Cells `(p, q)` of displayed row `r` for a diamond of dimension `m`.
pub fn row_cells(m: usize, r: usize) -> Vec<(usize, usize)> {
    let hi = r.min(m);
    let lo = r.saturating_sub(m);
    (lo..=hi).rev().map(|p| (p, r - p)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeDiamond {
    dim: usize,
    /// `cells[p][q]`
    cells: Vec<Vec<Entry>>,
    middle_row_cells: Vec<(usize, usize)>,
    smooth_symmetric: bool,
}

impl HodgeDiamond {
    /// Diamond of dimension `dim` with every entry zero.
    pub fn zeros(dim: usize) -> Self {
        HodgeDiamond {
            dim,
            cells: vec![vec![Entry::Known(0); dim + 1]; dim + 1],
            middle_row_cells: row_cells(dim, dim),
            smooth_symmetric: false,
        }
    }

    /// Builds a diamond from its displayed rows. The middle row defaults to
    /// the cells with `p + q = dim`.
    pub fn from_rows(rows: Vec<Vec<Entry>>) -> Result<Self> {
        if rows.len().is_multiple_of(2) {
            return Err(Error::Format(format!("a diamond has an odd number of rows, got {}", rows.len())));
        }
        let m = rows.len() / 2;
        let mut d = Self::zeros(m);
        for (r, row) in rows.into_iter().enumerate() {
            let cells = row_cells(m, r);
            if row.len() != cells.len() {
                return Err(Error::Format(format!(
                    "row {r} of a dimension-{m} diamond has {} entries, expected {}",
                    row.len(),
                    cells.len()
                )));
            }
            for ((p, q), e) in cells.into_iter().zip(row) {
                d.cells[p][q] = e;
            }
        }
        Ok(d)
    }

    /// Convenience constructor for fully known rows.
    pub fn from_known_rows(rows: &[&[u64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| Entry::Known(v)).collect()).collect())
    }

    /// Replaces the annotated middle row.
    pub fn with_middle_row(mut self, cells: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(p, q)) = cells.iter().find(|&&(p, q)| p > self.dim || q > self.dim) {
            return Err(Error::Format(format!("cell ({p},{q}) is outside a dimension-{} diamond", self.dim)));
        }
        self.middle_row_cells = cells;
        Ok(self)
    }

    /// Flags the diamond as that of a smooth projective variety. Fully known
    /// diamonds are checked for `h^{p,q} = h^{q,p} = h^{m-p,m-q}`.
    pub fn smooth_symmetric(mut self) -> Result<Self> {
        if self.is_fully_known() {
            let m = self.dim;
            for p in 0..=m {
                for q in 0..=m {
                    let v = self.cells[p][q];
                    if v != self.cells[q][p] || v != self.cells[m - p][m - q] {
                        return Err(Error::InvalidSpec(format!("h^{{{p},{q}}} breaks Hodge symmetry")));
                    }
                }
            }
        }
        self.smooth_symmetric = true;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_smooth_symmetric(&self) -> bool {
        self.smooth_symmetric
    }

    pub fn get(&self, p: usize, q: usize) -> Entry {
        self.cells[p][q]
    }

    pub fn set(&mut self, p: usize, q: usize, e: Entry) {
        self.cells[p][q] = e;
    }

    pub fn middle_row_cells(&self) -> &[(usize, usize)] {
        &self.middle_row_cells
    }

    pub fn rows(&self) -> Vec<Vec<Entry>> {
        (0..=2 * self.dim).map(|r| row_cells(self.dim, r).into_iter().map(|(p, q)| self.cells[p][q]).collect()).collect()
    }

    pub fn unknown_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..=2 * self.dim {
            for (p, q) in row_cells(self.dim, r) {
                if self.cells[p][q] == Entry::Unknown {
                    out.push((p, q));
                }
            }
        }
        out
    }

    pub fn is_fully_known(&self) -> bool {
        self.cells.iter().flatten().all(|e| *e != Entry::Unknown)
    }

    fn first_unknown(&self) -> Result<()> {
        match self.unknown_cells().first() {
            Some(&(p, q)) => Err(Error::UnknownEntry { p, q }),
            None => Ok(()),
        }
    }

    /// Sum of all entries.
    pub fn entry_sum(&self) -> Result<u64> {
        self.first_unknown()?;
        Ok(self.cells.iter().flatten().filter_map(|e| e.known()).sum())
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<Value>> = self
            .rows()
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|e| match e {
                        Entry::Known(v) => json!(v),
                        Entry::Unknown => json!("?"),
                    })
                    .collect()
            })
            .collect();
        let middle: Vec<[usize; 2]> = self.middle_row_cells.iter().map(|&(p, q)| [p, q]).collect();
        json!({"dim": self.dim, "rows": rows, "middle_row_cells": middle})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Format(format!("diamond JSON: {what}"));
        let rows = v.get("rows").and_then(Value::as_array).ok_or_else(|| bad("missing `rows`"))?;
        let rows = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("rows must be arrays"))?
                    .iter()
                    .map(|e| match e {
                        Value::String(s) if s == "?" => Ok(Entry::Unknown),
                        other => other.as_u64().map(Entry::Known).ok_or_else(|| bad("entries are naturals or \"?\"")),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let d = Self::from_rows(rows)?;
        if let Some(dim) = v.get("dim") {
            if dim.as_u64() != Some(d.dim as u64) {
                return Err(bad("`dim` disagrees with the number of rows"));
            }
        }
        match v.get("middle_row_cells") {
            None => Ok(d),
            Some(cells) => {
                let cells = cells
                    .as_array()
                    .ok_or_else(|| bad("`middle_row_cells` must be an array"))?
                    .iter()
                    .map(|c| match c.as_array().map(|a| a.as_slice()) {
                        Some([p, q]) => match (p.as_u64(), q.as_u64()) {
                            (Some(p), Some(q)) => Ok((p as usize, q as usize)),
                            _ => Err(bad("cells are [p, q] pairs")),
                        },
                        _ => Err(bad("cells are [p, q] pairs")),
                    })
                    .collect::<Result<Vec<_>>>()?;
                d.with_middle_row(cells)
            }
        }
    }
}

impl fmt::Display for HodgeDiamond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_diamond(self))
    }
}

/// Diamond of `P^n x (P^n)^*`: `h^{p,p} = n + 1 - |n - p|`, zero elsewhere.
pub fn diamond_pn_pn_dual(n: usize) -> Result<HodgeDiamond> {
    if n == 0 {
        return Err(Error::InvalidSpec("n must be at least 1".into()));
    }
    let mut d = HodgeDiamond::zeros(2 * n);
    for p in 0..=2 * n {
        d.cells[p][p] = Entry::Known((n + 1 - n.abs_diff(p)) as u64);
    }
    d.smooth_symmetric()
}

/// `sum (-1)^{p+q} h^{p,q}`.
pub fn euler_from_diamond(d: &HodgeDiamond) -> Result<i64> {
    d.first_unknown()?;
    let mut chi = 0i64;
    for p in 0..=d.dim {
        for q in 0..=d.dim {
            let v = d.cells[p][q].known().unwrap() as i64;
            chi += if (p + q) % 2 == 0 { v } else { -v };
        }
    }
    Ok(chi)
}

/// Hodge numbers of a hyperplane section as far as the Lefschetz theorem
/// determines them: rows below the middle are copied, rows above follow by
/// Serre duality and the middle row is left unknown.
pub fn lefschetz_restrict(d: &HodgeDiamond) -> Result<HodgeDiamond> {
    if d.dim == 0 {
        return Err(Error::InvalidSpec("cannot restrict a zero-dimensional diamond".into()));
    }
    d.first_unknown()?;
    let m = d.dim - 1;
    let mut out = HodgeDiamond::zeros(m);
    for p in 0..=m {
        for q in 0..=m {
            out.cells[p][q] = match (p + q).cmp(&m) {
                std::cmp::Ordering::Less => d.cells[p][q],
                std::cmp::Ordering::Equal => Entry::Unknown,
                std::cmp::Ordering::Greater => d.cells[m - p][m - q],
            };
        }
    }
    out.smooth_symmetric = d.smooth_symmetric;
    Ok(out)
}

/// True iff every annotated middle-row cell is zero, which rules out
/// vanishing cycles on the fibre.
pub fn vanishing_cycle_obstruction(d: &HodgeDiamond) -> Result<bool> {
    let mut all_zero = true;
    for &(p, q) in &d.middle_row_cells {
        match d.cells[p][q] {
            Entry::Unknown => return Err(Error::UnknownEntry { p, q }),
            Entry::Known(v) => all_zero &= v == 0,
        }
    }
    Ok(all_zero)
}

/// Centered text layout with `?` for unknown entries.
///
/// Entries are right-aligned in fields of a common odd width, so consecutive
/// rows interleave at exactly half a field.
pub fn render_diamond(d: &HodgeDiamond) -> String {
    let rows = d.rows();
    let widest = rows.iter().flatten().map(|e| e.to_string().len()).max().unwrap_or(1);
    let width = widest | 1;
    let half = width.div_ceil(2);
    let m = d.dim;
    let lines: Vec<String> = rows
        .iter()
        .map(|row| {
            let indent = (m + 1 - row.len()) * half;
            let cells: Vec<String> = row.iter().map(|e| format!("{:>width$}", e.to_string())).collect();
            format!("{}{}", " ".repeat(indent), cells.join(" "))
        })
        .collect();
    let common = lines.iter().map(|l| l.len() - l.trim_start().len()).min().unwrap_or(0);
    let mut out = String::new();
    for l in lines {
        out.push_str(l[common..].trim_end());
        out.push('\n');
    }
    out
}
