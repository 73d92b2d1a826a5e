//! Partitions, Young diagrams, hook lengths and standard Young tableaux.
//!
//! Everything here is exact. Bounds are [`Rational`] values backed by
//! arbitrary-precision integers and representation dimensions are
//! [`BigUint`]s; floating point only enters at the final logarithm of
//! [`YoungDiagram::entropy_lower_bound`].
//!
//! Boxes are addressed 1-based as `(row, col)`, tableau entries run over
//! `1..=N`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// A box `(row, col)` of a Young diagram, both 1-based.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    /// Content `col - row`.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A partition of `N` drawn as left-justified rows of boxes.
///
/// `rows` holds `r_1 >= r_2 >= ... > 0`; `columns` is the conjugate
/// partition `c_1 >= c_2 >= ...`, derived at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YoungDiagram {
    rows: Vec<usize>,
    columns: Vec<usize>,
}

fn conjugate_of(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|j| parts.iter().take_while(|&&r| r >= j).count())
        .collect()
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "row lengths must be positive: {rows:?}"
            )));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "row lengths must be weakly decreasing: {rows:?}"
            )));
        }
        let columns = conjugate_of(&rows);
        Ok(Self { rows, columns })
    }

    pub fn empty() -> Self {
        Self {
            rows: Vec::new(),
            columns: Vec::new(),
        }
    }

    /// Single row `(n)`.
    pub fn row(n: usize) -> Self {
        Self::new(if n == 0 { vec![] } else { vec![n] }).expect("row diagram")
    }

    /// Single column `(1, ..., 1)`.
    pub fn column(n: usize) -> Self {
        Self::new(vec![1; n]).expect("column diagram")
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    pub fn n_boxes(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Number of rows, `c_1`.
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns, `r_1`.
    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    /// Length of row `i` (1-based); zero past the last row.
    pub fn row_len(&self, i: usize) -> usize {
        i.checked_sub(1).and_then(|i| self.rows.get(i)).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based); zero past the last column.
    pub fn col_len(&self, j: usize) -> usize {
        j.checked_sub(1).and_then(|j| self.columns.get(j)).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Boxes in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (1..=r).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn conjugate(&self) -> Self {
        Self {
            rows: self.columns.clone(),
            columns: self.rows.clone(),
        }
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        if !self.contains(cell) {
            return Err(Error::BoxOutsideDiagram(cell));
        }
        Ok(self.row_len(cell.row) - cell.col + self.col_len(cell.col) - cell.row + 1)
    }

    /// Boxes at the end of both their row and column, by increasing column.
    pub fn removable_boxes(&self) -> Vec<Cell> {
        (1..=self.n_cols())
            .filter(|&l| self.col_len(l) > self.col_len(l + 1))
            .map(|l| Cell::new(self.col_len(l), l))
            .collect()
    }

    pub fn is_removable(&self, cell: Cell) -> bool {
        self.contains(cell) && self.row_len(cell.row) == cell.col && self.col_len(cell.col) == cell.row
    }

    /// The diagram with a removable box deleted.
    pub fn without(&self, cell: Cell) -> Result<Self> {
        if !self.is_removable(cell) {
            return Err(Error::NotRemovable(cell));
        }
        let mut rows = self.rows.clone();
        rows[cell.row - 1] -= 1;
        if rows[cell.row - 1] == 0 {
            rows.pop();
        }
        Self::new(rows)
    }

    /// The product over the boxes above a removable box `(c_l, l)` of
    /// `1 - 1/h`, i.e. the largest squared Schmidt coefficient reachable
    /// with the last particle in that box.
    pub fn box_bound(&self, cell: Cell) -> Result<Rational> {
        if !self.is_removable(cell) {
            return Err(Error::NotRemovable(cell));
        }
        let mut acc = Rational::one();
        for i in 1..cell.row {
            let h = self.hook_length(Cell::new(i, cell.col))?;
            acc *= Rational::new(BigInt::from(h - 1), BigInt::from(h));
        }
        Ok(acc)
    }

    /// Per-box bounds for every removable box, by increasing column.
    pub fn box_bounds(&self) -> Result<Vec<BoxBound>> {
        if self.n_boxes() < 2 {
            return Err(Error::TooFewBoxes);
        }
        self.removable_boxes()
            .into_iter()
            .map(|cell| {
                Ok(BoxBound {
                    cell,
                    value: self.box_bound(cell)?,
                })
            })
            .collect()
    }

    /// Supremum of the largest squared Schmidt coefficient across the
    /// last tensor factor over normalized states of the sector: the
    /// maximum of [`box_bound`](Self::box_bound) over removable boxes.
    /// Ties go to the smallest column.
    pub fn entanglement_bound(&self) -> Result<BoxBound> {
        let mut best: Option<BoxBound> = None;
        for candidate in self.box_bounds()? {
            if best.as_ref().is_none_or(|b| candidate.value > b.value) {
                best = Some(candidate);
            }
        }
        Ok(best.expect("nonempty diagram has a removable box"))
    }

    /// Lower bound on the one-factor entanglement entropy, evaluated as
    /// the minimum over removable boxes of `sum ln(h / (h - 1))`.
    pub fn entropy_lower_bound(&self) -> Result<f64> {
        if self.n_boxes() < 2 {
            return Err(Error::TooFewBoxes);
        }
        let mut best = f64::INFINITY;
        for cell in self.removable_boxes() {
            let mut s = 0.0;
            for i in 1..cell.row {
                let h = self.hook_length(Cell::new(i, cell.col))? as f64;
                s += (h / (h - 1.0)).ln();
            }
            best = best.min(s);
        }
        Ok(best)
    }

    pub fn hook_product(&self) -> BigUint {
        self.cells()
            .map(|c| BigUint::from(self.hook_length(c).expect("own cell")))
            .product()
    }

    /// `dim S^ν = N! / prod h`.
    pub fn dim_symmetric_irrep(&self) -> BigUint {
        let (q, r) = factorial(self.n_boxes()).div_rem(&self.hook_product());
        assert!(r.is_zero(), "hook product does not divide N! for {self}");
        q
    }

    /// `dim V^ν = prod (d + j - i) / h` over boxes; zero when `d < c_1`.
    pub fn dim_unitary_irrep(&self, d: usize) -> BigUint {
        if d < self.n_rows() {
            return BigUint::zero();
        }
        let num: BigUint = self.cells().map(|c| BigUint::from(d + c.col - c.row)).product();
        let (q, r) = num.div_rem(&self.hook_product());
        assert!(r.is_zero(), "hook product does not divide content product for {self}");
        q
    }

    /// `(prod r_i!)(prod c_j!) / prod h`, the Young projection prefactor.
    pub fn young_normalization(&self) -> Rational {
        let num: BigUint = self
            .rows
            .iter()
            .chain(self.columns.iter())
            .map(|&k| factorial(k))
            .product();
        Rational::new(num.into(), self.hook_product().into())
    }

    /// True when a content vector (multiset of local basis labels) can
    /// appear as a weight of `V^ν`: its sorted multiplicities are dominated
    /// by the row lengths.
    pub fn dominates_weight(&self, multiplicities: &[usize]) -> bool {
        let mut m: Vec<usize> = multiplicities.iter().copied().filter(|&x| x > 0).collect();
        m.sort_unstable_by(|a, b| b.cmp(a));
        if m.iter().sum::<usize>() != self.n_boxes() {
            return false;
        }
        let mut lhs = 0;
        let mut rhs = 0;
        for (i, part) in m.iter().enumerate() {
            lhs += self.rows.get(i).copied().unwrap_or(0);
            rhs += part;
            if rhs > lhs {
                return false;
            }
        }
        true
    }

    /// All standard tableaux, ordered lexicographically by row-reading word.
    pub fn standard_tableaux(&self) -> Vec<StandardTableau> {
        let n = self.n_boxes();
        let mut out = Vec::new();
        let mut filling: Vec<Vec<usize>> = self.rows.iter().map(|&r| Vec::with_capacity(r)).collect();
        fill_tableaux(self, &mut filling, 1, n, &mut out);
        out.sort_by_cached_key(|t| t.reading_word());
        out
    }

    pub fn row_ordered_tableau(&self) -> StandardTableau {
        let mut next = 0;
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                (0..r)
                    .map(|_| {
                        next += 1;
                        next
                    })
                    .collect()
            })
            .collect();
        StandardTableau::from_rows(rows).expect("row-ordered filling is standard")
    }

    pub fn column_ordered_tableau(&self) -> StandardTableau {
        self.conjugate().row_ordered_tableau().transpose()
    }
}

fn fill_tableaux(
    diagram: &YoungDiagram,
    filling: &mut [Vec<usize>],
    next: usize,
    n: usize,
    out: &mut Vec<StandardTableau>,
) {
    if next > n {
        out.push(StandardTableau::from_rows_unchecked(diagram.clone(), filling.to_vec()));
        return;
    }
    for i in 0..filling.len() {
        let len = filling[i].len();
        let fits_row = len < diagram.rows[i];
        let fits_above = i == 0 || filling[i - 1].len() > len;
        if fits_row && fits_above {
            filling[i].push(next);
            fill_tableaux(diagram, filling, next + 1, n, out);
            filling[i].pop();
        }
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<YoungDiagram> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if remaining == 0 {
            out.push(YoungDiagram::new(prefix.clone()).expect("generated partition"));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        let rows = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("{p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }
}

/// Value of the per-box bound together with the removable box it belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxBound {
    pub cell: Cell,
    pub value: Rational,
}

impl BoxBound {
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.value)
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// A filling of a Young diagram with `1..=N`, increasing along rows and
/// down columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    diagram: YoungDiagram,
    rows: Vec<Vec<usize>>,
    /// `positions[e - 1]` is the box holding entry `e`.
    positions: Vec<Cell>,
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let diagram =
            YoungDiagram::new(rows.iter().map(Vec::len).collect()).map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let n = diagram.n_boxes();
        let mut seen = vec![false; n];
        for &e in rows.iter().flatten() {
            if e == 0 || e > n || std::mem::replace(&mut seen[e - 1], true) {
                return Err(Error::InvalidTableau(format!(
                    "entries must be a permutation of 1..={n}: {rows:?}"
                )));
            }
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!("row not increasing: {rows:?}")));
            }
        }
        for pair in rows.windows(2) {
            if pair[1].iter().zip(&pair[0]).any(|(below, above)| below <= above) {
                return Err(Error::InvalidTableau(format!("column not increasing: {rows:?}")));
            }
        }
        Ok(Self::from_rows_unchecked(diagram, rows))
    }

    fn from_rows_unchecked(diagram: YoungDiagram, rows: Vec<Vec<usize>>) -> Self {
        let mut positions = vec![Cell::new(0, 0); diagram.n_boxes()];
        for (i, row) in rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                positions[e - 1] = Cell::new(i + 1, j + 1);
            }
        }
        Self {
            diagram,
            rows,
            positions,
        }
    }

    /// The tableau with `N` in the removable box `cell` and `1..N-1`
    /// filled column by column everywhere else.
    pub fn column_ordered_with_max_at(diagram: &YoungDiagram, cell: Cell) -> Result<Self> {
        if !diagram.is_removable(cell) {
            return Err(Error::NotRemovable(cell));
        }
        let n = diagram.n_boxes();
        let mut rows: Vec<Vec<usize>> = diagram.rows.iter().map(|&r| vec![0; r]).collect();
        let mut next = 0;
        for j in 1..=diagram.n_cols() {
            for i in 1..=diagram.col_len(j) {
                if Cell::new(i, j) != cell {
                    next += 1;
                    rows[i - 1][j - 1] = next;
                }
            }
        }
        rows[cell.row - 1][cell.col - 1] = n;
        Self::from_rows(rows)
    }

    pub fn diagram(&self) -> &YoungDiagram {
        &self.diagram
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n_boxes(&self) -> usize {
        self.positions.len()
    }

    pub fn entry(&self, cell: Cell) -> Option<usize> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
            .copied()
    }

    pub fn position(&self, entry: usize) -> Option<Cell> {
        self.positions.get(entry.checked_sub(1)?).copied()
    }

    /// Entries of row `i` (1-based).
    pub fn row_entries(&self, i: usize) -> Result<&[usize]> {
        self.rows
            .get(i.wrapping_sub(1))
            .map(Vec::as_slice)
            .ok_or(Error::IndexOutOfRange {
                what: "row",
                index: i,
                max: self.rows.len(),
            })
    }

    /// Entries of column `j` (1-based), top to bottom.
    pub fn column_entries(&self, j: usize) -> Result<Vec<usize>> {
        if j == 0 || j > self.diagram.n_cols() {
            return Err(Error::IndexOutOfRange {
                what: "column",
                index: j,
                max: self.diagram.n_cols(),
            });
        }
        Ok(self
            .rows
            .iter()
            .take_while(|row| row.len() >= j)
            .map(|row| row[j - 1])
            .collect())
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.concat()
    }

    pub fn transpose(&self) -> Self {
        let columns = (1..=self.diagram.n_cols())
            .map(|j| self.column_entries(j).expect("own column"))
            .collect();
        Self::from_rows_unchecked(self.diagram.conjugate(), columns)
    }

    pub fn is_row_ordered(&self) -> bool {
        self.reading_word().iter().enumerate().all(|(i, &e)| e == i + 1)
    }

    pub fn is_column_ordered(&self) -> bool {
        self.transpose().is_row_ordered()
    }

    /// Erase the box holding `N`.
    pub fn remove_largest(&self) -> Self {
        let n = self.n_boxes();
        assert!(n >= 1, "cannot remove a box from the empty tableau");
        let cell = self.positions[n - 1];
        let mut rows = self.rows.clone();
        rows[cell.row - 1].pop();
        if rows[cell.row - 1].is_empty() {
            rows.pop();
        }
        let diagram = self
            .diagram
            .without(cell)
            .expect("largest entry sits in a removable box");
        Self::from_rows_unchecked(diagram, rows)
    }

    /// Split at `k`: `t_A` keeps entries `1..=k`; `t_B` keeps `k+1..=N`
    /// relabelled to `1..=N-k`, and exists only when those boxes form a
    /// translate of a Young diagram.
    pub fn split(&self, k: usize) -> Result<(Self, Option<Self>)> {
        let n = self.n_boxes();
        if k == 0 || k >= n {
            return Err(Error::IndexOutOfRange {
                what: "split point",
                index: k,
                max: n.saturating_sub(1),
            });
        }
        let a_rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|row| row.iter().copied().filter(|&e| e <= k).collect::<Vec<_>>())
            .filter(|row| !row.is_empty())
            .collect();
        let t_a = Self::from_rows(a_rows).expect("restriction to 1..=k is standard");

        let mut by_row: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for e in k + 1..=n {
            let c = self.positions[e - 1];
            by_row.entry(c.row).or_default().push((c.col, e - k));
        }
        let top = *by_row.keys().next().expect("nonempty remainder");
        let left = by_row.values().flatten().map(|&(c, _)| c).min().expect("nonempty");
        let mut b_rows = Vec::with_capacity(by_row.len());
        for (offset, (&row, cells)) in by_row.iter_mut().enumerate() {
            if row != top + offset {
                return Ok((t_a, None));
            }
            cells.sort_unstable();
            let contiguous = cells.iter().enumerate().all(|(idx, &(col, _))| col == left + idx);
            if !contiguous {
                return Ok((t_a, None));
            }
            b_rows.push(cells.iter().map(|&(_, e)| e).collect::<Vec<_>>());
        }
        Ok((t_a, Self::from_rows(b_rows).ok()))
    }

    /// Content of the box holding `k + 1` minus content of the box holding `k`.
    pub fn axial_distance(&self, k: usize) -> Result<i64> {
        let n = self.n_boxes();
        if k == 0 || k >= n {
            return Err(Error::IndexOutOfRange {
                what: "transposition",
                index: k,
                max: n.saturating_sub(1),
            });
        }
        Ok(self.positions[k].content() - self.positions[k - 1].content())
    }

    /// The tableau with `k` and `k + 1` interchanged, if that is standard.
    pub fn swap_adjacent(&self, k: usize) -> Option<Self> {
        let r = self.axial_distance(k).ok()?;
        if r.abs() < 2 {
            return None;
        }
        let (a, b) = (self.positions[k - 1], self.positions[k]);
        let mut rows = self.rows.clone();
        rows[a.row - 1][a.col - 1] = k + 1;
        rows[b.row - 1][b.col - 1] = k;
        Some(Self::from_rows_unchecked(self.diagram.clone(), rows))
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let items: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                format!("[{}]", items.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<Vec<usize>> =
            serde_json::from_str(s.trim()).map_err(|e| Error::InvalidTableau(format!("{s:?}: {e}")))?;
        Self::from_rows(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn tab(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn hook_lengths() {
        let nu = yd(&[3, 2, 1]);
        assert_eq!(nu.hook_length(Cell::new(1, 1)).unwrap(), 5);
        assert_eq!(nu.hook_length(Cell::new(2, 1)).unwrap(), 3);
        assert_eq!(yd(&[1]).hook_length(Cell::new(1, 1)).unwrap(), 1);
        assert_eq!(
            nu.hook_length(Cell::new(2, 3)),
            Err(Error::BoxOutsideDiagram(Cell::new(2, 3)))
        );
    }

    #[test]
    fn removable() {
        assert_eq!(
            yd(&[3, 2, 1]).removable_boxes(),
            vec![Cell::new(3, 1), Cell::new(2, 2), Cell::new(1, 3)]
        );
        assert_eq!(yd(&[1, 1, 1]).removable_boxes(), vec![Cell::new(3, 1)]);
        assert_eq!(yd(&[3]).removable_boxes(), vec![Cell::new(1, 3)]);
        assert_eq!(yd(&[3, 3, 2]).removable_boxes(), vec![Cell::new(3, 2), Cell::new(2, 3)]);
    }

    #[test]
    fn per_box_bounds() {
        let nu = yd(&[3, 2, 1]);
        assert_eq!(nu.box_bound(Cell::new(3, 1)).unwrap(), q(8, 15));
        assert_eq!(nu.box_bound(Cell::new(2, 2)).unwrap(), q(2, 3));
        assert_eq!(nu.box_bound(Cell::new(1, 3)).unwrap(), q(1, 1));
        assert_eq!(yd(&[2, 2, 2, 1]).box_bound(Cell::new(4, 1)).unwrap(), q(2, 5));
        assert_eq!(yd(&[3, 3, 3, 2, 1]).box_bound(Cell::new(5, 1)).unwrap(), q(8, 21));
        assert_eq!(nu.box_bound(Cell::new(1, 1)), Err(Error::NotRemovable(Cell::new(1, 1))));
    }

    #[test]
    fn maximum_bound_and_witness() {
        let b = yd(&[3, 2, 1]).entanglement_bound().unwrap();
        assert_eq!((b.value, b.cell), (q(1, 1), Cell::new(1, 3)));
        let b = yd(&[3, 3, 1]).entanglement_bound().unwrap();
        assert_eq!((b.value, b.cell), (q(3, 5), Cell::new(3, 1)));
        let b = yd(&[1, 1, 1, 1]).entanglement_bound().unwrap();
        assert_eq!((b.value, b.cell), (q(1, 4), Cell::new(4, 1)));
        assert_eq!(yd(&[1]).entanglement_bound(), Err(Error::TooFewBoxes));
    }

    #[test]
    fn ties_go_to_smallest_column() {
        for n in 2..=9 {
            for nu in partitions(n) {
                let bounds = nu.box_bounds().unwrap();
                let best = nu.entanglement_bound().unwrap();
                let first_max = bounds.iter().find(|b| b.value == best.value).unwrap();
                assert_eq!(first_max.cell, best.cell, "{nu}");
            }
        }
    }

    #[test]
    fn entropy_bounds() {
        assert!((yd(&[1, 1, 1]).entropy_lower_bound().unwrap() - 3f64.ln()).abs() < 1e-14);
        assert_eq!(yd(&[3]).entropy_lower_bound().unwrap(), 0.0);
        assert!((yd(&[3, 3, 1]).entropy_lower_bound().unwrap() - (5.0f64 / 3.0).ln()).abs() < 1e-14);
    }

    #[test]
    fn dimensions() {
        assert_eq!(yd(&[2, 1]).dim_symmetric_irrep(), 2u32.into());
        assert_eq!(yd(&[5]).dim_symmetric_irrep(), 1u32.into());
        assert_eq!(yd(&[3, 2, 1]).dim_symmetric_irrep(), 16u32.into());
        assert_eq!(yd(&[2, 1]).dim_unitary_irrep(2), 2u32.into());
        assert_eq!(yd(&[1, 1, 1]).dim_unitary_irrep(3), 1u32.into());
        assert_eq!(yd(&[2, 2]).dim_unitary_irrep(2), 1u32.into());
        assert_eq!(yd(&[2, 1]).dim_unitary_irrep(3), 8u32.into());
        assert_eq!(yd(&[1, 1, 1]).dim_unitary_irrep(2), 0u32.into());
    }

    #[test]
    fn young_prefactor() {
        assert_eq!(yd(&[2, 1]).young_normalization(), q(4, 3));
        assert_eq!(yd(&[4]).young_normalization(), q(1, 1));
        assert_eq!(yd(&[1, 1]).young_normalization(), q(1, 1));
    }

    #[test]
    fn enumeration() {
        let ts = yd(&[2, 1]).standard_tableaux();
        assert_eq!(ts, vec![tab("[[1,2],[3]]"), tab("[[1,3],[2]]")]);
        assert_eq!(yd(&[4]).standard_tableaux().len(), 1);
        assert_eq!(yd(&[2, 2]).standard_tableaux().len(), 2);
        let ts = yd(&[3, 2]).standard_tableaux();
        assert!(ts[0].is_row_ordered());
        assert!(ts.iter().any(StandardTableau::is_column_ordered));
    }

    #[test]
    fn ordered_tableaux() {
        let nu = yd(&[2, 2, 1]);
        assert_eq!(nu.row_ordered_tableau(), tab("[[1,2],[3,4],[5]]"));
        assert_eq!(nu.column_ordered_tableau(), tab("[[1,4],[2,5],[3]]"));
        assert!(nu.column_ordered_tableau().is_column_ordered());
        assert!(!nu.column_ordered_tableau().is_row_ordered());
    }

    #[test]
    fn removing_the_largest_entry() {
        assert_eq!(tab("[[1,3],[2]]").remove_largest(), tab("[[1],[2]]"));
        assert_eq!(tab("[[1,2],[3]]").remove_largest(), tab("[[1,2]]"));
        assert_eq!(
            yd(&[3, 2, 1]).row_ordered_tableau().remove_largest(),
            yd(&[3, 2]).row_ordered_tableau()
        );
        assert_eq!(tab("[[1]]").remove_largest().n_boxes(), 0);
    }

    #[test]
    fn splitting() {
        let (a, b) = tab("[[1,3],[2,4]]").split(2).unwrap();
        assert_eq!(a, tab("[[1],[2]]"));
        assert_eq!(b, Some(tab("[[1],[2]]")));
        let (a, b) = tab("[[1,3],[2]]").split(1).unwrap();
        assert_eq!(a, tab("[[1]]"));
        assert_eq!(b, None);
        let t = tab("[[1,3,5],[2,4],[6]]");
        assert_eq!(t.split(5).unwrap().1, Some(tab("[[1]]")));
        let (_, b) = tab("[[1,4,5],[2,6],[3]]").split(3).unwrap();
        assert_eq!(b, Some(tab("[[1,2],[3]]")));
        assert!(t.split(0).is_err());
        assert!(t.split(6).is_err());
    }

    #[test]
    fn axial_distances() {
        assert_eq!(tab("[[1,2],[3]]").axial_distance(1).unwrap(), 1);
        assert_eq!(tab("[[1,2],[3]]").axial_distance(2).unwrap(), -2);
        assert_eq!(tab("[[1,3],[2]]").axial_distance(2).unwrap(), 2);
        assert_eq!(tab("[[1,3],[2]]").axial_distance(1).unwrap(), -1);
        assert!(tab("[[1,3],[2]]").axial_distance(3).is_err());
    }

    #[test]
    fn adjacent_swaps() {
        assert_eq!(tab("[[1,2],[3]]").swap_adjacent(2), Some(tab("[[1,3],[2]]")));
        assert_eq!(tab("[[1,2],[3]]").swap_adjacent(1), None);
    }

    #[test]
    fn column_ordered_except_largest() {
        let nu = yd(&[3, 2, 1]);
        assert_eq!(
            StandardTableau::column_ordered_with_max_at(&nu, Cell::new(3, 1)).unwrap(),
            tab("[[1,3,5],[2,4],[6]]")
        );
        assert_eq!(
            StandardTableau::column_ordered_with_max_at(&nu, Cell::new(2, 2)).unwrap(),
            tab("[[1,4,5],[2,6],[3]]")
        );
        assert_eq!(
            StandardTableau::column_ordered_with_max_at(&nu, Cell::new(1, 3)).unwrap(),
            tab("[[1,4,6],[2,5],[3]]")
        );
    }

    #[test]
    fn parsing() {
        assert_eq!("3,2,1".parse::<YoungDiagram>().unwrap(), yd(&[3, 2, 1]));
        assert_eq!(yd(&[3, 2, 1]).to_string(), "3,2,1");
        assert!("1,2".parse::<YoungDiagram>().is_err());
        assert!("3,x".parse::<YoungDiagram>().is_err());
        assert!("".parse::<YoungDiagram>().is_err());
        assert!("3,0".parse::<YoungDiagram>().is_err());
        assert_eq!(tab("[[1,3],[2]]").to_string(), "[[1,3],[2]]");
        assert!("[[2,1]]".parse::<StandardTableau>().is_err());
        assert!("[[1,2],[2]]".parse::<StandardTableau>().is_err());
        assert!("[[1],[2,3]]".parse::<StandardTableau>().is_err());
    }

    #[test]
    fn weight_dominance() {
        let nu = yd(&[2, 1]);
        assert!(nu.dominates_weight(&[1, 1, 1]));
        assert!(nu.dominates_weight(&[1, 2]));
        assert!(!nu.dominates_weight(&[3, 0]));
        assert!(!nu.dominates_weight(&[2]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions(3), vec![yd(&[3]), yd(&[2, 1]), yd(&[1, 1, 1])]);
    }
}
