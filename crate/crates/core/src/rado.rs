//! The columns property of rational matrices, the coefficient conditions
//! for single alternating-type equations, and canonical verdicts on colored
//! solutions of `A y = 0`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::colorings::{Color, ColoringSpec};
use crate::error::{Error, Result};
use crate::forms::{k_subsets, IndexSet};
use crate::patterns::PatternLabel;

/// Largest column count accepted by [`columns_property`].
pub const MAX_COLUMNS: usize = 12;
/// Largest search space `N^M` accepted by [`search_solutions`].
pub const SEARCH_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: Vec<Vec<BigRational>>,
    cols: usize,
}

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(Error::domain("matrix needs at least one row and one column"));
        }
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::domain("matrix rows have different lengths"));
        }
        if rows.iter().any(|r| r.iter().all(Zero::is_zero)) {
            return Err(Error::domain("every matrix row needs a nonzero entry"));
        }
        Ok(RationalMatrix { rows, cols })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&a| BigRational::from_integer(BigInt::from(a))).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    /// Columns after clearing denominators row by row. Row scaling leaves
    /// every column relation unchanged.
    fn integer_columns(&self) -> Vec<Vec<BigInt>> {
        let scaled: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|r| {
                let l = r.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                r.iter().map(|q| q.numer() * (&l / q.denom())).collect()
            })
            .collect();
        (0..self.cols)
            .map(|j| scaled.iter().map(|r| r[j].clone()).collect())
            .collect()
    }

    fn column(&self, j: usize) -> Vec<BigRational> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    /// Exact product `A y`.
    pub fn apply(&self, y: &[BigInt]) -> Result<Vec<BigRational>> {
        if y.len() != self.cols {
            return Err(Error::domain("vector length does not match the column count"));
        }
        Ok(self
            .rows
            .iter()
            .map(|r| {
                r.iter().zip(y).fold(BigRational::zero(), |acc, (a, v)| {
                    acc + a * BigRational::from_integer(v.clone())
                })
            })
            .collect())
    }
}

/// Ordered blocks `I_0, I_1, ..., I_m` partitioning the column indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnsPartition {
    pub blocks: Vec<IndexSet>,
}

impl ColumnsPartition {
    /// Block number of each column, 0-based by column.
    pub fn block_of(&self, cols: usize) -> Vec<Option<usize>> {
        let mut out = alloc::vec![None; cols];
        for (t, b) in self.blocks.iter().enumerate() {
            for &j in b.indices() {
                if let Some(slot) = out.get_mut(j - 1) {
                    *slot = Some(t);
                }
            }
        }
        out
    }

    /// Re-checks the partition over the rationals, independently of the
    /// search: blocks cover the columns exactly once, `I_0` is nonempty and
    /// sums to zero, and every later block sum is an exact combination of
    /// the earlier columns.
    pub fn verify(&self, a: &RationalMatrix) -> bool {
        let m = a.n_cols();
        let mut seen = BTreeSet::new();
        for b in &self.blocks {
            if b.is_empty() {
                return false;
            }
            for &j in b.indices() {
                if j == 0 || j > m || !seen.insert(j) {
                    return false;
                }
            }
        }
        if seen.len() != m {
            return false;
        }
        let sum_of = |b: &IndexSet| -> Vec<BigRational> {
            let mut s = alloc::vec![BigRational::zero(); a.n_rows()];
            for &j in b.indices() {
                for (acc, v) in s.iter_mut().zip(a.column(j - 1)) {
                    *acc += v;
                }
            }
            s
        };
        if !sum_of(&self.blocks[0]).iter().all(Zero::is_zero) {
            return false;
        }
        let mut earlier: Vec<usize> = self.blocks[0].indices().to_vec();
        for b in &self.blocks[1..] {
            let cols: Vec<Vec<BigRational>> = earlier.iter().map(|&j| a.column(j - 1)).collect();
            let target = sum_of(b);
            let Some(lambda) = solve_combination(&cols, &target) else {
                return false;
            };
            let mut residual = target;
            for (l, c) in lambda.iter().zip(&cols) {
                for (r, v) in residual.iter_mut().zip(c) {
                    *r -= l * v;
                }
            }
            if !residual.iter().all(Zero::is_zero) {
                return false;
            }
            earlier.extend_from_slice(b.indices());
        }
        true
    }
}

impl fmt::Display for ColumnsPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, b) in self.blocks.iter().enumerate() {
            if t > 0 {
                f.write_str(" ")?;
            }
            write!(f, "I{t}={b}")?;
        }
        Ok(())
    }
}

/// Coefficients `λ` with `Σ λ_j cols_j = target`, by Gauss-Jordan over the
/// rationals. `None` when the target is outside the span.
fn solve_combination(cols: &[Vec<BigRational>], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = target.len();
    let m = cols.len();
    // augmented rows: [cols | target]
    let mut rows: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            cols.iter()
                .map(|c| c[i].clone())
                .chain(core::iter::once(target[i].clone()))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..n).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..n {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (v, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[m].is_zero()) {
        return None;
    }
    let mut lambda = alloc::vec![BigRational::zero(); m];
    for (i, &c) in pivots.iter().enumerate() {
        lambda[c] = rows[i][m].clone();
    }
    Some(lambda)
}

/// Rank by fraction-free (Bareiss) elimination over the integers.
fn bareiss_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..n).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..n {
            for t in c + 1..m {
                let v = (&rows[r][c] * &rows[i][t] - &rows[i][c] * &rows[r][t]) / &prev;
                rows[i][t] = v;
            }
            rows[i][c] = BigInt::zero();
        }
        prev = rows[r][c].clone();
        r += 1;
        if r == n {
            break;
        }
    }
    r
}

fn in_span(basis: &[&Vec<BigInt>], v: &[BigInt]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let as_rows = |extra: Option<&[BigInt]>| -> Vec<Vec<BigInt>> {
        basis
            .iter()
            .map(|c| c.to_vec())
            .chain(extra.map(<[BigInt]>::to_vec))
            .collect()
    };
    bareiss_rank(as_rows(None)) == bareiss_rank(as_rows(Some(v)))
}

fn column_sum(cols: &[Vec<BigInt>], members: impl Iterator<Item = usize>) -> Vec<BigInt> {
    let mut s = alloc::vec![BigInt::zero(); cols.first().map_or(0, Vec::len)];
    for j in members {
        for (acc, v) in s.iter_mut().zip(&cols[j]) {
            *acc += v;
        }
    }
    s
}

/// A witness partition for the columns property, or `None`.
///
/// `I_0` is the first nonempty zero-sum set of columns in bitmask order.
/// Later blocks are found greedily: the smallest (then lexicographically
/// first) set `T` of remaining columns whose sum lies in the span of the
/// columns used so far, enlarged by every remaining column that lies in that
/// span on its own. The greedy never gets stuck when some valid partition
/// exists: if `U` holds the columns used so far and `I'_t` is the first block
/// of a valid partition not contained in `U`, then `I'_t \ U` is an
/// admissible `T`. For the same reason the choice of zero-sum `I_0` does not
/// matter, so only the first one is tried.
pub fn columns_property(a: &RationalMatrix) -> Result<Option<ColumnsPartition>> {
    let m = a.n_cols();
    if m > MAX_COLUMNS {
        return Err(Error::budget("columns property search is capped at 12 columns"));
    }
    let cols = a.integer_columns();
    let Some(mask) = (1u32..1 << m).find(|&s| {
        column_sum(&cols, (0..m).filter(|j| s >> j & 1 == 1))
            .iter()
            .all(Zero::is_zero)
    }) else {
        return Ok(None);
    };
    let mut used: Vec<usize> = (0..m).filter(|j| mask >> j & 1 == 1).collect();
    let mut remaining: Vec<usize> = (0..m).filter(|j| mask >> j & 1 == 0).collect();
    let mut blocks = alloc::vec![to_index_set(&used)];
    while !remaining.is_empty() {
        let basis: Vec<&Vec<BigInt>> = used.iter().map(|&j| &cols[j]).collect();
        let mut found = None;
        'sizes: for size in 1..=remaining.len() {
            for t in k_subsets(remaining.len(), size) {
                let members: Vec<usize> = t.indices().iter().map(|&i| remaining[i - 1]).collect();
                if in_span(&basis, &column_sum(&cols, members.iter().copied())) {
                    found = Some(members);
                    break 'sizes;
                }
            }
        }
        let Some(mut block) = found else {
            return Ok(None);
        };
        for &j in &remaining {
            if !block.contains(&j) && in_span(&basis, &cols[j]) {
                block.push(j);
            }
        }
        block.sort_unstable();
        remaining.retain(|j| !block.contains(j));
        used.extend_from_slice(&block);
        blocks.push(to_index_set(&block));
    }
    Ok(Some(ColumnsPartition { blocks }))
}

fn to_index_set(cols0: &[usize]) -> IndexSet {
    let mut v: Vec<usize> = cols0.iter().map(|j| j + 1).collect();
    v.sort_unstable();
    IndexSet::new(v).expect("distinct column indices")
}

/// Whether some nonempty subset of the coefficients sums to zero, by
/// meet-in-the-middle over subset sums.
pub fn single_equation_regular(a: &[i64]) -> bool {
    let (left, right) = a.split_at(a.len() / 2);
    let sums = |part: &[i64]| -> BTreeSet<i128> {
        let mut out = BTreeSet::new();
        for s in 1u64..1 << part.len() {
            out.insert(
                (0..part.len())
                    .filter(|j| s >> j & 1 == 1)
                    .map(|j| part[j] as i128)
                    .sum(),
            );
        }
        out
    };
    let l = sums(left);
    let r = sums(right);
    l.contains(&0) || r.contains(&0) || l.iter().any(|x| r.contains(&-x))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GhlVerdict {
    /// `a_k = 1` and the coefficients sum to zero.
    pub cond_i: bool,
    /// The coefficients sum to one.
    pub cond_ii: bool,
    /// Every coefficient is one.
    pub cond_iii: bool,
    /// Least `c >= 2` with every `|a_t|` a power of `c`.
    pub star_base: Option<u64>,
}

impl GhlVerdict {
    pub fn any(&self) -> bool {
        self.cond_i || self.cond_ii || self.cond_iii
    }
}

pub fn ghl_classify(a: &[i64]) -> Result<GhlVerdict> {
    let Some(&last) = a.last() else {
        return Err(Error::domain("coefficient sequence is empty"));
    };
    if a.contains(&0) {
        return Err(Error::domain("coefficients must be nonzero"));
    }
    let sum: i128 = a.iter().map(|&x| x as i128).sum();
    let abs: Vec<u64> = a.iter().map(|x| x.unsigned_abs()).collect();
    let max = abs.iter().copied().max().unwrap_or(1);
    let is_power = |mut v: u64, c: u64| {
        while v.is_multiple_of(c) {
            v /= c;
        }
        v == 1
    };
    let star_base = if max == 1 {
        Some(2)
    } else {
        (2..=max).find(|&c| abs.iter().all(|&v| is_power(v, c)))
    };
    Ok(GhlVerdict {
        cond_i: last == 1 && sum == 0,
        cond_ii: sum == 1,
        cond_iii: a.iter().all(|&x| x == 1),
        star_base,
    })
}

/// Label of the pattern formed by the colors of `y_1, ..., y_M`: (i) all
/// equal, (ii) pairwise distinct, (iii) equal exactly when both positions
/// share a block `I_t` with `t >= 1`.
fn verdict_of_colors<C: PartialEq>(colors: &[C], block_of: Option<&[Option<usize>]>) -> Option<PatternLabel> {
    let m = colors.len();
    let pairs = || (0..m).flat_map(move |i| (i + 1..m).map(move |j| (i, j)));
    if pairs().all(|(i, j)| colors[i] == colors[j]) {
        return Some(PatternLabel::I);
    }
    if pairs().all(|(i, j)| colors[i] != colors[j]) {
        return Some(PatternLabel::II);
    }
    let blocks = block_of?;
    let same_late_block = |i: usize, j: usize| matches!((blocks[i], blocks[j]), (Some(s), Some(t)) if s == t && s >= 1);
    pairs()
        .all(|(i, j)| (colors[i] == colors[j]) == same_late_block(i, j))
        .then_some(PatternLabel::III)
}

/// Canonical pattern of a solution `y` of `A y = 0`, or `None` if it fits
/// no pattern.
pub fn canonical_rado_verdict(
    a: &RationalMatrix,
    part: &ColumnsPartition,
    y: &[BigUint],
    spec: &ColoringSpec,
) -> Result<Option<PatternLabel>> {
    let yi: Vec<BigInt> = y.iter().map(|v| BigInt::from(v.clone())).collect();
    if y.iter().any(Zero::is_zero) {
        return Err(Error::domain("solution entries must be positive"));
    }
    if !a.apply(&yi)?.iter().all(Zero::is_zero) {
        return Err(Error::domain("vector is not a solution of the system"));
    }
    let colors: Vec<Color> = y.iter().map(|v| spec.eval(v)).collect::<Result<_>>()?;
    let blocks = part.block_of(a.n_cols());
    Ok(verdict_of_colors(&colors, Some(&blocks)))
}

/// All `y ∈ [1..N]^M` with `A y = 0` whose canonical verdict is `want`, in
/// lexicographic order. The partition for pattern (iii) is the one returned
/// by [`columns_property`]; without one, (iii) never matches.
pub fn search_solutions(
    a: &RationalMatrix,
    bound: u64,
    spec: &ColoringSpec,
    want: PatternLabel,
) -> Result<Vec<Vec<u64>>> {
    let m = a.n_cols();
    let space = (bound as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if space > SEARCH_BUDGET as u128 {
        return Err(Error::budget("solution search space exceeds 10^7 vectors"));
    }
    if bound == 0 {
        return Ok(Vec::new());
    }
    let blocks = if m <= MAX_COLUMNS {
        columns_property(a)?.map(|p| p.block_of(m))
    } else {
        None
    };
    let colors: Vec<Color> = (1..=bound)
        .map(|v| spec.eval(&BigUint::from(v)))
        .collect::<Result<_>>()?;
    let cols = a.integer_columns();
    let small: Option<Vec<Vec<i128>>> = cols
        .iter()
        .map(|c| c.iter().map(ToPrimitive::to_i128).collect())
        .collect();
    // i128 is safe when every row value stays below 2^100
    let fast =
        small.filter(|c| c.iter().flatten().all(|v| v.unsigned_abs() < 1 << 60) && m < 1 << 20 && bound < 1 << 20);
    let n_rows = a.n_rows();

    let mut out = Vec::new();
    let mut y = alloc::vec![1u64; m];
    loop {
        let zero = match &fast {
            Some(c) => (0..n_rows).all(|r| (0..m).map(|j| c[j][r] * y[j] as i128).sum::<i128>() == 0),
            None => (0..n_rows).all(|r| {
                (0..m)
                    .map(|j| &cols[j][r] * BigInt::from(y[j]))
                    .sum::<BigInt>()
                    .is_zero()
            }),
        };
        if zero {
            let cs: Vec<&Color> = y.iter().map(|&v| &colors[(v - 1) as usize]).collect();
            if verdict_of_colors(&cs, blocks.as_deref()) == Some(want) {
                out.push(y.clone());
            }
        }
        // odometer, last coordinate fastest
        let mut pos = m;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if y[pos] < bound {
                y[pos] += 1;
                break;
            }
            y[pos] = 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;

    fn mat(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_integers(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn blocks(p: &ColumnsPartition) -> Vec<Vec<usize>> {
        p.blocks.iter().map(|b| b.indices().to_vec()).collect()
    }

    #[test]
    fn columns_examples() {
        let p = columns_property(&mat(&[&[1, 1, -1]])).unwrap().unwrap();
        assert_eq!(blocks(&p), [alloc::vec![1, 3], alloc::vec![2]]);
        assert_eq!(alloc::format!("{p}"), "I0={1,3} I1={2}");
        let p = columns_property(&mat(&[&[1, -1]])).unwrap().unwrap();
        assert_eq!(blocks(&p), [alloc::vec![1, 2]]);
        assert_eq!(columns_property(&mat(&[&[2, -1]])).unwrap(), None);
    }

    #[test]
    fn columns_multirow() {
        let a = mat(&[&[1, 1, -1, 0], &[1, 0, 1, -1]]);
        let res = columns_property(&a).unwrap();
        assert_eq!(res.is_some(), brute_force_columns(&a));
        // arithmetic progressions x1 - 2x2 + x3 = 0 are regular
        let a = mat(&[&[1, -2, 1]]);
        let p = columns_property(&a).unwrap().unwrap();
        assert!(p.verify(&a));
        // rational entries: (1/2) x - (1/2) y = 0
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let a = RationalMatrix::new(alloc::vec![alloc::vec![half.clone(), -half]]).unwrap();
        assert!(columns_property(&a).unwrap().unwrap().verify(&a));
        assert!(RationalMatrix::from_integers(&[alloc::vec![0, 0]]).is_err());
    }

    /// Ordered set partitions of the columns, checked with the rational
    /// verifier only.
    fn brute_force_columns(a: &RationalMatrix) -> bool {
        let m = a.n_cols();
        fn rec(a: &RationalMatrix, m: usize, assign: &mut Vec<usize>) -> bool {
            if assign.len() == m {
                let nb = assign.iter().copied().max().unwrap() + 1;
                let mut blocks = Vec::new();
                for t in 0..nb {
                    let b: Vec<usize> = (0..m).filter(|&j| assign[j] == t).map(|j| j + 1).collect();
                    if b.is_empty() {
                        return false;
                    }
                    blocks.push(IndexSet::new(b).unwrap());
                }
                return ColumnsPartition { blocks }.verify(a);
            }
            for t in 0..m {
                assign.push(t);
                if rec(a, m, assign) {
                    return true;
                }
                assign.pop();
            }
            false
        }
        rec(a, m, &mut Vec::new())
    }

    #[test]
    fn columns_against_ordered_partitions() {
        let vals = [-2i64, -1, 1, 2];
        let mut count = 0;
        for code in 0..4u32.pow(6) {
            let mut c = code;
            let mut entries = Vec::new();
            for _ in 0..6 {
                entries.push(vals[(c % 4) as usize]);
                c /= 4;
            }
            let a = mat(&[&entries[..3], &entries[3..]]);
            let got = columns_property(&a).unwrap();
            if let Some(p) = &got {
                assert!(p.verify(&a));
            }
            assert_eq!(got.is_some(), brute_force_columns(&a), "{entries:?}");
            count += got.is_some() as u32;
        }
        assert!(count > 0);
    }

    #[test]
    fn single_equation_examples() {
        assert!(single_equation_regular(&[1, 1, -1]));
        assert!(!single_equation_regular(&[2, -1]));
        assert!(single_equation_regular(&[3, -3]));
        assert!(single_equation_regular(&[5, 1, 1, 1, 1, -3, 7]));
        assert!(!single_equation_regular(&[5, 7, 11, -3]));
    }

    #[test]
    fn ghl_examples() {
        let v = ghl_classify(&[1, 1, 1]).unwrap();
        assert!(v.cond_iii && !v.cond_i && !v.cond_ii);
        assert_eq!(v.star_base, Some(2));
        let v = ghl_classify(&[-1, 2]).unwrap();
        assert!(v.cond_ii && !v.cond_i && !v.cond_iii);
        assert_eq!(v.star_base, Some(2));
        let v = ghl_classify(&[-1, 1]).unwrap();
        assert!(v.cond_i && !v.cond_ii);
        let v = ghl_classify(&[2, -1]).unwrap();
        assert!(v.cond_ii && !v.cond_i);
        assert_eq!(ghl_classify(&[2, 3]).unwrap().star_base, None);
        assert_eq!(ghl_classify(&[9, -3, 1]).unwrap().star_base, Some(3));
        assert!(ghl_classify(&[]).is_err());
    }

    #[test]
    fn ghl_repeated_coefficient_family() {
        for a in -4i64..=4 {
            if a == 0 {
                continue;
            }
            for g in 1..4usize {
                for ones in 1..4usize {
                    let mut seq = alloc::vec![a; g];
                    seq.extend(core::iter::repeat_n(1, ones));
                    let k = (g + ones) as i64;
                    let s = g as i64 * (a - 1) + k;
                    let v = ghl_classify(&seq).unwrap();
                    assert_eq!(v.cond_i, s == 0);
                    assert_eq!(v.cond_ii, s == 1);
                }
            }
        }
    }

    #[test]
    fn rado_verdicts() {
        let a = mat(&[&[1, 1, -1]]);
        let p = columns_property(&a).unwrap().unwrap();
        let y = |v: &[u64]| v.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>();
        let mono = ColoringSpec::monochromatic(Color::single(0));
        assert_eq!(
            canonical_rado_verdict(&a, &p, &y(&[1, 2, 3]), &mono).unwrap(),
            Some(PatternLabel::I)
        );
        let vals = y(&[1, 2, 3]);
        let inj = ColoringSpec::injective_on(vals.iter());
        assert_eq!(
            canonical_rado_verdict(&a, &p, &vals, &inj).unwrap(),
            Some(PatternLabel::II)
        );
        // the first zero-sum mask wins
        let b = mat(&[&[1, -1, 1, -1]]);
        let pb = columns_property(&b).unwrap().unwrap();
        assert_eq!(blocks(&pb), [alloc::vec![1, 2], alloc::vec![3, 4]]);
        let c = mat(&[&[1, -1, 2, -1]]);
        let pc = columns_property(&c).unwrap().unwrap();
        assert_eq!(blocks(&pc), [alloc::vec![1, 2], alloc::vec![3, 4]]);
        let sol = y(&[5, 5, 3, 6]);
        let mut table = BTreeMap::new();
        table.insert(BigUint::from(5u32), Color::single(0));
        table.insert(BigUint::from(3u32), Color::single(1));
        table.insert(BigUint::from(6u32), Color::single(1));
        let spec = ColoringSpec::explicit_table(table, Color::single(9)).unwrap();
        // y1 and y2 share a color but sit in I0, so (iii) fails
        assert_eq!(canonical_rado_verdict(&c, &pc, &sol, &spec).unwrap(), None);
        let sol = y(&[4, 5, 3, 5]);
        let mut table = BTreeMap::new();
        for (v, col) in [(4u32, 0), (5, 1), (3, 2)] {
            table.insert(BigUint::from(v), Color::single(col));
        }
        let spec = ColoringSpec::explicit_table(table, Color::single(9)).unwrap();
        // y2 = y4 share a color across blocks: no pattern
        assert_eq!(canonical_rado_verdict(&c, &pc, &sol, &spec).unwrap(), None);
        assert!(canonical_rado_verdict(&a, &p, &y(&[1, 1, 3]), &mono).is_err());
    }

    #[test]
    fn block_coloring_gives_iii() {
        let c = mat(&[&[1, -1, 2, -1]]);
        let pc = columns_property(&c).unwrap().unwrap();
        // 1 - 7 + 2*6 - 6 = 0 with y3 = y4 = 6 in block I1
        let sol: Vec<BigUint> = [1u64, 7, 6, 6].iter().map(|&v| BigUint::from(v)).collect();
        let mut table = BTreeMap::new();
        table.insert(BigUint::from(1u32), Color::single(0));
        table.insert(BigUint::from(7u32), Color::single(1));
        table.insert(BigUint::from(6u32), Color::single(2));
        let spec = ColoringSpec::explicit_table(table, Color::single(9)).unwrap();
        assert_eq!(
            canonical_rado_verdict(&c, &pc, &sol, &spec).unwrap(),
            Some(PatternLabel::III)
        );
    }

    #[test]
    fn search_examples() {
        let schur = mat(&[&[1, 1, -1]]);
        let mono = ColoringSpec::monochromatic(Color::single(0));
        let all = search_solutions(&schur, 4, &mono, PatternLabel::I).unwrap();
        assert!(all.contains(&alloc::vec![1, 1, 2]));
        assert_eq!(all.len(), 6);

        let mut table = BTreeMap::new();
        for v in 1u32..=4 {
            table.insert(BigUint::from(v), Color::single((v > 2) as i64));
        }
        let two = ColoringSpec::explicit_table(table, Color::single(7)).unwrap();
        assert_eq!(search_solutions(&schur, 4, &two, PatternLabel::I).unwrap(), [[1, 1, 2]]);

        let dbl = mat(&[&[2, -1]]);
        let spec = ColoringSpec::interval_base(2).unwrap();
        let rainbow = search_solutions(&dbl, 10, &spec, PatternLabel::II).unwrap();
        assert_eq!(rainbow, [[1, 2], [2, 4], [3, 6], [4, 8], [5, 10]]);
        assert!(search_solutions(&schur, 1000, &mono, PatternLabel::I).is_err());
    }

    #[test]
    fn search_matches_filter() {
        let a = mat(&[&[1, 2, -3]]);
        let spec = ColoringSpec::valuation_only(2).unwrap();
        let p = columns_property(&a).unwrap().unwrap();
        for want in PatternLabel::ALL {
            let got = search_solutions(&a, 12, &spec, want).unwrap();
            let mut expect = Vec::new();
            for x in 1..=12u64 {
                for y in 1..=12u64 {
                    for z in 1..=12u64 {
                        if x + 2 * y != 3 * z {
                            continue;
                        }
                        let v: Vec<BigUint> = [x, y, z].iter().map(|&t| BigUint::from(t)).collect();
                        if canonical_rado_verdict(&a, &p, &v, &spec).unwrap() == Some(want) {
                            expect.push(alloc::vec![x, y, z]);
                        }
                    }
                }
            }
            assert_eq!(got, expect);
        }
    }
}
