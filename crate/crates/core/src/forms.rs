//! Ground sets, index sets and linear forms over them.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// A strictly increasing finite sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet(Vec<BigUint>);

impl GroundSet {
    pub fn new(values: Vec<BigUint>) -> Result<Self> {
        if values.first().is_some_and(|v| v.is_zero()) {
            return Err(Error::domain("ground-set values must be positive"));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain("ground-set values must strictly increase"));
        }
        Ok(GroundSet(values))
    }

    pub fn from_u64s(values: impl IntoIterator<Item = u64>) -> Result<Self> {
        Self::new(values.into_iter().map(BigUint::from).collect())
    }

    pub fn values(&self) -> &[BigUint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based access.
    pub fn get(&self, index: usize) -> Option<&BigUint> {
        index.checked_sub(1).and_then(|i| self.0.get(i))
    }

    /// The first `n` elements.
    pub fn prefix(&self, n: usize) -> GroundSet {
        GroundSet(self.0[..n.min(self.0.len())].to_vec())
    }

    pub fn into_values(self) -> Vec<BigUint> {
        self.0
    }
}

/// A strictly increasing set of 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.first() == Some(&0) {
            return Err(Error::domain("indices are 1-based"));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain("indices must strictly increase"));
        }
        Ok(IndexSet(indices))
    }

    pub(crate) fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        IndexSet(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min_index(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, j) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str("}")
    }
}

/// All `k`-subsets of `{1..n}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<IndexSet> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(IndexSet(cur.clone()));
        // advance the rightmost position that still has room
        let Some(pos) = (0..k).rev().find(|&p| cur[p] < n - (k - 1 - p)) else {
            return out;
        };
        cur[pos] += 1;
        for q in pos + 1..k {
            cur[q] = cur[q - 1] + 1;
        }
    }
}

/// Which alternating sum: even arity ends `... + x_{j2} - x_{j1}`, odd arity
/// ends `... - x_{j2} + x_{j1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: usize) -> Parity {
        if k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Nonzero integer coefficients `a_1..a_k`, stored smallest index first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm(Vec<i64>);

impl LinearForm {
    pub fn new(coefficients: Vec<i64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::domain("a linear form needs at least one coefficient"));
        }
        if coefficients.contains(&0) {
            return Err(Error::domain("linear-form coefficients must be nonzero"));
        }
        Ok(LinearForm(coefficients))
    }

    /// `x_{j1} + ... + x_{jk}`.
    pub fn sum(k: usize) -> Result<Self> {
        Self::new(alloc::vec![1; k])
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// True when the form is positive on every strictly increasing tuple of
    /// positive integers.
    pub fn is_positive_on_increasing(&self) -> bool {
        // Write x_t = d_1 + ... + d_t with d_1 >= 1 and d_t >= 1; the form is
        // sum_t d_t * S_t with S_t the suffix sum from t. Positive for all such
        // d iff every S_t >= 0 and at least one S_t > 0.
        let mut suffix = 0i64;
        let mut any_positive = false;
        for &a in self.0.iter().rev() {
            suffix += a;
            if suffix < 0 {
                return false;
            }
            any_positive |= suffix > 0;
        }
        any_positive
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// Coefficients of the alternating sum of arity `k`, in index order.
pub fn alt_sign_vector(k: usize, parity: Parity) -> Result<LinearForm> {
    if Parity::of(k) != parity {
        return Err(Error::domain("arity does not match the requested parity"));
    }
    match parity {
        Parity::Even if k < 2 => return Err(Error::domain("even alternating sums need k >= 2")),
        Parity::Odd if k < 3 => return Err(Error::domain("odd alternating sums need k >= 3")),
        _ => {}
    }
    // the largest index always carries +1
    let coeffs = (0..k)
        .map(|t| if (k - 1 - t).is_multiple_of(2) { 1 } else { -1 })
        .collect();
    LinearForm::new(coeffs)
}

/// `sum_t a_t * x_{j_t}`.
pub fn eval_form(form: &LinearForm, xs: &GroundSet, js: &IndexSet) -> Result<BigInt> {
    if form.arity() != js.len() {
        return Err(Error::domain("index set size differs from form arity"));
    }
    if js.max_index().is_some_and(|m| m > xs.len()) {
        return Err(Error::domain("index beyond the ground set"));
    }
    let mut acc = BigInt::zero();
    for (&a, &j) in form.0.iter().zip(&js.0) {
        let x = BigInt::from(xs.0[j - 1].clone());
        acc += x * a;
    }
    Ok(acc)
}

/// `eval_form` for callers that need a positive value to color.
pub fn eval_form_positive(form: &LinearForm, xs: &GroundSet, js: &IndexSet) -> Result<BigUint> {
    let v = eval_form(form, xs, js)?;
    if !v.is_positive() {
        return Err(Error::domain("linear form is not positive on this index set"));
    }
    Ok(v.magnitude().clone())
}

/// `x_i = z0/k + z_i`, so every `k`-term sum of the result equals `z0`
/// plus the matching `k`-term sum of `zs`.
pub fn shift_construction(z0: &BigUint, zs: &GroundSet, k: u64) -> Result<GroundSet> {
    if k < 2 {
        return Err(Error::domain("shift construction needs k >= 2"));
    }
    let (q, r) = z0.div_rem(&BigUint::from(k));
    if !r.is_zero() {
        return Err(Error::domain("k must divide z0"));
    }
    GroundSet::new(zs.0.iter().map(|z| z + &q).collect())
}
