//! Colorings of the positive integers, plus the pair and triple colorings
//! of differences used by the valuation-star extraction.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{self, ceil_sqrt_pow, interval_index, valuation_split};
use crate::error::{Error, Result};

/// A color value. Only equality is meaningful; the derived order exists for
/// deterministic tie-breaking and map keys.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub Vec<i64>);

impl Color {
    pub fn single(c: i64) -> Self {
        Color(alloc::vec![c])
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// The coloring families. Build through [`ColoringSpec`] constructors so the
/// parameters are checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringKind {
    /// `i` with `b^i <= x < b^(i+1)`.
    IntervalBase(u64),
    /// The `k`-adic valuation of `x`, residue discarded.
    ValuationOnly(u64),
    /// `(x', x'' mod p)` for an odd prime `p`.
    ValuationResidue(u64),
    /// Concatenation of the component colors.
    Product(Vec<ColoringSpec>),
    /// `0` at 1, otherwise the `sqrt(2)`-interval index modulo 5.
    Sqrt2Mod5,
    /// Finite lookup table with a default for unmapped values.
    ExplicitTable {
        table: BTreeMap<BigUint, Color>,
        default: Color,
    },
}

/// A validated coloring of the positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringSpec(ColoringKind);

impl ColoringSpec {
    pub fn interval_base(b: u64) -> Result<Self> {
        Self::new(ColoringKind::IntervalBase(b))
    }

    pub fn valuation_only(k: u64) -> Result<Self> {
        Self::new(ColoringKind::ValuationOnly(k))
    }

    pub fn valuation_residue(p: u64) -> Result<Self> {
        Self::new(ColoringKind::ValuationResidue(p))
    }

    pub fn product(specs: Vec<ColoringSpec>) -> Result<Self> {
        Self::new(ColoringKind::Product(specs))
    }

    pub fn sqrt2_mod5() -> Self {
        ColoringSpec(ColoringKind::Sqrt2Mod5)
    }

    pub fn explicit_table(table: BTreeMap<BigUint, Color>, default: Color) -> Result<Self> {
        Self::new(ColoringKind::ExplicitTable { table, default })
    }

    /// Everything gets `color`.
    pub fn monochromatic(color: Color) -> Self {
        ColoringSpec(ColoringKind::ExplicitTable {
            table: BTreeMap::new(),
            default: color,
        })
    }

    /// Distinct colors on each of `values`, and a color outside that range
    /// everywhere else.
    pub fn injective_on<'a>(values: impl IntoIterator<Item = &'a BigUint>) -> Self {
        let mut table = BTreeMap::new();
        for v in values {
            let next = table.len() as i64;
            table.entry(v.clone()).or_insert_with(|| Color::single(next));
        }
        ColoringSpec(ColoringKind::ExplicitTable {
            table,
            default: Color::single(-1),
        })
    }

    pub fn new(kind: ColoringKind) -> Result<Self> {
        match &kind {
            ColoringKind::IntervalBase(b) if *b < 2 => return Err(Error::domain("interval base must be at least 2")),
            ColoringKind::ValuationOnly(k) if *k < 2 => return Err(Error::domain("valuation base must be at least 2")),
            ColoringKind::ValuationResidue(p) if *p < 3 || !arith::is_prime(*p) => {
                return Err(Error::domain("valuation-residue coloring needs an odd prime"))
            }
            ColoringKind::Product(specs) if specs.is_empty() => {
                return Err(Error::domain("product coloring needs at least one factor"))
            }
            _ => {}
        }
        Ok(ColoringSpec(kind))
    }

    pub fn kind(&self) -> &ColoringKind {
        &self.0
    }

    pub fn eval(&self, x: &BigUint) -> Result<Color> {
        eval_coloring(self, x)
    }
}

impl fmt::Display for ColoringSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            ColoringKind::IntervalBase(b) => write!(f, "interval:{b}"),
            ColoringKind::ValuationOnly(k) => write!(f, "valuation:{k}"),
            ColoringKind::ValuationResidue(p) => write!(f, "valres:{p}"),
            ColoringKind::Product(specs) => {
                f.write_str("product:")?;
                for (i, s) in specs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
            ColoringKind::Sqrt2Mod5 => f.write_str("sqrt2mod5"),
            ColoringKind::ExplicitTable { table, .. } => write!(f, "table[{}]", table.len()),
        }
    }
}

fn small(v: u64) -> i64 {
    v as i64
}

/// Evaluates `spec` at `x >= 1`.
pub fn eval_coloring(spec: &ColoringSpec, x: &BigUint) -> Result<Color> {
    if x.is_zero() {
        return Err(Error::domain("colorings are defined on positive integers"));
    }
    Ok(match &spec.0 {
        ColoringKind::IntervalBase(b) => Color::single(small(interval_index(x, *b)?)),
        ColoringKind::ValuationOnly(k) => Color::single(small(valuation_split(x, *k)?.val)),
        ColoringKind::ValuationResidue(p) => {
            let s = valuation_split(x, *p)?;
            let r = (&s.unit % *p).to_u64().unwrap_or(0);
            Color(alloc::vec![small(s.val), small(r)])
        }
        ColoringKind::Product(specs) => {
            let mut out = Vec::new();
            for s in specs {
                out.extend(eval_coloring(s, x)?.0);
            }
            Color(out)
        }
        ColoringKind::Sqrt2Mod5 => Color::single(sqrt2_interval(x)?.map_or(0, |i| small(i % 5))),
        ColoringKind::ExplicitTable { table, default } => table.get(x).cloned().unwrap_or_else(|| default.clone()),
    })
}

/// The index `i >= 2` with `ceil(sqrt2^i) <= x <= ceil(sqrt2^(i+1)) - 1`, or
/// `None` for `x = 1`.
pub fn sqrt2_interval(x: &BigUint) -> Result<Option<u64>> {
    if x.is_zero() {
        return Err(Error::domain("colorings are defined on positive integers"));
    }
    if *x == BigUint::from(1u32) {
        return Ok(None);
    }
    // sqrt2^(2b-2) <= x^2 < sqrt2^(2b) for b = bits(x); start there and let
    // the exact boundaries settle the index.
    let mut i = (2 * (x.bits() - 1)).max(2);
    while ceil_sqrt_pow(2, i as u32)? > *x {
        i -= 1;
    }
    while ceil_sqrt_pow(2, (i + 1) as u32)? <= *x {
        i += 1;
    }
    Ok(Some(i))
}

/// Precomputed `sqrt(2)`-interval boundaries for machine-sized arguments.
/// Entry `i` is `ceil(sqrt2^i)`, taken from [`ceil_sqrt_pow`].
#[derive(Clone, Debug)]
pub struct Sqrt2Table {
    bounds: Vec<u128>,
}

impl Sqrt2Table {
    pub fn new() -> Self {
        let bounds = (0..=252u32)
            .map(|i| ceil_sqrt_pow(2, i).ok().and_then(|b| b.to_u128()).unwrap_or(u128::MAX))
            .collect();
        Sqrt2Table { bounds }
    }

    /// Same contract as [`sqrt2_interval`]; `x` must be at least 1 and
    /// below `2^126`.
    pub fn interval(&self, x: u128) -> Option<u64> {
        if x <= 1 {
            return None;
        }
        let mut i = (2 * (127 - x.leading_zeros()) as usize).max(2);
        while self.bounds[i] > x {
            i -= 1;
        }
        while self.bounds[i + 1] <= x {
            i += 1;
        }
        Some(i as u64)
    }

    pub fn color(&self, x: u128) -> i64 {
        self.interval(x).map_or(0, |i| (i % 5) as i64)
    }
}

impl Default for Sqrt2Table {
    fn default() -> Self {
        Self::new()
    }
}

fn odd_prime(p: u64) -> Result<()> {
    if p < 3 || !arith::is_prime(p) {
        return Err(Error::domain("difference colorings need an odd prime"));
    }
    Ok(())
}

/// Residue modulo `p` of the unit part of `x_j - x_i`.
pub fn eval_pair_coloring(p: u64, x_i: &BigUint, x_j: &BigUint) -> Result<Color> {
    odd_prime(p)?;
    if x_i >= x_j {
        return Err(Error::domain("pair coloring needs x_i < x_j"));
    }
    let s = valuation_split(&(x_j - x_i), p)?;
    Ok(Color::single(small((&s.unit % p).to_u64().unwrap_or(0))))
}

/// Compares the valuations of `x_k - x_i` and `x_j - x_i`: 0 when equal, 1
/// when the first is smaller, 2 when it is larger.
pub fn eval_triple_coloring(p: u64, x_i: &BigUint, x_j: &BigUint, x_k: &BigUint) -> Result<Color> {
    odd_prime(p)?;
    if !(x_i < x_j && x_j < x_k) {
        return Err(Error::domain("triple coloring needs x_i < x_j < x_k"));
    }
    let far = valuation_split(&(x_k - x_i), p)?.val;
    let near = valuation_split(&(x_j - x_i), p)?.val;
    Ok(Color::single(match far.cmp(&near) {
        core::cmp::Ordering::Equal => 0,
        core::cmp::Ordering::Less => 1,
        core::cmp::Ordering::Greater => 2,
    }))
}
