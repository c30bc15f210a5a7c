//! Brute-force ground truth: colorings of `k`-subsets up to renaming,
//! finite Erdős–Rado search, and exclusion reports whose witnesses are
//! recomputed from scratch.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::arith::binomial;
use crate::colorings::{Color, ColoringSpec};
use crate::error::{Error, Result};
use crate::forms::{eval_form_positive, k_subsets, GroundSet, IndexSet};
use crate::patterns::{
    classify_canonical, er_canonical_check, Object, PatternLabel, SubsetTable, TheoremProfile, Witness,
};
use crate::thinning::thin_interval_rainbow;

/// Largest number of `k`-subsets whose partitions are enumerated without a cap.
pub const UNCAPPED_SUBSETS: u64 = 12;

/// Set partitions of the `k`-subsets of `{1..n}` as color tables, in
/// lexicographic order of restricted-growth strings.
#[derive(Clone, Debug)]
pub struct CanonicalColorings {
    n: usize,
    k: usize,
    rgs: Vec<usize>,
    left: Option<usize>,
    done: bool,
}

impl CanonicalColorings {
    fn advance(&mut self) {
        // rightmost position that can grow without breaking restricted growth
        for i in (1..self.rgs.len()).rev() {
            let bound = self.rgs[..i].iter().copied().max().unwrap_or(0) + 1;
            if self.rgs[i] < bound {
                self.rgs[i] += 1;
                for v in &mut self.rgs[i + 1..] {
                    *v = 0;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for CanonicalColorings {
    type Item = SubsetTable;

    fn next(&mut self) -> Option<SubsetTable> {
        if self.done || self.left == Some(0) {
            return None;
        }
        if let Some(l) = &mut self.left {
            *l -= 1;
        }
        let colors = self.rgs.iter().map(|&c| Color::single(c as i64)).collect();
        let table = SubsetTable::from_colors(self.n, self.k, colors).expect("one color per subset");
        self.advance();
        Some(table)
    }
}

pub fn enumerate_canonical_colorings(n: usize, k: usize, cap: Option<usize>) -> Result<CanonicalColorings> {
    if k == 0 {
        return Err(Error::domain("subset size must be positive"));
    }
    let m = binomial(n as u64, k as u64);
    if m > UNCAPPED_SUBSETS && cap.is_none() {
        return Err(Error::budget("more than 12 subsets to partition; pass a cap"));
    }
    Ok(CanonicalColorings {
        n,
        k,
        rgs: alloc::vec![0; m as usize],
        left: cap,
        done: false,
    })
}

/// A finite Erdős–Rado witness: on the `k`-subsets of `support`, colors
/// agree exactly when the entries at `positions` agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErMatch {
    pub support: Vec<usize>,
    pub positions: Vec<usize>,
}

/// First `m`-subset `X` (lexicographic) of `{1..n}` admitting a position
/// set `I` (first by bitmask), or `None`.
pub fn er_search(table: &SubsetTable, m: usize) -> Result<Option<ErMatch>> {
    if m < table.k() {
        return Err(Error::domain("search size must be at least the subset size"));
    }
    for support in k_subsets(table.n(), m) {
        let restricted = table.restrict(support.indices());
        if let Some(positions) = er_canonical_check(&restricted).into_iter().next() {
            return Ok(Some(ErMatch {
                support: support.indices().to_vec(),
                positions,
            }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExclusionReport {
    pub spec: ColoringSpec,
    pub profile: TheoremProfile,
    pub prefix_length: usize,
    pub consistent: Vec<PatternLabel>,
    pub excluded: Vec<(PatternLabel, Witness)>,
}

impl ExclusionReport {
    pub fn excluded_labels(&self) -> Vec<PatternLabel> {
        self.excluded.iter().map(|(l, _)| *l).collect()
    }
}

/// Color of an object, evaluated directly from the spec.
pub fn object_color(spec: &ColoringSpec, xs: &GroundSet, profile: TheoremProfile, obj: &Object) -> Result<Color> {
    let value = match obj {
        Object::Element(i) => xs
            .get(*i)
            .cloned()
            .ok_or_else(|| Error::domain("element index out of range"))?,
        Object::Combo(j) => match profile.form() {
            Some(form) => eval_form_positive(&form, xs, j)?,
            None => j
                .indices()
                .iter()
                .map(|&i| xs.get(i).ok_or_else(|| Error::domain("index out of range")))
                .sum::<Result<BigUint>>()?,
        },
    };
    spec.eval(&value)
}

/// Recomputes both colors of a witness and checks that they break the
/// clause, which must be one of the pattern's own clauses.
pub fn reverify_witness(
    spec: &ColoringSpec,
    xs: &GroundSet,
    profile: TheoremProfile,
    label: PatternLabel,
    w: &Witness,
) -> Result<bool> {
    let left = object_color(spec, xs, profile, &w.left)?;
    let right = object_color(spec, xs, profile, &w.right)?;
    let fresh = Witness {
        clause: w.clause,
        left: w.left.clone(),
        right: w.right.clone(),
        left_color: left,
        right_color: right,
    };
    Ok(profile.clauses(label).contains(&w.clause) && fresh == *w && fresh.is_violation())
}

pub fn witness_exclusion_report(
    spec: &ColoringSpec,
    xs: &GroundSet,
    profile: TheoremProfile,
    n: usize,
) -> Result<ExclusionReport> {
    let verdict = classify_canonical(spec, xs, profile, n)?;
    for (label, w) in &verdict.excluded {
        if !reverify_witness(spec, xs, profile, *label, w)? {
            return Err(Error::domain("exclusion witness failed re-verification"));
        }
    }
    Ok(ExclusionReport {
        spec: spec.clone(),
        profile,
        prefix_length: n,
        consistent: verdict.consistent,
        excluded: verdict.excluded,
    })
}

/// First `n` elements of the interval-rainbow thinning of the sparse source
/// `{base^i + j : 0 <= j < base}`, which thins to `1, base, base^2, ...`.
pub fn thinned_interval_prefix(base: u64, n: usize) -> Result<GroundSet> {
    if base < 2 {
        return Err(Error::domain("interval base must be at least 2"));
    }
    let mut source: Vec<BigUint> = Vec::new();
    let mut power = BigUint::from(1u32);
    for _ in 0..=n {
        for j in 0..base {
            source.push(&power + j);
        }
        power *= base;
    }
    source.sort();
    source.dedup();
    let thinned = thin_interval_rainbow(&GroundSet::new(source)?, base)?;
    if thinned.len() < n {
        return Err(Error::domain("thinned source is shorter than the requested prefix"));
    }
    Ok(thinned.prefix(n))
}

/// The index sets `Q, S, T` on positions `i_1 < ... < i_{k+2}`: each keeps
/// `i_1` and `i_5..i_{k+2}` and takes one of `i_2, i_3, i_4`. For `k = 2`
/// the sets would miss `i_{k+2}`, so `k >= 3` is required.
pub fn qst_sets(positions: &[usize]) -> Result<[IndexSet; 3]> {
    if positions.len() < 5 {
        return Err(Error::domain("Q, S, T need k >= 3"));
    }
    let tail = &positions[4..];
    let make = |second: usize| {
        let mut v = alloc::vec![positions[0], positions[second]];
        v.extend_from_slice(tail);
        IndexSet::new(v)
    };
    Ok([make(1)?, make(2)?, make(3)?])
}
