//! Subsequence extraction at finite scale: dyadic-style rainbow thinning,
//! residue classes of unit parts, valuation case splitting, finite Ramsey
//! focusing and valuation stars.
//!
//! Every procedure returns a subsequence of its input. Procedures that can
//! run out of material report a shortfall instead of failing.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::arith::{self, interval_index, valuation_split};
use crate::colorings::{eval_pair_coloring, eval_triple_coloring, Color};
use crate::error::{Error, Result};
use crate::forms::GroundSet;

/// Keeps `x` when its base-`base` interval index exceeds that of the last
/// kept element and its gap to it exceeds the previous gap.
pub fn thin_interval_rainbow(xs: &GroundSet, base: u64) -> Result<GroundSet> {
    if base < 2 {
        return Err(Error::domain("interval base must be at least 2"));
    }
    let mut kept: Vec<BigUint> = Vec::new();
    let mut last_color = None;
    let mut last_gap: Option<BigUint> = None;
    for x in xs.values() {
        let color = interval_index(x, base)?;
        if last_color.is_some_and(|c| color <= c) {
            continue;
        }
        if let Some(prev) = kept.last() {
            let gap = x - prev;
            if last_gap.as_ref().is_some_and(|g| gap <= *g) {
                continue;
            }
            last_gap = Some(gap);
        }
        last_color = Some(color);
        kept.push(x.clone());
    }
    GroundSet::new(kept)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueThinning {
    pub set: GroundSet,
    /// Unit parts are congruent to `d + c*k` modulo `k^2`.
    pub d: u64,
    pub c: u64,
}

/// Largest class of `x'' mod k^2`, where `x = k^{x'} x''`.
pub fn thin_residue(xs: &GroundSet, k: u64) -> Result<ResidueThinning> {
    if k < 2 {
        return Err(Error::domain("residue thinning needs k >= 2"));
    }
    if xs.is_empty() {
        return Err(Error::domain("residue thinning needs a nonempty ground set"));
    }
    let modulus = BigUint::from(k) * k;
    let mut classes: BTreeMap<u64, Vec<BigUint>> = BTreeMap::new();
    for x in xs.values() {
        let unit = valuation_split(x, k)?.unit;
        let rho = (unit % &modulus).to_u64().unwrap_or(0);
        classes.entry(rho).or_default().push(x.clone());
    }
    // ties go to the smaller residue
    let (rho, members) = classes
        .into_iter()
        .fold(None::<(u64, Vec<BigUint>)>, |best, (r, v)| match best {
            Some((_, ref b)) if b.len() >= v.len() => best,
            _ => Some((r, v)),
        })
        .ok_or_else(|| Error::domain("residue thinning needs a nonempty ground set"))?;
    Ok(ResidueThinning {
        set: GroundSet::new(members)?,
        d: rho % k,
        c: rho / k,
    })
}

/// Result of a focusing procedure that may run short.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Focused<T> {
    pub items: Vec<T>,
    /// The requested length was not reached; `items` is the best found.
    pub shortfall: bool,
}

fn majority(classes: &BTreeMap<Color, Vec<usize>>) -> Option<Color> {
    let mut best: Option<(&Color, usize)> = None;
    for (c, v) in classes {
        if best.is_none_or(|(_, n)| v.len() > n) {
            best = Some((c, v.len()));
        }
    }
    best.map(|(c, _)| c.clone())
}

type Heads = Vec<(usize, Option<Color>)>;

/// Iterated pigeonhole over pairs: each head keeps one color class of the
/// remaining candidates, chosen by `choose`. Returns the heads in order with
/// the color they carry to every later head (`None` for the final head).
fn focus_heads(
    n: usize,
    mut pair_color: impl FnMut(usize, usize) -> Color,
    mut choose: impl FnMut(&BTreeMap<Color, Vec<usize>>) -> Option<Color>,
) -> Heads {
    let mut heads = Vec::new();
    let mut cands: Vec<usize> = (0..n).collect();
    while let Some((&h, rest)) = cands.split_first() {
        let mut classes: BTreeMap<Color, Vec<usize>> = BTreeMap::new();
        for &y in rest {
            classes.entry(pair_color(h, y)).or_default().push(y);
        }
        match choose(&classes) {
            Some(color) => {
                let next = classes.remove(&color).unwrap_or_default();
                heads.push((h, Some(color)));
                cands = next;
            }
            None => {
                heads.push((h, None));
                break;
            }
        }
    }
    heads
}

/// Monochromatic subsequence (as indices) for a pair coloring.
fn focus_pairs(n: usize, pair_color: impl FnMut(usize, usize) -> Color) -> Vec<usize> {
    let heads = focus_heads(n, pair_color, majority);
    let mut counts: BTreeMap<&Color, usize> = BTreeMap::new();
    for (_, c) in &heads {
        if let Some(c) = c {
            *counts.entry(c).or_default() += 1;
        }
    }
    let mut best: Option<(&Color, usize)> = None;
    for (c, k) in counts {
        if best.is_none_or(|(_, b)| k > b) {
            best = Some((c, k));
        }
    }
    // the final head sits inside every earlier head's chosen class
    heads
        .iter()
        .filter(|(_, c)| c.is_none() || c.as_ref() == best.map(|(b, _)| b))
        .map(|(h, _)| *h)
        .collect()
}

/// Monochromatic subsequence (as indices) for a triple coloring.
fn focus_triples(n: usize, mut triple_color: impl FnMut(usize, usize, usize) -> Color) -> Vec<usize> {
    let mut heads: Vec<usize> = Vec::new();
    // colors[(a, b)] = color of (heads[a], heads[b], y) for all later y
    let mut colors: BTreeMap<(usize, usize), Color> = BTreeMap::new();
    let mut cands: Vec<usize> = (0..n).collect();
    while let Some((&h, rest)) = cands.split_first() {
        heads.push(h);
        if rest.is_empty() {
            break;
        }
        let r = heads.len() - 1;
        let mut classes: BTreeMap<Vec<Color>, Vec<usize>> = BTreeMap::new();
        for &y in rest {
            let sig = (0..r).map(|a| triple_color(heads[a], h, y)).collect();
            classes.entry(sig).or_default().push(y);
        }
        let mut best: Option<(&Vec<Color>, usize)> = None;
        for (sig, v) in &classes {
            if best.is_none_or(|(_, b)| v.len() > b) {
                best = Some((sig, v.len()));
            }
        }
        let sig = best.map(|(s, _)| s.clone()).unwrap_or_default();
        for (a, c) in sig.iter().enumerate() {
            colors.insert((a, r), c.clone());
        }
        cands = classes.remove(&sig).unwrap_or_default();
    }
    let Some((&last, inner)) = heads.split_last() else {
        return Vec::new();
    };
    let picked = focus_pairs(inner.len(), |a, b| colors.get(&(a, b)).cloned().unwrap_or_default());
    let mut out: Vec<usize> = picked.into_iter().map(|a| inner[a]).collect();
    out.push(last);
    out
}

fn constant_on_subsets<T>(items: &[T], t: usize, color_fn: &mut impl FnMut(&[&T]) -> Color) -> bool {
    let mut first: Option<Color> = None;
    for j in crate::forms::k_subsets(items.len(), t) {
        let refs: Vec<&T> = j.indices().iter().map(|&i| &items[i - 1]).collect();
        let c = color_fn(&refs);
        match &first {
            None => first = Some(c),
            Some(f) if *f != c => return false,
            _ => {}
        }
    }
    true
}

/// Finds a subsequence of length `m` on which `color_fn` is constant over
/// all `t`-subsets (`t` is 2 or 3), by greedy head focusing.
///
/// `color_fn` receives the `t` items in input order. When the input is too
/// small the longest monochromatic subsequence found is returned with the
/// shortfall flag set.
pub fn ramsey_focus<T: Clone>(
    items: &[T],
    mut color_fn: impl FnMut(&[&T]) -> Color,
    t: usize,
    m: usize,
) -> Result<Focused<T>> {
    let picked = match t {
        2 => focus_pairs(items.len(), |a, b| color_fn(&[&items[a], &items[b]])),
        3 => focus_triples(items.len(), |a, b, c| color_fn(&[&items[a], &items[b], &items[c]])),
        _ => return Err(Error::domain("ramsey focusing supports pairs and triples only")),
    };
    let mut out: Vec<T> = picked.into_iter().map(|i| items[i].clone()).collect();
    let shortfall = out.len() < m;
    out.truncate(m);
    assert!(
        constant_on_subsets(&out, t, &mut color_fn),
        "focusing produced a non-monochromatic subsequence"
    );
    Ok(Focused { items: out, shortfall })
}

/// A finite valuation star: along `z`, every difference `z_j - z_i` has unit
/// part congruent to `common_residue` modulo `p`, and its valuation depends
/// only on `i`, strictly increasing with `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarCertificate {
    pub z: GroundSet,
    pub p: u64,
    pub common_residue: u64,
    /// `star_valuations[i]` is the valuation of `z_j - z_i` for every `j > i`.
    pub star_valuations: Vec<u64>,
}

impl StarCertificate {
    /// Exhaustive re-check of the three star conditions, of the recorded
    /// valuations, and of the difference colorings on all pairs and triples.
    pub fn verify(&self) -> bool {
        let z = self.z.values();
        let n = z.len();
        if self.star_valuations.len() != n.saturating_sub(1) {
            return false;
        }
        let mut val = alloc::vec![alloc::vec![0u64; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let Ok(s) = valuation_split(&(&z[j] - &z[i]), self.p) else {
                    return false;
                };
                val[i][j] = s.val;
                let Ok(c) = eval_pair_coloring(self.p, &z[i], &z[j]) else {
                    return false;
                };
                if c != Color::single(self.common_residue as i64) {
                    return false;
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for l in 0..n {
                    for k in l + 1..n {
                        if (val[i][j] == val[l][k]) != (i == l) {
                            return false;
                        }
                    }
                }
                for k in j + 1..n {
                    match eval_triple_coloring(self.p, &z[i], &z[j], &z[k]) {
                        Ok(c) if c == Color::single(0) => {}
                        _ => return false,
                    }
                }
            }
        }
        let recorded = (0..n.saturating_sub(1)).all(|i| self.star_valuations[i] == val[i][i + 1]);
        let increasing = self.star_valuations.windows(2).all(|w| w[0] < w[1]);
        recorded && increasing
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarOutcome {
    pub certificate: StarCertificate,
    pub shortfall: bool,
}

fn val_of_gap(lo: &BigUint, hi: &BigUint, p: u64) -> u64 {
    valuation_split(&(hi - lo), p)
        .expect("strictly increasing ground set")
        .val
}

/// Indices of the longest strictly increasing subsequence of `v`; among
/// longest ones the earliest ending wins.
fn longest_increasing(v: &[u64]) -> Vec<usize> {
    let mut len = alloc::vec![1usize; v.len()];
    let mut prev = alloc::vec![usize::MAX; v.len()];
    for i in 0..v.len() {
        for j in 0..i {
            if v[j] < v[i] && len[j] + 1 > len[i] {
                len[i] = len[j] + 1;
                prev[i] = j;
            }
        }
    }
    let mut out = Vec::new();
    if let Some(end) = (0..v.len()).rev().max_by_key(|&i| len[i]) {
        let mut cur = end;
        loop {
            out.push(cur);
            if prev[cur] == usize::MAX {
                break;
            }
            cur = prev[cur];
        }
        out.reverse();
    }
    out
}

/// Focus on the pair coloring of differences, then on the triple coloring,
/// then keep a subsequence along which the star valuations increase.
fn composed_star(vals: &[BigUint], p: u64) -> Result<Vec<BigUint>> {
    let pairs = ramsey_focus(
        vals,
        |s| eval_pair_coloring(p, s[0], s[1]).expect("increasing pair"),
        2,
        usize::MAX,
    )?;
    let z = ramsey_focus(
        &pairs.items,
        |s| eval_triple_coloring(p, s[0], s[1], s[2]).expect("increasing triple"),
        3,
        usize::MAX,
    )?
    .items;
    if z.len() < 3 {
        return Ok(z);
    }
    // only the "equal valuations" triple color admits stars longer than two
    if eval_triple_coloring(p, &z[0], &z[1], &z[2])? != Color::single(0) {
        return Ok(z[..2].to_vec());
    }
    // the valuation of z_j - z_i now depends on i alone and survives dropping
    let v: Vec<u64> = z.windows(2).map(|w| val_of_gap(&w[0], &w[1], p)).collect();
    let mut out: Vec<BigUint> = longest_increasing(&v).into_iter().map(|i| z[i].clone()).collect();
    out.extend(z.last().cloned());
    Ok(out)
}

/// For each residue `r`, heads are focused on the pair color
/// `(unit mod p, valuation)` of differences, keeping at every head the
/// largest class with unit residue `r` (ties to the smaller valuation). Any
/// later candidate then differs from the new head by a multiple of a higher
/// power of `p`, so the per-head valuations increase on their own.
fn direct_star(vals: &[BigUint], p: u64) -> Vec<BigUint> {
    let mut best: Vec<usize> = Vec::new();
    for r in 1..p {
        let heads = focus_heads(
            vals.len(),
            |a, b| {
                let s = valuation_split(&(&vals[b] - &vals[a]), p).expect("strictly increasing ground set");
                let unit = (&s.unit % p).to_u64().unwrap_or(0);
                Color(alloc::vec![unit as i64, s.val as i64])
            },
            |classes| {
                let mut pick: Option<(&Color, usize)> = None;
                for (c, v) in classes.iter().filter(|(c, _)| c.0[0] == r as i64) {
                    if pick.is_none_or(|(_, n)| v.len() > n) {
                        pick = Some((c, v.len()));
                    }
                }
                pick.map(|(c, _)| c.clone())
            },
        );
        if heads.len() > best.len() {
            best = heads.into_iter().map(|(h, _)| h).collect();
        }
    }
    best.into_iter().map(|i| vals[i].clone()).collect()
}

/// Extracts a valuation star of length `m` from `xs`.
///
/// Runs [`ramsey_focus`] on the residue of differences over pairs, then on
/// the valuation comparison over triples, and keeps an increasing run of
/// the resulting per-index valuations. If that falls short of `m`, a direct
/// residue-constrained head focusing is also tried and the longer star is
/// kept.
pub fn star_thin(xs: &GroundSet, p: u64, m: usize) -> Result<StarOutcome> {
    if p < 3 || !arith::is_prime(p) {
        return Err(Error::domain("star thinning needs an odd prime"));
    }
    let vals = xs.values();
    let mut z = composed_star(vals, p)?;
    if z.len() < m {
        let direct = direct_star(vals, p);
        if direct.len() > z.len() {
            z = direct;
        }
    }
    let shortfall = z.len() < m;
    z.truncate(m);
    let common_residue = match z.get(..2) {
        Some([a, b]) => eval_pair_coloring(p, a, b)?.0[0] as u64,
        _ => 1,
    };
    let star_valuations = z.windows(2).map(|w| val_of_gap(&w[0], &w[1], p)).collect();
    let certificate = StarCertificate {
        z: GroundSet::new(z)?,
        p,
        common_residue,
        star_valuations,
    };
    assert!(certificate.verify(), "star focusing produced an invalid certificate");
    Ok(StarOutcome { certificate, shortfall })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValuationCase {
    /// Valuations strictly increase along the subsequence.
    Increasing,
    /// Valuations are all equal.
    Constant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseSplit {
    pub case: ValuationCase,
    pub set: GroundSet,
    pub shortfall: bool,
}

/// Splits into a subsequence of length `m` whose `p`-adic valuations either
/// strictly increase or are constant. The increasing case is preferred when
/// both reach `m`; on shortfall the longer candidate is reported, ties to
/// the constant case.
pub fn split_case_ab(xs: &GroundSet, p: u64, m: usize) -> Result<CaseSplit> {
    if p < 2 {
        return Err(Error::domain("valuation base must be at least 2"));
    }
    let vals = xs.values();
    let v: Vec<u64> = vals
        .iter()
        .map(|x| valuation_split(x, p).map(|s| s.val))
        .collect::<Result<_>>()?;

    let inc = longest_increasing(&v);

    let mut groups: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, &val) in v.iter().enumerate() {
        groups.entry(val).or_default().push(i);
    }
    let mut constant: Vec<usize> = Vec::new();
    for g in groups.into_values() {
        if g.len() > constant.len() {
            constant = g;
        }
    }

    let (case, mut picked) = if inc.len() >= m {
        (ValuationCase::Increasing, inc)
    } else if constant.len() >= m || constant.len() >= inc.len() {
        (ValuationCase::Constant, constant)
    } else {
        (ValuationCase::Increasing, inc)
    };
    let shortfall = picked.len() < m;
    picked.truncate(m);
    Ok(CaseSplit {
        case,
        set: GroundSet::new(picked.into_iter().map(|i| vals[i].clone()).collect())?,
        shortfall,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::ColoringSpec;
    use proptest::prelude::*;

    fn gs(v: &[u64]) -> GroundSet {
        GroundSet::from_u64s(v.iter().copied()).unwrap()
    }

    fn is_subsequence(sub: &GroundSet, of: &GroundSet) -> bool {
        let mut it = of.values().iter();
        sub.values().iter().all(|x| it.any(|y| y == x))
    }

    #[test]
    fn interval_rainbow_examples() {
        let x = GroundSet::from_u64s(1..=100).unwrap();
        assert_eq!(thin_interval_rainbow(&x, 2).unwrap(), gs(&[1, 2, 4, 8, 16, 32, 64]));
        assert_eq!(thin_interval_rainbow(&gs(&[5, 6, 7]), 2).unwrap(), gs(&[5]));
        assert_eq!(
            thin_interval_rainbow(&gs(&[1, 3, 9, 27]), 3).unwrap(),
            gs(&[1, 3, 9, 27])
        );
        assert!(thin_interval_rainbow(&x, 1).is_err());
    }

    #[test]
    fn residue_examples() {
        // unit parts mod 4 of 1..12: 1,1,3,1,1,3,3,1,1,1,3,3
        let r = thin_residue(&GroundSet::from_u64s(1..=12).unwrap(), 2).unwrap();
        assert_eq!(r.set, gs(&[1, 2, 4, 5, 8, 9, 10]));
        assert_eq!((r.d, r.c), (1, 0));
        let r = thin_residue(&gs(&[2, 4, 8]), 2).unwrap();
        assert_eq!((r.set, r.d, r.c), (gs(&[2, 4, 8]), 1, 0));
        let r = thin_residue(&gs(&[3]), 3).unwrap();
        assert_eq!((r.set, r.d, r.c), (gs(&[3]), 1, 0));
        // 5 = 1 + 1*4 ... k = 4, unit 5 -> residue 5 = 1 + 1*4
        let r = thin_residue(&gs(&[5, 21, 40]), 4).unwrap();
        assert_eq!((r.d, r.c), (1, 1));
        assert!(thin_residue(&gs(&[]), 3).is_err());
    }

    #[test]
    fn residue_thinning_against_table() {
        let x = GroundSet::from_u64s(1..=500).unwrap();
        for k in 2..6u64 {
            let r = thin_residue(&x, k).unwrap();
            assert!(r.d >= 1 && r.d < k && r.c < k);
            for v in r.set.values() {
                let v = v.to_u64().unwrap();
                let mut u = v;
                while u % k == 0 {
                    u /= k;
                }
                assert_eq!(u % (k * k), r.d + r.c * k);
            }
        }
    }

    #[test]
    fn focus_parity_example() {
        let items: Vec<u64> = (1..=20).collect();
        let out = ramsey_focus(&items, |s| Color::single(((s[0] + s[1]) % 2) as i64), 2, 4).unwrap();
        assert!(!out.shortfall);
        assert_eq!(out.items.len(), 4);
        let c0 = (out.items[0] + out.items[1]) % 2;
        for a in 0..4 {
            for b in a + 1..4 {
                assert_eq!((out.items[a] + out.items[b]) % 2, c0);
            }
        }
    }

    #[test]
    fn focus_constant_takes_prefix() {
        let items: Vec<u64> = (10..30).collect();
        for t in [2, 3] {
            let out = ramsey_focus(&items, |_| Color::single(1), t, 5).unwrap();
            assert_eq!(out.items, [10, 11, 12, 13, 14]);
            assert!(!out.shortfall);
        }
    }

    #[test]
    fn focus_shortfall_on_rainbow() {
        let items: Vec<u64> = (1..=3).collect();
        let out = ramsey_focus(&items, |s| Color(s.iter().map(|v| **v as i64).collect()), 2, 5).unwrap();
        assert!(out.shortfall);
        assert!(out.items.len() <= 2);
        assert!(ramsey_focus(&items, |_| Color::single(0), 4, 2).is_err());
    }

    #[test]
    fn focus_triples_by_sum_mod_3() {
        let items: Vec<u64> = (1..=60).collect();
        let out = ramsey_focus(&items, |s| Color::single(((s[0] + s[1] + s[2]) % 3) as i64), 3, 4).unwrap();
        assert!(!out.shortfall);
        let mut seen = alloc::collections::BTreeSet::new();
        for j in crate::forms::k_subsets(out.items.len(), 3) {
            let s: u64 = j.indices().iter().map(|&i| out.items[i - 1]).sum();
            seen.insert(s % 3);
        }
        assert_eq!(seen.len(), 1);
    }

    #[test]
    fn star_example_chain() {
        let z = gs(&[1, 2, 5, 14]);
        let out = star_thin(&z, 3, 4).unwrap();
        assert!(!out.shortfall);
        assert_eq!(out.certificate.z, z);
        assert_eq!(out.certificate.common_residue, 1);
        assert_eq!(out.certificate.star_valuations, [0, 1, 2]);
        assert!(out.certificate.verify());
    }

    #[test]
    fn star_small_inputs() {
        let out = star_thin(&gs(&[4, 6]), 3, 2).unwrap();
        assert!(!out.shortfall);
        assert_eq!(out.certificate.z, gs(&[4, 6]));
        // differences 1, 2, 1 disagree on residues, so no 3-element star exists
        let out = star_thin(&gs(&[1, 2, 3]), 3, 3).unwrap();
        assert!(out.shortfall);
        assert!(out.certificate.verify());
        assert!(star_thin(&gs(&[1, 2]), 4, 2).is_err());
    }

    #[test]
    fn star_rejects_forged_certificates() {
        let good = star_thin(&gs(&[1, 2, 5, 14]), 3, 4).unwrap().certificate;
        let mut bad = good.clone();
        bad.common_residue = 2;
        assert!(!bad.verify());
        let mut bad = good.clone();
        bad.z = gs(&[1, 2, 5, 15]);
        assert!(!bad.verify());
        let mut bad = good;
        bad.star_valuations = alloc::vec![0, 2, 1];
        assert!(!bad.verify());
    }

    #[test]
    fn split_examples() {
        let s = split_case_ab(&gs(&[3, 9, 27, 81]), 3, 4).unwrap();
        assert_eq!(
            (s.case, s.set, s.shortfall),
            (ValuationCase::Increasing, gs(&[3, 9, 27, 81]), false)
        );
        let s = split_case_ab(&gs(&[1, 2, 4, 5, 7, 8]), 3, 4).unwrap();
        assert_eq!(
            (s.case, s.set, s.shortfall),
            (ValuationCase::Constant, gs(&[1, 2, 4, 5]), false)
        );
        // valuations 1, 1, 2
        let s = split_case_ab(&gs(&[3, 6, 9]), 3, 3).unwrap();
        assert_eq!(
            (s.case, s.set, s.shortfall),
            (ValuationCase::Constant, gs(&[3, 6]), true)
        );
    }

    fn ground() -> impl Strategy<Value = GroundSet> {
        proptest::collection::btree_set(1u64..100_000, 1..60).prop_map(|s| GroundSet::from_u64s(s).unwrap())
    }

    proptest! {
        #[test]
        fn interval_rainbow_invariants(x in ground(), base in 2u64..5) {
            let out = thin_interval_rainbow(&x, base).unwrap();
            prop_assert!(is_subsequence(&out, &x));
            let spec = ColoringSpec::interval_base(base).unwrap();
            let colors: Vec<i64> = out.values().iter().map(|v| spec.eval(v).unwrap().0[0]).collect();
            prop_assert!(colors.windows(2).all(|w| w[0] < w[1]));
            let gaps: Vec<BigUint> = out.values().windows(2).map(|w| &w[1] - &w[0]).collect();
            prop_assert!(gaps.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(thin_interval_rainbow(&x, base).unwrap(), out);
        }

        #[test]
        fn star_certificates_verify(x in ground(), p in prop::sample::select(alloc::vec![3u64, 5, 7]), m in 2usize..8) {
            let out = star_thin(&x, p, m).unwrap();
            prop_assert!(out.certificate.verify());
            prop_assert!(is_subsequence(&out.certificate.z, &x));
            prop_assert_eq!(out.shortfall, out.certificate.z.len() < m);
        }

        #[test]
        fn split_invariants(x in ground(), p in 2u64..6, m in 1usize..6) {
            let s = split_case_ab(&x, p, m).unwrap();
            prop_assert!(is_subsequence(&s.set, &x));
            let v: Vec<u64> = s.set.values().iter().map(|y| valuation_split(y, p).unwrap().val).collect();
            match s.case {
                ValuationCase::Increasing => prop_assert!(v.windows(2).all(|w| w[0] < w[1])),
                ValuationCase::Constant => prop_assert!(v.windows(2).all(|w| w[0] == w[1])),
            }
            prop_assert_eq!(s.shortfall, s.set.len() < m);
        }

        #[test]
        fn focus_pairs_monochromatic(seed in any::<u64>(), n in 1usize..40, m in 1usize..6) {
            let items: Vec<u64> = (0..n as u64).collect();
            let color = |s: &[&u64]| Color::single(((s[0].wrapping_mul(31) ^ s[1].wrapping_mul(17) ^ seed) % 3) as i64);
            let out = ramsey_focus(&items, color, 2, m).unwrap();
            prop_assert!(constant_on_subsets(&out.items, 2, &mut |s: &[&u64]| color(s)));
            prop_assert_eq!(out.shortfall, out.items.len() < m);
            prop_assert!(out.items.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
