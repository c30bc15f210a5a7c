//! Finite-prefix classification against the canonical patterns of each
//! theorem profile.
//!
//! A pattern is *consistent* with a prefix when none of its defining
//! conditions is violated by any pair of evaluated objects. Consistency on a
//! prefix never certifies the infinite statement; it only fails to refute it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::colorings::{eval_coloring, Color, ColoringSpec};
use crate::error::{Error, Result};
use crate::forms::{alt_sign_vector, eval_form_positive, k_subsets, GroundSet, IndexSet, LinearForm, Parity};

/// Largest prefix for which the all-subsets profile is materialized.
pub const TAYLOR_MAX_N: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatternLabel {
    I,
    II,
    III,
    IV,
    V,
}

impl PatternLabel {
    pub const ALL: [PatternLabel; 5] = [Self::I, Self::II, Self::III, Self::IV, Self::V];

    pub fn roman(self) -> &'static str {
        match self {
            Self::I => "i",
            Self::II => "ii",
            Self::III => "iii",
            Self::IV => "iv",
            Self::V => "v",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        Self::ALL.into_iter().find(|l| l.roman().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for PatternLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.roman())
    }
}

/// Equivalence relations on index sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationKind {
    Trivial,
    Identity,
    Max,
    Min,
    MinMax,
}

impl RelationKind {
    /// Two index sets are related iff their keys agree.
    pub fn key(self, j: &IndexSet) -> Vec<usize> {
        let (lo, hi) = (j.min_index().unwrap_or(0), j.max_index().unwrap_or(0));
        match self {
            RelationKind::Trivial => Vec::new(),
            RelationKind::Identity => j.indices().to_vec(),
            RelationKind::Max => alloc::vec![hi],
            RelationKind::Min => alloc::vec![lo],
            RelationKind::MinMax => alloc::vec![lo, hi],
        }
    }

    pub fn related(self, a: &IndexSet, b: &IndexSet) -> bool {
        self.key(a) == self.key(b)
    }
}

/// The theorem whose pattern list a prefix is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremProfile {
    /// All nonempty finite sums; five patterns.
    Taylor,
    /// `X` together with its `k`-term sums; five patterns.
    T31(usize),
    /// `X` together with even alternating sums; five patterns.
    T42(usize),
    /// `X` together with odd alternating sums; three patterns.
    T51(usize),
    /// `k`-term sums alone; three patterns.
    T61(usize),
    /// Even alternating sums alone; five patterns.
    T71(usize),
    /// Odd alternating sums alone; three patterns.
    T81(usize),
}

impl TheoremProfile {
    pub fn name(self) -> &'static str {
        match self {
            Self::Taylor => "TAYLOR",
            Self::T31(_) => "T31",
            Self::T42(_) => "T42",
            Self::T51(_) => "T51",
            Self::T61(_) => "T61",
            Self::T71(_) => "T71",
            Self::T81(_) => "T81",
        }
    }

    pub fn parse(name: &str, k: usize) -> Result<Self> {
        let p = match name.to_ascii_uppercase().as_str() {
            "TAYLOR" => Self::Taylor,
            "T31" => Self::T31(k),
            "T42" => Self::T42(k),
            "T51" => Self::T51(k),
            "T61" => Self::T61(k),
            "T71" => Self::T71(k),
            "T81" => Self::T81(k),
            _ => return Err(Error::domain("unknown theorem profile")),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn arity(self) -> Option<usize> {
        match self {
            Self::Taylor => None,
            Self::T31(k) | Self::T42(k) | Self::T51(k) | Self::T61(k) | Self::T71(k) | Self::T81(k) => Some(k),
        }
    }

    pub fn validate(self) -> Result<()> {
        let ok = match self {
            Self::Taylor => true,
            Self::T31(k) | Self::T61(k) => k >= 2,
            Self::T42(k) | Self::T71(k) => k >= 2 && k % 2 == 0,
            Self::T51(k) | Self::T81(k) => k >= 3 && k % 2 == 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain("profile arity/parity constraint violated"))
        }
    }

    /// Whether the elements of `X` themselves are colored objects.
    pub fn includes_ground(self) -> bool {
        matches!(self, Self::T31(_) | Self::T42(_) | Self::T51(_))
    }

    /// The linear form whose values are colored, for the fixed-arity profiles.
    pub fn form(self) -> Option<LinearForm> {
        match self {
            Self::Taylor => None,
            Self::T31(k) | Self::T61(k) => LinearForm::sum(k).ok(),
            Self::T42(k) | Self::T71(k) => alt_sign_vector(k, Parity::Even).ok(),
            Self::T51(k) | Self::T81(k) => alt_sign_vector(k, Parity::Odd).ok(),
        }
    }

    pub fn labels(self) -> &'static [PatternLabel] {
        match self {
            Self::Taylor | Self::T31(_) | Self::T42(_) | Self::T71(_) => &PatternLabel::ALL,
            Self::T51(_) | Self::T61(_) | Self::T81(_) => &PatternLabel::ALL[..3],
        }
    }

    /// The conditions that together define `label` in this profile.
    pub fn clauses(self, label: PatternLabel) -> Vec<Clause> {
        use Clause::*;
        use PatternLabel as L;
        use RelationKind as R;
        let relation = |l: PatternLabel| match l {
            L::I => R::Trivial,
            L::II => R::Identity,
            L::III => R::Max,
            L::IV => R::Min,
            L::V => R::MinMax,
        };
        match self {
            Self::Taylor | Self::T61(_) | Self::T71(_) | Self::T81(_) => alloc::vec![Relation(relation(label))],
            Self::T31(_) => match label {
                L::I => alloc::vec![UnionMonochromatic],
                L::II => alloc::vec![UnionRainbow],
                L::III => alloc::vec![GroundRainbow, Anchored(End::Max)],
                L::IV => alloc::vec![GroundRainbow, Anchored(End::Min)],
                L::V => alloc::vec![GroundRainbow, Relation(R::MinMax), Disjoint],
            },
            Self::T42(_) | Self::T51(_) => match label {
                L::I => alloc::vec![UnionMonochromatic],
                L::II => alloc::vec![UnionRainbow],
                L::III => alloc::vec![GroundRainbow, Anchored(End::Max)],
                L::IV => alloc::vec![GroundMonochromatic, Disjoint, Relation(R::Min)],
                L::V => alloc::vec![GroundRainbow, Disjoint, Relation(R::MinMax)],
            },
        }
    }
}

impl fmt::Display for TheoremProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.arity() {
            Some(k) => write!(f, "{}(k={k})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    Min,
    Max,
}

/// One defining condition of a pattern, stated over pairs of objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Clause {
    /// Among form values: equal colors iff the index sets are related.
    Relation(RelationKind),
    /// Every object has the same color.
    UnionMonochromatic,
    /// Distinct objects have distinct colors.
    UnionRainbow,
    GroundRainbow,
    GroundMonochromatic,
    /// The form value on `J` has the color of `x_{max J}` (or `x_{min J}`).
    Anchored(End),
    /// No ground element shares a color with a form value.
    Disjoint,
}

impl Clause {
    /// Whether the clause demands equal colors on this pair.
    pub fn expects_equal(self, a: &Object, b: &Object) -> bool {
        match self {
            Clause::Relation(kind) => match (a, b) {
                (Object::Combo(x), Object::Combo(y)) => kind.related(x, y),
                _ => false,
            },
            Clause::UnionMonochromatic | Clause::GroundMonochromatic | Clause::Anchored(_) => true,
            Clause::UnionRainbow | Clause::GroundRainbow => a == b,
            Clause::Disjoint => false,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Clause::Relation(RelationKind::Trivial) => "all-equal",
            Clause::Relation(RelationKind::Identity) => "identity",
            Clause::Relation(RelationKind::Max) => "max",
            Clause::Relation(RelationKind::Min) => "min",
            Clause::Relation(RelationKind::MinMax) => "minmax",
            Clause::UnionMonochromatic => "union-monochromatic",
            Clause::UnionRainbow => "union-rainbow",
            Clause::GroundRainbow => "ground-rainbow",
            Clause::GroundMonochromatic => "ground-monochromatic",
            Clause::Anchored(End::Max) => "anchored-max",
            Clause::Anchored(End::Min) => "anchored-min",
            Clause::Disjoint => "disjoint",
        }
    }
}

/// A colored object: a ground element `x_i` or a form value on an index set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Object {
    Element(usize),
    Combo(IndexSet),
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Element(i) => write!(f, "x{i}"),
            Object::Combo(j) => write!(f, "{j}"),
        }
    }
}

/// A pair of objects whose colors contradict a clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub clause: Clause,
    pub left: Object,
    pub right: Object,
    pub left_color: Color,
    pub right_color: Color,
}

impl Witness {
    pub fn is_violation(&self) -> bool {
        (self.left_color == self.right_color) != self.clause.expects_equal(&self.left, &self.right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternVerdict {
    pub profile: TheoremProfile,
    pub n: usize,
    /// Patterns violated by no observed pair, in the theorem's order.
    pub consistent: Vec<PatternLabel>,
    /// The remaining patterns, each with the first violating pair found.
    pub excluded: Vec<(PatternLabel, Witness)>,
    /// Objects grouped by color, classes ordered by their first object.
    pub observed_classes: Vec<Vec<Object>>,
    /// Set when the prefix is too short to contain any form value.
    pub vacuous: bool,
}

impl PatternVerdict {
    pub fn is_consistent(&self, label: PatternLabel) -> bool {
        self.consistent.contains(&label)
    }

    pub fn excluded_labels(&self) -> Vec<PatternLabel> {
        self.excluded.iter().map(|(l, _)| *l).collect()
    }
}

/// Colors of every object a profile looks at on the first `n` elements.
#[derive(Clone, Debug)]
pub struct Observation {
    pub ground: Vec<Color>,
    pub combos: Vec<(IndexSet, Color)>,
}

impl Observation {
    pub fn color_of(&self, obj: &Object) -> Option<&Color> {
        match obj {
            Object::Element(i) => self.ground.get(i.checked_sub(1)?),
            Object::Combo(j) => self.combos.iter().find(|(c, _)| c == j).map(|(_, col)| col),
        }
    }

    fn objects(&self) -> impl Iterator<Item = (Object, &Color)> {
        let ground = self.ground.iter().enumerate().map(|(i, c)| (Object::Element(i + 1), c));
        ground.chain(self.combos.iter().map(|(j, c)| (Object::Combo(j.clone()), c)))
    }

    fn ground_objects(&self) -> impl Iterator<Item = (Object, &Color)> {
        self.ground.iter().enumerate().map(|(i, c)| (Object::Element(i + 1), c))
    }

    fn combo_objects(&self) -> impl Iterator<Item = (Object, &Color)> {
        self.combos.iter().map(|(j, c)| (Object::Combo(j.clone()), c))
    }
}

/// All nonempty subsets of `{1..n}`, by size and then lexicographically.
pub fn nonempty_subsets(n: usize) -> Vec<IndexSet> {
    (1..=n).flat_map(|k| k_subsets(n, k)).collect()
}

fn check_prefix(xs: &GroundSet, n: usize) -> Result<()> {
    if n > xs.len() {
        return Err(Error::domain("prefix length exceeds the ground set"));
    }
    Ok(())
}

/// Evaluates the objects of `profile` on the first `n` elements of `xs`.
pub fn observe(spec: &ColoringSpec, xs: &GroundSet, profile: TheoremProfile, n: usize) -> Result<Observation> {
    profile.validate()?;
    check_prefix(xs, n)?;
    let ground = if profile.includes_ground() {
        xs.values()[..n]
            .iter()
            .map(|x| eval_coloring(spec, x))
            .collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    let combos = match profile.form() {
        Some(form) => colored_combos(spec, xs, &form, n)?,
        None => {
            if n > TAYLOR_MAX_N {
                return Err(Error::budget("all-subset profile is capped at 20 elements"));
            }
            nonempty_subsets(n)
                .into_iter()
                .map(|j| {
                    let s: BigUint = j.indices().iter().map(|&i| &xs.values()[i - 1]).sum();
                    eval_coloring(spec, &s).map(|c| (j, c))
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(Observation { ground, combos })
}

fn colored_combos(spec: &ColoringSpec, xs: &GroundSet, form: &LinearForm, n: usize) -> Result<Vec<(IndexSet, Color)>> {
    k_subsets(n, form.arity())
        .into_iter()
        .map(|j| {
            let v = eval_form_positive(form, xs, &j)?;
            eval_coloring(spec, &v).map(|c| (j, c))
        })
        .collect()
}

/// Groups the `k`-subsets of `{1..n}` by the color of the form value.
pub fn induced_classes(spec: &ColoringSpec, xs: &GroundSet, form: &LinearForm, n: usize) -> Result<Vec<Vec<IndexSet>>> {
    check_prefix(xs, n)?;
    let combos = colored_combos(spec, xs, form, n)?;
    Ok(group_by_color(combos.into_iter()))
}

fn group_by_color<T>(items: impl Iterator<Item = (T, Color)>) -> Vec<Vec<T>> {
    let mut slot: BTreeMap<Color, usize> = BTreeMap::new();
    let mut classes: Vec<Vec<T>> = Vec::new();
    for (obj, color) in items {
        let next = classes.len();
        let idx = *slot.entry(color).or_insert(next);
        if idx == next {
            classes.push(Vec::new());
        }
        classes[idx].push(obj);
    }
    classes
}

/// First pair `(earlier, later)` showing that "equal color iff equal key"
/// fails, or `None` when the color partition equals the key partition.
fn partition_conflict<'c, K: Ord + Clone, O: Clone>(items: impl Iterator<Item = (K, &'c Color, O)>) -> Option<(O, O)> {
    let mut by_color: BTreeMap<&Color, (K, O)> = BTreeMap::new();
    let mut by_key: BTreeMap<K, (&Color, O)> = BTreeMap::new();
    for (key, color, obj) in items {
        if let Some((k0, o0)) = by_color.get(color) {
            if *k0 != key {
                return Some((o0.clone(), obj));
            }
        } else {
            by_color.insert(color, (key.clone(), obj.clone()));
        }
        if let Some((c0, o0)) = by_key.get(&key) {
            if *c0 != color {
                return Some((o0.clone(), obj));
            }
        } else {
            by_key.insert(key, (color, obj));
        }
    }
    None
}

fn witness(clause: Clause, obs: &Observation, left: Object, right: Object) -> Witness {
    let left_color = obs.color_of(&left).cloned().unwrap_or_default();
    let right_color = obs.color_of(&right).cloned().unwrap_or_default();
    Witness {
        clause,
        left,
        right,
        left_color,
        right_color,
    }
}

fn all_equal<'a>(mut items: impl Iterator<Item = (Object, &'a Color)>) -> Option<(Object, Object)> {
    let (first, c0) = items.next()?;
    items.find(|(_, c)| *c != c0).map(|(o, _)| (first, o))
}

fn all_distinct<'a>(items: impl Iterator<Item = (Object, &'a Color)>) -> Option<(Object, Object)> {
    let mut seen: BTreeMap<&Color, Object> = BTreeMap::new();
    for (o, c) in items {
        if let Some(prev) = seen.get(c) {
            return Some((prev.clone(), o));
        }
        seen.insert(c, o);
    }
    None
}

/// Finds a pair of observed objects violating `clause`.
pub fn find_violation(clause: Clause, obs: &Observation) -> Option<Witness> {
    let pair = match clause {
        Clause::Relation(kind) => partition_conflict(
            obs.combos
                .iter()
                .map(|(j, c)| (kind.key(j), c, Object::Combo(j.clone()))),
        ),
        Clause::UnionMonochromatic => all_equal(obs.objects()),
        Clause::UnionRainbow => all_distinct(obs.objects()),
        Clause::GroundMonochromatic => all_equal(obs.ground_objects()),
        Clause::GroundRainbow => all_distinct(obs.ground_objects()),
        Clause::Anchored(end) => obs.combos.iter().find_map(|(j, c)| {
            let i = match end {
                End::Max => j.max_index()?,
                End::Min => j.min_index()?,
            };
            (obs.ground.get(i - 1)? != c).then(|| (Object::Combo(j.clone()), Object::Element(i)))
        }),
        Clause::Disjoint => {
            let mut ground: BTreeMap<&Color, usize> = BTreeMap::new();
            for (i, c) in obs.ground.iter().enumerate() {
                ground.entry(c).or_insert(i + 1);
            }
            obs.combo_objects()
                .find_map(|(o, c)| ground.get(c).map(|&i| (Object::Element(i), o)))
        }
    };
    pair.map(|(l, r)| witness(clause, obs, l, r))
}

/// Decides which patterns of `profile` survive on the first `n` elements.
pub fn classify_canonical(
    spec: &ColoringSpec,
    xs: &GroundSet,
    profile: TheoremProfile,
    n: usize,
) -> Result<PatternVerdict> {
    profile.validate()?;
    check_prefix(xs, n)?;
    let k = profile.arity().unwrap_or(1);
    if n < k {
        return Ok(PatternVerdict {
            profile,
            n,
            consistent: profile.labels().to_vec(),
            excluded: Vec::new(),
            observed_classes: Vec::new(),
            vacuous: true,
        });
    }
    let obs = observe(spec, xs, profile, n)?;
    Ok(verdict_from_observation(profile, n, &obs))
}

pub fn verdict_from_observation(profile: TheoremProfile, n: usize, obs: &Observation) -> PatternVerdict {
    let mut consistent = Vec::new();
    let mut excluded = Vec::new();
    for &label in profile.labels() {
        match profile
            .clauses(label)
            .into_iter()
            .find_map(|cl| find_violation(cl, obs))
        {
            Some(w) => excluded.push((label, w)),
            None => consistent.push(label),
        }
    }
    let observed_classes = group_by_color(obs.objects().map(|(o, c)| (o, c.clone())));
    PatternVerdict {
        profile,
        n,
        consistent,
        excluded,
        observed_classes,
        vacuous: false,
    }
}

/// A total coloring of the `k`-subsets of `{1..n}`, stored in
/// lexicographic subset order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetTable {
    n: usize,
    k: usize,
    subsets: Vec<IndexSet>,
    colors: Vec<Color>,
}

impl SubsetTable {
    pub fn from_map(n: usize, k: usize, map: &BTreeMap<IndexSet, Color>) -> Result<Self> {
        let subsets = k_subsets(n, k);
        if map.len() != subsets.len() {
            return Err(Error::domain("color table is not total on the k-subsets"));
        }
        let colors = subsets
            .iter()
            .map(|j| {
                map.get(j)
                    .cloned()
                    .ok_or_else(|| Error::domain("color table is not total on the k-subsets"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SubsetTable { n, k, subsets, colors })
    }

    /// Builds a table from colors listed in lexicographic subset order.
    pub fn from_colors(n: usize, k: usize, colors: Vec<Color>) -> Result<Self> {
        let subsets = k_subsets(n, k);
        if colors.len() != subsets.len() {
            return Err(Error::domain("color table is not total on the k-subsets"));
        }
        Ok(SubsetTable { n, k, subsets, colors })
    }

    /// Colors every `k`-subset with `f`.
    pub fn from_fn(n: usize, k: usize, mut f: impl FnMut(&IndexSet) -> Color) -> Self {
        let subsets = k_subsets(n, k);
        let colors = subsets.iter().map(&mut f).collect();
        SubsetTable { n, k, subsets, colors }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> impl Iterator<Item = (&IndexSet, &Color)> {
        self.subsets.iter().zip(&self.colors)
    }

    pub fn color(&self, j: &IndexSet) -> Option<&Color> {
        self.subsets.binary_search(j).ok().map(|i| &self.colors[i])
    }

    /// The table restricted to the `k`-subsets of `support`, relabelled onto
    /// `{1..|support|}`.
    pub fn restrict(&self, support: &[usize]) -> SubsetTable {
        let m = support.len();
        let subsets = k_subsets(m, self.k);
        let colors = subsets
            .iter()
            .map(|j| {
                let orig = IndexSet::from_sorted(j.indices().iter().map(|&p| support[p - 1]).collect());
                self.color(&orig).cloned().unwrap_or_default()
            })
            .collect();
        SubsetTable {
            n: m,
            k: self.k,
            subsets,
            colors,
        }
    }
}

/// `Y:I`, the entries of sorted `y` at the 1-based positions in `positions`.
pub fn select_positions(y: &IndexSet, positions: &[usize]) -> Vec<usize> {
    positions.iter().map(|&p| y.indices()[p - 1]).collect()
}

/// All subsets of `{1..k}`, ordered by their bitmask.
pub fn position_subsets(k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << k)
        .map(|mask| (1..=k).filter(|p| mask & (1 << (p - 1)) != 0).collect())
        .collect()
}

/// Every `I` whose relation `Y:I = Z:I` coincides with the table's color
/// partition, ordered by bitmask.
pub fn er_canonical_check(table: &SubsetTable) -> Vec<Vec<usize>> {
    position_subsets(table.k)
        .into_iter()
        .filter(|positions| {
            partition_conflict(table.entries().map(|(j, c)| (select_positions(j, positions), c, ()))).is_none()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{alt_sign_vector, Parity};

    fn gs(v: &[u64]) -> GroundSet {
        GroundSet::from_u64s(v.iter().copied()).unwrap()
    }

    fn js(v: &[usize]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn induced_classes_example() {
        // differences 2,6,14,4,12,8 have dyadic indices 1,2,3,2,3,3
        let classes = induced_classes(
            &ColoringSpec::interval_base(2).unwrap(),
            &gs(&[2, 4, 8, 16]),
            &alt_sign_vector(2, Parity::Even).unwrap(),
            4,
        )
        .unwrap();
        let expect = alloc::vec![
            alloc::vec![js(&[1, 2])],
            alloc::vec![js(&[1, 3]), js(&[2, 3])],
            alloc::vec![js(&[1, 4]), js(&[2, 4]), js(&[3, 4])],
        ];
        assert_eq!(classes, expect);
    }

    #[test]
    fn induced_classes_extremes() {
        let x = gs(&[1, 3, 7, 20]);
        let form = LinearForm::sum(2).unwrap();
        let mono = induced_classes(&ColoringSpec::monochromatic(Color::single(3)), &x, &form, 4).unwrap();
        assert_eq!(mono.len(), 1);
        assert_eq!(mono[0].len(), 6);
        let values: Vec<BigUint> = k_subsets(4, 2)
            .iter()
            .map(|j| eval_form_positive(&form, &x, j).unwrap())
            .collect();
        let inj = induced_classes(&ColoringSpec::injective_on(&values), &x, &form, 4).unwrap();
        assert_eq!(inj.len(), 6);
    }

    #[test]
    fn classify_dyadic_differences() {
        let v = classify_canonical(
            &ColoringSpec::interval_base(2).unwrap(),
            &gs(&[2, 4, 8, 16]),
            TheoremProfile::T71(2),
            4,
        )
        .unwrap();
        assert_eq!(v.consistent, [PatternLabel::III]);
        assert!(!v.vacuous);
        for (_, w) in &v.excluded {
            assert!(w.is_violation());
        }
    }

    #[test]
    fn vacuous_prefix() {
        let v = classify_canonical(
            &ColoringSpec::interval_base(2).unwrap(),
            &gs(&[2, 4]),
            TheoremProfile::T31(3),
            2,
        )
        .unwrap();
        assert!(v.vacuous);
        assert_eq!(v.consistent.len(), 5);
    }

    #[test]
    fn profile_validation() {
        assert!(TheoremProfile::T42(3).validate().is_err());
        assert!(TheoremProfile::T51(2).validate().is_err());
        assert!(TheoremProfile::T81(1).validate().is_err());
        assert!(TheoremProfile::T31(1).validate().is_err());
        assert!(TheoremProfile::parse("t71", 4).is_ok());
        assert!(TheoremProfile::parse("T99", 4).is_err());
        let x = gs(&[1, 2, 3]);
        assert!(classify_canonical(&ColoringSpec::sqrt2_mod5(), &x, TheoremProfile::T61(2), 4).is_err());
    }

    #[test]
    fn relations_are_equivalences() {
        for k in 1..=4 {
            let sets = k_subsets(6, k);
            for kind in [
                RelationKind::Trivial,
                RelationKind::Identity,
                RelationKind::Max,
                RelationKind::Min,
                RelationKind::MinMax,
            ] {
                for a in &sets {
                    assert!(kind.related(a, a));
                    for b in &sets {
                        assert_eq!(kind.related(a, b), kind.related(b, a));
                        for c in &sets {
                            if kind.related(a, b) && kind.related(b, c) {
                                assert!(kind.related(a, c));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn relation_refinement_order() {
        use RelationKind::*;
        let sets = k_subsets(6, 3);
        let finer = [
            (Identity, MinMax),
            (MinMax, Max),
            (MinMax, Min),
            (Max, Trivial),
            (Min, Trivial),
        ];
        for (fine, coarse) in finer {
            for a in &sets {
                for b in &sets {
                    if fine.related(a, b) {
                        assert!(coarse.related(a, b));
                    }
                }
            }
        }
    }

    #[test]
    fn minmax_is_identity_on_pairs() {
        let sets = k_subsets(8, 2);
        for a in &sets {
            for b in &sets {
                assert_eq!(RelationKind::MinMax.related(a, b), RelationKind::Identity.related(a, b));
            }
        }
    }

    #[test]
    fn monochromatic_and_injective_extremes() {
        let x = gs(&[1, 2, 4, 8, 16, 32]);
        let mono = ColoringSpec::monochromatic(Color::single(0));
        let profiles = [
            TheoremProfile::Taylor,
            TheoremProfile::T31(2),
            TheoremProfile::T42(2),
            TheoremProfile::T51(3),
            TheoremProfile::T61(3),
            TheoremProfile::T71(4),
            TheoremProfile::T81(3),
        ];
        for p in profiles {
            let v = classify_canonical(&mono, &x, p, 6).unwrap();
            assert!(v.is_consistent(PatternLabel::I), "{p}");
            assert!(!v.is_consistent(PatternLabel::II), "{p}");
        }
        // powers of two: every subset sum is distinct
        let sums: Vec<BigUint> = (1u64..64).map(BigUint::from).collect();
        let inj = ColoringSpec::injective_on(&sums);
        let v = classify_canonical(&inj, &x, TheoremProfile::Taylor, 6).unwrap();
        assert_eq!(v.consistent, [PatternLabel::II]);
    }

    #[test]
    fn taylor_max_pattern_on_dyadic_ground() {
        // subset sums of distinct powers of two keep the dyadic index of the largest term
        let x = gs(&[1, 2, 4, 8, 16]);
        let v = classify_canonical(&ColoringSpec::interval_base(2).unwrap(), &x, TheoremProfile::Taylor, 5).unwrap();
        assert_eq!(v.consistent, [PatternLabel::III]);
        let v = classify_canonical(&ColoringSpec::valuation_only(2).unwrap(), &x, TheoremProfile::Taylor, 5).unwrap();
        assert_eq!(v.consistent, [PatternLabel::IV]);
    }

    #[test]
    fn witness_objects_carry_their_colors() {
        let x = gs(&[1, 2, 4, 8, 16]);
        let spec = ColoringSpec::interval_base(2).unwrap();
        let obs = observe(&spec, &x, TheoremProfile::T31(2), 5).unwrap();
        let v = verdict_from_observation(TheoremProfile::T31(2), 5, &obs);
        for (_, w) in &v.excluded {
            assert_eq!(obs.color_of(&w.left), Some(&w.left_color));
            assert_eq!(obs.color_of(&w.right), Some(&w.right_color));
            assert!(w.is_violation());
        }
    }

    fn brute_er(table: &SubsetTable) -> Vec<Vec<usize>> {
        position_subsets(table.k())
            .into_iter()
            .filter(|pos| {
                table.entries().all(|(y, cy)| {
                    table
                        .entries()
                        .all(|(z, cz)| (cy == cz) == (select_positions(y, pos) == select_positions(z, pos)))
                })
            })
            .collect()
    }

    #[test]
    fn er_examples() {
        let mono = SubsetTable::from_fn(4, 2, |_| Color::single(0));
        assert_eq!(er_canonical_check(&mono), [Vec::<usize>::new()]);
        let mut next = 0;
        let rainbow = SubsetTable::from_fn(4, 2, |_| {
            next += 1;
            Color::single(next)
        });
        assert_eq!(er_canonical_check(&rainbow), [alloc::vec![1, 2]]);
        let by_min = SubsetTable::from_fn(4, 2, |j| Color::single(j.min_index().unwrap() as i64));
        assert_eq!(er_canonical_check(&by_min), [alloc::vec![1]]);
        assert_eq!(brute_er(&by_min), [alloc::vec![1]]);
    }

    #[test]
    fn partial_table_is_rejected() {
        let mut map = BTreeMap::new();
        map.insert(js(&[1, 2]), Color::single(0));
        assert!(SubsetTable::from_map(3, 2, &map).is_err());
        map.insert(js(&[1, 3]), Color::single(0));
        map.insert(js(&[2, 3]), Color::single(1));
        let t = SubsetTable::from_map(3, 2, &map).unwrap();
        assert_eq!(er_canonical_check(&t), [alloc::vec![1]]);
    }

    #[test]
    fn er_check_matches_brute_force_on_random_tables() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..400 {
            let n = rng.gen_range(1..=6);
            let k = rng.gen_range(1..=3.min(n));
            let palette = rng.gen_range(1..=4);
            let kind = rng.gen_range(0..3);
            let table = SubsetTable::from_fn(n, k, |j| match kind {
                0 => Color::single(rng.gen_range(0..palette)),
                1 => Color(select_positions(j, &[1]).into_iter().map(|v| v as i64).collect()),
                _ => Color(alloc::vec![
                    j.max_index().unwrap() as i64,
                    j.min_index().unwrap() as i64
                ]),
            });
            assert_eq!(er_canonical_check(&table), brute_er(&table));
        }
    }

    #[test]
    fn restriction_relabels() {
        let by_min = SubsetTable::from_fn(5, 2, |j| Color::single(j.min_index().unwrap() as i64));
        let r = by_min.restrict(&[2, 4, 5]);
        assert_eq!(r.color(&js(&[1, 2])), Some(&Color::single(2)));
        assert_eq!(r.color(&js(&[2, 3])), Some(&Color::single(4)));
    }
}
