//! `P`-submodules of `(g/p)*` as closed sets of noncompact positive roots.
//!
//! A set `S` of noncompact positive roots spans a submodule exactly when, for
//! every `a` in `S` and every `b` compact or noncompact positive, `a + b` is
//! either outside the root set or inside `S`. Equivalently `S` is an up-set of
//! the preorder generated by the edges `a -> a + b`; enumeration works on the
//! strongly connected classes of that preorder.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::parabolic::{ParabolicFlag, Weight};
use crate::rootsys::RootId;
use crate::{Error, Result};

/// Bitmask over the noncompact positive roots of one flag (by position).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootSet {
    words: Vec<u64>,
    universe: usize,
}

impl RootSet {
    pub fn empty(universe: usize) -> Self {
        RootSet {
            words: vec![0; universe.div_ceil(64)],
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for p in 0..universe {
            s.insert(p);
        }
        s
    }

    pub fn from_positions(universe: usize, positions: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for p in positions {
            s.insert(p);
        }
        s
    }

    /// Builds a set from root coefficient vectors; each must be a noncompact
    /// positive root of `flag`.
    pub fn from_roots<V: AsRef<[i32]>>(flag: &ParabolicFlag, roots: &[V]) -> Result<Self> {
        let mut s = Self::empty(flag.dimension());
        for r in roots {
            let id = flag.system().lookup(r.as_ref()).ok_or(Error::ForeignRoot)?;
            let pos = flag.noncompact_position(id).ok_or(Error::ForeignRoot)?;
            s.insert(pos);
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, pos: usize) {
        assert!(
            pos < self.universe,
            "position {pos} outside universe {}",
            self.universe
        );
        self.words[pos / 64] |= 1 << (pos % 64);
    }

    pub fn remove(&mut self, pos: usize) {
        if pos < self.universe {
            self.words[pos / 64] &= !(1 << (pos % 64));
        }
    }

    pub fn contains(&self, pos: usize) -> bool {
        pos < self.universe && self.words[pos / 64] & (1 << (pos % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + bit)
                }
            })
        })
    }

    pub fn union_with(&mut self, other: &RootSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        out
    }

    pub fn complement(&self) -> RootSet {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        let spare = out.words.len() * 64 - self.universe;
        if spare > 0 {
            if let Some(last) = out.words.last_mut() {
                *last &= u64::MAX >> spare;
            }
        }
        out
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &RootSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Order by size, then by the mask read as a big integer.
    pub fn canonical_cmp(&self, other: &RootSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }

    pub fn to_positions(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Cap on the number of submodules an enumeration may produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationGuard(pub u64);

impl EnumerationGuard {
    pub const DEFAULT_CAP: u64 = 10_000_000;
    pub const ENV_VAR: &'static str = "FLAGVAR_GUARD";

    /// Reads `FLAGVAR_GUARD`, falling back to the default cap when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV_VAR) {
            Ok(v) => {
                v.trim().parse::<u64>().map(EnumerationGuard).map_err(|_| {
                    Error::Descriptor(format!("{}={v:?} is not a count", Self::ENV_VAR))
                })
            }
            Err(_) => Ok(Self::default()),
        }
    }
}

impl Default for EnumerationGuard {
    fn default() -> Self {
        EnumerationGuard(Self::DEFAULT_CAP)
    }
}

/// A reduced fraction `p/q` with `q > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SemicanonicalRatio {
    numer: u64,
    denom: u64,
}

impl SemicanonicalRatio {
    pub fn new(numer: u64, denom: u64) -> Self {
        assert!(denom > 0, "zero denominator");
        let g = num_integer::gcd(numer, denom);
        SemicanonicalRatio {
            numer: numer / g,
            denom: denom / g,
        }
    }

    pub fn numer(&self) -> u64 {
        self.numer
    }

    pub fn denom(&self) -> u64 {
        self.denom
    }

    pub fn is_strictly_between_0_and_1(&self) -> bool {
        self.numer > 0 && self.numer < self.denom
    }
}

impl PartialOrd for SemicanonicalRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SemicanonicalRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        (u128::from(self.numer) * u128::from(other.denom))
            .cmp(&(u128::from(other.numer) * u128::from(self.denom)))
    }
}

impl fmt::Display for SemicanonicalRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl std::str::FromStr for SemicanonicalRatio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Descriptor(format!("bad ratio `{s}`"));
        let (p, q) = s.split_once('/').ok_or_else(bad)?;
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        let q: u64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        Ok(Self::new(p, q))
    }
}

impl Serialize for SemicanonicalRatio {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SemicanonicalRatio {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Sizes of the filtration `F_1 = V`, `F_{k+1} = F_k + [F_k, V]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GrowthVector(pub Vec<usize>);

impl fmt::Display for GrowthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn noncompact_sum(flag: &ParabolicFlag, a: usize, b: RootId) -> Option<usize> {
    let sys = flag.system();
    sys.sum(flag.noncompact_root(a), b)
        .and_then(|r| flag.noncompact_position(r))
}

fn actors(flag: &ParabolicFlag) -> impl Iterator<Item = RootId> + '_ {
    flag.compact_roots()
        .iter()
        .chain(flag.noncompact_roots())
        .copied()
}

/// Closure condition checked directly against the root sum table.
pub fn is_submodule(flag: &ParabolicFlag, set: &RootSet) -> bool {
    let sys = flag.system();
    set.iter().all(|a| {
        let root = flag.noncompact_root(a);
        actors(flag).all(|b| match sys.sum(root, b) {
            None => true,
            Some(r) => flag.noncompact_position(r).is_some_and(|p| set.contains(p)),
        })
    })
}

/// Smallest submodule containing `seeds`.
pub fn saturate<'a>(flag: &'a ParabolicFlag, seeds: &RootSet) -> Submodule<'a> {
    let mut members = seeds.clone();
    let mut stack: Vec<usize> = seeds.iter().collect();
    while let Some(a) = stack.pop() {
        for b in actors(flag) {
            if let Some(p) = noncompact_sum(flag, a, b) {
                if !members.contains(p) {
                    members.insert(p);
                    stack.push(p);
                }
            }
        }
    }
    Submodule::from_closed(flag, members)
}

pub fn det_weight(flag: &ParabolicFlag, set: &RootSet) -> Weight {
    let mut w = Weight::zero(flag.system().rank());
    for p in set.iter() {
        w.add_root(flag.system().coeffs(flag.noncompact_root(p)));
    }
    w
}

/// `t` with `weight = t * omega` exactly, if it exists.
pub fn ratio_against(weight: &Weight, omega: &Weight) -> Option<SemicanonicalRatio> {
    let (i, &om) = omega.coeffs().iter().enumerate().find(|(_, &c)| c != 0)?;
    let w = weight.coeffs()[i];
    let proportional = weight
        .coeffs()
        .iter()
        .zip(omega.coeffs())
        .all(|(&wj, &oj)| i128::from(wj) * i128::from(om) == i128::from(w) * i128::from(oj));
    if !proportional || w < 0 || om < 0 {
        return None;
    }
    Some(SemicanonicalRatio::new(w as u64, om as u64))
}

pub fn semicanonical_ratio(flag: &ParabolicFlag, set: &RootSet) -> Option<SemicanonicalRatio> {
    ratio_against(&det_weight(flag, set), flag.omega())
}

pub fn is_nontrivial(set: &RootSet) -> bool {
    !set.is_empty() && !set.is_full()
}

/// No member of `set` is a sum of two noncompact positive roots outside it.
pub fn is_frobenius(flag: &ParabolicFlag, set: &RootSet) -> bool {
    let outside: Vec<usize> = set.complement().iter().collect();
    for (i, &b) in outside.iter().enumerate() {
        for &c in &outside[i..] {
            if let Some(p) = noncompact_sum(flag, b, flag.noncompact_root(c)) {
                if set.contains(p) {
                    return false;
                }
            }
        }
    }
    true
}

/// A single root `theta` such that every other noncompact positive root `b`
/// has `theta - b` noncompact positive.
pub fn is_contact(flag: &ParabolicFlag, set: &RootSet) -> bool {
    if set.len() != 1 {
        return false;
    }
    let theta = flag.noncompact_root(set.iter().next().expect("one member"));
    let sys = flag.system();
    set.complement().iter().all(|b| {
        sys.sum(theta, sys.negate(flag.noncompact_root(b)))
            .and_then(|r| flag.noncompact_position(r))
            .is_some()
    })
}

/// Unordered pairs `{b, c}` outside `set` with `b + c = root`.
pub fn decomposition_count(flag: &ParabolicFlag, set: &RootSet, root: RootId) -> Result<usize> {
    let target = flag
        .noncompact_position(root)
        .filter(|&p| set.contains(p))
        .ok_or(Error::NotInSet)?;
    let outside: Vec<usize> = set.complement().iter().collect();
    let mut count = 0;
    for (i, &b) in outside.iter().enumerate() {
        for &c in &outside[i..] {
            if noncompact_sum(flag, b, flag.noncompact_root(c)) == Some(target) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// With complement `C` of size `k`: `dim = k(k+1)/2` and `{b_i, b_j} -> b_i + b_j`
/// (`i < j`) is a bijection from pairs of `C` onto `set`.
pub fn is_first_order_nondegenerate(flag: &ParabolicFlag, set: &RootSet) -> bool {
    let outside: Vec<usize> = set.complement().iter().collect();
    let k = outside.len();
    if flag.dimension() != k * (k + 1) / 2 {
        return false;
    }
    let mut hit = RootSet::empty(flag.dimension());
    for (i, &b) in outside.iter().enumerate() {
        for &c in &outside[i + 1..] {
            match noncompact_sum(flag, b, flag.noncompact_root(c)) {
                Some(p) if set.contains(p) && !hit.contains(p) => hit.insert(p),
                _ => return false,
            }
        }
    }
    hit == *set
}

/// Growth of the bracket-generated filtration of the plane field spanned by
/// the root spaces indexed by `plane`.
pub fn growth_vector(flag: &ParabolicFlag, plane: &RootSet) -> GrowthVector {
    let mut sizes = vec![plane.len()];
    let mut current = plane.clone();
    loop {
        let mut next = current.clone();
        for a in current.iter() {
            for b in plane.iter() {
                if let Some(p) = noncompact_sum(flag, a, flag.noncompact_root(b)) {
                    next.insert(p);
                }
            }
        }
        if next == current {
            break;
        }
        sizes.push(next.len());
        current = next;
    }
    GrowthVector(sizes)
}

/// A validated submodule of one flag, with its cached det-weight.
#[derive(Debug, Clone)]
pub struct Submodule<'a> {
    flag: &'a ParabolicFlag,
    members: RootSet,
    weight: Weight,
}

impl<'a> Submodule<'a> {
    pub fn new(flag: &'a ParabolicFlag, members: RootSet) -> Result<Self> {
        if members.universe() != flag.dimension() || !is_submodule(flag, &members) {
            return Err(Error::NotASubmodule);
        }
        Ok(Self::from_closed(flag, members))
    }

    fn from_closed(flag: &'a ParabolicFlag, members: RootSet) -> Self {
        let weight = det_weight(flag, &members);
        Submodule {
            flag,
            members,
            weight,
        }
    }

    pub fn flag(&self) -> &'a ParabolicFlag {
        self.flag
    }

    pub fn members(&self) -> &RootSet {
        &self.members
    }

    pub fn into_members(self) -> RootSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn ratio(&self) -> Option<SemicanonicalRatio> {
        ratio_against(&self.weight, self.flag.omega())
    }

    pub fn is_nontrivial(&self) -> bool {
        is_nontrivial(&self.members)
    }

    pub fn is_frobenius(&self) -> bool {
        is_frobenius(self.flag, &self.members)
    }

    pub fn is_contact(&self) -> bool {
        is_contact(self.flag, &self.members)
    }

    pub fn is_first_order_nondegenerate(&self) -> bool {
        is_first_order_nondegenerate(self.flag, &self.members)
    }

    pub fn decomposition_count(&self, root: RootId) -> Result<usize> {
        decomposition_count(self.flag, &self.members, root)
    }

    /// Roots of the members as coefficient vectors, in position order.
    pub fn roots(&self) -> Vec<Vec<i32>> {
        self.members
            .iter()
            .map(|p| {
                self.flag
                    .system()
                    .coeffs(self.flag.noncompact_root(p))
                    .to_vec()
            })
            .collect()
    }
}

/// Strongly connected classes of the `a -> a + b` preorder, with the
/// up-closure and down-closure of each class.
struct ClassPreorder {
    reps: Vec<usize>,
    up: Vec<RootSet>,
    down: Vec<RootSet>,
}

impl ClassPreorder {
    fn new(flag: &ParabolicFlag) -> Self {
        let n = flag.dimension();
        let edges: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                let mut out: Vec<usize> = actors(flag)
                    .filter_map(|b| noncompact_sum(flag, a, b))
                    .collect();
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect();
        let reach: Vec<RootSet> = (0..n)
            .map(|a| {
                let mut seen = RootSet::empty(n);
                seen.insert(a);
                let mut stack = vec![a];
                while let Some(x) = stack.pop() {
                    for &y in &edges[x] {
                        if !seen.contains(y) {
                            seen.insert(y);
                            stack.push(y);
                        }
                    }
                }
                seen
            })
            .collect();

        let mut assigned = RootSet::empty(n);
        let mut reps = Vec::new();
        let mut up = Vec::new();
        let mut down = Vec::new();
        for a in 0..n {
            if assigned.contains(a) {
                continue;
            }
            let below = RootSet::from_positions(n, (0..n).filter(|&x| reach[x].contains(a)));
            assigned.union_with(&reach[a].intersection(&below));
            reps.push(a);
            up.push(reach[a].clone());
            down.push(below);
        }
        ClassPreorder { reps, up, down }
    }
}

/// Every submodule of `(g/p)*`, ordered by size and then by mask.
pub fn enumerate_submodules(
    flag: &ParabolicFlag,
    guard: EnumerationGuard,
) -> Result<Vec<Submodule<'_>>> {
    let order = ClassPreorder::new(flag);
    let n = flag.dimension();
    let mut found: Vec<RootSet> = Vec::new();

    // Include a class (and everything above it) or exclude it (and
    // everything below it); both branches always stay consistent.
    fn branch(
        order: &ClassPreorder,
        from: usize,
        included: RootSet,
        excluded: RootSet,
        found: &mut Vec<RootSet>,
        cap: u64,
    ) -> Result<()> {
        let next = (from..order.reps.len()).find(|&c| {
            let r = order.reps[c];
            !included.contains(r) && !excluded.contains(r)
        });
        match next {
            None => {
                if found.len() as u64 >= cap {
                    return Err(Error::GuardOverflow { cap });
                }
                found.push(included);
                Ok(())
            }
            Some(c) => {
                let with = included.union(&order.up[c]);
                branch(order, c + 1, with, excluded.clone(), found, cap)?;
                let without = excluded.union(&order.down[c]);
                branch(order, c + 1, included, without, found, cap)
            }
        }
    }

    branch(
        &order,
        0,
        RootSet::empty(n),
        RootSet::empty(n),
        &mut found,
        guard.0,
    )?;
    found.sort_by(RootSet::canonical_cmp);
    Ok(found
        .into_iter()
        .map(|s| Submodule::from_closed(flag, s))
        .collect())
}

/// Restricts a set on a product flag to one factor, re-indexed against
/// `factor_flag` (normally `flag.project(component)`).
pub fn project_set(
    flag: &ParabolicFlag,
    set: &RootSet,
    component: usize,
    factor_flag: &ParabolicFlag,
) -> RootSet {
    let nodes = flag.system().components()[component].nodes.clone();
    let mut out = RootSet::empty(factor_flag.dimension());
    for p in set.iter() {
        let root = flag.noncompact_root(p);
        if flag.system().component_of(root) != component {
            continue;
        }
        let local = &flag.system().coeffs(root)[nodes.clone()];
        let id = factor_flag
            .system()
            .lookup(local)
            .expect("factor root exists in the projected system");
        out.insert(
            factor_flag
                .noncompact_position(id)
                .expect("noncompact in factor"),
        );
    }
    out
}
