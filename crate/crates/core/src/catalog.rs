//! Worked-example corpus, exhaustive oracle, and classification sweeps.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::parabolic::{adjoint_flag, FlagSpec, ParabolicFlag, Weight};
use crate::rootsys::{RootSystem, Series, SimpleType};
use crate::submodule::{
    decomposition_count, enumerate_submodules, growth_vector, is_submodule, saturate,
    EnumerationGuard, RootSet, SemicanonicalRatio, Submodule,
};
use crate::{submodule, Error, Result};

pub const BRUTE_FORCE_LIMIT: usize = 16;
pub const SCHEMA_VERSION: u32 = 1;

/// Every subset of the noncompact positive roots that passes the closure
/// test, by exhaustive `2^N` filtering. Ordered like `enumerate_submodules`.
pub fn brute_force_submodules(flag: &ParabolicFlag) -> Result<Vec<RootSet>> {
    let n = flag.dimension();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::OracleGuard {
            size: n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut out: Vec<RootSet> = (0u64..1 << n)
        .map(|mask| RootSet::from_positions(n, (0..n).filter(|&i| mask >> i & 1 == 1)))
        .filter(|s| is_submodule(flag, s))
        .collect();
    out.sort_by(RootSet::canonical_cmp);
    Ok(out)
}

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Stated in the published worked examples.
    Literature,
    /// Recomputed with the exhaustive oracle and exact weight sums.
    Recomputed,
    /// Follows from the definitions.
    Definitional,
}

/// Picks a root set of a flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Selector {
    Roots(Vec<Vec<i32>>),
    /// Smallest submodule containing the given roots.
    Saturate(Vec<Vec<i32>>),
    /// Noncompact roots whose crossed-coefficient sum equals the level.
    Level(u32),
    /// Every noncompact positive root except the given simple root (one-based node).
    AllButSimple(usize),
    Full,
}

impl Selector {
    fn resolve(&self, flag: &ParabolicFlag) -> Result<RootSet> {
        let n = flag.dimension();
        match self {
            Selector::Roots(roots) => RootSet::from_roots(flag, roots),
            Selector::Saturate(roots) => {
                Ok(saturate(flag, &RootSet::from_roots(flag, roots)?).into_members())
            }
            Selector::Level(l) => Ok(RootSet::from_positions(
                n,
                (0..n).filter(|&p| flag.level(p) == *l),
            )),
            Selector::AllButSimple(node) => {
                let id = flag.system().simple_root(node - 1);
                let mut s = RootSet::full(n);
                if let Some(p) = flag.noncompact_position(id) {
                    s.remove(p);
                }
                Ok(s)
            }
            Selector::Full => Ok(RootSet::full(n)),
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let roots = |rs: &Vec<Vec<i32>>| {
            rs.iter()
                .map(|r| Weight(r.iter().map(|&c| i64::from(c)).collect()).pretty())
                .collect::<Vec<_>>()
                .join(", ")
        };
        match self {
            Selector::Roots(rs) => write!(f, "{{{}}}", roots(rs)),
            Selector::Saturate(rs) => write!(f, "<{}>", roots(rs)),
            Selector::Level(l) => write!(f, "level {l}"),
            Selector::AllButSimple(n) => write!(f, "all but a{n}"),
            Selector::Full => write!(f, "all"),
        }
    }
}

/// One checkable claim about a flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Dimension(usize),
    /// One-based crossed nodes per factor.
    Crossed(Vec<Vec<usize>>),
    Omega(Vec<i64>),
    /// Noncompact positive roots, as a set.
    NoncompactRoots(Vec<Vec<i32>>),
    LevelCount {
        level: u32,
        count: usize,
    },
    SubmoduleCount(usize),
    SubmoduleSizes(Vec<usize>),
    NontrivialSemicanonicalCount(usize),
    AllSemicanonical(bool),
    IsSubmodule(Selector, bool),
    Size(Selector, usize),
    Weight(Selector, Vec<i64>),
    /// `None` means not semicanonical.
    Ratio(Selector, Option<SemicanonicalRatio>),
    Nontrivial(Selector, bool),
    Frobenius(Selector, bool),
    Contact(Selector, bool),
    FirstOrderNondegenerate(Selector, bool),
    /// Every member decomposes in at least this many ways.
    MinDecompositions(Selector, usize),
    Growth(Selector, Vec<usize>),
}

fn show_ratio(r: &Option<SemicanonicalRatio>) -> String {
    r.map_or_else(|| "none".to_string(), |r| r.to_string())
}

fn show_list<T: fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(T::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn show_roots(rs: &[Vec<i32>]) -> String {
    let parts: Vec<String> = rs.iter().map(|r| show_list(r)).collect();
    format!("{{{}}}", parts.join(" "))
}

impl Check {
    pub fn describe(&self) -> String {
        match self {
            Check::Dimension(_) => "dimension".into(),
            Check::Crossed(_) => "crossed nodes".into(),
            Check::Omega(_) => "omega".into(),
            Check::NoncompactRoots(_) => "noncompact positive roots".into(),
            Check::LevelCount { level, .. } => format!("roots at level {level}"),
            Check::SubmoduleCount(_) => "submodule count".into(),
            Check::SubmoduleSizes(_) => "submodule sizes".into(),
            Check::NontrivialSemicanonicalCount(_) => "nontrivial semicanonical count".into(),
            Check::AllSemicanonical(_) => "every submodule semicanonical".into(),
            Check::IsSubmodule(s, _) => format!("{s} is a submodule"),
            Check::Size(s, _) => format!("size of {s}"),
            Check::Weight(s, _) => format!("det-weight of {s}"),
            Check::Ratio(s, _) => format!("ratio of {s}"),
            Check::Nontrivial(s, _) => format!("{s} nontrivial"),
            Check::Frobenius(s, _) => format!("{s} Frobenius"),
            Check::Contact(s, _) => format!("{s} contact"),
            Check::FirstOrderNondegenerate(s, _) => format!("{s} first order nondegenerate"),
            Check::MinDecompositions(s, _) => format!("min decompositions over {s}"),
            Check::Growth(s, _) => format!("growth of {s}"),
        }
    }

    /// Returns `(expected, computed)` renderings.
    fn evaluate(&self, flag: &ParabolicFlag, guard: EnumerationGuard) -> Result<(String, String)> {
        let both = |e: String, c: String| Ok((e, c));
        match self {
            Check::Dimension(d) => both(d.to_string(), flag.dimension().to_string()),
            Check::Crossed(c) => both(format!("{c:?}"), format!("{:?}", flag.spec().crossed)),
            Check::Omega(w) => both(show_list(w), show_list(flag.omega().coeffs())),
            Check::NoncompactRoots(rs) => {
                let mut expected = rs.clone();
                expected.sort();
                let mut got: Vec<Vec<i32>> = flag
                    .noncompact_roots()
                    .iter()
                    .map(|&r| flag.system().coeffs(r).to_vec())
                    .collect();
                got.sort();
                both(show_roots(&expected), show_roots(&got))
            }
            Check::LevelCount { level, count } => {
                let got = flag
                    .level_grading()
                    .iter()
                    .filter(|&&l| l == *level)
                    .count();
                both(count.to_string(), got.to_string())
            }
            Check::SubmoduleCount(n) => {
                let got = enumerate_submodules(flag, guard)?.len();
                both(n.to_string(), got.to_string())
            }
            Check::SubmoduleSizes(sizes) => {
                let mut expected = sizes.clone();
                expected.sort();
                let got: Vec<usize> = enumerate_submodules(flag, guard)?
                    .iter()
                    .map(Submodule::len)
                    .collect();
                both(show_list(&expected), show_list(&got))
            }
            Check::NontrivialSemicanonicalCount(n) => {
                let got = enumerate_submodules(flag, guard)?
                    .iter()
                    .filter(|s| s.is_nontrivial() && s.ratio().is_some())
                    .count();
                both(n.to_string(), got.to_string())
            }
            Check::AllSemicanonical(b) => {
                let got = enumerate_submodules(flag, guard)?
                    .iter()
                    .all(|s| s.ratio().is_some());
                both(b.to_string(), got.to_string())
            }
            Check::IsSubmodule(sel, b) => {
                let s = sel.resolve(flag)?;
                both(b.to_string(), is_submodule(flag, &s).to_string())
            }
            Check::Size(sel, n) => both(n.to_string(), sel.resolve(flag)?.len().to_string()),
            Check::Weight(sel, w) => {
                let s = sel.resolve(flag)?;
                both(
                    show_list(w),
                    show_list(submodule::det_weight(flag, &s).coeffs()),
                )
            }
            Check::Ratio(sel, r) => {
                let s = sel.resolve(flag)?;
                both(
                    show_ratio(r),
                    show_ratio(&submodule::semicanonical_ratio(flag, &s)),
                )
            }
            Check::Nontrivial(sel, b) => {
                let s = sel.resolve(flag)?;
                both(b.to_string(), submodule::is_nontrivial(&s).to_string())
            }
            Check::Frobenius(sel, b) => {
                let s = sel.resolve(flag)?;
                both(b.to_string(), submodule::is_frobenius(flag, &s).to_string())
            }
            Check::Contact(sel, b) => {
                let s = sel.resolve(flag)?;
                both(b.to_string(), submodule::is_contact(flag, &s).to_string())
            }
            Check::FirstOrderNondegenerate(sel, b) => {
                let s = sel.resolve(flag)?;
                both(
                    b.to_string(),
                    submodule::is_first_order_nondegenerate(flag, &s).to_string(),
                )
            }
            Check::MinDecompositions(sel, n) => {
                let s = sel.resolve(flag)?;
                let min = s
                    .iter()
                    .map(|p| decomposition_count(flag, &s, flag.noncompact_root(p)))
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .min()
                    .unwrap_or(0);
                let computed = if min >= *n {
                    format!(">={n}")
                } else {
                    min.to_string()
                };
                both(format!(">={n}"), computed)
            }
            Check::Growth(sel, sizes) => {
                let s = sel.resolve(flag)?;
                both(show_list(sizes), show_list(&growth_vector(flag, &s).0))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub provenance: Provenance,
    pub check: Check,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlagSource {
    Spec(FlagSpec),
    /// The adjoint variety of a simple type.
    Adjoint(SimpleType),
}

impl FlagSource {
    pub fn build(&self) -> Result<ParabolicFlag> {
        match self {
            FlagSource::Spec(spec) => spec.build(),
            FlagSource::Adjoint(ty) => adjoint_flag(Arc::new(RootSystem::new(*ty))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedExample {
    pub name: String,
    pub flag: FlagSource,
    pub expected: Vec<Expectation>,
}

impl NamedExample {
    fn new(name: impl Into<String>, flag: FlagSource) -> Self {
        NamedExample {
            name: name.into(),
            flag,
            expected: Vec::new(),
        }
    }

    fn expect(mut self, provenance: Provenance, check: Check) -> Self {
        self.expected.push(Expectation { provenance, check });
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub example: String,
    pub check: String,
    pub provenance: Provenance,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.passed).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }
}

/// Runs every expectation; evaluation errors are recorded as failures.
pub fn verify(examples: &[NamedExample], guard: EnumerationGuard) -> Report {
    let entries = examples
        .par_iter()
        .map(|ex| {
            let flag = ex.flag.build();
            ex.expected
                .iter()
                .map(|e| {
                    let outcome = flag
                        .as_ref()
                        .map_err(Clone::clone)
                        .and_then(|f| e.check.evaluate(f, guard));
                    let (expected, computed, passed) = match outcome {
                        Ok((expected, computed)) => {
                            let passed = expected == computed;
                            (expected, computed, passed)
                        }
                        Err(err) => (String::from("-"), format!("error: {err}"), false),
                    };
                    ReportEntry {
                        example: ex.name.clone(),
                        check: e.check.describe(),
                        provenance: e.provenance,
                        expected,
                        computed,
                        passed,
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Report { entries }
}

fn simple(name: &str) -> SimpleType {
    name.parse().expect("corpus types are valid")
}

fn spec(name: &str, crossed: &[usize]) -> FlagSource {
    FlagSource::Spec(FlagSpec::simple(simple(name), crossed))
}

fn unit(n: usize, node: usize) -> Vec<i32> {
    let mut v = vec![0; n];
    v[node - 1] = 1;
    v
}

fn ratio(p: u64, q: u64) -> Option<SemicanonicalRatio> {
    Some(SemicanonicalRatio::new(p, q))
}

/// The built-in corpus of worked examples.
pub fn builtin_examples() -> Vec<NamedExample> {
    use Check::*;
    use Provenance::*;

    let mut out = Vec::new();

    let g2_rank3 = Selector::Roots(vec![vec![3, 2], vec![2, 1], vec![3, 1]]);
    out.push(
        NamedExample::new("G2/P1 rank-3 Pfaffian system", spec("G2", &[1]))
            .expect(Literature, Dimension(5))
            .expect(Literature, Omega(vec![10, 5]))
            .expect(Literature, IsSubmodule(g2_rank3.clone(), true))
            .expect(Literature, Weight(g2_rank3.clone(), vec![8, 4]))
            .expect(Literature, Ratio(g2_rank3.clone(), ratio(4, 5)))
            .expect(Literature, Nontrivial(g2_rank3.clone(), true))
            .expect(Literature, Frobenius(g2_rank3, false))
            .expect(
                Literature,
                Growth(Selector::Roots(vec![vec![1, 0], vec![1, 1]]), vec![2, 3, 5]),
            )
            .expect(Recomputed, SubmoduleCount(4)),
    );

    for n in 2..=8 {
        let a1 = unit(n, 1);
        let a2 = unit(n, 2);
        let mut a12 = a1.clone();
        a12[1] = 1;
        let point = Selector::Saturate(vec![a1]);
        let line = Selector::Saturate(vec![a2]);
        let zero = Selector::Saturate(vec![a12]);
        let ni = n as i64;
        let mut omega = vec![ni, 2 * (ni - 1)];
        let mut w_point = vec![ni, ni - 1];
        let mut w_line = vec![ni - 1, 2 * (ni - 1)];
        let mut w_zero = vec![ni - 1, ni - 1];
        for k in 3..=ni {
            omega.push(2 * (ni - k + 1));
            w_point.push(ni - k + 1);
            w_line.push(2 * (ni - k + 1));
            w_zero.push(ni - k + 1);
        }
        out.push(
            NamedExample::new(
                format!("A{n} point-line incidence"),
                spec(&format!("A{n}"), &[1, 2]),
            )
            .expect(Literature, Dimension(2 * n - 1))
            .expect(Literature, Omega(omega))
            .expect(Literature, SubmoduleCount(5))
            .expect(
                Literature,
                SubmoduleSizes(vec![0, n - 1, n, 2 * n - 2, 2 * n - 1]),
            )
            .expect(Literature, Size(point.clone(), n))
            .expect(Literature, Size(line.clone(), 2 * n - 2))
            .expect(Literature, Size(zero.clone(), n - 1))
            .expect(Literature, Weight(point.clone(), w_point))
            .expect(Literature, Weight(line.clone(), w_line))
            .expect(Literature, Weight(zero.clone(), w_zero))
            .expect(Literature, Ratio(point.clone(), None))
            .expect(Literature, Ratio(line.clone(), None))
            .expect(
                Literature,
                Ratio(zero, if n == 2 { ratio(1, 2) } else { None }),
            )
            .expect(Literature, Frobenius(point, true))
            .expect(Literature, Frobenius(line, true)),
        );
    }

    let adjoint_rows: Vec<(String, usize)> = (2..=8)
        .map(|n| (format!("A{n}"), 2 * n - 1))
        .chain((3..=6).map(|n| (format!("B{n}"), 4 * n - 5)))
        .chain((3..=6).map(|n| (format!("C{n}"), 2 * n - 1)))
        .chain((4..=6).map(|n| (format!("D{n}"), 4 * n - 7)))
        .chain([
            ("E6".to_string(), 21),
            ("E7".to_string(), 33),
            ("E8".to_string(), 57),
            ("F4".to_string(), 15),
            ("G2".to_string(), 5),
        ])
        .collect();
    for (ty, dim) in adjoint_rows {
        out.push(
            NamedExample::new(
                format!("{ty} adjoint variety"),
                FlagSource::Adjoint(simple(&ty)),
            )
            .expect(Literature, Dimension(dim)),
        );
    }

    for n in 2..=6 {
        let theta = vec![1; n];
        let s1: Vec<Vec<i32>> = (1..=n)
            .map(|j| (0..n).map(|k| i32::from(k < j)).collect())
            .collect();
        let sn: Vec<Vec<i32>> = (1..=n)
            .map(|i| (0..n).map(|k| i32::from(k + 1 >= i)).collect())
            .collect();
        let contact = Selector::Roots(vec![theta]);
        let mut ex = NamedExample::new(
            format!("A{n} adjoint contact module"),
            FlagSource::Adjoint(simple(&format!("A{n}"))),
        )
        .expect(Literature, Crossed(vec![vec![1, n]]))
        .expect(Literature, IsSubmodule(contact.clone(), true))
        .expect(Literature, Contact(contact.clone(), true))
        .expect(Recomputed, Ratio(contact, ratio(1, n as u64)));
        for family in [s1, sn] {
            let sel = Selector::Roots(family);
            ex = ex
                .expect(Literature, IsSubmodule(sel.clone(), true))
                .expect(Literature, Frobenius(sel, true));
        }
        out.push(ex);
    }

    let b3_level2 = Selector::Level(2);
    out.push(
        NamedExample::new("B3 nondegenerate rank-3 system", spec("B3", &[3]))
            .expect(Literature, Dimension(6))
            .expect(
                Literature,
                NoncompactRoots(vec![
                    vec![0, 0, 1],
                    vec![0, 1, 1],
                    vec![1, 1, 1],
                    vec![0, 1, 2],
                    vec![1, 1, 2],
                    vec![1, 2, 2],
                ]),
            )
            .expect(
                Literature,
                Size(
                    Selector::Roots(vec![vec![0, 1, 2], vec![1, 1, 2], vec![1, 2, 2]]),
                    3,
                ),
            )
            .expect(Literature, Size(b3_level2.clone(), 3))
            .expect(Literature, IsSubmodule(b3_level2.clone(), true))
            .expect(Literature, MinDecompositions(b3_level2.clone(), 1))
            .expect(Recomputed, Ratio(b3_level2.clone(), ratio(2, 3)))
            .expect(Literature, Frobenius(b3_level2, false)),
    );

    let c3_level2 = Selector::Level(2);
    out.push(
        NamedExample::new("C3 quaternionic contact", spec("C3", &[2]))
            .expect(Literature, Dimension(7))
            .expect(
                Literature,
                NoncompactRoots(vec![
                    vec![0, 1, 0],
                    vec![1, 1, 0],
                    vec![0, 1, 1],
                    vec![1, 1, 1],
                    vec![0, 2, 1],
                    vec![1, 2, 1],
                    vec![2, 2, 1],
                ]),
            )
            .expect(
                Literature,
                IsSubmodule(
                    Selector::Roots(vec![vec![0, 2, 1], vec![1, 2, 1], vec![2, 2, 1]]),
                    true,
                ),
            )
            .expect(Literature, Size(c3_level2.clone(), 3))
            .expect(Recomputed, Ratio(c3_level2.clone(), ratio(3, 5)))
            .expect(Literature, Frobenius(c3_level2, false)),
    );

    for n in 3..=6 {
        let level2 = Selector::Level(2);
        out.push(
            NamedExample::new(
                format!("B{n} first order nondegenerate system"),
                spec(&format!("B{n}"), &[n]),
            )
            .expect(Literature, Dimension(n * (n + 1) / 2))
            .expect(Literature, LevelCount { level: 1, count: n })
            .expect(
                Literature,
                LevelCount {
                    level: 2,
                    count: n * (n - 1) / 2,
                },
            )
            .expect(Literature, IsSubmodule(level2.clone(), true))
            .expect(Literature, FirstOrderNondegenerate(level2.clone(), true))
            .expect(Recomputed, Ratio(level2, ratio(n as u64 - 1, n as u64)))
            .expect(
                Literature,
                Growth(Selector::Level(1), vec![n, n * (n + 1) / 2]),
            ),
        );
    }

    for (ty, count) in [("A2", 1), ("B2", 0), ("G2", 0)] {
        let mut ex = NamedExample::new(
            format!("{ty} Borel"),
            FlagSource::Spec(FlagSpec::borel(simple(ty))),
        )
        .expect(Literature, NontrivialSemicanonicalCount(count));
        if ty == "A2" {
            // two nontrivial submodules besides the semicanonical one
            ex = ex.expect(Recomputed, SubmoduleSizes(vec![0, 1, 2, 2, 3]));
        }
        out.push(ex);
    }
    for (ty, node) in [
        ("A2", 1),
        ("A2", 2),
        ("B2", 1),
        ("B2", 2),
        ("G2", 1),
        ("G2", 2),
    ] {
        out.push(
            NamedExample::new(format!("{ty}/P{node}"), spec(ty, &[node]))
                .expect(Literature, AllSemicanonical(true)),
        );
    }

    for ty in ["A2", "A3", "B2", "B3", "G2"] {
        let t = simple(ty);
        let mut ex = NamedExample::new(
            format!("{ty} Borel, all but one simple root"),
            FlagSource::Spec(FlagSpec::borel(t)),
        );
        for node in 1..=t.rank() {
            ex = ex
                .expect(
                    Definitional,
                    IsSubmodule(Selector::AllButSimple(node), true),
                )
                .expect(Literature, Ratio(Selector::AllButSimple(node), None));
        }
        out.push(ex);
    }
    out.push(
        NamedExample::new(
            "A1 Borel, all but one simple root",
            FlagSource::Spec(FlagSpec::borel(simple("A1"))),
        )
        .expect(Literature, Ratio(Selector::AllButSimple(1), ratio(0, 1))),
    );

    out
}

/// Verdicts for one submodule, as serialized in sweep output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmoduleRecord {
    pub members: Vec<usize>,
    pub size: usize,
    pub weight: Weight,
    pub ratio: Option<SemicanonicalRatio>,
    pub nontrivial: bool,
    pub frobenius: bool,
    pub contact: bool,
    pub first_order_nondegenerate: bool,
}

impl SubmoduleRecord {
    pub fn from_submodule(s: &Submodule<'_>) -> Self {
        SubmoduleRecord {
            members: s.members().to_positions(),
            size: s.len(),
            weight: s.weight().clone(),
            ratio: s.ratio(),
            nontrivial: s.is_nontrivial(),
            frobenius: s.is_frobenius(),
            contact: s.is_contact(),
            first_order_nondegenerate: s.is_first_order_nondegenerate(),
        }
    }
}

/// Full submodule inventory of one flag variety.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub schema_version: u32,
    pub label: String,
    pub flag: FlagSpec,
    pub dimension: usize,
    pub omega: Weight,
    /// Noncompact positive roots; submodule members index into this list.
    pub noncompact: Vec<Vec<i32>>,
    pub submodule_count: Option<usize>,
    pub submodules: Vec<SubmoduleRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ClassificationRecord {
    pub fn semicanonical_count(&self) -> usize {
        self.submodules.iter().filter(|s| s.ratio.is_some()).count()
    }

    pub fn nontrivial_semicanonical_count(&self) -> usize {
        self.submodules
            .iter()
            .filter(|s| s.nontrivial && s.ratio.is_some())
            .count()
    }
}

/// Classifies one flag; enumeration failures land in `error`.
pub fn classify(flag: &ParabolicFlag, guard: EnumerationGuard) -> ClassificationRecord {
    let (submodule_count, submodules, error) = match enumerate_submodules(flag, guard) {
        Ok(subs) => (
            Some(subs.len()),
            subs.iter().map(SubmoduleRecord::from_submodule).collect(),
            None,
        ),
        Err(e) => (None, Vec::new(), Some(e.to_string())),
    };
    ClassificationRecord {
        schema_version: SCHEMA_VERSION,
        label: flag.label(),
        flag: flag.spec(),
        dimension: flag.dimension(),
        omega: flag.omega().clone(),
        noncompact: flag
            .noncompact_roots()
            .iter()
            .map(|&r| flag.system().coeffs(r).to_vec())
            .collect(),
        submodule_count,
        submodules,
        error,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossingFilter {
    All,
    Maximal,
    Borel,
}

impl std::str::FromStr for CrossingFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(CrossingFilter::All),
            "maximal" => Ok(CrossingFilter::Maximal),
            "borel" => Ok(CrossingFilter::Borel),
            _ => Err(Error::Descriptor(format!("unknown crossing filter `{s}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepBounds {
    pub max_rank: usize,
    pub series: Vec<Series>,
    pub filter: CrossingFilter,
}

impl SweepBounds {
    pub fn new(max_rank: usize, filter: CrossingFilter) -> Self {
        SweepBounds {
            max_rank,
            series: Series::ALL.to_vec(),
            filter,
        }
    }

    /// Irreducible types within bounds. `C2` and `D3` are skipped as
    /// duplicates of `B2` and `A3`.
    pub fn types(&self) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for &series in &self.series {
            let first = match series {
                Series::C => 3,
                Series::D => 4,
                _ => 1,
            };
            for rank in first..=self.max_rank {
                if let Ok(t) = SimpleType::new(series, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    pub fn specs(&self) -> Vec<FlagSpec> {
        let mut out = Vec::new();
        for ty in self.types() {
            let n = ty.rank();
            let mut crossings: Vec<Vec<usize>> = (1u64..1 << n)
                .map(|mask| (1..=n).filter(|&i| mask >> (i - 1) & 1 == 1).collect())
                .filter(|c: &Vec<usize>| match self.filter {
                    CrossingFilter::All => true,
                    CrossingFilter::Maximal => c.len() == 1,
                    CrossingFilter::Borel => c.len() == n,
                })
                .collect();
            crossings.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            out.extend(crossings.into_iter().map(|c| FlagSpec::simple(ty, &c)));
        }
        out
    }
}

/// Classification records for every flag within bounds, in `specs()` order.
pub fn classify_sweep(bounds: &SweepBounds, guard: EnumerationGuard) -> Vec<ClassificationRecord> {
    bounds
        .specs()
        .par_iter()
        .map(|spec| {
            let flag = spec.build().expect("sweep specs are valid");
            classify(&flag, guard)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_small_counts() {
        let f = FlagSpec::simple(simple("A1"), &[1]).build().unwrap();
        assert_eq!(brute_force_submodules(&f).unwrap().len(), 2);
        let f = FlagSpec::borel(simple("A2")).build().unwrap();
        assert_eq!(brute_force_submodules(&f).unwrap().len(), 5);
        let f = FlagSpec::simple(simple("G2"), &[1]).build().unwrap();
        assert_eq!(brute_force_submodules(&f).unwrap().len(), 4);
    }

    #[test]
    fn oracle_guard() {
        let f = FlagSpec::borel(simple("A6")).build().unwrap();
        assert_eq!(
            brute_force_submodules(&f).unwrap_err(),
            Error::OracleGuard {
                size: 21,
                limit: 16
            }
        );
    }

    #[test]
    fn empty_corpus_passes() {
        let report = verify(&[], EnumerationGuard::default());
        assert!(report.entries.is_empty());
        assert!(report.all_passed());
    }

    #[test]
    fn perturbed_weight_fails_once() {
        let mut corpus = builtin_examples();
        let g2 = corpus
            .iter_mut()
            .find(|e| e.name.starts_with("G2/P1"))
            .unwrap();
        for e in &mut g2.expected {
            if let Check::Weight(_, w) = &mut e.check {
                w[0] += 1;
            }
        }
        let report = verify(&corpus, EnumerationGuard::default());
        assert_eq!(report.failures().count(), 1);
        let fail = report.failures().next().unwrap();
        assert_eq!(fail.expected, "[9,4]");
        assert_eq!(fail.computed, "[8,4]");
    }

    #[test]
    fn sweep_types_skip_aliases() {
        let names: Vec<String> = SweepBounds::new(4, CrossingFilter::Maximal)
            .types()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            names,
            ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"]
        );
    }

    #[test]
    fn record_json_shape() {
        let f = FlagSpec::simple(simple("A1"), &[1]).build().unwrap();
        let rec = classify(&f, EnumerationGuard::default());
        let json = serde_json::to_value(&rec).unwrap();
        assert_eq!(json["schema_version"], 1);
        assert_eq!(json["submodules"][0]["ratio"], "0/1");
        assert_eq!(json["submodules"][1]["members"], serde_json::json!([0]));
        assert!(json.get("error").is_none());
    }
}
