//! Parabolics containing `P`, and drop bookkeeping on crossed-node sets.
//!
//! Everything here is combinatorial: a drop target is a crossed set contained
//! in the source's, and the forcing conditions are reported, never assumed.

use std::sync::Arc;

use serde::Serialize;

use crate::parabolic::{FlagSpec, ParabolicFlag};
use crate::rootsys::RootSystem;
use crate::submodule::{self, enumerate_submodules, is_submodule, EnumerationGuard, RootSet};
use crate::{Error, Result};

/// A parabolic `P' ⊇ P`, given by `crossed(P') ⊆ crossed(P)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DropTarget {
    /// Zero-based global crossed nodes of the target; empty means `G` itself.
    pub crossed: Vec<usize>,
    /// Nodes uncrossed relative to the source (the fiber `P'/P`).
    pub fiber_crossed: Vec<usize>,
    /// Target label; `G2{}` style labels denote a point.
    pub label: String,
    /// Canonical crossed set under diagram automorphisms; targets sharing a
    /// tag model the same geometry up to outer automorphism.
    pub equivalence: String,
}

impl DropTarget {
    pub fn is_point(&self) -> bool {
        self.crossed.is_empty()
    }

    /// The target as a flag, or `None` for the point `G/G`.
    pub fn flag(&self, system: Arc<RootSystem>) -> Option<ParabolicFlag> {
        if self.is_point() {
            None
        } else {
            Some(ParabolicFlag::new(system, &self.crossed).expect("subset of valid crossing"))
        }
    }
}

fn label_for(system: &RootSystem, crossed: &[usize]) -> String {
    let spec = FlagSpec {
        factors: system.components().iter().map(|c| c.ty).collect(),
        crossed: system
            .components()
            .iter()
            .map(|c| {
                crossed
                    .iter()
                    .filter(|n| c.nodes.contains(n))
                    .map(|n| n - c.nodes.start + 1)
                    .collect()
            })
            .collect(),
    };
    spec.label()
}

/// Lexicographically least image of `crossed` under each factor's diagram
/// automorphisms.
fn equivalence_tag(system: &RootSystem, crossed: &[usize]) -> String {
    let mut canonical = Vec::new();
    for comp in system.components() {
        let local: Vec<usize> = crossed
            .iter()
            .filter(|n| comp.nodes.contains(n))
            .map(|n| n - comp.nodes.start)
            .collect();
        let best = comp
            .ty
            .diagram_automorphisms()
            .iter()
            .map(|perm| {
                let mut image: Vec<usize> = local.iter().map(|&n| perm[n]).collect();
                image.sort_unstable();
                image
            })
            .min()
            .expect("identity is always present");
        canonical.extend(best.into_iter().map(|n| n + comp.nodes.start));
    }
    label_for(system, &canonical)
}

/// All `2^|crossed|` parabolics containing `P`, by descending crossed-set size
/// and then lexicographically.
pub fn parabolics_containing(flag: &ParabolicFlag) -> Vec<DropTarget> {
    let crossed = flag.crossed();
    let k = crossed.len();
    let mut subsets: Vec<Vec<usize>> = (0u64..1 << k)
        .map(|mask| {
            (0..k)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| crossed[i])
                .collect()
        })
        .collect();
    subsets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    subsets
        .into_iter()
        .map(|sub| {
            let fiber = crossed
                .iter()
                .copied()
                .filter(|n| !sub.contains(n))
                .collect();
            DropTarget {
                label: label_for(flag.system(), &sub),
                equivalence: equivalence_tag(flag.system(), &sub),
                crossed: sub,
                fiber_crossed: fiber,
            }
        })
        .collect()
}

/// Drop lattice as a DAG; edges uncross a single node.
#[derive(Debug, Clone, Serialize)]
pub struct DropLattice {
    pub nodes: Vec<DropTarget>,
    pub edges: Vec<(usize, usize)>,
}

pub fn drop_lattice(flag: &ParabolicFlag) -> DropLattice {
    let nodes = parabolics_containing(flag);
    let mut edges = Vec::new();
    for (i, a) in nodes.iter().enumerate() {
        for (j, b) in nodes.iter().enumerate() {
            if b.crossed.len() + 1 == a.crossed.len()
                && b.crossed.iter().all(|n| a.crossed.contains(n))
            {
                edges.push((i, j));
            }
        }
    }
    DropLattice { nodes, edges }
}

/// True when the (irreducible) flag is crossed at exactly one node.
pub fn is_maximal(flag: &ParabolicFlag) -> Result<bool> {
    let components = flag.system().components().len();
    if components != 1 {
        return Err(Error::Reducible { components });
    }
    Ok(flag.crossed().len() == 1)
}

/// Result of turning crosses with rational circles into dots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircleDrop {
    /// Crossed nodes of `Q`; empty means `Q = G`.
    pub crossed: Vec<usize>,
    pub label: String,
}

impl CircleDrop {
    pub fn is_point(&self) -> bool {
        self.crossed.is_empty()
    }

    /// Whether the geometry drops to `P'` (given by its crossed nodes):
    /// exactly when `Q ⊆ P'`, i.e. `crossed(P') ⊆ crossed(Q)`.
    pub fn drops_to(&self, target_crossed: &[usize]) -> bool {
        target_crossed.iter().all(|n| self.crossed.contains(n))
    }
}

/// `Q` = crossed nodes of `flag` minus the nodes flagged as having rational
/// circles. Normally applied to a Borel flag.
pub fn circle_drop(flag: &ParabolicFlag, rational: &[usize]) -> CircleDrop {
    let crossed: Vec<usize> = flag
        .crossed()
        .iter()
        .copied()
        .filter(|n| !rational.contains(n))
        .collect();
    CircleDrop {
        label: label_for(flag.system(), &crossed),
        crossed,
    }
}

/// Outcome of the Borel model dichotomy: either some circle family is
/// rational and the geometry drops, or every `B`-submodule must be Frobenius.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum BorelVerdict {
    Drops {
        target: CircleDrop,
    },
    AllFrobenius {
        submodules: usize,
        non_frobenius_on_model: usize,
    },
}

pub fn borel_bracket_verdict(
    flag: &ParabolicFlag,
    rational: &[usize],
    guard: EnumerationGuard,
) -> Result<BorelVerdict> {
    if !flag.is_borel() {
        return Err(Error::NotBorel);
    }
    let q = circle_drop(flag, rational);
    if q.crossed.len() < flag.crossed().len() {
        return Ok(BorelVerdict::Drops { target: q });
    }
    let subs = enumerate_submodules(flag, guard)?;
    let non_frobenius = subs.iter().filter(|s| !s.is_frobenius()).count();
    Ok(BorelVerdict::AllFrobenius {
        submodules: subs.len(),
        non_frobenius_on_model: non_frobenius,
    })
}

/// Submodules that force a drop (nontrivial, semicanonical, not Frobenius)
/// and the proper targets the geometry could drop to.
#[derive(Debug, Clone, Serialize)]
pub struct DropAnalysis {
    pub witnesses: Vec<Vec<usize>>,
    pub proper_targets: Vec<DropTarget>,
    /// A drop is forced and the only proper target is the point.
    pub rigid: bool,
}

pub fn drop_analysis(flag: &ParabolicFlag, guard: EnumerationGuard) -> Result<DropAnalysis> {
    let witnesses: Vec<Vec<usize>> = enumerate_submodules(flag, guard)?
        .into_iter()
        .filter(|s| s.is_nontrivial() && s.ratio().is_some() && !s.is_frobenius())
        .map(|s| s.members().to_positions())
        .collect();
    let proper_targets: Vec<DropTarget> = parabolics_containing(flag).into_iter().skip(1).collect();
    let rigid = !witnesses.is_empty() && proper_targets.iter().all(DropTarget::is_point);
    Ok(DropAnalysis {
        witnesses,
        proper_targets,
        rigid,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorFailure {
    pub component: usize,
    pub trivial: bool,
    pub not_semicanonical: bool,
    pub frobenius: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum RigidityVerdict {
    Rigid,
    NotRigid { failing: Vec<FactorFailure> },
}

/// Product criterion: every factor maximal and every supplied `I_j`
/// nontrivial, semicanonical and not Frobenius in its own factor.
/// `per_factor[j]` is indexed against `flag.project(j)`.
pub fn product_rigidity_check(
    flag: &ParabolicFlag,
    per_factor: &[RootSet],
) -> Result<RigidityVerdict> {
    let components = flag.system().components().len();
    if per_factor.len() != components {
        return Err(Error::Descriptor(format!(
            "{} factors but {} submodules",
            components,
            per_factor.len()
        )));
    }
    let crossed = flag.crossed_per_component();
    let mut failing = Vec::new();
    for (j, set) in per_factor.iter().enumerate() {
        if crossed[j].len() != 1 {
            return Err(Error::NotMaximal { component: j });
        }
        let factor = flag.project(j)?;
        if set.universe() != factor.dimension() || !is_submodule(&factor, set) {
            return Err(Error::NotASubmodule);
        }
        let failure = FactorFailure {
            component: j,
            trivial: !submodule::is_nontrivial(set),
            not_semicanonical: submodule::semicanonical_ratio(&factor, set).is_none(),
            frobenius: submodule::is_frobenius(&factor, set),
        };
        if failure.trivial || failure.not_semicanonical || failure.frobenius {
            failing.push(failure);
        }
    }
    Ok(if failing.is_empty() {
        RigidityVerdict::Rigid
    } else {
        RigidityVerdict::NotRigid { failing }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flag(ty: &str, crossed: &[usize]) -> ParabolicFlag {
        FlagSpec::simple(ty.parse().unwrap(), crossed)
            .build()
            .unwrap()
    }

    #[test]
    fn adjoint_a_n_targets() {
        let f = flag("A4", &[1, 4]);
        let targets = parabolics_containing(&f);
        let crossed: Vec<&[usize]> = targets.iter().map(|t| t.crossed.as_slice()).collect();
        assert_eq!(crossed, vec![&[0, 3][..], &[0][..], &[3][..], &[][..]]);
        assert!(targets[3].is_point());
        // point space and dual point space are identified by the outer automorphism
        assert_eq!(targets[1].equivalence, targets[2].equivalence);
        assert_ne!(targets[1].label, targets[2].label);
        assert_eq!(targets[1].fiber_crossed, vec![3]);
    }

    #[test]
    fn maximal_and_borel_targets() {
        assert_eq!(parabolics_containing(&flag("C3", &[2])).len(), 2);
        assert_eq!(parabolics_containing(&flag("B2", &[1, 2])).len(), 4);
        let lattice = drop_lattice(&flag("B2", &[1, 2]));
        assert_eq!(lattice.edges.len(), 4);
    }

    #[test]
    fn maximality() {
        assert!(is_maximal(&flag("C3", &[2])).unwrap());
        assert!(!is_maximal(&flag("A2", &[1, 2])).unwrap());
        assert!(is_maximal(&flag("B5", &[5])).unwrap());
        let spec: FlagSpec = serde_json::from_str(
            r#"{"factors":[{"series":"A","rank":1},{"series":"A","rank":1}],"crossed":[[1],[1]]}"#,
        )
        .unwrap();
        assert!(matches!(
            is_maximal(&spec.build().unwrap()),
            Err(Error::Reducible { .. })
        ));
    }

    #[test]
    fn circles() {
        let b2 = flag("B2", &[1, 2]);
        let q = circle_drop(&b2, &[1]);
        assert_eq!(q.crossed, vec![0]);
        assert_eq!(q.label, "B2{1}");
        assert!(q.drops_to(&[0]));
        assert!(!q.drops_to(&[1]));
        assert_eq!(circle_drop(&b2, &[]).crossed, vec![0, 1]);
        assert!(circle_drop(&b2, &[0, 1]).is_point());
    }

    #[test]
    fn borel_dichotomy() {
        let b2 = flag("B2", &[1, 2]);
        assert!(matches!(
            borel_bracket_verdict(&b2, &[1], EnumerationGuard::default()).unwrap(),
            BorelVerdict::Drops { .. }
        ));
        match borel_bracket_verdict(&b2, &[], EnumerationGuard::default()).unwrap() {
            BorelVerdict::AllFrobenius { submodules, .. } => assert_eq!(submodules, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            borel_bracket_verdict(&flag("B2", &[1]), &[], EnumerationGuard::default()),
            Err(Error::NotBorel)
        );
    }

    #[test]
    fn maximal_drop_analysis() {
        let a = drop_analysis(&flag("C3", &[2]), EnumerationGuard::default()).unwrap();
        assert!(a.rigid);
        assert_eq!(a.witnesses.len(), 1);
        let a = drop_analysis(&flag("A3", &[1]), EnumerationGuard::default()).unwrap();
        assert!(!a.rigid);
    }
}
