//! Generalized flag varieties `G/P` given by crossed Dynkin nodes.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::rootsys::{RootId, RootSystem, SimpleType, SystemSpec};
use crate::{Error, Result};

/// Integer vector in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn add_root(&mut self, coeffs: &[i32]) {
        for (w, &c) in self.0.iter_mut().zip(coeffs) {
            *w += i64::from(c);
        }
    }

    /// Componentwise `self <= other`.
    pub fn dominated_by(&self, other: &Weight) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Renders as `10a1+5a2`.
    pub fn pretty(&self) -> String {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match c {
                1 => format!("a{}", i + 1),
                _ => format!("{c}a{}", i + 1),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Flag descriptor: `{"factors":[{"series":"B","rank":3}],"crossed":[[3]]}`.
/// Crossed nodes are one-based Bourbaki numbers, listed per factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlagSpec {
    pub factors: Vec<SimpleType>,
    pub crossed: Vec<Vec<usize>>,
}

impl FlagSpec {
    pub fn simple(ty: SimpleType, crossed: &[usize]) -> Self {
        FlagSpec {
            factors: vec![ty],
            crossed: vec![crossed.to_vec()],
        }
    }

    pub fn borel(ty: SimpleType) -> Self {
        FlagSpec {
            factors: vec![ty],
            crossed: vec![(1..=ty.rank()).collect()],
        }
    }

    pub fn label(&self) -> String {
        self.factors
            .iter()
            .zip(&self.crossed)
            .map(|(ty, nodes)| {
                let list: Vec<String> = nodes.iter().map(usize::to_string).collect();
                format!("{ty}{{{}}}", list.join(","))
            })
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn build(&self) -> Result<ParabolicFlag> {
        ParabolicFlag::from_spec(self)
    }
}

/// `G/P`: a root system with a nonempty set of crossed nodes.
#[derive(Debug, Clone)]
pub struct ParabolicFlag {
    system: Arc<RootSystem>,
    crossed: Vec<usize>,
    crossed_mask: Vec<bool>,
    compact: Vec<RootId>,
    noncompact: Vec<RootId>,
    position: Vec<Option<usize>>,
    omega: Weight,
}

impl ParabolicFlag {
    /// `crossed` holds zero-based global node indices.
    pub fn new(system: Arc<RootSystem>, crossed: &[usize]) -> Result<Self> {
        let rank = system.rank();
        if crossed.is_empty() {
            return Err(Error::EmptyCrossing);
        }
        let mut crossed_mask = vec![false; rank];
        for &node in crossed {
            if node >= rank {
                return Err(Error::NodeOutOfRange { node, rank });
            }
            crossed_mask[node] = true;
        }
        let crossed: Vec<usize> = (0..rank).filter(|&i| crossed_mask[i]).collect();

        let touches = |r: RootId| {
            system
                .coeffs(r)
                .iter()
                .zip(&crossed_mask)
                .any(|(&c, &x)| x && c != 0)
        };
        let compact: Vec<RootId> = system.roots().filter(|&r| !touches(r)).collect();
        let noncompact: Vec<RootId> = system.positive_roots().filter(|&r| touches(r)).collect();
        let mut position = vec![None; system.root_count()];
        let mut omega = Weight::zero(rank);
        for (pos, &r) in noncompact.iter().enumerate() {
            position[r.index()] = Some(pos);
            omega.add_root(system.coeffs(r));
        }

        Ok(ParabolicFlag {
            system,
            crossed,
            crossed_mask,
            compact,
            noncompact,
            position,
            omega,
        })
    }

    pub fn borel(system: Arc<RootSystem>) -> Self {
        let all: Vec<usize> = (0..system.rank()).collect();
        Self::new(system, &all).expect("rank is positive")
    }

    pub fn from_spec(spec: &FlagSpec) -> Result<Self> {
        if spec.factors.len() != spec.crossed.len() {
            return Err(Error::Descriptor(format!(
                "{} factors but {} crossed lists",
                spec.factors.len(),
                spec.crossed.len()
            )));
        }
        let system = Arc::new(RootSystem::from_spec(&SystemSpec {
            factors: spec.factors.clone(),
        })?);
        let mut crossed = Vec::new();
        for (comp, nodes) in system.components().iter().zip(&spec.crossed) {
            let local_rank = comp.ty.rank();
            for &node in nodes {
                if node == 0 || node > local_rank {
                    return Err(Error::NodeOutOfRange {
                        node,
                        rank: local_rank,
                    });
                }
                crossed.push(comp.nodes.start + node - 1);
            }
        }
        Self::new(system, &crossed)
    }

    pub fn spec(&self) -> FlagSpec {
        let factors: Vec<SimpleType> = self.system.components().iter().map(|c| c.ty).collect();
        let crossed = self
            .system
            .components()
            .iter()
            .map(|c| {
                self.crossed
                    .iter()
                    .filter(|n| c.nodes.contains(n))
                    .map(|n| n - c.nodes.start + 1)
                    .collect()
            })
            .collect();
        FlagSpec { factors, crossed }
    }

    pub fn label(&self) -> String {
        self.spec().label()
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn shared_system(&self) -> Arc<RootSystem> {
        Arc::clone(&self.system)
    }

    /// Zero-based global indices of crossed nodes, ascending.
    pub fn crossed(&self) -> &[usize] {
        &self.crossed
    }

    pub fn is_crossed(&self, node: usize) -> bool {
        self.crossed_mask.get(node).copied().unwrap_or(false)
    }

    pub fn is_borel(&self) -> bool {
        self.crossed.len() == self.system.rank()
    }

    /// All roots (both signs) with zero coefficient at every crossed node.
    pub fn compact_roots(&self) -> &[RootId] {
        &self.compact
    }

    pub fn noncompact_roots(&self) -> &[RootId] {
        &self.noncompact
    }

    pub fn noncompact_root(&self, pos: usize) -> RootId {
        self.noncompact[pos]
    }

    /// Position of a root in the noncompact positive ordering.
    pub fn noncompact_position(&self, root: RootId) -> Option<usize> {
        self.position.get(root.index()).copied().flatten()
    }

    pub fn dimension(&self) -> usize {
        self.noncompact.len()
    }

    pub fn omega(&self) -> &Weight {
        &self.omega
    }

    /// Sum of a noncompact root's coefficients over the crossed nodes.
    pub fn level(&self, pos: usize) -> u32 {
        let coeffs = self.system.coeffs(self.noncompact[pos]);
        self.crossed.iter().map(|&n| coeffs[n] as u32).sum()
    }

    pub fn level_grading(&self) -> Vec<u32> {
        (0..self.dimension()).map(|p| self.level(p)).collect()
    }

    /// Crossed nodes of each factor, zero-based within the factor.
    pub fn crossed_per_component(&self) -> Vec<Vec<usize>> {
        self.system
            .components()
            .iter()
            .map(|c| {
                self.crossed
                    .iter()
                    .filter(|n| c.nodes.contains(n))
                    .map(|n| n - c.nodes.start)
                    .collect()
            })
            .collect()
    }

    /// The flag `G_j / P_j` of one simple factor.
    pub fn project(&self, component: usize) -> Result<ParabolicFlag> {
        let comp = self
            .system
            .components()
            .get(component)
            .ok_or_else(|| Error::Descriptor(format!("no component {component}")))?;
        let local = self.crossed_per_component().swap_remove(component);
        ParabolicFlag::new(Arc::new(RootSystem::new(comp.ty)), &local)
    }

    /// Noncompact positions that belong to a given factor.
    pub fn component_positions(&self, component: usize) -> Vec<usize> {
        (0..self.dimension())
            .filter(|&p| self.system.component_of(self.noncompact[p]) == component)
            .collect()
    }
}

/// The stabilizer of the highest root line: crossed nodes are those where
/// the highest root pairs nontrivially with the simple coroot.
pub fn adjoint_flag(system: Arc<RootSystem>) -> Result<ParabolicFlag> {
    let theta = system.highest_root()?;
    let coeffs = system.coeffs(theta).to_vec();
    let crossed: Vec<usize> = (0..system.rank())
        .filter(|&i| system.pairing(&coeffs, i) != 0)
        .collect();
    ParabolicFlag::new(system, &crossed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flag(ty: &str, crossed: &[usize]) -> ParabolicFlag {
        FlagSpec::simple(ty.parse().unwrap(), crossed)
            .build()
            .unwrap()
    }

    fn adjoint(ty: &str) -> ParabolicFlag {
        adjoint_flag(Arc::new(RootSystem::new(ty.parse().unwrap()))).unwrap()
    }

    #[test]
    fn g2_p1() {
        let f = flag("G2", &[1]);
        assert_eq!(f.dimension(), 5);
        assert_eq!(f.omega().coeffs(), &[10, 5]);
        let compact: Vec<&[i32]> = f
            .compact_roots()
            .iter()
            .map(|&r| f.system().coeffs(r))
            .collect();
        assert_eq!(compact, vec![&[0, 1][..], &[0, -1][..]]);
    }

    #[test]
    fn projective_line() {
        let f = flag("A1", &[1]);
        assert_eq!(f.dimension(), 1);
        assert_eq!(f.omega().coeffs(), &[1]);
        assert!(f.is_borel());
    }

    #[test]
    fn point_line_incidence_omega() {
        for n in 2..=8 {
            let f = flag(&format!("A{n}"), &[1, 2]);
            assert_eq!(f.dimension(), 2 * n - 1);
            let mut expected = vec![n as i64, 2 * (n as i64 - 1)];
            for k in 3..=n {
                expected.push(2 * (n - k + 1) as i64);
            }
            assert_eq!(f.omega().coeffs(), expected.as_slice(), "n = {n}");
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(flag("C3", &[2]).dimension(), 7);
        assert_eq!(flag("B3", &[3]).dimension(), 6);
        for n in 3..=7 {
            assert_eq!(flag(&format!("B{n}"), &[n]).dimension(), n * (n + 1) / 2);
        }
    }

    #[test]
    fn b3_omega() {
        assert_eq!(flag("B3", &[3]).omega().coeffs(), &[3, 6, 9]);
    }

    #[test]
    fn level_counts() {
        for n in 3..=6 {
            let f = flag(&format!("B{n}"), &[n]);
            let levels = f.level_grading();
            assert_eq!(levels.iter().filter(|&&l| l == 1).count(), n);
            assert_eq!(levels.iter().filter(|&&l| l == 2).count(), n * (n - 1) / 2);
        }
        let c3 = flag("C3", &[2]);
        let mut levels = c3.level_grading();
        levels.sort();
        assert_eq!(levels, vec![1, 1, 1, 1, 2, 2, 2]);
        // crossed simple roots sit at level 1
        let f = flag("E6", &[2, 5]);
        for &node in f.crossed() {
            let pos = f.noncompact_position(f.system().simple_root(node)).unwrap();
            assert_eq!(f.level(pos), 1);
        }
    }

    #[test]
    fn adjoint_dimensions() {
        for n in 1..=8 {
            let f = adjoint(&format!("A{n}"));
            assert_eq!(f.dimension(), 2 * n - 1);
            if n >= 2 {
                assert_eq!(f.crossed(), &[0, n - 1]);
            }
        }
        assert_eq!(adjoint("G2").dimension(), 5);
        assert_eq!(adjoint("F4").dimension(), 15);
        assert_eq!(adjoint("E8").dimension(), 57);
    }

    #[test]
    fn errors() {
        let sys = Arc::new(RootSystem::new("A3".parse().unwrap()));
        assert_eq!(
            ParabolicFlag::new(sys.clone(), &[]).unwrap_err(),
            Error::EmptyCrossing
        );
        assert_eq!(
            ParabolicFlag::new(sys, &[3]).unwrap_err(),
            Error::NodeOutOfRange { node: 3, rank: 3 }
        );
        let spec = FlagSpec::simple("A3".parse().unwrap(), &[0]);
        assert!(spec.build().is_err());
        let reducible = Arc::new(
            RootSystem::from_factors(&["A1".parse().unwrap(), "A1".parse().unwrap()]).unwrap(),
        );
        assert!(matches!(
            adjoint_flag(reducible),
            Err(Error::Reducible { .. })
        ));
    }

    #[test]
    fn spec_round_trip_and_projection() {
        let json =
            r#"{"factors":[{"series":"G","rank":2},{"series":"C","rank":3}],"crossed":[[1],[2]]}"#;
        let spec: FlagSpec = serde_json::from_str(json).unwrap();
        let f = spec.build().unwrap();
        assert_eq!(f.spec(), spec);
        assert_eq!(f.label(), "G2{1}xC3{2}");
        assert_eq!(f.dimension(), 12);
        assert_eq!(f.project(0).unwrap().dimension(), 5);
        assert_eq!(f.project(1).unwrap().dimension(), 7);
        assert_eq!(f.component_positions(1).len(), 7);
        assert_eq!(f.crossed(), &[0, 3]);
    }

    #[test]
    fn weight_rendering() {
        let w = Weight(vec![10, 5]);
        assert_eq!(w.to_string(), "10,5");
        assert_eq!(w.pretty(), "10a1+5a2");
        assert_eq!(Weight::zero(2).pretty(), "0");
    }
}
