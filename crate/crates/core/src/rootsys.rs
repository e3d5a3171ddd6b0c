//! Finite reduced root systems in simple-root coordinates.
//!
//! Roots are interned: every root of a [`RootSystem`] has a dense [`RootId`].
//! Positive roots come first, ordered by height and then by descending
//! coefficient vector (so the simple roots occupy ids `0..rank` in node
//! order); the negatives follow in the same order.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub const ALL: [Series; 7] = [
        Series::A,
        Series::B,
        Series::C,
        Series::D,
        Series::E,
        Series::F,
        Series::G,
    ];

    fn min_rank(self) -> usize {
        match self {
            Series::A => 1,
            Series::B | Series::C | Series::G => 2,
            Series::D => 3,
            Series::E => 6,
            Series::F => 4,
        }
    }

    fn accepts(self, rank: usize) -> bool {
        match self {
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
            _ => rank >= self.min_rank(),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            "E" => Ok(Series::E),
            "F" => Ok(Series::F),
            "G" => Ok(Series::G),
            _ => Err(Error::UnknownSeries(s.to_string())),
        }
    }
}

/// A simple Lie type such as `B3` or `E8`. Construction validates the rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawType")]
pub struct SimpleType {
    series: Series,
    rank: usize,
}

#[derive(Deserialize)]
struct RawType {
    series: Series,
    rank: usize,
}

impl TryFrom<RawType> for SimpleType {
    type Error = Error;

    fn try_from(raw: RawType) -> Result<Self> {
        SimpleType::new(raw.series, raw.rank)
    }
}

impl SimpleType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        if series.accepts(rank) {
            Ok(SimpleType { series, rank })
        } else {
            Err(Error::InvalidRank { series, rank })
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `a[i][j] = <alpha_j, alpha_i^vee>`, Bourbaki numbering, zero-based.
    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let mut a = vec![vec![0i32; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut simple_edge = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.series {
            Series::A | Series::B | Series::C => {
                for i in 1..n {
                    simple_edge(i - 1, i);
                }
            }
            Series::D => {
                for i in 1..n - 1 {
                    simple_edge(i - 1, i);
                }
                simple_edge(n - 3, n - 1);
            }
            Series::E => {
                simple_edge(0, 2);
                simple_edge(1, 3);
                for i in 3..n {
                    simple_edge(i - 1, i);
                }
            }
            Series::F => {
                simple_edge(0, 1);
                simple_edge(2, 3);
            }
            Series::G => {}
        }
        // a[short][long] = -multiplicity, a[long][short] = -1
        let mut multi_edge = |short: usize, long: usize, m: i32| {
            a[short][long] = -m;
            a[long][short] = -1;
        };
        match self.series {
            Series::B => multi_edge(n - 1, n - 2, 2),
            Series::C => multi_edge(n - 2, n - 1, 2),
            Series::F => multi_edge(2, 1, 2),
            Series::G => multi_edge(0, 1, 3),
            _ => {}
        }
        a
    }

    /// Diagram automorphisms as node permutations (zero-based), identity first.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.rank;
        let id: Vec<usize> = (0..n).collect();
        let mut out = vec![id.clone()];
        match (self.series, n) {
            (Series::A, n) if n >= 2 => out.push((0..n).rev().collect()),
            (Series::D, 4) => {
                // permutations of the three outer nodes {0, 2, 3}
                let outer = [0usize, 2, 3];
                for p in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                    let mut perm = id.clone();
                    for (k, &src) in outer.iter().enumerate() {
                        perm[src] = outer[p[k]];
                    }
                    out.push(perm);
                }
            }
            (Series::D, n) if n >= 4 => {
                let mut perm = id.clone();
                perm.swap(n - 2, n - 1);
                out.push(perm);
            }
            (Series::E, 6) => out.push(vec![5, 1, 4, 3, 2, 0]),
            _ => {}
        }
        out
    }

    /// Expected number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
            Series::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    /// Parses `"G2"`, `"b3"`, `"E8"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let head = chars
            .next()
            .ok_or_else(|| Error::Descriptor("empty type".into()))?;
        let series: Series = head.to_string().parse()?;
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::Descriptor(format!("bad rank in `{s}`")))?;
        SimpleType::new(series, rank)
    }
}

/// Dense handle of a root inside one [`RootSystem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(u32);

impl RootId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// One simple factor of a semisimple system and the nodes it occupies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub ty: SimpleType,
    pub nodes: Range<usize>,
}

/// Root system descriptor, e.g. `{"factors":[{"series":"G","rank":2}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemSpec {
    pub factors: Vec<SimpleType>,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    components: Vec<Component>,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Vec<i32>>,
    positive: usize,
    lookup: HashMap<Vec<i32>, RootId>,
    sums: Vec<Option<RootId>>,
    component_of: Vec<usize>,
}

impl RootSystem {
    pub fn new(ty: SimpleType) -> Self {
        Self::build(vec![ty])
    }

    /// Semisimple system with block-diagonal coordinates, one block per factor.
    pub fn from_factors(factors: &[SimpleType]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Descriptor("no factors".into()));
        }
        Ok(Self::build(factors.to_vec()))
    }

    pub fn from_spec(spec: &SystemSpec) -> Result<Self> {
        Self::from_factors(&spec.factors)
    }

    fn build(factors: Vec<SimpleType>) -> Self {
        let rank: usize = factors.iter().map(SimpleType::rank).sum();
        let mut cartan = vec![vec![0i32; rank]; rank];
        let mut components = Vec::with_capacity(factors.len());
        let mut offset = 0;
        for ty in factors {
            let block = ty.cartan_matrix();
            for (i, row) in block.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    cartan[offset + i][offset + j] = v;
                }
            }
            components.push(Component {
                ty,
                nodes: offset..offset + ty.rank(),
            });
            offset += ty.rank();
        }

        let mut positive = generate_positive_roots(&cartan);
        positive.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let count = positive.len();
        let mut roots = positive.clone();
        roots.extend(
            positive
                .iter()
                .map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()),
        );

        let lookup: HashMap<Vec<i32>, RootId> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), RootId(i as u32)))
            .collect();

        let total = roots.len();
        let mut sums = vec![None; total * total];
        let mut scratch = vec![0i32; rank];
        for a in 0..total {
            for b in 0..total {
                for k in 0..rank {
                    scratch[k] = roots[a][k] + roots[b][k];
                }
                sums[a * total + b] = lookup.get(&scratch).copied();
            }
        }

        let component_of = positive
            .iter()
            .map(|r| {
                let node = r.iter().position(|&c| c != 0).expect("nonzero root");
                components
                    .iter()
                    .position(|c| c.nodes.contains(&node))
                    .expect("node in some component")
            })
            .collect();

        RootSystem {
            components,
            rank,
            cartan,
            roots,
            positive: count,
            lookup,
            sums,
            component_of,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn spec(&self) -> SystemSpec {
        SystemSpec {
            factors: self.components.iter().map(|c| c.ty).collect(),
        }
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn positive_count(&self) -> usize {
        self.positive
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = RootId> + '_ {
        (0..self.positive).map(|i| RootId(i as u32))
    }

    pub fn roots(&self) -> impl Iterator<Item = RootId> + '_ {
        (0..self.roots.len()).map(|i| RootId(i as u32))
    }

    pub fn simple_root(&self, node: usize) -> RootId {
        assert!(node < self.rank, "node {node} out of range");
        RootId(node as u32)
    }

    pub fn coeffs(&self, id: RootId) -> &[i32] {
        &self.roots[id.index()]
    }

    pub fn height(&self, id: RootId) -> i32 {
        self.coeffs(id).iter().sum()
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id.index() < self.positive
    }

    pub fn negate(&self, id: RootId) -> RootId {
        let i = id.index();
        if i < self.positive {
            RootId((i + self.positive) as u32)
        } else {
            RootId((i - self.positive) as u32)
        }
    }

    /// Index of the simple factor a root lives in.
    pub fn component_of(&self, id: RootId) -> usize {
        let i = id.index();
        self.component_of[if i < self.positive {
            i
        } else {
            i - self.positive
        }]
    }

    pub fn lookup(&self, coeffs: &[i32]) -> Option<RootId> {
        self.lookup.get(coeffs).copied()
    }

    pub fn is_root(&self, coeffs: &[i32]) -> bool {
        coeffs.len() == self.rank && self.lookup.contains_key(coeffs)
    }

    fn check(&self, id: RootId) -> Result<()> {
        if id.index() < self.roots.len() {
            Ok(())
        } else {
            Err(Error::ForeignRoot)
        }
    }

    /// The root with coefficients `a + b`, if that is a root.
    pub fn add_roots(&self, a: RootId, b: RootId) -> Result<Option<RootId>> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sum(a, b))
    }

    /// Same as [`add_roots`](Self::add_roots) on raw coefficient vectors;
    /// both inputs must be roots of this system.
    pub fn add_coeffs(&self, a: &[i32], b: &[i32]) -> Result<Option<RootId>> {
        let a = self.lookup(a).ok_or(Error::ForeignRoot)?;
        let b = self.lookup(b).ok_or(Error::ForeignRoot)?;
        Ok(self.sum(a, b))
    }

    #[inline]
    pub(crate) fn sum(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.sums[a.index() * self.roots.len() + b.index()]
    }

    /// `<v, alpha_i^vee>`.
    pub fn pairing(&self, v: &[i32], node: usize) -> i32 {
        self.cartan[node].iter().zip(v).map(|(a, c)| a * c).sum()
    }

    /// Highest root of an irreducible system.
    pub fn highest_root(&self) -> Result<RootId> {
        if !self.is_irreducible() {
            return Err(Error::Reducible {
                components: self.components.len(),
            });
        }
        Ok(self.component_highest_root(0))
    }

    /// Highest root of one simple factor.
    pub fn component_highest_root(&self, component: usize) -> RootId {
        // the last positive root of the component has maximal height, and the
        // highest root is the unique root of maximal height
        self.positive_roots()
            .filter(|&r| self.component_of(r) == component)
            .last()
            .expect("every factor has a positive root")
    }
}

/// Positive roots by breadth-first closure over heights using root strings:
/// for positive `g != a_i` with `g - k a_i` a root for `k = 1..=p`,
/// `g + a_i` is a root iff `p - <g, a_i^vee> > 0`.
fn generate_positive_roots(cartan: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let rank = cartan.len();
    let pairing =
        |v: &[i32], i: usize| -> i32 { cartan[i].iter().zip(v).map(|(a, c)| a * c).sum() };
    let mut known: std::collections::HashSet<Vec<i32>> = std::collections::HashSet::new();
    let mut layer: Vec<Vec<i32>> = (0..rank)
        .map(|i| {
            let mut v = vec![0; rank];
            v[i] = 1;
            v
        })
        .collect();
    known.extend(layer.iter().cloned());
    let mut all = layer.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for g in &layer {
            for i in 0..rank {
                let simple = g.iter().enumerate().all(|(k, &c)| c == i32::from(k == i));
                if simple {
                    continue;
                }
                let mut p = 0;
                let mut probe = g.clone();
                loop {
                    probe[i] -= 1;
                    if probe[i] >= 0 && known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing(g, i) > 0 {
                    let mut up = g.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// Builds one independent system per factor.
pub fn diagram_components(types: &[SimpleType]) -> Vec<(usize, RootSystem)> {
    types
        .iter()
        .enumerate()
        .map(|(i, &ty)| (i, RootSystem::new(ty)))
        .collect()
}
