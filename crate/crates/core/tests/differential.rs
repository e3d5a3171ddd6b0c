use flagvar::catalog::{brute_force_submodules, BRUTE_FORCE_LIMIT};
use flagvar::submodule::enumerate_submodules;
use flagvar::{EnumerationGuard, FlagSpec, RootSet, Series, SimpleType};

fn crossings(rank: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..1 << rank).map(move |m| (1..=rank).filter(|i| m >> (i - 1) & 1 == 1).collect())
}

#[test]
fn enumeration_matches_brute_force_rank_le_3() {
    let mut checked = 0;
    for s in Series::ALL {
        for r in 1..=3 {
            let Ok(ty) = SimpleType::new(s, r) else {
                continue;
            };
            for c in crossings(r) {
                let flag = FlagSpec::simple(ty, &c).build().unwrap();
                assert!(flag.dimension() <= BRUTE_FORCE_LIMIT);
                let fast: Vec<RootSet> = enumerate_submodules(&flag, EnumerationGuard::default())
                    .unwrap()
                    .into_iter()
                    .map(|s| s.into_members())
                    .collect();
                let slow = brute_force_submodules(&flag).unwrap();
                assert_eq!(fast, slow, "{}", flag.label());
                checked += 1;
            }
        }
    }
    // A1..A3, B2..B3, C2..C3, D3, G2 with all their crossings
    assert_eq!(checked, 1 + 3 + 7 + 3 + 7 + 3 + 7 + 7 + 3);
}

#[test]
fn enumeration_matches_brute_force_products() {
    for (a, b) in [("A1", "A1"), ("A2", "A1"), ("B2", "A1"), ("G2", "A2")] {
        let ta: SimpleType = a.parse().unwrap();
        let tb: SimpleType = b.parse().unwrap();
        for ca in crossings(ta.rank()) {
            for cb in crossings(tb.rank()) {
                let spec = FlagSpec {
                    factors: vec![ta, tb],
                    crossed: vec![ca.clone(), cb.clone()],
                };
                let flag = spec.build().unwrap();
                if flag.dimension() > BRUTE_FORCE_LIMIT {
                    continue;
                }
                let fast: Vec<RootSet> = enumerate_submodules(&flag, EnumerationGuard::default())
                    .unwrap()
                    .into_iter()
                    .map(|s| s.into_members())
                    .collect();
                assert_eq!(
                    fast,
                    brute_force_submodules(&flag).unwrap(),
                    "{}",
                    flag.label()
                );
            }
        }
    }
}
