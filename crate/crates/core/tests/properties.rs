use proptest::prelude::*;

use flagvar::submodule::{
    det_weight, enumerate_submodules, growth_vector, is_frobenius, is_submodule, saturate,
    semicanonical_ratio,
};
use flagvar::{
    EnumerationGuard, FlagSpec, ParabolicFlag, RootSet, SemicanonicalRatio, Series, SimpleType,
};

fn types_up_to(rank: usize) -> Vec<SimpleType> {
    Series::ALL
        .iter()
        .flat_map(|&s| (1..=rank).filter_map(move |r| SimpleType::new(s, r).ok()))
        .collect()
}

fn arb_flag() -> impl Strategy<Value = ParabolicFlag> {
    let types = types_up_to(4);
    (0..types.len(), any::<u32>()).prop_map(move |(i, bits)| {
        let ty = types[i];
        let n = ty.rank();
        let mut crossed: Vec<usize> = (1..=n).filter(|k| bits >> (k - 1) & 1 == 1).collect();
        if crossed.is_empty() {
            crossed.push(1 + bits as usize % n);
        }
        FlagSpec::simple(ty, &crossed).build().unwrap()
    })
}

fn arb_flag_and_set() -> impl Strategy<Value = (ParabolicFlag, RootSet)> {
    (arb_flag(), any::<u64>()).prop_map(|(f, mask)| {
        let n = f.dimension();
        let set = RootSet::from_positions(n, (0..n).filter(|&i| mask >> (i % 64) & 1 == 1));
        (f, set)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumerated_sets_are_closed_lattice((f, seed) in arb_flag_and_set()) {
        let subs = enumerate_submodules(&f, EnumerationGuard::default()).unwrap();
        let sets: Vec<RootSet> = subs.iter().map(|s| s.members().clone()).collect();
        for s in &sets {
            prop_assert!(is_submodule(&f, s));
        }
        prop_assert!(sets.first().unwrap().is_empty());
        prop_assert!(sets.last().unwrap().is_full());
        // saturation of any seed lands in the list and contains the seed
        let sat = saturate(&f, &seed).into_members();
        prop_assert!(seed.is_subset(&sat));
        prop_assert!(sets.contains(&sat));
        prop_assert_eq!(saturate(&f, &sat).into_members(), sat.clone());
        for a in sets.iter().take(8) {
            prop_assert!(sets.contains(&a.union(&sat)));
            prop_assert!(sets.contains(&a.intersection(&sat)));
        }
    }

    #[test]
    fn weights_are_additive_and_bounded((f, set) in arb_flag_and_set()) {
        let w = det_weight(&f, &set);
        let wc = det_weight(&f, &set.complement());
        let total: Vec<i64> = w.coeffs().iter().zip(wc.coeffs()).map(|(a, b)| a + b).collect();
        prop_assert_eq!(total.as_slice(), f.omega().coeffs());
        prop_assert!(w.dominated_by(f.omega()));
        if let Some(r) = semicanonical_ratio(&f, &set) {
            prop_assert!(r <= SemicanonicalRatio::new(1, 1));
            // the complement has ratio 1 - r
            let rc = semicanonical_ratio(&f, &set.complement()).unwrap();
            prop_assert_eq!(r.numer() * rc.denom() + rc.numer() * r.denom(), r.denom() * rc.denom());
        }
    }

    #[test]
    fn trivial_sets_have_trivial_ratios(f in arb_flag()) {
        let n = f.dimension();
        prop_assert_eq!(semicanonical_ratio(&f, &RootSet::empty(n)), Some(SemicanonicalRatio::new(0, 1)));
        prop_assert_eq!(semicanonical_ratio(&f, &RootSet::full(n)), Some(SemicanonicalRatio::new(1, 1)));
        prop_assert!(is_frobenius(&f, &RootSet::empty(n)));
        prop_assert!(is_frobenius(&f, &RootSet::full(n)));
    }

    #[test]
    fn growth_is_monotone_and_reaches_generated((f, set) in arb_flag_and_set()) {
        let g = growth_vector(&f, &set).0;
        prop_assert!(g.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(g.last().copied().unwrap_or(0) <= f.dimension());
        if !set.is_empty() {
            prop_assert_eq!(g[0], set.len());
        }
    }

    #[test]
    fn ratio_string_roundtrip(p in 0u64..1000, q in 1u64..1000) {
        let r = SemicanonicalRatio::new(p, q);
        let back: SemicanonicalRatio = r.to_string().parse().unwrap();
        prop_assert_eq!(back, r);
    }
}

#[test]
fn level_one_generates_everything() {
    // level-1 roots bracket-generate the whole nilradical
    for ty in types_up_to(5) {
        for node in 1..=ty.rank() {
            let f = FlagSpec::simple(ty, &[node]).build().unwrap();
            let n = f.dimension();
            let v = RootSet::from_positions(n, (0..n).filter(|&p| f.level(p) == 1));
            assert_eq!(*growth_vector(&f, &v).0.last().unwrap(), n, "{}", f.label());
        }
    }
}
