#![allow(clippy::manual_div_ceil)]

use mediocre::cost::v2;
use mediocre::*;
use proptest::prelude::{any, prop_assert, prop_assert_eq, proptest, ProptestConfig};

fn shuffled(n: usize, seed: u64) -> Vec<Element> {
    let mut v: Vec<Element> = (0..n as u64).map(Element).collect();
    Rng::new(seed).shuffle(&mut v);
    v
}

fn tournament_count(buf: &[Element]) -> u64 {
    let mut cmp = CountingComparator::new();
    let second = select_second_tournament(buf, &mut cmp).unwrap();
    assert_eq!(second, select_by_sort(buf, 2, &mut CountingComparator::new()).unwrap());
    cmp.comparisons()
}

#[test]
fn tournament_exact_on_every_power_of_two() {
    for p in 1..=12u32 {
        let k = 1usize << p;
        for seed in 0..8 {
            assert_eq!(tournament_count(&shuffled(k, seed)), v2(k as u64), "k = {k}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn tournament_never_exceeds_v2(k in 2usize..=4096, seed in any::<u64>()) {
        prop_assert!(tournament_count(&shuffled(k, seed)) <= v2(k as u64));
    }

    #[test]
    fn tournament_exact_for_powers_of_two(p in 1u32..=12, seed in any::<u64>()) {
        let k = 1usize << p;
        prop_assert_eq!(tournament_count(&shuffled(k, seed)), v2(k as u64));
    }

    #[test]
    fn a1_pairing_count(n in 2usize..4096, a in 0.0f64..1.0, b in 0.0f64..1.0, seed in any::<u64>()) {
        let i = ((n - 1) as f64 / 3.0 * a) as usize;
        let jmax = n - 2 * i - 1;
        let j = i + ((jmax - i) as f64 * b) as usize;
        let inst = generate_instance(n, i, j, seed).unwrap();
        let out = a1_select(&inst, ExactSelector::default(), &mut CountingComparator::new()).unwrap();
        prop_assert_eq!(out.grouping_comparisons, (i + (j + 1) / 2) as u64);
        prop_assert!(out.is_mediocre_in(&inst).unwrap());
    }

    #[test]
    fn hyperpair_group_count(p in 1u32..=4, n in 2usize..4096, a in 0.0f64..1.0, b in 0.0f64..1.0, seed in any::<u64>()) {
        let g = 1usize << p;
        let i = ((n / g) as f64 * a) as usize;
        let j = ((n - i) as f64 * b) as usize;
        if let Ok(cfg) = HyperpairConfig::new(n, i, j, g) {
            let inst = generate_instance(n, i, j, seed).unwrap();
            let out = hyperpair_select(&inst, g, ExactSelector::default(), &mut CountingComparator::new()).unwrap();
            prop_assert_eq!(out.grouping_comparisons, (cfg.m * (g - 1)) as u64);
            prop_assert!(out.is_mediocre_in(&inst).unwrap());
        }
    }

    #[test]
    fn yao_with_one_meets_second_largest_bound(j in 0usize..4094, extra in 0usize..100, seed in any::<u64>()) {
        let n = j + 2 + extra;
        let inst = generate_instance(n, 1, j, seed).unwrap();
        let out = yao_select(&inst, ExactSelector::default(), &mut CountingComparator::new()).unwrap();
        prop_assert!(out.comparisons <= v2((j + 2) as u64));
        prop_assert!(out.is_mediocre_in(&inst).unwrap());
    }

    #[test]
    fn a2_sample_rank_in_band(i in 0usize..5000, j in 0usize..5000, slack in 0usize..5000) {
        let s = (i + j) as f64;
        let n = (s + 2.0 * s.powf(0.75)).ceil() as usize + slack;
        if let Ok(p) = a2_params(i, j, n.max(i + j + 1)) {
            let (lo, hi) = p.k_band();
            prop_assert!(lo <= p.k && p.k <= hi);
            prop_assert!(p.r <= p.m && p.m <= n.max(i + j + 1));
        }
    }
}

#[test]
fn a1_pairing_count_large() {
    // i = 0.1n, j = 0.7n - 1 at n = 10^4
    let inst = generate_instance(10_000, 1000, 6999, 3).unwrap();
    let out = a1_select(&inst, ExactSelector::default(), &mut CountingComparator::new()).unwrap();
    assert_eq!(out.grouping_comparisons, 4500);
}

#[test]
fn a2_tally_is_working_set_plus_sample_selection() {
    for seed in 0..50u64 {
        let inst = generate_instance(5000, 1500, 1800, seed).unwrap();
        let p = a2_params(1500, 1800, 5000).unwrap();
        for exact in [ExactSelector::MedianOfMedians, ExactSelector::Adaptive] {
            let out = a2_once(&inst, exact, &mut CountingComparator::new(), &mut Rng::new(seed)).unwrap();
            assert!(out.comparisons <= (p.m + 25 * p.r) as u64);
            assert!(out.comparisons >= (p.m - p.r) as u64);
        }
    }
}
