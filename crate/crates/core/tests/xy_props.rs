use proptest::prelude::*;
use spincorr::ed::{ChainModel, ChainSpectrum, FiniteChainSpec};
use spincorr::xy::{
    g_equilibrium, pair_correlators, quench_correlators, state_matrix, two_site_state, CorrelatorSet, Separation,
    XYParams,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn unquenched_correlators_are_equilibrium(
        gamma in 0.0f64..=1.0,
        h in 0.0f64..3.0,
        t in prop_oneof![Just(0.0), 0.01f64..5.0],
        r in -6i64..=6,
        time in prop_oneof![Just(0.0), 0.0f64..20.0],
    ) {
        let p = XYParams::quench(gamma, h, h, time, t, Separation::Finite(1)).unwrap();
        let (g, s) = quench_correlators(r, &p).unwrap();
        let e = g_equilibrium(r, h, gamma, t).unwrap();
        prop_assert!((g - e).abs() < 1e-9, "G = {g}, equilibrium {e}");
        prop_assert!(s.abs() < 1e-9, "S = {s}");
    }
}

#[test]
fn assembled_states_are_positive() {
    for r in [1, 2] {
        for i in 0..20 {
            for k in 0..20 {
                let h = 2.0 * i as f64 / 19.0;
                let t = 0.01 + (2.0 - 0.01) * k as f64 / 19.0;
                let p = XYParams::equilibrium(0.5, h, t, Separation::Finite(r)).unwrap();
                let rho = two_site_state(&p).unwrap_or_else(|e| panic!("h = {h}, T = {t}, R = {r}: {e}"));
                assert!(rho.eigenvalues().iter().all(|&x| x >= 0.0));
            }
        }
    }
}

fn gap(a: &CorrelatorSet, b: &CorrelatorSet) -> f64 {
    [a.txx - b.txx, a.tyy - b.tyy, a.tzz - b.tzz, a.mz - b.mz]
        .iter()
        .fold(0.0f64, |m, d| m.max(d.abs()))
}

#[test]
fn twelve_site_chain_matches_at_high_temperature() {
    let (gamma, h, t) = (0.5, 0.6, 2.0);
    let spec = FiniteChainSpec::new(12, ChainModel::XY { gamma, h }, t).unwrap();
    let chain = ChainSpectrum::compute(&spec).unwrap();
    for r in [1u32, 2] {
        let exact = pair_correlators(&XYParams::equilibrium(gamma, h, t, Separation::Finite(r)).unwrap()).unwrap();
        let ed = chain.correlators(r as usize).unwrap();
        assert!(gap(&ed, &exact) < 2e-2, "R = {r}: {}", gap(&ed, &exact));
        // the matrix each set assembles is the same up to that gap
        assert!(state_matrix(&ed).max_abs_diff(&state_matrix(&exact)) < 2e-2);
    }
}

#[test]
fn finite_size_gap_shrinks_with_temperature() {
    let (gamma, h) = (0.5, 0.5);
    let mut previous = f64::INFINITY;
    for t in [0.5, 1.0, 2.0] {
        let spec = FiniteChainSpec::new(8, ChainModel::XY { gamma, h }, t).unwrap();
        let ed = ChainSpectrum::compute(&spec).unwrap().correlators(1).unwrap();
        let exact = pair_correlators(&XYParams::equilibrium(gamma, h, t, Separation::Finite(1)).unwrap()).unwrap();
        let g = gap(&ed, &exact);
        assert!(g < previous, "T = {t}: gap {g} did not shrink from {previous}");
        previous = g;
    }
}
