//! End-to-end acceptance checks, one PASS/FAIL line per criterion.
//!
//! Runs with its own harness so the report is always printed. The process
//! fails when a check disagrees with its expected outcome; two figure-level
//! orderings are known counterexamples of the model and are expected to fail.

mod common;

use std::f64::consts::SQRT_2;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spincorr::ed::{ChainModel, ChainSpectrum, FiniteChainSpec};
use spincorr::heisenberg::{
    concurrence_closed, hamiltonian, thermal_state, thermal_state_spectral, HeisenbergParams,
};
use spincorr::matrix::{eigvals_hermitian, CMatrix, DensityMatrix};
use spincorr::measures::{concurrence, discord_numeric, discord_xstate, report};
use spincorr::optimize::golden_section;
use spincorr::scan::{sweep, zero_entanglement_region, Axis, NullRegion, Point, ScanRow, SweepSpec};
use spincorr::xy::{
    factorizing_field, magnetization, magnetization_ising_exact, pair_correlators, two_site_state, CorrelatorSet,
    Separation, XYParams,
};
use spincorr::Error;

/// A named sub-check with its measured detail.
struct Check {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn check(name: &'static str, pass: bool, detail: String) -> Check {
    Check { name, pass, detail }
}

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Vec<Check>,
}

/// Sub-checks that are counterexamples of the model itself; see README.
const EXPECTED_FAILURES: [&str; 2] = ["fig1 discord >= eof", "fig2 discord decreasing in R"];

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "analytic anchors", budget: Duration::from_secs(10), run: analytic_anchors },
        Criterion { id: 2, title: "dual-method equalities", budget: Duration::from_secs(120), run: dual_methods },
        Criterion { id: 3, title: "elliptic magnetization", budget: Duration::from_secs(30), run: magnetization_checks },
        Criterion { id: 4, title: "exact-diagonalization agreement", budget: Duration::from_secs(300), run: ed_agreement },
        Criterion { id: 5, title: "figure-level properties", budget: Duration::from_secs(180), run: figure_properties },
        Criterion { id: 6, title: "measure property suite", budget: Duration::from_secs(120), run: measure_suite },
        Criterion { id: 7, title: "figures command", budget: Duration::from_secs(600), run: figures_command },
    ];
    let mut unexpected = 0;
    for c in &criteria {
        let start = Instant::now();
        let checks = (c.run)();
        let elapsed = start.elapsed();
        let in_time = elapsed <= c.budget;
        let pass = in_time && checks.iter().all(|k| k.pass);
        println!(
            "criterion {} {}: {} ({:.1} s of {} s)",
            c.id,
            c.title,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        for k in &checks {
            let expected_fail = EXPECTED_FAILURES.contains(&k.name);
            let tag = match (k.pass, expected_fail) {
                (true, false) => "ok",
                (false, true) => "fail (expected)",
                (false, false) => "FAIL",
                (true, true) => "PASS (expected to fail)",
            };
            println!("    {:<40} {:<24} {}", k.name, tag, k.detail);
            if k.pass == expected_fail {
                unexpected += 1;
            }
        }
        if !in_time {
            println!("    over the time budget");
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} check(s) disagree with their expected outcome");
        ExitCode::FAILURE
    }
}

// ---- 1 ----

fn analytic_anchors() -> Vec<Check> {
    let mut worst = 0.0f64;
    for g in [0.3, 0.5, 0.8] {
        let rho = two_site_state(&XYParams::equilibrium(g, factorizing_field(g), 0.0, Separation::Finite(1)).unwrap())
            .unwrap();
        worst = worst.max(concurrence(&rho).unwrap());
    }

    // zero crossing of the Wootters concurrence of the thermal state, by bisection
    let tc = 8.0 / 3f64.ln();
    let entangled = |t: f64| concurrence(&thermal_state(&HeisenbergParams::new(1.0, 1.0, t).unwrap()).unwrap()).unwrap() > 0.0;
    let (mut lo, mut hi) = (1.0, 20.0);
    assert!(entangled(lo) && !entangled(hi));
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if entangled(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let crossing = 0.5 * (lo + hi);

    // level crossing: the gap between the two lowest levels closes at B_c
    let gap = |b: f64| {
        let e = eigvals_hermitian(&hamiltonian(1.0, b).unwrap()).unwrap();
        let mut e = e.to_vec();
        e.sort_by(f64::total_cmp);
        e[1] - e[0]
    };
    let (bc, _) = golden_section(gap, 2.0, 6.0, 1e-12);

    vec![
        check("C at h_f, T = 0, R = 1", worst < 1e-6, format!("max {worst:.2e}")),
        check("T_c concurrence crossing", (crossing - tc).abs() < 1e-6, format!("{crossing:.9} vs {tc:.9}")),
        check("B_c level crossing", (bc - 4.0).abs() < 1e-9, format!("{bc:.12}")),
    ]
}

// ---- 2 ----

fn heisenberg_grid() -> Vec<HeisenbergParams> {
    let mut out = Vec::new();
    for i in 0..20 {
        for k in 0..20 {
            let b = 10.0 * i as f64 / 19.0;
            let t = 0.05 + 11.95 * k as f64 / 19.0;
            out.push(HeisenbergParams::new(1.0, b, t).unwrap());
        }
    }
    out
}

fn dual_methods() -> Vec<Check> {
    let grid = heisenberg_grid();
    let conc = grid
        .iter()
        .map(|p| (concurrence_closed(p).unwrap() - concurrence(&thermal_state(p).unwrap()).unwrap()).abs())
        .fold(0.0, f64::max);
    let entries = grid
        .iter()
        .map(|p| thermal_state(p).unwrap().matrix().max_abs_diff(thermal_state_spectral(p).unwrap().matrix()))
        .fold(0.0, f64::max);

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut states = Vec::new();
    while states.len() < 60 {
        let p = XYParams::equilibrium(
            rng.gen_range(0.05..1.0),
            rng.gen_range(0.0..2.0),
            if rng.gen_bool(0.25) { 0.0 } else { rng.gen_range(0.01..2.0) },
            Separation::Finite(rng.gen_range(1..=3)),
        )
        .unwrap();
        states.push(two_site_state(&p).unwrap());
    }
    while states.len() < 100 {
        let p = HeisenbergParams::new(1.0, rng.gen_range(0.0..12.0), rng.gen_range(0.0..10.0)).unwrap();
        states.push(thermal_state(&p).unwrap());
    }
    let disc = states
        .iter()
        .map(|rho| (discord_numeric(rho).0 - discord_xstate(rho).unwrap()).abs())
        .fold(0.0, f64::max);

    vec![
        check("closed vs Wootters concurrence", conc <= 1e-12, format!("max {conc:.1e} on 20x20")),
        check("numeric vs x-state discord", disc <= 1e-6, format!("max {disc:.1e} on 100 states")),
        check("explicit vs spectral thermal state", entries <= 1e-12, format!("max {entries:.1e} on 20x20")),
    ]
}

// ---- 3 ----

fn magnetization_checks() -> Vec<Check> {
    let worst = [0.25, 0.5, 2.0, 5.0]
        .iter()
        .map(|&h| (magnetization(h, 1.0, 0.0).unwrap() - magnetization_ising_exact(h).unwrap()).abs())
        .fold(0.0, f64::max);

    let slope = |h: f64, step: f64| {
        (magnetization(h + step, 1.0, 0.0).unwrap() - magnetization(h - step, 1.0, 0.0).unwrap()) / (2.0 * step)
    };
    let mut monotone = true;
    let mut ratios = Vec::new();
    for side in [-1.0, 1.0] {
        let s: Vec<f64> = (2..=5)
            .map(|k| {
                let d = 10f64.powi(-k);
                slope(1.0 + side * d, d / 10.0)
            })
            .collect();
        monotone &= s.windows(2).all(|w| w[1] > w[0]);
        // equal growth per decade of |h - 1| is what a log divergence predicts
        for w in s.windows(3) {
            ratios.push((w[2] - w[1]) / (w[1] - w[0]));
        }
    }
    let ratio_ok = ratios.iter().all(|r| (r - 1.0).abs() <= 0.25);
    vec![
        check("quadrature vs elliptic M_z", worst <= 1e-8, format!("max {worst:.1e}")),
        check("dM_z/dh increases toward h = 1", monotone, String::new()),
        check("growth per decade constant", ratio_ok, format!("ratios {ratios:.3?}")),
    ]
}

// ---- 4 ----

fn gap(a: &CorrelatorSet, b: &CorrelatorSet) -> f64 {
    [a.mz - b.mz, a.txx - b.txx, a.tyy - b.tyy, a.tzz - b.tzz, a.txy - b.txy]
        .iter()
        .fold(0.0f64, |m, d| m.max(d.abs()))
}

fn ed_agreement() -> Vec<Check> {
    let (gamma, t) = (0.5, 1.0);
    let mut worst12 = 0.0f64;
    let mut shrinks = true;
    let mut detail = Vec::new();
    for h in [0.3, 0.8, 1.5] {
        let chain = |n| ChainSpectrum::compute(&FiniteChainSpec::new(n, ChainModel::XY { gamma, h }, t).unwrap()).unwrap();
        let (c8, c12) = (chain(8), chain(12));
        for r in [1usize, 2] {
            let exact =
                pair_correlators(&XYParams::equilibrium(gamma, h, t, Separation::Finite(r as u32)).unwrap()).unwrap();
            let g8 = gap(&c8.correlators(r).unwrap(), &exact);
            let g12 = gap(&c12.correlators(r).unwrap(), &exact);
            worst12 = worst12.max(g12);
            shrinks &= g12 < g8;
            detail.push(format!("{g12:.0e}"));
        }
    }
    vec![
        check("N = 12 within 2e-2", worst12 <= 2e-2, format!("max {worst12:.1e}")),
        check("N = 12 closer than N = 8", shrinks, detail.join(" ")),
    ]
}

// ---- 5 ----

fn xy_sweep(temperature: f64, separation: Separation, count: usize) -> Vec<ScanRow> {
    let spec = SweepSpec {
        base: Point::XY { gamma: 0.5, h: 0.0, temperature, separation },
        axis: Axis::H,
        min: 0.0,
        max: 2.0,
        count,
    };
    sweep(&spec).unwrap()
}

fn argmax(rows: &[ScanRow], col: &str) -> (f64, f64) {
    rows.iter()
        .map(|r| (r.h.unwrap(), r.value(col).unwrap().unwrap()))
        .fold((f64::NAN, f64::NEG_INFINITY), |best, x| if x.1 > best.1 { x } else { best })
}

fn figure_properties() -> Vec<Check> {
    let hf = factorizing_field(0.5);
    let mut out = Vec::new();

    // Fig. 1: low temperature, nearest neighbours
    let fig1 = xy_sweep(1e-3, Separation::Finite(1), 101);
    let violations: Vec<f64> = fig1
        .iter()
        .filter(|r| r.discord.unwrap() < r.eof.unwrap())
        .map(|r| r.h.unwrap())
        .collect();
    let h0 = &fig1[0];
    out.push(check(
        "fig1 discord >= eof",
        violations.is_empty(),
        format!(
            "{} of 101 rows below, e.g. h = 0: {:.4} < {:.4}; h in [{}, {}]",
            violations.len(),
            h0.discord.unwrap(),
            h0.eof.unwrap(),
            violations.iter().cloned().fold(f64::INFINITY, f64::min),
            violations.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
        ),
    ));
    let (hmax, _) = argmax(&fig1, "discord");
    out.push(check("fig1 discord peak near h_f", (hmax - hf).abs() <= 0.05, format!("peak at h = {hmax}")));

    // Fig. 2: ground state at increasing separation
    let grid: Vec<[f64; 3]> = {
        let rows: Vec<Vec<ScanRow>> = (1..=3).map(|r| xy_sweep(0.0, Separation::Finite(r), 50)).collect();
        (0..50).map(|i| [0, 1, 2].map(|k| rows[k][i].discord.unwrap())).collect()
    };
    let bad: Vec<String> = grid
        .iter()
        .enumerate()
        .filter(|(_, d)| d[0] + 1e-6 < d[1] || d[1] + 1e-6 < d[2])
        .map(|(i, d)| format!("h = {:.3}: {:.5} {:.5} {:.5}", 2.0 * i as f64 / 49.0, d[0], d[1], d[2]))
        .collect();
    out.push(check(
        "fig2 discord decreasing in R",
        bad.is_empty(),
        format!("{} of 50 fields out of order; {}", bad.len(), bad.first().cloned().unwrap_or_default()),
    ));
    let far = |h: f64| {
        let p = XYParams::equilibrium(0.5, h, 0.0, Separation::Infinite).unwrap();
        let rho = two_site_state(&p).unwrap();
        discord_numeric(&rho).0
    };
    let tail: Vec<(f64, f64)> = [1.25, 1.5, 1.75, 2.0].iter().map(|&h| (h, far(h))).collect();
    let below = far(0.5);
    out.push(check(
        "fig2 R = inf discord vanishes for h > 1",
        tail.iter().all(|&(_, d)| d < 1e-3) && below > 1e-3,
        format!(
            "{}; h = 0.5: {below:.3}",
            tail.iter().map(|(h, d)| format!("h = {h}: {d:.1e}")).collect::<Vec<_>>().join(", ")
        ),
    ));

    // Fig. 3: null-entanglement region
    let width = |t: f64| match zero_entanglement_region(0.5, Separation::Finite(1), t) {
        Ok(r) => r.width(),
        Err(Error::NotFound { .. }) => 0.0,
        Err(e) => panic!("{e}"),
    };
    let widths = [0.01, 0.1, 0.3].map(width);
    out.push(check(
        "fig3 null region widens with T",
        widths.windows(2).all(|w| w[1] >= w[0]),
        format!("widths {widths:.4?} at T = 0.01, 0.1, 0.3"),
    ));
    let region = zero_entanglement_region(0.5, Separation::Finite(1), 0.3).unwrap();
    let (hd, _) = argmax(&xy_sweep(0.3, Separation::Finite(1), 201), "discord");
    let (lo, hi) = match region {
        NullRegion::Interval { lo, hi } => (lo, hi),
        NullRegion::Point(p) => (p, p),
    };
    out.push(check(
        "fig3 discord peak inside null region",
        region.contains(hd),
        format!("peak h = {hd}, region [{lo:.4}, {hi:.4}]"),
    ));

    // Fig. 4: Heisenberg pair against temperature
    let t_sweep = |b: f64| {
        sweep(&SweepSpec {
            base: Point::Heisenberg { j: 1.0, b, temperature: 0.0 },
            axis: Axis::T,
            min: 0.05,
            max: 10.0,
            count: 200,
        })
        .unwrap()
    };
    let col = |rows: &[ScanRow], c: &str| -> Vec<f64> { rows.iter().map(|r| r.value(c).unwrap().unwrap()).collect() };
    let weak = t_sweep(1.0);
    let decreasing = ["concurrence", "discord", "cc"]
        .iter()
        .all(|c| col(&weak, c).windows(2).all(|w| w[1] <= w[0] + 1e-12));
    out.push(check("fig4 B = 1 all measures decrease", decreasing, String::new()));
    let c8 = col(&t_sweep(8.0), "concurrence");
    let (imax, cmax) = c8.iter().enumerate().fold((0, 0.0), |b, (i, &x)| if x > b.1 { (i, x) } else { b });
    let death = c8.iter().rposition(|&c| c > 0.0).map(|i| i + 1 < c8.len()).unwrap_or(false);
    out.push(check(
        "fig4 B = 8 interior maximum, sudden death",
        c8[0] < 1e-12 && imax > 0 && imax + 1 < c8.len() && cmax > 0.0 && death,
        format!("max C = {cmax:.4} at T = {:.3}", 0.05 + 9.95 * imax as f64 / 199.0),
    ));
    let strong = t_sweep(25.0);
    let emax = col(&strong, "eof").into_iter().fold(0.0, f64::max);
    let dmax = col(&strong, "discord").into_iter().fold(0.0, f64::max);
    out.push(check(
        "fig4 B = 25 E negligible, discord survives",
        emax < 1e-3 && dmax > 1e-3,
        format!("max E = {emax:.1e}, max discord = {dmax:.1e}"),
    ));
    out
}

// ---- 6 ----

fn random_state(rng: &mut ChaCha8Rng) -> DensityMatrix {
    let g = ginibre_state(&std::array::from_fn(|_| rng.gen_range(-1.0..1.0)));
    let psi = pure_state(&std::array::from_fn(|_| rng.gen_range(-1.0..1.0)));
    let w = rng.gen_range(0.0..1.0);
    DensityMatrix::new(CMatrix::<4>::from_fn(|i, j| g.entry(i, j) * (1.0 - w) + psi.entry(i, j) * w)).unwrap()
}

fn measure_suite() -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    let (mut sum_err, mut neg, mut chsh_max, mut lu_err) = (0.0f64, 0usize, 0.0f64, 0.0f64);
    for _ in 0..500 {
        let rho = random_state(&mut rng);
        let r = report(&rho).unwrap();
        sum_err = sum_err.max((r.mutual_info - r.discord - r.classical).abs());
        neg += (r.discord < 0.0 || r.classical < 0.0) as usize;
        chsh_max = chsh_max.max(r.chsh);
        let ua = unitary2(std::array::from_fn(|_| rng.gen_range(0.0..std::f64::consts::TAU)));
        let ub = unitary2(std::array::from_fn(|_| rng.gen_range(0.0..std::f64::consts::TAU)));
        let s = report(&rho.local_unitary(&ua, &ub).unwrap()).unwrap();
        for (a, b) in [
            (r.discord, s.discord),
            (r.concurrence, s.concurrence),
            (r.eof, s.eof),
            (r.mutual_info, s.mutual_info),
            (r.chsh, s.chsh),
        ] {
            lu_err = lu_err.max((a - b).abs());
        }
    }
    let mut pure_err = 0.0f64;
    for _ in 0..100 {
        let psi = pure_state(&std::array::from_fn(|_| rng.gen_range(-1.0..1.0)));
        let d = report(&psi).unwrap().discord;
        pure_err = pure_err.max((d - reference_marginal_entropy_a(&psi)).abs());
    }
    vec![
        check("M_q = discord + CC", sum_err <= 1e-8, format!("max {sum_err:.1e}")),
        check("discord, CC >= 0", neg == 0, format!("{neg} negative")),
        check("pure-state discord = S(rho_A)", pure_err <= 1e-8, format!("max {pure_err:.1e}")),
        check("local-unitary invariance", lu_err <= 1e-7, format!("max {lu_err:.1e}")),
        check("CHSH <= 2 sqrt 2", chsh_max <= 2.0 * SQRT_2 + 1e-9, format!("max {chsh_max:.6}")),
    ]
}

// ---- 7 ----

fn figures_command() -> Vec<Check> {
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    let run = |dir: &std::path::Path, threads: &str, via_env: bool| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_spincorr"));
        cmd.arg("figures").arg("--out").arg(dir);
        if via_env {
            cmd.env("SPINCORR_THREADS", threads);
        } else {
            cmd.env_remove("SPINCORR_THREADS").args(["--threads", threads]);
        }
        cmd.output().unwrap().status.code()
    };
    let codes = [run(dirs[0].path(), "1", false), run(dirs[1].path(), "4", true)];
    let names = ["fig1", "fig2", "fig3", "fig4"];
    let mut identical = true;
    let mut present = true;
    for n in names {
        for ext in ["csv", "svg"] {
            present &= dirs.iter().all(|d| d.path().join(format!("{n}.{ext}")).is_file());
        }
        let read = |d: &tempfile::TempDir| std::fs::read(d.path().join(format!("{n}.csv"))).unwrap_or_default();
        identical &= read(&dirs[0]) == read(&dirs[1]);
    }
    vec![
        check("exit status 0", codes == [Some(0), Some(0)], format!("{codes:?}")),
        check("fig1..fig4 csv and svg written", present, String::new()),
        check("csv identical for 1 and 4 threads", identical, String::new()),
    ]
}
