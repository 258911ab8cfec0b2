//! Acceptance battery: one test per criterion, each printing a single
//! verdict line. A failing criterion prints FAIL and panics.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cds_grid::regularize::find_mobiles;
use cds_grid::{
    apply_record, audit_final, audit_step, build_cds, enumerate_mcds, fujie_bounds,
    gamma_formula, known_small_gamma, normalize_origin, run_routine, sn_lower_bound,
    solve_gamma, solve_gamma_with_ceiling, CaseLabel, RegularityFrame, RoutineOutcome,
    VertexSet,
};

fn report(number: u32, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("criterion {number}: {verdict} - {detail}");
    assert!(pass, "criterion {number} failed: {detail}");
}

#[test]
fn criterion_1_formula_matches_construction() {
    let mut checked = 0u32;
    for m in 4..=40 {
        for n in 4..=40 {
            let (witness, _case) = build_cds(m, n).unwrap();
            let breakdown = gamma_formula(m, n).unwrap();
            assert!(witness.is_cds(), "witness for {m}x{n} is not a CDS");
            assert_eq!(
                witness.len() as u32,
                breakdown.gamma,
                "witness size mismatch at {m}x{n}"
            );
            checked += 1;
        }
    }
    report(
        1,
        checked == 1369,
        &format!("{checked} grids: every witness is a CDS of exactly the formula size"),
    );
}

#[test]
fn criterion_2_solver_agrees_with_formula() {
    let frozen = [
        ((4u32, 4u32), 7u32),
        ((4, 5), 9),
        ((4, 6), 10),
        ((4, 7), 12),
        ((5, 5), 11),
        ((5, 6), 12),
    ];
    let mut details = Vec::new();
    for ((m, n), expected) in frozen {
        let solved = solve_gamma(m, n, None).unwrap();
        let formula = gamma_formula(m, n).unwrap().gamma;
        assert_eq!(solved.gamma, expected, "solver value changed at {m}x{n}");
        assert_eq!(formula, expected, "formula value changed at {m}x{n}");
        details.push(format!("{m}x{n}={expected}"));
    }
    report(
        2,
        true,
        &format!("exact solver and formula agree: {}", details.join(", ")),
    );
}

#[test]
fn criterion_2_stretch_6x6() {
    let solved = solve_gamma_with_ceiling(6, 6, None, 36).unwrap();
    let formula = gamma_formula(6, 6).unwrap().gamma;
    report(
        2,
        solved.gamma == 14 && formula == 14,
        &format!("6x6 stretch: solver {} vs formula {formula}", solved.gamma),
    );
}

#[test]
fn criterion_3_narrow_grid_cross_checks() {
    for m in 2..=3u32 {
        for n in m..=8u32 {
            let solved = solve_gamma(m, n, None).unwrap().gamma;
            let closed = known_small_gamma(m, n).unwrap();
            assert_eq!(solved, closed, "narrow-grid mismatch at {m}x{n}");
        }
    }
    for n in 4..=1000u32 {
        let formula = gamma_formula(4, n).unwrap().gamma;
        assert_eq!(formula, 2 * n - n / 3, "4xn closed form mismatch at n={n}");
    }
    report(
        3,
        true,
        "solver matches the 2xn and 3xn closed forms (n <= 8); formula matches the 4xn closed form (n <= 1000)",
    );
}

#[test]
fn criterion_4_bound_sandwich_and_symmetry() {
    for m in 4..=200u32 {
        for n in 4..=200u32 {
            let gamma = gamma_formula(m, n).unwrap().gamma;
            let lower = sn_lower_bound(m, n);
            let (_, upper) = fujie_bounds(m, n).unwrap();
            assert!(
                lower <= gamma && gamma <= upper,
                "bound sandwich broken at {m}x{n}: {lower} <= {gamma} <= {upper}"
            );
            assert_eq!(
                gamma,
                gamma_formula(n, m).unwrap().gamma,
                "symmetry broken at {m}x{n}"
            );
        }
    }
    report(4, true, "lower <= formula <= upper and formula(m,n) == formula(n,m) on all 4..=200 grids");
}

/// Runs the routine on one normalized minimum set and re-validates every
/// step from the records alone.
fn audited_run(d0: &VertexSet) -> RoutineOutcome {
    let out = run_routine(d0).expect("routine must terminate on a minimum set");
    let mut current = d0.clone();
    for rec in &out.steps {
        let next = apply_record(&current, rec).expect("records replay cleanly");
        for check in audit_step(&current, &next, rec).expect("step audit computes") {
            assert!(
                check.pass,
                "step audit {} failed at {} -> {}: {}",
                check.name, rec.frame_before, rec.frame_after, check.detail
            );
        }
        current = next;
    }
    assert_eq!(current, out.final_set, "replayed records disagree with the final set");
    let final_report = audit_final(&out.final_set, &out.steps).expect("final audit computes");
    assert!(
        final_report.all_pass(),
        "final audit failed: {:?}",
        final_report.checks
    );
    out
}

fn battery_instances() -> Vec<(u32, u32)> {
    vec![(4, 4), (4, 5), (4, 6), (5, 5)]
}

#[test]
fn criterion_5_routine_battery() {
    let mut runs = 0usize;
    let mut steps = 0usize;
    for (m, n) in battery_instances() {
        let enumeration = enumerate_mcds(m, n, 200).unwrap();
        assert_eq!(
            enumeration.gamma,
            gamma_formula(m, n).unwrap().gamma,
            "enumerated size mismatch at {m}x{n}"
        );
        for set in &enumeration.sets {
            let d0 = normalize_origin(set).unwrap();
            let out = audited_run(&d0);
            runs += 1;
            steps += out.steps.len();
        }
    }
    report(
        5,
        true,
        &format!("{runs} minimum sets regularized; {steps} steps re-validated from their records"),
    );
}

#[test]
fn criterion_6_four_by_four_determinism() {
    let enumeration = enumerate_mcds(4, 4, 200).unwrap();
    assert!(
        !enumeration.truncated,
        "4x4 enumeration hit the cap; determinism check would be partial"
    );
    use CaseLabel::*;
    let expected = vec![C1, C1, C1, C31, C2, C34];
    for set in &enumeration.sets {
        let d0 = normalize_origin(set).unwrap();
        let out = run_routine(&d0).unwrap();
        let labels: Vec<CaseLabel> = out.steps.iter().map(|s| s.case_label).collect();
        assert_eq!(labels, expected, "trace mismatch for {d0}");
        let final_report = audit_final(&out.final_set, &out.steps).unwrap();
        assert_eq!(
            (final_report.d, final_report.c, final_report.r_bar, final_report.a),
            (5, 1, 1, 1),
            "final counts mismatch for {d0}"
        );
    }
    report(
        6,
        true,
        &format!(
            "all {} minimum 4x4 sets follow [C1, C1, C1, C31, C2, C34] with d=5, c=1, r_bar=1, a=1",
            enumeration.sets.len()
        ),
    );
}

#[test]
fn criterion_7_mobile_soundness() {
    let mut states: Vec<(VertexSet, RegularityFrame)> = Vec::new();
    for (m, n) in battery_instances() {
        let enumeration = enumerate_mcds(m, n, 200).unwrap();
        for set in &enumeration.sets {
            let d0 = normalize_origin(set).unwrap();
            let out = run_routine(&d0).unwrap();
            let mut current = d0.clone();
            states.push((current.clone(), RegularityFrame::new(0, 2, 1, 2)));
            for rec in &out.steps {
                current = apply_record(&current, rec).unwrap();
                states.push((current.clone(), rec.frame_after));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut sampled = 0usize;
    let mut mobiles_checked = 0usize;
    for _ in 0..1000 {
        let (d, frame) = &states[rng.gen_range(0..states.len())];
        for v in find_mobiles(d, frame).unwrap().iter() {
            let mut smaller = d.clone();
            smaller.remove(v);
            assert!(
                smaller.is_dominating(),
                "removing mobile {v} from {d} at {frame} breaks domination"
            );
            mobiles_checked += 1;
        }
        sampled += 1;
    }
    report(
        7,
        sampled == 1000,
        &format!("1000 sampled states ({} distinct) with {mobiles_checked} mobile removals all kept domination", states.len()),
    );
}
