//! Acceptance suite: one test per criterion, each pinned to its stated
//! tolerance and printing a pass line (visible with `--nocapture`).
//!
//! Sampling is seeded and fixed: 100 chart points per dimension with momenta
//! in [0.2, 5], dimensions 1..=3.

use tps_core::chart::ChartPoint;
use tps_core::connection::{
    canonical_closed_form, canonical_connection, canonical_connection_at, canonical_table,
    levi_civita_at, levi_civita_closed_form, Connection, ConnectionSource,
};
use tps_core::curvature::{eta_einstein_fit, ricci_at, riemann_at, scalar_curvature_at};
use tps_core::frames::{FrameField, FrameKind};
use tps_core::geometry::{
    contact_form_at, d_eta_at, eta_applied, lie_bracket_at, metric_at, phi_closed_form_at,
    phi_coordinate_closed_form, reeb_at,
};
use tps_core::invariants::{
    killing_report, lie_metric_residual_with, normality_report, normality_report_with_phi,
    parallelism_residuals,
};
use tps_core::linalg::Mat;
use tps_core::numerics::{matrix_signature, sample_chart_points, SampleRanges, StepScheme};
use tps_core::statmech::{by_name, BUILT_IN_MODELS};

const DIMS: [usize; 3] = [1, 2, 3];
const POINTS: usize = 100;
const SEED: u64 = 42;

fn points(n: usize) -> Vec<ChartPoint<f64>> {
    sample_chart_points(n, POINTS, SEED, &SampleRanges::default()).unwrap()
}

fn scheme() -> StepScheme<f64> {
    StepScheme::default()
}

#[test]
fn criterion_01_canonical_connection_is_flat() {
    let mut worst = 0.0f64;
    for n in DIMS {
        let conn = canonical_table::<f64>(n);
        for x in points(n) {
            worst = worst.max(riemann_at(&conn, &x, &scheme()).unwrap().max_abs());
        }
    }
    assert!(worst < 1e-6, "flatness residual {worst}");
    println!("criterion 01 (canonical flatness): PASS, max |R~| = {worst:.3e} < 1e-6");
}

#[test]
fn criterion_02_eta_einstein_constants() {
    let mut worst_fit = 0.0f64;
    let mut worst_pattern = 0.0f64;
    for n in DIMS {
        let conn = tps_core::connection::levi_civita_table::<f64>(n);
        let expected_lambda = -(2.0 * n as f64 + 2.0);
        for x in points(n) {
            let fit = eta_einstein_fit(&conn, &x, &scheme()).unwrap();
            worst_fit = worst_fit
                .max(fit.residual)
                .max((fit.lambda - expected_lambda).abs())
                .max((fit.nu - 2.0).abs());
            let ricci = ricci_at(&conn, &x, &scheme()).unwrap();
            worst_pattern =
                worst_pattern.max(tps_core::curvature::ricci_pattern_residual(&ricci, &x));
        }
    }
    assert!(worst_fit < 1e-6, "fit residual {worst_fit}");
    assert!(worst_pattern < 1e-6, "pattern residual {worst_pattern}");
    println!(
        "criterion 02 (eta-Einstein constants): PASS, fit residual {worst_fit:.3e}, \
         Ricci pattern residual {worst_pattern:.3e} < 1e-6"
    );
}

#[test]
fn criterion_03_scalar_curvature_is_constant_2n() {
    for n in DIMS {
        let conn = tps_core::connection::levi_civita_table::<f64>(n);
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        let mut worst = 0.0f64;
        for x in points(n) {
            let s = scalar_curvature_at(&conn, &x, &scheme()).unwrap();
            lo = lo.min(s);
            hi = hi.max(s);
            worst = worst.max((s - 2.0 * n as f64).abs());
        }
        assert!(worst < 1e-6, "n = {n}: scalar deviates by {worst}");
        assert!(hi - lo < 1e-6, "n = {n}: spread {}", hi - lo);
    }
    println!("criterion 03 (constant scalar curvature 2n): PASS, spread < 1e-6");
}

#[test]
fn criterion_04_golden_connection_tables() {
    let mut worst = 0.0f64;
    for n in DIMS {
        let frame = FrameField::new(FrameKind::Canonical, n);
        for x in points(n) {
            let koszul = levi_civita_at(&x, &frame, &scheme()).unwrap();
            worst = worst.max(koszul.max_abs_diff(&levi_civita_closed_form(&x).unwrap()));
            let derived = canonical_connection_at(&x, &frame, &scheme()).unwrap();
            worst = worst.max(derived.max_abs_diff(&canonical_closed_form(&x).unwrap()));
        }
    }
    assert!(worst < 1e-8, "table defect {worst}");
    println!("criterion 04 (golden connection tables): PASS, max defect {worst:.3e} < 1e-8");
}

#[test]
fn criterion_05_para_contact_axioms() {
    let mut worst = 0.0f64;
    for n in DIMS {
        let frame = FrameField::new(FrameKind::Canonical, n);
        let heis = FrameField::new(FrameKind::Heisenberg, n);
        let dim = 2 * n + 1;
        let mut sign = 0.0f64;
        for x in points(n) {
            // square identity
            let phi = phi_closed_form_at(&x, &frame).unwrap().as_mat();
            let mut entries = vec![0.0];
            entries.extend(vec![1.0; 2 * n]);
            worst = worst.max(phi.mul(&phi).max_abs_diff(&Mat::diagonal(&entries)));

            // compatibility
            let g = metric_at(&x, &frame).unwrap().as_mat();
            let e = frame.matrix_at(&x).unwrap();
            let eta: Vec<f64> = (0..dim).map(|i| eta_applied(&x, &e.column(i))).collect();
            for i in 0..dim {
                for j in 0..dim {
                    let g_phiphi: f64 = (0..dim)
                        .map(|a| {
                            phi[(a, i)] * (0..dim).map(|b| g[(a, b)] * phi[(b, j)]).sum::<f64>()
                        })
                        .sum();
                    worst = worst.max((g_phiphi + g[(i, j)] - eta[i] * eta[j]).abs());
                }
            }

            // association with a single global sign
            let d = d_eta_at(&x, &frame, &scheme()).unwrap().as_mat();
            let g_phi = g.mul(&phi);
            if sign == 0.0 {
                sign = if g_phi.frobenius_dot(&d) >= 0.0 {
                    1.0
                } else {
                    -1.0
                };
            }
            worst = worst.max(g_phi.max_abs_diff(&d.scale(0.5 * sign)));

            // Heisenberg commutation relations, all three families
            let xi = reeb_at(&x);
            for a in 0..n {
                for b in 0..n {
                    let bracket = lie_bracket_at(
                        &heis.vector_field(1 + n + a),
                        &heis.vector_field(1 + b),
                        &x,
                        &scheme(),
                    )
                    .unwrap();
                    let delta = if a == b { 1.0 } else { 0.0 };
                    for mu in 0..dim {
                        worst = worst.max((bracket[mu] - delta * xi[mu]).abs());
                    }
                }
            }
            for i in 1..dim {
                let bracket =
                    lie_bracket_at(&heis.vector_field(0), &heis.vector_field(i), &x, &scheme())
                        .unwrap();
                for component in bracket {
                    worst = worst.max(component.abs());
                }
            }

            // signature in every frame
            for kind in [
                FrameKind::Coordinate,
                FrameKind::Heisenberg,
                FrameKind::Canonical,
            ] {
                let gk = metric_at(&x, &FrameField::new(kind, n)).unwrap().as_mat();
                let s = matrix_signature(&gk, 1e-9).unwrap();
                assert_eq!(
                    (s.n_pos, s.n_neg, s.n_zero),
                    (n + 1, n, 0),
                    "signature at n = {n}"
                );
            }
        }
        assert_eq!(sign, 1.0, "association sign at n = {n}");
    }
    assert!(worst < 1e-7, "axiom residual {worst}");
    println!("criterion 05 (para-contact axioms): PASS, max residual {worst:.3e} < 1e-7");
}

#[test]
fn criterion_06_normality() {
    let mut worst = 0.0f64;
    let mut worst_horizontal = 0.0f64;
    for n in DIMS {
        for x in points(n) {
            let report = normality_report(&x, &scheme()).unwrap();
            worst = worst.max(report.max_residual);
            worst_horizontal = worst_horizontal.max(report.horizontal_residual);
        }
    }
    assert!(worst < 1e-7, "normality residual {worst}");
    assert!(
        worst_horizontal < 1e-8,
        "horizontal residual {worst_horizontal}"
    );
    println!(
        "criterion 06 (normality N = d eta (x) xi): PASS, residual {worst:.3e} < 1e-7, \
         horizontal {worst_horizontal:.3e} < 1e-8"
    );
}

#[test]
fn criterion_07_parallelism_and_torsion() {
    let mut worst_parallel = 0.0f64;
    let mut worst_torsion = 0.0f64;
    let mut worst_reeb_torsion = 0.0f64;
    for n in DIMS {
        let frame = FrameField::new(FrameKind::Canonical, n);
        let conn = canonical_connection(frame, scheme());
        let dim = 2 * n + 1;
        for x in points(n) {
            worst_parallel =
                worst_parallel.max(parallelism_residuals(&conn, &x, &scheme()).unwrap().worst());

            let torsion = tps_core::connection::torsion_at(&conn, &x, &scheme()).unwrap();
            let d = d_eta_at(&x, &frame, &scheme()).unwrap().as_mat();
            let e_inv = frame.matrix_at(&x).unwrap().inverse().unwrap();
            let xi_frame = e_inv.mul_vec(&reeb_at(&x));
            for i in 0..dim {
                for j in 0..dim {
                    for k in 0..dim {
                        let expected = d[(i, j)] * xi_frame[k];
                        worst_torsion = worst_torsion.max((torsion.get(k, i, j) - expected).abs());
                    }
                }
            }

            // Reeb-direction torsion from the closed-form route is exact
            let symbols = canonical_closed_form(&x).unwrap();
            let gamma = frame.structure_closed_form(&x).unwrap();
            for k in 0..dim {
                for j in 0..dim {
                    let t = symbols.get(k, j, 0) - symbols.get(k, 0, j) - gamma.get(k, 0, j);
                    worst_reeb_torsion = worst_reeb_torsion.max(t.abs());
                }
            }
        }
    }
    assert!(
        worst_parallel < 1e-6,
        "parallelism residual {worst_parallel}"
    );
    assert!(worst_torsion < 1e-7, "torsion residual {worst_torsion}");
    assert_eq!(worst_reeb_torsion, 0.0, "T~(xi, .) must vanish exactly");
    println!(
        "criterion 07 (adapted parallelism and torsion): PASS, nabla~ residual \
         {worst_parallel:.3e} < 1e-6, torsion law {worst_torsion:.3e} < 1e-7, T~(xi, .) = 0"
    );
}

#[test]
fn criterion_08_statistical_layer() {
    let mut worst_gradient = 0.0f64;
    let mut worst_hessian = 0.0f64;
    let mut worst_kl = 0.0f64;
    for name in BUILT_IN_MODELS {
        let model = by_name::<f64>(name).unwrap();
        let grid = model.q_grid(21);
        assert_eq!(grid.len(), 21, "{name} grid size");
        let q0 = &grid[0];
        for q in &grid {
            let p = model.mean_observables(q).unwrap();
            let grad = model.log_partition_gradient_fd(q).unwrap();
            for a in 0..p.len() {
                worst_gradient = worst_gradient.max((p[a] - grad[a]).abs());
            }
            let c = model.covariance_matrix(q).unwrap();
            let h = model.log_partition_hessian_fd(q).unwrap();
            worst_hessian = worst_hessian.max(c.max_abs_diff(&h));

            let integral = model.relative_entropy(q0, q).unwrap();
            let bregman = model.relative_entropy_bregman(q0, q).unwrap();
            worst_kl = worst_kl.max((integral - bregman).abs());
        }
    }
    assert!(
        worst_gradient < 1e-6,
        "gradient identity residual {worst_gradient}"
    );
    assert!(
        worst_hessian < 1e-6,
        "hessian identity residual {worst_hessian}"
    );
    assert!(worst_kl < 1e-8, "divergence route disagreement {worst_kl}");

    // quadratic-remainder order at q0 = 0.3 for displacements 0.1, 0.05, 0.025
    let model = by_name::<f64>("two_level").unwrap();
    let residual = |d: f64| {
        model
            .kl_quadratic_residual(&[0.3], &[d])
            .unwrap()
            .residual
            .abs()
    };
    let (r1, r2, r3) = (residual(0.1), residual(0.05), residual(0.025));
    for order in [(r1 / r2).log2(), (r2 / r3).log2()] {
        assert!((order - 3.0).abs() <= 0.3, "observed order {order}");
    }

    // spot values
    let w0 = model.log_partition(&[0.0]).unwrap();
    assert!((w0 - std::f64::consts::LN_2).abs() < 1e-9, "w(0) = {w0}");
    let kl = model.relative_entropy(&[0.0], &[0.1]).unwrap();
    assert!(
        (kl - 0.1f64.cosh().ln()).abs() < 1e-9,
        "KL(0 -> 0.1) = {kl}"
    );

    println!(
        "criterion 08 (statistical layer): PASS, gradient {worst_gradient:.3e}, hessian \
         {worst_hessian:.3e} < 1e-6, divergence routes {worst_kl:.3e} < 1e-8, \
         remainder order 3.0(3), spot values < 1e-9"
    );
}

#[test]
fn criterion_09_pullback_chain() {
    let mut worst_control = 0.0f64;
    let mut worst_induced = 0.0f64;
    let mut worst_ds = 0.0f64;
    let mut worst_first_law = 0.0f64;
    for name in BUILT_IN_MODELS {
        let model = by_name::<f64>(name).unwrap();
        for q in model.q_grid(21) {
            let block = model.fisher_rao_control_metric(&q).unwrap();
            let pullback = model.fisher_rao_pullback(&q).unwrap();
            worst_control = worst_control.max(block.max_abs_diff(&pullback));

            let induced = model.induced_metric(&q).unwrap();
            let cov = model.covariance_matrix(&q).unwrap();
            worst_induced = worst_induced.max(induced.components.max_abs_diff(&cov));

            let moments = model.entropy_differential(&q).unwrap();
            let pulled = model.pullback_eta_control(&q).unwrap();
            for (a, &component) in pulled.iter().enumerate() {
                worst_ds = worst_ds.max((component - moments.first[a]).abs());
            }

            for r in model.pullback_eta_legendre(&q).unwrap() {
                worst_first_law = worst_first_law.max(r.abs());
            }
        }
    }
    assert!(
        worst_control < 1e-8,
        "control pullback defect {worst_control}"
    );
    assert!(
        worst_induced < 1e-8,
        "induced pullback defect {worst_induced}"
    );
    assert_eq!(worst_ds, 0.0, "<ds> must equal the pullback of eta exactly");
    assert!(
        worst_first_law < 1e-7,
        "first-law residual {worst_first_law}"
    );
    println!(
        "criterion 09 (pullback chain): PASS, control {worst_control:.3e}, induced \
         {worst_induced:.3e} < 1e-8, <ds> pullback exact, first law {worst_first_law:.3e} < 1e-7"
    );
}

#[test]
fn criterion_10_hyperbolic_heisenberg_group() {
    for n in DIMS {
        let res = tps_core::heisenberg::structure_residuals(n, POINTS, SEED).unwrap();
        assert!(
            res.group_axioms < 1e-12,
            "n = {n}: group axioms {}",
            res.group_axioms
        );
        assert!(
            res.left_invariance < 1e-9,
            "n = {n}: left invariance {}",
            res.left_invariance
        );
        assert!(res.nijenhuis < 1e-8, "n = {n}: Nijenhuis {}", res.nijenhuis);
        assert!(
            res.nijenhuis_horizontal < 1e-8,
            "n = {n}: horizontal Nijenhuis {}",
            res.nijenhuis_horizontal
        );
        assert!(
            res.canonical_flatness < 1e-8,
            "n = {n}: canonical curvature {}",
            res.canonical_flatness
        );
    }
    println!(
        "criterion 10 (hyperbolic Heisenberg group): PASS, axioms < 1e-12 on 1000 triples, \
         left-invariance < 1e-9, integrability + flat adapted connection < 1e-8"
    );
}

#[test]
fn full_suite_run_passes_at_moderate_sampling() {
    let config = tps_core::report::SuiteConfig {
        n_values: vec![1, 2],
        points: 50,
        seed: 7,
        ..tps_core::report::SuiteConfig::default()
    };
    let report = tps_core::suites::run_suite(&config).unwrap();
    let failed: Vec<_> = report.checks.iter().filter(|c| !c.pass).collect();
    assert!(failed.is_empty(), "failed checks: {failed:#?}");
    println!(
        "full suite at n = 1,2 / 50 points / seed 7: PASS, {} checks in {:.2}s",
        report.summary.total, report.duration_seconds
    );
}

#[test]
fn criterion_11_negative_controls_have_detection_power() {
    let x = ChartPoint::new(0.2, vec![0.4], vec![1.3]).unwrap();

    // contact form perturbed on a kernel direction: eta(Q_b) = 0 fails
    let perturbed_eta = {
        let mut eta = contact_form_at(&x);
        eta[1] += 1e-3;
        eta
    };
    let heis = FrameField::new(FrameKind::Heisenberg, 1);
    let q_column = heis.matrix_at(&x).unwrap().column(1);
    let eta_defect: f64 = perturbed_eta
        .iter()
        .zip(&q_column)
        .map(|(&a, &b)| a * b)
        .sum();
    assert!(eta_defect.abs() >= 1e-4, "eta perturbation undetected");

    // Reeb field perturbed: eta(xi) = 1 fails
    let mut xi = reeb_at(&x);
    xi[1] += 1e-3;
    assert!(
        (eta_applied(&x, &xi) - 1.0).abs() >= 1e-4,
        "xi perturbation undetected"
    );

    // Phi perturbed on the momentum diagonal: normality fails its 1e-7 bar
    let report = normality_report_with_phi(
        |pt: &ChartPoint<f64>| {
            let mut phi = phi_coordinate_closed_form(pt);
            phi[(2, 2)] += 1e-3;
            Ok(phi)
        },
        &x,
        &scheme(),
    )
    .unwrap();
    assert!(report.max_residual >= 1e-4, "Phi perturbation undetected");

    // metric with an artificial Reeb dependence: the Killing check fails
    let lie_residual = lie_metric_residual_with(
        &|pt: &ChartPoint<f64>| {
            let mut g = tps_core::geometry::coordinate_metric_at(pt);
            g[(1, 1)] += 1e-3 * pt.w;
            Ok(g)
        },
        &x,
        &scheme(),
    )
    .unwrap();
    assert!(lie_residual >= 1e-4, "metric perturbation undetected");

    // adapted connection with one bumped symbol: flatness fails its 1e-6 bar
    let frame = FrameField::new(FrameKind::Canonical, 1);
    let bumped = Connection::from_fn(frame, ConnectionSource::ClosedFormCanonical, |pt| {
        let mut symbols = canonical_closed_form(pt)?;
        symbols.set(1, 2, 1, symbols.get(1, 2, 1) + 1e-3);
        Ok(symbols)
    });
    let riemann = riemann_at(&bumped, &x, &scheme()).unwrap();
    assert!(
        riemann.max_abs() >= 1e-4,
        "connection perturbation undetected"
    );

    // the genuine structures stay within tolerance under the same checks
    let clean = normality_report(&x, &scheme()).unwrap();
    assert!(clean.max_residual < 1e-7);
    let killing = killing_report(&x, &scheme()).unwrap();
    assert!(killing.lie_metric < 1e-7);

    println!(
        "criterion 11 (negative controls): PASS, every 1e-3 structure perturbation trips \
         at least one check at >= 1e-4"
    );
}
