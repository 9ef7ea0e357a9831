//! The verification suites: every structural identity of the geometry, the
//! statistical layer, and the group model, run over seeded samples and
//! aggregated into a [`Report`].
//!
//! Check evaluation is pure, so checks are dispatched to a worker pool; the
//! result order is the deterministic construction order regardless of the
//! pool size.

use std::time::Instant;

use rayon::prelude::*;

use crate::chart::ChartPoint;
use crate::connection::{
    canonical_closed_form, canonical_connection_at, canonical_table, levi_civita_at,
    levi_civita_closed_form, levi_civita_table, phi_at, torsion_at,
};
use crate::curvature::{
    antisymmetry_residual, eta_einstein_fit, first_bianchi_residual, ricci_at,
    ricci_pattern_residual, riemann_at, scalar_curvature_at,
};
use crate::error::{Error, Result};
use crate::frames::{CoframeField, CoframeKind, FrameField, FrameKind};
use crate::geometry::{
    d_eta_at, d_eta_coordinate_closed_form, eta_applied, metric_at, phi_closed_form_at, reeb_at,
    structure_functions_at, volume_coefficient_at,
};
use crate::invariants::{killing_report, normality_report, parallelism_residuals};
use crate::linalg::Mat;
use crate::numerics::{matrix_signature, sample_chart_points, SampleRanges, StepScheme};
use crate::report::{CheckResult, Report, SuiteConfig, SuiteSelection};
use crate::statmech::by_name;

/// Number of multiplier-grid nodes per model in the statistics suite.
pub const MODEL_GRID_POINTS: usize = 21;

type EvalFn = Box<dyn Fn() -> Result<CheckValue> + Send + Sync>;

struct CheckSpec {
    id: String,
    identity: String,
    n: Option<usize>,
    points: usize,
    tolerance: f64,
    eval: EvalFn,
}

struct CheckValue {
    residual: f64,
    constants: Vec<(&'static str, f64)>,
}

impl CheckValue {
    fn plain(residual: f64) -> Self {
        CheckValue {
            residual,
            constants: Vec::new(),
        }
    }
}

fn spec(
    id: String,
    identity: &str,
    n: Option<usize>,
    points: usize,
    tolerance: f64,
    eval: impl Fn() -> Result<CheckValue> + Send + Sync + 'static,
) -> CheckSpec {
    CheckSpec {
        id,
        identity: identity.to_string(),
        n,
        points,
        tolerance,
        eval: Box::new(eval),
    }
}

fn run_check(check: &CheckSpec) -> CheckResult {
    match (check.eval)() {
        Ok(value) => {
            let mut result = CheckResult::new(
                check.id.clone(),
                check.identity.clone(),
                check.n,
                check.points,
                value.residual,
                check.tolerance,
            );
            for (key, v) in value.constants {
                result = result.with_constant(key, v);
            }
            result
        }
        // evaluation failures are recorded as failed checks, never thrown
        Err(_) => CheckResult::new(
            check.id.clone(),
            check.identity.clone(),
            check.n,
            check.points,
            f64::INFINITY,
            check.tolerance,
        ),
    }
}

fn samples(n: usize, config: &SuiteConfig) -> Result<Vec<ChartPoint<f64>>> {
    sample_chart_points(n, config.points, config.seed, &SampleRanges::default())
}

fn fold_points(
    n: usize,
    config: &SuiteConfig,
    f: impl Fn(&ChartPoint<f64>) -> Result<f64>,
) -> Result<f64> {
    let mut worst = 0.0f64;
    for x in samples(n, config)? {
        worst = worst.max(f(&x)?);
    }
    Ok(worst)
}

/// Runs the configured suites and aggregates a deterministic report.
pub fn run_suite(config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let start = Instant::now();

    let mut specs: Vec<CheckSpec> = Vec::new();
    if config.suite.includes(SuiteSelection::Geometry) {
        for &n in &config.n_values {
            geometry_checks(&mut specs, n, config);
        }
    }
    if config.suite.includes(SuiteSelection::Connections) {
        for &n in &config.n_values {
            connection_checks(&mut specs, n, config);
        }
    }
    if config.suite.includes(SuiteSelection::Statmech) {
        for name in &config.models {
            statmech_checks(&mut specs, name.clone(), config);
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Config(format!("cannot build worker pool: {e}")))?;
    let mut checks: Vec<CheckResult> = pool.install(|| specs.par_iter().map(run_check).collect());

    if config.suite.includes(SuiteSelection::Heisenberg) {
        let fragments: Vec<Vec<CheckResult>> = pool.install(|| {
            config
                .n_values
                .par_iter()
                .map(|&n| {
                    crate::heisenberg::structure_checks(
                        n,
                        config.points,
                        config.seed,
                        config.tol_closed,
                        config.tol_fd,
                    )
                    .unwrap_or_else(|_| {
                        vec![CheckResult::new(
                            format!("heisenberg.evaluation.n{n}"),
                            "group structure checks evaluate",
                            Some(n),
                            config.points,
                            f64::INFINITY,
                            0.0,
                        )]
                    })
                })
                .collect()
        });
        checks.extend(fragments.into_iter().flatten());
    }

    Ok(Report::new(
        config.clone(),
        checks,
        start.elapsed().as_secs_f64(),
    ))
}

fn geometry_checks(specs: &mut Vec<CheckSpec>, n: usize, config: &SuiteConfig) {
    let scheme = StepScheme::<f64>::default();
    let points = config.points;
    let (tol_c, tol_f) = (config.tol_closed, config.tol_fd);
    let id = |stem: &str| format!("geometry.{stem}.n{n}");
    let canonical = FrameField::new(FrameKind::Canonical, n);
    let dim = 2 * n + 1;

    let cfg = config.clone();
    specs.push(spec(
        id("contact_on_frames"),
        "eta(xi) = 1, eta(Q_b) = eta(P^b) = 0",
        Some(n),
        points,
        tol_c,
        move || {
            let heis = FrameField::new(FrameKind::Heisenberg, n);
            fold_points(n, &cfg, |x| {
                let mut worst = (eta_applied(x, &reeb_at(x)) - 1.0).abs();
                let e = heis.matrix_at(x)?;
                for i in 1..dim {
                    worst = worst.max(eta_applied(x, &e.column(i)).abs());
                }
                Ok(worst)
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("reeb_in_d_eta"),
        "d eta(xi, X) = 0",
        Some(n),
        points,
        tol_f,
        move || {
            fold_points(n, &cfg, |x| {
                let d = d_eta_at(x, &canonical, &scheme)?.as_mat();
                Ok((0..dim).map(|j| d[(0, j)].abs()).fold(0.0, f64::max))
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("volume_form"),
        "eta ^ (d eta)^n = n! dw^dq^dp",
        Some(n),
        points,
        tol_c,
        move || {
            let factorial: f64 = (1..=n).product::<usize>() as f64;
            fold_points(
                n,
                &cfg,
                |x| Ok((volume_coefficient_at(x) - factorial).abs()),
            )
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("frame_duality"),
        "theta^(i)(e_(j)) = delta^i_j",
        Some(n),
        points,
        tol_c,
        move || {
            let coframe = CoframeField::new(CoframeKind::Orthonormal, n);
            fold_points(n, &cfg, |x| {
                let product = coframe.matrix_at(x)?.mul(&canonical.matrix_at(x)?);
                Ok(product.max_abs_diff(&Mat::identity(dim)))
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("frame_invertibility"),
        "|det E| > 1e-12 on the admissible domain",
        Some(n),
        points,
        0.0,
        move || {
            let mut bad = 0usize;
            for x in samples(n, &cfg)? {
                for kind in [
                    FrameKind::Coordinate,
                    FrameKind::Heisenberg,
                    FrameKind::Canonical,
                ] {
                    if FrameField::new(kind, n).matrix_at(&x).is_err() {
                        bad += 1;
                    }
                }
            }
            Ok(CheckValue::plain(bad as f64))
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("metric_signature"),
        "signature(G) = (n+1, n, 0) in every frame",
        Some(n),
        points,
        0.0,
        move || {
            let mut mismatches = 0usize;
            for x in samples(n, &cfg)? {
                for kind in [
                    FrameKind::Coordinate,
                    FrameKind::Heisenberg,
                    FrameKind::Canonical,
                ] {
                    let g = metric_at(&x, &FrameField::new(kind, n))?.as_mat();
                    let s = matrix_signature(&g, 1e-9)?;
                    if s.n_pos != n + 1 || s.n_neg != n || s.n_zero != 0 {
                        mismatches += 1;
                    }
                }
            }
            Ok(CheckValue::plain(mismatches as f64))
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("metric_canonical_diagonal"),
        "G = diag(1, I_n, -I_n) in the canonical frame",
        Some(n),
        points,
        tol_c,
        move || {
            let mut entries = vec![1.0];
            entries.extend(vec![1.0; n]);
            entries.extend(vec![-1.0; n]);
            let expected = Mat::diagonal(&entries);
            fold_points(n, &cfg, |x| {
                Ok(metric_at(x, &canonical)?.as_mat().max_abs_diff(&expected))
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("metric_null_generators"),
        "G(Q_a, Q_a) = G(P^a, P^a) = 0, G(Q_a, P^a) = 1/2",
        Some(n),
        points,
        tol_c,
        move || {
            let heis = FrameField::new(FrameKind::Heisenberg, n);
            fold_points(n, &cfg, |x| {
                let g = metric_at(x, &heis)?.as_mat();
                let mut worst = 0.0f64;
                for a in 0..n {
                    worst = worst.max(g[(1 + a, 1 + a)].abs());
                    worst = worst.max(g[(1 + n + a, 1 + n + a)].abs());
                    worst = worst.max((g[(1 + a, 1 + n + a)] - 0.5).abs());
                }
                Ok(worst)
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("heisenberg_brackets"),
        "[P^a, Q_b] = delta^a_b xi, [xi, Q_a] = [xi, P^a] = 0",
        Some(n),
        points,
        tol_f,
        move || {
            let heis = FrameField::new(FrameKind::Heisenberg, n);
            fold_points(n, &cfg, |x| {
                let mut worst = 0.0f64;
                let xi = reeb_at(x);
                for a in 0..n {
                    for b in 0..n {
                        let bracket = crate::geometry::lie_bracket_at(
                            &heis.vector_field(1 + n + a),
                            &heis.vector_field(1 + b),
                            x,
                            &scheme,
                        )?;
                        let delta = if a == b { 1.0 } else { 0.0 };
                        for mu in 0..dim {
                            worst = worst.max((bracket[mu] - delta * xi[mu]).abs());
                        }
                    }
                }
                for i in 1..dim {
                    let bracket = crate::geometry::lie_bracket_at(
                        &heis.vector_field(0),
                        &heis.vector_field(i),
                        x,
                        &scheme,
                    )?;
                    for c in bracket {
                        worst = worst.max(c.abs());
                    }
                }
                Ok(worst)
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("structure_functions"),
        "[e_i, e_j] = gamma^k_{ij} e_k matches the closed form",
        Some(n),
        points,
        tol_f,
        move || {
            fold_points(n, &cfg, |x| {
                let numeric = structure_functions_at(&canonical, x, &scheme)?;
                let closed = canonical.structure_closed_form(x)?;
                Ok(numeric.max_abs_diff(&closed))
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("phi_square"),
        "Phi^2 = I - eta (x) xi",
        Some(n),
        points,
        tol_f,
        move || {
            let mut entries = vec![0.0];
            entries.extend(vec![1.0; 2 * n]);
            let projector = Mat::diagonal(&entries);
            fold_points(n, &cfg, |x| {
                let phi = phi_at(x, &canonical, &scheme)?.as_mat();
                Ok(phi.mul(&phi).max_abs_diff(&projector))
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("phi_golden"),
        "Phi from -nabla xi matches its closed form",
        Some(n),
        points,
        tol_f,
        move || {
            fold_points(n, &cfg, |x| {
                let mut worst = 0.0f64;
                for kind in [FrameKind::Coordinate, FrameKind::Canonical] {
                    let frame = FrameField::new(kind, n);
                    let koszul = phi_at(x, &frame, &scheme)?.as_mat();
                    let closed = phi_closed_form_at(x, &frame)?.as_mat();
                    worst = worst.max(koszul.max_abs_diff(&closed));
                }
                Ok(worst)
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("phi_action"),
        "Phi xi = 0, Phi e+_a = -e-_a, Phi e-_a = -e+_a",
        Some(n),
        points,
        tol_c,
        move || {
            let mut expected = Mat::<f64>::zeros(dim, dim);
            for a in 0..n {
                expected[(1 + n + a, 1 + a)] = -1.0;
                expected[(1 + a, 1 + n + a)] = -1.0;
            }
            fold_points(n, &cfg, |x| {
                Ok(phi_closed_form_at(x, &canonical)?
                    .as_mat()
                    .max_abs_diff(&expected))
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("compatibility"),
        "G(Phi X, Phi Y) = -G(X, Y) + eta(X) eta(Y)",
        Some(n),
        points,
        tol_c,
        move || {
            fold_points(n, &cfg, |x| {
                let g = metric_at(x, &canonical)?.as_mat();
                let phi = phi_closed_form_at(x, &canonical)?.as_mat();
                let e = canonical.matrix_at(x)?;
                let eta: Vec<f64> = (0..dim).map(|i| eta_applied(x, &e.column(i))).collect();
                let mut worst = 0.0f64;
                for i in 0..dim {
                    for j in 0..dim {
                        let phi_i = phi.column(i);
                        let phi_j = phi.column(j);
                        let g_phiphi: f64 = (0..dim)
                            .map(|a| phi_i[a] * (0..dim).map(|b| g[(a, b)] * phi_j[b]).sum::<f64>())
                            .sum();
                        worst = worst.max((g_phiphi + g[(i, j)] - eta[i] * eta[j]).abs());
                    }
                }
                Ok(worst)
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("association"),
        "G(X, Phi Y) = s (1/2) d eta(X, Y), s constant",
        Some(n),
        points,
        tol_f,
        move || {
            let mut sign = 0.0f64;
            let mut worst = 0.0f64;
            for x in samples(n, &cfg)? {
                let g = metric_at(&x, &canonical)?.as_mat();
                let phi = phi_closed_form_at(&x, &canonical)?.as_mat();
                let d = d_eta_at(&x, &canonical, &scheme)?.as_mat();
                let g_phi = g.mul(&phi);
                if sign == 0.0 {
                    let dot = g_phi.frobenius_dot(&d);
                    sign = if dot >= 0.0 { 1.0 } else { -1.0 };
                }
                worst = worst.max(g_phi.max_abs_diff(&d.scale(0.5 * sign)));
            }
            Ok(CheckValue {
                residual: worst,
                constants: vec![("association_sign", sign)],
            })
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("d_eta_components"),
        "d eta(e+_a, e-_a) = -2; d eta(dq^a, dp_a) = 1",
        Some(n),
        points,
        tol_f,
        move || {
            let coordinate = FrameField::new(FrameKind::Coordinate, n);
            fold_points(n, &cfg, |x| {
                let mut worst = 0.0f64;
                let canon = d_eta_at(x, &canonical, &scheme)?.as_mat();
                for a in 0..n {
                    worst = worst.max((canon[(1 + a, 1 + n + a)] + 2.0).abs());
                }
                let coord = d_eta_at(x, &coordinate, &scheme)?.as_mat();
                worst = worst.max(coord.max_abs_diff(&d_eta_coordinate_closed_form(x)));
                Ok(worst)
            })
            .map(CheckValue::plain)
        },
    ));
}

fn connection_checks(specs: &mut Vec<CheckSpec>, n: usize, config: &SuiteConfig) {
    let scheme = StepScheme::<f64>::default();
    let points = config.points;
    let (tol_c, tol_f) = (config.tol_closed, config.tol_fd);
    let id = |stem: &str| format!("connections.{stem}.n{n}");
    let canonical = FrameField::new(FrameKind::Canonical, n);
    let dim = 2 * n + 1;

    let cfg = config.clone();
    specs.push(spec(
        id("levi_civita_table"),
        "Koszul symbols match the closed-form Levi-Civita table",
        Some(n),
        points,
        tol_c,
        move || {
            fold_points(n, &cfg, |x| {
                let koszul = levi_civita_at(x, &canonical, &scheme)?;
                Ok(koszul.max_abs_diff(&levi_civita_closed_form(x)?))
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("canonical_table"),
        "transformed symbols match the closed-form adapted table",
        Some(n),
        points,
        tol_c,
        move || {
            fold_points(n, &cfg, |x| {
                let derived = canonical_connection_at(x, &canonical, &scheme)?;
                Ok(derived.max_abs_diff(&canonical_closed_form(x)?))
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("canonical_reeb_rows"),
        "Gamma~ with any Reeb index vanishes",
        Some(n),
        points,
        tol_c,
        move || {
            fold_points(n, &cfg, |x| {
                let symbols = canonical_connection_at(x, &canonical, &scheme)?;
                let mut worst = 0.0f64;
                for j in 0..dim {
                    for i in 0..dim {
                        worst = worst
                            .max(symbols.get(0, j, i).abs())
                            .max(symbols.get(j, 0, i).abs())
                            .max(symbols.get(j, i, 0).abs());
                    }
                }
                Ok(worst)
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("levi_civita_torsion_free"),
        "T = 0 for the Levi-Civita connection",
        Some(n),
        points,
        tol_f,
        move || {
            let conn = levi_civita_table::<f64>(n);
            fold_points(n, &cfg, |x| Ok(torsion_at(&conn, x, &scheme)?.max_abs()))
                .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("canonical_flatness"),
        "R~ = 0 for the adapted connection",
        Some(n),
        points,
        tol_f,
        move || {
            let conn = canonical_table::<f64>(n);
            fold_points(n, &cfg, |x| Ok(riemann_at(&conn, x, &scheme)?.max_abs()))
                .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("riemann_antisymmetry"),
        "R^i_{jkl} = -R^i_{jlk}",
        Some(n),
        points,
        tol_f,
        move || {
            let conn = levi_civita_table::<f64>(n);
            fold_points(n, &cfg, |x| {
                Ok(antisymmetry_residual(&riemann_at(&conn, x, &scheme)?))
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("first_bianchi"),
        "cyclic sum R^i_{[jkl]} = 0 (torsion-free)",
        Some(n),
        points,
        tol_f,
        move || {
            let conn = levi_civita_table::<f64>(n);
            fold_points(n, &cfg, |x| {
                Ok(first_bianchi_residual(&riemann_at(&conn, x, &scheme)?))
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("ricci_pattern"),
        "Ric = -2n on (xi, xi), +2/-2 on the split blocks",
        Some(n),
        points,
        tol_f,
        move || {
            let conn = levi_civita_table::<f64>(n);
            fold_points(n, &cfg, |x| {
                Ok(ricci_pattern_residual(&ricci_at(&conn, x, &scheme)?, x))
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("eta_einstein"),
        "Ric = lambda eta (x) eta + nu G with lambda = -(2n+2), nu = 2",
        Some(n),
        points,
        tol_f,
        move || {
            let conn = levi_civita_table::<f64>(n);
            let expected_lambda = -(2.0 * n as f64 + 2.0);
            let mut worst = 0.0f64;
            let mut reported = (0.0, 0.0);
            for (ix, x) in samples(n, &cfg)?.iter().enumerate() {
                let fit = eta_einstein_fit(&conn, x, &scheme)?;
                if ix == 0 {
                    reported = (fit.lambda, fit.nu);
                }
                worst = worst
                    .max(fit.residual)
                    .max((fit.lambda - expected_lambda).abs())
                    .max((fit.nu - 2.0).abs());
            }
            Ok(CheckValue {
                residual: worst,
                constants: vec![("lambda", reported.0), ("nu", reported.1)],
            })
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("scalar_curvature"),
        "scalar curvature = 2n",
        Some(n),
        points,
        tol_f,
        move || {
            let conn = levi_civita_table::<f64>(n);
            fold_points(n, &cfg, |x| {
                Ok((scalar_curvature_at(&conn, x, &scheme)? - 2.0 * n as f64).abs())
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("scalar_spread"),
        "scalar curvature is constant point to point",
        Some(n),
        points,
        tol_f,
        move || {
            let conn = levi_civita_table::<f64>(n);
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for x in samples(n, &cfg)? {
                let s = scalar_curvature_at(&conn, &x, &scheme)?;
                lo = lo.min(s);
                hi = hi.max(s);
            }
            Ok(CheckValue::plain(hi - lo))
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("canonical_torsion"),
        "T~ = d eta (x) xi",
        Some(n),
        points,
        tol_f,
        move || {
            let conn = canonical_table::<f64>(n);
            fold_points(n, &cfg, |x| {
                let torsion = torsion_at(&conn, x, &scheme)?;
                let d = d_eta_at(x, &canonical, &scheme)?.as_mat();
                let e = canonical.matrix_at(x)?;
                let e_inv = e.inverse()?;
                let xi_frame = e_inv.mul_vec(&reeb_at(x));
                let mut worst = 0.0f64;
                for i in 0..dim {
                    for j in 0..dim {
                        for k in 0..dim {
                            let expected = d[(i, j)] * xi_frame[k];
                            worst = worst.max((torsion.get(k, i, j) - expected).abs());
                        }
                    }
                }
                Ok(worst)
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("torsion_reeb_row"),
        "T~(xi, X) = 0 (closed-form route, exact)",
        Some(n),
        points,
        0.0,
        move || {
            fold_points(n, &cfg, |x| {
                let symbols = canonical_closed_form(x)?;
                let gamma = canonical.structure_closed_form(x)?;
                let mut worst = 0.0f64;
                for k in 0..dim {
                    for j in 0..dim {
                        let forward =
                            symbols.get(k, j, 0) - symbols.get(k, 0, j) - gamma.get(k, 0, j);
                        let backward =
                            symbols.get(k, 0, j) - symbols.get(k, j, 0) - gamma.get(k, j, 0);
                        worst = worst.max(forward.abs()).max(backward.abs());
                    }
                }
                Ok(worst)
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("parallelism"),
        "nabla~ {eta, xi, Phi, G} = 0",
        Some(n),
        points,
        tol_f,
        move || {
            let conn = crate::connection::canonical_connection(canonical, scheme);
            fold_points(n, &cfg, |x| {
                Ok(parallelism_residuals(&conn, x, &scheme)?.worst())
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("normality"),
        "N = d eta (x) xi",
        Some(n),
        points,
        tol_f,
        move || {
            fold_points(n, &cfg, |x| Ok(normality_report(x, &scheme)?.max_residual))
                .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("normality_horizontal"),
        "horizontal part of N vanishes",
        Some(n),
        points,
        tol_f,
        move || {
            fold_points(n, &cfg, |x| {
                Ok(normality_report(x, &scheme)?.horizontal_residual)
            })
            .map(CheckValue::plain)
        },
    ));

    let cfg = config.clone();
    specs.push(spec(
        id("reeb_killing"),
        "L_xi G = 0, h = (1/2) L_xi Phi = 0, nabla xi + Phi = 0",
        Some(n),
        points,
        tol_f,
        move || {
            fold_points(n, &cfg, |x| {
                let report = killing_report(x, &scheme)?;
                Ok(report
                    .lie_metric
                    .max(report.h_tensor)
                    .max(report.grad_xi_plus_phi))
            })
            .map(CheckValue::plain)
        },
    ));
}

fn statmech_checks(specs: &mut Vec<CheckSpec>, model_name: String, config: &SuiteConfig) {
    let (tol_c, tol_f) = (config.tol_closed, config.tol_fd);
    let grid_points = MODEL_GRID_POINTS;
    let id = |stem: &str| format!("statmech.{stem}.{model_name}");

    let name = model_name.clone();
    specs.push(spec(
        id("w_routes"),
        "quadrature log-partition matches the closed form",
        None,
        grid_points,
        tol_c,
        move || {
            let model = by_name::<f64>(&name).unwrap();
            let mut worst = 0.0f64;
            for q in model.q_grid(grid_points) {
                let numeric = model.log_partition(&q)?;
                let closed = model
                    .closed_form_w(&q)
                    .ok_or_else(|| Error::Config("missing closed form".into()))?;
                worst = worst.max((numeric - closed).abs());
            }
            Ok(CheckValue::plain(worst))
        },
    ));

    let name = model_name.clone();
    specs.push(spec(
        id("gradient_identity"),
        "p = grad w",
        None,
        grid_points,
        tol_f,
        move || {
            let model = by_name::<f64>(&name).unwrap();
            let mut worst = 0.0f64;
            for q in model.q_grid(grid_points) {
                let p = model.mean_observables(&q)?;
                let grad = model.log_partition_gradient_fd(&q)?;
                for a in 0..p.len() {
                    worst = worst.max((p[a] - grad[a]).abs());
                }
            }
            Ok(CheckValue::plain(worst))
        },
    ));

    let name = model_name.clone();
    specs.push(spec(
        id("hessian_identity"),
        "cov = Hess w",
        None,
        grid_points,
        tol_f,
        move || {
            let model = by_name::<f64>(&name).unwrap();
            let mut worst = 0.0f64;
            for q in model.q_grid(grid_points) {
                let c = model.covariance_matrix(&q)?;
                let h = model.log_partition_hessian_fd(&q)?;
                worst = worst.max(c.max_abs_diff(&h));
            }
            Ok(CheckValue::plain(worst))
        },
    ));

    let name = model_name.clone();
    specs.push(spec(
        id("fisher_rao_pullback"),
        "control metric equals the phase-space pullback",
        None,
        grid_points,
        tol_c,
        move || {
            let model = by_name::<f64>(&name).unwrap();
            let mut worst = 0.0f64;
            for q in model.q_grid(grid_points) {
                let block = model.fisher_rao_control_metric(&q)?;
                let pullback = model.fisher_rao_pullback(&q)?;
                worst = worst.max(block.max_abs_diff(&pullback));
            }
            Ok(CheckValue::plain(worst))
        },
    ));

    let name = model_name.clone();
    specs.push(spec(
        id("mean_ds_pullback"),
        "<ds> equals the pullback of eta, componentwise",
        None,
        grid_points,
        0.0,
        move || {
            let model = by_name::<f64>(&name).unwrap();
            let mut worst = 0.0f64;
            for q in model.q_grid(grid_points) {
                let moments = model.entropy_differential(&q)?;
                let pulled = model.pullback_eta_control(&q)?;
                for (a, &component) in pulled.iter().enumerate() {
                    worst = worst.max((component - moments.first[a]).abs());
                }
            }
            Ok(CheckValue::plain(worst))
        },
    ));

    let name = model_name.clone();
    specs.push(spec(
        id("second_moment_identity"),
        "<(ds)^2> = Var(ds) + <ds> (x) <ds>",
        None,
        grid_points,
        1e-9,
        move || {
            let model = by_name::<f64>(&name).unwrap();
            let n = model.n_params();
            let mut worst = 0.0f64;
            for q in model.q_grid(grid_points) {
                let m = model.entropy_differential(&q)?;
                for i in 0..=n {
                    for j in 0..=n {
                        let centered = if i > 0 && j > 0 {
                            m.variance[(i - 1, j - 1)]
                        } else {
                            0.0
                        };
                        let reconstructed = centered + m.first[i] * m.first[j];
                        worst = worst.max((m.second[(i, j)] - reconstructed).abs());
                    }
                }
            }
            Ok(CheckValue::plain(worst))
        },
    ));

    let name = model_name.clone();
    specs.push(spec(
        id("second_moment_is_metric"),
        "<(ds)^2> equals the control metric",
        None,
        grid_points,
        1e-9,
        move || {
            let model = by_name::<f64>(&name).unwrap();
            let mut worst = 0.0f64;
            for q in model.q_grid(grid_points) {
                let m = model.entropy_differential(&q)?;
                let g = model.fisher_rao_control_metric(&q)?;
                worst = worst.max(m.second.max_abs_diff(&g));
            }
            Ok(CheckValue::plain(worst))
        },
    ));

    let name = model_name.clone();
    specs.push(spec(
        id("kl_routes"),
        "integral divergence equals the Bregman form",
        None,
        grid_points,
        tol_c,
        move || {
            let model = by_name::<f64>(&name).unwrap();
            let grid = model.q_grid(grid_points);
            let q0 = &grid[0];
            let mut worst = 0.0f64;
            for q1 in &grid {
                let integral = model.relative_entropy(q0, q1)?;
                let bregman = model.relative_entropy_bregman(q0, q1)?;
                worst = worst.max((integral - bregman).abs());
            }
            Ok(CheckValue::plain(worst))
        },
    ));

    let name = model_name.clone();
    specs.push(spec(
        id("kl_nonnegative"),
        "divergence >= 0, zero only at coincidence",
        None,
        grid_points,
        1e-12,
        move || {
            let model = by_name::<f64>(&name).unwrap();
            let grid = model.q_grid(grid_points);
            let q0 = &grid[grid.len() / 2];
            let mut worst = model.relative_entropy(q0, q0)?.abs();
            for q1 in &grid {
                let kl = model.relative_entropy(q0, q1)?;
                worst = worst.max((-kl).max(0.0));
            }
            Ok(CheckValue::plain(worst))
        },
    ));

    let name = model_name.clone();
    specs.push(spec(
        id("kl_quadratic_order"),
        "Bregman remainder beyond the quadratic term has order 3",
        None,
        3,
        0.3,
        move || {
            let model = by_name::<f64>(&name).unwrap();
            // base point and displacement axis with a non-vanishing third
            // derivative of w
            let (q0, axis): (Vec<f64>, usize) = match name.as_str() {
                "two_level" => (vec![0.3], 0),
                "gaussian_quadratic" => (vec![-1.0], 0),
                _ => (vec![0.3, -1.0], 1),
            };
            let residual = |d: f64| -> Result<f64> {
                let mut delta = vec![0.0; q0.len()];
                delta[axis] = d;
                Ok(model.kl_quadratic_residual(&q0, &delta)?.residual.abs())
            };
            let r1 = residual(0.1)?;
            let r2 = residual(0.05)?;
            let r3 = residual(0.025)?;
            let order_a = (r1 / r2).log2();
            let order_b = (r2 / r3).log2();
            let worst = (order_a - 3.0).abs().max((order_b - 3.0).abs());
            Ok(CheckValue {
                residual: worst,
                constants: vec![("observed_order", order_a)],
            })
        },
    ));

    if model_name == "two_level" {
        specs.push(spec(
            id("spot_values"),
            "w(0) = ln 2; KL(0 -> 0.1) = ln cosh 0.1",
            None,
            2,
            1e-9,
            move || {
                let model = by_name::<f64>("two_level").unwrap();
                let w0 = model.log_partition(&[0.0])?;
                let kl = model.relative_entropy(&[0.0], &[0.1])?;
                let worst = (w0 - std::f64::consts::LN_2)
                    .abs()
                    .max((kl - 0.1f64.cosh().ln()).abs());
                Ok(CheckValue::plain(worst))
            },
        ));
    }

    let name = model_name.clone();
    specs.push(spec(
        id("first_law"),
        "pullback of eta through the equilibrium embedding vanishes",
        None,
        grid_points,
        tol_f,
        move || {
            let model = by_name::<f64>(&name).unwrap();
            let mut worst = 0.0f64;
            for q in model.q_grid(grid_points) {
                for r in model.pullback_eta_legendre(&q)? {
                    worst = worst.max(r.abs());
                }
            }
            Ok(CheckValue::plain(worst))
        },
    ));

    let name = model_name.clone();
    specs.push(spec(
        id("induced_metric"),
        "pullback metric equals the Hessian (covariance) metric",
        None,
        grid_points,
        tol_c,
        move || {
            let model = by_name::<f64>(&name).unwrap();
            let mut worst = 0.0f64;
            for q in model.q_grid(grid_points) {
                let induced = model.induced_metric(&q)?;
                let cov = model.covariance_matrix(&q)?;
                worst = worst.max(induced.components.max_abs_diff(&cov));
            }
            Ok(CheckValue::plain(worst))
        },
    ));

    let name = model_name.clone();
    specs.push(spec(
        id("invertibility"),
        "local-equilibrium determinant is non-degenerate",
        None,
        grid_points,
        0.0,
        move || {
            let model = by_name::<f64>(&name).unwrap();
            let mut bad = 0usize;
            for q in model.q_grid(grid_points) {
                if !model.invertibility_check(&q)?.ok {
                    bad += 1;
                }
            }
            Ok(CheckValue::plain(bad as f64))
        },
    ));

    if model_name == "gaussian_quadratic" {
        specs.push(spec(
            id("embedding_momenta"),
            "embedded momenta stay positive (canonical-frame compatible)",
            None,
            grid_points,
            0.0,
            move || {
                let model = by_name::<f64>("gaussian_quadratic").unwrap();
                let mut bad = 0usize;
                for q in model.q_grid(grid_points) {
                    if !model.legendre_embed(&q)?.has_positive_p() {
                        bad += 1;
                    }
                }
                Ok(CheckValue::plain(bad as f64))
            },
        ));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{parse_report_json, serialize_report, ReportFormat};

    fn quick_config() -> SuiteConfig {
        SuiteConfig {
            n_values: vec![1],
            points: 2,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn full_suite_passes_on_a_small_sample() {
        let report = run_suite(&quick_config()).unwrap();
        let failed: Vec<_> = report.checks.iter().filter(|c| !c.pass).collect();
        assert!(failed.is_empty(), "failed checks: {failed:#?}");
        assert_eq!(report.summary.total, report.checks.len());
    }

    #[test]
    fn check_ids_are_unique() {
        let report = run_suite(&quick_config()).unwrap();
        let mut ids: Vec<_> = report.checks.iter().map(|c| c.id.clone()).collect();
        ids.sort();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len());
    }

    #[test]
    fn reports_are_deterministic_modulo_duration() {
        let config = SuiteConfig {
            suite: SuiteSelection::Geometry,
            n_values: vec![1],
            points: 3,
            ..SuiteConfig::default()
        };
        let mut a = run_suite(&config).unwrap();
        let mut b = run_suite(&config).unwrap();
        a.duration_seconds = 0.0;
        b.duration_seconds = 0.0;
        let ja = serialize_report(&a, ReportFormat::Json);
        let jb = serialize_report(&b, ReportFormat::Json);
        assert_eq!(ja, jb);
        assert_eq!(parse_report_json(&ja).unwrap(), a);
    }

    #[test]
    fn unreachable_tolerance_is_recorded_not_thrown() {
        let config = SuiteConfig {
            suite: SuiteSelection::Connections,
            n_values: vec![1],
            points: 2,
            tol_closed: 1e-20,
            tol_fd: 1e-20,
            ..SuiteConfig::default()
        };
        let report = run_suite(&config).unwrap();
        assert!(!report.all_passed());
        assert!(report.summary.failed > 0);
    }

    #[test]
    fn suite_selection_restricts_checks() {
        let config = SuiteConfig {
            suite: SuiteSelection::Statmech,
            n_values: vec![1],
            points: 2,
            models: vec!["two_level".into()],
            ..SuiteConfig::default()
        };
        let report = run_suite(&config).unwrap();
        assert!(report.checks.iter().all(|c| c.id.starts_with("statmech.")));
        assert!(report.all_passed(), "{report:#?}");
    }

    #[test]
    fn invalid_config_is_a_config_error() {
        let config = SuiteConfig {
            points: 0,
            ..SuiteConfig::default()
        };
        assert!(matches!(run_suite(&config), Err(Error::Config(_))));
    }
}
