//! The hyperbolic Heisenberg group: `R^{2n} x R` with a twisted addition,
//! carrying a left-invariant para-contact metric structure whose adapted
//! connection is flat. It is the local model the phase-space geometry is
//! compared against, and it is run through the same residual machinery.
//!
//! Coordinates are ordered `(t | u_1..u_n | v_1..v_n)`. The group law is
//!
//! `(u', v', t') . (u, v, t) = (u' + u, v' + v, t' + t + 2 sum(u'_k v_k - v'_k u_k))`
//!
//! whose skew coefficient is fixed by requiring the frame below to be
//! left-invariant. The frame is `xi~ = 2 d/dt`, `U_k = d/du_k - 2 v_k d/dt`,
//! `V_k = d/dv_k + 2 u_k d/dt`; the contact form is derived as its unique
//! dual member, `Theta~ = dt/2 + sum(v_k du_k - u_k dv_k)`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::connection::koszul_constant_frame;
use crate::curvature::riemann_components;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Tensor3, Tensor4};
use crate::numerics::{
    lie_bracket_components, matrix_signature, partial_derivative, uniform_in, SignatureCount,
    StepScheme,
};
use crate::report::CheckResult;
use crate::scalar::{half, two, Real};

/// A group element `(u, v, t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement<T> {
    pub u: Vec<T>,
    pub v: Vec<T>,
    pub t: T,
}

impl<T: Real> GroupElement<T> {
    pub fn new(u: Vec<T>, v: Vec<T>, t: T) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::Contract(
                "u and v blocks must have equal length".into(),
            ));
        }
        let g = GroupElement { u, v, t };
        if !g.is_finite() {
            return Err(Error::Domain(
                "group element has a non-finite coordinate".into(),
            ));
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.u.len()
    }

    pub fn dim(&self) -> usize {
        2 * self.n() + 1
    }

    pub fn is_finite(&self) -> bool {
        self.t.is_finite()
            && self.u.iter().all(|x| x.is_finite())
            && self.v.iter().all(|x| x.is_finite())
    }

    /// Flattened coordinates in the order `(t | u | v)`.
    pub fn coords(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.dim());
        out.push(self.t);
        out.extend_from_slice(&self.u);
        out.extend_from_slice(&self.v);
        out
    }

    pub fn from_coords(coords: &[T]) -> Self {
        debug_assert!(coords.len() % 2 == 1);
        let n = (coords.len() - 1) / 2;
        GroupElement {
            t: coords[0],
            u: coords[1..=n].to_vec(),
            v: coords[n + 1..].to_vec(),
        }
    }
}

/// The group identity `(0, 0, 0)`.
pub fn identity<T: Real>(n: usize) -> GroupElement<T> {
    GroupElement {
        u: vec![T::zero(); n],
        v: vec![T::zero(); n],
        t: T::zero(),
    }
}

/// Group multiplication. The central coordinate picks up twice the standard
/// symplectic pairing of the factors, matching the left-invariant frame.
pub fn multiply<T: Real>(a: &GroupElement<T>, b: &GroupElement<T>) -> Result<GroupElement<T>> {
    if a.n() != b.n() {
        return Err(Error::Contract(format!(
            "group elements have different dimension parameters ({} vs {})",
            a.n(),
            b.n()
        )));
    }
    let n = a.n();
    let u: Vec<T> = (0..n).map(|k| a.u[k] + b.u[k]).collect();
    let v: Vec<T> = (0..n).map(|k| a.v[k] + b.v[k]).collect();
    let mut skew = T::zero();
    for k in 0..n {
        skew += a.u[k] * b.v[k] - a.v[k] * b.u[k];
    }
    Ok(GroupElement {
        u,
        v,
        t: a.t + b.t + two::<T>() * skew,
    })
}

/// Group inverse `(-u, -v, -t)`; exact because the skew term cancels.
pub fn inverse<T: Real>(g: &GroupElement<T>) -> GroupElement<T> {
    GroupElement {
        u: g.u.iter().map(|&x| -x).collect(),
        v: g.v.iter().map(|&x| -x).collect(),
        t: -g.t,
    }
}

/// Left-invariant frame at `g`; column `0` is `xi~ = 2 d/dt`, columns
/// `1..n` the `U_k`, columns `n+1..2n` the `V_k`.
pub fn frame_at<T: Real>(g: &GroupElement<T>) -> Mat<T> {
    let n = g.n();
    let dim = g.dim();
    let mut e = Mat::zeros(dim, dim);
    e[(0, 0)] = two();
    for k in 0..n {
        e[(0, 1 + k)] = -two::<T>() * g.v[k];
        e[(1 + k, 1 + k)] = T::one();
        e[(0, 1 + n + k)] = two::<T>() * g.u[k];
        e[(1 + n + k, 1 + n + k)] = T::one();
    }
    e
}

/// Contact form dual to the frame: `Theta~ = dt/2 + sum(v_k du_k - u_k dv_k)`
/// with components `(1/2, v_1..v_n, -u_1..-u_n)`.
pub fn contact_form_at<T: Real>(g: &GroupElement<T>) -> Vec<T> {
    let n = g.n();
    let mut theta = Vec::with_capacity(g.dim());
    theta.push(half());
    for k in 0..n {
        theta.push(g.v[k]);
    }
    for k in 0..n {
        theta.push(-g.u[k]);
    }
    theta
}

fn pair<T: Real>(covector: &[T], vector: &[T]) -> T {
    covector.iter().zip(vector).map(|(&a, &b)| a * b).sum()
}

/// Frame components of the metric: `diag(1, I_n, -I_n)`.
pub fn metric_frame<T: Real>(n: usize) -> Mat<T> {
    let mut entries = vec![T::one()];
    entries.extend(vec![T::one(); n]);
    entries.extend(vec![-T::one(); n]);
    Mat::diagonal(&entries)
}

/// Frame components of the para-contact tensor action table:
/// `Phi~ xi~ = 0`, `Phi~ U_k = V_k`, `Phi~ V_k = U_k`.
pub fn phi_frame<T: Real>(n: usize) -> Mat<T> {
    let dim = 2 * n + 1;
    let mut phi = Mat::zeros(dim, dim);
    for k in 0..n {
        phi[(1 + n + k, 1 + k)] = T::one();
        phi[(1 + k, 1 + n + k)] = T::one();
    }
    phi
}

/// Constant structure functions: `[U_k, V_k] = 2 xi~`.
pub fn structure_functions<T: Real>(n: usize) -> Tensor3<T> {
    let mut gamma = Tensor3::zeros(2 * n + 1);
    for k in 0..n {
        gamma.set(0, 1 + k, 1 + n + k, two());
        gamma.set(0, 1 + n + k, 1 + k, -two::<T>());
    }
    gamma
}

/// Levi-Civita symbols in the left-invariant frame (constant Koszul).
pub fn levi_civita_symbols<T: Real>(n: usize) -> Result<Tensor3<T>> {
    koszul_constant_frame(&metric_frame::<T>(n), &structure_functions::<T>(n))
}

/// Adapted-connection symbols: the Levi-Civita symbols corrected along the
/// vertical direction with `Phi = -nabla xi~`, in a frame where the contact
/// form has constant components `delta^0`. All symbols vanish.
pub fn canonical_symbols<T: Real>(n: usize) -> Result<Tensor3<T>> {
    let lc = levi_civita_symbols::<T>(n)?;
    let dim = 2 * n + 1;
    let mut out = Tensor3::zeros(dim);
    for k in 0..dim {
        for j in 0..dim {
            for i in 0..dim {
                let mut value = lc.get(k, j, i);
                if i == 0 {
                    value -= lc.get(k, 0, j);
                }
                if j == 0 {
                    value -= lc.get(k, 0, i);
                }
                if k == 0 {
                    value -= lc.get(0, j, i);
                }
                out.set(k, j, i, value);
            }
        }
    }
    Ok(out)
}

/// Finite-difference Jacobian of the left translation `h -> g . h` at `h`.
pub fn left_translation_jacobian_fd<T: Real>(
    g: &GroupElement<T>,
    h: &GroupElement<T>,
    scheme: &StepScheme<T>,
) -> Result<Mat<T>> {
    let dim = h.dim();
    let mut jac = Mat::zeros(dim, dim);
    for out_ix in 0..dim {
        for in_ix in 0..dim {
            jac[(out_ix, in_ix)] = partial_derivative(
                &|coords: &[T]| {
                    let moved = multiply(g, &GroupElement::from_coords(coords))?;
                    Ok(moved.coords()[out_ix])
                },
                &h.coords(),
                in_ix,
                scheme,
            )?;
        }
    }
    Ok(jac)
}

/// Largest defect of `dL_g(frame at e) = frame at g` over the frame columns.
pub fn left_invariance_residual<T: Real>(g: &GroupElement<T>, scheme: &StepScheme<T>) -> Result<T> {
    let e = identity::<T>(g.n());
    let jac = left_translation_jacobian_fd(g, &e, scheme)?;
    let pushed = jac.mul(&frame_at(&e));
    Ok(pushed.max_abs_diff(&frame_at(g)))
}

fn frame_field<T: Real>(n: usize, i: usize) -> impl Fn(&[T]) -> Result<Vec<T>> + Copy {
    move |coords: &[T]| {
        debug_assert_eq!(coords.len(), 2 * n + 1);
        Ok(frame_at(&GroupElement::from_coords(coords)).column(i))
    }
}

/// Exterior derivative components `d Theta~(e_i, e_j)` in the frame, under
/// the full convention (matches `-Theta~([e_i, e_j])` up to finite
/// differences because the pairings are constant).
pub fn d_theta_frame_at<T: Real>(g: &GroupElement<T>, scheme: &StepScheme<T>) -> Result<Mat<T>> {
    let n = g.n();
    let dim = g.dim();
    let coords = g.coords();
    let mut d = Mat::zeros(dim, dim);
    for i in 0..dim {
        for j in (i + 1)..dim {
            let theta_on = |k: usize| {
                move |c: &[T]| -> Result<T> {
                    let at = GroupElement::from_coords(c);
                    Ok(pair(&contact_form_at(&at), &frame_at(&at).column(k)))
                }
            };
            let mut x_term = T::zero();
            let mut y_term = T::zero();
            let e = frame_at(g);
            for mu in 0..dim {
                if e[(mu, i)] != T::zero() {
                    x_term += e[(mu, i)] * partial_derivative(&theta_on(j), &coords, mu, scheme)?;
                }
                if e[(mu, j)] != T::zero() {
                    y_term += e[(mu, j)] * partial_derivative(&theta_on(i), &coords, mu, scheme)?;
                }
            }
            let bracket =
                lie_bracket_components(&frame_field(n, i), &frame_field(n, j), &coords, scheme)?;
            let value = x_term - y_term - pair(&contact_form_at(g), &bracket);
            d[(i, j)] = value;
            d[(j, i)] = -value;
        }
    }
    Ok(d)
}

/// Aggregated residuals of the group structure checks.
#[derive(Debug, Clone, Copy)]
pub struct HhResiduals {
    pub group_axioms: f64,
    pub left_invariance: f64,
    pub frame_brackets: f64,
    pub theta_duality: f64,
    pub d_theta_table: f64,
    pub contact_volume: f64,
    pub phi_square: f64,
    pub compatibility: f64,
    pub association: f64,
    pub association_sign: f64,
    pub signature_mismatches: usize,
    pub nijenhuis: f64,
    pub nijenhuis_horizontal: f64,
    pub canonical_flatness: f64,
    pub torsion: f64,
    pub torsion_reeb: f64,
    pub parallelism: f64,
}

fn sample_elements(n: usize, count: usize, seed: u64) -> Vec<GroupElement<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let t = uniform_in(&mut rng, -2.0, 2.0);
            let u = (0..n).map(|_| uniform_in(&mut rng, -2.0, 2.0)).collect();
            let v = (0..n).map(|_| uniform_in(&mut rng, -2.0, 2.0)).collect();
            GroupElement { u, v, t }
        })
        .collect()
}

/// Runs every structural check of the group at `points` sampled elements
/// (group axioms always use at least 1000 triples) and aggregates the worst
/// residuals.
pub fn structure_residuals(n: usize, points: usize, seed: u64) -> Result<HhResiduals> {
    let scheme = StepScheme::<f64>::default();
    let dim = 2 * n + 1;
    let e_id = identity::<f64>(n);

    // group axioms on random triples
    let triples = sample_elements(n, 3 * 1000.max(points), seed);
    let mut group_axioms = 0.0f64;
    for chunk in triples.chunks_exact(3) {
        let (a, b, c) = (&chunk[0], &chunk[1], &chunk[2]);
        let left = multiply(&multiply(a, b)?, c)?;
        let right = multiply(a, &multiply(b, c)?)?;
        group_axioms = group_axioms.max(coords_diff(&left, &right));
        group_axioms = group_axioms.max(coords_diff(&multiply(&e_id, a)?, a));
        group_axioms = group_axioms.max(coords_diff(&multiply(a, &e_id)?, a));
        group_axioms = group_axioms.max(coords_diff(&multiply(&inverse(a), a)?, &e_id));
        let double_inverse = inverse(&inverse(a));
        group_axioms = group_axioms.max(coords_diff(&double_inverse, a));
    }

    let elements = sample_elements(n, points.max(2), seed.wrapping_add(1));
    let g_frame = metric_frame::<f64>(n);
    let phi = phi_frame::<f64>(n);
    let gamma = structure_functions::<f64>(n);
    let canonical = canonical_symbols::<f64>(n)?;

    let mut res = HhResiduals {
        group_axioms,
        left_invariance: 0.0,
        frame_brackets: 0.0,
        theta_duality: 0.0,
        d_theta_table: 0.0,
        contact_volume: 0.0,
        phi_square: 0.0,
        compatibility: 0.0,
        association: 0.0,
        association_sign: 0.0,
        signature_mismatches: 0,
        nijenhuis: 0.0,
        nijenhuis_horizontal: 0.0,
        canonical_flatness: 0.0,
        torsion: 0.0,
        torsion_reeb: 0.0,
        parallelism: 0.0,
    };

    // association sign: realized relation between G(X, Phi Y) and d Theta / 2
    let d_theta_ref = d_theta_frame_at(&elements[0], &scheme)?;
    let mut dot = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            let g_phi: f64 = (0..dim).map(|m| g_frame[(i, m)] * phi[(m, j)]).sum();
            dot += g_phi * 0.5 * d_theta_ref[(i, j)];
        }
    }
    let sign = if dot >= 0.0 { 1.0 } else { -1.0 };
    res.association_sign = sign;

    for g in &elements {
        let coords = g.coords();
        let e = frame_at(g);
        let theta = contact_form_at(g);

        res.left_invariance = res
            .left_invariance
            .max(left_invariance_residual(g, &scheme)?);

        // brackets of the frame fields close on 2 delta xi~
        for i in 1..dim {
            let bracket_with_reeb =
                lie_bracket_components(&frame_field(n, 0), &frame_field(n, i), &coords, &scheme)?;
            for c in bracket_with_reeb {
                res.frame_brackets = res.frame_brackets.max(c.abs());
            }
        }
        for k in 0..n {
            for l in 0..n {
                let bracket = lie_bracket_components(
                    &frame_field(n, 1 + k),
                    &frame_field(n, 1 + n + l),
                    &coords,
                    &scheme,
                )?;
                let factor = if k == l { 2.0 } else { 0.0 };
                for (mu, &b) in bracket.iter().enumerate() {
                    let expected = factor * e[(mu, 0)];
                    res.frame_brackets = res.frame_brackets.max((b - expected).abs());
                }
            }
        }

        // Theta~ is dual to the frame: Theta~(e_i) = delta^0_i
        for i in 0..dim {
            let value = pair(&theta, &e.column(i));
            let expected = if i == 0 { 1.0 } else { 0.0 };
            res.theta_duality = res.theta_duality.max((value - expected).abs());
        }

        // d Theta~ components: -2 on (U_k, V_k), zero elsewhere
        let d_theta = d_theta_frame_at(g, &scheme)?;
        for i in 0..dim {
            for j in 0..dim {
                let expected = if i >= 1 && i <= n && j == i + n {
                    -2.0
                } else if j >= 1 && j <= n && i == j + n {
                    2.0
                } else {
                    0.0
                };
                res.d_theta_table = res.d_theta_table.max((d_theta[(i, j)] - expected).abs());
            }
        }

        // Theta~ ^ (d Theta~)^n: constant coefficient (1/2) (-2)^n n!
        let mut d_theta_coord = Mat::<f64>::zeros(dim, dim);
        for k in 0..n {
            d_theta_coord[(1 + k, 1 + n + k)] = -2.0;
            d_theta_coord[(1 + n + k, 1 + k)] = 2.0;
        }
        let mut reference = vec![0usize];
        for k in 0..n {
            reference.push(1 + k);
            reference.push(1 + n + k);
        }
        let coeff = crate::geometry::wedge_top_coefficient(&theta, &d_theta_coord, n, &reference);
        let expected = 0.5 * (-2.0f64).powi(n as i32) * (1..=n).product::<usize>() as f64;
        res.contact_volume = res.contact_volume.max((coeff - expected).abs());

        // Phi~^2 = I - Theta~ (x) xi~ in frame components
        let phi2 = phi.mul(&phi);
        for i in 0..dim {
            for j in 0..dim {
                let expected = if i == j && i > 0 { 1.0 } else { 0.0 };
                res.phi_square = res.phi_square.max((phi2[(i, j)] - expected).abs());
            }
        }

        // compatibility and association against the realized sign
        for i in 0..dim {
            for j in 0..dim {
                let phi_i = phi.column(i);
                let phi_j = phi.column(j);
                let g_phiphi: f64 = (0..dim)
                    .map(|a| phi_i[a] * (0..dim).map(|b| g_frame[(a, b)] * phi_j[b]).sum::<f64>())
                    .sum();
                let compat = g_phiphi + g_frame[(i, j)]
                    - (if i == 0 { 1.0 } else { 0.0 }) * (if j == 0 { 1.0 } else { 0.0 });
                res.compatibility = res.compatibility.max(compat.abs());

                let g_phi: f64 = (0..dim).map(|m| g_frame[(i, m)] * phi[(m, j)]).sum();
                let assoc = g_phi - sign * 0.5 * d_theta[(i, j)];
                res.association = res.association.max(assoc.abs());
            }
        }

        // metric signature in the frame
        match matrix_signature(&g_frame, 1e-9) {
            Ok(SignatureCount {
                n_pos,
                n_neg,
                n_zero,
            }) if n_pos == n + 1 && n_neg == n && n_zero == 0 => {}
            _ => res.signature_mismatches += 1,
        }

        // Nijenhuis tensor: vertical, equal to d Theta~ (x) xi~
        let phi_coord = e.mul(&phi).mul(&e.inverse()?);
        let e_inv = e.inverse()?;
        for i in 0..dim {
            for j in (i + 1)..dim {
                let nij = nijenhuis_coords(n, &phi_coord, i, j, &coords, &scheme)?;
                for mu in 0..dim {
                    let expected = d_theta[(i, j)] * e[(mu, 0)];
                    res.nijenhuis = res.nijenhuis.max((nij[mu] - expected).abs());
                }
                let in_frame = e_inv.mul_vec(&nij);
                for c in in_frame.iter().skip(1) {
                    res.nijenhuis_horizontal = res.nijenhuis_horizontal.max(c.abs());
                }
            }
        }

        // curvature of the adapted connection
        let symbols = |_c: &[f64]| canonical_symbols::<f64>(n);
        let riemann: Tensor4<f64> = riemann_components(&symbols, &e, &gamma, &coords, &scheme)?;
        res.canonical_flatness = res.canonical_flatness.max(riemann.max_abs());

        // torsion of the adapted connection: T~ = d Theta~ (x) xi~ with
        // T~(xi~, .) = 0
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let t = canonical.get(k, j, i) - canonical.get(k, i, j) - gamma.get(k, i, j);
                    let expected = d_theta[(i, j)] * if k == 0 { 1.0 } else { 0.0 };
                    res.torsion = res.torsion.max((t - expected).abs());
                    if i == 0 || j == 0 {
                        res.torsion_reeb = res.torsion_reeb.max(t.abs());
                    }
                }
            }
        }

        // parallel transport of (Theta~, xi~, Phi~, G~): constant objects and
        // vanishing symbols, evaluated through the covariant formulas
        for i in 0..dim {
            for j in 0..dim {
                let mut eta_cov = 0.0;
                let mut xi_cov = 0.0;
                for m in 0..dim {
                    let theta_m = if m == 0 { 1.0 } else { 0.0 };
                    eta_cov -= theta_m * canonical.get(m, j, i);
                    xi_cov += canonical.get(j, m, i) * if m == 0 { 1.0 } else { 0.0 };
                }
                res.parallelism = res.parallelism.max(eta_cov.abs()).max(xi_cov.abs());
                for k in 0..dim {
                    let mut phi_cov = 0.0;
                    let mut g_cov = 0.0;
                    for m in 0..dim {
                        phi_cov += canonical.get(k, m, i) * phi[(m, j)]
                            - canonical.get(m, j, i) * phi[(k, m)];
                        g_cov -= canonical.get(m, j, i) * g_frame[(m, k)]
                            + canonical.get(m, k, i) * g_frame[(j, m)];
                    }
                    res.parallelism = res.parallelism.max(phi_cov.abs()).max(g_cov.abs());
                }
            }
        }
    }

    Ok(res)
}

fn coords_diff<T: Real>(a: &GroupElement<T>, b: &GroupElement<T>) -> f64 {
    a.coords()
        .iter()
        .zip(b.coords())
        .map(|(&x, y)| (x - y).abs().to_f64().unwrap_or(f64::NAN))
        .fold(0.0, f64::max)
}

fn nijenhuis_coords(
    n: usize,
    phi_coord: &Mat<f64>,
    i: usize,
    j: usize,
    coords: &[f64],
    scheme: &StepScheme<f64>,
) -> Result<Vec<f64>> {
    let dim = coords.len();
    let phi_field = move |base: usize| {
        move |c: &[f64]| -> Result<Vec<f64>> {
            let at = GroupElement::from_coords(c);
            let e = frame_at(&at);
            let phi_here = e.mul(&phi_frame::<f64>(n)).mul(&e.inverse()?);
            Ok(phi_here.mul_vec(&e.column(base)))
        }
    };
    let bracket = lie_bracket_components(&frame_field(n, i), &frame_field(n, j), coords, scheme)?;
    let bracket_phi = lie_bracket_components(&phi_field(i), &phi_field(j), coords, scheme)?;
    let bracket_left = lie_bracket_components(&phi_field(i), &frame_field(n, j), coords, scheme)?;
    let bracket_right = lie_bracket_components(&frame_field(n, i), &phi_field(j), coords, scheme)?;
    let term1 = phi_coord.mul_vec(&phi_coord.mul_vec(&bracket));
    let term3 = phi_coord.mul_vec(&bracket_left);
    let term4 = phi_coord.mul_vec(&bracket_right);
    Ok((0..dim)
        .map(|mu| term1[mu] + bracket_phi[mu] - term3[mu] - term4[mu])
        .collect())
}

/// Report fragment covering the group-structure checks, mirroring the
/// phase-space suites.
pub fn structure_checks(
    n: usize,
    points: usize,
    seed: u64,
    tol_closed: f64,
    tol_fd: f64,
) -> Result<Vec<CheckResult>> {
    let res = structure_residuals(n, points, seed)?;
    let nn = Some(n);
    let id = |stem: &str| format!("heisenberg.{stem}.n{n}");
    Ok(vec![
        CheckResult::new(
            id("group_axioms"),
            "g.(h.k) = (g.h).k, g.g^-1 = e, e.g = g",
            nn,
            1000.max(points),
            res.group_axioms,
            1e-12,
        ),
        CheckResult::new(
            id("left_invariance"),
            "dL_g E(e) = E(g)",
            nn,
            points,
            res.left_invariance,
            1e-9,
        ),
        CheckResult::new(
            id("frame_brackets"),
            "[U_k, V_k] = 2 xi~, [xi~, .] = 0",
            nn,
            points,
            res.frame_brackets,
            tol_fd,
        ),
        CheckResult::new(
            id("theta_duality"),
            "Theta~(xi~) = 1, Theta~(U_k) = Theta~(V_k) = 0",
            nn,
            points,
            res.theta_duality,
            tol_closed,
        ),
        CheckResult::new(
            id("d_theta"),
            "dTheta~(U_k, V_k) = -2",
            nn,
            points,
            res.d_theta_table,
            tol_fd,
        ),
        CheckResult::new(
            id("contact_volume"),
            "Theta~ ^ (dTheta~)^n = (1/2)(-2)^n n! dt^du^dv",
            nn,
            points,
            res.contact_volume,
            tol_closed,
        ),
        CheckResult::new(
            id("phi_square"),
            "Phi~^2 = I - Theta~ (x) xi~",
            nn,
            points,
            res.phi_square,
            tol_closed,
        ),
        CheckResult::new(
            id("compatibility"),
            "G~(Phi~X, Phi~Y) = -G~(X, Y) + Theta~(X) Theta~(Y)",
            nn,
            points,
            res.compatibility,
            tol_closed,
        ),
        CheckResult::new(
            id("association"),
            "G~(X, Phi~Y) = s (1/2) dTheta~(X, Y), s constant",
            nn,
            points,
            res.association,
            tol_fd,
        )
        .with_constant("association_sign", res.association_sign),
        CheckResult::new(
            id("signature"),
            "signature(G~) = (n+1, n, 0)",
            nn,
            points,
            res.signature_mismatches as f64,
            0.0,
        ),
        CheckResult::new(
            id("nijenhuis"),
            "N = dTheta~ (x) xi~, horizontal part 0",
            nn,
            points,
            res.nijenhuis.max(res.nijenhuis_horizontal),
            1e-8,
        ),
        CheckResult::new(
            id("canonical_flatness"),
            "R~ = 0",
            nn,
            points,
            res.canonical_flatness,
            1e-8,
        ),
        CheckResult::new(
            id("canonical_torsion"),
            "T~ = dTheta~ (x) xi~, T~(xi~, .) = 0",
            nn,
            points,
            res.torsion.max(res.torsion_reeb),
            tol_fd,
        ),
        CheckResult::new(
            id("parallelism"),
            "nabla~ {Theta~, xi~, Phi~, G~} = 0",
            nn,
            points,
            res.parallelism,
            tol_closed,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1(u: f64, v: f64, t: f64) -> GroupElement<f64> {
        GroupElement::new(vec![u], vec![v], t).unwrap()
    }

    #[test]
    fn identity_and_inverse() {
        let e = identity::<f64>(1);
        let g = g1(1.0, 2.0, 3.0);
        assert_eq!(multiply(&e, &g).unwrap(), g);
        assert_eq!(multiply(&g, &e).unwrap(), g);
        let inv = inverse(&g);
        assert_eq!(inv, g1(-1.0, -2.0, -3.0));
        assert_eq!(multiply(&inv, &g).unwrap(), e);
        assert_eq!(inverse(&inverse(&g)), g);
    }

    #[test]
    fn skew_term_follows_the_symplectic_pairing() {
        // (1,0,0).(0,1,0): the central charge is twice the pairing u' v - v' u
        let a = g1(1.0, 0.0, 0.0);
        let b = g1(0.0, 1.0, 0.0);
        let prod = multiply(&a, &b).unwrap();
        assert_eq!(prod, g1(1.0, 1.0, 2.0));
        // and the opposite order flips its sign
        let prod = multiply(&b, &a).unwrap();
        assert_eq!(prod, g1(1.0, 1.0, -2.0));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let a = identity::<f64>(1);
        let b = identity::<f64>(2);
        assert!(multiply(&a, &b).is_err());
    }

    #[test]
    fn frame_is_left_invariant() {
        let scheme = StepScheme::default();
        for g in sample_elements(2, 5, 3) {
            let residual = left_invariance_residual(&g, &scheme).unwrap();
            assert!(residual < 1e-9, "residual {residual} at {g:?}");
        }
    }

    #[test]
    fn frame_brackets_close_on_the_reeb_field() {
        let scheme = StepScheme::default();
        let g = g1(0.4, -0.7, 1.1);
        let coords = g.coords();
        let bracket =
            lie_bracket_components(&frame_field(1, 1), &frame_field(1, 2), &coords, &scheme)
                .unwrap();
        // [U, V] = 2 xi~ = (4, 0, 0)
        assert!((bracket[0] - 4.0).abs() < 1e-10);
        assert!(bracket[1].abs() < 1e-10);
        assert!(bracket[2].abs() < 1e-10);
    }

    #[test]
    fn contact_form_is_dual_and_volume_nonzero() {
        let g = g1(0.3, 0.9, -0.5);
        let theta = contact_form_at(&g);
        let e = frame_at(&g);
        assert!((pair(&theta, &e.column(0)) - 1.0).abs() < 1e-15);
        assert!(pair(&theta, &e.column(1)).abs() < 1e-15);
        assert!(pair(&theta, &e.column(2)).abs() < 1e-15);
    }

    #[test]
    fn structure_residuals_are_tiny() {
        for n in 1..=2usize {
            let res = structure_residuals(n, 4, 7).unwrap();
            assert!(res.group_axioms < 1e-12, "axioms {}", res.group_axioms);
            assert!(res.left_invariance < 1e-9);
            assert!(res.theta_duality < 1e-12);
            assert!(res.d_theta_table < 1e-8, "d theta {}", res.d_theta_table);
            assert!(res.contact_volume < 1e-12);
            assert!(res.phi_square < 1e-14);
            assert!(res.compatibility < 1e-14);
            assert!(res.association < 1e-8, "association {}", res.association);
            assert_eq!(res.association_sign, -1.0);
            assert_eq!(res.signature_mismatches, 0);
            assert!(res.nijenhuis < 1e-8, "nijenhuis {}", res.nijenhuis);
            assert!(
                res.canonical_flatness < 1e-8,
                "flatness {}",
                res.canonical_flatness
            );
            assert!(res.torsion < 1e-8, "torsion {}", res.torsion);
            assert!(res.torsion_reeb < 1e-14);
            assert!(res.parallelism < 1e-14);
        }
    }

    #[test]
    fn check_fragment_reports_every_identity() {
        let checks = structure_checks(1, 3, 11, 1e-8, 1e-6).unwrap();
        assert!(checks.iter().all(|c| c.pass), "{checks:#?}");
        let ids: std::collections::HashSet<_> = checks.iter().map(|c| c.id.clone()).collect();
        assert_eq!(ids.len(), checks.len());
        let assoc = checks
            .iter()
            .find(|c| c.id.contains("association"))
            .unwrap();
        assert_eq!(assoc.constants["association_sign"], -1.0);
    }
}
