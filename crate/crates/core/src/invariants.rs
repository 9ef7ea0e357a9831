//! Structure-tensor identities: Nijenhuis/normality, parallelism under the
//! adapted connection, and the Killing property of the Reeb field.
//!
//! The residual functions accept the structure objects as evaluators, so
//! deliberately perturbed structures can be run through the same code paths
//! as the genuine ones (detection-power controls).

use crate::chart::ChartPoint;
use crate::connection::{levi_civita_at, Connection};
use crate::error::Result;
use crate::frames::{FrameField, FrameKind, VectorField};
use crate::geometry::{
    coordinate_metric_at, d_eta_at, eta_applied, metric_at, phi_closed_form_at,
    phi_coordinate_closed_form, reeb_at,
};
use crate::linalg::Mat;
use crate::numerics::{directional_derivative, StepScheme};
use crate::scalar::{half, Real};

/// Nijenhuis tensor of a (1,1) tensor field given in coordinate components:
/// `N(X, Y) = Phi^2 [X, Y] + [Phi X, Phi Y] - Phi [Phi X, Y] - Phi [X, Phi Y]`.
pub fn nijenhuis_with_phi<T: Real>(
    phi: impl Fn(&ChartPoint<T>) -> Result<Mat<T>> + Clone + Send + Sync + 'static,
    x_field: &VectorField<T>,
    y_field: &VectorField<T>,
    x: &ChartPoint<T>,
    scheme: &StepScheme<T>,
) -> Result<Vec<T>> {
    let phi_x = x_field.mapped(phi.clone());
    let phi_y = y_field.mapped(phi.clone());
    let phi_at_x = phi(x)?;

    let bracket = crate::geometry::lie_bracket_at(x_field, y_field, x, scheme)?;
    let bracket_phi = crate::geometry::lie_bracket_at(&phi_x, &phi_y, x, scheme)?;
    let bracket_left = crate::geometry::lie_bracket_at(&phi_x, y_field, x, scheme)?;
    let bracket_right = crate::geometry::lie_bracket_at(x_field, &phi_y, x, scheme)?;

    let term1 = phi_at_x.mul_vec(&phi_at_x.mul_vec(&bracket));
    let term3 = phi_at_x.mul_vec(&bracket_left);
    let term4 = phi_at_x.mul_vec(&bracket_right);
    Ok((0..x.dim())
        .map(|mu| term1[mu] + bracket_phi[mu] - term3[mu] - term4[mu])
        .collect())
}

/// Nijenhuis tensor of the standard almost-para-contact structure.
pub fn nijenhuis_at<T: Real>(
    x_field: &VectorField<T>,
    y_field: &VectorField<T>,
    x: &ChartPoint<T>,
    scheme: &StepScheme<T>,
) -> Result<Vec<T>> {
    nijenhuis_with_phi(
        |pt| Ok(phi_coordinate_closed_form(pt)),
        x_field,
        y_field,
        x,
        scheme,
    )
}

/// Normality defect of an almost-para-contact structure.
#[derive(Debug, Clone, Copy)]
pub struct NormalityReport<T> {
    /// Largest component of `N(X, Y) - d eta(X, Y) xi` over frame pairs.
    pub max_residual: T,
    /// Largest horizontal frame component of `N(X, Y)` (must vanish).
    pub horizontal_residual: T,
}

/// Runs the normality check with an arbitrary coordinate `Phi` evaluator.
pub fn normality_report_with_phi<T: Real>(
    phi: impl Fn(&ChartPoint<T>) -> Result<Mat<T>> + Clone + Send + Sync + 'static,
    x: &ChartPoint<T>,
    scheme: &StepScheme<T>,
) -> Result<NormalityReport<T>> {
    let n = x.n();
    let frame = FrameField::new(FrameKind::Canonical, n);
    let dim = frame.dim();
    let e = frame.matrix_at(x)?;
    let e_inv = e.inverse()?;
    let d_eta = d_eta_at(x, &frame, scheme)?.as_mat();
    let xi = reeb_at(x);

    let mut max_residual = T::zero();
    let mut horizontal = T::zero();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let nij = nijenhuis_with_phi(
                phi.clone(),
                &frame.vector_field(i),
                &frame.vector_field(j),
                x,
                scheme,
            )?;
            for mu in 0..dim {
                max_residual = max_residual.max((nij[mu] - d_eta[(i, j)] * xi[mu]).abs());
            }
            let in_frame = e_inv.mul_vec(&nij);
            for component in in_frame.iter().skip(1) {
                horizontal = horizontal.max(component.abs());
            }
        }
    }
    Ok(NormalityReport {
        max_residual,
        horizontal_residual: horizontal,
    })
}

/// Normality of the standard structure: `N = d eta (x) xi` with a purely
/// vertical Nijenhuis tensor.
pub fn normality_report<T: Real>(
    x: &ChartPoint<T>,
    scheme: &StepScheme<T>,
) -> Result<NormalityReport<T>> {
    normality_report_with_phi(|pt| Ok(phi_coordinate_closed_form(pt)), x, scheme)
}

/// Worst covariant-derivative component of each structure object under a
/// candidate adapted connection.
#[derive(Debug, Clone, Copy)]
pub struct ParallelismResiduals<T> {
    pub eta: T,
    pub xi: T,
    pub phi: T,
    pub metric: T,
}

impl<T: Real> ParallelismResiduals<T> {
    pub fn worst(&self) -> T {
        self.eta.max(self.xi).max(self.phi).max(self.metric)
    }
}

/// Evaluates `nabla {eta, xi, Phi, G}` componentwise in the connection's
/// frame, differentiating the objects' frame components numerically.
pub fn parallelism_residuals<T: Real>(
    conn: &Connection<T>,
    x: &ChartPoint<T>,
    scheme: &StepScheme<T>,
) -> Result<ParallelismResiduals<T>> {
    let frame = conn.frame;
    let dim = frame.dim();
    let e = frame.matrix_at(x)?;
    let symbols = conn.symbols_at(x)?;

    let eta_components = |pt: &ChartPoint<T>| -> Result<Vec<T>> {
        let ep = frame.matrix_at(pt)?;
        Ok((0..dim).map(|j| eta_applied(pt, &ep.column(j))).collect())
    };
    let xi_components = |pt: &ChartPoint<T>| -> Result<Vec<T>> {
        Ok(frame.matrix_at(pt)?.inverse()?.mul_vec(&reeb_at(pt)))
    };
    let eta0 = eta_components(x)?;
    let xi0 = xi_components(x)?;
    let phi0 = phi_closed_form_at(x, &frame)?.as_mat();
    let g0 = metric_at(x, &frame)?.as_mat();

    // coordinate-axis derivatives of all object components
    let mut d_eta_mu = vec![vec![T::zero(); dim]; dim];
    let mut d_xi_mu = vec![vec![T::zero(); dim]; dim];
    let mut d_phi_mu = vec![Mat::zeros(dim, dim); dim];
    let mut d_g_mu = vec![Mat::zeros(dim, dim); dim];
    for mu in 0..dim {
        for j in 0..dim {
            d_eta_mu[mu][j] = directional_derivative(
                &|pt: &ChartPoint<T>| Ok(eta_components(pt)?[j]),
                x,
                mu,
                scheme,
            )?;
            d_xi_mu[mu][j] = directional_derivative(
                &|pt: &ChartPoint<T>| Ok(xi_components(pt)?[j]),
                x,
                mu,
                scheme,
            )?;
            for k in 0..dim {
                d_phi_mu[mu][(k, j)] = directional_derivative(
                    &|pt: &ChartPoint<T>| Ok(phi_closed_form_at(pt, &frame)?.as_mat()[(k, j)]),
                    x,
                    mu,
                    scheme,
                )?;
                d_g_mu[mu][(k, j)] = directional_derivative(
                    &|pt: &ChartPoint<T>| Ok(metric_at(pt, &frame)?.as_mat()[(k, j)]),
                    x,
                    mu,
                    scheme,
                )?;
            }
        }
    }
    let along = |i: usize, d_mu: &dyn Fn(usize) -> T| -> T {
        (0..dim).map(|mu| e[(mu, i)] * d_mu(mu)).sum()
    };

    let mut res = ParallelismResiduals {
        eta: T::zero(),
        xi: T::zero(),
        phi: T::zero(),
        metric: T::zero(),
    };
    for i in 0..dim {
        for j in 0..dim {
            // (nabla_i eta)_j = e_i(eta_j) - eta_m Gamma^m_{ji}
            let mut v = along(i, &|mu| d_eta_mu[mu][j]);
            for m in 0..dim {
                v -= eta0[m] * symbols.get(m, j, i);
            }
            res.eta = res.eta.max(v.abs());

            // (nabla_i xi)^j = e_i(xi^j) + Gamma^j_{mi} xi^m
            let mut v = along(i, &|mu| d_xi_mu[mu][j]);
            for m in 0..dim {
                v += symbols.get(j, m, i) * xi0[m];
            }
            res.xi = res.xi.max(v.abs());

            for k in 0..dim {
                // (nabla_i Phi)^k_j = e_i(Phi^k_j) + Gamma^k_{mi} Phi^m_j - Gamma^m_{ji} Phi^k_m
                let mut v = along(i, &|mu| d_phi_mu[mu][(k, j)]);
                for m in 0..dim {
                    v += symbols.get(k, m, i) * phi0[(m, j)] - symbols.get(m, j, i) * phi0[(k, m)];
                }
                res.phi = res.phi.max(v.abs());

                // (nabla_i G)_{jk} = e_i(g_jk) - Gamma^m_{ji} g_mk - Gamma^m_{ki} g_jm
                let mut v = along(i, &|mu| d_g_mu[mu][(j, k)]);
                for m in 0..dim {
                    v -= symbols.get(m, j, i) * g0[(m, k)] + symbols.get(m, k, i) * g0[(j, m)];
                }
                res.metric = res.metric.max(v.abs());
            }
        }
    }
    Ok(res)
}

/// Residuals of the Reeb field's symmetry properties.
#[derive(Debug, Clone, Copy)]
pub struct KillingReport<T> {
    /// Worst component of the Lie derivative of the metric along the Reeb
    /// field, over canonical frame pairs.
    pub lie_metric: T,
    /// Worst component of `h = (1/2) L_xi Phi` applied to frame vectors.
    pub h_tensor: T,
    /// Worst component of `nabla xi + Phi` (Levi-Civita, canonical frame).
    pub grad_xi_plus_phi: T,
}

/// Lie derivative of an arbitrary coordinate metric field along the Reeb
/// field, evaluated on canonical frame pairs.
pub fn lie_metric_residual_with<T: Real>(
    metric: &dyn Fn(&ChartPoint<T>) -> Result<Mat<T>>,
    x: &ChartPoint<T>,
    scheme: &StepScheme<T>,
) -> Result<T> {
    let n = x.n();
    let frame = FrameField::new(FrameKind::Canonical, n);
    let dim = frame.dim();
    let xi = VectorField::new(|pt: &ChartPoint<T>| Ok(reeb_at(pt)));

    let pairing = |pt: &ChartPoint<T>, u: &[T], v: &[T]| -> Result<T> {
        let g = metric(pt)?;
        Ok((0..u.len())
            .map(|a| {
                let row: T = (0..v.len()).map(|b| g[(a, b)] * v[b]).sum();
                u[a] * row
            })
            .sum())
    };

    let mut worst = T::zero();
    for i in 0..dim {
        for j in i..dim {
            let ei = frame.vector_field(i);
            let ej = frame.vector_field(j);
            // xi(G(e_i, e_j))
            let scalar = {
                let (ei, ej) = (ei.clone(), ej.clone());
                move |pt: &ChartPoint<T>| pairing(pt, &ei.at(pt)?, &ej.at(pt)?)
            };
            let d = directional_derivative(&scalar, x, 0, scheme)?;
            let bracket_i = crate::geometry::lie_bracket_at(&xi, &ei, x, scheme)?;
            let bracket_j = crate::geometry::lie_bracket_at(&xi, &ej, x, scheme)?;
            let term_i = pairing(x, &bracket_i, &ej.at(x)?)?;
            let term_j = pairing(x, &ei.at(x)?, &bracket_j)?;
            worst = worst.max((d - term_i - term_j).abs());
        }
    }
    Ok(worst)
}

/// Killing property, vanishing of `h`, and the defining relation
/// `nabla xi = -Phi`, all at once.
pub fn killing_report<T: Real>(
    x: &ChartPoint<T>,
    scheme: &StepScheme<T>,
) -> Result<KillingReport<T>> {
    let n = x.n();
    let frame = FrameField::new(FrameKind::Canonical, n);
    let dim = frame.dim();

    let lie_metric = lie_metric_residual_with(&|pt| Ok(coordinate_metric_at(pt)), x, scheme)?;

    // h = (1/2) L_xi Phi: (L_xi Phi)(X) = [xi, Phi X] - Phi [xi, X]
    let xi = VectorField::new(|pt: &ChartPoint<T>| Ok(reeb_at(pt)));
    let mut h_tensor = T::zero();
    for i in 0..dim {
        let ei = frame.vector_field(i);
        let phi_ei = crate::geometry::phi_field(&ei);
        let first = crate::geometry::lie_bracket_at(&xi, &phi_ei, x, scheme)?;
        let second = crate::geometry::lie_bracket_at(&xi, &ei, x, scheme)?;
        let phi_second = phi_coordinate_closed_form(x).mul_vec(&second);
        for mu in 0..dim {
            h_tensor = h_tensor.max(half::<T>() * (first[mu] - phi_second[mu]).abs());
        }
    }

    // nabla xi + Phi = 0 with Koszul symbols and the closed-form Phi
    let lc = levi_civita_at(x, &frame, scheme)?;
    let phi_frame = phi_closed_form_at(x, &frame)?.as_mat();
    let mut grad = T::zero();
    for k in 0..dim {
        for i in 0..dim {
            grad = grad.max((lc.get(k, 0, i) + phi_frame[(k, i)]).abs());
        }
    }

    Ok(KillingReport {
        lie_metric,
        h_tensor,
        grad_xi_plus_phi: grad,
    })
}
