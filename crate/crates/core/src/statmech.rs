//! Gibbs models over explicit sample spaces and the statistics they induce:
//! log-partition, moments, Fisher-Rao metrics, relative entropy, and the two
//! embeddings into the phase-space chart.
//!
//! A model is the density family `rho_q(x) = exp(q^a F_a(x) - w(q))` with
//! `w(q) = ln integral exp(q^a F_a)`. Means, covariances and divergences are
//! evaluated by exact sums (discrete spaces) or adaptive quadrature on a
//! truncated window (the real line); every quantity with a closed form is
//! cross-checked against it in the test suites rather than substituted.

use std::sync::Arc;

use serde::Deserialize;

use crate::chart::ChartPoint;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::numerics::{
    integrate, partial_derivative, second_partial_derivative, QuadKind, QuadratureSpec,
    SampleSpace, StepScheme,
};
use crate::scalar::{half, lit, Real};

/// Fixed catalog of scalar observables a model may carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Observable {
    X,
    XSquared,
    XCubed,
}

impl Observable {
    pub fn eval<T: Real>(&self, x: T) -> T {
        match self {
            Observable::X => x,
            Observable::XSquared => x * x,
            Observable::XCubed => x * x * x,
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "x" => Ok(Observable::X),
            "x_squared" => Ok(Observable::XSquared),
            "x_cubed" => Ok(Observable::XCubed),
            other => Err(Error::Config(format!(
                "unknown observable '{other}' (catalog: x, x_squared, x_cubed)"
            ))),
        }
    }
}

/// Sample space of a model.
#[derive(Debug, Clone)]
pub enum ModelSpace<T> {
    Discrete { points: Vec<T>, weights: Vec<T> },
    RealLine,
}

/// A Gibbs model: sample space, observables, admissible multiplier box.
#[derive(Clone)]
pub struct GibbsModel<T> {
    pub name: String,
    pub space: ModelSpace<T>,
    pub observables: Vec<Observable>,
    pub q_min: Vec<T>,
    pub q_max: Vec<T>,
    pub quad: QuadratureSpec<T>,
    closed_form_w: Option<ClosedFormW<T>>,
}

/// Closed-form log-partition evaluator attached to a built-in model.
type ClosedFormW<T> = Arc<dyn Fn(&[T]) -> T + Send + Sync>;

impl<T: Real> GibbsModel<T> {
    pub fn new(
        name: impl Into<String>,
        space: ModelSpace<T>,
        observables: Vec<Observable>,
        q_min: Vec<T>,
        q_max: Vec<T>,
    ) -> Result<Self> {
        if observables.is_empty() {
            return Err(Error::Config(
                "a model needs at least one observable".into(),
            ));
        }
        if q_min.len() != observables.len() || q_max.len() != observables.len() {
            return Err(Error::Config(
                "q-domain box must match the observable count".into(),
            ));
        }
        if q_min.iter().zip(&q_max).any(|(lo, hi)| !(*hi > *lo)) {
            return Err(Error::Config("q-domain box must be non-empty".into()));
        }
        let quad = match &space {
            ModelSpace::Discrete { points, weights } => {
                if points.len() != weights.len() || points.is_empty() {
                    return Err(Error::Config(
                        "discrete space needs matching, non-empty points and weights".into(),
                    ));
                }
                QuadratureSpec::discrete()
            }
            ModelSpace::RealLine => {
                let squares = observables
                    .iter()
                    .filter(|o| **o == Observable::XSquared)
                    .count();
                if squares != 1 {
                    return Err(Error::Config(
                        "real-line models need exactly one x_squared observable".into(),
                    ));
                }
                if observables.contains(&Observable::XCubed) {
                    return Err(Error::Config(
                        "x_cubed diverges on the real line and is not admissible there".into(),
                    ));
                }
                let idx = observables
                    .iter()
                    .position(|o| *o == Observable::XSquared)
                    .unwrap();
                if !(q_max[idx] < T::zero()) {
                    return Err(Error::Config(
                        "the x_squared multiplier must stay negative on the real line".into(),
                    ));
                }
                QuadratureSpec::adaptive()
            }
        };
        Ok(GibbsModel {
            name: name.into(),
            space,
            observables,
            q_min,
            q_max,
            quad,
            closed_form_w: None,
        })
    }

    pub fn with_closed_form_w(mut self, w: impl Fn(&[T]) -> T + Send + Sync + 'static) -> Self {
        self.closed_form_w = Some(Arc::new(w));
        self
    }

    /// Switches the evaluation route (adaptive quadrature, discrete sum, or
    /// the registered closed form).
    pub fn with_quad_kind(mut self, kind: QuadKind) -> Self {
        self.quad.kind = kind;
        self
    }

    /// Number of Lagrange multipliers `n`.
    pub fn n_params(&self) -> usize {
        self.observables.len()
    }

    /// The registered closed-form log-partition, if any (oracle route).
    pub fn closed_form_w(&self, q: &[T]) -> Option<T> {
        self.closed_form_w.as_ref().map(|f| f(q))
    }

    fn check_q(&self, q: &[T]) -> Result<()> {
        if q.len() != self.n_params() {
            return Err(Error::Contract(format!(
                "model has {} multipliers, got {}",
                self.n_params(),
                q.len()
            )));
        }
        for (a, (&lo, &hi)) in self.q_min.iter().zip(&self.q_max).enumerate() {
            if !(q[a] >= lo && q[a] <= hi) {
                return Err(Error::Domain(format!(
                    "q[{a}] = {} outside the admissible box [{lo}, {hi}]",
                    q[a]
                )));
            }
        }
        Ok(())
    }

    fn exponent(&self, q: &[T], x: T) -> T {
        self.observables
            .iter()
            .zip(q)
            .map(|(obs, &qa)| qa * obs.eval(x))
            .sum()
    }

    /// Truncation window for real-line integrals: the Gaussian completion of
    /// the quadratic part, widened to `truncation` standard deviations.
    fn window(&self, q: &[T]) -> Result<(T, T)> {
        let idx = self
            .observables
            .iter()
            .position(|o| *o == Observable::XSquared)
            .ok_or_else(|| Error::Domain("real-line model lacks a quadratic observable".into()))?;
        let q2 = q[idx];
        if !(q2 < -lit::<T>(1e-9)) {
            return Err(Error::Domain(
                "quadratic multiplier must be negative".into(),
            ));
        }
        let q1 = self
            .observables
            .iter()
            .position(|o| *o == Observable::X)
            .map(|i| q[i])
            .unwrap_or_else(T::zero);
        let center = -q1 / (q2 + q2);
        let sigma = T::one() / (-(q2 + q2)).sqrt();
        let width = self.quad.truncation * sigma;
        Ok((center - width, center + width))
    }

    fn sample_space(&self, q: &[T]) -> Result<SampleSpace<T>> {
        match &self.space {
            ModelSpace::Discrete { points, weights } => Ok(SampleSpace::Discrete {
                points: points.clone(),
                weights: weights.clone(),
            }),
            ModelSpace::RealLine => {
                let (lo, hi) = self.window(q)?;
                Ok(SampleSpace::Interval { lo, hi })
            }
        }
    }

    /// Log-partition `w(q) = ln integral exp(q^a F_a)`, evaluated with a
    /// peak shift for overflow safety.
    pub fn log_partition(&self, q: &[T]) -> Result<T> {
        self.check_q(q)?;
        if self.quad.kind == QuadKind::ClosedForm {
            return self
                .closed_form_w(q)
                .ok_or_else(|| Error::Config("model has no closed-form log-partition".into()));
        }
        let space = self.sample_space(q)?;
        let shift = match &space {
            SampleSpace::Discrete { points, .. } => points
                .iter()
                .map(|&x| self.exponent(q, x))
                .fold(T::neg_infinity(), T::max),
            SampleSpace::Interval { lo, hi } => {
                // the exponent peaks at the Gaussian center, i.e. mid-window
                self.exponent(q, (*lo + *hi) * half())
            }
        };
        let integral = integrate(&space, &self.quad, &|x| (self.exponent(q, x) - shift).exp())?;
        if !(integral > T::zero()) {
            return Err(Error::Evaluation(
                "partition integral is not positive".into(),
            ));
        }
        Ok(shift + integral.ln())
    }

    /// Normalized-density expectation of `f`.
    fn expectation(&self, q: &[T], w: T, f: &dyn Fn(T) -> T) -> Result<T> {
        let space = self.sample_space(q)?;
        integrate(&space, &self.quad, &|x| {
            f(x) * (self.exponent(q, x) - w).exp()
        })
    }

    /// Log-partition by the numerical route even when the model is switched
    /// to its closed form (moments always integrate the actual density).
    fn log_partition_numeric(&self, q: &[T]) -> Result<T> {
        if self.quad.kind == QuadKind::ClosedForm {
            let mut numeric = self.clone();
            numeric.quad.kind = match self.space {
                ModelSpace::Discrete { .. } => QuadKind::DiscreteSum,
                ModelSpace::RealLine => QuadKind::AdaptiveInterval,
            };
            numeric.log_partition(q)
        } else {
            self.log_partition(q)
        }
    }

    /// Mean observables `p_a = <F_a>`.
    pub fn mean_observables(&self, q: &[T]) -> Result<Vec<T>> {
        self.check_q(q)?;
        let w = self.log_partition_numeric(q)?;
        self.observables
            .iter()
            .map(|obs| self.expectation(q, w, &|x| obs.eval(x)))
            .collect()
    }

    /// Centered second moments `c_ab = <(F_a - p_a)(F_b - p_b)>`.
    pub fn covariance_matrix(&self, q: &[T]) -> Result<Mat<T>> {
        self.check_q(q)?;
        let w = self.log_partition_numeric(q)?;
        let p = self.mean_observables(q)?;
        let n = self.n_params();
        let mut c = Mat::zeros(n, n);
        for a in 0..n {
            for b in a..n {
                let (fa, fb) = (self.observables[a], self.observables[b]);
                let (pa, pb) = (p[a], p[b]);
                let value = self.expectation(q, w, &|x| (fa.eval(x) - pa) * (fb.eval(x) - pb))?;
                c[(a, b)] = value;
                c[(b, a)] = value;
            }
        }
        Ok(c)
    }

    /// Raw second moments `<F_a F_b>`.
    fn raw_second_moments(&self, q: &[T]) -> Result<Mat<T>> {
        let w = self.log_partition_numeric(q)?;
        let n = self.n_params();
        let mut m = Mat::zeros(n, n);
        for a in 0..n {
            for b in a..n {
                let (fa, fb) = (self.observables[a], self.observables[b]);
                let value = self.expectation(q, w, &|x| fa.eval(x) * fb.eval(x))?;
                m[(a, b)] = value;
                m[(b, a)] = value;
            }
        }
        Ok(m)
    }

    /// Finite-difference gradient of the log-partition (oracle for `p`).
    pub fn log_partition_gradient_fd(&self, q: &[T]) -> Result<Vec<T>> {
        let scheme = StepScheme::quadrature_backed();
        (0..self.n_params())
            .map(|a| partial_derivative(&|qs: &[T]| self.log_partition(qs), q, a, &scheme))
            .collect()
    }

    /// Finite-difference Hessian of the log-partition (oracle for the
    /// covariance).
    pub fn log_partition_hessian_fd(&self, q: &[T]) -> Result<Mat<T>> {
        let scheme = StepScheme::second_order();
        let n = self.n_params();
        let mut h = Mat::zeros(n, n);
        for a in 0..n {
            for b in a..n {
                let value = second_partial_derivative(
                    &|qs: &[T]| self.log_partition(qs),
                    q,
                    a,
                    b,
                    &scheme,
                )?;
                h[(a, b)] = value;
                h[(b, a)] = value;
            }
        }
        Ok(h)
    }

    /// Control-manifold metric in `(w, q)` coordinates:
    /// blocks `[[1, -p_a], [-p_a, c_ab + p_a p_b]]`.
    pub fn fisher_rao_control_metric(&self, q: &[T]) -> Result<Mat<T>> {
        self.check_q(q)?;
        let p = self.mean_observables(q)?;
        let c = self.covariance_matrix(q)?;
        let n = self.n_params();
        let mut g = Mat::zeros(n + 1, n + 1);
        g[(0, 0)] = T::one();
        for a in 0..n {
            g[(0, 1 + a)] = -p[a];
            g[(1 + a, 0)] = -p[a];
            for b in 0..n {
                g[(1 + a, 1 + b)] = c[(a, b)] + p[a] * p[b];
            }
        }
        Ok(g)
    }

    /// Jacobian of the control embedding `(w, q) -> (w, q, p(q))`, with the
    /// momentum rows differentiated numerically.
    fn control_embedding_jacobian(&self, q: &[T]) -> Result<Mat<T>> {
        let n = self.n_params();
        let scheme = StepScheme::quadrature_backed();
        let mut jac = Mat::zeros(2 * n + 1, n + 1);
        jac[(0, 0)] = T::one();
        for a in 0..n {
            jac[(1 + a, 1 + a)] = T::one();
        }
        for b in 0..n {
            for a in 0..n {
                jac[(1 + n + b, 1 + a)] = partial_derivative(
                    &|qs: &[T]| Ok(self.mean_observables(qs)?[b]),
                    q,
                    a,
                    &scheme,
                )?;
            }
        }
        Ok(jac)
    }

    /// Pullback of the phase-space metric through the control embedding,
    /// with a finite-difference tangent map (independent of the block
    /// formula above).
    pub fn fisher_rao_pullback(&self, q: &[T]) -> Result<Mat<T>> {
        self.check_q(q)?;
        let x = self.legendre_embed(q)?;
        let g = crate::geometry::coordinate_metric_at(&x);
        let jac = self.control_embedding_jacobian(q)?;
        Ok(jac.transpose().mul(&g).mul(&jac))
    }

    /// Pullback of the contact form through the control embedding; equals the
    /// mean entropy differential componentwise.
    pub fn pullback_eta_control(&self, q: &[T]) -> Result<Vec<T>> {
        self.check_q(q)?;
        let x = self.legendre_embed(q)?;
        let eta = crate::geometry::contact_form_at(&x);
        let jac = self.control_embedding_jacobian(q)?;
        Ok((0..self.n_params() + 1)
            .map(|i| (0..x.dim()).map(|mu| eta[mu] * jac[(mu, i)]).sum())
            .collect())
    }

    /// First and second moments of the microscopic entropy differential.
    pub fn entropy_differential(&self, q: &[T]) -> Result<EntropyMoments<T>> {
        self.check_q(q)?;
        let p = self.mean_observables(q)?;
        let c = self.covariance_matrix(q)?;
        let raw = self.raw_second_moments(q)?;
        let n = self.n_params();
        let mut first = Vec::with_capacity(n + 1);
        first.push(T::one());
        for a in 0..n {
            first.push(-p[a]);
        }
        // <(ds)^2> from raw moments of d ln rho over (dw, dq^a)
        let mut second = Mat::zeros(n + 1, n + 1);
        second[(0, 0)] = T::one();
        for a in 0..n {
            second[(0, 1 + a)] = -p[a];
            second[(1 + a, 0)] = -p[a];
            for b in 0..n {
                second[(1 + a, 1 + b)] = raw[(a, b)];
            }
        }
        Ok(EntropyMoments {
            first,
            variance: c,
            second,
        })
    }

    /// Relative entropy of the `q_to` member against the `q_from` reference,
    /// as the integral `integral rho_from ln(rho_from / rho_to)`.
    pub fn relative_entropy(&self, q_from: &[T], q_to: &[T]) -> Result<T> {
        self.check_q(q_from)?;
        self.check_q(q_to)?;
        let w_from = self.log_partition_numeric(q_from)?;
        let w_to = self.log_partition_numeric(q_to)?;
        let n = self.n_params();
        self.expectation(q_from, w_from, &|x| {
            let mut v = w_to - w_from;
            for a in 0..n {
                v += (q_from[a] - q_to[a]) * self.observables[a].eval(x);
            }
            v
        })
    }

    /// Relative entropy in Bregman form,
    /// `w(q_to) - w(q_from) - (q_to - q_from) . p(q_from)`.
    pub fn relative_entropy_bregman(&self, q_from: &[T], q_to: &[T]) -> Result<T> {
        self.check_q(q_from)?;
        self.check_q(q_to)?;
        let w_from = self.log_partition_numeric(q_from)?;
        let w_to = self.log_partition_numeric(q_to)?;
        let p = self.mean_observables(q_from)?;
        let mut v = w_to - w_from;
        for a in 0..self.n_params() {
            v -= (q_to[a] - q_from[a]) * p[a];
        }
        Ok(v)
    }

    /// Relative entropy against its quadratic model
    /// `(1/2) delta^T c(q0) delta`; the residual is the third-order
    /// remainder.
    pub fn kl_quadratic_residual(&self, q0: &[T], delta: &[T]) -> Result<KlQuadratic<T>> {
        if delta.len() != self.n_params() {
            return Err(Error::Contract("displacement has wrong dimension".into()));
        }
        let shifted: Vec<T> = q0.iter().zip(delta).map(|(&q, &d)| q + d).collect();
        let kl = self.relative_entropy(q0, &shifted)?;
        let c = self.covariance_matrix(q0)?;
        let quadratic = half::<T>()
            * (0..delta.len())
                .map(|a| {
                    let row: T = (0..delta.len()).map(|b| c[(a, b)] * delta[b]).sum();
                    delta[a] * row
                })
                .sum();
        Ok(KlQuadratic {
            kl,
            quadratic,
            residual: kl - quadratic,
        })
    }

    /// Equilibrium embedding `q -> (w(q), q, p(q))` into the phase space.
    pub fn legendre_embed(&self, q: &[T]) -> Result<ChartPoint<T>> {
        self.check_q(q)?;
        let w = self.log_partition_numeric(q)?;
        let p = self.mean_observables(q)?;
        ChartPoint::new(w, q.to_vec(), p)
    }

    /// Components of the contact form pulled back through the equilibrium
    /// embedding (the first-law residual; vanishes on-shell).
    pub fn pullback_eta_legendre(&self, q: &[T]) -> Result<Vec<T>> {
        self.check_q(q)?;
        let p = self.mean_observables(q)?;
        let scheme = StepScheme::quadrature_backed();
        (0..self.n_params())
            .map(|a| {
                let dw = partial_derivative(&|qs: &[T]| self.log_partition(qs), q, a, &scheme)?;
                Ok(dw - p[a])
            })
            .collect()
    }

    /// Metric induced on the equilibrium manifold: pullback of the
    /// phase-space metric through the equilibrium embedding with a
    /// finite-difference tangent map.
    pub fn induced_metric(&self, q: &[T]) -> Result<InducedMetric<T>> {
        self.check_q(q)?;
        let x = self.legendre_embed(q)?;
        let g = crate::geometry::coordinate_metric_at(&x);
        let n = self.n_params();
        let scheme = StepScheme::quadrature_backed();
        let mut jac = Mat::zeros(2 * n + 1, n);
        for a in 0..n {
            jac[(0, a)] = partial_derivative(&|qs: &[T]| self.log_partition(qs), q, a, &scheme)?;
            jac[(1 + a, a)] = T::one();
            for b in 0..n {
                jac[(1 + n + b, a)] = partial_derivative(
                    &|qs: &[T]| Ok(self.mean_observables(qs)?[b]),
                    q,
                    a,
                    &scheme,
                )?;
            }
        }
        Ok(InducedMetric {
            components: jac.transpose().mul(&g).mul(&jac),
            ruppeiner_sign: -1,
        })
    }

    /// Local-equilibrium condition: determinant of the covariance (equal to
    /// the Hessian of `w`) against a degeneracy tolerance.
    pub fn invertibility_check(&self, q: &[T]) -> Result<InvertibilityCheck<T>> {
        let c = self.covariance_matrix(q)?;
        let det = c.det();
        Ok(InvertibilityCheck {
            det,
            ok: det.abs() > lit(1e-10),
        })
    }

    /// Evenly spaced interior grid over the admissible box: `points` nodes
    /// for one multiplier, a `points/3 x 3` grid for two.
    pub fn q_grid(&self, points: usize) -> Vec<Vec<T>> {
        let margin = lit::<T>(0.05);
        let axis = |lo: T, hi: T, m: usize| -> Vec<T> {
            let pad = (hi - lo) * margin;
            let (lo, hi) = (lo + pad, hi - pad);
            (0..m)
                .map(|k| lo + (hi - lo) * lit::<T>(k as f64 / (m.max(2) - 1) as f64))
                .collect()
        };
        match self.n_params() {
            1 => axis(self.q_min[0], self.q_max[0], points)
                .into_iter()
                .map(|q| vec![q])
                .collect(),
            2 => {
                let rows = (points / 3).max(2);
                let first = axis(self.q_min[0], self.q_max[0], rows);
                let second = axis(self.q_min[1], self.q_max[1], 3);
                let mut grid = Vec::with_capacity(rows * 3);
                for &a in &first {
                    for &b in &second {
                        grid.push(vec![a, b]);
                    }
                }
                grid
            }
            _ => vec![self
                .q_min
                .iter()
                .zip(&self.q_max)
                .map(|(&lo, &hi)| (lo + hi) * half())
                .collect()],
        }
    }
}

/// A point `(w, q)` of the control manifold.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlPoint<T> {
    pub w: T,
    pub q: Vec<T>,
}

/// An equilibrium state: multipliers, free entropy, mean observables, and
/// their covariance.
#[derive(Debug, Clone)]
pub struct EquilibriumState<T> {
    pub q: Vec<T>,
    pub w: T,
    pub p: Vec<T>,
    pub cov: Mat<T>,
}

impl<T: Real> GibbsModel<T> {
    /// Validates `q` against the admissible box and pairs it with a free
    /// `w`-coordinate on the control manifold.
    pub fn control_point(&self, w: T, q: &[T]) -> Result<ControlPoint<T>> {
        self.check_q(q)?;
        Ok(ControlPoint { w, q: q.to_vec() })
    }

    /// The control embedding `(w, q) -> (w, q, p(q))`: the `w`-coordinate
    /// stays independent, only the momenta come from the model.
    pub fn control_embed(&self, control: &ControlPoint<T>) -> Result<ChartPoint<T>> {
        self.check_q(&control.q)?;
        let p = self.mean_observables(&control.q)?;
        ChartPoint::new(control.w, control.q.clone(), p)
    }

    /// Bundles the equilibrium data at `q`.
    pub fn equilibrium_state(&self, q: &[T]) -> Result<EquilibriumState<T>> {
        Ok(EquilibriumState {
            q: q.to_vec(),
            w: self.log_partition_numeric(q)?,
            p: self.mean_observables(q)?,
            cov: self.covariance_matrix(q)?,
        })
    }
}

/// Moments of the entropy differential over the control manifold.
#[derive(Debug, Clone)]
pub struct EntropyMoments<T> {
    /// `<ds>` components over `(dw, dq^a)`: `(1, -p_a)`.
    pub first: Vec<T>,
    /// `Var(ds)` as the quadratic form `c_ab dq^a dq^b`.
    pub variance: Mat<T>,
    /// Raw second moment `<(ds)^2>` over `(dw, dq^a)`.
    pub second: Mat<T>,
}

/// Relative entropy against its quadratic approximation.
#[derive(Debug, Clone, Copy)]
pub struct KlQuadratic<T> {
    pub kl: T,
    pub quadratic: T,
    pub residual: T,
}

/// Induced equilibrium metric with the fluctuation-theory sign flag: when the
/// fundamental function is entropy-like, the conventional fluctuation metric
/// is `ruppeiner_sign` times this one.
#[derive(Debug, Clone)]
pub struct InducedMetric<T> {
    pub components: Mat<T>,
    pub ruppeiner_sign: i8,
}

/// Local-equilibrium determinant check.
#[derive(Debug, Clone, Copy)]
pub struct InvertibilityCheck<T> {
    pub det: T,
    pub ok: bool,
}

/// Two-state model with observable `x` on `{-1, +1}`;
/// `w(q) = ln(2 cosh q)`.
pub fn two_level<T: Real>() -> GibbsModel<T> {
    GibbsModel::new(
        "two_level",
        ModelSpace::Discrete {
            points: vec![-T::one(), T::one()],
            weights: vec![T::one(), T::one()],
        },
        vec![Observable::X],
        vec![lit(-2.0)],
        vec![lit(2.0)],
    )
    .expect("built-in model is valid")
    .with_closed_form_w(|q: &[T]| (lit::<T>(2.0) * q[0].cosh()).ln())
}

/// Gaussian model with observable `x^2` on the real line (`q < 0`);
/// `w(q) = (1/2) ln(pi / (-q))`, so embedded momenta stay positive.
pub fn gaussian_quadratic<T: Real>() -> GibbsModel<T> {
    GibbsModel::new(
        "gaussian_quadratic",
        ModelSpace::RealLine,
        vec![Observable::XSquared],
        vec![lit(-3.0)],
        vec![lit(-0.2)],
    )
    .expect("built-in model is valid")
    .with_closed_form_w(|q: &[T]| half::<T>() * (lit::<T>(std::f64::consts::PI) / (-q[0])).ln())
}

/// Two-parameter Gaussian model with observables `x` and `x^2`;
/// `w(q1, q2) = (1/2) ln(pi / (-q2)) + q1^2 / (-4 q2)`.
pub fn gaussian_two_param<T: Real>() -> GibbsModel<T> {
    GibbsModel::new(
        "gaussian_two_param",
        ModelSpace::RealLine,
        vec![Observable::X, Observable::XSquared],
        vec![lit(-1.5), lit(-3.0)],
        vec![lit(1.5), lit(-0.3)],
    )
    .expect("built-in model is valid")
    .with_closed_form_w(|q: &[T]| {
        let four = lit::<T>(4.0);
        half::<T>() * (lit::<T>(std::f64::consts::PI) / (-q[1])).ln() + q[0] * q[0] / (-four * q[1])
    })
}

/// Looks up a built-in model by name.
pub fn by_name<T: Real>(name: &str) -> Option<GibbsModel<T>> {
    match name {
        "two_level" => Some(two_level()),
        "gaussian_quadratic" => Some(gaussian_quadratic()),
        "gaussian_two_param" => Some(gaussian_two_param()),
        _ => None,
    }
}

/// Names of all built-in models.
pub const BUILT_IN_MODELS: [&str; 3] = ["two_level", "gaussian_quadratic", "gaussian_two_param"];

#[derive(Debug, Deserialize)]
struct ModelConfig {
    name: String,
    space: String,
    observables: Vec<String>,
    q_min: Vec<f64>,
    q_max: Vec<f64>,
    #[serde(default)]
    points: Vec<f64>,
    #[serde(default)]
    weights: Vec<f64>,
}

impl<T: Real> GibbsModel<T> {
    /// Builds a model from its declarative TOML description:
    ///
    /// ```toml
    /// name = "demo"
    /// space = "discrete"            # or "real_line"
    /// observables = ["x"]           # catalog: x, x_squared, x_cubed
    /// q_min = [-1.0]
    /// q_max = [1.0]
    /// points = [-1.0, 1.0]          # discrete spaces only
    /// weights = [1.0, 1.0]          # optional, defaults to 1
    /// ```
    pub fn from_config_str(text: &str) -> Result<Self> {
        let config: ModelConfig =
            toml::from_str(text).map_err(|e| Error::Config(format!("bad model config: {e}")))?;
        let observables = config
            .observables
            .iter()
            .map(|s| Observable::parse(s))
            .collect::<Result<Vec<_>>>()?;
        let space = match config.space.as_str() {
            "discrete" => {
                let points: Vec<T> = config.points.iter().map(|&x| lit(x)).collect();
                let weights: Vec<T> = if config.weights.is_empty() {
                    vec![T::one(); points.len()]
                } else {
                    config.weights.iter().map(|&x| lit(x)).collect()
                };
                ModelSpace::Discrete { points, weights }
            }
            "real_line" => ModelSpace::RealLine,
            other => {
                return Err(Error::Config(format!(
                    "unknown space '{other}' (expected 'discrete' or 'real_line')"
                )))
            }
        };
        GibbsModel::new(
            config.name,
            space,
            observables,
            config.q_min.iter().map(|&x| lit(x)).collect(),
            config.q_max.iter().map(|&x| lit(x)).collect(),
        )
    }
}
