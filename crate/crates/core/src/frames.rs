//! Frames and coframes on the phase-space chart.
//!
//! Three frames are distinguished. All of them carry the Reeb field as their
//! zeroth member and split the remaining 2n directions into two blocks of n:
//!
//! * `coordinate` — the chart basis `(d/dw, d/dq^a, d/dp_a)`;
//! * `heisenberg` — `(xi, Q_a, P^a)` with `Q_a = d/dq^a + p_a d/dw` and
//!   `P^a = d/dp_a`, whose only non-trivial brackets are `[P^a, Q_b] =
//!   delta^a_b xi`;
//! * `canonical` — the pseudo-orthonormal basis `(xi, e+_a, e-_a)` built from
//!   square roots of the momenta, defined on the region `p_a > 0`.
//!
//! Frame matrices are column-major in the frame label: column `i` holds the
//! coordinate components of the `i`-th frame vector.

use std::sync::Arc;

use crate::chart::ChartPoint;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Tensor3};
use crate::scalar::{half, two, Real};

/// The three frame families on the chart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameKind {
    Coordinate,
    Heisenberg,
    Canonical,
}

/// Coframe families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoframeKind {
    Coordinate,
    Orthonormal,
}

/// A frame: 2n+1 vector fields given by coefficient functions over the
/// coordinate basis.
#[derive(Debug, Clone, Copy)]
pub struct FrameField {
    pub kind: FrameKind,
    pub n: usize,
}

/// Determinant magnitude below which a frame matrix counts as singular.
pub const FRAME_DET_TOL: f64 = 1e-12;

impl FrameField {
    pub fn new(kind: FrameKind, n: usize) -> Self {
        FrameField { kind, n }
    }

    pub fn dim(&self) -> usize {
        2 * self.n + 1
    }

    fn check_point<T: Real>(&self, x: &ChartPoint<T>) -> Result<()> {
        if x.n() != self.n {
            return Err(Error::Contract(format!(
                "frame has n = {}, point has n = {}",
                self.n,
                x.n()
            )));
        }
        if self.kind == FrameKind::Canonical {
            x.require_positive_p()?;
        }
        Ok(())
    }

    /// Coefficient matrix at `x`; column `i` is frame vector `i`.
    pub fn matrix_at<T: Real>(&self, x: &ChartPoint<T>) -> Result<Mat<T>> {
        self.check_point(x)?;
        let n = self.n;
        let dim = self.dim();
        let mut e = Mat::zeros(dim, dim);
        match self.kind {
            FrameKind::Coordinate => {
                e = Mat::identity(dim);
            }
            FrameKind::Heisenberg => {
                e[(0, 0)] = T::one();
                for a in 0..n {
                    // Q_a = d/dq^a + p_a d/dw
                    e[(0, 1 + a)] = x.p[a];
                    e[(1 + a, 1 + a)] = T::one();
                    // P^a = d/dp_a
                    e[(1 + n + a, 1 + n + a)] = T::one();
                }
            }
            FrameKind::Canonical => {
                e[(0, 0)] = T::one();
                for a in 0..n {
                    let root = x.p[a].sqrt();
                    let inv_root = T::one() / root;
                    // e+_a = sqrt(p) d/dw + (1/sqrt(p)) d/dq^a + sqrt(p) d/dp_a
                    e[(0, 1 + a)] = root;
                    e[(1 + a, 1 + a)] = inv_root;
                    e[(1 + n + a, 1 + a)] = root;
                    // e-_a differs in the sign of the d/dp_a component
                    e[(0, 1 + n + a)] = root;
                    e[(1 + a, 1 + n + a)] = inv_root;
                    e[(1 + n + a, 1 + n + a)] = -root;
                }
            }
        }
        let det = e.det();
        if det.abs().to_f64().unwrap_or(0.0) <= FRAME_DET_TOL {
            return Err(Error::SingularFrame {
                det: det.to_f64().unwrap_or(0.0),
            });
        }
        Ok(e)
    }

    /// Coordinate components of frame vector `i` at `x`.
    pub fn vector_at<T: Real>(&self, i: usize, x: &ChartPoint<T>) -> Result<Vec<T>> {
        Ok(self.matrix_at(x)?.column(i))
    }

    /// Frame vector `i` as a reusable field.
    pub fn vector_field<T: Real>(&self, i: usize) -> VectorField<T> {
        let frame = *self;
        VectorField::new(move |x| frame.vector_at(i, x))
    }

    /// Closed-form structure functions `gamma^k_{ij}` with
    /// `[e_i, e_j] = gamma^k_{ij} e_k`; the numerical route lives in
    /// [`crate::geometry::structure_functions_at`].
    pub fn structure_closed_form<T: Real>(&self, x: &ChartPoint<T>) -> Result<Tensor3<T>> {
        self.check_point(x)?;
        let n = self.n;
        let mut gamma = Tensor3::zeros(self.dim());
        match self.kind {
            FrameKind::Coordinate => {}
            FrameKind::Heisenberg => {
                // [P^a, Q_b] = delta^a_b xi
                for a in 0..n {
                    gamma.set(0, 1 + n + a, 1 + a, T::one());
                    gamma.set(0, 1 + a, 1 + n + a, -T::one());
                }
            }
            FrameKind::Canonical => {
                for a in 0..n {
                    let c = -half::<T>() / x.p[a].sqrt();
                    let plus = 1 + a;
                    let minus = 1 + n + a;
                    gamma.set(0, plus, minus, two());
                    gamma.set(0, minus, plus, -two::<T>());
                    gamma.set(plus, plus, minus, c);
                    gamma.set(plus, minus, plus, -c);
                    gamma.set(minus, plus, minus, c);
                    gamma.set(minus, minus, plus, -c);
                }
            }
        }
        Ok(gamma)
    }
}

/// A coframe: 2n+1 one-forms given by coefficient functions over the
/// coordinate cobasis. Row `i` of the matrix is covector `i`.
#[derive(Debug, Clone, Copy)]
pub struct CoframeField {
    pub kind: CoframeKind,
    pub n: usize,
}

impl CoframeField {
    pub fn new(kind: CoframeKind, n: usize) -> Self {
        CoframeField { kind, n }
    }

    pub fn dim(&self) -> usize {
        2 * self.n + 1
    }

    /// Coefficient matrix at `x`; row `i` is coframe covector `i`.
    pub fn matrix_at<T: Real>(&self, x: &ChartPoint<T>) -> Result<Mat<T>> {
        if x.n() != self.n {
            return Err(Error::Contract(format!(
                "coframe has n = {}, point has n = {}",
                self.n,
                x.n()
            )));
        }
        let n = self.n;
        let dim = self.dim();
        match self.kind {
            CoframeKind::Coordinate => Ok(Mat::identity(dim)),
            CoframeKind::Orthonormal => {
                x.require_positive_p()?;
                let mut theta = Mat::zeros(dim, dim);
                // theta^(0) = eta = dw - p_a dq^a
                theta[(0, 0)] = T::one();
                for a in 0..n {
                    theta[(0, 1 + a)] = -x.p[a];
                }
                for a in 0..n {
                    let root = x.p[a].sqrt();
                    let h = half::<T>();
                    // theta+-^(a) = (sqrt(p)/2) dq^a +- (1/(2 sqrt(p))) dp_a
                    theta[(1 + a, 1 + a)] = root * h;
                    theta[(1 + a, 1 + n + a)] = h / root;
                    theta[(1 + n + a, 1 + a)] = root * h;
                    theta[(1 + n + a, 1 + n + a)] = -h / root;
                }
                Ok(theta)
            }
        }
    }
}

/// Pointwise coordinate-component evaluator backing a [`VectorField`].
pub type VectorEval<T> = Arc<dyn Fn(&ChartPoint<T>) -> Result<Vec<T>> + Send + Sync>;

/// A vector field on the chart, given by its coordinate components.
#[derive(Clone)]
pub struct VectorField<T> {
    eval: VectorEval<T>,
}

impl<T: Real> VectorField<T> {
    pub fn new(f: impl Fn(&ChartPoint<T>) -> Result<Vec<T>> + Send + Sync + 'static) -> Self {
        VectorField { eval: Arc::new(f) }
    }

    /// Constant-coefficient field.
    pub fn constant(components: Vec<T>) -> Self {
        Self::new(move |_x| Ok(components.clone()))
    }

    pub fn at(&self, x: &ChartPoint<T>) -> Result<Vec<T>> {
        (self.eval)(x)
    }

    /// The field `x -> M(x) v(x)` obtained by applying a pointwise linear map.
    pub fn mapped(
        &self,
        map: impl Fn(&ChartPoint<T>) -> Result<Mat<T>> + Send + Sync + 'static,
    ) -> Self {
        let inner = self.clone();
        Self::new(move |x| Ok(map(x)?.mul_vec(&inner.at(x)?)))
    }
}

/// Largest `|lhs - rhs|` over two component vectors.
pub fn max_abs_diff<T: Real>(lhs: &[T], rhs: &[T]) -> T {
    lhs.iter()
        .zip(rhs)
        .fold(T::zero(), |m, (&a, &b)| m.max((a - b).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point(n: usize) -> ChartPoint<f64> {
        let q: Vec<f64> = (0..n).map(|a| 0.3 + 0.2 * a as f64).collect();
        let p: Vec<f64> = (0..n).map(|a| 1.0 + 0.5 * a as f64).collect();
        ChartPoint::new(0.7, q, p).unwrap()
    }

    #[test]
    fn orthonormal_coframe_is_dual_to_canonical_frame() {
        for n in 1..=3 {
            let x = point(n);
            let e = FrameField::new(FrameKind::Canonical, n)
                .matrix_at(&x)
                .unwrap();
            let theta = CoframeField::new(CoframeKind::Orthonormal, n)
                .matrix_at(&x)
                .unwrap();
            let prod = theta.mul(&e);
            assert!(
                prod.max_abs_diff(&Mat::identity(2 * n + 1)) < 1e-10,
                "duality defect at n = {n}"
            );
        }
    }

    #[test]
    fn frame_matrices_are_invertible_on_admissible_points() {
        for kind in [
            FrameKind::Coordinate,
            FrameKind::Heisenberg,
            FrameKind::Canonical,
        ] {
            for n in 1..=3 {
                let x = point(n);
                let e = FrameField::new(kind, n).matrix_at(&x).unwrap();
                assert!(e.det().abs() > FRAME_DET_TOL);
            }
        }
    }

    #[test]
    fn canonical_frame_rejects_non_positive_momenta() {
        let x = ChartPoint::new(0.0, vec![0.0], vec![-1.0]).unwrap();
        assert!(FrameField::new(FrameKind::Canonical, 1)
            .matrix_at(&x)
            .is_err());
        // the Heisenberg frame has no such restriction
        assert!(FrameField::new(FrameKind::Heisenberg, 1)
            .matrix_at(&x)
            .is_ok());
    }

    #[test]
    fn dimension_mismatch_is_a_contract_violation() {
        let x = point(2);
        let err = FrameField::new(FrameKind::Coordinate, 1)
            .matrix_at(&x)
            .unwrap_err();
        assert!(matches!(err, crate::error::Error::Contract(_)));
    }
}
