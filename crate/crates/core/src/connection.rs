//! The two connections of the para-contact structure.
//!
//! Symbols follow the ordering `nabla_{e_(i)} e_(j) = Gamma^k_{ji} e_(k)`:
//! in the rank-3 arrays, `get(k, j, i)` is `Gamma^k_{ji}` with the last index
//! naming the differentiation direction.
//!
//! The Levi-Civita connection is evaluated from the Koszul formula using
//! numerically differentiated metric components and structure functions; a
//! closed-form symbol table for the canonical frame serves as the golden
//! cross-check. The adapted connection parallelizing `(eta, xi, Phi, G)` is
//! obtained from the Levi-Civita one by
//!
//! `nabla~_X Y = nabla_X Y + eta(X) Phi(Y) - eta(Y) nabla_X xi + (nabla_X eta)(Y) xi`
//!
//! with `Phi = -nabla xi`, again with a closed-form table as cross-check.

use std::sync::Arc;

use crate::chart::ChartPoint;
use crate::error::{Error, Result};
use crate::frames::{FrameField, FrameKind};
use crate::geometry::{eta_applied, metric_at, TensorComponents};
use crate::linalg::{Mat, Tensor3};
use crate::numerics::{directional_derivative, StepScheme};
use crate::scalar::{half, Real};

/// How a connection's symbols are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectionSource {
    /// Koszul formula with numerical metric derivatives and brackets.
    KoszulNumeric,
    /// Closed-form Levi-Civita table in the canonical frame.
    ClosedFormLeviCivita,
    /// Closed-form adapted-connection table in the canonical frame.
    ClosedFormCanonical,
    /// Adapted connection derived pointwise from a Levi-Civita connection.
    FromLeviCivita,
}

/// Pointwise symbol evaluator backing a [`Connection`].
pub type SymbolEval<T> = Arc<dyn Fn(&ChartPoint<T>) -> Result<Tensor3<T>> + Send + Sync>;

/// A connection on the chart: a frame tag plus a symbol evaluator.
#[derive(Clone)]
pub struct Connection<T> {
    pub frame: FrameField,
    pub source: ConnectionSource,
    eval: SymbolEval<T>,
}

impl<T: Real> Connection<T> {
    pub fn from_fn(
        frame: FrameField,
        source: ConnectionSource,
        f: impl Fn(&ChartPoint<T>) -> Result<Tensor3<T>> + Send + Sync + 'static,
    ) -> Self {
        Connection {
            frame,
            source,
            eval: Arc::new(f),
        }
    }

    /// Symbols `Gamma^k_{ji}` at `x`.
    pub fn symbols_at(&self, x: &ChartPoint<T>) -> Result<Tensor3<T>> {
        (self.eval)(x)
    }
}

/// Koszul evaluation of the Levi-Civita symbols of the phase-space metric in
/// the given frame.
pub fn levi_civita_at<T: Real>(
    x: &ChartPoint<T>,
    frame: &FrameField,
    scheme: &StepScheme<T>,
) -> Result<Tensor3<T>> {
    let dim = frame.dim();
    let e = frame.matrix_at(x)?;
    let g = metric_at(x, frame)?.as_mat();
    let g_inv = g.inverse().map_err(|_| {
        Error::Evaluation("frame metric is singular on the admissible domain".into())
    })?;
    let gamma = crate::geometry::structure_functions_at(frame, x, scheme)?;

    // e_i(g_jk) for every frame direction, via coordinate-axis derivatives
    let frame_copy = *frame;
    let g_entry = move |j: usize, k: usize| {
        move |pt: &ChartPoint<T>| -> Result<T> { Ok(metric_at(pt, &frame_copy)?.as_mat()[(j, k)]) }
    };
    let mut dg = vec![Mat::zeros(dim, dim); dim]; // dg[mu][(j, k)] = d_mu g_jk
    for (mu, dg_mu) in dg.iter_mut().enumerate() {
        for j in 0..dim {
            for k in j..dim {
                let d = directional_derivative(&g_entry(j, k), x, mu, scheme)?;
                dg_mu[(j, k)] = d;
                dg_mu[(k, j)] = d;
            }
        }
    }
    let frame_deriv = |i: usize, j: usize, k: usize| -> T {
        (0..dim).map(|mu| e[(mu, i)] * dg[mu][(j, k)]).sum()
    };
    let bracket_dot = |i: usize, j: usize, k: usize| -> T {
        (0..dim).map(|m| gamma.get(m, i, j) * g[(m, k)]).sum()
    };

    let mut symbols = Tensor3::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            // 2 G(nabla_{e_i} e_j, e_k)
            let rhs: Vec<T> = (0..dim)
                .map(|k| {
                    let metric_terms =
                        frame_deriv(i, j, k) + frame_deriv(j, i, k) - frame_deriv(k, i, j);
                    let bracket_terms =
                        bracket_dot(i, j, k) - bracket_dot(i, k, j) - bracket_dot(j, k, i);
                    (metric_terms + bracket_terms) * half()
                })
                .collect();
            for m in 0..dim {
                let value = (0..dim).map(|k| g_inv[(m, k)] * rhs[k]).sum();
                symbols.set(m, j, i, value);
            }
        }
    }
    Ok(symbols)
}

/// Koszul formula specialized to a frame with constant metric components and
/// constant structure functions (no derivative terms); used for
/// left-invariant frames.
pub fn koszul_constant_frame<T: Real>(g: &Mat<T>, gamma: &Tensor3<T>) -> Result<Tensor3<T>> {
    let dim = g.n_rows();
    let g_inv = g.inverse()?;
    let bracket_dot = |i: usize, j: usize, k: usize| -> T {
        (0..dim).map(|m| gamma.get(m, i, j) * g[(m, k)]).sum()
    };
    let mut symbols = Tensor3::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            let rhs: Vec<T> = (0..dim)
                .map(|k| {
                    (bracket_dot(i, j, k) - bracket_dot(i, k, j) - bracket_dot(j, k, i)) * half()
                })
                .collect();
            for m in 0..dim {
                let value = (0..dim).map(|k| g_inv[(m, k)] * rhs[k]).sum();
                symbols.set(m, j, i, value);
            }
        }
    }
    Ok(symbols)
}

/// Closed-form Levi-Civita symbols in the canonical frame.
pub fn levi_civita_closed_form<T: Real>(x: &ChartPoint<T>) -> Result<Tensor3<T>> {
    x.require_positive_p()?;
    let n = x.n();
    let mut symbols = Tensor3::zeros(x.dim());
    for a in 0..n {
        let plus = 1 + a;
        let minus = 1 + n + a;
        let c = half::<T>() / x.p[a].sqrt();
        symbols.set(0, minus, plus, T::one());
        symbols.set(0, plus, minus, -T::one());
        symbols.set(plus, 0, minus, T::one());
        symbols.set(plus, minus, 0, T::one());
        symbols.set(minus, 0, plus, T::one());
        symbols.set(minus, plus, 0, T::one());
        symbols.set(plus, minus, minus, c);
        symbols.set(minus, plus, minus, c);
        symbols.set(plus, minus, plus, -c);
        symbols.set(minus, plus, plus, -c);
    }
    Ok(symbols)
}

/// Closed-form adapted-connection symbols in the canonical frame.
pub fn canonical_closed_form<T: Real>(x: &ChartPoint<T>) -> Result<Tensor3<T>> {
    x.require_positive_p()?;
    let n = x.n();
    let mut symbols = Tensor3::zeros(x.dim());
    for a in 0..n {
        let plus = 1 + a;
        let minus = 1 + n + a;
        let c = half::<T>() / x.p[a].sqrt();
        symbols.set(plus, minus, plus, -c);
        symbols.set(plus, minus, minus, c);
        symbols.set(minus, plus, plus, -c);
        symbols.set(minus, plus, minus, c);
    }
    Ok(symbols)
}

/// Transforms Levi-Civita symbols into the adapted connection at `x`:
///
/// `Gamma~^k_{ji} = Gamma^k_{ji} + eta_i Phi^k_j - eta_j Gamma^k_{0i}
///  + delta^k_0 [e_i(eta_j) - eta_m Gamma^m_{ji}]`
///
/// with `Phi^k_j = -Gamma^k_{0j}` and `eta_i = eta(e_i)`. Valid in any frame
/// whose zeroth member is the Reeb field.
pub fn canonical_from_levi_civita_at<T: Real>(
    lc: &Tensor3<T>,
    x: &ChartPoint<T>,
    frame: &FrameField,
    scheme: &StepScheme<T>,
) -> Result<Tensor3<T>> {
    let dim = frame.dim();
    let e = frame.matrix_at(x)?;
    let eta: Vec<T> = (0..dim).map(|i| eta_applied(x, &e.column(i))).collect();

    // e_i(eta_j) as directional derivatives of the frame components of eta
    let frame_copy = *frame;
    let eta_component = move |j: usize| {
        move |pt: &ChartPoint<T>| -> Result<T> {
            Ok(eta_applied(pt, &frame_copy.matrix_at(pt)?.column(j)))
        }
    };
    let mut d_eta_comp = Mat::<T>::zeros(dim, dim); // d_eta_comp[(i, j)] = e_i(eta_j)
    for j in 0..dim {
        for mu in 0..dim {
            let d = directional_derivative(&eta_component(j), x, mu, scheme)?;
            for i in 0..dim {
                d_eta_comp[(i, j)] += e[(mu, i)] * d;
            }
        }
    }

    let mut out = Tensor3::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            let nabla_eta: T =
                d_eta_comp[(i, j)] - (0..dim).map(|m| eta[m] * lc.get(m, j, i)).sum::<T>();
            for k in 0..dim {
                let mut value =
                    lc.get(k, j, i) - eta[i] * lc.get(k, 0, j) - eta[j] * lc.get(k, 0, i);
                if k == 0 {
                    value += nabla_eta;
                }
                out.set(k, j, i, value);
            }
        }
    }
    Ok(out)
}

/// Adapted connection symbols at `x`, built by applying the transform above
/// to the Koszul-evaluated Levi-Civita connection.
pub fn canonical_connection_at<T: Real>(
    x: &ChartPoint<T>,
    frame: &FrameField,
    scheme: &StepScheme<T>,
) -> Result<Tensor3<T>> {
    let lc = levi_civita_at(x, frame, scheme)?;
    canonical_from_levi_civita_at(&lc, x, frame, scheme)
}

/// Levi-Civita connection with Koszul-evaluated symbols.
pub fn levi_civita<T: Real>(frame: FrameField, scheme: StepScheme<T>) -> Connection<T> {
    Connection::from_fn(frame, ConnectionSource::KoszulNumeric, move |x| {
        levi_civita_at(x, &frame, &scheme)
    })
}

/// Levi-Civita connection backed by the canonical-frame symbol table.
pub fn levi_civita_table<T: Real>(n: usize) -> Connection<T> {
    let frame = FrameField::new(FrameKind::Canonical, n);
    Connection::from_fn(
        frame,
        ConnectionSource::ClosedFormLeviCivita,
        levi_civita_closed_form,
    )
}

/// Adapted connection derived pointwise from the Koszul Levi-Civita route.
pub fn canonical_connection<T: Real>(frame: FrameField, scheme: StepScheme<T>) -> Connection<T> {
    Connection::from_fn(frame, ConnectionSource::FromLeviCivita, move |x| {
        canonical_connection_at(x, &frame, &scheme)
    })
}

/// Adapted connection backed by the canonical-frame symbol table.
pub fn canonical_table<T: Real>(n: usize) -> Connection<T> {
    let frame = FrameField::new(FrameKind::Canonical, n);
    Connection::from_fn(
        frame,
        ConnectionSource::ClosedFormCanonical,
        canonical_closed_form,
    )
}

/// Torsion components `T^k_{ij} = Gamma^k_{ji} - Gamma^k_{ij} - gamma^k_{ij}`
/// in the connection's frame; `gamma` are numerical structure functions.
pub fn torsion_at<T: Real>(
    conn: &Connection<T>,
    x: &ChartPoint<T>,
    scheme: &StepScheme<T>,
) -> Result<Tensor3<T>> {
    let symbols = conn.symbols_at(x)?;
    let gamma = crate::geometry::structure_functions_at(&conn.frame, x, scheme)?;
    let dim = symbols.dim();
    let mut torsion = Tensor3::zeros(dim);
    for k in 0..dim {
        for i in 0..dim {
            for j in 0..dim {
                torsion.set(
                    k,
                    i,
                    j,
                    symbols.get(k, j, i) - symbols.get(k, i, j) - gamma.get(k, i, j),
                );
            }
        }
    }
    Ok(torsion)
}

/// The almost-para-contact tensor from its defining covariant derivative,
/// `Phi = -nabla xi`: frame components `Phi^k_j = -Gamma^k_{0j}` of the
/// Koszul-evaluated Levi-Civita connection. The closed form
/// [`crate::geometry::phi_closed_form_at`] is the golden cross-check.
pub fn phi_at<T: Real>(
    x: &ChartPoint<T>,
    frame: &FrameField,
    scheme: &StepScheme<T>,
) -> Result<TensorComponents<T>> {
    let lc = levi_civita_at(x, frame, scheme)?;
    let dim = frame.dim();
    let m = Mat::from_fn(dim, dim, |k, j| -lc.get(k, 0, j));
    Ok(TensorComponents::from_mat(
        (1, 1),
        frame.kind,
        &m,
        x.clone(),
    ))
}

/// Contraction `eta_k T^k_{ij}`, the part of the torsion along the Reeb
/// direction; useful for checking `T = d eta (x) xi`.
pub fn torsion_vertical_part<T: Real>(
    torsion: &Tensor3<T>,
    x: &ChartPoint<T>,
    frame: &FrameField,
) -> Result<Mat<T>> {
    let dim = frame.dim();
    let e = frame.matrix_at(x)?;
    let eta: Vec<T> = (0..dim).map(|i| eta_applied(x, &e.column(i))).collect();
    Ok(Mat::from_fn(dim, dim, |i, j| {
        (0..dim).map(|k| eta[k] * torsion.get(k, i, j)).sum()
    }))
}
