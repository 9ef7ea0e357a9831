//! Curvature of a connection in a non-coordinate frame.
//!
//! Components follow
//!
//! `R^i_{jkl} = e_(l)(Gamma^i_{jk}) - e_(k)(Gamma^i_{jl})
//!  + Gamma^m_{jk} Gamma^i_{ml} - Gamma^m_{jl} Gamma^i_{mk}
//!  + gamma^m_{kl} Gamma^i_{jm}`,
//!
//! where the frame-derivative terms apply the frame vectors' coordinate
//! coefficients to finite-difference derivatives of the symbol functions.
//! Under this ordering the Ricci tensor is the contraction
//! `Ric_{jl} = R^i_{jli}`.

use crate::chart::ChartPoint;
use crate::error::Result;
use crate::geometry::{contact_form_at, eta_applied, metric_at};
use crate::linalg::{Mat, Tensor3, Tensor4};
use crate::numerics::StepScheme;
use crate::scalar::{lit, Real};

use crate::connection::Connection;

/// Elementwise finite-difference derivative of a symbol table along
/// coordinate axis `mu`, Richardson-extrapolated like the scalar case.
fn symbols_partial<T: Real>(
    symbols: &dyn Fn(&[T]) -> Result<Tensor3<T>>,
    coords: &[T],
    mu: usize,
    scheme: &StepScheme<T>,
) -> Result<Tensor3<T>> {
    let dim = coords.len();
    let h0 = scheme.step_at(coords[mu]);
    let mut column: Vec<Tensor3<T>> = Vec::with_capacity(scheme.richardson_levels);
    let mut scratch = coords.to_vec();
    let mut h = h0;
    for _ in 0..scheme.richardson_levels {
        scratch[mu] = coords[mu] + h;
        let fp = symbols(&scratch)?;
        scratch[mu] = coords[mu] - h;
        let fm = symbols(&scratch)?;
        scratch[mu] = coords[mu];
        let mut d = Tensor3::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    d.set(i, j, k, (fp.get(i, j, k) - fm.get(i, j, k)) / (h + h));
                }
            }
        }
        column.push(d);
        h *= lit(0.5);
    }
    // Richardson tableau over whole tables
    let four = lit::<T>(4.0);
    let mut power = T::one();
    let levels = column.len();
    for m in 1..levels {
        power *= four;
        for k in (m..levels).rev() {
            let mut combined = Tensor3::zeros(dim);
            for i in 0..dim {
                for j in 0..dim {
                    for l in 0..dim {
                        combined.set(
                            i,
                            j,
                            l,
                            (power * column[k].get(i, j, l) - column[k - 1].get(i, j, l))
                                / (power - T::one()),
                        );
                    }
                }
            }
            column[k] = combined;
        }
    }
    Ok(column[levels - 1].clone())
}

/// Curvature components over flattened coordinates; shared by the phase-space
/// chart and the Heisenberg group chart.
pub fn riemann_components<T: Real>(
    symbols: &dyn Fn(&[T]) -> Result<Tensor3<T>>,
    frame_matrix: &Mat<T>,
    gamma: &Tensor3<T>,
    coords: &[T],
    scheme: &StepScheme<T>,
) -> Result<Tensor4<T>> {
    let dim = coords.len();
    let at_point = symbols(coords)?;
    let mut d_symbols = Vec::with_capacity(dim);
    for mu in 0..dim {
        d_symbols.push(symbols_partial(symbols, coords, mu, scheme)?);
    }
    // frame derivative e_(l)(Gamma^i_{jk}) = E^mu_l d_mu Gamma^i_{jk}
    let frame_deriv = |l: usize, i: usize, j: usize, k: usize| -> T {
        (0..dim)
            .map(|mu| frame_matrix[(mu, l)] * d_symbols[mu].get(i, j, k))
            .sum()
    };
    let mut riemann = Tensor4::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                for l in 0..dim {
                    let mut value = frame_deriv(l, i, j, k) - frame_deriv(k, i, j, l);
                    for m in 0..dim {
                        value += at_point.get(m, j, k) * at_point.get(i, m, l)
                            - at_point.get(m, j, l) * at_point.get(i, m, k)
                            + gamma.get(m, k, l) * at_point.get(i, j, m);
                    }
                    riemann.set(i, j, k, l, value);
                }
            }
        }
    }
    Ok(riemann)
}

/// Full curvature array of `conn` at `x`. The structure-function term uses
/// the frame's closed form; its agreement with numerical brackets is checked
/// separately.
pub fn riemann_at<T: Real>(
    conn: &Connection<T>,
    x: &ChartPoint<T>,
    scheme: &StepScheme<T>,
) -> Result<Tensor4<T>> {
    let e = conn.frame.matrix_at(x)?;
    let gamma = conn.frame.structure_closed_form(x)?;
    let conn_clone = conn.clone();
    let symbols = move |coords: &[T]| conn_clone.symbols_at(&ChartPoint::from_coords(coords));
    riemann_components(&symbols, &e, &gamma, &x.coords(), scheme)
}

/// Ricci contraction `Ric_{jl} = R^i_{jli}`.
pub fn ricci_from_riemann<T: Real>(riemann: &Tensor4<T>) -> Mat<T> {
    let dim = riemann.dim();
    Mat::from_fn(dim, dim, |j, l| {
        (0..dim).map(|i| riemann.get(i, j, l, i)).sum()
    })
}

/// Ricci tensor of `conn` at `x` in its frame.
pub fn ricci_at<T: Real>(
    conn: &Connection<T>,
    x: &ChartPoint<T>,
    scheme: &StepScheme<T>,
) -> Result<Mat<T>> {
    Ok(ricci_from_riemann(&riemann_at(conn, x, scheme)?))
}

/// Scalar curvature `G^{jl} Ric_{jl}` with the signature-correct inverse of
/// the frame metric.
pub fn scalar_curvature_at<T: Real>(
    conn: &Connection<T>,
    x: &ChartPoint<T>,
    scheme: &StepScheme<T>,
) -> Result<T> {
    let ricci = ricci_at(conn, x, scheme)?;
    let g_inv = metric_at(x, &conn.frame)?.as_mat().inverse()?;
    Ok(g_inv.frobenius_dot(&ricci))
}

/// Result of fitting `Ric = lambda eta (x) eta + nu G` over all components.
#[derive(Debug, Clone, Copy)]
pub struct EtaEinsteinFit<T> {
    pub lambda: T,
    pub nu: T,
    /// Largest absolute component of `Ric - lambda eta(x)eta - nu G`.
    pub residual: T,
}

/// Least-squares fit of the Ricci tensor against `eta (x) eta` and `G` in the
/// connection's frame, over all independent components.
pub fn eta_einstein_fit<T: Real>(
    conn: &Connection<T>,
    x: &ChartPoint<T>,
    scheme: &StepScheme<T>,
) -> Result<EtaEinsteinFit<T>> {
    let ricci = ricci_at(conn, x, scheme)?;
    let dim = conn.frame.dim();
    let e = conn.frame.matrix_at(x)?;
    let eta: Vec<T> = (0..dim).map(|i| eta_applied(x, &e.column(i))).collect();
    let eta_sq = Mat::from_fn(dim, dim, |i, j| eta[i] * eta[j]);
    let g = metric_at(x, &conn.frame)?.as_mat();

    let normal = Mat::from_rows(&[
        vec![eta_sq.frobenius_dot(&eta_sq), eta_sq.frobenius_dot(&g)],
        vec![eta_sq.frobenius_dot(&g), g.frobenius_dot(&g)],
    ]);
    let rhs = vec![ricci.frobenius_dot(&eta_sq), ricci.frobenius_dot(&g)];
    let solution = normal.solve(&rhs)?;
    let (lambda, nu) = (solution[0], solution[1]);
    let fitted = eta_sq.scale(lambda).add(&g.scale(nu));
    Ok(EtaEinsteinFit {
        lambda,
        nu,
        residual: ricci.max_abs_diff(&fitted),
    })
}

/// Largest violation of the antisymmetry `R^i_{jkl} = -R^i_{jlk}`.
pub fn antisymmetry_residual<T: Real>(riemann: &Tensor4<T>) -> T {
    let dim = riemann.dim();
    let mut worst = T::zero();
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                for l in 0..dim {
                    worst = worst.max((riemann.get(i, j, k, l) + riemann.get(i, j, l, k)).abs());
                }
            }
        }
    }
    worst
}

/// Largest violation of the first Bianchi identity (cyclic sum over the three
/// lower slots); exact for torsion-free connections.
pub fn first_bianchi_residual<T: Real>(riemann: &Tensor4<T>) -> T {
    let dim = riemann.dim();
    let mut worst = T::zero();
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                for l in 0..dim {
                    let cyclic =
                        riemann.get(i, j, k, l) + riemann.get(i, k, l, j) + riemann.get(i, l, j, k);
                    worst = worst.max(cyclic.abs());
                }
            }
        }
    }
    worst
}

/// Pattern defect of the Ricci tensor against its para-Sasakian closed form:
/// `-2n` along the Reeb direction, `+2`/`-2` along the split blocks, zero off
/// the diagonal (canonical frame).
pub fn ricci_pattern_residual<T: Real>(ricci: &Mat<T>, x: &ChartPoint<T>) -> T {
    let n = x.n();
    let eta = contact_form_at(x);
    debug_assert_eq!(eta.len(), ricci.n_rows());
    let two_n = lit::<T>(2.0 * n as f64);
    let two = lit::<T>(2.0);
    let mut expected = Mat::zeros(2 * n + 1, 2 * n + 1);
    expected[(0, 0)] = -two_n;
    for a in 0..n {
        expected[(1 + a, 1 + a)] = two;
        expected[(1 + n + a, 1 + n + a)] = -two;
    }
    ricci.max_abs_diff(&expected)
}
