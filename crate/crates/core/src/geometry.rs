//! Contact and metric structure of the phase space in its Darboux chart.
//!
//! The contact form is `eta = dw - p_a dq^a`, the Reeb field is `xi = d/dw`,
//! and the metric is `G = eta (x) eta + (dq^a (x) dp_a + dp_a (x) dq^a) / 2`.
//! Exterior derivatives use the full convention
//! `d alpha(X, Y) = X(alpha(Y)) - Y(alpha(X)) - alpha([X, Y])`, and wedges the
//! matching `alpha ^ beta = alpha (x) beta - beta (x) alpha` (no 1/2 factor).

use std::collections::BTreeMap;

use crate::chart::ChartPoint;
use crate::error::{Error, Result};
use crate::frames::{FrameField, FrameKind, VectorField};
use crate::linalg::{Mat, Tensor3};
use crate::numerics::{directional_derivative, StepScheme};
use crate::scalar::{half, Real};

/// Tensor components in a chosen frame at a base point.
#[derive(Debug, Clone)]
pub struct TensorComponents<T> {
    /// Contravariant/covariant rank `(r, s)`.
    pub valence: (u8, u8),
    pub frame: FrameKind,
    pub dim: usize,
    /// Row-major components, `(r + s)` indices of extent `dim` each.
    pub data: Vec<T>,
    pub point: ChartPoint<T>,
}

impl<T: Real> TensorComponents<T> {
    pub fn from_mat(valence: (u8, u8), frame: FrameKind, m: &Mat<T>, point: ChartPoint<T>) -> Self {
        assert_eq!(valence.0 + valence.1, 2);
        assert_eq!(m.n_rows(), m.n_cols());
        let dim = m.n_rows();
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            data.extend_from_slice(m.row(i));
        }
        TensorComponents {
            valence,
            frame,
            dim,
            data,
            point,
        }
    }

    /// Rank-2 components as a matrix (first index = row).
    pub fn as_mat(&self) -> Mat<T> {
        assert_eq!(
            self.valence.0 + self.valence.1,
            2,
            "as_mat needs a rank-2 tensor"
        );
        Mat::from_fn(self.dim, self.dim, |i, j| self.data[i * self.dim + j])
    }

    pub fn get(&self, indices: &[usize]) -> T {
        let rank = (self.valence.0 + self.valence.1) as usize;
        assert_eq!(indices.len(), rank);
        let mut flat = 0;
        for &ix in indices {
            debug_assert!(ix < self.dim);
            flat = flat * self.dim + ix;
        }
        self.data[flat]
    }
}

/// Coordinate components of the contact form `eta = dw - p_a dq^a` at `x`:
/// `(1, -p_1 .. -p_n, 0 .. 0)`.
pub fn contact_form_at<T: Real>(x: &ChartPoint<T>) -> Vec<T> {
    let n = x.n();
    let mut eta = vec![T::zero(); x.dim()];
    eta[0] = T::one();
    for a in 0..n {
        eta[1 + a] = -x.p[a];
    }
    eta
}

/// Evaluates `eta(v)` for a coordinate-component vector `v`.
pub fn eta_applied<T: Real>(x: &ChartPoint<T>, v: &[T]) -> T {
    contact_form_at(x).iter().zip(v).map(|(&e, &c)| e * c).sum()
}

/// Coordinate components of the Reeb field `xi = d/dw`: `(1, 0, .., 0)`.
pub fn reeb_at<T: Real>(x: &ChartPoint<T>) -> Vec<T> {
    let mut xi = vec![T::zero(); x.dim()];
    xi[0] = T::one();
    xi
}

/// Coordinate components of the metric
/// `G = eta (x) eta + (dq^a (x) dp_a + dp_a (x) dq^a) / 2`.
pub fn coordinate_metric_at<T: Real>(x: &ChartPoint<T>) -> Mat<T> {
    let n = x.n();
    let dim = x.dim();
    let eta = contact_form_at(x);
    let mut g = Mat::from_fn(dim, dim, |i, j| eta[i] * eta[j]);
    for a in 0..n {
        let (qa, pa) = (1 + a, 1 + n + a);
        g[(qa, pa)] += half::<T>();
        g[(pa, qa)] += half::<T>();
    }
    g
}

/// Metric components in the given frame: the congruence `E^T G E` of the
/// coordinate metric by the frame matrix.
pub fn metric_at<T: Real>(x: &ChartPoint<T>, frame: &FrameField) -> Result<TensorComponents<T>> {
    let e = frame.matrix_at(x)?;
    let g = coordinate_metric_at(x);
    let in_frame = e.transpose().mul(&g).mul(&e);
    Ok(TensorComponents::from_mat(
        (0, 2),
        frame.kind,
        &in_frame,
        x.clone(),
    ))
}

/// Closed-form coordinate components of the almost-para-contact tensor: the
/// (1,1) tensor acting as `Phi(d/dw) = 0`, `Phi(Q_a) = -Q_a`, `Phi(P^a) =
/// P^a`. Used as a golden cross-check against the Koszul route
/// [`phi_at`](crate::connection::phi_at).
pub fn phi_coordinate_closed_form<T: Real>(x: &ChartPoint<T>) -> Mat<T> {
    let n = x.n();
    let dim = x.dim();
    let mut phi = Mat::zeros(dim, dim);
    for a in 0..n {
        let (qa, pa) = (1 + a, 1 + n + a);
        // column q^a: Phi(d/dq^a) = -p_a d/dw - d/dq^a
        phi[(0, qa)] = -x.p[a];
        phi[(qa, qa)] = -T::one();
        // column p_a: Phi(d/dp_a) = d/dp_a
        phi[(pa, pa)] = T::one();
    }
    phi
}

/// Closed-form components of `Phi` in the given frame, obtained by conjugating
/// the coordinate closed form with the frame matrix.
pub fn phi_closed_form_at<T: Real>(
    x: &ChartPoint<T>,
    frame: &FrameField,
) -> Result<TensorComponents<T>> {
    let e = frame.matrix_at(x)?;
    let phi = phi_coordinate_closed_form(x);
    let in_frame = e.inverse()?.mul(&phi).mul(&e);
    Ok(TensorComponents::from_mat(
        (1, 1),
        frame.kind,
        &in_frame,
        x.clone(),
    ))
}

/// The coordinate `Phi` as a pointwise linear map, for building fields like
/// `x -> Phi(x) X(x)`.
pub fn phi_field<T: Real>(v: &VectorField<T>) -> VectorField<T> {
    v.mapped(|x| Ok(phi_coordinate_closed_form(x)))
}

/// Numerical Lie bracket `[X, Y]^mu = X^nu d_nu Y^mu - Y^nu d_nu X^mu`.
pub fn lie_bracket_at<T: Real>(
    x_field: &VectorField<T>,
    y_field: &VectorField<T>,
    x: &ChartPoint<T>,
    scheme: &StepScheme<T>,
) -> Result<Vec<T>> {
    crate::numerics::lie_bracket_components(
        &|coords: &[T]| x_field.at(&ChartPoint::from_coords(coords)),
        &|coords: &[T]| y_field.at(&ChartPoint::from_coords(coords)),
        &x.coords(),
        scheme,
    )
}

/// Structure functions `gamma^k_{ij}` of a frame at `x`, computed from
/// numerical brackets of the frame fields: `[e_i, e_j] = gamma^k_{ij} e_k`.
pub fn structure_functions_at<T: Real>(
    frame: &FrameField,
    x: &ChartPoint<T>,
    scheme: &StepScheme<T>,
) -> Result<Tensor3<T>> {
    let dim = frame.dim();
    let e = frame.matrix_at(x)?;
    let e_inv = e.inverse()?;
    // d_mu E for every coordinate axis, one finite-difference sweep each
    let mut de = Vec::with_capacity(dim);
    for mu in 0..dim {
        de.push(Mat::from_fn(dim, dim, |nu, i| {
            directional_derivative(
                &|pt: &ChartPoint<T>| Ok(frame.matrix_at(pt)?[(nu, i)]),
                x,
                mu,
                scheme,
            )
            .unwrap_or_else(|_| T::nan())
        }));
    }
    for m in &de {
        if !m.max_abs().is_finite() {
            return Err(Error::Evaluation("frame derivative is not finite".into()));
        }
    }
    let mut gamma = Tensor3::zeros(dim);
    for i in 0..dim {
        for j in (i + 1)..dim {
            let mut bracket = vec![T::zero(); dim];
            for nu in 0..dim {
                for mu in 0..dim {
                    bracket[nu] += e[(mu, i)] * de[mu][(nu, j)] - e[(mu, j)] * de[mu][(nu, i)];
                }
            }
            let coeffs = e_inv.mul_vec(&bracket);
            for k in 0..dim {
                gamma.set(k, i, j, coeffs[k]);
                gamma.set(k, j, i, -coeffs[k]);
            }
        }
    }
    Ok(gamma)
}

/// Components `d eta(e_i, e_j)` in the given frame under the full convention
/// `d eta(X, Y) = X(eta(Y)) - Y(eta(X)) - eta([X, Y])`.
pub fn d_eta_at<T: Real>(
    x: &ChartPoint<T>,
    frame: &FrameField,
    scheme: &StepScheme<T>,
) -> Result<TensorComponents<T>> {
    let dim = frame.dim();
    let e = frame.matrix_at(x)?;
    let gamma = structure_functions_at(frame, x, scheme)?;
    let eta_on = |i: usize| {
        let frame = *frame;
        move |pt: &ChartPoint<T>| -> Result<T> {
            Ok(eta_applied(pt, &frame.matrix_at(pt)?.column(i)))
        }
    };
    let eta_components: Vec<T> = (0..dim).map(|i| eta_applied(x, &e.column(i))).collect();
    let mut d = Mat::zeros(dim, dim);
    for i in 0..dim {
        for j in (i + 1)..dim {
            // e_i applied to the function eta(e_j), as a directional derivative
            let mut x_term = T::zero();
            let mut y_term = T::zero();
            for mu in 0..dim {
                if e[(mu, i)] != T::zero() {
                    x_term += e[(mu, i)] * directional_derivative(&eta_on(j), x, mu, scheme)?;
                }
                if e[(mu, j)] != T::zero() {
                    y_term += e[(mu, j)] * directional_derivative(&eta_on(i), x, mu, scheme)?;
                }
            }
            let mut bracket_term = T::zero();
            for k in 0..dim {
                bracket_term += gamma.get(k, i, j) * eta_components[k];
            }
            let value = x_term - y_term - bracket_term;
            d[(i, j)] = value;
            d[(j, i)] = -value;
        }
    }
    Ok(TensorComponents::from_mat(
        (0, 2),
        frame.kind,
        &d,
        x.clone(),
    ))
}

/// Exact coordinate components of `d eta = dq^a ^ dp_a` (full convention).
pub fn d_eta_coordinate_closed_form<T: Real>(x: &ChartPoint<T>) -> Mat<T> {
    let n = x.n();
    let mut d = Mat::zeros(x.dim(), x.dim());
    for a in 0..n {
        let (qa, pa) = (1 + a, 1 + n + a);
        d[(qa, pa)] = T::one();
        d[(pa, qa)] = -T::one();
    }
    d
}

/// Sparse exterior form: coefficients on strictly increasing index tuples.
#[derive(Debug, Clone)]
struct Form<T> {
    terms: BTreeMap<Vec<usize>, T>,
}

impl<T: Real> Form<T> {
    fn empty() -> Self {
        Form {
            terms: BTreeMap::new(),
        }
    }

    fn insert(&mut self, indices: Vec<usize>, coeff: T) {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        let entry = self.terms.entry(indices).or_insert_with(T::zero);
        *entry += coeff;
    }

    /// Wedge under the shuffle convention (no factorial normalization).
    fn wedge(&self, rhs: &Self) -> Self {
        let mut out = Form::empty();
        for (left, &cl) in &self.terms {
            for (right, &cr) in &rhs.terms {
                if left.iter().any(|i| right.contains(i)) {
                    continue;
                }
                let mut merged: Vec<usize> = left.iter().chain(right.iter()).cloned().collect();
                let sign = sort_sign(&mut merged);
                out.insert(merged, cl * cr * sign);
            }
        }
        out
    }
}

/// Sorts `indices` in place and returns the permutation sign.
fn sort_sign<T: Real>(indices: &mut [usize]) -> T {
    let mut sign = T::one();
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    sign
}

/// Coefficient of `alpha ^ omega^n_wedge` relative to the reference ordered
/// top-degree element `dx^{reference[0]} ^ dx^{reference[1]} ^ ...`, for a
/// 1-form `alpha` (components) and a 2-form `omega` (antisymmetric component
/// matrix, `omega[(i, j)] = omega(d_i, d_j)`).
pub(crate) fn wedge_top_coefficient<T: Real>(
    alpha: &[T],
    omega: &Mat<T>,
    n_wedge: usize,
    reference: &[usize],
) -> T {
    let dim = alpha.len();
    debug_assert_eq!(reference.len(), dim);
    let mut one_form = Form::empty();
    for (mu, &c) in alpha.iter().enumerate() {
        if c != T::zero() {
            one_form.insert(vec![mu], c);
        }
    }
    let mut two_form = Form::empty();
    for i in 0..dim {
        for j in (i + 1)..dim {
            if omega[(i, j)] != T::zero() {
                two_form.insert(vec![i, j], omega[(i, j)]);
            }
        }
    }
    let mut top = one_form;
    for _ in 0..n_wedge {
        top = top.wedge(&two_form);
    }
    let mut reference_order = reference.to_vec();
    let reference_sign: T = sort_sign(&mut reference_order);
    let sorted: Vec<usize> = (0..dim).collect();
    let coeff = top.terms.get(&sorted).copied().unwrap_or_else(T::zero);
    coeff * reference_sign
}

/// Coefficient of `eta ^ (d eta)^n` relative to the ordered coordinate volume
/// element `dw ^ dq^1 ^ dp_1 ^ ... ^ dq^n ^ dp_n`; equals `n!` everywhere.
pub fn volume_coefficient_at<T: Real>(x: &ChartPoint<T>) -> T {
    let n = x.n();
    let eta = contact_form_at(x);
    let d_eta = d_eta_coordinate_closed_form(x);
    // reference volume element (w, q^1, p_1, ..., q^n, p_n)
    let mut reference: Vec<usize> = vec![0];
    for a in 0..n {
        reference.push(1 + a);
        reference.push(1 + n + a);
    }
    wedge_top_coefficient(&eta, &d_eta, n, &reference)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{matrix_signature, sample_chart_points, SampleRanges, SignatureCount};

    fn pt(w: f64, q: &[f64], p: &[f64]) -> ChartPoint<f64> {
        ChartPoint::new(w, q.to_vec(), p.to_vec()).unwrap()
    }

    #[test]
    fn contact_form_components() {
        let x = pt(0.0, &[1.0], &[2.0]);
        assert_eq!(contact_form_at(&x), vec![1.0, -2.0, 0.0]);
    }

    #[test]
    fn contact_form_pairs_with_distinguished_vectors() {
        let x = pt(0.4, &[0.3, -0.8], &[1.2, 2.5]);
        assert_eq!(eta_applied(&x, &reeb_at(&x)), 1.0);
        let heis = FrameField::new(FrameKind::Heisenberg, 2);
        let e = heis.matrix_at(&x).unwrap();
        for i in 1..5 {
            // eta annihilates Q_b and P^b
            assert!(eta_applied(&x, &e.column(i)).abs() < 1e-15, "column {i}");
        }
    }

    #[test]
    fn reeb_is_the_w_direction() {
        let x = pt(-1.0, &[0.5, 0.5, 0.5], &[1.0, 2.0, 3.0]);
        let mut expected = vec![0.0; 7];
        expected[0] = 1.0;
        assert_eq!(reeb_at(&x), expected);
    }

    #[test]
    fn d_eta_annihilates_the_reeb_direction() {
        let x = pt(0.2, &[0.4], &[1.7]);
        for kind in [
            FrameKind::Coordinate,
            FrameKind::Heisenberg,
            FrameKind::Canonical,
        ] {
            let frame = FrameField::new(kind, 1);
            let d = d_eta_at(&x, &frame, &StepScheme::default())
                .unwrap()
                .as_mat();
            // frame member 0 is xi in every family
            for j in 0..3 {
                assert!(d[(0, j)].abs() < 1e-9, "{kind:?} component (0, {j})");
            }
        }
    }

    #[test]
    fn metric_in_canonical_frame_is_the_standard_diagonal() {
        let x = pt(0.1, &[1.0, -0.5], &[0.8, 3.0]);
        let frame = FrameField::new(FrameKind::Canonical, 2);
        let g = metric_at(&x, &frame).unwrap().as_mat();
        let expected = Mat::diagonal(&[1.0, 1.0, 1.0, -1.0, -1.0]);
        assert!(g.max_abs_diff(&expected) < 1e-12);
    }

    #[test]
    fn heisenberg_generators_are_null() {
        let x = pt(0.0, &[0.7], &[2.2]);
        let frame = FrameField::new(FrameKind::Heisenberg, 1);
        let g = metric_at(&x, &frame).unwrap().as_mat();
        assert!(g[(1, 1)].abs() < 1e-14); // G(Q, Q)
        assert!(g[(2, 2)].abs() < 1e-14); // G(P, P)
        assert!((g[(1, 2)] - 0.5).abs() < 1e-14); // G(Q, P) = 1/2
    }

    #[test]
    fn coordinate_metric_mixed_block() {
        let x = pt(0.0, &[0.3], &[1.1]);
        let g = coordinate_metric_at(&x);
        assert!((g[(1, 2)] - 0.5).abs() < 1e-15);
        assert!((g[(0, 1)] + x.p[0]).abs() < 1e-15);
    }

    #[test]
    fn metric_signature_in_every_frame() {
        let ranges = SampleRanges::default();
        for n in 1..=3 {
            for x in sample_chart_points::<f64>(n, 10, 5, &ranges).unwrap() {
                for kind in [
                    FrameKind::Coordinate,
                    FrameKind::Heisenberg,
                    FrameKind::Canonical,
                ] {
                    let g = metric_at(&x, &FrameField::new(kind, n)).unwrap().as_mat();
                    let s = matrix_signature(&g, 1e-9).unwrap();
                    assert_eq!(
                        s,
                        SignatureCount {
                            n_pos: n + 1,
                            n_neg: n,
                            n_zero: 0
                        },
                        "kind {kind:?}, n {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn heisenberg_brackets_close_on_the_reeb_field() {
        let scheme = StepScheme::default();
        for n in 1..=2usize {
            let x = pt(0.3, &vec![0.5; n], &vec![1.4; n]);
            let frame = FrameField::new(FrameKind::Heisenberg, n);
            for a in 0..n {
                for b in 0..n {
                    let p_a = frame.vector_field(1 + n + a);
                    let q_b = frame.vector_field(1 + b);
                    let bracket = lie_bracket_at(&p_a, &q_b, &x, &scheme).unwrap();
                    let mut expected = vec![0.0; x.dim()];
                    if a == b {
                        expected[0] = 1.0;
                    }
                    assert!(
                        crate::frames::max_abs_diff(&bracket, &expected) < 1e-7,
                        "[P^{a}, Q_{b}] at n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn canonical_bracket_recovers_the_structure_constants() {
        let scheme = StepScheme::default();
        let x = pt(0.0, &[0.6], &[1.9]);
        let frame = FrameField::new(FrameKind::Canonical, 1);
        let plus = frame.vector_field(1);
        let minus = frame.vector_field(2);
        let bracket = lie_bracket_at(&plus, &minus, &x, &scheme).unwrap();
        // [e+, e-] = -(1 / (2 sqrt p)) (e+ + e-) + 2 xi
        let e = frame.matrix_at(&x).unwrap();
        let c = -0.5 / x.p[0].sqrt();
        let expected: Vec<f64> = (0..3)
            .map(|mu| c * (e[(mu, 1)] + e[(mu, 2)]) + 2.0 * e[(mu, 0)])
            .collect();
        assert!(crate::frames::max_abs_diff(&bracket, &expected) < 1e-7);
    }

    #[test]
    fn bracket_of_a_field_with_itself_vanishes() {
        let scheme = StepScheme::default();
        let x = pt(0.1, &[0.2], &[0.9]);
        let xi = FrameField::new(FrameKind::Canonical, 1).vector_field::<f64>(0);
        let bracket = lie_bracket_at(&xi, &xi, &x, &scheme).unwrap();
        assert!(bracket.iter().all(|c| c.abs() < 1e-12));
    }

    #[test]
    fn structure_functions_match_their_closed_form() {
        let scheme = StepScheme::default();
        for n in 1..=2usize {
            let x = pt(0.4, &vec![-0.3; n], &vec![1.7; n]);
            for kind in [
                FrameKind::Coordinate,
                FrameKind::Heisenberg,
                FrameKind::Canonical,
            ] {
                let frame = FrameField::new(kind, n);
                let numeric = structure_functions_at(&frame, &x, &scheme).unwrap();
                let closed = frame.structure_closed_form(&x).unwrap();
                assert!(
                    numeric.max_abs_diff(&closed) < 1e-7,
                    "kind {kind:?} at n = {n}"
                );
            }
        }
    }

    #[test]
    fn canonical_structure_function_values() {
        let scheme = StepScheme::default();
        let x = pt(0.0, &[0.0], &[1.0]);
        let frame = FrameField::new(FrameKind::Canonical, 1);
        let gamma = structure_functions_at(&frame, &x, &scheme).unwrap();
        assert!((gamma.get(0, 1, 2) - 2.0).abs() < 1e-8);
        // at p = 1 the coefficient -1/(2 sqrt p) is exactly -1/2
        assert!((gamma.get(1, 1, 2) + 0.5).abs() < 1e-8);
        assert!((gamma.get(2, 1, 2) + 0.5).abs() < 1e-8);
    }

    #[test]
    fn coordinate_frame_commutes() {
        let scheme = StepScheme::default();
        let x = pt(0.3, &[0.1, 0.9], &[2.0, 0.4]);
        let frame = FrameField::new(FrameKind::Coordinate, 2);
        let gamma = structure_functions_at(&frame, &x, &scheme).unwrap();
        assert!(gamma.max_abs() < 1e-10);
    }

    #[test]
    fn d_eta_components_in_both_frames() {
        let scheme = StepScheme::default();
        let x = pt(0.2, &[0.5], &[1.3]);
        let coord = d_eta_at(&x, &FrameField::new(FrameKind::Coordinate, 1), &scheme)
            .unwrap()
            .as_mat();
        assert!((coord[(1, 2)] - 1.0).abs() < 1e-9);
        assert!(coord.max_abs_diff(&d_eta_coordinate_closed_form(&x)) < 1e-9);

        let canon = d_eta_at(&x, &FrameField::new(FrameKind::Canonical, 1), &scheme)
            .unwrap()
            .as_mat();
        assert!((canon[(1, 2)] + 2.0).abs() < 1e-8);
    }

    #[test]
    fn volume_coefficient_is_n_factorial() {
        for (n, expected) in [(1usize, 1.0), (2, 2.0), (3, 6.0)] {
            let x = pt(0.9, &vec![0.2; n], &vec![1.5; n]);
            let vol = volume_coefficient_at(&x);
            assert!((vol - expected).abs() < 1e-12, "n = {n}");
        }
    }

    #[test]
    fn phi_closed_form_squares_to_the_projector() {
        let x = pt(0.1, &[0.7, -0.2], &[1.1, 0.6]);
        let phi = phi_coordinate_closed_form(&x);
        let phi2 = phi.mul(&phi);
        let eta = contact_form_at(&x);
        let xi = reeb_at(&x);
        let projector = Mat::from_fn(5, 5, |i, j| {
            (if i == j { 1.0 } else { 0.0 }) - xi[i] * eta[j]
        });
        assert!(phi2.max_abs_diff(&projector) < 1e-14);
    }

    #[test]
    fn phi_action_on_the_canonical_frame() {
        let x = pt(0.0, &[0.4], &[2.3]);
        let frame = FrameField::new(FrameKind::Canonical, 1);
        let phi = phi_closed_form_at(&x, &frame).unwrap().as_mat();
        // Phi xi = 0, Phi e+ = -e-, Phi e- = -e+
        let expected = Mat::from_rows(&[
            vec![0.0, 0.0, 0.0],
            vec![0.0, 0.0, -1.0],
            vec![0.0, -1.0, 0.0],
        ]);
        assert!(phi.max_abs_diff(&expected) < 1e-12);
    }
}
