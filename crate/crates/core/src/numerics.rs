//! Shared numerical substrate: finite differencing with Richardson
//! extrapolation, quadrature over discrete and truncated real sample spaces,
//! eigenvalue signatures, and deterministic chart sampling.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chart::ChartPoint;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::scalar::{lit, Real};

/// Central-difference scheme: relative base step and Richardson depth.
#[derive(Debug, Clone, Copy)]
pub struct StepScheme<T> {
    pub base_step: T,
    pub richardson_levels: usize,
}

impl<T: Real> StepScheme<T> {
    pub const MAX_LEVELS: usize = 4;

    pub fn new(base_step: T, richardson_levels: usize) -> Result<Self> {
        if !(base_step > T::zero()) {
            return Err(Error::Contract("base_step must be positive".into()));
        }
        if richardson_levels == 0 || richardson_levels > Self::MAX_LEVELS {
            return Err(Error::Contract(format!(
                "richardson_levels must lie in [1, {}]",
                Self::MAX_LEVELS
            )));
        }
        Ok(StepScheme {
            base_step,
            richardson_levels,
        })
    }

    /// Step used for first derivatives of closed-form coefficient functions.
    pub fn first_order() -> Self {
        StepScheme {
            base_step: lit(1e-5),
            richardson_levels: 2,
        }
    }

    /// Wider step for differentiating quadrature-backed quantities, whose
    /// noise floor sits near 1e-12 rather than machine epsilon.
    pub fn quadrature_backed() -> Self {
        StepScheme {
            base_step: lit(1e-3),
            richardson_levels: 2,
        }
    }

    /// Step for second derivatives (Hessians of the log-partition).
    pub fn second_order() -> Self {
        StepScheme {
            base_step: lit(5e-3),
            richardson_levels: 2,
        }
    }

    /// Absolute step near coordinate value `x`: relative to `max(1, |x|)`.
    #[inline]
    pub fn step_at(&self, x: T) -> T {
        self.base_step * T::one().max(x.abs())
    }
}

impl<T: Real> Default for StepScheme<T> {
    fn default() -> Self {
        Self::first_order()
    }
}

fn check_finite<T: Real>(v: T) -> Result<T> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Evaluation("function value is not finite".into()))
    }
}

/// Richardson tableau over column `d`, assuming an error expansion in `h^2`.
/// `d[k]` must hold the estimate at step `h / 2^k`.
fn richardson<T: Real>(d: &mut [T]) -> T {
    let levels = d.len();
    let four = lit::<T>(4.0);
    let mut power = T::one();
    for m in 1..levels {
        power *= four;
        for k in (m..levels).rev() {
            d[k] = (power * d[k] - d[k - 1]) / (power - T::one());
        }
    }
    d[levels - 1]
}

/// First partial derivative of `f` along `axis` at `xs` by central
/// differences with Richardson extrapolation; error `O(h^(2 levels))`.
pub fn partial_derivative<T: Real>(
    f: &dyn Fn(&[T]) -> Result<T>,
    xs: &[T],
    axis: usize,
    scheme: &StepScheme<T>,
) -> Result<T> {
    let h0 = scheme.step_at(xs[axis]);
    let mut scratch = xs.to_vec();
    let mut column = Vec::with_capacity(scheme.richardson_levels);
    let mut h = h0;
    for _ in 0..scheme.richardson_levels {
        scratch[axis] = xs[axis] + h;
        let fp = check_finite(f(&scratch)?)?;
        scratch[axis] = xs[axis] - h;
        let fm = check_finite(f(&scratch)?)?;
        column.push((fp - fm) / (h + h));
        h *= lit(0.5);
    }
    Ok(richardson(&mut column))
}

/// Second partial derivative `d^2 f / dx_a dx_b`, Richardson-extrapolated.
pub fn second_partial_derivative<T: Real>(
    f: &dyn Fn(&[T]) -> Result<T>,
    xs: &[T],
    a: usize,
    b: usize,
    scheme: &StepScheme<T>,
) -> Result<T> {
    let ha0 = scheme.step_at(xs[a]);
    let hb0 = scheme.step_at(xs[b]);
    let mut scratch = xs.to_vec();
    let mut column = Vec::with_capacity(scheme.richardson_levels);
    let mut ha = ha0;
    let mut hb = hb0;
    for _ in 0..scheme.richardson_levels {
        let estimate = if a == b {
            scratch[a] = xs[a] + ha;
            let fp = check_finite(f(&scratch)?)?;
            scratch[a] = xs[a] - ha;
            let fm = check_finite(f(&scratch)?)?;
            scratch[a] = xs[a];
            let f0 = check_finite(f(&scratch)?)?;
            (fp - f0 - f0 + fm) / (ha * ha)
        } else {
            let mut corner = |sa: T, sb: T| -> Result<T> {
                scratch[a] = xs[a] + sa;
                scratch[b] = xs[b] + sb;
                check_finite(f(&scratch)?)
            };
            let fpp = corner(ha, hb)?;
            let fpm = corner(ha, -hb)?;
            let fmp = corner(-ha, hb)?;
            let fmm = corner(-ha, -hb)?;
            scratch[a] = xs[a];
            scratch[b] = xs[b];
            (fpp - fpm - fmp + fmm) / (lit::<T>(4.0) * ha * hb)
        };
        column.push(estimate);
        ha *= lit(0.5);
        hb *= lit(0.5);
    }
    Ok(richardson(&mut column))
}

/// Derivative of a scalar field on the chart along coordinate axis `axis`
/// (block order `w | q | p`).
pub fn directional_derivative<T: Real>(
    f: &dyn Fn(&ChartPoint<T>) -> Result<T>,
    x: &ChartPoint<T>,
    axis: usize,
    scheme: &StepScheme<T>,
) -> Result<T> {
    let wrapped = |coords: &[T]| f(&ChartPoint::from_coords(coords));
    partial_derivative(&wrapped, &x.coords(), axis, scheme)
}

/// Lie bracket of two vector fields given over flattened coordinates:
/// `[X, Y]^mu = X^nu d_nu Y^mu - Y^nu d_nu X^mu`.
pub fn lie_bracket_components<T: Real>(
    x_field: &dyn Fn(&[T]) -> Result<Vec<T>>,
    y_field: &dyn Fn(&[T]) -> Result<Vec<T>>,
    coords: &[T],
    scheme: &StepScheme<T>,
) -> Result<Vec<T>> {
    let dim = coords.len();
    let xv = x_field(coords)?;
    let yv = y_field(coords)?;
    if xv.len() != dim || yv.len() != dim {
        return Err(Error::Contract("vector field has wrong dimension".into()));
    }
    let mut bracket = vec![T::zero(); dim];
    for nu in 0..dim {
        if xv[nu] == T::zero() && yv[nu] == T::zero() {
            continue;
        }
        for mu in 0..dim {
            let dy = partial_derivative(&|c: &[T]| Ok(y_field(c)?[mu]), coords, nu, scheme)?;
            let dx = partial_derivative(&|c: &[T]| Ok(x_field(c)?[mu]), coords, nu, scheme)?;
            bracket[mu] += xv[nu] * dy - yv[nu] * dx;
        }
    }
    Ok(bracket)
}

/// Eigenvalue sign counts of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignatureCount {
    pub n_pos: usize,
    pub n_neg: usize,
    pub n_zero: usize,
}

/// Counts eigenvalues above `zero_tol`, below `-zero_tol`, and in between.
/// Rejects input that is not symmetric within `zero_tol`.
pub fn matrix_signature<T: Real>(m: &Mat<T>, zero_tol: T) -> Result<SignatureCount> {
    if m.n_rows() != m.n_cols() {
        return Err(Error::Contract("signature needs a square matrix".into()));
    }
    if !m.is_symmetric(zero_tol) {
        return Err(Error::Contract(
            "matrix is not symmetric within zero_tol".into(),
        ));
    }
    let mut counts = SignatureCount {
        n_pos: 0,
        n_neg: 0,
        n_zero: 0,
    };
    for ev in m.symmetric_eigenvalues() {
        if ev > zero_tol {
            counts.n_pos += 1;
        } else if ev < -zero_tol {
            counts.n_neg += 1;
        } else {
            counts.n_zero += 1;
        }
    }
    Ok(counts)
}

/// Default eigenvalue tolerance for signature counting.
pub fn default_zero_tol<T: Real>() -> T {
    lit(1e-9)
}

/// How an integral is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadKind {
    /// A caller-supplied closed form replaces numerical integration.
    ClosedForm,
    /// Adaptive composite Simpson rule on a truncated interval.
    AdaptiveInterval,
    /// Exact weighted sum over a finite sample space.
    DiscreteSum,
}

/// Quadrature configuration.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec<T> {
    pub kind: QuadKind,
    /// Half-width of the truncation window, in standard-deviation
    /// equivalents for Gaussian-type weights.
    pub truncation: T,
    /// Initial number of composite panels for interval rules.
    pub node_count: usize,
}

impl<T: Real> QuadratureSpec<T> {
    pub fn new(kind: QuadKind, truncation: T, node_count: usize) -> Result<Self> {
        if !(truncation > T::zero()) {
            return Err(Error::Contract("truncation must be positive".into()));
        }
        if kind == QuadKind::AdaptiveInterval && node_count < 2 {
            return Err(Error::Contract(
                "interval rules need node_count >= 2".into(),
            ));
        }
        Ok(QuadratureSpec {
            kind,
            truncation,
            node_count,
        })
    }

    pub fn adaptive() -> Self {
        QuadratureSpec {
            kind: QuadKind::AdaptiveInterval,
            truncation: lit(12.0),
            node_count: 16,
        }
    }

    pub fn discrete() -> Self {
        QuadratureSpec {
            kind: QuadKind::DiscreteSum,
            truncation: lit(12.0),
            node_count: 2,
        }
    }
}

/// Sample space of a one-dimensional integral.
#[derive(Debug, Clone)]
pub enum SampleSpace<T> {
    /// Finite weighted point set.
    Discrete { points: Vec<T>, weights: Vec<T> },
    /// Truncated window of the real line.
    Interval { lo: T, hi: T },
}

/// Relative magnitude the integrand may still have at the window edge before
/// the truncation guard rejects the window.
const EDGE_GUARD: f64 = 1e-9;

/// Integrates `f` over `space`. Discrete spaces are summed exactly; intervals
/// use an adaptive composite Simpson rule seeded with `spec.node_count`
/// panels. A window whose edge values are not negligible against the peak of
/// the integrand raises a truncation error.
pub fn integrate<T: Real>(
    space: &SampleSpace<T>,
    spec: &QuadratureSpec<T>,
    f: &dyn Fn(T) -> T,
) -> Result<T> {
    match space {
        SampleSpace::Discrete { points, weights } => {
            if points.len() != weights.len() {
                return Err(Error::Contract(
                    "points and weights differ in length".into(),
                ));
            }
            let mut acc = T::zero();
            for (&x, &w) in points.iter().zip(weights) {
                acc += w * check_finite(f(x))?;
            }
            Ok(acc)
        }
        SampleSpace::Interval { lo, hi } => {
            if !(hi > lo) {
                return Err(Error::Contract("empty integration window".into()));
            }
            let panels = spec.node_count.max(2);
            let width = *hi - *lo;
            let mut peak = T::zero();
            let mut total = T::zero();
            for k in 0..panels {
                let a = *lo + width * lit_frac(k, panels);
                let b = *lo + width * lit_frac(k + 1, panels);
                total += adaptive_simpson(f, a, b, &mut peak)?;
            }
            let edge = check_finite(f(*lo))?.abs().max(check_finite(f(*hi))?.abs());
            let limit = lit::<T>(EDGE_GUARD) * peak.max(T::one() * lit(1e-300));
            if edge > limit {
                return Err(Error::Truncation {
                    edge: edge.to_f64().unwrap_or(f64::NAN),
                    limit: limit.to_f64().unwrap_or(f64::NAN),
                });
            }
            Ok(total)
        }
    }
}

fn lit_frac<T: Real>(num: usize, den: usize) -> T {
    lit::<T>(num as f64 / den as f64)
}

fn simpson_rule<T: Real>(fa: T, fm: T, fb: T, h: T) -> T {
    (fa + lit::<T>(4.0) * fm + fb) * h / lit::<T>(6.0)
}

/// Adaptive Simpson with a machine-precision-oriented local tolerance.
fn adaptive_simpson<T: Real>(f: &dyn Fn(T) -> T, a: T, b: T, peak: &mut T) -> Result<T> {
    const MAX_DEPTH: usize = 48;
    let m = (a + b) * lit(0.5);
    let fa = check_finite(f(a))?;
    let fm = check_finite(f(m))?;
    let fb = check_finite(f(b))?;
    *peak = peak.max(fa.abs()).max(fm.abs()).max(fb.abs());
    let whole = simpson_rule(fa, fm, fb, b - a);
    simpson_recurse(f, a, b, fa, fm, fb, whole, MAX_DEPTH, peak)
}

#[allow(clippy::too_many_arguments)]
fn simpson_recurse<T: Real>(
    f: &dyn Fn(T) -> T,
    a: T,
    b: T,
    fa: T,
    fm: T,
    fb: T,
    whole: T,
    depth: usize,
    peak: &mut T,
) -> Result<T> {
    let m = (a + b) * lit(0.5);
    let lm = (a + m) * lit(0.5);
    let rm = (m + b) * lit(0.5);
    let flm = check_finite(f(lm))?;
    let frm = check_finite(f(rm))?;
    *peak = peak.max(flm.abs()).max(frm.abs());
    let left = simpson_rule(fa, flm, fm, m - a);
    let right = simpson_rule(fm, frm, fb, b - m);
    let refined = left + right;
    let err = (refined - whole).abs();
    let tol = lit::<T>(1e-13) * refined.abs().max(*peak * (b - a).abs()).max(lit(1e-30));
    if depth == 0 || err <= lit::<T>(15.0) * tol {
        // classic one-step Richardson correction for Simpson halving
        return Ok(refined + (refined - whole) / lit::<T>(15.0));
    }
    let l = simpson_recurse(f, a, m, fa, flm, fm, left, depth - 1, peak)?;
    let r = simpson_recurse(f, m, b, fm, frm, fb, right, depth - 1, peak)?;
    Ok(l + r)
}

/// Box of admissible coordinate ranges used by [`sample_chart_points`].
#[derive(Debug, Clone, Copy)]
pub struct SampleRanges<T> {
    pub p_range: (T, T),
    pub q_range: (T, T),
    pub w_range: (T, T),
}

impl<T: Real> Default for SampleRanges<T> {
    fn default() -> Self {
        SampleRanges {
            p_range: (lit(0.2), lit(5.0)),
            q_range: (lit(-2.0), lit(2.0)),
            w_range: (lit(-2.0), lit(2.0)),
        }
    }
}

/// Draws `count` reproducible chart points for a given `seed`. All momenta
/// land in `p_range`, whose lower bound must be strictly positive.
pub fn sample_chart_points<T: Real>(
    n: usize,
    count: usize,
    seed: u64,
    ranges: &SampleRanges<T>,
) -> Result<Vec<ChartPoint<T>>> {
    if n == 0 {
        return Err(Error::Contract(
            "dimension parameter n must be at least 1".into(),
        ));
    }
    if !(ranges.p_range.0 > T::zero()) {
        return Err(Error::Domain("p_range lower bound must be positive".into()));
    }
    for (lo, hi) in [ranges.p_range, ranges.q_range, ranges.w_range] {
        if !(hi > lo) {
            return Err(Error::Contract("sample range must be non-empty".into()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(count);
    for _ in 0..count {
        let w = uniform_in(&mut rng, ranges.w_range.0, ranges.w_range.1);
        let q = (0..n)
            .map(|_| uniform_in(&mut rng, ranges.q_range.0, ranges.q_range.1))
            .collect();
        let p = (0..n)
            .map(|_| uniform_in(&mut rng, ranges.p_range.0, ranges.p_range.1))
            .collect();
        points.push(ChartPoint { w, q, p });
    }
    Ok(points)
}

/// Uniform draw in `[lo, hi)`, mapped through a single `f64` in `[0, 1)` so
/// that the stream is identical for every scalar type.
pub(crate) fn uniform_in<T: Real>(rng: &mut impl Rng, lo: T, hi: T) -> T {
    let u: f64 = rng.random();
    lo + (hi - lo) * lit(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::lit;

    fn scheme(step: f64, levels: usize) -> StepScheme<f64> {
        StepScheme::new(step, levels).unwrap()
    }

    #[test]
    fn derivative_of_linear_coordinate_is_one() {
        let x = ChartPoint::new(0.3, vec![1.0], vec![2.0]).unwrap();
        let f = |y: &ChartPoint<f64>| Ok(y.w);
        let d = directional_derivative(&f, &x, 0, &StepScheme::default()).unwrap();
        assert!((d - 1.0).abs() < 1e-10);
    }

    #[test]
    fn derivative_of_inverse_sqrt_family() {
        // d/dp [1 / (2 sqrt(p))] = -p^(-3/2) / 4 = -0.25 at p = 1
        let x = ChartPoint::new(0.0, vec![0.0], vec![1.0]).unwrap();
        let f = |y: &ChartPoint<f64>| Ok(1.0 / (2.0 * y.p[0].sqrt()));
        let d = directional_derivative(&f, &x, 2, &StepScheme::default()).unwrap();
        assert!((d + 0.25).abs() < 1e-9);
    }

    #[test]
    fn derivative_exact_on_quadratics() {
        // central differences have no truncation error on quadratics, so a
        // wide step leaves only round-off
        let x = ChartPoint::new(0.5, vec![-1.5], vec![2.5]).unwrap();
        let f = |y: &ChartPoint<f64>| Ok(3.0 * y.q[0] * y.q[0] + y.q[0] * y.p[0] - 2.0 * y.w);
        let d = directional_derivative(&f, &x, 1, &scheme(1e-2, 2)).unwrap();
        let exact = 6.0 * x.q[0] + x.p[0];
        assert!((d - exact).abs() < 1e-12);
    }

    #[test]
    fn observed_convergence_order_tracks_scheme_order() {
        let exact = 0.5 / 2.0_f64.sqrt();
        for levels in [1usize, 2] {
            let base = if levels == 1 { 0.02 } else { 0.2 };
            let err = |h: f64| {
                let f = |xs: &[f64]| Ok(xs[0].sqrt());
                (partial_derivative(&f, &[2.0], 0, &scheme(h, levels)).unwrap() - exact).abs()
            };
            let order = (err(base) / err(base / 2.0)).log2();
            let nominal = 2.0 * levels as f64;
            assert!(
                (order - nominal).abs() < 0.5,
                "levels {levels}: observed order {order}, nominal {nominal}"
            );
        }
    }

    #[test]
    fn non_finite_evaluation_is_reported() {
        let f = |xs: &[f64]| Ok(xs[0].sqrt());
        // stepping across zero makes sqrt produce NaN
        let err = partial_derivative(&f, &[1e-9], 0, &scheme(1e-5, 2)).unwrap_err();
        assert!(matches!(err, Error::Evaluation(_)));
    }

    #[test]
    fn second_derivative_of_quartic() {
        let f = |xs: &[f64]| Ok(xs[0].powi(4) + xs[0] * xs[1]);
        let d2 = second_partial_derivative(&f, &[1.2, 0.3], 0, 0, &scheme(5e-3, 2)).unwrap();
        assert!((d2 - 12.0 * 1.2f64.powi(2)).abs() < 1e-8);
        let mixed = second_partial_derivative(&f, &[1.2, 0.3], 0, 1, &scheme(5e-3, 2)).unwrap();
        assert!((mixed - 1.0).abs() < 1e-8);
    }

    #[test]
    fn signature_of_simple_diagonals() {
        let m = Mat::diagonal(&[1.0, 1.0, -1.0]);
        let s = matrix_signature(&m, 1e-9).unwrap();
        assert_eq!(
            s,
            SignatureCount {
                n_pos: 2,
                n_neg: 1,
                n_zero: 0
            }
        );

        let z = Mat::<f64>::zeros(3, 3);
        let s = matrix_signature(&z, 1e-9).unwrap();
        assert_eq!(
            s,
            SignatureCount {
                n_pos: 0,
                n_neg: 0,
                n_zero: 3
            }
        );
    }

    #[test]
    fn signature_rejects_asymmetric_input() {
        let m = Mat::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]);
        assert!(matches!(
            matrix_signature(&m, 1e-9),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn signature_is_congruence_invariant() {
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = Mat::diagonal(&[2.0, -3.0, 1.0, -0.5]);
        let expected = matrix_signature(&m, 1e-9).unwrap();
        let mut tested = 0;
        while tested < 20 {
            let a = Mat::from_fn(4, 4, |_, _| uniform_in(&mut rng, -1.0, 1.0));
            let gram = a.transpose().mul(&a);
            let ev = gram.symmetric_eigenvalues();
            let max = ev.iter().cloned().fold(f64::MIN, f64::max);
            let min = ev.iter().cloned().fold(f64::MAX, f64::min);
            if min <= 0.0 || (max / min).sqrt() > 100.0 {
                continue;
            }
            let congruent = a.transpose().mul(&m).mul(&a);
            // symmetrize away round-off before counting
            let sym = congruent.add(&congruent.transpose()).scale(0.5);
            assert_eq!(matrix_signature(&sym, 1e-9).unwrap(), expected);
            tested += 1;
        }
    }

    #[test]
    fn gaussian_integral_matches_sqrt_pi() {
        let space = SampleSpace::Interval {
            lo: -12.0,
            hi: 12.0,
        };
        let spec = QuadratureSpec::adaptive();
        let value = integrate(&space, &spec, &|x: f64| (-x * x).exp()).unwrap();
        assert!((value - std::f64::consts::PI.sqrt()).abs() < 1e-8);
    }

    #[test]
    fn discrete_sum_is_exact() {
        let space = SampleSpace::Discrete {
            points: vec![-1.0, 1.0],
            weights: vec![1.0, 1.0],
        };
        let spec = QuadratureSpec::discrete();
        let value = integrate(&space, &spec, &|x: f64| (0.0 * x).exp()).unwrap();
        assert_eq!(value, 2.0);
    }

    #[test]
    fn polynomial_integration_is_near_exact() {
        let space = SampleSpace::Interval { lo: 0.0, hi: 1.0 };
        let spec = QuadratureSpec::adaptive();
        // guard tolerance is relative; cubic does not vanish at the edges, so
        // integrate the shifted cubic which does
        let value = integrate(&space, &spec, &|x: f64| x * x * (1.0 - x) * (1.0 - x)).unwrap();
        assert!((value - 1.0 / 30.0).abs() < 1e-10);
    }

    #[test]
    fn non_decaying_integrand_trips_truncation_guard() {
        let space = SampleSpace::Interval {
            lo: -20.0,
            hi: 20.0,
        };
        let spec = QuadratureSpec::adaptive();
        let err = integrate(&space, &spec, &|x: f64| 1.0 / (1.0 + x * x)).unwrap_err();
        assert!(matches!(err, Error::Truncation { .. }));
    }

    #[test]
    fn sampling_is_deterministic_and_respects_ranges() {
        let ranges = SampleRanges {
            p_range: (0.2, 5.0),
            q_range: (-2.0, 2.0),
            w_range: (-2.0, 2.0),
        };
        let a = sample_chart_points::<f64>(1, 3, 7, &ranges).unwrap();
        let b = sample_chart_points::<f64>(1, 3, 7, &ranges).unwrap();
        assert_eq!(a, b);

        let pts = sample_chart_points::<f64>(2, 100, 1, &ranges).unwrap();
        assert_eq!(pts.len(), 100);
        for x in &pts {
            assert_eq!(x.dim(), 5);
            for &p in &x.p {
                assert!((0.2..=5.0).contains(&p));
            }
            for &q in &x.q {
                assert!((-2.0..=2.0).contains(&q));
            }
        }
    }

    #[test]
    fn sampling_rejects_non_positive_momenta_range() {
        let ranges = SampleRanges {
            p_range: (0.0, 1.0),
            ..SampleRanges::default()
        };
        assert!(matches!(
            sample_chart_points::<f64>(1, 1, 0, &ranges),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn lit_helper_round_trips() {
        assert_eq!(lit::<f64>(0.25), 0.25);
        assert_eq!(lit::<f32>(0.25), 0.25f32);
    }
}
