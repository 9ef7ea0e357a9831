//! Darboux chart of the (2n+1)-dimensional phase space.
//!
//! A point carries the coordinates `(w, q^1..q^n, p_1..p_n)`. Throughout the
//! crate the flattened coordinate index runs over the blocks
//! `0 | 1..n | n+1..2n`, i.e. axis `0` is `w`, axis `a` (1-based) is `q^a`
//! and axis `n+a` is `p_a`.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A point `(w, q, p)` of the phase-space chart.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartPoint<T> {
    pub w: T,
    pub q: Vec<T>,
    pub p: Vec<T>,
}

impl<T: Real> ChartPoint<T> {
    /// Builds a point, checking finiteness and matching block lengths.
    pub fn new(w: T, q: Vec<T>, p: Vec<T>) -> Result<Self> {
        if q.len() != p.len() {
            return Err(Error::Contract(format!(
                "q and p blocks must have equal length, got {} and {}",
                q.len(),
                p.len()
            )));
        }
        let point = ChartPoint { w, q, p };
        if !point.is_finite() {
            return Err(Error::Domain(
                "chart point has a non-finite coordinate".into(),
            ));
        }
        Ok(point)
    }

    /// Number of observable pairs `n`; the chart dimension is `2n + 1`.
    #[inline]
    pub fn n(&self) -> usize {
        self.q.len()
    }

    /// Chart dimension `2n + 1`.
    #[inline]
    pub fn dim(&self) -> usize {
        2 * self.n() + 1
    }

    pub fn is_finite(&self) -> bool {
        self.w.is_finite()
            && self.q.iter().all(|x| x.is_finite())
            && self.p.iter().all(|x| x.is_finite())
    }

    /// All momenta strictly positive; required by operations that take square
    /// roots of the `p_a`.
    pub fn has_positive_p(&self) -> bool {
        self.p.iter().all(|&x| x > T::zero())
    }

    pub fn require_positive_p(&self) -> Result<()> {
        if self.has_positive_p() {
            Ok(())
        } else {
            Err(Error::Domain(
                "canonical/orthonormal frame requires p_a > 0 for all a".into(),
            ))
        }
    }

    /// Flattened coordinates in block order `(w | q | p)`.
    pub fn coords(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.dim());
        out.push(self.w);
        out.extend_from_slice(&self.q);
        out.extend_from_slice(&self.p);
        out
    }

    /// Rebuilds a point from flattened coordinates.
    pub fn from_coords(coords: &[T]) -> Self {
        debug_assert!(coords.len() % 2 == 1, "chart dimension must be odd");
        let n = (coords.len() - 1) / 2;
        ChartPoint {
            w: coords[0],
            q: coords[1..=n].to_vec(),
            p: coords[n + 1..].to_vec(),
        }
    }

    /// Returns the point displaced by `delta` along coordinate `axis`.
    pub fn shifted(&self, axis: usize, delta: T) -> Self {
        let mut coords = self.coords();
        coords[axis] += delta;
        Self::from_coords(&coords)
    }
}
