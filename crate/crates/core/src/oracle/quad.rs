//! Tanh-sinh quadrature on a finite interval.
//!
//! Nodes cluster double-exponentially at both ends, so integrands with
//! algebraic endpoint singularities `|x - a|^{-alpha}`, `alpha < 1`, are
//! integrated to near machine precision. The integrand may ask for the
//! distance of each node to the endpoints, which stays accurate even when
//! `x` itself rounds onto the endpoint.

use std::f64::consts::FRAC_PI_2;

use crate::{Error, Result};

const MAX_LEVEL: u32 = 12;

/// A quadrature node with its exact distances to both endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadNode {
    pub x: f64,
    pub from_a: f64,
    pub from_b: f64,
}

/// Integrate `f` over `[a, b]`. `endpoint_order` is the strongest endpoint
/// singularity exponent (`0` for a regular integrand, `0.5` for an inverse
/// square root); it fixes how far into the endpoints the rule reaches.
pub fn quad_singular(f: impl Fn(f64) -> f64, a: f64, b: f64, endpoint_order: f64, tol: f64) -> Result<f64> {
    quad_singular_nodes(|n: QuadNode| f(n.x), a, b, endpoint_order, tol)
}

/// As [`quad_singular`], with the integrand receiving [`QuadNode`]s.
pub fn quad_singular_nodes(f: impl Fn(QuadNode) -> f64, a: f64, b: f64, endpoint_order: f64, tol: f64) -> Result<f64> {
    tanh_sinh(&f, a, b, endpoint_order, tol)
}

fn tanh_sinh(f: &dyn Fn(QuadNode) -> f64, a: f64, b: f64, endpoint_order: f64, tol: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&endpoint_order) {
        return Err(Error::InvalidParameter(format!(
            "endpoint order must lie in [0, 1) for an integrable singularity (got {endpoint_order})"
        )));
    }
    if !(tol > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidParameter("quadrature needs finite limits and tol > 0".into()));
    }
    if a == b {
        return Ok(0.0);
    }
    if b < a {
        return tanh_sinh(
            &|n: QuadNode| f(QuadNode { x: n.x, from_a: n.from_b, from_b: n.from_a }),
            b,
            a,
            endpoint_order,
            tol,
        )
        .map(|v| -v);
    }

    let half = 0.5 * (b - a);
    // Stop once the endpoint contribution d^{1-alpha} is far below tol.
    let d_min = (1e-3 * tol).powf(1.0 / (1.0 - endpoint_order)).max(1e-300) * half;

    // Contribution of the node pair at +-t (the centre when t = 0).
    let pair = |t: f64| -> Option<f64> {
        let u = FRAC_PI_2 * t.sinh();
        let w = half * FRAC_PI_2 * t.cosh() / (u.cosh() * u.cosh());
        // distance of the node nearest to b (t > 0), computed without cancellation
        let near = 2.0 * half / (1.0 + (2.0 * u).exp());
        if near < d_min {
            return None;
        }
        let far = 2.0 * half - near;
        let right = QuadNode { x: b - near, from_a: far, from_b: near };
        if t == 0.0 {
            return Some(w * f(right));
        }
        let left = QuadNode { x: a + near, from_a: near, from_b: far };
        Some(w * (f(right) + f(left)))
    };

    // level 0: step 1
    let mut h = 1.0;
    let mut sum = pair(0.0).unwrap_or(0.0);
    let mut j = 1;
    while let Some(v) = pair(j as f64) {
        sum += v;
        j += 1;
    }
    let mut estimate = h * sum;
    let mut diff = f64::INFINITY;

    for _ in 1..=MAX_LEVEL {
        h *= 0.5;
        let mut fresh = 0.0;
        let mut k = 1;
        while let Some(v) = pair(k as f64 * h) {
            fresh += v;
            k += 2;
        }
        sum += fresh;
        let next = h * sum;
        diff = (next - estimate).abs();
        estimate = next;
        if !estimate.is_finite() {
            return Err(Error::QuadratureBudgetExceeded { estimate: f64::INFINITY });
        }
        // the level difference overestimates the error of the finer level
        if diff <= tol.max(4.0 * f64::EPSILON * estimate.abs()) && h <= 0.125 {
            return Ok(estimate);
        }
    }
    Err(Error::QuadratureBudgetExceeded { estimate: diff })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma;
    use num_complex::Complex64;
    use std::f64::consts::PI;

    #[test]
    fn inverse_sqrt_at_left_end() {
        let v = quad_singular_nodes(|n| 1.0 / n.from_a.sqrt(), 0.0, 1.0, 0.5, 1e-12).unwrap();
        assert!((v - 2.0).abs() < 1e-10, "{v}");
    }

    #[test]
    fn arcsine_density() {
        let v = quad_singular_nodes(|n| 1.0 / (n.from_b * (2.0 - n.from_b)).sqrt(), 0.0, 1.0, 0.5, 1e-12).unwrap();
        assert!((v - PI / 2.0).abs() < 1e-10, "{v}");
    }

    #[test]
    fn plain_closure_on_smooth_integrand() {
        let v = quad_singular(f64::exp, 0.0, 1.0, 0.0, 1e-13).unwrap();
        assert!((v - (1f64.exp() - 1.0)).abs() < 1e-13);
        let back = quad_singular(f64::exp, 1.0, 0.0, 0.0, 1e-13).unwrap();
        assert!((back + v).abs() < 1e-14);
    }

    #[test]
    fn polynomials_times_inverse_sqrt() {
        let beta = |p: f64, q: f64| {
            let g = |z: f64| gamma(Complex64::new(z, 0.0)).unwrap().re;
            g(p) * g(q) / g(p + q)
        };
        for k in 0..=10 {
            let kf = k as f64;
            let left = quad_singular_nodes(|n| n.x.powi(k) / n.from_a.sqrt(), 0.0, 1.0, 0.5, 1e-12).unwrap();
            assert!((left - 1.0 / (kf + 0.5)).abs() < 1e-10, "k={k}");
            let right = quad_singular_nodes(|n| n.x.powi(k) / n.from_b.sqrt(), 0.0, 1.0, 0.5, 1e-12).unwrap();
            assert!((right - beta(kf + 1.0, 0.5)).abs() < 1e-10, "k={k}");
        }
    }

    #[test]
    fn rejects_non_integrable_order() {
        assert!(quad_singular(|x| x, 0.0, 1.0, 1.0, 1e-10).is_err());
        assert!(quad_singular(|x| x, 0.0, 1.0, 0.5, 0.0).is_err());
    }

    #[test]
    fn budget_exceeded_on_non_integrable_input() {
        let r = quad_singular_nodes(|n| 1.0 / n.from_a, 0.0, 1.0, 0.5, 1e-12);
        assert!(matches!(r, Err(Error::QuadratureBudgetExceeded { .. })));
    }
}
