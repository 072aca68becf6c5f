//! Dormand–Prince 5(4) with cubic Hermite dense output.

use crate::profile::{Provenance, SampledProfile, UniformGrid};
use crate::{Error, Result};

// Butcher tableau
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const B5: [f64; 7] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
const B4: [f64; 7] =
    [5179.0 / 57600.0, 0.0, 7571.0 / 16695.0, 393.0 / 640.0, -92097.0 / 339200.0, 187.0 / 2100.0, 1.0 / 40.0];

const MAX_STEPS: usize = 2_000_000;

/// Initial-value problem `y' = rhs(t, y)` on `[t0, t1]` (either direction).
pub struct IvpProblem<F> {
    pub rhs: F,
    pub y0: Vec<f64>,
    pub t0: f64,
    pub t1: f64,
    pub rel_tol: f64,
    pub abs_tol: f64,
}

impl<F> IvpProblem<F>
where
    F: Fn(f64, &[f64], &mut [f64]),
{
    pub fn new(rhs: F, y0: Vec<f64>, t0: f64, t1: f64, rel_tol: f64, abs_tol: f64) -> Result<Self> {
        if y0.is_empty() {
            return Err(Error::InvalidParameter("IVP needs at least one state component".into()));
        }
        if !(rel_tol > 0.0) || !(abs_tol > 0.0) {
            return Err(Error::InvalidParameter("IVP tolerances must be positive".into()));
        }
        if !(t1 != t0) || !t0.is_finite() || !t1.is_finite() {
            return Err(Error::InvalidParameter(format!("degenerate span [{t0}, {t1}]")));
        }
        Ok(Self { rhs, y0, t0, t1, rel_tol, abs_tol })
    }

    pub fn dimension(&self) -> usize {
        self.y0.len()
    }
}

/// Accepted steps with state and slope at each node; evaluation between
/// nodes uses cubic Hermite interpolation.
#[derive(Debug, Clone)]
pub struct Trajectory {
    ts: Vec<f64>,
    ys: Vec<Vec<f64>>,
    fs: Vec<Vec<f64>>,
}

impl Trajectory {
    pub fn nodes(&self) -> &[f64] {
        &self.ts
    }

    pub fn states(&self) -> &[Vec<f64>] {
        &self.ys
    }

    pub fn final_state(&self) -> &[f64] {
        self.ys.last().expect("trajectory has at least the initial node")
    }

    pub fn steps(&self) -> usize {
        self.ts.len() - 1
    }

    /// Dense output at `t`; clamps to the integrated span.
    pub fn eval(&self, t: f64) -> Vec<f64> {
        let dir = if self.ts[self.ts.len() - 1] >= self.ts[0] { 1.0 } else { -1.0 };
        let idx = self.ts.partition_point(|&s| dir * s < dir * t);
        let i = idx.clamp(1, self.ts.len() - 1) - 1;
        let (ta, tb) = (self.ts[i], self.ts[i + 1]);
        let h = tb - ta;
        let s = ((t - ta) / h).clamp(0.0, 1.0);
        let h00 = 2.0 * s * s * s - 3.0 * s * s + 1.0;
        let h10 = s * s * s - 2.0 * s * s + s;
        let h01 = -2.0 * s * s * s + 3.0 * s * s;
        let h11 = s * s * s - s * s;
        (0..self.ys[i].len())
            .map(|k| {
                h00 * self.ys[i][k] + h10 * h * self.fs[i][k] + h01 * self.ys[i + 1][k] + h11 * h * self.fs[i + 1][k]
            })
            .collect()
    }

    /// One profile per state component on `grid`.
    pub fn sample(&self, grid: &UniformGrid, coordinate: &str, names: &[&str]) -> Result<Vec<SampledProfile>> {
        let pts = grid.points();
        let states: Vec<Vec<f64>> = pts.iter().map(|&t| self.eval(t)).collect();
        let dim = self.ys[0].len();
        (0..dim)
            .map(|k| {
                let name = names.get(k).copied().unwrap_or("y");
                SampledProfile::real(
                    coordinate,
                    pts.clone(),
                    states.iter().map(|s| s[k]).collect(),
                    Provenance::new("integrate_ivp").with(format!("component:{name}"), k as f64),
                )
            })
            .collect()
    }
}

fn error_norm(y: &[f64], y_new: &[f64], err: &[f64], rtol: f64, atol: f64) -> f64 {
    y.iter()
        .zip(y_new)
        .zip(err)
        .map(|((&a, &b), &e)| e.abs() / (atol + rtol * a.abs().max(b.abs())))
        .fold(0.0, f64::max)
}

/// Adaptive Dormand–Prince integration. Fails with
/// [`Error::IntegrationStalled`] when the step size underflows (typically
/// next to a singularity of the right-hand side).
pub fn integrate_ivp<F>(p: &IvpProblem<F>) -> Result<Trajectory>
where
    F: Fn(f64, &[f64], &mut [f64]),
{
    let n = p.dimension();
    let dir = (p.t1 - p.t0).signum();
    let span = (p.t1 - p.t0).abs();

    let mut t = p.t0;
    let mut y = p.y0.clone();
    let mut f0 = vec![0.0; n];
    (p.rhs)(t, &y, &mut f0);
    if f0.iter().any(|v| !v.is_finite()) {
        return Err(Error::IntegrationStalled { last_good: t });
    }

    // starting step from the scale of y and y'
    let d0 = y.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let d1 = f0.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut h = if d0 > 1e-5 && d1 > 1e-5 { 0.01 * d0 / d1 } else { 1e-4 * span.max(1e-3) };
    h = h.min(span);

    let mut traj = Trajectory { ts: vec![t], ys: vec![y.clone()], fs: vec![f0.clone()] };

    let mut k = vec![vec![0.0; n]; 7];
    let mut stage = vec![0.0; n];
    let mut y_new = vec![0.0; n];
    let mut err = vec![0.0; n];
    k[0].copy_from_slice(&f0);

    for _ in 0..MAX_STEPS {
        let remaining = (p.t1 - t) * dir;
        if remaining <= 0.0 {
            return Ok(traj);
        }
        let last = h >= remaining;
        if last {
            h = remaining;
        }
        if h < 16.0 * f64::EPSILON * t.abs().max(1.0) {
            return Err(Error::IntegrationStalled { last_good: t });
        }
        let hs = h * dir;

        for s in 1..7 {
            for i in 0..n {
                let mut acc = 0.0;
                for (j, kj) in k.iter().enumerate().take(s) {
                    acc += A[s][j] * kj[i];
                }
                stage[i] = y[i] + hs * acc;
            }
            let (head, tail) = k.split_at_mut(s);
            let _ = head;
            (p.rhs)(t + C[s] * hs, &stage, &mut tail[0]);
        }
        for i in 0..n {
            let mut hi = 0.0;
            let mut lo = 0.0;
            for s in 0..7 {
                hi += B5[s] * k[s][i];
                lo += B4[s] * k[s][i];
            }
            y_new[i] = y[i] + hs * hi;
            err[i] = hs * (hi - lo);
        }
        let finite = y_new.iter().chain(k[6].iter()).all(|v| v.is_finite());
        let e = if finite { error_norm(&y, &y_new, &err, p.rel_tol, p.abs_tol) } else { f64::INFINITY };

        if e <= 1.0 {
            t = if last { p.t1 } else { t + hs };
            y.copy_from_slice(&y_new);
            // first-same-as-last
            let fsal = k[6].clone();
            k[0].copy_from_slice(&fsal);
            traj.ts.push(t);
            traj.ys.push(y.clone());
            traj.fs.push(fsal);
            let factor = if e == 0.0 { 5.0 } else { (0.9 * e.powf(-0.2)).clamp(0.2, 5.0) };
            h *= factor;
        } else {
            let factor = if e.is_finite() { (0.9 * e.powf(-0.2)).clamp(0.1, 0.9) } else { 0.1 };
            h *= factor;
        }
    }
    Err(Error::IntegrationStalled { last_good: t })
}
