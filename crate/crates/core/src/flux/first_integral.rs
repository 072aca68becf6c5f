use crate::oracle::{quad_singular_nodes, QuadNode};
use crate::{Error, Result};

/// First integral of the azimuthal amplitude equation
/// `Theta'' + l^2 Theta - (kappa phi / hbar) / Theta - (kappa^2 / hbar^2) / Theta^3 = 0`:
/// `(Theta')^2 = 2E - l^2 Theta^2 + 2 (kappa phi / hbar) ln|Theta| - kappa^2 / (hbar^2 Theta^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FirstIntegral {
    pub e_theta: f64,
    pub l: f64,
    pub kappa: f64,
    pub phi: f64,
    pub hbar: f64,
}

impl FirstIntegral {
    pub fn new(e_theta: f64, l: f64, kappa: f64, phi: f64, hbar: f64) -> Result<Self> {
        if ![e_theta, l, kappa, phi, hbar].iter().all(|v| v.is_finite()) || !(hbar > 0.0) {
            return Err(Error::InvalidParameter("first integral needs finite data and hbar > 0".into()));
        }
        Ok(Self { e_theta, l, kappa, phi, hbar })
    }

    fn log_coef(&self) -> f64 {
        self.kappa * self.phi / self.hbar
    }

    fn inv_sq_coef(&self) -> f64 {
        (self.kappa / self.hbar).powi(2)
    }

    /// Right-hand side `(Theta')^2` as a function of `Theta > 0`.
    pub fn radicand(&self, t: f64) -> f64 {
        2.0 * self.e_theta - self.l * self.l * t * t + 2.0 * self.log_coef() * t.abs().ln()
            - self.inv_sq_coef() / (t * t)
    }

    /// First three derivatives of the radicand.
    fn radicand_derivatives(&self, t: f64) -> [f64; 3] {
        let (a, b, l2) = (self.log_coef(), self.inv_sq_coef(), self.l * self.l);
        [
            -2.0 * l2 * t + 2.0 * a / t + 2.0 * b / t.powi(3),
            -2.0 * l2 - 2.0 * a / (t * t) - 6.0 * b / t.powi(4),
            4.0 * a / t.powi(3) + 24.0 * b / t.powi(5),
        ]
    }

    /// `Theta''` from the second-order equation.
    pub fn acceleration(&self, t: f64) -> f64 {
        -self.l * self.l * t + self.log_coef() / t + self.inv_sq_coef() / t.powi(3)
    }

    /// Energy `E_theta` of a state `(Theta, Theta')`.
    pub fn energy(&self, t: f64, dt: f64) -> f64 {
        0.5 * dt * dt + 0.5 * self.l * self.l * t * t - self.log_coef() * t.abs().ln()
            + self.inv_sq_coef() / (2.0 * t * t)
    }

    fn bisect(&self, mut inside: f64, mut outside: f64) -> f64 {
        // radicand > 0 at `inside`, <= 0 at `outside`
        for _ in 0..200 {
            let mid = 0.5 * (inside + outside);
            if mid == inside || mid == outside {
                break;
            }
            if self.radicand(mid) > 0.0 {
                inside = mid;
            } else {
                outside = mid;
            }
        }
        outside
    }

    /// Turning points `(below, above)` of the allowed interval containing
    /// `t > 0`, if they exist.
    pub fn turning_points(&self, t: f64) -> (Option<f64>, Option<f64>) {
        let mut up = None;
        let (mut x, mut dx) = (t, 1e-3 * t);
        while x < 1e12 * t.max(1.0) {
            let next = x + dx;
            if self.radicand(next) <= 0.0 {
                up = Some(self.bisect(x, next));
                break;
            }
            x = next;
            dx *= 1.5;
        }
        let mut down = None;
        let (mut x, mut dx) = (t, 1e-3 * t);
        while x > 1e-150 * t {
            let next = (x - dx).max(0.5 * x);
            if self.radicand(next) <= 0.0 {
                down = Some(self.bisect(x, next));
                break;
            }
            x = next;
            dx *= 1.5;
        }
        (down, up)
    }

    /// `|theta - theta0|` accumulated between `target` and the nearest
    /// turning point.
    pub fn quadrature(&self, target: f64) -> Result<f64> {
        let t = target.abs();
        if t == 0.0 || !t.is_finite() {
            return Err(Error::ClassicallyForbidden { theta_amp: target });
        }
        let f_t = self.radicand(t);
        if f_t == 0.0 {
            return Ok(0.0);
        }
        if !(f_t > 0.0) {
            return Err(Error::ClassicallyForbidden { theta_amp: target });
        }
        let tp = match self.turning_points(t) {
            (Some(a), Some(b)) => {
                if t - a <= b - t {
                    a
                } else {
                    b
                }
            }
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => return Err(Error::ClassicallyForbidden { theta_amp: target }),
        };
        let [f1, f2, f3] = self.radicand_derivatives(tp);
        let span = (t - tp).abs();
        let dir = (t - tp).signum();
        // distance below which the radicand is expanded about the turning point
        let local = 1e-3 * span;
        let integrand = |n: QuadNode| {
            // distance from the turning point along the path
            let (d, x) = if tp < t { (n.from_a, n.x) } else { (n.from_b, n.x) };
            let f = if d < local {
                let s = dir * d;
                s * (f1 + s * (0.5 * f2 + s * f3 / 6.0))
            } else {
                self.radicand(x)
            };
            1.0 / f.sqrt()
        };
        let (a, b) = if tp < t { (tp, t) } else { (t, tp) };
        quad_singular_nodes(integrand, a, b, 0.5, 1e-12)
    }
}

/// Quadrature form of the azimuthal first integral: the coordinate
/// distance `|theta - theta0|` from the turning point nearest `Theta_target`
/// (the sign is left to the caller).
pub fn theta_first_integral_quadrature(
    theta_target: f64,
    e_theta: f64,
    l: f64,
    kappa_theta: f64,
    phi: f64,
    hbar: f64,
) -> Result<f64> {
    FirstIntegral::new(e_theta, l, kappa_theta, phi, hbar)?.quadrature(theta_target)
}
