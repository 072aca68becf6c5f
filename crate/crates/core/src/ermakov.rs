//! Ermakov–Pinney amplitudes built from a pair of linear solutions, and the
//! Ermakov–Lewis invariant.
//!
//! For `y'' + Omega^2(q) y = 0` with independent solutions `u1, u2` of
//! Wronskian `W`, the amplitude `sigma = sqrt(A u1^2 + B u2^2 + 2D u1 u2)`
//! solves `sigma'' + Omega^2 sigma = c^2 / sigma^3` whenever
//! `AB - D^2 = c^2 / W^2`.

use crate::jet::Jet;
use crate::oracle::{fd_residual, ResidualReport};
use crate::profile::{Provenance, SampledProfile, UniformGrid};
use crate::{Error, Result};

/// Values and first derivatives of a solution pair at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairSample {
    pub u1: f64,
    pub du1: f64,
    pub u2: f64,
    pub du2: f64,
}

impl PairSample {
    pub fn wronskian(&self) -> f64 {
        self.u1 * self.du2 - self.u2 * self.du1
    }
}

/// Two independent solutions of `y'' + Omega^2(q) y = 0`.
pub trait LinearPair {
    fn sample(&self, q: f64) -> Result<PairSample>;

    /// `Omega^2(q)` of the shared linear equation.
    fn omega_sq(&self, q: f64) -> f64;

    /// A point inside the domain where the nominal Wronskian is taken.
    fn reference_point(&self) -> f64;

    fn wronskian(&self) -> Result<f64> {
        Ok(self.sample(self.reference_point())?.wronskian())
    }
}

/// `u1 = cos(omega q)`, `u2 = sin(omega q)`, Wronskian `omega`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigPair {
    pub omega: f64,
}

impl TrigPair {
    pub fn new(omega: f64) -> Result<Self> {
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(Error::InvalidParameter(format!("frequency must be positive (got {omega})")));
        }
        Ok(Self { omega })
    }
}

impl LinearPair for TrigPair {
    fn sample(&self, q: f64) -> Result<PairSample> {
        let (s, c) = (self.omega * q).sin_cos();
        Ok(PairSample { u1: c, du1: -self.omega * s, u2: s, du2: self.omega * c })
    }

    fn omega_sq(&self, _q: f64) -> f64 {
        self.omega * self.omega
    }

    fn reference_point(&self) -> f64 {
        0.0
    }

    fn wronskian(&self) -> Result<f64> {
        Ok(self.omega)
    }
}

/// `(A, B, D, c, W)` with `AB - D^2 = c^2 / W^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EPCoefficients {
    pub a: f64,
    pub b: f64,
    pub d: f64,
    pub c: f64,
    pub w: f64,
}

impl EPCoefficients {
    pub fn new(a: f64, b: f64, d: f64, c: f64, w: f64) -> Result<Self> {
        if ![a, b, d, c, w].iter().all(|v| v.is_finite()) {
            return Err(Error::InadmissibleCoefficients("non-finite entry".into()));
        }
        if w == 0.0 {
            return Err(Error::InadmissibleCoefficients("zero Wronskian".into()));
        }
        if !(a > 0.0 || b > 0.0) {
            return Err(Error::InadmissibleCoefficients(format!("need A > 0 or B > 0 (got A = {a}, B = {b})")));
        }
        let target = c * c / (w * w);
        let det = a * b - d * d;
        let scale = target.max((a * b).abs()).max(d * d);
        if (det - target).abs() > 1e-12 * scale {
            return Err(Error::InadmissibleCoefficients(format!("AB - D^2 = {det} but c^2/W^2 = {target}")));
        }
        Ok(Self { a, b, d, c, w })
    }

    /// Solve the constraint for `B` given `A > 0`.
    pub fn from_ad(a: f64, d: f64, c: f64, w: f64) -> Result<Self> {
        if !(a > 0.0) || w == 0.0 {
            return Err(Error::InadmissibleCoefficients(format!(
                "from_ad needs A > 0 and W != 0 (got A = {a}, W = {w})"
            )));
        }
        let b = (c * c / (w * w) + d * d) / a;
        Self::new(a, b, d, c, w)
    }

    /// `A = B = |c/W|`, `D = 0`.
    pub fn symmetric(c: f64, w: f64) -> Result<Self> {
        let s = (c / w).abs();
        if c == 0.0 {
            return Self::new(1.0, 0.0, 0.0, 0.0, w);
        }
        Self::new(s, s, 0.0, c, w)
    }

    /// Ermakov constant `k = c^2`.
    pub fn k(&self) -> f64 {
        self.c * self.c
    }
}

/// `sigma(q)` for a pair and admissible coefficients.
#[derive(Debug, Clone)]
pub struct PinneyAmplitude<P> {
    pair: P,
    coef: EPCoefficients,
}

impl<P: LinearPair> PinneyAmplitude<P> {
    pub fn new(pair: P, coef: EPCoefficients) -> Result<Self> {
        let w = pair.wronskian()?;
        if (w - coef.w).abs() > 1e-8 * w.abs().max(coef.w.abs()) {
            return Err(Error::InadmissibleCoefficients(format!(
                "coefficients built for W = {} but the pair has W = {w}",
                coef.w
            )));
        }
        Ok(Self { pair, coef })
    }

    pub fn pair(&self) -> &P {
        &self.pair
    }

    pub fn coefficients(&self) -> &EPCoefficients {
        &self.coef
    }

    fn radicand(&self, q: f64) -> Result<(PairSample, Jet)> {
        let s = self.pair.sample(q)?;
        let om = self.pair.omega_sq(q);
        let (a, b, d) = (self.coef.a, self.coef.b, self.coef.d);
        let (d2u1, d2u2) = (-om * s.u1, -om * s.u2);
        let value = a * s.u1 * s.u1 + b * s.u2 * s.u2 + 2.0 * d * s.u1 * s.u2;
        let d1 = 2.0 * (a * s.u1 * s.du1 + b * s.u2 * s.du2 + d * (s.du1 * s.u2 + s.u1 * s.du2));
        let d2 = 2.0
            * (a * (s.du1 * s.du1 + s.u1 * d2u1)
                + b * (s.du2 * s.du2 + s.u2 * d2u2)
                + d * (d2u1 * s.u2 + 2.0 * s.du1 * s.du2 + s.u1 * d2u2));
        Ok((s, Jet::new(value, d1, d2)))
    }

    pub fn value(&self, q: f64) -> Result<f64> {
        let (_, r) = self.radicand(q)?;
        if r.value < 0.0 {
            return Err(Error::RadicandNegative { at: q, radicand: r.value });
        }
        Ok(r.value.sqrt())
    }

    /// `sigma` with analytic first and second derivatives.
    pub fn jet(&self, q: f64) -> Result<Jet> {
        let (_, r) = self.radicand(q)?;
        if r.value < 0.0 {
            return Err(Error::RadicandNegative { at: q, radicand: r.value });
        }
        if r.value == 0.0 {
            return Err(Error::AmplitudeNode);
        }
        Ok(r.sqrt())
    }

    /// Invariant along `y = u1`.
    pub fn invariant_u1(&self, q: f64) -> Result<f64> {
        let (s, _) = self.radicand(q)?;
        let sig = self.jet(q)?;
        ermakov_invariant(s.u1, s.du1, sig.value, sig.d1, self.coef.k())
    }

    pub fn tabulate(&self, coordinate: &str, grid: &UniformGrid) -> Result<SampledProfile> {
        let meta = Provenance::new("pinney_amplitude")
            .with("A", self.coef.a)
            .with("B", self.coef.b)
            .with("D", self.coef.d)
            .with("c", self.coef.c)
            .with("W", self.coef.w);
        SampledProfile::tabulate(coordinate, grid, meta, |q| self.value(q))
    }
}

/// `I = [(sigma y' - sigma' y)^2 + k (y/sigma)^2] / 2`.
pub fn ermakov_invariant(y: f64, dy: f64, sigma: f64, dsigma: f64, k: f64) -> Result<f64> {
    if sigma == 0.0 {
        return Err(Error::AmplitudeNode);
    }
    let wr = sigma * dy - dsigma * y;
    Ok(0.5 * (wr * wr + k * (y / sigma) * (y / sigma)))
}

/// Max over interior grid points of `|sigma'' + Omega^2 sigma - c^2/sigma^3|`
/// with central differences.
pub fn pinney_residual(
    sigma: impl Fn(f64) -> Result<f64>,
    omega_sq: impl Fn(f64) -> f64,
    c: f64,
    grid: &UniformGrid,
) -> Result<ResidualReport> {
    let profile = SampledProfile::tabulate("q", grid, Provenance::new("pinney_residual"), &sigma)?;
    let values = profile.real_values().expect("tabulated profiles are real");
    if let Some(i) = values.iter().position(|&s| s == 0.0) {
        return Err(Error::NodeInResidualWindow { at: profile.grid[i] });
    }
    let k = c * c;
    fd_residual(&profile, |y, _d1, d2, q| d2 + omega_sq(q) * y - k / (y * y * y))
}

/// Largest deviation of `u1 u2' - u2 u1'` from its value at the grid
/// midpoint, relative to that value.
pub fn wronskian_variation(pair: &impl LinearPair, grid: &UniformGrid) -> Result<f64> {
    let mid = pair.sample(0.5 * (grid.start + grid.stop))?.wronskian();
    if mid == 0.0 {
        return Err(Error::InadmissibleCoefficients("pair is linearly dependent".into()));
    }
    grid.points()
        .iter()
        .map(|&q| Ok(((pair.sample(q)?.wronskian() - mid) / mid).abs()))
        .try_fold(0.0f64, |m, v: Result<f64>| Ok(m.max(v?)))
}

/// `(max - min) / |mean|` of a sample set.
pub fn relative_variation(values: &[f64]) -> f64 {
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    (max - min) / mean.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn symmetric_trig_amplitude_is_constant() {
        let (c, om) = (1.0, 2.0);
        let amp = PinneyAmplitude::new(TrigPair::new(om).unwrap(), EPCoefficients::symmetric(c, om).unwrap()).unwrap();
        for &q in &[0.0, 0.3, 1.7, -4.0] {
            assert!((amp.value(q).unwrap() - (c / om).sqrt()).abs() < 1e-15);
        }
    }

    #[test]
    fn invariant_of_cosine_against_constant_amplitude() {
        let (c, om) = (1.0f64, 2.0f64);
        let sigma = (c / om).sqrt();
        for &q in &[0.0f64, 0.4, 1.1, 2.9] {
            let i = ermakov_invariant((om * q).cos(), -om * (om * q).sin(), sigma, 0.0, c * c).unwrap();
            assert!((i - 0.5 * c * om).abs() < 1e-14);
        }
    }

    #[test]
    fn invariant_degenerate_cases() {
        assert_eq!(ermakov_invariant(0.7, 0.2, 0.7, 0.2, 0.0).unwrap(), 0.0);
        // k = 0 leaves half the squared Wronskian of y and sigma
        let i = ermakov_invariant(0.3, 1.2, 0.8, -0.5, 0.0).unwrap();
        let w: f64 = 0.8 * 1.2 - (-0.5) * 0.3;
        assert!((i - 0.5 * w * w).abs() < 1e-15);
        assert_eq!(ermakov_invariant(1.0, 0.0, 0.0, 1.0, 1.0), Err(Error::AmplitudeNode));
    }

    #[test]
    fn zero_flux_recovers_linear_solution() {
        let om = 1.3;
        let amp =
            PinneyAmplitude::new(TrigPair::new(om).unwrap(), EPCoefficients::new(1.0, 0.0, 0.0, 0.0, om).unwrap())
                .unwrap();
        for &q in &[0.1, 1.0, 2.0] {
            assert!((amp.value(q).unwrap() - (om * q).cos().abs()).abs() < 1e-15);
        }
    }

    #[test]
    fn cross_term_keeps_amplitude_positive() {
        let om = 2.0;
        let coef = EPCoefficients::from_ad(1.0, 0.4, 1.0, om).unwrap();
        let amp = PinneyAmplitude::new(TrigPair::new(om).unwrap(), coef).unwrap();
        let g = UniformGrid::new(0.0, 2.0 * std::f64::consts::PI, 2001).unwrap();
        let min = g.points().iter().map(|&q| amp.value(q).unwrap()).fold(f64::INFINITY, f64::min);
        assert!(min > 0.1, "min sigma {min}");
        // the amplitude oscillates
        let max = g.points().iter().map(|&q| amp.value(q).unwrap()).fold(0.0, f64::max);
        assert!(max - min > 0.1);
    }

    #[test]
    fn residual_is_second_order_and_sensitive() {
        let om = 1.0;
        let coef = EPCoefficients::from_ad(1.0, 0.2, 1.0, om).unwrap();
        let amp = PinneyAmplitude::new(TrigPair::new(om).unwrap(), coef).unwrap();
        let g = |h: f64| UniformGrid::new(0.0, 3.0, (3.0 / h).round() as usize + 1).unwrap();
        let coarse = pinney_residual(|q| amp.value(q), |_| om * om, 1.0, &g(1e-3)).unwrap();
        let fine = pinney_residual(|q| amp.value(q), |_| om * om, 1.0, &g(5e-4)).unwrap();
        assert!(coarse.max_abs < 1e-6, "{coarse:?}");
        let ratio = coarse.max_abs / fine.max_abs;
        assert!((3.5..=4.5).contains(&ratio), "ratio {ratio}");
        let bad = pinney_residual(|q| amp.value(q).map(|s| 1.01 * s), |_| om * om, 1.0, &g(1e-3)).unwrap();
        assert!(bad.max_abs > 1e-3);
    }

    #[test]
    fn node_in_window_is_reported() {
        let r = pinney_residual(Ok, |_| 1.0, 1.0, &UniformGrid::new(-1.0, 1.0, 11).unwrap());
        assert!(matches!(r, Err(Error::NodeInResidualWindow { .. })));
    }

    #[test]
    fn negative_radicand_is_reported() {
        // bypass validation to build an inadmissible set
        let coef = EPCoefficients { a: 1.0, b: -1.0, d: 0.0, c: 1.0, w: 1.0 };
        let amp = PinneyAmplitude { pair: TrigPair::new(1.0).unwrap(), coef };
        assert!(matches!(amp.value(1.5), Err(Error::RadicandNegative { .. })));
    }

    #[test]
    fn coefficient_validation() {
        assert!(EPCoefficients::new(1.0, 1.0, 0.0, 1.0, 2.0).is_err());
        assert!(EPCoefficients::new(0.0, 0.0, 0.0, 0.0, 1.0).is_err());
        assert!(EPCoefficients::new(1.0, 1.0, 0.0, 1.0, 0.0).is_err());
        assert!(EPCoefficients::new(0.5, 0.5, 0.0, 1.0, 2.0).is_ok());
    }

    #[test]
    fn analytic_jet_matches_differences() {
        let om = 1.7;
        let coef = EPCoefficients::from_ad(0.8, -0.3, 0.9, om).unwrap();
        let amp = PinneyAmplitude::new(TrigPair::new(om).unwrap(), coef).unwrap();
        let q = 0.77;
        let h = 1e-4;
        let f = |q: f64| amp.value(q).unwrap();
        let j = amp.jet(q).unwrap();
        assert!((j.d1 - (f(q + h) - f(q - h)) / (2.0 * h)).abs() < 1e-7);
        assert!((j.d2 - (f(q + h) - 2.0 * f(q) + f(q - h)) / (h * h)).abs() < 1e-5);
        // analytic Pinney residual
        assert!((j.d2 + om * om * j.value - coef.k() / j.value.powi(3)).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn invariant_is_constant_for_admissible_sets(
            om in 0.3f64..3.0, a in 0.2f64..3.0, d in -1.0f64..1.0, c in 0.1f64..2.0
        ) {
            let coef = EPCoefficients::from_ad(a, d, c, om).unwrap();
            let amp = PinneyAmplitude::new(TrigPair::new(om).unwrap(), coef).unwrap();
            let vals: Vec<f64> = (0..50).map(|i| amp.invariant_u1(0.1 * i as f64).unwrap()).collect();
            prop_assert!(relative_variation(&vals) < 1e-8);
        }
    }
}
