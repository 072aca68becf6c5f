//! Sampled profiles: a coordinate grid plus real or complex samples, tagged
//! with the operation and parameters that produced them.

use num_complex::Complex64;
use std::str::FromStr;

use crate::{Error, Result};

/// `start:stop:count` grid with `count >= 2` evenly spaced points including both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl UniformGrid {
    pub fn new(start: f64, stop: f64, count: usize) -> Result<Self> {
        if count < 2 {
            return Err(Error::InvalidGrid(format!("count must be >= 2 (got {count})")));
        }
        if !(stop > start) || !start.is_finite() || !stop.is_finite() {
            return Err(Error::InvalidGrid(format!("need finite start < stop (got {start}:{stop})")));
        }
        Ok(Self { start, stop, count })
    }

    pub fn step(&self) -> f64 {
        (self.stop - self.start) / (self.count - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.count {
            self.stop
        } else {
            self.start + i as f64 * self.step()
        }
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.count).map(|i| self.point(i)).collect()
    }
}

impl FromStr for UniformGrid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::InvalidGrid(format!("expected start:stop:count, got '{s}'")));
        }
        let num = |p: &str| -> Result<f64> {
            p.trim().parse::<f64>().map_err(|_| Error::InvalidGrid(format!("'{p}' is not a number")))
        };
        let count = parts[2]
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::InvalidGrid(format!("'{}' is not a point count", parts[2])))?;
        UniformGrid::new(num(parts[0])?, num(parts[1])?, count)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ProfileValues {
    Real(Vec<f64>),
    Complex(Vec<Complex64>),
}

impl ProfileValues {
    pub fn len(&self) -> usize {
        match self {
            ProfileValues::Real(v) => v.len(),
            ProfileValues::Complex(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, ProfileValues::Complex(_))
    }
}

/// Which operation generated a profile, with its parameters in call order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Provenance {
    pub operation: String,
    pub parameters: Vec<(String, f64)>,
}

impl Provenance {
    pub fn new(operation: impl Into<String>) -> Self {
        Self { operation: operation.into(), parameters: Vec::new() }
    }

    pub fn with(mut self, name: impl Into<String>, value: f64) -> Self {
        self.parameters.push((name.into(), value));
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampledProfile {
    pub coordinate: String,
    pub grid: Vec<f64>,
    pub values: ProfileValues,
    pub metadata: Provenance,
}

impl SampledProfile {
    pub fn new(
        coordinate: impl Into<String>,
        grid: Vec<f64>,
        values: ProfileValues,
        metadata: Provenance,
    ) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::InvalidGrid(format!("{} grid points but {} samples", grid.len(), values.len())));
        }
        if grid.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidGrid("grid must be strictly increasing".into()));
        }
        Ok(Self { coordinate: coordinate.into(), grid, values, metadata })
    }

    pub fn real(coordinate: impl Into<String>, grid: Vec<f64>, values: Vec<f64>, metadata: Provenance) -> Result<Self> {
        Self::new(coordinate, grid, ProfileValues::Real(values), metadata)
    }

    /// Evaluate `f` on every grid point.
    pub fn tabulate(
        coordinate: impl Into<String>,
        grid: &UniformGrid,
        metadata: Provenance,
        f: impl Fn(f64) -> Result<f64>,
    ) -> Result<Self> {
        let pts = grid.points();
        let vals = pts.iter().map(|&q| f(q)).collect::<Result<Vec<_>>>()?;
        Self::real(coordinate, pts, vals, metadata)
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    pub fn real_values(&self) -> Option<&[f64]> {
        match &self.values {
            ProfileValues::Real(v) => Some(v),
            ProfileValues::Complex(_) => None,
        }
    }

    /// Spacing of a uniform grid; errors when the spacing varies by more
    /// than `1e-9` relative.
    pub fn uniform_step(&self) -> Result<f64> {
        if self.grid.len() < 2 {
            return Err(Error::InvalidGrid("need at least two points".into()));
        }
        let h = (self.grid[self.grid.len() - 1] - self.grid[0]) / (self.grid.len() - 1) as f64;
        let uneven = self
            .grid
            .windows(2)
            .any(|w| ((w[1] - w[0]) - h).abs() > 1e-9 * h.abs().max(1e-300) + 4.0 * f64::EPSILON * w[1].abs());
        if uneven {
            return Err(Error::InvalidGrid("grid is not uniform".into()));
        }
        Ok(h)
    }
}
