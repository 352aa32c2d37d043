//! Physical parameters, quantum numbers and the angular quantization map.

use crate::error::{Error, Result};

/// One physical configuration.
///
/// `hbar` and `mass` are explicit; the geometrized convention `M = 1/2`,
/// `hbar = 1` is available through [`PhysicalParams::natural_units`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Particle mass `M`.
    pub mass: f64,
    /// Strength of each attractive delta plane (energy x length).
    pub coupling: f64,
    /// Half the distance between the delta planes, `z0`.
    pub half_separation: f64,
    /// Conical defect parameter `B`: below one is a deficit, above one a surplus.
    pub deficit: f64,
    /// Radius `R` of the trapping cylinder.
    pub radius: f64,
    pub hbar: f64,
}

impl PhysicalParams {
    /// Parameters in the `M = 1/2`, `hbar = 1` convention.
    pub fn natural_units(coupling: f64, half_separation: f64, deficit: f64, radius: f64) -> Self {
        PhysicalParams {
            mass: 0.5,
            coupling,
            half_separation,
            deficit,
            radius,
            hbar: 1.0,
        }
    }

    pub fn validate(self) -> Result<Self> {
        validate(self)
    }

    pub fn with_radius(self, radius: f64) -> Self {
        PhysicalParams { radius, ..self }
    }

    pub fn with_half_separation(self, half_separation: f64) -> Self {
        PhysicalParams {
            half_separation,
            ..self
        }
    }

    pub fn with_deficit(self, deficit: f64) -> Self {
        PhysicalParams { deficit, ..self }
    }

    /// `M lambda^2 / hbar^2`, the energy scale of the delta wells.
    pub fn binding_scale(&self) -> f64 {
        self.mass * self.coupling * self.coupling / (self.hbar * self.hbar)
    }
}

fn check(field: &'static str, value: f64) -> Result<()> {
    if value.is_infinite() {
        return Err(Error::InvalidParameter {
            field,
            requirement: "finite",
        });
    }
    // NaN fails this comparison as well.
    if !(value > 0.0) {
        return Err(Error::InvalidParameter {
            field,
            requirement: "positive",
        });
    }
    Ok(())
}

/// Returns `params` unchanged when every field is strictly positive and
/// finite, otherwise an error naming the first offending field.
pub fn validate(params: PhysicalParams) -> Result<PhysicalParams> {
    check("mass", params.mass)?;
    check("coupling", params.coupling)?;
    check("half_separation", params.half_separation)?;
    check("deficit", params.deficit)?;
    check("radius", params.radius)?;
    check("hbar", params.hbar)?;
    Ok(params)
}

/// Angular quantum number `n` and zero-based radial zero index `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuantumNumbers {
    pub n: u32,
    pub m: u32,
}

impl QuantumNumbers {
    pub const fn new(n: u32, m: u32) -> Self {
        QuantumNumbers { n, m }
    }
}

/// Which bound state of the twin delta wells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EnergyLevel {
    /// Symmetric state; always exists.
    Ground,
    /// Antisymmetric state; exists only when `2 M z0 lambda > hbar^2`.
    Excited,
}

impl EnergyLevel {
    pub const ALL: [EnergyLevel; 2] = [EnergyLevel::Ground, EnergyLevel::Excited];

    pub fn as_str(self) -> &'static str {
        match self {
            EnergyLevel::Ground => "ground",
            EnergyLevel::Excited => "excited",
        }
    }
}

/// Order of the regular radial solution, `nu = n / B`.
///
/// Single-valuedness of `exp(i a B phi)` on the cone forces `a = n / B`.
pub fn bessel_order(n: u32, deficit: f64) -> f64 {
    f64::from(n) / deficit
}

/// Dimensionless well strength `c = z0 M lambda / hbar^2`.
///
/// Both z-states are fixed by `c` alone: the ground state solves `F(xi) = c`
/// and the excited state `G(xi) = c`.
pub fn coupling_strength_parameter(params: &PhysicalParams) -> f64 {
    params.half_separation * params.mass * params.coupling / (params.hbar * params.hbar)
}
