//! The joint spectrum: radial Dirichlet energies, total energies, the
//! critical trapping radius and the bound/zero/positive classification.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;

use crate::error::Result;
use crate::model::{bessel_order, validate, EnergyLevel, PhysicalParams, QuantumNumbers};
use crate::specfun::{bessel_zero, ZeroApproxMode};
use crate::wells::{bound_state_at, excited_state_exists};

/// Total energies within this fraction of the radial energy count as zero.
pub const ZERO_CLASS_TOLERANCE: f64 = 1e-9;

/// Relative tolerance when comparing `n / (2B) + m` between two states.
pub const INDEX_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StateClass {
    /// Negative total energy.
    Bound,
    /// Zero total energy.
    Zero,
    /// Positive total energy.
    Positive,
}

impl StateClass {
    pub fn as_str(self) -> &'static str {
        match self {
            StateClass::Bound => "bound",
            StateClass::Zero => "zero",
            StateClass::Positive => "positive",
        }
    }
}

/// The `(n̄, m̄)` pair whose critical radius fixes the cylinder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceState {
    pub qn_bar: QuantumNumbers,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub qn: QuantumNumbers,
    pub level: EnergyLevel,
    pub nu: f64,
    pub radial_energy: f64,
    pub z_energy: f64,
    /// `radial_energy + z_energy`.
    pub total_energy: f64,
    pub classification: StateClass,
    pub mode: ZeroApproxMode,
}

/// `n / (2B) + m + 3/4`; the high-order zero estimate is `pi` times this.
pub fn state_index(qn: QuantumNumbers, deficit: f64) -> f64 {
    0.5 * bessel_order(qn.n, deficit) + f64::from(qn.m) + 0.75
}

/// `hbar^2 q^2 / (2 M R^2)` with `q` the `(m+1)`-th zero of `J_{n/B}`.
pub fn radial_energy(
    params: &PhysicalParams,
    qn: QuantumNumbers,
    mode: ZeroApproxMode,
) -> Result<f64> {
    let params = validate(*params)?;
    let q = bessel_zero(bessel_order(qn.n, params.deficit), qn.m, mode)?;
    let k = params.hbar * q / params.radius;
    Ok(k * k / (2.0 * params.mass))
}

/// Radial energy plus the z-energy of `level`.
pub fn total_energy(
    params: &PhysicalParams,
    qn: QuantumNumbers,
    level: EnergyLevel,
    mode: ZeroApproxMode,
) -> Result<f64> {
    let z = bound_state_at(params, level)?;
    Ok(radial_energy(params, qn, mode)? + z.energy)
}

/// Cylinder radius at which the `(n, m)` state at `level` has zero total
/// energy under the high-order zero estimate:
/// `R = pi hbar^2 / (M lambda sqrt(2 H)) * (n/(2B) + m + 3/4)`.
pub fn critical_radius(
    params: &PhysicalParams,
    qn: QuantumNumbers,
    level: EnergyLevel,
) -> Result<f64> {
    let z = bound_state_at(params, level)?;
    let prefactor = PI * params.hbar * params.hbar
        / (params.mass * params.coupling * libm::sqrt(2.0 * z.h_factor));
    Ok(prefactor * state_index(qn, params.deficit))
}

/// Class of a state from its energies, with [`ZERO_CLASS_TOLERANCE`].
pub fn energy_class(total_energy: f64, radial_energy: f64) -> StateClass {
    if total_energy.abs() <= ZERO_CLASS_TOLERANCE * radial_energy.abs() {
        StateClass::Zero
    } else if total_energy < 0.0 {
        StateClass::Bound
    } else {
        StateClass::Positive
    }
}

/// Orders `n / (2B) + m` against `n̄ / (2B) + m̄`, i.e. `n - n̄` against `2B (m̄ - m)`.
fn compare_indices(qn: QuantumNumbers, reference: QuantumNumbers, deficit: f64) -> Ordering {
    let dn = f64::from(qn.n) - f64::from(reference.n);
    let dm = f64::from(reference.m) - f64::from(qn.m);
    if dm == 0.0 {
        return dn.partial_cmp(&0.0).unwrap_or(Ordering::Equal);
    }
    let rhs = 2.0 * deficit * dm;
    if (dn - rhs).abs() <= INDEX_TOLERANCE * dn.abs().max(rhs.abs()) {
        Ordering::Equal
    } else if dn < rhs {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Class of `qn` when the cylinder radius is the critical radius of
/// `reference`: bound if `n/(2B) + m < n̄/(2B) + m̄`, zero if equal, positive
/// otherwise.
pub fn classify(
    params: &PhysicalParams,
    reference: ReferenceState,
    qn: QuantumNumbers,
    level: EnergyLevel,
) -> Result<StateClass> {
    // Only for the existence check: the class does not depend on the energy.
    bound_state_at(params, level)?;
    Ok(
        match compare_indices(qn, reference.qn_bar, params.deficit) {
            Ordering::Less => StateClass::Bound,
            Ordering::Equal => StateClass::Zero,
            Ordering::Greater => StateClass::Positive,
        },
    )
}

/// [`classify`] next to the energy signs it implies, under both the
/// high-order estimate and exact zeros.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassificationReport {
    pub by_index: StateClass,
    /// Critical radius of the reference state.
    pub radius: f64,
    pub paper_total_energy: f64,
    pub exact_total_energy: f64,
    pub paper_class: StateClass,
    pub exact_class: StateClass,
}

impl ClassificationReport {
    /// Whether exact zeros reproduce the index classification.
    pub fn exact_agrees(&self) -> bool {
        self.exact_class == self.by_index
    }
}

pub fn classification_report(
    params: &PhysicalParams,
    reference: ReferenceState,
    qn: QuantumNumbers,
    level: EnergyLevel,
) -> Result<ClassificationReport> {
    let by_index = classify(params, reference, qn, level)?;
    let radius = critical_radius(params, reference.qn_bar, level)?;
    let at_radius = params.with_radius(radius);
    let z = bound_state_at(&at_radius, level)?.energy;
    let paper_radial = radial_energy(&at_radius, qn, ZeroApproxMode::PaperHighOrder)?;
    let exact_radial = radial_energy(&at_radius, qn, ZeroApproxMode::Exact)?;
    let paper_total_energy = paper_radial + z;
    let exact_total_energy = exact_radial + z;
    Ok(ClassificationReport {
        by_index,
        radius,
        paper_total_energy,
        exact_total_energy,
        paper_class: energy_class(paper_total_energy, paper_radial),
        exact_class: energy_class(exact_total_energy, exact_radial),
    })
}

/// All states with `n <= n_max`, `m <= m_max` and every existing z-level,
/// ordered by `(n, m, level)`. Excited rows are left out when that level
/// does not exist.
pub fn spectrum_table(
    params: &PhysicalParams,
    n_max: u32,
    m_max: u32,
    mode: ZeroApproxMode,
) -> Result<Vec<SpectrumEntry>> {
    let params = validate(*params)?;
    let mut levels = Vec::with_capacity(2);
    levels.push(bound_state_at(&params, EnergyLevel::Ground)?);
    if excited_state_exists(&params) {
        levels.push(bound_state_at(&params, EnergyLevel::Excited)?);
    }

    let mut rows = Vec::with_capacity((n_max as usize + 1) * (m_max as usize + 1) * levels.len());
    for n in 0..=n_max {
        for m in 0..=m_max {
            let qn = QuantumNumbers { n, m };
            let radial = radial_energy(&params, qn, mode)?;
            for z in &levels {
                let total = radial + z.energy;
                rows.push(SpectrumEntry {
                    qn,
                    level: z.level,
                    nu: bessel_order(n, params.deficit),
                    radial_energy: radial,
                    z_energy: z.energy,
                    total_energy: total,
                    classification: energy_class(total, radial),
                    mode,
                });
            }
        }
    }
    Ok(rows)
}
