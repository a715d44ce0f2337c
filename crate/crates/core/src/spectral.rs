//! Adjacency spectra, graph energy and the hypoenergetic decision.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use libm::{fabs, sqrt};
use thiserror::Error;

use crate::charpoly::char_poly_int;
use crate::graph::{Bits, Graph};

/// Margins at least this far from zero are decided at standard precision.
pub const ESCALATE_THRESHOLD: f64 = 1e-6;
/// Margins must clear this floor after escalation.
pub const DECIDE_THRESHOLD: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("matrix has {len} entries, expected {order}x{order}")]
    Dimension { order: usize, len: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("Jacobi iteration did not converge in {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("hypoenergetic verdict unresolved: E={standard} (standard), E={escalated} (escalated), n={order}")]
    Unresolved { standard: f64, escalated: f64, order: usize },
    #[error("the empty graph has no verdict")]
    EmptyGraph,
}

/// Stopping rule for cyclic Jacobi: converged once the off-diagonal
/// Frobenius norm drops below `tolerance_per_order * n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiOptions {
    pub tolerance_per_order: f64,
    pub max_sweeps: usize,
}

impl JacobiOptions {
    pub const STANDARD: JacobiOptions = JacobiOptions { tolerance_per_order: 1e-12, max_sweeps: 64 };
    pub const TIGHT: JacobiOptions = JacobiOptions { tolerance_per_order: 1e-15, max_sweeps: 128 };
}

impl Default for JacobiOptions {
    fn default() -> Self {
        JacobiOptions::STANDARD
    }
}

/// Eigenvalues of a real symmetric row-major `n x n` matrix, largest first.
pub fn eigenvalues_symmetric(n: usize, matrix: &[f64]) -> Result<Vec<f64>, SpectralError> {
    eigenvalues_symmetric_with(n, matrix, JacobiOptions::STANDARD)
}

pub fn eigenvalues_symmetric_with(
    n: usize,
    matrix: &[f64],
    options: JacobiOptions,
) -> Result<Vec<f64>, SpectralError> {
    if matrix.len() != n * n {
        return Err(SpectralError::Dimension { order: n, len: matrix.len() });
    }
    for row in 0..n {
        for col in row + 1..n {
            if matrix[row * n + col] != matrix[col * n + row] {
                return Err(SpectralError::NotSymmetric { row, col });
            }
        }
    }
    let mut a = matrix.to_vec();
    let tolerance = options.tolerance_per_order * n as f64;
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(n, &a);
        if off < tolerance || off == 0.0 {
            break;
        }
        if sweeps == options.max_sweeps {
            return Err(SpectralError::NoConvergence { sweeps, off_norm: off });
        }
        sweep(n, &mut a);
        sweeps += 1;
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

fn off_diagonal_norm(n: usize, a: &[f64]) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += 2.0 * a[p * n + q] * a[p * n + q];
        }
    }
    sqrt(sum)
}

/// One cyclic sweep of Jacobi rotations over every pair `p < q`.
fn sweep(n: usize, a: &mut [f64]) {
    for p in 0..n {
        for q in p + 1..n {
            let apq = a[p * n + q];
            if apq == 0.0 {
                continue;
            }
            let app = a[p * n + p];
            let aqq = a[q * n + q];
            let theta = (aqq - app) / (2.0 * apq);
            // smaller root of t^2 + 2 theta t - 1 = 0
            let t = if fabs(theta) > 1e150 {
                0.5 / theta
            } else {
                let sign = if theta < 0.0 { -1.0 } else { 1.0 };
                sign / (fabs(theta) + sqrt(theta * theta + 1.0))
            };
            let c = 1.0 / sqrt(t * t + 1.0);
            let s = t * c;
            for r in 0..n {
                if r == p || r == q {
                    continue;
                }
                let arp = a[r * n + p];
                let arq = a[r * n + q];
                let new_rp = c * arp - s * arq;
                let new_rq = s * arp + c * arq;
                a[r * n + p] = new_rp;
                a[p * n + r] = new_rp;
                a[r * n + q] = new_rq;
                a[q * n + r] = new_rq;
            }
            a[p * n + p] = app - t * apq;
            a[q * n + q] = aqq + t * apq;
            a[p * n + q] = 0.0;
            a[q * n + p] = 0.0;
        }
    }
}

/// Row-major 0/1 adjacency matrix.
pub fn adjacency_matrix(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut a = vec![0.0; n * n];
    for u in 0..n {
        for v in Bits(g.neighbor_mask(u)) {
            a[u * n + v] = 1.0;
        }
    }
    a
}

/// Compensated (Neumaier) summation.
fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut correction = 0.0;
    for x in values {
        let t = sum + x;
        if fabs(sum) >= fabs(x) {
            correction += (sum - t) + x;
        } else {
            correction += (x - t) + sum;
        }
        sum = t;
    }
    sum + correction
}

#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    energy: f64,
    order: usize,
    size: usize,
}

impl Spectrum {
    /// Eigenvalues, largest first.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `E - n`, accumulated with compensation.
    pub fn margin(&self) -> f64 {
        compensated_sum(
            self.eigenvalues.iter().map(|x| fabs(*x)).chain([-(self.order as f64)]),
        )
    }
}

pub fn spectrum(g: &Graph) -> Result<Spectrum, SpectralError> {
    spectrum_with(g, JacobiOptions::STANDARD)
}

pub fn spectrum_with(g: &Graph, options: JacobiOptions) -> Result<Spectrum, SpectralError> {
    let eigenvalues = eigenvalues_symmetric_with(g.order(), &adjacency_matrix(g), options)?;
    let energy = compensated_sum(eigenvalues.iter().map(|x| fabs(*x)));
    Ok(Spectrum { eigenvalues, energy, order: g.order(), size: g.size() })
}

/// Sum of the absolute values of the adjacency eigenvalues. Zero for the
/// empty graph.
pub fn energy(g: &Graph) -> Result<f64, SpectralError> {
    Ok(spectrum(g)?.energy)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Hypoenergetic,
    NonHypoenergetic,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Hypoenergetic => "hypoenergetic",
            Classification::NonHypoenergetic => "non-hypoenergetic",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which computation settled the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PrecisionTier {
    /// Standard Jacobi tolerance.
    Standard,
    /// Tight Jacobi tolerance with compensated accumulation.
    Escalated,
    /// The characteristic polynomial splits over the integers, so the energy
    /// is an exact integer.
    Exact,
}

impl PrecisionTier {
    pub fn as_str(self) -> &'static str {
        match self {
            PrecisionTier::Standard => "standard",
            PrecisionTier::Escalated => "escalated",
            PrecisionTier::Exact => "exact",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnergyVerdict {
    pub classification: Classification,
    /// `E - n`.
    pub margin: f64,
    pub tier: PrecisionTier,
    pub energy: f64,
}

impl EnergyVerdict {
    pub fn is_hypoenergetic(&self) -> bool {
        self.classification == Classification::Hypoenergetic
    }

    fn from_margin(energy: f64, margin: f64, tier: PrecisionTier) -> EnergyVerdict {
        let classification = if margin < 0.0 {
            Classification::Hypoenergetic
        } else {
            Classification::NonHypoenergetic
        };
        EnergyVerdict { classification, margin, tier, energy }
    }
}

/// Decides `E < n`.
///
/// Margins of at least [`ESCALATE_THRESHOLD`] are accepted from the standard
/// solve. Smaller ones are recomputed with [`JacobiOptions::TIGHT`] and must
/// clear [`DECIDE_THRESHOLD`]. A margin that still sits inside the floor is
/// settled only if the characteristic polynomial has integer roots alone,
/// which makes the energy an exact integer; otherwise the verdict is
/// [`SpectralError::Unresolved`].
pub fn classify(g: &Graph) -> Result<EnergyVerdict, SpectralError> {
    let n = g.order();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    let standard = spectrum(g)?;
    let margin = standard.margin();
    if fabs(margin) >= ESCALATE_THRESHOLD {
        return Ok(EnergyVerdict::from_margin(standard.energy, margin, PrecisionTier::Standard));
    }
    let tight = spectrum_with(g, JacobiOptions::TIGHT)?;
    let margin = tight.margin();
    if fabs(margin) >= DECIDE_THRESHOLD {
        return Ok(EnergyVerdict::from_margin(tight.energy, margin, PrecisionTier::Escalated));
    }
    let bound = g.max_degree() as i64;
    if let Some(roots) = char_poly_int(g).integer_roots(bound) {
        let exact: i64 = roots.iter().map(|r| r.abs()).sum();
        let margin = (exact - n as i64) as f64;
        return Ok(EnergyVerdict::from_margin(exact as f64, margin, PrecisionTier::Exact));
    }
    Err(SpectralError::Unresolved { standard: standard.energy, escalated: tight.energy, order: n })
}
