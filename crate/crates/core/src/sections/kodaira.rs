use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{SectionPolytope, SectionsError, DEFAULT_M_MAX};
use crate::newton::{newton_polytope, LaurentPolynomial};
use crate::resolve::{log_canonical_boundary, pullback_divisor, resolve_to_smooth_with_cap, DEFAULT_INSERTION_CAP};
use crate::toricfan::{completion_fan, divisor_closure, Fan, TorusInvariantDivisor};

/// D-dimension of a divisor with the section counts it was read from.
#[derive(Clone, Debug, PartialEq)]
pub struct KodairaReport {
    /// `None` stands for `−∞`: no sections for any sampled multiple up to `m_max`.
    pub kappa: Option<usize>,
    pub m0: Option<u64>,
    pub rank: usize,
    pub m_max: u64,
    /// `(m, h⁰(mD))` for `m = 1..=m_max`.
    pub samples: Vec<(u64, BigInt)>,
    /// `(m, h⁰(mD))` for `m = k·m0·m_max`, `k = 1..=8`.
    pub growth_samples: Vec<(u64, BigInt)>,
    /// Slope of the least-squares line through `(log m, log h⁰)` of `growth_samples`.
    pub growth_exponent: Option<f64>,
    pub big: bool,
}

pub fn d_dimension(d: &TorusInvariantDivisor) -> Result<KodairaReport, SectionsError> {
    d_dimension_with(d, DEFAULT_M_MAX)
}

pub fn d_dimension_with(d: &TorusInvariantDivisor, m_max: u64) -> Result<KodairaReport, SectionsError> {
    if m_max == 0 {
        return Err(SectionsError::NonPositiveMultiple);
    }
    let p = SectionPolytope::new(d)?;
    d.cartier_data()?;
    let rank = p.rank();
    let samples: Vec<(u64, BigInt)> = (1..=m_max).map(|m| (m, p.count(m))).collect();
    let m0 = samples.iter().filter(|(_, h)| !h.is_zero()).map(|(m, _)| *m).reduce(|a, b| a.gcd(&b));
    let Some(m0) = m0 else {
        return Ok(KodairaReport {
            kappa: None,
            m0: None,
            rank,
            m_max,
            samples,
            growth_samples: Vec::new(),
            growth_exponent: None,
            big: false,
        });
    };
    let kappa = p.dim().expect("a polytope with lattice points is nonempty");
    let growth_samples: Vec<(u64, BigInt)> = (1..=8u64)
        .map(|k| {
            let m = k * m0 * m_max;
            (m, p.count(m))
        })
        .collect();
    Ok(KodairaReport {
        kappa: Some(kappa),
        m0: Some(m0),
        rank,
        m_max,
        growth_exponent: log_log_slope(&growth_samples),
        samples,
        growth_samples,
        big: kappa == rank,
    })
}

fn log_log_slope(samples: &[(u64, BigInt)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .filter(|(_, h)| !h.is_zero())
        .map(|(m, h)| Some(((*m as f64).ln(), h.to_f64()?.ln())))
        .collect::<Option<_>>()?;
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    Some(sxy / sxx)
}

/// Whether `2·D̄` is big, `D̄` the closure of `(f)` on `fan`.
pub fn is_big_double(f: &LaurentPolynomial, fan: &Fan) -> Result<bool, SectionsError> {
    if !f.ueno_stabilizer().is_empty() {
        return Err(SectionsError::StabilizerNotTrivial);
    }
    let dbar = divisor_closure(f, fan)?.divisor;
    let report = d_dimension(&dbar.scale(&BigInt::from(2)))?;
    Ok(report.kappa == Some(fan.rank()))
}

/// Logarithmic Kodaira dimension of `Gm^μ ∖ (f)`, computed two ways.
#[derive(Clone, Debug, PartialEq)]
pub struct LogKodairaReport {
    /// `dim Δ_f`.
    pub kappa: usize,
    pub rank: usize,
    /// Rank of the Ueno stabilizer; `kappa + ueno_rank = rank`.
    pub ueno_rank: usize,
    /// Rays inserted to resolve the completion of the quotient torus.
    pub inserted_rays: usize,
    /// D-dimension of `K + ∂ + D̄` on the resolved completion of the quotient torus.
    pub sections: KodairaReport,
}

pub fn log_kodaira_dimension(f: &LaurentPolynomial) -> Result<LogKodairaReport, SectionsError> {
    log_kodaira_dimension_with(f, DEFAULT_M_MAX, DEFAULT_INSERTION_CAP)
}

pub fn log_kodaira_dimension_with(f: &LaurentPolynomial, m_max: u64, resolution_cap: usize) -> Result<LogKodairaReport, SectionsError> {
    let rank = f.rank();
    let kappa = newton_polytope(f).dim();
    let ueno_rank = f.ueno_stabilizer().len();
    let reduced = f.reduce_to_span();
    let (sections, inserted_rays) = match &reduced.poly {
        None => {
            let samples: Vec<(u64, BigInt)> = (1..=m_max).map(|m| (m, BigInt::from(1))).collect();
            let growth_samples: Vec<(u64, BigInt)> = (1..=8u64).map(|k| (k * m_max, BigInt::from(1))).collect();
            let report = KodairaReport {
                kappa: Some(0),
                m0: Some(1),
                rank: 0,
                m_max,
                samples,
                growth_exponent: log_log_slope(&growth_samples),
                growth_samples,
                big: true,
            };
            (report, 0)
        }
        Some(g) => {
            let fan = completion_fan(&newton_polytope(g))?;
            let s = resolve_to_smooth_with_cap(&fan, resolution_cap)?;
            let dbar = pullback_divisor(&divisor_closure(g, &fan)?.divisor, &s)?;
            let lc = log_canonical_boundary(&s.target)?;
            let adjoint = dbar.add(&lc.sum)?;
            (d_dimension_with(&adjoint, m_max)?, s.inserted.len())
        }
    };
    if sections.kappa != Some(kappa) {
        return Err(SectionsError::Inconsistent { sections: sections.kappa, polytope: kappa });
    }
    Ok(LogKodairaReport { kappa, rank, ueno_rank, inserted_rays, sections })
}
