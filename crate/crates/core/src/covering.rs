//! Riemann-Hurwitz arithmetic for branched double covers of closed surfaces.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::signature::SurfaceSig;

/// Parameters of a branched-cover enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BranchedCoverSpec {
    pub degree: u32,
    pub base: SurfaceSig,
    pub max_branch_points: u32,
    pub orientable_total_required: bool,
    /// Drop the torus when it would cover a non-orientable base with branch
    /// points: the sheet exchange would be an orientation-reversing involution
    /// of the torus with isolated fixed points, which cannot exist.
    pub exclude_torus_fixed_point: bool,
}

impl BranchedCoverSpec {
    pub fn double(base: SurfaceSig, max_branch_points: u32) -> Self {
        BranchedCoverSpec {
            degree: 2,
            base,
            max_branch_points,
            orientable_total_required: false,
            exclude_torus_fixed_point: false,
        }
    }

    pub fn orientable_total(mut self) -> Self {
        self.orientable_total_required = true;
        self
    }

    pub fn excluding_torus_fixed_point(mut self) -> Self {
        self.exclude_torus_fixed_point = true;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.degree < 2 {
            return Err(Error::InvalidArgument(format!("degree {} below 2", self.degree)));
        }
        if self.base.is_open() {
            return Err(Error::InvalidArgument(format!(
                "base {} must be closed (fill its punctures first)",
                self.base
            )));
        }
        Ok(())
    }
}

/// A closed total space together with the number of branch points used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CoverTotal {
    pub total: SurfaceSig,
    pub branch_points: u32,
}

/// `degree * chi_base - deg_r`.
pub fn chi_total(degree: i64, chi_base: i64, deg_r: i64) -> i64 {
    degree * chi_base - deg_r
}

/// Closed surfaces with the given Euler characteristic.
fn closed_surfaces_with_euler(chi: i64) -> Vec<SurfaceSig> {
    let mut out = Vec::new();
    if chi > 2 {
        return out;
    }
    let deficit = 2 - chi;
    if deficit % 2 == 0 {
        out.push(SurfaceSig::orientable((deficit / 2) as u32, 0));
    }
    if deficit >= 1 {
        out.push(SurfaceSig::nonorientable(deficit as u32, 0));
    }
    out
}

/// All closed totals of a branched double cover over `spec.base` with at
/// most `spec.max_branch_points` simple branch points.
pub fn enumerate_totals(spec: &BranchedCoverSpec) -> Result<BTreeSet<CoverTotal>> {
    spec.validate()?;
    if spec.degree != 2 {
        return Err(Error::UnsupportedDegree(spec.degree));
    }
    let chi_base = spec.base.euler();
    let mut totals = BTreeSet::new();
    for r in 0..=spec.max_branch_points {
        let chi = chi_total(2, chi_base, r.into());
        for total in closed_surfaces_with_euler(chi) {
            totals.insert(CoverTotal { total, branch_points: r });
        }
    }
    if spec.orientable_total_required {
        totals = orientable_parity_filter(totals);
    }
    if spec.exclude_torus_fixed_point && !spec.base.is_orientable() {
        totals.retain(|t| !(t.total == SurfaceSig::TORUS && t.branch_points > 0));
    }
    Ok(totals)
}

/// Keeps orientable totals only; closed orientable surfaces have even Euler
/// characteristic.
pub fn orientable_parity_filter(candidates: impl IntoIterator<Item = CoverTotal>) -> BTreeSet<CoverTotal> {
    candidates
        .into_iter()
        .filter(|c| c.total.is_orientable())
        .inspect(|c| assert_eq!(c.total.euler().rem_euclid(2), 0, "orientable closed total with odd chi"))
        .collect()
}
