//! Finite-type surface signatures and the surgeries acting on them.
//!
//! Every finite-type metric surface is a closed surface with finitely many
//! punctures, so it is pinned down by a handle count, a cross-cap count and a
//! puncture count. Handles and cross-caps never coexist in normal form: on a
//! non-orientable surface one handle is traded for two cross-caps.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Normalized signature `(genus, crosscaps, punctures)`.
///
/// `(0, 0, 0)` is the sphere. `genus > 0` implies `crosscaps == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceSig {
    genus: u32,
    crosscaps: u32,
    punctures: u32,
}

/// Euler characteristic, number of ends and orientability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantTriple {
    pub euler: i64,
    pub ends: u32,
    pub orientable: bool,
}

impl SurfaceSig {
    pub const SPHERE: SurfaceSig = SurfaceSig { genus: 0, crosscaps: 0, punctures: 0 };
    pub const PROJECTIVE_PLANE: SurfaceSig = SurfaceSig { genus: 0, crosscaps: 1, punctures: 0 };
    pub const TORUS: SurfaceSig = SurfaceSig { genus: 1, crosscaps: 0, punctures: 0 };
    pub const KLEIN_BOTTLE: SurfaceSig = SurfaceSig { genus: 0, crosscaps: 2, punctures: 0 };

    /// Builds a signature that is already in normal form.
    pub fn new(genus: u32, crosscaps: u32, punctures: u32) -> Result<Self> {
        if genus > 0 && crosscaps > 0 {
            return Err(Error::InvalidArgument(format!(
                "signature ({genus},{crosscaps},{punctures}) mixes handles and cross-caps"
            )));
        }
        Ok(SurfaceSig { genus, crosscaps, punctures })
    }

    /// Orientable closed surface of the given genus.
    pub fn orientable(genus: u32, punctures: u32) -> Self {
        SurfaceSig { genus, crosscaps: 0, punctures }
    }

    /// Sphere with `crosscaps` cross-caps and `punctures` punctures.
    pub fn nonorientable(crosscaps: u32, punctures: u32) -> Self {
        SurfaceSig { genus: 0, crosscaps, punctures }
    }

    /// Accepts any triple and converts handles to pairs of cross-caps whenever
    /// a cross-cap is present. The Euler characteristic is preserved.
    pub fn normalize(genus: i64, crosscaps: i64, punctures: i64) -> Result<Self> {
        if genus < 0 || crosscaps < 0 || punctures < 0 {
            return Err(Error::InvalidArgument(format!(
                "negative component in ({genus},{crosscaps},{punctures})"
            )));
        }
        let narrow = |v: i64| {
            u32::try_from(v).map_err(|_| Error::InvalidArgument(format!("component {v} too large")))
        };
        let (genus, crosscaps, punctures) = (narrow(genus)?, narrow(crosscaps)?, narrow(punctures)?);
        if crosscaps >= 1 {
            let crosscaps = genus
                .checked_mul(2)
                .and_then(|h| h.checked_add(crosscaps))
                .ok_or_else(|| Error::InvalidArgument("cross-cap count overflows".into()))?;
            Ok(SurfaceSig { genus: 0, crosscaps, punctures })
        } else {
            Ok(SurfaceSig { genus, crosscaps: 0, punctures })
        }
    }

    /// Parses `g<G>c<K>n<N>`. Mixed handle/cross-cap literals are rejected
    /// unless `normalize` is set.
    pub fn parse_literal(literal: &str, normalize: bool) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidSignature {
            literal: literal.to_string(),
            reason: reason.to_string(),
        };
        let rest = literal.strip_prefix('g').ok_or_else(|| bad("expected leading `g`"))?;
        let (g, rest) = rest.split_once('c').ok_or_else(|| bad("expected `c` field"))?;
        let (c, n) = rest.split_once('n').ok_or_else(|| bad("expected `n` field"))?;
        let field = |s: &str| -> Result<u32> {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("fields must be non-negative decimal integers"));
            }
            s.parse::<u32>().map_err(|_| bad("field out of range"))
        };
        let (g, c, n) = (field(g)?, field(c)?, field(n)?);
        if g > 0 && c > 0 && !normalize {
            return Err(bad("not in normal form (handles and cross-caps mixed); pass --normalize"));
        }
        SurfaceSig::normalize(g.into(), c.into(), n.into())
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn crosscaps(&self) -> u32 {
        self.crosscaps
    }

    pub fn punctures(&self) -> u32 {
        self.punctures
    }

    /// Number of ends; equal to the puncture count for finite type.
    pub fn ends(&self) -> u32 {
        self.punctures
    }

    pub fn is_orientable(&self) -> bool {
        self.crosscaps == 0
    }

    pub fn is_closed(&self) -> bool {
        self.punctures == 0
    }

    pub fn is_open(&self) -> bool {
        self.punctures > 0
    }

    pub fn euler(&self) -> i64 {
        let n = i64::from(self.punctures);
        if self.is_orientable() {
            2 - 2 * i64::from(self.genus) - n
        } else {
            2 - i64::from(self.crosscaps) - n
        }
    }

    /// First Betti number of an open surface (rank of its free fundamental
    /// group). For closed surfaces this is the rank of the free part of
    /// integral first homology: `2g` or `crosscaps - 1`.
    pub fn rank(&self) -> u32 {
        match (self.is_orientable(), self.is_open()) {
            (true, true) => 2 * self.genus + self.punctures - 1,
            (false, true) => self.crosscaps + self.punctures - 1,
            (true, false) => 2 * self.genus,
            (false, false) => self.crosscaps - 1,
        }
    }

    pub fn puncture(&self) -> Self {
        SurfaceSig { punctures: self.punctures + 1, ..*self }
    }

    /// Adds one cross-cap, converting any handles.
    pub fn cross_cap(&self) -> Self {
        SurfaceSig {
            genus: 0,
            crosscaps: 2 * self.genus + self.crosscaps + 1,
            punctures: self.punctures,
        }
    }

    /// Adds one handle (two cross-caps on a non-orientable surface).
    pub fn handle(&self) -> Self {
        if self.is_orientable() {
            SurfaceSig { genus: self.genus + 1, ..*self }
        } else {
            SurfaceSig { crosscaps: self.crosscaps + 2, ..*self }
        }
    }

    /// Closed surface obtained by filling every puncture.
    pub fn fill_ends(&self) -> Self {
        SurfaceSig { punctures: 0, ..*self }
    }

    pub fn invariants(&self) -> InvariantTriple {
        InvariantTriple {
            euler: self.euler(),
            ends: self.punctures,
            orientable: self.is_orientable(),
        }
    }

    /// Planar surfaces: every Jordan curve separates.
    pub fn is_dichotomic(&self) -> bool {
        self.is_orientable() && self.genus == 0
    }

    /// Conventional name where one exists, otherwise a lattice label.
    pub fn common_name(&self) -> String {
        let (g, c, n) = (self.genus, self.crosscaps, self.punctures);
        match (g, c, n) {
            (0, 0, 0) => "sphere".into(),
            (0, 0, 1) => "plane".into(),
            (0, 0, 2) => "annulus".into(),
            (0, 1, 0) => "projective plane".into(),
            (0, 1, 1) => "Moebius band".into(),
            (1, 0, 0) => "torus".into(),
            (0, 2, 0) => "Klein bottle".into(),
            (0, 0, n) => format!("sphere with {n} punctures"),
            (g, 0, 0) => format!("closed orientable genus {g}"),
            (g, 0, n) => format!("genus {g} with {n} punctures"),
            (0, c, 0) => format!("closed with {c} cross-caps"),
            (_, c, n) => format!("{c} cross-caps with {n} punctures"),
        }
    }
}

impl fmt::Display for SurfaceSig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}c{}n{}", self.genus, self.crosscaps, self.punctures)
    }
}

impl FromStr for SurfaceSig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SurfaceSig::parse_literal(s, false)
    }
}

/// Free-function form of [`SurfaceSig::normalize`].
pub fn normalize(genus: i64, crosscaps: i64, punctures: i64) -> Result<SurfaceSig> {
    SurfaceSig::normalize(genus, crosscaps, punctures)
}

/// Every normalized signature of rank at most `max_rank`.
///
/// Finite because closed surfaces of bounded rank and open surfaces with a
/// bounded free group are both finite in number.
pub fn signatures_up_to_rank(max_rank: u32) -> Vec<SurfaceSig> {
    let mut out = Vec::new();
    // orientable closed: 2g <= r
    for g in 0..=max_rank / 2 {
        out.push(SurfaceSig::orientable(g, 0));
    }
    // orientable open: 2g + n - 1 <= r, n >= 1
    for g in 0..=max_rank / 2 {
        for n in 1..=(max_rank + 1 - 2 * g) {
            out.push(SurfaceSig::orientable(g, n));
        }
    }
    // non-orientable closed: c - 1 <= r
    for c in 1..=max_rank + 1 {
        out.push(SurfaceSig::nonorientable(c, 0));
    }
    // non-orientable open: c + n - 1 <= r
    for c in 1..=max_rank {
        for n in 1..=(max_rank + 1 - c) {
            out.push(SurfaceSig::nonorientable(c, n));
        }
    }
    out
}
