//! Simplicial homology with GF(2) coefficients.

use serde::Serialize;

use super::{EdgeCycle, Triangulation};
use crate::error::Result;

/// Packed GF(2) row vector.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn zeros(len: usize) -> Self {
        BitRow(vec![0; len.div_ceil(64)])
    }

    fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }

    fn leading(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| 64 * i + w.trailing_zeros() as usize)
    }
}

/// Row-echelon basis that grows one row at a time.
struct Echelon {
    /// Reduced rows keyed by their pivot column.
    rows: Vec<(usize, BitRow)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    fn reduce(&self, mut row: BitRow) -> BitRow {
        for (pivot, basis) in &self.rows {
            if row.get(*pivot) {
                row.xor_assign(basis);
            }
        }
        row
    }

    /// Adds `row` to the span; returns whether the rank grew.
    fn insert(&mut self, row: BitRow) -> bool {
        let row = self.reduce(row);
        match row.leading() {
            Some(pivot) => {
                for (_, basis) in self.rows.iter_mut() {
                    if basis.get(pivot) {
                        basis.xor_assign(&row);
                    }
                }
                self.rows.push((pivot, row));
                true
            }
            None => false,
        }
    }

    fn contains(&self, row: BitRow) -> bool {
        self.reduce(row).leading().is_none()
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

fn edge_boundary_rows(tri: &Triangulation) -> Echelon {
    let mut ech = Echelon::new();
    for e in tri.edges() {
        let mut row = BitRow::zeros(tri.vertex_count());
        row.flip(e.ends[0]);
        row.flip(e.ends[1]);
        ech.insert(row);
    }
    ech
}

fn face_boundary_rows(tri: &Triangulation) -> Echelon {
    let mut ech = Echelon::new();
    for slots in tri.triangle_edges() {
        let mut row = BitRow::zeros(tri.edges().len());
        for &e in slots {
            row.flip(e);
        }
        ech.insert(row);
    }
    ech
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Betti {
    pub b0: usize,
    pub b1: usize,
    pub b2: usize,
}

impl Betti {
    pub fn euler(&self) -> i64 {
        self.b0 as i64 - self.b1 as i64 + self.b2 as i64
    }
}

/// Betti numbers over GF(2) from the ranks of the two boundary maps.
pub fn betti_mod2(tri: &Triangulation) -> Result<Betti> {
    tri.require_manifold()?;
    let (v, e, f) = tri.counts();
    let rank1 = edge_boundary_rows(tri).rank();
    let rank2 = face_boundary_rows(tri).rank();
    Ok(Betti { b0: v - rank1, b1: e - rank1 - rank2, b2: f - rank2 })
}

/// Whether the cycle's GF(2) chain is the boundary of some set of triangles.
/// On a closed surface this is equivalent to the cycle separating it.
pub fn separates_homology_oracle(tri: &Triangulation, cycle: &EdgeCycle) -> bool {
    let faces = face_boundary_rows(tri);
    let mut chain = BitRow::zeros(tri.edges().len());
    for &e in cycle.edges() {
        chain.flip(e);
    }
    faces.contains(chain)
}
