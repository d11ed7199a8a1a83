//! Triangulations transverse to a foliation.
//!
//! In such a triangulation every triangle has exactly one distinguished
//! corner: the leaf through it crosses the triangle's interior and exits
//! through the opposite side. Counting corners and edges then forces the
//! Euler characteristic to vanish.

use super::Triangulation;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct FoliatedTriangulation {
    base: Triangulation,
    distinguished: Vec<usize>,
}

impl FoliatedTriangulation {
    /// `distinguished[t]` is a vertex id of triangle `t`.
    pub fn new(base: Triangulation, distinguished: Vec<usize>) -> Result<Self> {
        if distinguished.len() != base.triangles().len() {
            return Err(Error::InvalidArgument(format!(
                "{} distinguished vertices for {} triangles",
                distinguished.len(),
                base.triangles().len()
            )));
        }
        for (t, (&v, tri)) in distinguished.iter().zip(base.triangles()).enumerate() {
            if !tri.contains(&v) {
                return Err(Error::InvalidArgument(format!("vertex {v} is not a corner of triangle {t}")));
            }
        }
        Ok(FoliatedTriangulation { base, distinguished })
    }

    pub fn base(&self) -> &Triangulation {
        &self.base
    }

    pub fn distinguished(&self) -> &[usize] {
        &self.distinguished
    }
}

/// Checks `2 e1 = 3 e2`, `e2 = 2 e0` and that the distinguished map is onto
/// and 2-to-1, then returns `e0 - e1 + e2` (always 0 on success).
pub fn kneser_validate(ftri: &FoliatedTriangulation) -> Result<i64> {
    let base = ftri.base();
    base.require_manifold()?;
    let (e0, e1, e2) = base.counts();
    if 2 * e1 != 3 * e2 {
        return Err(Error::KneserObstruction {
            relation: "2e1 = 3e2",
            detail: format!("2*{e1} != 3*{e2}"),
        });
    }
    if e2 != 2 * e0 {
        return Err(Error::KneserObstruction {
            relation: "e2 = 2e0",
            detail: format!("{e2} != 2*{e0}"),
        });
    }
    let mut hits = vec![0usize; e0];
    for &v in ftri.distinguished() {
        hits[v] += 1;
    }
    if let Some((v, &h)) = hits.iter().enumerate().find(|(_, &h)| h != 2) {
        return Err(Error::KneserObstruction {
            relation: "distinguished map onto and 2-to-1",
            detail: format!("vertex {v} distinguished {h} times"),
        });
    }
    let chi = base.euler();
    if chi != 0 {
        return Err(Error::KneserObstruction { relation: "chi = 0", detail: format!("chi = {chi}") });
    }
    Ok(chi)
}

/// `m x m` square grid on the torus, one diagonal per square, with the
/// anti-diagonal foliation's distinguished corners.
///
/// Square `(i, j)` splits into `[(i,j), (i+1,j), (i+1,j+1)]` with
/// distinguished corner `(i+1, j)` and `[(i,j), (i+1,j+1), (i,j+1)]` with
/// distinguished corner `(i, j+1)`; each vertex is hit once by each kind.
/// For `m = 2` some vertex pairs are joined by two edges, so edges are
/// labelled explicitly.
pub fn grid_torus(m: usize) -> Result<FoliatedTriangulation> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("grid size {m} below 2")));
    }
    let v = |i: usize, j: usize| (i % m) + m * (j % m);
    let horizontal = |i: usize, j: usize| v(i, j);
    let vertical = |i: usize, j: usize| m * m + v(i, j);
    let diagonal = |i: usize, j: usize| 2 * m * m + v(i, j);
    let mut triangles = Vec::with_capacity(2 * m * m);
    let mut tri_edges = Vec::with_capacity(2 * m * m);
    let mut distinguished = Vec::with_capacity(2 * m * m);
    for j in 0..m {
        for i in 0..m {
            triangles.push([v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            tri_edges.push([horizontal(i, j), vertical(i + 1, j), diagonal(i, j)]);
            distinguished.push(v(i + 1, j));

            triangles.push([v(i, j), v(i + 1, j + 1), v(i, j + 1)]);
            tri_edges.push([diagonal(i, j), horizontal(i, j + 1), vertical(i, j)]);
            distinguished.push(v(i, j + 1));
        }
    }
    let base = Triangulation::with_edges(m * m, triangles, tri_edges)?;
    FoliatedTriangulation::new(base, distinguished)
}

#[cfg(test)]
mod tests {
    use super::super::meshes;
    use super::*;

    #[test]
    fn grid_counts() {
        assert_eq!(grid_torus(2).unwrap().base().counts(), (4, 12, 8));
        assert_eq!(grid_torus(3).unwrap().base().counts(), (9, 27, 18));
        for m in 2..=8 {
            let g = grid_torus(m).unwrap();
            assert_eq!(g.base().counts(), (m * m, 3 * m * m, 2 * m * m));
            assert!(g.base().is_manifold(), "m = {m}");
        }
    }

    #[test]
    fn grid_rejects_one() {
        assert!(matches!(grid_torus(1), Err(Error::InvalidArgument(_))));
        assert!(grid_torus(0).is_err());
    }

    #[test]
    fn grid_tori_validate() {
        assert_eq!(kneser_validate(&grid_torus(2).unwrap()), Ok(0));
        assert_eq!(kneser_validate(&grid_torus(5).unwrap()), Ok(0));
    }

    #[test]
    fn octahedron_is_obstructed() {
        let o = meshes::octahedron();
        let first: Vec<usize> = o.triangles().iter().map(|t| t[0]).collect();
        let f = FoliatedTriangulation::new(o, first).unwrap();
        match kneser_validate(&f) {
            Err(Error::KneserObstruction { relation, .. }) => assert_eq!(relation, "e2 = 2e0"),
            other => panic!("expected obstruction, got {other:?}"),
        }
    }

    #[test]
    fn bad_assignment_on_torus_is_named() {
        let g = grid_torus(3).unwrap();
        let mut dv = g.distinguished().to_vec();
        dv[0] = g.base().triangles()[0][0];
        let f = FoliatedTriangulation::new(g.base().clone(), dv).unwrap();
        match kneser_validate(&f) {
            Err(Error::KneserObstruction { relation, .. }) => {
                assert_eq!(relation, "distinguished map onto and 2-to-1")
            }
            other => panic!("expected obstruction, got {other:?}"),
        }
    }

    #[test]
    fn distinguished_vertex_must_be_a_corner() {
        let o = meshes::octahedron();
        assert!(FoliatedTriangulation::new(o.clone(), vec![5; 8]).is_err());
        assert!(FoliatedTriangulation::new(o, vec![0; 3]).is_err());
    }
}
