//! Triangulated closed surfaces.
//!
//! A [`Triangulation`] stores its triangles together with explicit edge
//! identities. Meshes read from files are simplicial and their edges are
//! derived from vertex pairs; [`Triangulation::with_edges`] also accepts
//! glued complexes where two distinct edges may join the same pair of
//! vertices (small grid tori).

mod homology;
mod io;
mod kneser;
pub mod meshes;
mod sheets;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};

pub use homology::{betti_mod2, separates_homology_oracle, Betti};
pub use io::{format_mesh, parse_cycle, parse_distinguished, parse_mesh};
pub use kneser::{grid_torus, kneser_validate, FoliatedTriangulation};
pub use sheets::{orientation_cover_connected, polarized_double_cover_separates};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    /// Endpoints, smaller id first.
    pub ends: [usize; 2],
    /// `(triangle, slot)` pairs; slot `k` joins corners `k` and `k + 1`.
    pub faces: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct Triangulation {
    vertex_count: usize,
    triangles: Vec<[usize; 3]>,
    tri_edges: Vec<[usize; 3]>,
    edges: Vec<Edge>,
    by_pair: HashMap<(usize, usize), Vec<usize>>,
}

/// First failed manifold condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EdgeValence { ends: [usize; 2], faces: usize },
    UnusedVertex(usize),
    VertexLink { vertex: usize, cycles: usize },
    Disconnected { components: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeValence { ends, faces } => {
                write!(f, "edge {}-{} lies on {faces} triangles (expected 2)", ends[0], ends[1])
            }
            Violation::UnusedVertex(v) => write!(f, "vertex {v} lies on no triangle"),
            Violation::VertexLink { vertex, cycles } => {
                write!(f, "link of vertex {vertex} has {cycles} cycles (expected 1)")
            }
            Violation::Disconnected { components } => write!(f, "complex has {components} components"),
        }
    }
}

fn pair(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Triangulation {
    /// Simplicial complex with edges derived from vertex pairs.
    pub fn new(vertex_count: usize, triangles: Vec<[usize; 3]>) -> Result<Self> {
        let mut seen = HashSet::new();
        for t in &triangles {
            let mut key = *t;
            key.sort_unstable();
            if !seen.insert(key) {
                return Err(Error::InvalidComplex(format!(
                    "duplicate triangle {} {} {}",
                    key[0], key[1], key[2]
                )));
            }
        }
        let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
        let mut tri_edges = Vec::with_capacity(triangles.len());
        for t in &triangles {
            let mut slots = [0; 3];
            for (k, slot) in slots.iter_mut().enumerate() {
                let next = ids.len();
                *slot = *ids.entry(pair(t[k], t[(k + 1) % 3])).or_insert(next);
            }
            tri_edges.push(slots);
        }
        Triangulation::with_edges(vertex_count, triangles, tri_edges)
    }

    /// Glued complex with explicit edge ids; `tri_edges[t][k]` is the edge
    /// between corners `k` and `k + 1` of triangle `t`.
    pub fn with_edges(
        vertex_count: usize,
        triangles: Vec<[usize; 3]>,
        tri_edges: Vec<[usize; 3]>,
    ) -> Result<Self> {
        if triangles.is_empty() {
            return Err(Error::InvalidComplex("no triangles".into()));
        }
        if tri_edges.len() != triangles.len() {
            return Err(Error::InvalidComplex("edge labels do not match triangle count".into()));
        }
        let mut edge_ends: BTreeMap<usize, [usize; 2]> = BTreeMap::new();
        let mut edge_sets = HashSet::new();
        for (t, (tri, slots)) in triangles.iter().zip(&tri_edges).enumerate() {
            for &v in tri {
                if v >= vertex_count {
                    return Err(Error::InvalidComplex(format!(
                        "triangle {t} uses vertex {v} but only {vertex_count} vertices declared"
                    )));
                }
            }
            if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
                return Err(Error::InvalidComplex(format!("triangle {t} repeats a vertex")));
            }
            let mut key = *slots;
            key.sort_unstable();
            if !edge_sets.insert(key) {
                return Err(Error::InvalidComplex(format!("duplicate triangle at index {t}")));
            }
            for k in 0..3 {
                let (a, b) = pair(tri[k], tri[(k + 1) % 3]);
                let ends = *edge_ends.entry(slots[k]).or_insert([a, b]);
                if ends != [a, b] {
                    return Err(Error::InvalidComplex(format!(
                        "edge {} joins {}-{} in one triangle and {a}-{b} in triangle {t}",
                        slots[k], ends[0], ends[1]
                    )));
                }
            }
        }
        // compact edge ids to 0..E in order of first id
        let remap: HashMap<usize, usize> = edge_ends.keys().enumerate().map(|(i, &id)| (id, i)).collect();
        let mut edges: Vec<Edge> =
            edge_ends.values().map(|&ends| Edge { ends, faces: Vec::new() }).collect();
        let tri_edges: Vec<[usize; 3]> = tri_edges.iter().map(|s| s.map(|id| remap[&id])).collect();
        for (t, slots) in tri_edges.iter().enumerate() {
            for (k, &e) in slots.iter().enumerate() {
                edges[e].faces.push((t, k));
            }
        }
        let mut by_pair: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, e) in edges.iter().enumerate() {
            by_pair.entry((e.ends[0], e.ends[1])).or_default().push(i);
        }
        Ok(Triangulation { vertex_count, triangles, tri_edges, edges, by_pair })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edge ids of each triangle by slot.
    pub fn triangle_edges(&self) -> &[[usize; 3]] {
        &self.tri_edges
    }

    /// `(e0, e1, e2)`: vertex, edge and triangle counts.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.vertex_count, self.edges.len(), self.triangles.len())
    }

    pub fn euler(&self) -> i64 {
        let (v, e, f) = self.counts();
        v as i64 - e as i64 + f as i64
    }

    /// The unique edge joining `a` and `b`, if there is exactly one.
    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        match self.by_pair.get(&pair(a, b)).map(Vec::as_slice) {
            Some([e]) => Some(*e),
            _ => None,
        }
    }

    /// Neighbouring vertices of `v` in the 1-skeleton.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| match e.ends {
                [a, b] if a == v => Some(b),
                [a, b] if b == v => Some(a),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Checks the closed-surface conditions: every edge on two triangles,
    /// every vertex link a single cycle, and connectedness.
    pub fn validate_manifold(&self) -> std::result::Result<(), Violation> {
        for e in &self.edges {
            if e.faces.len() != 2 {
                return Err(Violation::EdgeValence { ends: e.ends, faces: e.faces.len() });
            }
        }
        let mut used = vec![false; self.vertex_count];
        for t in &self.triangles {
            for &v in t {
                used[v] = true;
            }
        }
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(Violation::UnusedVertex(v));
        }

        // Corners (t, k) glued across each edge at the shared endpoint. Each
        // corner has exactly two gluings, so the corners around a vertex form
        // disjoint cycles, one per link component.
        let corner = |t: usize, k: usize| 3 * t + k;
        let mut corners = UnionFind::<usize>::new(3 * self.triangles.len());
        let mut faces = UnionFind::<usize>::new(self.triangles.len());
        for e in &self.edges {
            let [(t1, k1), (t2, k2)] = [e.faces[0], e.faces[1]];
            faces.union(t1, t2);
            for v in e.ends {
                let p1 = self.corner_on_slot(t1, k1, v);
                let p2 = self.corner_on_slot(t2, k2, v);
                corners.union(corner(t1, p1), corner(t2, p2));
            }
        }
        let mut cycles: Vec<HashSet<usize>> = vec![HashSet::new(); self.vertex_count];
        for (t, tri) in self.triangles.iter().enumerate() {
            for (k, &v) in tri.iter().enumerate() {
                cycles[v].insert(corners.find(corner(t, k)));
            }
        }
        if let Some((vertex, c)) = cycles.iter().enumerate().find(|(_, c)| c.len() != 1) {
            return Err(Violation::VertexLink { vertex, cycles: c.len() });
        }
        let components: HashSet<usize> = (0..self.triangles.len()).map(|t| faces.find(t)).collect();
        if components.len() != 1 {
            return Err(Violation::Disconnected { components: components.len() });
        }
        Ok(())
    }

    pub fn is_manifold(&self) -> bool {
        self.validate_manifold().is_ok()
    }

    pub(crate) fn require_manifold(&self) -> Result<()> {
        self.validate_manifold().map_err(|v| Error::InvalidComplex(v.to_string()))
    }

    /// Corner index within triangle `t` at endpoint `v` of slot `k`.
    fn corner_on_slot(&self, t: usize, k: usize, v: usize) -> usize {
        if self.triangles[t][k] == v {
            k
        } else {
            (k + 1) % 3
        }
    }

    /// Inserts a vertex inside triangle `t`, replacing it by three triangles.
    pub fn stellar_subdivide(&self, t: usize) -> Result<Self> {
        self.require_simplicial()?;
        let w = self.vertex_count;
        let [a, b, c] = self.triangles[t];
        let mut tris = self.triangles.clone();
        tris[t] = [a, b, w];
        tris.push([b, c, w]);
        tris.push([c, a, w]);
        Triangulation::new(w + 1, tris)
    }

    /// Inserts a vertex at the midpoint of edge `e`, splitting both
    /// incident triangles. Triangle orientations are kept.
    pub fn split_edge(&self, e: usize) -> Result<Self> {
        self.require_simplicial()?;
        let m = self.vertex_count;
        let [a, b] = self.edges[e].ends;
        let mut tris = Vec::with_capacity(self.triangles.len() + 2);
        for t in &self.triangles {
            if t.contains(&a) && t.contains(&b) {
                tris.push(t.map(|v| if v == a { m } else { v }));
                tris.push(t.map(|v| if v == b { m } else { v }));
            } else {
                tris.push(*t);
            }
        }
        Triangulation::new(m + 1, tris)
    }

    fn require_simplicial(&self) -> Result<()> {
        if self.by_pair.values().any(|ids| ids.len() > 1) {
            return Err(Error::InvalidComplex("operation needs a simplicial complex".into()));
        }
        Ok(())
    }
}

/// A simple closed walk in the 1-skeleton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCycle {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl EdgeCycle {
    /// Closes `vertices` implicitly (last joins first).
    pub fn new(tri: &Triangulation, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidCycle(format!("length {} below 3", vertices.len())));
        }
        let mut seen = HashSet::new();
        for &v in &vertices {
            if v >= tri.vertex_count() {
                return Err(Error::InvalidCycle(format!("vertex {v} out of range")));
            }
            if !seen.insert(v) {
                return Err(Error::InvalidCycle(format!("vertex {v} repeated")));
            }
        }
        let n = vertices.len();
        let edges = (0..n)
            .map(|i| {
                let (a, b) = (vertices[i], vertices[(i + 1) % n]);
                tri.edge_between(a, b)
                    .ok_or_else(|| Error::InvalidCycle(format!("{a}-{b} is not a unique edge of the complex")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(EdgeCycle { vertices, edges })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::meshes;
    use super::*;

    #[test]
    fn octahedron_is_a_sphere() {
        let o = meshes::octahedron();
        assert_eq!(o.validate_manifold(), Ok(()));
        assert_eq!(o.counts(), (6, 12, 8));
        assert_eq!(o.euler(), 2);
    }

    #[test]
    fn single_triangle_has_boundary() {
        let t = Triangulation::new(3, vec![[0, 1, 2]]).unwrap();
        assert!(matches!(t.validate_manifold(), Err(Violation::EdgeValence { faces: 1, .. })));
    }

    #[test]
    fn two_tetrahedra_are_disconnected() {
        let mut tris = meshes::tetrahedron().triangles().to_vec();
        tris.extend(meshes::tetrahedron().triangles().iter().map(|t| t.map(|v| v + 4)));
        let t = Triangulation::new(8, tris).unwrap();
        assert_eq!(t.validate_manifold(), Err(Violation::Disconnected { components: 2 }));
    }

    #[test]
    fn pinched_spheres_fail_link_condition() {
        // two tetrahedra sharing vertex 0
        let mut tris = meshes::tetrahedron().triangles().to_vec();
        tris.extend(meshes::tetrahedron().triangles().iter().map(|t| t.map(|v| if v == 0 { 0 } else { v + 3 })));
        let t = Triangulation::new(7, tris).unwrap();
        assert_eq!(t.validate_manifold(), Err(Violation::VertexLink { vertex: 0, cycles: 2 }));
    }

    #[test]
    fn duplicate_triangle_rejected() {
        let r = Triangulation::new(3, vec![[0, 1, 2], [2, 1, 0]]);
        assert!(matches!(r, Err(Error::InvalidComplex(_))));
        assert!(Triangulation::new(3, vec![[0, 1, 1]]).is_err());
        assert!(Triangulation::new(3, vec![[0, 1, 3]]).is_err());
        assert!(Triangulation::new(3, vec![]).is_err());
    }

    #[test]
    fn unused_vertex_reported() {
        let t = Triangulation::new(7, meshes::octahedron().triangles().to_vec()).unwrap();
        assert_eq!(t.validate_manifold(), Err(Violation::UnusedVertex(6)));
    }

    #[test]
    fn subdivisions_keep_euler() {
        let t = meshes::torus7();
        let s = t.stellar_subdivide(3).unwrap();
        assert!(s.is_manifold());
        assert_eq!(s.euler(), 0);
        let s = s.split_edge(5).unwrap();
        assert!(s.is_manifold());
        assert_eq!(s.euler(), 0);
        assert_eq!(s.counts(), (9, 27, 18));
    }

    #[test]
    fn cycle_validation() {
        let o = meshes::octahedron();
        assert!(EdgeCycle::new(&o, vec![1, 2, 3, 4]).is_ok());
        assert!(matches!(EdgeCycle::new(&o, vec![1, 2]), Err(Error::InvalidCycle(_))));
        assert!(matches!(EdgeCycle::new(&o, vec![1, 2, 1, 4]), Err(Error::InvalidCycle(_))));
        // 1 and 3 are antipodal on the equator
        assert!(matches!(EdgeCycle::new(&o, vec![1, 3, 0]), Err(Error::InvalidCycle(_))));
    }
}
