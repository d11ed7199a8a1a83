//! Two-sheeted covers built on the face-adjacency graph.
//!
//! Node `2t + s` is sheet `s` of triangle `t`. Crossing an edge either stays
//! on the same sheet or switches, and the cover is connected exactly when
//! some closed path of faces switches an odd number of times.

use std::collections::HashSet;

use petgraph::unionfind::UnionFind;

use super::{EdgeCycle, Triangulation};
use crate::error::Result;

fn sheet_components(tri: &Triangulation, switches: impl Fn(usize) -> bool) -> usize {
    let n = tri.triangles().len();
    let mut uf = UnionFind::<usize>::new(2 * n);
    for (e, edge) in tri.edges().iter().enumerate() {
        for w in edge.faces.windows(2) {
            let (t1, t2) = (w[0].0, w[1].0);
            if switches(e) {
                uf.union(2 * t1, 2 * t2 + 1);
                uf.union(2 * t1 + 1, 2 * t2);
            } else {
                uf.union(2 * t1, 2 * t2);
                uf.union(2 * t1 + 1, 2 * t2 + 1);
            }
        }
    }
    (0..2 * n).map(|i| uf.find(i)).collect::<HashSet<_>>().len()
}

/// Polarized double cover along `cycle`: sheets switch whenever a path of
/// faces crosses the cycle. Two components iff the cycle separates.
pub fn polarized_double_cover_separates(tri: &Triangulation, cycle: &EdgeCycle) -> Result<bool> {
    tri.require_manifold()?;
    let on_cycle: HashSet<usize> = cycle.edges().iter().copied().collect();
    Ok(sheet_components(tri, |e| on_cycle.contains(&e)) == 2)
}

/// Orientation double cover: sheet `s` of a triangle carries its listed
/// orientation (`s = 0`) or the reverse. Neighbours agree when they induce
/// opposite directions on the shared edge. Connected iff non-orientable.
pub fn orientation_cover_connected(tri: &Triangulation) -> bool {
    let direction = |t: usize, k: usize, ends: [usize; 2]| tri.triangles()[t][k] == ends[0];
    let reversing: Vec<bool> = tri
        .edges()
        .iter()
        .map(|edge| match edge.faces.as_slice() {
            [(t1, k1), (t2, k2)] => direction(*t1, *k1, edge.ends) == direction(*t2, *k2, edge.ends),
            _ => false,
        })
        .collect();
    sheet_components(tri, |e| reversing[e]) == 1
}

#[cfg(test)]
mod tests {
    use super::super::meshes;
    use super::*;

    #[test]
    fn equator_separates_octahedron() {
        let o = meshes::octahedron();
        let c = EdgeCycle::new(&o, vec![1, 2, 3, 4]).unwrap();
        assert!(polarized_double_cover_separates(&o, &c).unwrap());
    }

    #[test]
    fn essential_triangle_on_seven_vertex_torus() {
        let t = meshes::torus7();
        let c = EdgeCycle::new(&t, vec![0, 1, 2]).unwrap();
        assert!(!polarized_double_cover_separates(&t, &c).unwrap());
        assert!(!super::super::separates_homology_oracle(&t, &c));
    }

    #[test]
    fn orientation_cover() {
        assert!(!orientation_cover_connected(&meshes::octahedron()));
        assert!(!orientation_cover_connected(&meshes::torus7()));
        assert!(orientation_cover_connected(&meshes::projective_plane6()));
        assert!(orientation_cover_connected(&meshes::klein_grid(4, 4).unwrap()));
    }

    #[test]
    fn orientation_ignores_input_winding() {
        let o = meshes::octahedron();
        let flipped: Vec<_> =
            o.triangles().iter().enumerate().map(|(i, t)| if i % 2 == 0 { [t[1], t[0], t[2]] } else { *t }).collect();
        let o = Triangulation::new(6, flipped).unwrap();
        assert!(!orientation_cover_connected(&o));
    }
}
