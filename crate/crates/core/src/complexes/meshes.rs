//! Standard small triangulations.

use super::Triangulation;
use crate::error::{Error, Result};

/// Boundary of the 3-simplex.
pub fn tetrahedron() -> Triangulation {
    Triangulation::new(4, vec![[0, 2, 1], [0, 1, 3], [0, 3, 2], [1, 2, 3]]).expect("tetrahedron")
}

/// Octahedron: poles 0 and 5, equator 1-2-3-4.
pub fn octahedron() -> Triangulation {
    Triangulation::new(
        6,
        vec![
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 1],
            [5, 2, 1],
            [5, 3, 2],
            [5, 4, 3],
            [5, 1, 4],
        ],
    )
    .expect("octahedron")
}

/// Seven-vertex torus; its 1-skeleton is the complete graph on 7 vertices.
pub fn torus7() -> Triangulation {
    let tris = (0..7).flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 3) % 7, (i + 2) % 7]]).collect();
    Triangulation::new(7, tris).expect("seven-vertex torus")
}

/// Six-vertex projective plane (half of the icosahedron).
pub fn projective_plane6() -> Triangulation {
    Triangulation::new(
        6,
        vec![
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 4, 2],
            [2, 5, 3],
            [3, 1, 4],
            [4, 2, 5],
            [5, 3, 1],
        ],
    )
    .expect("six-vertex projective plane")
}

fn grid(m: usize, n: usize, flip: bool) -> Result<Triangulation> {
    if m < 3 || n < 3 {
        return Err(Error::InvalidArgument(format!("grid {m}x{n} too small to be simplicial")));
    }
    // vertex (i, j); crossing j = n reflects i when `flip` is set
    let v = |i: usize, j: usize| {
        let (mut i, j) = (i % m, j);
        if j == n && flip {
            i = (m - i) % m;
        }
        i + m * (j % n)
    };
    let mut tris = Vec::with_capacity(2 * m * n);
    for j in 0..n {
        for i in 0..m {
            tris.push([v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            tris.push([v(i, j), v(i + 1, j + 1), v(i, j + 1)]);
        }
    }
    Triangulation::new(m * n, tris)
}

/// `m x n` grid torus with diagonals; vertex `(i, j)` has id `i + m j`.
pub fn grid_torus_simplicial(m: usize, n: usize) -> Result<Triangulation> {
    grid(m, n, false)
}

/// `m x n` grid Klein bottle: the top row is glued to the bottom row with a
/// reflection.
pub fn klein_grid(m: usize, n: usize) -> Result<Triangulation> {
    grid(m, n, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_meshes_are_manifolds() {
        for (t, chi) in [
            (tetrahedron(), 2),
            (octahedron(), 2),
            (torus7(), 0),
            (projective_plane6(), 1),
            (grid_torus_simplicial(3, 3).unwrap(), 0),
            (klein_grid(4, 4).unwrap(), 0),
            (klein_grid(3, 5).unwrap(), 0),
        ] {
            assert_eq!(t.validate_manifold(), Ok(()));
            assert_eq!(t.euler(), chi);
        }
        assert_eq!(torus7().counts(), (7, 21, 14));
        assert_eq!(projective_plane6().counts(), (6, 15, 10));
    }

    #[test]
    fn small_grids_rejected() {
        assert!(grid_torus_simplicial(2, 3).is_err());
        assert!(klein_grid(3, 2).is_err());
    }
}
