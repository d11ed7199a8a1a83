#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use surftop::complexes::{meshes, EdgeCycle, Triangulation};

/// Named closed meshes: sphere, torus, projective plane, Klein bottle.
pub fn base_meshes() -> Vec<(&'static str, Triangulation)> {
    vec![
        ("sphere", meshes::octahedron()),
        ("torus", meshes::torus7()),
        ("projective-plane", meshes::projective_plane6()),
        ("klein", meshes::klein_grid(4, 4).unwrap()),
    ]
}

pub const MAX_TRIANGLES: usize = 200;

/// Two rounds of random refinement: each round splits a random quarter of
/// the edges and then inserts a vertex into a random quarter of the
/// triangles. Operations that would exceed `MAX_TRIANGLES` are skipped.
pub fn random_subdivision<R: Rng>(tri: &Triangulation, rng: &mut R) -> Triangulation {
    let mut t = tri.clone();
    for _ in 0..2 {
        for _ in 0..t.edges().len() / 4 {
            let e = rng.gen_range(0..t.edges().len());
            if t.triangles().len() + 2 <= MAX_TRIANGLES {
                t = t.split_edge(e).unwrap();
            }
        }
        let faces = t.triangles().len();
        let mut picks: Vec<usize> = (0..faces).collect();
        picks.shuffle(rng);
        picks.truncate(faces / 4);
        // stellar subdivision keeps existing triangle indices in place
        for f in picks {
            if t.triangles().len() + 2 <= MAX_TRIANGLES {
                t = t.stellar_subdivide(f).unwrap();
            }
        }
    }
    t
}

/// Simple cycle from a non-backtracking random walk, cut at the first
/// revisited vertex.
pub fn random_simple_cycle<R: Rng>(tri: &Triangulation, rng: &mut R) -> EdgeCycle {
    let adjacency: Vec<Vec<usize>> = (0..tri.vertex_count()).map(|v| tri.neighbours(v)).collect();
    let mut path = vec![rng.gen_range(0..tri.vertex_count())];
    loop {
        let here = *path.last().unwrap();
        let back = if path.len() >= 2 { Some(path[path.len() - 2]) } else { None };
        let choices: Vec<usize> = adjacency[here].iter().copied().filter(|&w| Some(w) != back).collect();
        let next = *choices.choose(rng).unwrap();
        if let Some(pos) = path.iter().position(|&w| w == next) {
            return EdgeCycle::new(tri, path[pos..].to_vec()).unwrap();
        }
        path.push(next);
    }
}
