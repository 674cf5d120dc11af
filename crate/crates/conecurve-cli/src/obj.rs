//! Surfaces of revolution about the timelike axis, exported as OBJ meshes
//! (`v`/`f` records only).
//!
//! Rotating about the timelike axis is an isometry of the ambient space
//! that maps the null cone to itself, so revolved cone curves stay on the
//! cone. Quads are split into triangles along the (ring + sector) parity
//! diagonal; with a single angular sample the surface degenerates to the
//! generating polyline and no faces are emitted.

use conecurve::lorentz::LorentzVector;

/// Triangulated surface of revolution.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<LorentzVector>,
    /// 0-based vertex indices.
    pub faces: Vec<[usize; 3]>,
}

/// Revolve `profile` through `n_theta` uniformly spaced angles.
pub fn revolution_mesh(profile: &[LorentzVector], n_theta: usize) -> Mesh {
    assert!(n_theta >= 1);
    let mut vertices = Vec::with_capacity(profile.len() * n_theta);
    for p in profile {
        for j in 0..n_theta {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / n_theta as f64;
            vertices.push(p.rotate_about_timelike_axis(theta));
        }
    }
    let mut faces = Vec::new();
    if n_theta >= 2 {
        let at = |i: usize, j: usize| i * n_theta + j % n_theta;
        for i in 0..profile.len().saturating_sub(1) {
            for j in 0..n_theta {
                let (a, b, c, d) = (at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1));
                if (i + j) % 2 == 0 {
                    faces.push([a, b, c]);
                    faces.push([a, c, d]);
                } else {
                    faces.push([a, b, d]);
                    faces.push([b, c, d]);
                }
            }
        }
    }
    Mesh { vertices, faces }
}

/// Serialize to OBJ text. Vertices keep full round-trip precision.
pub fn write_obj(mesh: &Mesh) -> String {
    let mut out = String::new();
    for v in &mesh.vertices {
        out.push_str(&format!("v {} {} {}\n", v.x1, v.x2, v.x3));
    }
    for f in &mesh.faces {
        out.push_str(&format!("f {} {} {}\n", f[0] + 1, f[1] + 1, f[2] + 1));
    }
    out
}

/// Parse `v` records back (test support).
pub fn parse_obj_vertices(obj: &str) -> Vec<LorentzVector> {
    obj.lines()
        .filter_map(|line| {
            let mut it = line.split_whitespace();
            if it.next()? != "v" {
                return None;
            }
            let x1: f64 = it.next()?.parse().ok()?;
            let x2: f64 = it.next()?.parse().ok()?;
            let x3: f64 = it.next()?.parse().ok()?;
            Some(LorentzVector::new(x1, x2, x3))
        })
        .collect()
}

/// Wireframe preview polylines: every `ring_stride`-th ring and every
/// `sector_stride`-th generatrix.
pub fn wireframe(
    profile: &[LorentzVector],
    n_theta: usize,
    ring_stride: usize,
    sector_stride: usize,
) -> Vec<Vec<LorentzVector>> {
    let mut lines = Vec::new();
    for (i, p) in profile.iter().enumerate() {
        if i % ring_stride != 0 && i + 1 != profile.len() {
            continue;
        }
        let mut ring: Vec<LorentzVector> = (0..=n_theta)
            .map(|j| {
                p.rotate_about_timelike_axis(2.0 * std::f64::consts::PI * j as f64 / n_theta as f64)
            })
            .collect();
        if n_theta == 1 {
            ring.truncate(1);
        }
        lines.push(ring);
    }
    for j in (0..n_theta).step_by(sector_stride.max(1)) {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / n_theta as f64;
        lines.push(
            profile
                .iter()
                .map(|p| p.rotate_about_timelike_axis(theta))
                .collect(),
        );
    }
    lines
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone_profile(n: usize) -> Vec<LorentzVector> {
        (0..n)
            .map(|i| conecurve::example1_curve(-1.0 + 2.0 * i as f64 / (n - 1) as f64).p)
            .collect()
    }

    #[test]
    fn revolved_cone_curve_stays_on_the_cone() {
        let mesh = revolution_mesh(&cone_profile(21), 16);
        for v in &mesh.vertices {
            assert!(v.self_inner().abs() <= 1e-12);
        }
    }

    #[test]
    fn face_count_and_indices() {
        let mesh = revolution_mesh(&cone_profile(5), 8);
        assert_eq!(mesh.vertices.len(), 5 * 8);
        assert_eq!(mesh.faces.len(), 4 * 8 * 2);
        for f in &mesh.faces {
            for &ix in f {
                assert!(ix < mesh.vertices.len());
            }
        }
    }

    #[test]
    fn single_sector_degenerates_to_polyline() {
        let mesh = revolution_mesh(&cone_profile(5), 1);
        assert_eq!(mesh.vertices.len(), 5);
        assert!(mesh.faces.is_empty());
    }

    #[test]
    fn obj_roundtrips_vertices_exactly() {
        let mesh = revolution_mesh(&cone_profile(7), 4);
        let text = write_obj(&mesh);
        assert_eq!(parse_obj_vertices(&text), mesh.vertices);
        assert!(text.lines().all(|l| l.starts_with("v ") || l.starts_with("f ")));
    }
}
