//! Face lists for the small solids that seed the catalog.

use crate::error::{Error, Result};
use crate::tilemap::TilingMap;

fn at_least(what: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::Domain(format!("{what} needs n >= {min}, got {n}")));
    }
    Ok(())
}

/// An `m`-gon base (vertices `0..m`) with apex `m`.
pub fn pyramid(m: usize) -> Result<TilingMap> {
    at_least("pyramid", m, 3)?;
    let mut faces = vec![(0..m).collect::<Vec<_>>()];
    faces.extend((0..m).map(|i| vec![i, (i + 1) % m, m]));
    TilingMap::build_from_faces(faces)
}

/// Two `m`-gons joined by a band of squares.
pub fn prism(m: usize) -> Result<TilingMap> {
    at_least("prism", m, 3)?;
    let mut faces = vec![(0..m).collect::<Vec<_>>(), (m..2 * m).collect()];
    faces.extend((0..m).map(|i| {
        let j = (i + 1) % m;
        vec![i, j, m + j, m + i]
    }));
    TilingMap::build_from_faces(faces)
}

/// Two `m`-gons joined by a band of triangles.
pub fn antiprism(m: usize) -> Result<TilingMap> {
    at_least("antiprism", m, 3)?;
    let mut faces = vec![(0..m).collect::<Vec<_>>(), (m..2 * m).collect()];
    for i in 0..m {
        let j = (i + 1) % m;
        faces.push(vec![i, j, m + i]);
        faces.push(vec![j, m + j, m + i]);
    }
    TilingMap::build_from_faces(faces)
}

/// A `k`-gonal cap (vertices `0..k`) over a `2k`-gonal base
/// (vertices `k..3k`), with triangles on the even base edges.
pub fn cupola(k: usize) -> Result<TilingMap> {
    at_least("cupola", k, 3)?;
    let b = |i: usize| k + i % (2 * k);
    let mut faces = vec![(0..k).collect::<Vec<_>>(), (k..3 * k).collect()];
    for j in 0..k {
        faces.push(vec![b(2 * j), b(2 * j + 1), j]);
        faces.push(vec![b(2 * j + 1), b(2 * j + 2), (j + 1) % k, j]);
    }
    TilingMap::build_from_faces(faces)
}

/// `n` digons between two antipodal vertices.
pub fn hosohedron(n: usize) -> Result<TilingMap> {
    TilingMap::hosohedron(n)
}

/// Two `n`-gonal hemispheres.
pub fn dihedron(n: usize) -> Result<TilingMap> {
    at_least("dihedron", n, 3)?;
    let face: Vec<usize> = (0..n).collect();
    let mut back = face.clone();
    back.reverse();
    TilingMap::build_from_faces(vec![face, back])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tilemap::{census, Family};

    #[test]
    fn euler_holds_for_families() {
        for n in 3..=12 {
            for t in [pyramid(n), prism(n), antiprism(n), cupola(n)] {
                let c = census(&t.unwrap());
                assert_eq!(c.v + c.f, c.e + 2);
            }
        }
    }

    #[test]
    fn cupola_counts() {
        let c = census(&cupola(5).unwrap());
        assert_eq!((c.v, c.e, c.f), (15, 25, 12));
        assert_eq!(c.face_counts.get(&10), Some(&1));
    }

    #[test]
    fn degenerate_families() {
        assert!(dihedron(2).is_err());
        assert_eq!(dihedron(5).unwrap().family(), Family::Dihedron);
        assert_eq!(hosohedron(4).unwrap().family(), Family::Hosohedron);
        assert!(prism(2).is_err());
        assert!(hosohedron(1).is_err());
    }
}
