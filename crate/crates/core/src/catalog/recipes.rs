//! Tilings obtained from the expanded dodecahedral tiling by rotating or
//! removing some of its twelve pentagonal cupolas.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tilemap::TilingMap;

use super::ops::{self, CupolaSite};

/// How the two affected cupolas sit when exactly two are involved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Opposite,
    NonOpposite,
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "o" | "opposite" | "para" => Ok(Relation::Opposite),
            "n" | "non-opposite" | "meta" => Ok(Relation::NonOpposite),
            _ => Err(Error::Format(format!("unknown cupola relation {s:?}"))),
        }
    }
}

/// `dim` cupolas removed and `rot` cupolas turned by `π/5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Recipe {
    pub dim: usize,
    pub rot: usize,
    pub relation: Option<Relation>,
}

impl Recipe {
    pub fn new(dim: usize, rot: usize, relation: Option<Relation>) -> Result<Self> {
        let total = dim + rot;
        if total == 0 || total > 3 {
            return Err(Error::PreconditionFailed(format!(
                "between 1 and 3 cupolas can be changed, got {total}"
            )));
        }
        let relation = match (total, relation) {
            (2, None) => {
                return Err(Error::PreconditionFailed(
                    "two cupolas need an opposite or non-opposite relation".into(),
                ))
            }
            (2, r) => r,
            _ => None,
        };
        Ok(Self { dim, rot, relation })
    }

    /// Catalog name of the resulting tiling.
    pub fn name(&self) -> &'static str {
        use Relation::*;
        match (self.dim, self.rot, self.relation) {
            (0, 1, _) => "J72",
            (0, 2, Some(Opposite)) => "J73",
            (0, 2, Some(NonOpposite)) => "J74",
            (0, 3, _) => "J75",
            (1, 0, _) => "J76",
            (1, 1, Some(Opposite)) => "J77",
            (1, 1, Some(NonOpposite)) => "J78",
            (1, 2, _) => "J79",
            (2, 0, Some(Opposite)) => "J80",
            (2, 0, Some(NonOpposite)) => "J81",
            (2, 1, _) => "J82",
            (3, 0, _) => "J83",
            _ => unreachable!("recipes are validated on construction"),
        }
    }

    pub fn for_name(name: &str) -> Option<Self> {
        use Relation::*;
        let (dim, rot, rel) = match name {
            "J72" => (0, 1, None),
            "J73" => (0, 2, Some(Opposite)),
            "J74" => (0, 2, Some(NonOpposite)),
            "J75" => (0, 3, None),
            "J76" => (1, 0, None),
            "J77" => (1, 1, Some(Opposite)),
            "J78" => (1, 1, Some(NonOpposite)),
            "J79" => (1, 2, None),
            "J80" => (2, 0, Some(Opposite)),
            "J81" => (2, 0, Some(NonOpposite)),
            "J82" => (2, 1, None),
            "J83" => (3, 0, None),
            _ => return None,
        };
        Some(Self {
            dim,
            rot,
            relation: rel,
        })
    }

    pub fn all() -> Vec<Self> {
        (72..=83)
            .map(|n| Self::for_name(&format!("J{n}")).expect("known recipe"))
            .collect()
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {} rot {}", self.dim, self.rot)?;
        match self.relation {
            Some(Relation::Opposite) => write!(f, " opposite"),
            Some(Relation::NonOpposite) => write!(f, " non-opposite"),
            None => Ok(()),
        }
    }
}

fn overlaps(a: &CupolaSite, b: &CupolaSite) -> bool {
    a.faces.iter().any(|f| b.faces.contains(f))
}

/// The cupolas a recipe acts on: the first, then the second chosen by the
/// relation (or non-opposite when three are needed), then a third that
/// avoids and is not opposite either.
pub fn choose_sites(t: &TilingMap, recipe: &Recipe) -> Result<Vec<CupolaSite>> {
    let sites: Vec<CupolaSite> = ops::cupola_sites(t)
        .into_iter()
        .filter(|s| s.cap.len() == 5)
        .collect();
    let first = sites
        .first()
        .cloned()
        .ok_or_else(|| Error::InvalidSite("no pentagonal cupola".into()))?;
    let dist = |s: &CupolaSite| t.face_distances(s.cap_face());
    let opposite_of = |s: &CupolaSite| -> usize {
        let d = dist(s);
        let far = sites.iter().map(|o| d[o.cap_face()]).max().unwrap_or(0);
        sites
            .iter()
            .find(|o| d[o.cap_face()] == far)
            .map(CupolaSite::cap_face)
            .expect("some site is farthest")
    };
    let total = recipe.dim + recipe.rot;
    let mut chosen = vec![first];
    if total >= 2 {
        let want_opposite = total == 2 && recipe.relation == Some(Relation::Opposite);
        let opp = opposite_of(&chosen[0]);
        let second = sites
            .iter()
            .find(|s| {
                if want_opposite {
                    s.cap_face() == opp
                } else {
                    !overlaps(s, &chosen[0]) && s.cap_face() != opp
                }
            })
            .cloned()
            .ok_or_else(|| Error::InvalidSite("no second cupola".into()))?;
        chosen.push(second);
    }
    if total == 3 {
        let opps: Vec<usize> = chosen.iter().map(|s| opposite_of(s)).collect();
        let third = sites
            .iter()
            .find(|s| chosen.iter().all(|c| !overlaps(s, c)) && !opps.contains(&s.cap_face()))
            .cloned()
            .ok_or_else(|| Error::InvalidSite("no third cupola".into()))?;
        chosen.push(third);
    }
    Ok(chosen)
}

/// Applies a recipe to the expanded dodecahedral map: the first `dim`
/// chosen cupolas are removed, the rest rotated.
pub fn apply(ed: &TilingMap, recipe: &Recipe) -> Result<TilingMap> {
    let sites = choose_sites(ed, recipe)?;
    let (dim, rot) = sites.split_at(recipe.dim);
    let turned = if rot.is_empty() {
        ed.clone()
    } else {
        ops::rotate_cupolas(ed, rot)?
    };
    if dim.is_empty() {
        return Ok(turned);
    }
    let dim: Vec<CupolaSite> = dim
        .iter()
        .map(|s| ops::site_with_cap(&turned, &s.cap))
        .collect::<Result<_>>()?;
    ops::diminish_cupolas(&turned, &dim)
}
