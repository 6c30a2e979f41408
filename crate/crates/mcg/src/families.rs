//! Named graph family generators.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt;
use std::str::FromStr;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Family {
    /// Cycle of length n−1 plus a hub joined to every cycle vertex.
    Wheel,
    Cycle,
    Complete,
    /// Two disjoint (n/2)-cycles joined by a perfect matching of rungs.
    Prism,
    /// An n-cycle plus all antipodal chords.
    MoebiusLadder,
    Petersen,
    /// Complement of the 6-cycle; isomorphic to the triangular prism.
    C6Complement,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Wheel => "wheel",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Prism => "prism",
            Family::MoebiusLadder => "moebius-ladder",
            Family::Petersen => "petersen",
            Family::C6Complement => "c6-complement",
        }
    }

    /// Whether the family takes an order parameter.
    pub fn parametric(self) -> bool {
        !matches!(self, Family::Petersen | Family::C6Complement)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "wheel" => Ok(Family::Wheel),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "prism" => Ok(Family::Prism),
            "moebius-ladder" => Ok(Family::MoebiusLadder),
            "petersen" => Ok(Family::Petersen),
            "c6-complement" => Ok(Family::C6Complement),
            _ => Err(Error::argument(format!("unknown family '{s}'"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    pub family: Family,
    pub order: Option<usize>,
}

impl FamilySpec {
    pub fn of_order(family: Family, order: usize) -> FamilySpec {
        FamilySpec {
            family,
            order: Some(order),
        }
    }

    pub fn fixed(family: Family) -> FamilySpec {
        FamilySpec {
            family,
            order: None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order {
            Some(n) => write!(f, "{}({n})", self.family),
            None => write!(f, "{}", self.family),
        }
    }
}

fn require_order(spec: &FamilySpec) -> Result<usize> {
    spec.order
        .ok_or_else(|| Error::argument(format!("family {} requires --order", spec.family)))
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match spec.family {
        Family::Wheel => {
            let n = require_order(spec)?;
            if n < 4 {
                return Err(Error::argument("wheel order must be at least 4".to_string()));
            }
            // Rim 0..n−1, hub n−1.
            let rim = n - 1;
            let mut edges: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
            edges.extend((0..rim).map(|i| (i, rim)));
            Graph::from_edges(n, &edges)
        }
        Family::Cycle => {
            let n = require_order(spec)?;
            if n < 3 {
                return Err(Error::argument("cycle order must be at least 3".to_string()));
            }
            let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Complete => {
            let n = require_order(spec)?;
            if n < 1 {
                return Err(Error::argument("complete order must be at least 1".to_string()));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        Family::Prism => {
            let n = require_order(spec)?;
            if n < 6 || n % 2 != 0 {
                return Err(Error::argument(
                    "prism order must be even and at least 6".to_string(),
                ));
            }
            let k = n / 2;
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for i in 0..k {
                edges.push((i, (i + 1) % k));
                edges.push((k + i, k + (i + 1) % k));
                edges.push((i, k + i));
            }
            Graph::from_edges(n, &edges)
        }
        Family::MoebiusLadder => {
            let n = require_order(spec)?;
            if n < 6 || n % 2 != 0 {
                return Err(Error::argument(
                    "moebius-ladder order must be even and at least 6".to_string(),
                ));
            }
            let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            edges.extend((0..n / 2).map(|i| (i, i + n / 2)));
            Graph::from_edges(n, &edges)
        }
        Family::Petersen => {
            check_fixed_order(spec, 10)?;
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5)); // outer pentagon
                edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
                edges.push((i, 5 + i)); // spokes
            }
            Graph::from_edges(10, &edges)
        }
        Family::C6Complement => {
            check_fixed_order(spec, 6)?;
            let mut edges = Vec::new();
            for u in 0..6 {
                for v in u + 1..6 {
                    let d = v - u;
                    if d != 1 && d != 5 {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(6, &edges)
        }
    }
}

fn check_fixed_order(spec: &FamilySpec, expect: usize) -> Result<()> {
    match spec.order {
        None => Ok(()),
        Some(n) if n == expect => Ok(()),
        Some(n) => Err(Error::argument(format!(
            "family {} has fixed order {expect}, got {n}",
            spec.family
        ))),
    }
}
