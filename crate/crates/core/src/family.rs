//! Named graph families.
//!
//! Vertex naming is `"1".."n"` throughout; the index layout for each family is
//! documented on its constructor.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A family name with its parameters, e.g. `wheel:9` or `fan:3,2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    Wheel(usize),
    /// `Fan(m, n)`: `m` apexes joined to every vertex of a path on `n` vertices.
    Fan(usize, usize),
    Prism(usize),
    Hypercube(usize),
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        match self {
            Family::Complete(n) => complete(n),
            Family::Path(n) => path(n),
            Family::Cycle(n) => cycle(n),
            Family::CompleteBipartite(m, n) => complete_bipartite(m, n),
            Family::Wheel(n) => wheel(n),
            Family::Fan(m, n) => fan(m, n),
            Family::Prism(n) => prism(n),
            Family::Hypercube(n) => hypercube(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::CompleteBipartite(m, n) => write!(f, "complete-bipartite:{m},{n}"),
            Family::Wheel(n) => write!(f, "wheel:{n}"),
            Family::Fan(m, n) => write!(f, "fan:{m},{n}"),
            Family::Prism(n) => write!(f, "prism:{n}"),
            Family::Hypercube(n) => write!(f, "hypercube:{n}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::arg(format!("family spec {s:?} must look like name:params")))?;
        let nums = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::arg(format!("bad family parameter in {s:?}: {e}")))?;
        let one = |f: fn(usize) -> Family| match nums[..] {
            [a] => Ok(f(a)),
            _ => Err(Error::arg(format!("{name} takes one parameter"))),
        };
        let two = |f: fn(usize, usize) -> Family| match nums[..] {
            [a, b] => Ok(f(a, b)),
            _ => Err(Error::arg(format!("{name} takes two parameters"))),
        };
        match name {
            "complete" | "K" => one(Family::Complete),
            "path" | "P" => one(Family::Path),
            "cycle" | "C" => one(Family::Cycle),
            "complete-bipartite" | "Kmn" => two(Family::CompleteBipartite),
            "wheel" | "W" => one(Family::Wheel),
            "fan" | "F" => two(Family::Fan),
            "prism" => one(Family::Prism),
            "hypercube" | "Q" => one(Family::Hypercube),
            _ => Err(Error::arg(format!("unknown family {name:?}"))),
        }
    }
}

fn at_least(what: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::arg(format!("{what} must be at least {min}, got {value}")))
    } else {
        Ok(())
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete graph order", n, 1)?;
    Graph::from_fn(crate::graph::default_names(n), |_, _| true)
}

/// Path `0 - 1 - .. - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    at_least("path order", n, 1)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle `0 - 1 - .. - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle order", n, 3)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    at_least("bipartite part size", m, 1)?;
    at_least("bipartite part size", n, 1)?;
    Graph::from_fn(crate::graph::default_names(m + n), |u, v| (u < m) != (v < m))
}

/// Rim cycle on `0..n-1`, hub last.
pub fn wheel(n: usize) -> Result<Graph> {
    at_least("wheel order", n, 4)?;
    let rim = n - 1;
    let mut edges: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..rim).map(|i| (i, rim)));
    Graph::from_edges(n, &edges)
}

/// Spine path on `0..n`, then the `m` apexes `n..n+m`.
pub fn fan(m: usize, n: usize) -> Result<Graph> {
    at_least("fan apex count", m, 1)?;
    at_least("fan spine length", n, 1)?;
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    for a in n..n + m {
        edges.extend((0..n).map(|s| (s, a)));
    }
    Graph::from_edges(m + n, &edges)
}

/// Outer cycle `0..n`, inner cycle `n..2n`, spokes `i - (n+i)`.
pub fn prism(n: usize) -> Result<Graph> {
    at_least("prism order", n, 3)?;
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + 1) % n));
        edges.push((i, n + i));
    }
    Graph::from_edges(2 * n, &edges)
}

/// Vertex `i` is the binary tuple of `i`; adjacent tuples differ in one bit.
pub fn hypercube(n: usize) -> Result<Graph> {
    at_least("hypercube dimension", n, 1)?;
    if n > 20 {
        return Err(Error::UnsupportedSize {
            what: "hypercube dimension",
            size: n,
            limit: 20,
        });
    }
    Graph::from_fn(crate::graph::default_names(1 << n), |u, v| (u ^ v).is_power_of_two())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn wheel_four_is_k4() {
        assert!(are_isomorphic(&wheel(4).unwrap(), &complete(4).unwrap()).unwrap());
    }

    #[test]
    fn square_hypercube_is_c4() {
        assert!(are_isomorphic(&hypercube(2).unwrap(), &cycle(4).unwrap()).unwrap());
    }

    #[test]
    fn fan_three_two_is_listed_five_vertex_graph() {
        let f = fan(3, 2).unwrap();
        assert!(are_isomorphic(&f, &crate::fixtures::five_vertex_minimal()[1]).unwrap());
    }

    #[test]
    fn sizes() {
        for n in 4..12 {
            let w = wheel(n).unwrap();
            assert_eq!((w.vertex_count(), w.edge_count()), (n, 2 * (n - 1)));
        }
        for m in 1..5 {
            for n in 1..6 {
                let f = fan(m, n).unwrap();
                assert_eq!((f.vertex_count(), f.edge_count()), (m + n, m * n + n - 1));
            }
        }
        assert_eq!(prism(5).unwrap().edge_count(), 15);
        assert_eq!(hypercube(3).unwrap().edge_count(), 12);
    }

    #[test]
    fn parameter_ranges() {
        assert!(wheel(3).is_err());
        assert!(cycle(2).is_err());
        assert!(fan(0, 2).is_err());
        assert!(prism(2).is_err());
        assert!(hypercube(0).is_err());
        assert!(complete(0).is_err());
        assert!(path(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn parse_specs() {
        assert_eq!("wheel:9".parse::<Family>().unwrap(), Family::Wheel(9));
        assert_eq!("fan:3,2".parse::<Family>().unwrap(), Family::Fan(3, 2));
        assert_eq!("complete-bipartite:2,3".parse::<Family>().unwrap(), Family::CompleteBipartite(2, 3));
        for f in [Family::Prism(4), Family::Hypercube(3), Family::Path(2)] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert!("wheel".parse::<Family>().is_err());
        assert!("fan:3".parse::<Family>().is_err());
        assert!("blob:3".parse::<Family>().is_err());
    }
}
