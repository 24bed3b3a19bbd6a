//! Boards: finite simple graphs with dense integer vertex ids, plus the
//! families the games are usually played on (paths, cycles, stars, complete
//! bipartite graphs).

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoardError {
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("complete bipartite parts must be nonempty (got {m} and {n}); use an edge list for edgeless boards")]
    EmptyPart { m: usize, n: usize },
    #[error("vertex {v} out of range for a board with {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed board file: {0}")]
    Malformed(String),
    #[error("bad board spec `{0}` (expected path:N, cycle:N, star:N, kbip:M,N, or file:PATH)")]
    BadSpec(String),
    #[error("cannot read `{path}`: {message}")]
    FileRead { path: String, message: String },
}

/// Family label attached to boards built by the named constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoardFamily {
    Path,
    Cycle,
    Star { leaves: usize },
    CompleteBipartite { left: usize, right: usize },
}

/// An immutable finite simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Board {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    family: Option<BoardFamily>,
}

/// Sentinel distance for unreachable vertex pairs.
pub const INFINITE_DISTANCE: u32 = u32::MAX;

/// All-pairs shortest path lengths; unreachable pairs hold
/// [`INFINITE_DISTANCE`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }
}

impl Board {
    fn from_adjacency(adjacency: Vec<Vec<usize>>, family: Option<BoardFamily>) -> Self {
        Self {
            n: adjacency.len(),
            adjacency,
            family,
        }
    }

    /// The path P_n with edges {i, i+1}; n = 0 is the empty board.
    pub fn path(n: usize) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for i in 0..n.saturating_sub(1) {
            adjacency[i].push(i + 1);
            adjacency[i + 1].push(i);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Self::from_adjacency(adjacency, Some(BoardFamily::Path))
    }

    /// The cycle C_n. Cycles below 3 vertices would need loops or
    /// multi-edges, so they are rejected.
    pub fn cycle(n: usize) -> Result<Self, BoardError> {
        if n < 3 {
            return Err(BoardError::CycleTooSmall(n));
        }
        let mut adjacency = vec![Vec::new(); n];
        for i in 0..n {
            let j = (i + 1) % n;
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Self::from_adjacency(adjacency, Some(BoardFamily::Cycle)))
    }

    /// The star K_{1,n}: vertex 0 is the center, adjacent to 1..=n.
    /// `star(0)` is a single isolated vertex.
    pub fn star(leaves: usize) -> Self {
        let mut adjacency = vec![Vec::new(); leaves + 1];
        for leaf in 1..=leaves {
            adjacency[0].push(leaf);
            adjacency[leaf].push(0);
        }
        Self::from_adjacency(adjacency, Some(BoardFamily::Star { leaves }))
    }

    /// K_{m,n} with parts {0..m} and {m..m+n}.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Self, BoardError> {
        if m == 0 || n == 0 {
            return Err(BoardError::EmptyPart { m, n });
        }
        let mut adjacency = vec![Vec::new(); m + n];
        for u in 0..m {
            for v in m..m + n {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Self::from_adjacency(
            adjacency,
            Some(BoardFamily::CompleteBipartite { left: m, right: n }),
        ))
    }

    /// Builds a simple graph from an edge list; duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, BoardError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(BoardError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(BoardError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(BoardError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        Ok(Self::from_adjacency(adjacency, None))
    }

    /// Parses the text board format: first non-comment line `n m`, then `m`
    /// lines `u v` with 0-based vertex ids. Lines starting with `#` are
    /// ignored.
    pub fn parse(text: &str) -> Result<Self, BoardError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| BoardError::Malformed("missing header line".into()))?;
        let mut it = header.split_whitespace();
        let parse_usize = |tok: Option<&str>, what: &str| -> Result<usize, BoardError> {
            tok.ok_or_else(|| BoardError::Malformed(format!("missing {what}")))?
                .parse()
                .map_err(|_| BoardError::Malformed(format!("invalid {what}")))
        };
        let n = parse_usize(it.next(), "vertex count")?;
        let m = parse_usize(it.next(), "edge count")?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| BoardError::Malformed(format!("expected {m} edge lines")))?;
            let mut it = line.split_whitespace();
            let u = parse_usize(it.next(), "edge endpoint")?;
            let v = parse_usize(it.next(), "edge endpoint")?;
            edges.push((u, v));
        }
        Self::from_edge_list(n, &edges)
    }

    /// Builds a board from the common spec grammar:
    /// `path:N`, `cycle:N`, `star:N`, `kbip:M,N`, or `file:PATH`.
    pub fn from_spec(spec: &str) -> Result<Self, BoardError> {
        let (kind, arg) = spec
            .split_once(':')
            .ok_or_else(|| BoardError::BadSpec(spec.to_string()))?;
        let parse_n = |s: &str| -> Result<usize, BoardError> {
            s.parse().map_err(|_| BoardError::BadSpec(spec.to_string()))
        };
        match kind {
            "path" => Ok(Self::path(parse_n(arg)?)),
            "cycle" => Self::cycle(parse_n(arg)?),
            "star" => Ok(Self::star(parse_n(arg)?)),
            "kbip" => {
                let (m, n) = arg
                    .split_once(',')
                    .ok_or_else(|| BoardError::BadSpec(spec.to_string()))?;
                Self::complete_bipartite(parse_n(m)?, parse_n(n)?)
            }
            "file" => {
                let text = std::fs::read_to_string(arg).map_err(|e| BoardError::FileRead {
                    path: arg.to_string(),
                    message: e.to_string(),
                })?;
                Self::parse(&text)
            }
            _ => Err(BoardError::BadSpec(spec.to_string())),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn family(&self) -> Option<BoardFamily> {
        self.family
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as (u, v) pairs with u < v.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Exact all-pairs shortest path lengths by breadth-first traversal from
    /// each vertex.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.n;
        let mut dist = vec![INFINITE_DISTANCE; n * n];
        let mut queue = VecDeque::new();
        for src in 0..n {
            let row = &mut dist[src * n..(src + 1) * n];
            row[src] = 0;
            queue.clear();
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &v in &self.adjacency[u] {
                    if row[v] == INFINITE_DISTANCE {
                        row[v] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        DistanceMatrix { n, dist }
    }

    /// Returns a witness 2-coloring when the board has no odd cycle,
    /// `None` otherwise. Isolated vertices go to the first side.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &v in &self.adjacency[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.n, self.edge_count())?;
        for (u, v) in self.edges() {
            write!(f, "\n{u} {v}")?;
        }
        Ok(())
    }
}
