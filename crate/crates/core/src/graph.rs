//! Graph representation, all-pairs BFS distances, and JSON/DOT serialization.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::labelings::Labeling;

/// A finite simple undirected connected graph on vertices `0..order`.
///
/// Connectivity is a constructor invariant, so every pairwise distance is
/// finite and `distances` is total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a validated graph. Edges are normalized to `u < v` and sorted
    /// lexicographically; self-loops, duplicates, out-of-range endpoints and
    /// disconnected graphs are each rejected with a distinct error.
    pub fn new(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, Error> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut norm = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if v >= order {
                return Err(Error::EndpointOutOfRange { endpoint: v, order });
            }
            norm.push((u, v));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        let graph = Graph {
            order,
            edges: norm,
            adj,
        };
        if graph.reachable_from(0) != order {
            return Err(Error::Disconnected);
        }
        Ok(graph)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// A connected graph is a tree exactly when it has `order - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.edges.len() == self.order - 1
    }

    fn reachable_from(&self, start: usize) -> usize {
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count
    }

    /// BFS hop distances from every vertex.
    pub fn distances(&self) -> DistanceMatrix {
        DistanceMatrix::compute(self)
    }

    /// Canonical JSON form: `{"order":n,"edges":[[u,v],...]}` with `u < v`
    /// and edges sorted lexicographically.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphRepr {
            order: self.order,
            edges: self.edges.clone(),
        })
        .expect("graph serializes")
    }

    /// Decodes and re-validates a graph; all constructor invariants apply.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let repr: GraphRepr = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Graph::new(repr.order, repr.edges)
    }

    /// DOT export (undirected). When a labeling is supplied each node carries
    /// a `label` attribute.
    pub fn to_dot(&self, labeling: Option<&Labeling>) -> String {
        let mut out = String::from("graph {\n");
        for v in 0..self.order {
            match labeling {
                Some(f) => writeln!(out, "  {v} [label=\"{}\"];", f.get(v)).unwrap(),
                None => writeln!(out, "  {v};").unwrap(),
            }
        }
        for &(u, v) in &self.edges {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            order: self.order,
            edges: self.edges.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        Graph::new(repr.order, repr.edges).map_err(D::Error::custom)
    }
}

/// All-pairs shortest-path hop counts of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    fn compute(g: &Graph) -> Self {
        let n = g.order();
        let mut d = vec![0u32; n * n];
        let mut dist = vec![u32::MAX; n];
        for s in 0..n {
            dist.fill(u32::MAX);
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in g.neighbors(u) {
                    if dist[v] == u32::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            d[s * n..(s + 1) * n].copy_from_slice(&dist);
        }
        DistanceMatrix { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        (0..self.n).map(|u| self.get(v, u)).max().unwrap()
    }

    pub fn diameter(&self) -> u32 {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap()
    }

    /// Whether some pair of distinct vertices lies at distance exactly `k`.
    pub fn has_pair_at(&self, k: u32) -> bool {
        if k == 0 {
            return false;
        }
        (0..self.n).any(|i| (i + 1..self.n).any(|j| self.get(i, j) == k))
    }
}
