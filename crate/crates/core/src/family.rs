//! Generators for the named graph families.
//!
//! Vertex numbering is deterministic so constructions are reproducible:
//! spiders put the center first and then number arm by arm, wheels and fans
//! put the hub last, caterpillars number the spine first and then the leaves
//! in spine order.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// Path P_n on n vertices.
    Path { n: usize },
    /// Cycle C_n on n vertices, n >= 3.
    Cycle { n: usize },
    /// Complete graph K_n.
    Complete { n: usize },
    /// Star K_{1,k}: center plus k leaves.
    Star { k: usize },
    /// Complete bipartite K_{m,n}; part X is 0..m, part Y is m..m+n.
    CompleteBipartite { m: usize, n: usize },
    /// Spider S_k^n: star K_{1,k} with every edge replaced by an arm of n
    /// vertices, so the order is k*n + 1.
    Spider { k: usize, n: usize },
    /// Wheel W_n: cycle C_n plus a hub adjacent to every cycle vertex.
    Wheel { n: usize },
    /// Fan F_n: path P_n plus a hub adjacent to every path vertex.
    Fan { n: usize },
    /// Caterpillar: a spine path with `leaves[i]` pendant leaves on spine
    /// vertex i.
    Caterpillar { leaves: Vec<usize> },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Star { .. } => "star",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::Spider { .. } => "spider",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::Fan { .. } => "fan",
            FamilySpec::Caterpillar { .. } => "caterpillar",
        }
    }

    pub fn generate(&self) -> Result<Graph, Error> {
        match self {
            FamilySpec::Path { n } => {
                require(*n >= 1, "path needs n >= 1")?;
                Graph::new(*n, (1..*n).map(|i| (i - 1, i)))
            }
            FamilySpec::Cycle { n } => {
                require(*n >= 3, "cycle needs n >= 3")?;
                let edges = (1..*n).map(|i| (i - 1, i)).chain([(n - 1, 0)]);
                Graph::new(*n, edges)
            }
            FamilySpec::Complete { n } => {
                require(*n >= 1, "complete graph needs n >= 1")?;
                let edges = (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v)));
                Graph::new(*n, edges)
            }
            FamilySpec::Star { k } => {
                require(*k >= 1, "star needs k >= 1")?;
                Graph::new(k + 1, (1..=*k).map(|v| (0, v)))
            }
            FamilySpec::CompleteBipartite { m, n } => {
                require(*m >= 1 && *n >= 1, "complete bipartite needs m, n >= 1")?;
                let edges = (0..*m).flat_map(|u| (0..*n).map(move |v| (u, m + v)));
                Graph::new(m + n, edges)
            }
            FamilySpec::Spider { k, n } => {
                require(*k >= 1 && *n >= 1, "spider needs k, n >= 1")?;
                let mut edges = Vec::new();
                for arm in 0..*k {
                    let first = 1 + arm * n;
                    edges.push((0, first));
                    for i in 1..*n {
                        edges.push((first + i - 1, first + i));
                    }
                }
                Graph::new(k * n + 1, edges)
            }
            FamilySpec::Wheel { n } => {
                require(*n >= 3, "wheel needs n >= 3")?;
                let cycle = (1..*n).map(|i| (i - 1, i)).chain([(n - 1, 0)]);
                let spokes = (0..*n).map(|v| (v, *n));
                Graph::new(n + 1, cycle.chain(spokes))
            }
            FamilySpec::Fan { n } => {
                require(*n >= 2, "fan needs n >= 2")?;
                let path = (1..*n).map(|i| (i - 1, i));
                let spokes = (0..*n).map(|v| (v, *n));
                Graph::new(n + 1, path.chain(spokes))
            }
            FamilySpec::Caterpillar { leaves } => {
                require(!leaves.is_empty(), "caterpillar needs a nonempty spine")?;
                let s = leaves.len();
                let mut edges: Vec<(usize, usize)> = (1..s).map(|i| (i - 1, i)).collect();
                let mut next = s;
                for (spine, &count) in leaves.iter().enumerate() {
                    for _ in 0..count {
                        edges.push((spine, next));
                        next += 1;
                    }
                }
                Graph::new(next, edges)
            }
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidFamily(msg.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spider_4_5_has_order_21_and_4_leaves() {
        let g = FamilySpec::Spider { k: 4, n: 5 }.generate().unwrap();
        assert_eq!(g.order(), 21);
        let leaves = (0..21).filter(|&v| g.degree(v) == 1).count();
        assert_eq!(leaves, 4);
    }

    #[test]
    fn wheel_4_has_order_5_size_8() {
        let g = FamilySpec::Wheel { n: 4 }.generate().unwrap();
        assert_eq!((g.order(), g.size()), (5, 8));
    }

    #[test]
    fn k23_order_size_diameter() {
        let g = FamilySpec::CompleteBipartite { m: 2, n: 3 }
            .generate()
            .unwrap();
        assert_eq!((g.order(), g.size()), (5, 6));
        assert_eq!(g.distances().diameter(), 2);
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(FamilySpec::Cycle { n: 2 }.generate().is_err());
        assert!(FamilySpec::Fan { n: 1 }.generate().is_err());
        assert!(FamilySpec::Wheel { n: 2 }.generate().is_err());
        assert!(FamilySpec::Path { n: 0 }.generate().is_err());
        assert!(
            FamilySpec::Caterpillar { leaves: vec![] }
                .generate()
                .is_err()
        );
    }

    #[test]
    fn caterpillar_numbering() {
        // Spine 0-1-2, one leaf on 0, two on 2.
        let g = FamilySpec::Caterpillar {
            leaves: vec![1, 0, 2],
        }
        .generate()
        .unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_tree());
        assert!(g.has_edge(0, 3));
        assert!(g.has_edge(2, 4));
        assert!(g.has_edge(2, 5));
    }

    /// Diameters of the generated families match the hand values.
    #[test]
    fn family_diameters() {
        for n in 2..=8 {
            let g = FamilySpec::Complete { n }.generate().unwrap();
            assert_eq!(g.distances().diameter(), 1);
        }
        for n in 1..=9 {
            let g = FamilySpec::Path { n }.generate().unwrap();
            assert_eq!(g.distances().diameter(), n as u32 - 1);
        }
        for n in 3..=9 {
            let g = FamilySpec::Cycle { n }.generate().unwrap();
            assert_eq!(g.distances().diameter(), n as u32 / 2);
        }
        for k in 2..=5 {
            for n in 1..=4 {
                let g = FamilySpec::Spider { k, n }.generate().unwrap();
                assert_eq!(g.distances().diameter(), 2 * n as u32);
            }
        }
        for n in 4..=9 {
            let g = FamilySpec::Wheel { n }.generate().unwrap();
            assert_eq!(g.distances().diameter(), 2);
        }
        for n in 3..=9 {
            let g = FamilySpec::Fan { n }.generate().unwrap();
            assert_eq!(g.distances().diameter(), 2);
        }
    }

    /// Recomputed matrices satisfy the distance-matrix axioms on every family.
    #[test]
    fn distance_matrix_invariants_on_families() {
        let specs = vec![
            FamilySpec::Path { n: 7 },
            FamilySpec::Cycle { n: 8 },
            FamilySpec::Complete { n: 5 },
            FamilySpec::Star { k: 4 },
            FamilySpec::CompleteBipartite { m: 3, n: 4 },
            FamilySpec::Spider { k: 3, n: 2 },
            FamilySpec::Wheel { n: 6 },
            FamilySpec::Fan { n: 5 },
            FamilySpec::Caterpillar {
                leaves: vec![2, 0, 1, 3],
            },
        ];
        for spec in specs {
            let g = spec.generate().unwrap();
            let d = g.distances();
            let n = g.order();
            for i in 0..n {
                assert_eq!(d.get(i, i), 0);
                for j in 0..n {
                    assert_eq!(d.get(i, j), d.get(j, i));
                    if i != j {
                        assert_eq!(d.get(i, j) == 1, g.has_edge(i, j));
                    }
                    for k in 0..n {
                        assert!(d.get(i, k) <= d.get(i, j) + d.get(j, k));
                    }
                }
            }
        }
    }
}
