//! Exact computation of the labeling length by backtracking over vertex
//! label assignments with distance-matrix pruning.

use crate::error::Error;
use crate::graph::{DistanceMatrix, Graph};
use crate::labelings::Labeling;

/// Backtracking search for a labeling whose image is exactly `allowed`.
/// Vertices are assigned in descending eccentricity order (ties by index)
/// and candidate labels ascending, so the result is deterministic. A label
/// `k` is placed on a vertex only when it sits at distance exactly `k` from
/// every vertex already holding `k`. `max_singletons`, when set, bounds the
/// number of nonzero labels used exactly once (0 for a proper labeling).
pub(crate) struct LabelSearch<'a> {
    dm: &'a DistanceMatrix,
    vertex_order: Vec<usize>,
    allowed: Vec<u32>,
    max_singletons: Option<usize>,
    assignment: Vec<usize>,
    placed: Vec<Vec<usize>>,
    unused: usize,
}

const UNASSIGNED: usize = usize::MAX;

impl<'a> LabelSearch<'a> {
    pub(crate) fn new(
        dm: &'a DistanceMatrix,
        allowed: Vec<u32>,
        max_singletons: Option<usize>,
    ) -> Self {
        let n = dm.n();
        let mut vertex_order: Vec<usize> = (0..n).collect();
        vertex_order.sort_by_key(|&v| (std::cmp::Reverse(dm.eccentricity(v)), v));
        let slots = allowed.len();
        LabelSearch {
            dm,
            vertex_order,
            allowed,
            max_singletons,
            assignment: vec![UNASSIGNED; n],
            placed: vec![Vec::new(); slots],
            unused: slots,
        }
    }

    pub(crate) fn run(mut self) -> Option<Labeling> {
        if self.recurse(0) {
            let labels = self
                .assignment
                .iter()
                .map(|&slot| self.allowed[slot])
                .collect();
            Some(Labeling::new(labels))
        } else {
            None
        }
    }

    fn recurse(&mut self, depth: usize) -> bool {
        let n = self.dm.n();
        if depth == n {
            return self.unused == 0 && self.singletons_ok();
        }
        // Every still-unused label needs at least one of the remaining vertices.
        if self.unused > n - depth {
            return false;
        }
        let v = self.vertex_order[depth];
        for slot in 0..self.allowed.len() {
            let k = self.allowed[slot];
            if !self.placed[slot].iter().all(|&u| self.dm.get(u, v) == k) {
                continue;
            }
            if self.placed[slot].is_empty() {
                self.unused -= 1;
            }
            self.placed[slot].push(v);
            self.assignment[v] = slot;
            if self.recurse(depth + 1) {
                return true;
            }
            self.assignment[v] = UNASSIGNED;
            self.placed[slot].pop();
            if self.placed[slot].is_empty() {
                self.unused += 1;
            }
        }
        false
    }

    fn singletons_ok(&self) -> bool {
        match self.max_singletons {
            None => true,
            Some(budget) => {
                let singles = self
                    .placed
                    .iter()
                    .zip(&self.allowed)
                    .filter(|(vs, k)| **k != 0 && vs.len() == 1)
                    .count();
                singles <= budget
            }
        }
    }
}

/// Looks for a distance `l`-labeling, preferring image `[1,l]` over `[0,l]`.
pub fn find_labeling_with_length(g: &Graph, l: u32) -> Option<Labeling> {
    let dm = g.distances();
    for include_zero in [false, true] {
        let allowed: Vec<u32> = if include_zero {
            (0..=l).collect()
        } else {
            (1..=l).collect()
        };
        if let Some(f) = LabelSearch::new(&dm, allowed, None).run() {
            return Some(f);
        }
    }
    None
}

/// The labeling length: the smallest `l` in `[1, l_max]` admitting a
/// distance `l`-labeling. The default bound `l_max = order` always succeeds
/// because all-distinct labels `[1, n]` satisfy the distance condition
/// vacuously, so an error is possible only for an explicit smaller bound.
pub fn lambda_exact(g: &Graph, l_max: Option<u32>) -> Result<u32, Error> {
    let bound = l_max.unwrap_or(g.order() as u32);
    for l in 1..=bound {
        if find_labeling_with_length(g, l).is_some() {
            return Ok(l);
        }
    }
    Err(Error::LengthBoundExceeded { l_max: bound })
}
