//! Bounded exhaustive realization search: every connected graph up to a
//! small order is enumerated by upper-triangular adjacency bitmask, and each
//! is searched for a labeling onto the requested set.
//!
//! The enumeration is raw (no isomorphism rejection): existence search does
//! not need canonical forms at these orders, and sequential ascending
//! (order, bitmask) iteration makes the first certificate deterministic.

use crate::delta::{Construction, DeltaSet, RealizationCertificate};
use crate::error::Error;
use crate::graph::Graph;
use crate::labelings::Labeling;

/// Default cap on the searched order; 2^21 adjacency masks. Order 8 (2^28)
/// must be explicitly allowed.
pub const DEFAULT_ORDER_CAP: usize = 7;

/// Absolute ceiling of the enumerator.
pub const MAX_ORDER_CAP: usize = 8;

pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000_000;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Largest graph order to enumerate.
    pub max_order: usize,
    /// Permits `max_order = 8`; the cap is 7 otherwise.
    pub allow_order_eight: bool,
    /// Work budget covering enumerated masks and labeling-search nodes.
    pub node_budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_order: DEFAULT_ORDER_CAP,
            allow_order_eight: false,
            node_budget: DEFAULT_SEARCH_BUDGET,
        }
    }
}

impl SearchOptions {
    pub fn with_max_order(max_order: usize) -> Self {
        SearchOptions {
            max_order,
            ..SearchOptions::default()
        }
    }

    fn effective_cap(&self) -> Result<usize, Error> {
        if self.max_order > MAX_ORDER_CAP {
            return Err(Error::OrderCapExceeded {
                requested: self.max_order,
                cap: MAX_ORDER_CAP,
            });
        }
        if self.max_order > DEFAULT_ORDER_CAP && !self.allow_order_eight {
            return Err(Error::OrderCapExceeded {
                requested: self.max_order,
                cap: DEFAULT_ORDER_CAP,
            });
        }
        Ok(self.max_order)
    }
}

/// Searches for a graph of order at most `opts.max_order` that properly
/// realizes `sigma`. Returns the certificate with the smallest (order,
/// bitmask), or `None` once the whole space is exhausted. Budget exhaustion
/// is an error, never `None`.
pub fn delta_search(
    sigma: &DeltaSet,
    opts: &SearchOptions,
) -> Result<Option<RealizationCertificate>, Error> {
    let cap = opts.effective_cap()?;
    let mut budget = opts.node_budget;
    let found = enumerate(sigma, cap, 0, &mut budget, opts.node_budget)?;
    Ok(found.map(|(graph, labels)| {
        RealizationCertificate::certify(
            graph,
            Labeling::new(labels),
            sigma.clone(),
            Construction::Search,
            true,
        )
    }))
}

/// Result of `delta_freedom`: the smallest degree of freedom `r` for which a
/// bounded-order realization exists, a witness, and whether that `r` is
/// known to be minimal. Bounded search cannot rule out smaller `r` on larger
/// graphs, so only `r = 0` is conclusive.
#[derive(Clone, Debug)]
pub struct FreedomOutcome {
    pub freedom: u32,
    pub certificate: RealizationCertificate,
    pub conclusive: bool,
}

/// Finds the least `r` such that some graph within the order bound admits a
/// labeling with image `sigma` in which all but `r` nonzero values appear at
/// least twice (`r = |sigma|` always suffices via the all-distinct path, so
/// `None` only occurs when even that path exceeds the order bound).
pub fn delta_freedom(
    sigma: &DeltaSet,
    opts: &SearchOptions,
) -> Result<Option<FreedomOutcome>, Error> {
    let cap = opts.effective_cap()?;
    let mut budget = opts.node_budget;
    for r in 0..=sigma.nonzero_len() {
        if let Some((graph, labels)) = enumerate(sigma, cap, r, &mut budget, opts.node_budget)? {
            let require_proper = r == 0;
            let certificate = RealizationCertificate::certify(
                graph,
                Labeling::new(labels),
                sigma.clone(),
                Construction::Search,
                require_proper,
            );
            return Ok(Some(FreedomOutcome {
                freedom: r as u32,
                certificate,
                conclusive: r == 0,
            }));
        }
    }
    Ok(None)
}

/// Core enumeration: ascending order, ascending mask; per graph, a
/// connectivity check, the distance matrix, a distance-coverage prune, then
/// the labeling backtracker with `freedom` singleton allowances.
fn enumerate(
    sigma: &DeltaSet,
    cap: usize,
    freedom: usize,
    budget: &mut u64,
    initial_budget: u64,
) -> Result<Option<(Graph, Vec<u32>)>, Error> {
    let values = sigma.values();
    // With `freedom` singletons allowed, some label at least as large as the
    // (freedom + 1)-th largest nonzero value must still be realized as a
    // distance, so the diameter (at most twice any eccentricity) must reach
    // it.
    let nonzero: Vec<u32> = values.iter().copied().filter(|&k| k != 0).collect();
    let min_diameter = if freedom < nonzero.len() {
        nonzero[nonzero.len() - 1 - freedom]
    } else {
        0
    };
    for order in 1..=cap {
        let nbits = order * (order - 1) / 2;
        let pairs = pair_table(order);
        for mask in 0u32..(1u32 << nbits) {
            if *budget == 0 {
                return Err(Error::BudgetExceeded(initial_budget));
            }
            *budget -= 1;
            if (mask.count_ones() as usize) + 1 < order {
                continue;
            }
            let mut adj = [0u8; 8];
            for (bit, &(u, v)) in pairs.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
            let Some(ecc0) = connected_eccentricity(&adj, order) else {
                continue;
            };
            if 2 * ecc0 < min_diameter {
                continue;
            }
            let dist = distance_matrix(&adj, order);
            // Each value needing a mate needs a pair at that exact distance.
            let unpairable = values
                .iter()
                .filter(|&&k| k != 0 && !distance_present(&dist, order, k))
                .count();
            if unpairable > freedom {
                continue;
            }
            if let Some(labels) =
                label_search(order, &dist, values, freedom, budget, initial_budget)?
            {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(bit, _)| mask & (1 << bit) != 0)
                    .map(|(_, &e)| e);
                let graph = Graph::new(order, edges).expect("enumerated graph is valid");
                return Ok(Some((graph, labels[..order].to_vec())));
            }
        }
    }
    Ok(None)
}

fn pair_table(order: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(order * (order - 1) / 2);
    for u in 0..order {
        for v in u + 1..order {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Connectivity check from vertex 0; on success also reports vertex 0's
/// eccentricity (the number of frontier expansions).
fn connected_eccentricity(adj: &[u8; 8], order: usize) -> Option<u32> {
    let full = if order == 8 {
        0xffu8
    } else {
        (1u8 << order) - 1
    };
    let mut reach = 1u8;
    let mut rounds = 0;
    loop {
        let mut next = reach;
        let mut bits = reach;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[v];
        }
        if next == reach {
            return (reach == full).then_some(rounds);
        }
        rounds += 1;
        reach = next;
    }
}

fn distance_matrix(adj: &[u8; 8], order: usize) -> [[u8; 8]; 8] {
    let mut dist = [[u8::MAX; 8]; 8];
    #[allow(clippy::needless_range_loop)]
    for s in 0..order {
        dist[s][s] = 0;
        let mut seen = 1u8 << s;
        let mut frontier = 1u8 << s;
        let mut level = 0u8;
        while frontier != 0 {
            level += 1;
            let mut next = 0u8;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= adj[v];
            }
            next &= !seen;
            seen |= next;
            let mut bits = next;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                dist[s][v] = level;
            }
            frontier = next;
        }
    }
    dist
}

fn distance_present(dist: &[[u8; 8]; 8], order: usize, k: u32) -> bool {
    if k > 7 {
        return false;
    }
    let k = k as u8;
    (0..order).any(|i| (i + 1..order).any(|j| dist[i][j] == k))
}

/// Assigns a sigma value to each vertex in index order, pruning on the
/// distance condition, and accepts when the image is all of sigma with at
/// most `freedom` nonzero singletons.
struct LabelSearch<'a> {
    order: usize,
    dist: &'a [[u8; 8]; 8],
    values: &'a [u32],
    freedom: usize,
    assignment: [usize; 8],
    counts: [u8; 8],
    unused: usize,
    initial_budget: u64,
}

fn label_search(
    order: usize,
    dist: &[[u8; 8]; 8],
    values: &[u32],
    freedom: usize,
    budget: &mut u64,
    initial_budget: u64,
) -> Result<Option<[u32; 8]>, Error> {
    if values.len() > order {
        return Ok(None);
    }
    let mut search = LabelSearch {
        order,
        dist,
        values,
        freedom,
        assignment: [usize::MAX; 8],
        counts: [0; 8],
        unused: values.len(),
        initial_budget,
    };
    if search.recurse(0, budget)? {
        let mut labels = [0u32; 8];
        for v in 0..order {
            labels[v] = values[search.assignment[v]];
        }
        Ok(Some(labels))
    } else {
        Ok(None)
    }
}

impl LabelSearch<'_> {
    fn recurse(&mut self, v: usize, budget: &mut u64) -> Result<bool, Error> {
        if *budget == 0 {
            return Err(Error::BudgetExceeded(self.initial_budget));
        }
        *budget -= 1;
        if v == self.order {
            let singles = (0..self.values.len())
                .filter(|&slot| self.values[slot] != 0 && self.counts[slot] == 1)
                .count();
            return Ok(self.unused == 0 && singles <= self.freedom);
        }
        if self.unused > self.order - v {
            return Ok(false);
        }
        for slot in 0..self.values.len() {
            let k = self.values[slot];
            let compatible =
                (0..v).all(|u| self.assignment[u] != slot || u32::from(self.dist[u][v]) == k);
            if !compatible {
                continue;
            }
            if self.counts[slot] == 0 {
                self.unused -= 1;
            }
            self.counts[slot] += 1;
            self.assignment[v] = slot;
            if self.recurse(v + 1, budget)? {
                return Ok(true);
            }
            self.assignment[v] = usize::MAX;
            self.counts[slot] -= 1;
            if self.counts[slot] == 0 {
                self.unused += 1;
            }
        }
        Ok(false)
    }
}
