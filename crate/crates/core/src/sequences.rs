//! Skolem, hooked Skolem, extended Skolem, and Langford sequences:
//! existence, construction, verification, and the path-labeling view.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::family::FamilySpec;
use crate::graph::Graph;
use crate::labelings::Labeling;

/// Default backtracking budget; exceeding it is reported as a distinct
/// outcome, never conflated with a completed empty search.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceKind {
    Skolem,
    HookedSkolem,
    ExtendedSkolem,
    Langford,
}

impl SequenceKind {
    /// Hooked and extended variants carry a single zero, lengthening the
    /// sequence by one.
    pub fn has_zero(self) -> bool {
        matches!(
            self,
            SequenceKind::HookedSkolem | SequenceKind::ExtendedSkolem
        )
    }
}

/// A Skolem-type sequence. For the Skolem variants the defect is fixed to 1;
/// Langford sequences carry an arbitrary defect `d >= 1`.
///
/// Construction does not validate the entries; `verify_sequence` is the
/// authority on whether the contents actually form a sequence of the claimed
/// kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sequence {
    kind: SequenceKind,
    defect: u32,
    entries: Vec<u32>,
}

impl Sequence {
    pub fn new(kind: SequenceKind, defect: u32, entries: Vec<u32>) -> Result<Self, Error> {
        if defect == 0 {
            return Err(Error::InvalidParameter("defect must be at least 1".into()));
        }
        if defect != 1 && !matches!(kind, SequenceKind::Langford) {
            return Err(Error::InvalidParameter(
                "Skolem-type kinds have defect 1".into(),
            ));
        }
        Ok(Sequence {
            kind,
            defect,
            entries,
        })
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn defect(&self) -> u32 {
        self.defect
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The order m implied by the length and kind.
    pub fn order(&self) -> u32 {
        if self.kind.has_zero() {
            (self.entries.len().saturating_sub(1) / 2) as u32
        } else {
            (self.entries.len() / 2) as u32
        }
    }

    /// One-line comma-separated form, e.g. `4,2,3,2,4,3,1,1`.
    pub fn to_csv(&self) -> String {
        self.entries
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Outcome of the Langford existence test, with the deciding clause.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExistenceVerdict {
    pub exists: bool,
    pub reason: String,
}

/// Existence of a Langford sequence of order `m` and defect `d`:
/// `m >= 2d - 1`, and `m = 0, 1 (mod 4)` for odd `d`, `m = 0, 3 (mod 4)`
/// for even `d`. Defect 1 specializes to the Skolem parity rule.
pub fn langford_exists(m: u32, d: u32) -> ExistenceVerdict {
    if m == 0 || d == 0 {
        return ExistenceVerdict {
            exists: false,
            reason: "order and defect must be at least 1".into(),
        };
    }
    if u64::from(m) < 2 * u64::from(d) - 1 {
        return ExistenceVerdict {
            exists: false,
            reason: format!("m = {m} violates m >= 2d - 1 = {}", 2 * d - 1),
        };
    }
    let residues: [u32; 2] = if d % 2 == 1 { [0, 1] } else { [0, 3] };
    if residues.contains(&(m % 4)) {
        ExistenceVerdict {
            exists: true,
            reason: format!("m = {m} >= 2d - 1 and m = {} (mod 4)", m % 4),
        }
    } else {
        ExistenceVerdict {
            exists: false,
            reason: format!(
                "m = {} (mod 4) but defect {d} requires m = {} or {} (mod 4)",
                m % 4,
                residues[0],
                residues[1]
            ),
        }
    }
}

/// The explicit extended Skolem sequence of order `m`:
/// `(p, p-2, ..., 2, 0, 2, ..., p-2, p, q, q-2, ..., 3, 1, 1, 3, ..., q-2, q)`
/// where `p` and `q` are the largest even and odd numbers not exceeding `m`.
/// One exists for every `m >= 1`.
pub fn extended_skolem(m: u32) -> Sequence {
    assert!(m >= 1, "extended Skolem sequences need m >= 1");
    let p = if m.is_multiple_of(2) { m } else { m - 1 };
    let q = if m % 2 == 1 { m } else { m - 1 };
    let mut entries = Vec::with_capacity(2 * m as usize + 1);
    // Even block: p, p-2, ..., 2, 0, 2, ..., p; degenerates to (0) when m = 1.
    let mut v = p;
    while v > 0 {
        entries.push(v);
        v -= 2;
    }
    entries.push(0);
    let mut v = 2;
    while v <= p {
        entries.push(v);
        v += 2;
    }
    // Odd block: q, q-2, ..., 3, 1, 1, 3, ..., q.
    let mut v = q;
    while v >= 1 {
        entries.push(v);
        if v == 1 {
            break;
        }
        v -= 2;
    }
    let mut v = 1;
    while v <= q {
        entries.push(v);
        v += 2;
    }
    Sequence {
        kind: SequenceKind::ExtendedSkolem,
        defect: 1,
        entries,
    }
}

/// Slot-major backtracking over pair placements. At the leftmost free slot
/// every unplaced value is tried in ascending order, so the first witness is
/// the lexicographically least sequence. Values whose remaining slot pair is
/// unique are placed by propagation before branching; since every completion
/// of the node contains such a placement, the enumeration order of complete
/// sequences is unchanged. `pinned_zero` reserves one slot for the zero of a
/// hooked sequence.
///
/// The exhaustive entry point instead branches the largest value at the root
/// and restricts it to the left half of its range: reversal symmetry keeps
/// that complete for existence questions (though the witness is no longer
/// the lex-least), and rooting the most constrained value prunes hardest.
macro_rules! pair_search_impl {
    ($name:ident, $mask:ty) => {
        struct $name {
            len: usize,
            defect: u32,
            free: $mask,
            remaining: u64,
            slots: Vec<u32>,
            budget: u64,
            initial_budget: u64,
        }

        impl $name {
            fn new(m: u32, d: u32, pinned_zero: Option<usize>, budget: u64) -> Self {
                let len = 2 * m as usize + usize::from(pinned_zero.is_some());
                let mut free: $mask = if len == <$mask>::BITS as usize {
                    <$mask>::MAX
                } else {
                    ((1 as $mask) << len) - 1
                };
                let mut slots = vec![u32::MAX; len];
                if let Some(z) = pinned_zero {
                    slots[z] = 0;
                    free &= !((1 as $mask) << z);
                }
                $name {
                    len,
                    defect: d,
                    free,
                    remaining: if m == 64 { u64::MAX } else { (1u64 << m) - 1 },
                    slots,
                    budget,
                    initial_budget: budget,
                }
            }

            fn run_lex(
                m: u32,
                d: u32,
                pinned_zero: Option<usize>,
                budget: u64,
            ) -> Result<Option<Vec<u32>>, Error> {
                let mut search = Self::new(m, d, pinned_zero, budget);
                if search.recurse()? {
                    Ok(Some(search.slots))
                } else {
                    Ok(None)
                }
            }

            fn run_exhaustive(m: u32, d: u32, budget: u64) -> Result<Option<Vec<u32>>, Error> {
                let mut search = Self::new(m, d, None, budget);
                let top = m - 1;
                let value = d + top;
                if value as usize >= search.len {
                    // The largest value cannot fit two positions apart.
                    return Ok(None);
                }
                for slot in 0..=(search.len - 1 - value as usize) / 2 {
                    if search.descend(top, value, slot)? {
                        return Ok(Some(search.slots));
                    }
                }
                Ok(None)
            }

            fn recurse(&mut self) -> Result<bool, Error> {
                if self.budget == 0 {
                    return Err(Error::BudgetExceeded(self.initial_budget));
                }
                self.budget -= 1;
                if self.free == 0 {
                    return Ok(true);
                }
                // Feasibility sweep doubling as unit propagation: a value
                // with no slot pair left kills the node, one with a unique
                // pair is forced.
                let mut rem = self.remaining;
                while rem != 0 {
                    let t = rem.trailing_zeros();
                    rem &= rem - 1;
                    let value = self.defect + t;
                    let pairs = self.free & (self.free >> value);
                    if pairs == 0 {
                        return Ok(false);
                    }
                    if pairs & (pairs - 1) == 0 {
                        let slot = pairs.trailing_zeros() as usize;
                        return self.descend(t, value, slot);
                    }
                }
                let slot = self.free.trailing_zeros() as usize;
                let mut cand = self.remaining;
                while cand != 0 {
                    let t = cand.trailing_zeros();
                    cand &= cand - 1;
                    let value = self.defect + t;
                    let mate = slot + value as usize;
                    if mate >= self.len || self.free & ((1 as $mask) << mate) == 0 {
                        continue;
                    }
                    if self.descend(t, value, slot)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }

            #[inline]
            fn descend(&mut self, t: u32, value: u32, slot: usize) -> Result<bool, Error> {
                let mate = slot + value as usize;
                let mask = ((1 as $mask) << slot) | ((1 as $mask) << mate);
                self.free &= !mask;
                self.remaining &= !(1u64 << t);
                self.slots[slot] = value;
                self.slots[mate] = value;
                let found = self.recurse()?;
                if !found {
                    self.free |= mask;
                    self.remaining |= 1u64 << t;
                    self.slots[slot] = u32::MAX;
                    self.slots[mate] = u32::MAX;
                }
                Ok(found)
            }
        }
    };
}

pair_search_impl!(PairSearch64, u64);
pair_search_impl!(PairSearch128, u128);

fn search_first(
    m: u32,
    d: u32,
    pinned_zero: Option<usize>,
    exhaustive: bool,
    budget: u64,
) -> Result<Option<Vec<u32>>, Error> {
    let len = 2 * m as usize + usize::from(pinned_zero.is_some());
    if m > 64 || len > 128 {
        return Err(Error::InvalidParameter(
            "sequence search supports order at most 64".into(),
        ));
    }
    match (len <= 64, exhaustive) {
        (true, false) => PairSearch64::run_lex(m, d, pinned_zero, budget),
        (true, true) => PairSearch64::run_exhaustive(m, d, budget),
        (false, false) => PairSearch128::run_lex(m, d, pinned_zero, budget),
        (false, true) => PairSearch128::run_exhaustive(m, d, budget),
    }
}

/// The explicit Langford sequence of defect `d` and the least feasible
/// order `m = 2d - 1` (both parity clauses admit `2d - 1`, so this is the
/// smallest order for every defect).
///
/// Left positions `1..=m` carry the first occurrences: position `2j - 1`
/// holds `3d - 1 - j` and position `2j` holds `2d - 1 - j` for
/// `j = 1..=d-1`, position `m` holds `m`. The induced displacements of the
/// mate permutation cover `-(d-1)..=(d-1)` once each, so the pairs use
/// every value in `[d, 3d - 2]` exactly once and fill the right half.
pub fn tight_langford(d: u32) -> Sequence {
    assert!(d >= 1, "defect must be at least 1");
    let m = 2 * d - 1;
    let len = 2 * m as usize;
    let mut entries = vec![0u32; len];
    let mut place = |slot_1idx: u32, value: u32| {
        entries[slot_1idx as usize - 1] = value;
        entries[(slot_1idx + value) as usize - 1] = value;
    };
    for j in 1..d {
        place(2 * j - 1, 3 * d - 1 - j);
        place(2 * j, 2 * d - 1 - j);
    }
    place(m, m);
    Sequence {
        kind: SequenceKind::Langford,
        defect: d,
        entries,
    }
}

/// Finds the lexicographically least Langford sequence of order `m` and
/// defect `d`, or `None` when the existence theorem rules one out (no search
/// is run in that case). Budget exhaustion is a distinct error.
pub fn generate_langford(m: u32, d: u32, node_budget: u64) -> Result<Option<Sequence>, Error> {
    check_order_defect(m, d)?;
    if !langford_exists(m, d).exists {
        return Ok(None);
    }
    let found = search_first(m, d, None, false, node_budget)?;
    Ok(found.map(|entries| Sequence {
        kind: SequenceKind::Langford,
        defect: d,
        entries,
    }))
}

/// Pure exhaustive search for a Langford sequence, with no appeal to the
/// existence theorem. `None` means the entire (symmetry-halved) placement
/// space was exhausted. Used to cross-validate the theorem.
pub fn langford_exhaustive(m: u32, d: u32, node_budget: u64) -> Result<Option<Sequence>, Error> {
    check_order_defect(m, d)?;
    let found = search_first(m, d, None, true, node_budget)?;
    Ok(found.map(|entries| Sequence {
        kind: SequenceKind::Langford,
        defect: d,
        entries,
    }))
}

/// Searches for a hooked Skolem sequence of order `m`: length `2m + 1` with
/// the zero fixed at the second-to-last position. `None` means the search
/// space is exhausted; no closed-form existence test is applied.
pub fn generate_hooked_skolem(m: u32, node_budget: u64) -> Result<Option<Sequence>, Error> {
    check_order_defect(m, 1)?;
    let pinned = 2 * m as usize - 1;
    let found = search_first(m, 1, Some(pinned), false, node_budget)?;
    Ok(found.map(|entries| Sequence {
        kind: SequenceKind::HookedSkolem,
        defect: 1,
        entries,
    }))
}

fn check_order_defect(m: u32, d: u32) -> Result<(), Error> {
    if m == 0 {
        return Err(Error::InvalidParameter("order must be at least 1".into()));
    }
    if d == 0 {
        return Err(Error::InvalidParameter("defect must be at least 1".into()));
    }
    Ok(())
}

/// Verdict of `verify_sequence`, with the first violated clause when invalid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceReport {
    pub valid: bool,
    pub violation: Option<String>,
}

impl SequenceReport {
    fn ok() -> Self {
        SequenceReport {
            valid: true,
            violation: None,
        }
    }

    fn fail(msg: String) -> Self {
        SequenceReport {
            valid: false,
            violation: Some(msg),
        }
    }
}

/// Checks the defining conditions of the sequence's kind: shape (length and
/// zero placement), the value multiset, and the gap condition that the two
/// occurrences of `k` sit exactly `k` apart. Shares no placement code with
/// the generators.
pub fn verify_sequence(s: &Sequence) -> SequenceReport {
    let entries = s.entries();
    let len = entries.len();
    let d = s.defect();

    if s.defect == 0 || (s.defect != 1 && !matches!(s.kind, SequenceKind::Langford)) {
        return SequenceReport::fail(format!("defect {d} is invalid for {:?}", s.kind));
    }

    let m = if s.kind.has_zero() {
        if len < 3 || len.is_multiple_of(2) {
            return SequenceReport::fail(format!(
                "length {len} is not of the form 2m + 1 with m >= 1"
            ));
        }
        let zeros: Vec<usize> = (0..len).filter(|&i| entries[i] == 0).collect();
        if zeros.len() != 1 {
            return SequenceReport::fail(format!(
                "expected exactly one zero, found {}",
                zeros.len()
            ));
        }
        if s.kind == SequenceKind::HookedSkolem && zeros[0] != len - 2 {
            return SequenceReport::fail(format!(
                "zero at index {} but a hooked sequence puts it second to last (index {})",
                zeros[0],
                len - 2
            ));
        }
        ((len - 1) / 2) as u32
    } else {
        if len < 2 || len % 2 == 1 {
            return SequenceReport::fail(format!("length {len} is not of the form 2m with m >= 1"));
        }
        if let Some(i) = (0..len).find(|&i| entries[i] == 0) {
            return SequenceReport::fail(format!("unexpected zero at index {i}"));
        }
        (len / 2) as u32
    };

    for k in d..d + m {
        let positions: Vec<usize> = (0..len).filter(|&i| entries[i] == k).collect();
        if positions.len() != 2 {
            return SequenceReport::fail(format!(
                "value {k} occurs {} times, expected exactly 2",
                positions.len()
            ));
        }
        let gap = (positions[1] - positions[0]) as u32;
        if gap != k {
            return SequenceReport::fail(format!(
                "value {k} occurs at indices {} and {} (gap {gap}, need {k})",
                positions[0], positions[1]
            ));
        }
    }
    SequenceReport::ok()
}

/// Identifies a verified sequence with a labeling of the path of the same
/// order: vertex i carries `entries[i]`.
pub fn sequence_to_path_labeling(s: &Sequence) -> Result<(Graph, Labeling), Error> {
    let report = verify_sequence(s);
    if !report.valid {
        return Err(Error::InvalidSequence(report.violation.unwrap_or_default()));
    }
    let graph = FamilySpec::Path { n: s.len() }.generate()?;
    Ok((graph, Labeling::new(s.entries().to_vec())))
}
