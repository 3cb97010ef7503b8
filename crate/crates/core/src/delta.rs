//! Realization of distance sets: the regular and dense constructions, the
//! caterpillar induction, gap-set concatenation, and the necessary-condition
//! filter. Bounded exhaustive search lives in [`search`].

mod search;

pub use search::{
    DEFAULT_ORDER_CAP, DEFAULT_SEARCH_BUDGET, FreedomOutcome, MAX_ORDER_CAP, SearchOptions,
    delta_freedom, delta_search,
};

use serde::{Deserialize, Serialize, Serializer};

use crate::error::Error;
use crate::family::FamilySpec;
use crate::graph::Graph;
use crate::labelings::{LabelSetKind, Labeling, verify_labeling};
use crate::sequences::{langford_exists, tight_langford};

/// A strictly increasing nonempty set of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct DeltaSet(Vec<u32>);

impl DeltaSet {
    pub fn new(values: Vec<u32>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::InvalidDeltaSet("set must be nonempty".into()));
        }
        if !values.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidDeltaSet(format!(
                "{values:?} is not strictly increasing"
            )));
        }
        Ok(DeltaSet(values))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> u32 {
        *self.0.last().unwrap()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Count of nonzero members.
    pub fn nonzero_len(&self) -> usize {
        self.0.iter().filter(|&&v| v != 0).count()
    }
}

impl TryFrom<Vec<u32>> for DeltaSet {
    type Error = Error;

    fn try_from(values: Vec<u32>) -> Result<Self, Error> {
        DeltaSet::new(values)
    }
}

impl From<DeltaSet> for Vec<u32> {
    fn from(s: DeltaSet) -> Vec<u32> {
        s.0
    }
}

/// A nondecreasing value multiset: each distinct value with its multiplicity.
/// A zero, when present, has multiplicity exactly one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaSequence {
    values: Vec<(u32, usize)>,
}

impl DeltaSequence {
    pub fn new(values: Vec<(u32, usize)>) -> Result<Self, Error> {
        if !values.windows(2).all(|w| w[0].0 < w[1].0) {
            return Err(Error::InvalidDeltaSet(
                "multiset values must be strictly increasing".into(),
            ));
        }
        if values.iter().any(|&(_, count)| count == 0) {
            return Err(Error::InvalidDeltaSet(
                "multiplicities must be positive".into(),
            ));
        }
        if values.iter().any(|&(v, count)| v == 0 && count != 1) {
            return Err(Error::InvalidDeltaSet("zero may appear only once".into()));
        }
        Ok(DeltaSequence { values })
    }

    pub fn from_labeling(f: &Labeling) -> Result<Self, Error> {
        let mut sorted = f.labels().to_vec();
        sorted.sort_unstable();
        let mut values: Vec<(u32, usize)> = Vec::new();
        for v in sorted {
            match values.last_mut() {
                Some((last, count)) if *last == v => *count += 1,
                _ => values.push((v, 1)),
            }
        }
        DeltaSequence::new(values)
    }

    pub fn pairs(&self) -> &[(u32, usize)] {
        &self.values
    }

    pub fn value_set(&self) -> DeltaSet {
        DeltaSet(self.values.iter().map(|&(v, _)| v).collect())
    }
}

/// Which construction produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    RegularLr,
    DenseDegree2,
    Caterpillar,
    GapConcatenation,
    Search,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::RegularLr => "regular_lr",
            Construction::DenseDegree2 => "dense_degree2",
            Construction::Caterpillar => "caterpillar",
            Construction::GapConcatenation => "gap_concatenation",
            Construction::Search => "search",
        }
    }
}

/// A graph, a labeling of it, and the set it realizes. Certificates are only
/// issued after the independent verifier accepts the labeling; when built by
/// the proper (zero-freedom) routes the size lower bound
/// `|sigma| >= ceil((max + 1) / 2)` is asserted as well.
#[derive(Clone, Debug)]
pub struct RealizationCertificate {
    pub graph: Graph,
    pub labeling: Labeling,
    pub sigma: DeltaSet,
    pub regular_degree: Option<u32>,
    pub construction: Construction,
}

impl RealizationCertificate {
    /// Verifies and wraps a proper realization. Panics on verification
    /// failure: every construction in this module is expected to produce
    /// only certified output.
    fn certify_proper(
        graph: Graph,
        labeling: Labeling,
        sigma: DeltaSet,
        construction: Construction,
    ) -> Self {
        Self::certify(graph, labeling, sigma, construction, true)
    }

    fn certify(
        graph: Graph,
        labeling: Labeling,
        sigma: DeltaSet,
        construction: Construction,
        require_proper: bool,
    ) -> Self {
        let kind = LabelSetKind::Set(sigma.clone());
        let report = verify_labeling(&graph, &labeling, &kind)
            .expect("certificate labeling matches its graph");
        assert!(
            report.valid,
            "{} construction produced an invalid labeling: {:?}",
            construction.name(),
            report.first_violation
        );
        if require_proper {
            assert!(
                report.proper,
                "{} construction produced a non-proper labeling",
                construction.name()
            );
            let bound = (sigma.max() as usize + 2) / 2;
            assert!(
                sigma.len() >= bound,
                "realized set {:?} violates the size lower bound {bound}",
                sigma.values()
            );
        }
        RealizationCertificate {
            graph,
            labeling,
            sigma,
            regular_degree: report.regular_degree,
            construction,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn to_dot(&self) -> String {
        self.graph.to_dot(Some(&self.labeling))
    }
}

#[derive(Serialize)]
struct CertificateRepr<'a> {
    graph: &'a Graph,
    labels: &'a [u32],
    sigma: &'a [u32],
    construction: &'a str,
    regular_degree: Option<u32>,
}

impl Serialize for RealizationCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CertificateRepr {
            graph: &self.graph,
            labels: self.labeling.labels(),
            sigma: self.sigma.values(),
            construction: self.construction.name(),
            regular_degree: self.regular_degree,
        }
        .serialize(serializer)
    }
}

/// A graph of order exactly `l * r` with an `r`-regular `l`-labeling.
///
/// For odd `l` the graph is K_r with `2r` attached paths of `(l-1)/2`
/// vertices: `r + 1` at a distinguished vertex and one at each other vertex.
/// The clique is labeled 1, `r` of the paths carry 3-5-...-l outward and the
/// `r` paths at the distinguished vertex carry 2-4-...-(l-1). For even `l`
/// the `l-1` construction gains one leaf labeled `l` at the end of every
/// even path (at the distinguished vertex itself when those paths are
/// empty, i.e. l = 2).
pub fn realize_regular(l: u32, r: u32) -> Result<RealizationCertificate, Error> {
    if l == 0 || r == 0 {
        return Err(Error::InvalidParameter(
            "realize_regular needs l, r >= 1".into(),
        ));
    }
    let odd_l = if l % 2 == 1 { l } else { l - 1 };
    let r_us = r as usize;
    let depth = ((odd_l - 1) / 2) as usize;

    let clique = r_us;
    let mut edges: Vec<(usize, usize)> = (0..clique)
        .flat_map(|u| (u + 1..clique).map(move |v| (u, v)))
        .collect();
    let mut labels = vec![1u32; clique];
    let mut next = clique;
    let mut even_path_ends = Vec::with_capacity(r_us);

    // Even paths: r of them, all at vertex 0, labels 2, 4, ..., l - 1.
    for _ in 0..r_us {
        let mut attach = 0;
        for step in 0..depth {
            edges.push((attach, next));
            labels.push(2 * (step as u32 + 1));
            attach = next;
            next += 1;
        }
        even_path_ends.push(attach);
    }
    // Odd paths: one more at vertex 0, one at each of 1..r, labels 3, 5, ..., l.
    for p in 0..r_us {
        let mut attach = if p == 0 { 0 } else { p };
        for step in 0..depth {
            edges.push((attach, next));
            labels.push(2 * (step as u32) + 3);
            attach = next;
            next += 1;
        }
    }
    if l.is_multiple_of(2) {
        for &end in &even_path_ends {
            edges.push((end, next));
            labels.push(l);
            next += 1;
        }
    }

    let graph = Graph::new(next, edges)?;
    debug_assert_eq!(graph.order(), (l * r) as usize);
    let sigma = DeltaSet::new((1..=l).collect())?;
    Ok(RealizationCertificate::certify(
        graph,
        Labeling::new(labels),
        sigma,
        Construction::RegularLr,
        r >= 2,
    ))
}

/// A graph of order `2l` and size `(l+2)(l+1)/2 - 2` with a 2-regular
/// `l`-labeling: K_{l+1} and P_l sharing one vertex, the path labeled
/// 1-2-...-l outward from the shared vertex and the clique labeled
/// 1,1,2,...,l.
pub fn realize_dense_degree2(l: u32) -> Result<RealizationCertificate, Error> {
    if l == 0 {
        return Err(Error::InvalidParameter(
            "realize_dense_degree2 needs l >= 1".into(),
        ));
    }
    let l_us = l as usize;
    // Path vertices 0..l (vertex 0 shared with the clique), labels 1..l.
    let mut edges: Vec<(usize, usize)> = (1..l_us).map(|i| (i - 1, i)).collect();
    let mut labels: Vec<u32> = (1..=l).collect();
    // Clique vertices: 0 plus l fresh ones, labeled 1, 2, ..., l.
    let clique: Vec<usize> = std::iter::once(0).chain(l_us..2 * l_us).collect();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            edges.push((u, v));
        }
    }
    labels.extend(1..=l);

    let graph = Graph::new(2 * l_us, edges)?;
    debug_assert_eq!(graph.size(), (l_us + 2) * (l_us + 1) / 2 - 2);
    let sigma = DeltaSet::new((1..=l).collect())?;
    Ok(RealizationCertificate::certify_proper(
        graph,
        Labeling::new(labels),
        sigma,
        Construction::DenseDegree2,
    ))
}

/// Realizes a set `{1 = s_1 < s_2 < ... < s_l}` whose consecutive gaps are
/// at most 2 as a caterpillar of order `2l` carrying a 2-regular labeling
/// with the top label on exactly two leaves.
///
/// Induction on the set: P_2 labeled 1,1 starts it; a gap of 2 appends a new
/// leaf under each current top-label leaf, and a gap of 1 appends one leaf
/// under the neighbor of the first top leaf and one under the second.
pub fn realize_caterpillar(sigma: &DeltaSet) -> Result<RealizationCertificate, Error> {
    let values = sigma.values();
    if values[0] != 1 {
        return Err(Error::InvalidParameter(
            "caterpillar realization needs the set to start at 1".into(),
        ));
    }
    if let Some(w) = values.windows(2).find(|w| w[1] - w[0] > 2) {
        return Err(Error::InvalidParameter(format!(
            "caterpillar realization needs gaps of at most 2, found {} to {}",
            w[0], w[1]
        )));
    }

    let mut edges: Vec<(usize, usize)> = vec![(0, 1)];
    let mut labels: Vec<u32> = vec![1, 1];
    let mut adjacency: Vec<Vec<usize>> = vec![vec![1], vec![0]];
    let (mut top_a, mut top_b) = (0usize, 1usize);

    for w in values.windows(2) {
        let (value, gap) = (w[1], w[1] - w[0]);
        let v1 = labels.len();
        let v2 = v1 + 1;
        let (host_a, host_b) = if gap == 2 {
            (top_a, top_b)
        } else {
            (adjacency[top_a][0], top_b)
        };
        edges.push((host_a, v1));
        edges.push((host_b, v2));
        adjacency[host_a].push(v1);
        adjacency[host_b].push(v2);
        adjacency.push(vec![host_a]);
        adjacency.push(vec![host_b]);
        labels.push(value);
        labels.push(value);
        (top_a, top_b) = (v1, v2);
    }

    let graph = Graph::new(labels.len(), edges)?;
    Ok(RealizationCertificate::certify_proper(
        graph,
        Labeling::new(labels),
        sigma.clone(),
        Construction::Caterpillar,
    ))
}

/// Realizes a set whose consecutive gaps include the prescribed values
/// `k_1 < ... < k_n`: Langford blocks are concatenated onto a path, each of
/// the smallest order the existence theorem allows, the first with defect
/// `d_1` and each later one with defect `max(previous block) + k_i`. The
/// least feasible order is `2d - 1` for every defect, so the blocks are the
/// explicit tight sequences and no search is involved.
pub fn realize_gap_set(gaps: &[u32], d_1: u32) -> Result<RealizationCertificate, Error> {
    if d_1 == 0 {
        return Err(Error::InvalidParameter("d_1 must be at least 1".into()));
    }
    if !gaps.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidParameter(
            "gap values must be strictly increasing".into(),
        ));
    }
    if gaps.first().is_some_and(|&k| k == 0) {
        return Err(Error::InvalidParameter(
            "gap values must be positive".into(),
        ));
    }

    let mut entries: Vec<u32> = Vec::new();
    let mut sigma: Vec<u32> = Vec::new();
    let mut defect = d_1;
    for step in 0..=gaps.len() {
        let m = smallest_feasible_order(defect);
        debug_assert_eq!(m, 2 * defect - 1);
        let block = tight_langford(defect);
        entries.extend_from_slice(block.entries());
        sigma.extend(defect..defect + m);
        if step < gaps.len() {
            defect = defect + m - 1 + gaps[step];
        }
    }

    let graph = FamilySpec::Path { n: entries.len() }.generate()?;
    let sigma = DeltaSet::new(sigma)?;
    // The final block has at least two labels, so the last prescribed gap
    // sits strictly before the end of the set.
    debug_assert!(sigma.len() >= 2 || gaps.is_empty());
    Ok(RealizationCertificate::certify_proper(
        graph,
        Labeling::new(entries),
        sigma,
        Construction::GapConcatenation,
    ))
}

/// The least order for which a Langford sequence of the given defect
/// exists.
pub fn smallest_feasible_order(defect: u32) -> u32 {
    let mut m = (2 * defect - 1).max(1);
    while !langford_exists(m, defect).exists {
        m += 1;
    }
    m
}

/// Verdict of the necessary-condition filter for candidate sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterVerdict {
    RejectedLowerBound,
    RejectedTwoN,
    Passes,
}

impl FilterVerdict {
    pub fn name(self) -> &'static str {
        match self {
            FilterVerdict::RejectedLowerBound => "rejected_lower_bound",
            FilterVerdict::RejectedTwoN => "rejected_two_n",
            FilterVerdict::Passes => "passes",
        }
    }
}

/// Rejects sets of the form `{2, n}` (including the degenerate `{2}`: any
/// connected graph on two or more vertices has an adjacent equal-labeled
/// pair) and sets smaller than `ceil((max + 1) / 2)`. Passing is necessary,
/// not sufficient.
pub fn delta_filter(sigma: &DeltaSet) -> FilterVerdict {
    let values = sigma.values();
    let two_n = values == [2] || (values.len() == 2 && values[0] == 2);
    if two_n {
        return FilterVerdict::RejectedTwoN;
    }
    let bound = (sigma.max() as usize + 2) / 2;
    if sigma.len() < bound {
        return FilterVerdict::RejectedLowerBound;
    }
    FilterVerdict::Passes
}
