//! Distance labelings: verification against a length or a label set, and the
//! proper/regular classification.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::delta::DeltaSet;
use crate::error::Error;
use crate::graph::Graph;

/// A vertex-indexed assignment of nonnegative integer labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    labels: Vec<u32>,
}

impl Labeling {
    pub fn new(labels: Vec<u32>) -> Self {
        Labeling { labels }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn max_label(&self) -> u32 {
        self.labels.iter().copied().max().unwrap_or(0)
    }
}

/// What the label image must be: `Length(l)` demands exactly `[0,l]` or
/// `[1,l]`; `Set(J)` demands exactly `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LabelSetKind {
    Length(u32),
    Set(DeltaSet),
}

/// Verification output: validity, the exact label image, and the
/// proper/regular classification. `regular_degree` is only reported for
/// proper labelings, so `regular_degree.is_some()` implies `proper`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub surjective_onto: Vec<u32>,
    pub proper: bool,
    pub regular_degree: Option<u32>,
    pub first_violation: Option<String>,
}

/// Checks that (i) the image of `f` is exactly the required set and (ii)
/// every pair of vertices sharing label `k` lies at distance exactly `k`.
/// A consequence of (ii) is that label 0 can occur at most once. The first
/// violation reported for (ii) is the lexicographically least offending
/// vertex pair.
pub fn verify_labeling(
    g: &Graph,
    f: &Labeling,
    kind: &LabelSetKind,
) -> Result<VerificationReport, Error> {
    if f.len() != g.order() {
        return Err(Error::LengthMismatch {
            labels: f.len(),
            order: g.order(),
        });
    }
    if let LabelSetKind::Length(0) = kind {
        return Err(Error::InvalidParameter(
            "labeling length must be at least 1".into(),
        ));
    }

    let mut classes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (v, &k) in f.labels().iter().enumerate() {
        classes.entry(k).or_default().push(v);
    }
    let image: Vec<u32> = classes.keys().copied().collect();

    let image_violation = match kind {
        LabelSetKind::Length(l) => {
            let from_zero: Vec<u32> = (0..=*l).collect();
            let from_one: Vec<u32> = (1..=*l).collect();
            if image == from_zero || image == from_one {
                None
            } else {
                Some(format!("image {image:?} is neither [0,{l}] nor [1,{l}]"))
            }
        }
        LabelSetKind::Set(j) => {
            if image == j.values() {
                None
            } else {
                Some(format!(
                    "image {image:?} differs from the required set {:?}",
                    j.values()
                ))
            }
        }
    };

    let dm = g.distances();
    let mut pair_violation = None;
    'outer: for i in 0..g.order() {
        for j in i + 1..g.order() {
            let k = f.get(i);
            if k == f.get(j) && dm.get(i, j) != k {
                pair_violation = Some(format!(
                    "vertices {i} and {j} share label {k} but are at distance {}",
                    dm.get(i, j)
                ));
                break 'outer;
            }
        }
    }

    let proper = classes.iter().all(|(&k, vs)| k == 0 || vs.len() >= 2);
    let nonzero_counts: Vec<usize> = classes
        .iter()
        .filter(|(k, _)| **k != 0)
        .map(|(_, vs)| vs.len())
        .collect();
    let regular_degree = if proper && !nonzero_counts.is_empty() {
        let r = nonzero_counts[0];
        nonzero_counts.iter().all(|&c| c == r).then_some(r as u32)
    } else {
        None
    };

    let first_violation = image_violation.or(pair_violation);
    Ok(VerificationReport {
        valid: first_violation.is_none(),
        surjective_onto: image,
        proper,
        regular_degree,
        first_violation,
    })
}

/// For a valid proper labeling the largest used label is bounded by the
/// diameter, since it must be realized as a distance. Errors when the
/// labeling is not valid and proper for `kind`.
pub fn proper_diameter_check(g: &Graph, f: &Labeling, kind: &LabelSetKind) -> Result<bool, Error> {
    let report = verify_labeling(g, f, kind)?;
    if !report.valid || !report.proper {
        return Err(Error::InvalidParameter(
            "proper_diameter_check needs a valid proper labeling".into(),
        ));
    }
    Ok(f.max_label() <= g.distances().diameter())
}
