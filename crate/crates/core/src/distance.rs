//! Sub-barcode distance and bottleneck distance.
//!
//! Both distances take their value in a finite candidate set, and
//! feasibility is monotone in the shift, so each is found by binary search
//! over the sorted candidates.

use std::sync::Arc;

use crate::barcode::{Bar, Barcode};
use crate::bipartite::maximum_matching;
use crate::matcher::{max_subbarcode_matching, shrink};
use crate::matching::Matching;

/// A distance value with a matching that certifies it.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceResult {
    pub value: f64,
    /// For the sub-barcode distance: a total sub-barcode matching from the
    /// shrunk barcode into `b`. For the bottleneck distance: the
    /// off-diagonal pairs of an optimal matching.
    pub witness: Matching,
}

fn sorted_candidates(mut values: Vec<f64>) -> Vec<f64> {
    values.sort_by(f64::total_cmp);
    values.dedup();
    values
}

/// Index of the first feasible candidate, or `None` if the last one fails.
fn first_feasible<F>(candidates: &[f64], mut feasible: F) -> Option<usize>
where
    F: FnMut(f64) -> bool,
{
    let last = *candidates.last()?;
    if !feasible(last) {
        return None;
    }
    let (mut lo, mut hi) = (0, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Some(lo)
}

fn subbarcode_candidates(a: &Barcode, b: &Barcode) -> Vec<f64> {
    let mut values = vec![0.0];
    for alpha in a {
        if !alpha.interval.is_infinite() {
            values.push(alpha.interval.length() / 2.0);
        }
        for beta in b.in_dim(alpha.dim) {
            values.push((beta.birth() - alpha.birth()).max(0.0));
            if !alpha.interval.is_infinite() {
                // an infinite beta death gives 0, already present
                values.push((alpha.death() - beta.death()).max(0.0));
            }
        }
    }
    sorted_candidates(values)
}

/// Smallest `delta >= 0` such that `shrink(a, delta) ⊑ b`.
///
/// The value is `+inf` when some dimension has more infinite bars in `a`
/// than in `b`; the witness is then a maximum matching at the largest
/// candidate shift.
pub fn subbarcode_distance(a: &Barcode, b: &Barcode) -> DistanceResult {
    let b = Arc::new(b.clone());
    let candidates = subbarcode_candidates(a, &b);
    let matching_at = |delta: f64| {
        let shrunk = Arc::new(shrink(a, delta).expect("candidates are non-negative"));
        max_subbarcode_matching(&shrunk, &b)
    };
    match first_feasible(&candidates, |delta| matching_at(delta).is_total_on_left()) {
        Some(i) => DistanceResult {
            value: candidates[i],
            witness: matching_at(candidates[i]),
        },
        None => DistanceResult {
            value: f64::INFINITY,
            witness: matching_at(*candidates.last().expect("0 is always a candidate")),
        },
    }
}

fn infinite_counts_agree(a: &Barcode, b: &Barcode) -> bool {
    let count = |x: &Barcode| {
        let mut dims: Vec<usize> = x
            .iter()
            .filter(|bar| bar.interval.is_infinite())
            .map(|bar| bar.dim)
            .collect();
        dims.sort_unstable();
        dims
    };
    count(a) == count(b)
}

fn pair_cost(x: &Bar, y: &Bar) -> Option<f64> {
    if x.dim != y.dim || x.interval.is_infinite() != y.interval.is_infinite() {
        return None;
    }
    let births = (x.birth() - y.birth()).abs();
    if x.interval.is_infinite() {
        Some(births)
    } else {
        Some(births.max((x.death() - y.death()).abs()))
    }
}

fn half_length(x: &Bar) -> Option<f64> {
    (!x.interval.is_infinite()).then(|| x.interval.length() / 2.0)
}

fn bottleneck_candidates(a: &Barcode, b: &Barcode) -> Vec<f64> {
    let mut values = vec![0.0];
    values.extend(a.iter().chain(b.iter()).filter_map(half_length));
    for x in a {
        for y in b.in_dim(x.dim) {
            if x.interval.is_infinite() == y.interval.is_infinite() {
                values.push((x.birth() - y.birth()).abs());
                if !x.interval.is_infinite() {
                    values.push((x.death() - y.death()).abs());
                }
            }
        }
    }
    sorted_candidates(values)
}

/// Perfect matching of `a ∪ diag(b)` against `b ∪ diag(a)` at shift `delta`,
/// returned as the `a`-to-`b` pairs, or `None` if none exists.
fn bottleneck_pairs(a: &Barcode, b: &Barcode, delta: f64) -> Option<Vec<(usize, usize)>> {
    let (na, nb) = (a.len(), b.len());
    let a_bars = a.bars();
    let b_bars = b.bars();
    let mut adj: Vec<Vec<usize>> = Vec::with_capacity(na + nb);
    for (i, x) in a_bars.iter().enumerate() {
        let mut row: Vec<usize> = b_bars
            .iter()
            .enumerate()
            // A disjoint pair within delta has both half-lengths within delta,
            // so it can be replaced by two diagonal moves.
            .filter(|(_, y)| {
                pair_cost(x, y).is_some_and(|c| c <= delta) && x.interval.intersects(&y.interval)
            })
            .map(|(j, _)| j)
            .collect();
        if half_length(x).is_some_and(|h| h <= delta) {
            row.push(nb + i);
        }
        adj.push(row);
    }
    for (j, y) in b_bars.iter().enumerate() {
        let mut row: Vec<usize> = (0..na).map(|i| nb + i).collect();
        if half_length(y).is_some_and(|h| h <= delta) {
            row.push(j);
        }
        adj.push(row);
    }
    let mates = maximum_matching(&adj, nb + na);
    if mates.iter().any(Option::is_none) {
        return None;
    }
    Some(
        mates[..na]
            .iter()
            .enumerate()
            .filter_map(|(i, m)| m.filter(|&j| j < nb).map(|j| (i, j)))
            .collect(),
    )
}

/// Bottleneck distance with matching to the diagonal.
///
/// Infinite bars only match infinite bars of the same dimension; the value
/// is `+inf` when their counts differ in some dimension.
pub fn bottleneck_distance(a: &Barcode, b: &Barcode) -> DistanceResult {
    let a = Arc::new(a.clone());
    let b = Arc::new(b.clone());
    if !infinite_counts_agree(&a, &b) {
        return DistanceResult {
            value: f64::INFINITY,
            witness: Matching::empty(a, b),
        };
    }
    let candidates = bottleneck_candidates(&a, &b);
    let i = first_feasible(&candidates, |delta| bottleneck_pairs(&a, &b, delta).is_some())
        .expect("the largest candidate is always feasible");
    let value = candidates[i];
    let pairs = bottleneck_pairs(&a, &b, value)
        .expect("feasible")
        .into_iter()
        .map(|(i, j)| (a.bars()[i].id, b.bars()[j].id))
        .collect();
    DistanceResult {
        value,
        witness: Matching::from_valid_pairs(a, b, pairs),
    }
}
