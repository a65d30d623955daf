//! Maximum sub-barcode matchings.
//!
//! The sweep processes the bars of `A` by birth and keeps the bars of `B`
//! born no later than the current bar in an ordered set keyed by death. Each
//! bar of `A` takes the available bar of `B` with the smallest death that
//! still covers it. Any bar of `B` available now stays available for every
//! later bar of `A`, and the best-fit choice leaves the longer-lived bars for
//! later, so the greedy choice never loses a pair. Runs in `O(n log n)`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use ordered_float::OrderedFloat;

use crate::barcode::{Bar, BarId, Barcode};
use crate::bipartite::maximum_matching;
use crate::error::{Error, Result};
use crate::matching::Matching;

/// Largest barcode (per side) accepted by [`brute_force_max_matching`].
pub const BRUTE_FORCE_LIMIT: usize = 20;

type FitKey = (OrderedFloat<f64>, Reverse<OrderedFloat<f64>>, BarId);

fn by_dimension(barcode: &Barcode) -> BTreeMap<usize, Vec<&Bar>> {
    let mut groups: BTreeMap<usize, Vec<&Bar>> = BTreeMap::new();
    for bar in barcode {
        groups.entry(bar.dim).or_default().push(bar);
    }
    groups
}

fn sweep(mut a: Vec<&Bar>, mut b: Vec<&Bar>, pairs: &mut Vec<(BarId, BarId)>) {
    a.sort_by(|x, y| {
        x.birth()
            .total_cmp(&y.birth())
            .then(y.death().total_cmp(&x.death()))
            .then(x.id.cmp(&y.id))
    });
    b.sort_by(|x, y| x.birth().total_cmp(&y.birth()).then(x.id.cmp(&y.id)));

    let mut available: BTreeSet<FitKey> = BTreeSet::new();
    let mut next_b = b.iter().peekable();
    for alpha in a {
        while let Some(beta) = next_b.next_if(|beta| beta.birth() <= alpha.birth()) {
            available.insert((
                OrderedFloat(beta.death()),
                Reverse(OrderedFloat(beta.birth())),
                beta.id,
            ));
        }
        let lowest: FitKey = (
            OrderedFloat(alpha.death()),
            Reverse(OrderedFloat(f64::INFINITY)),
            BarId(0),
        );
        if let Some(&fit) = available.range(lowest..).next() {
            available.remove(&fit);
            pairs.push((alpha.id, fit.2));
        }
    }
}

fn greedy_pairs(a: &Barcode, b: &Barcode) -> Vec<(BarId, BarId)> {
    let mut b_groups = by_dimension(b);
    let mut pairs = Vec::new();
    for (dim, a_bars) in by_dimension(a) {
        let b_bars = b_groups.remove(&dim).unwrap_or_default();
        sweep(a_bars, b_bars, &mut pairs);
    }
    pairs
}

/// A maximum-cardinality sub-barcode matching from `a` into `b`.
///
/// Among equally good candidates the sweep takes the bar of `b` with the
/// largest birth, then the smallest id.
pub fn max_subbarcode_matching(a: &Arc<Barcode>, b: &Arc<Barcode>) -> Matching {
    Matching::from_valid_pairs(a.clone(), b.clone(), greedy_pairs(a, b))
}

/// Number of bars in a maximum sub-barcode matching.
pub fn max_subbarcode_matching_size(a: &Barcode, b: &Barcode) -> usize {
    greedy_pairs(a, b).len()
}

/// `A ⊑ B`: some injective sub-barcode matching covers every bar of `a`.
pub fn is_subbarcode(a: &Barcode, b: &Barcode) -> bool {
    greedy_pairs(a, b).len() == a.len()
}

/// Shrinks every bar `[b, d)` to `[b + delta, d - delta)`, dropping bars
/// that become empty. Surviving bars keep their ids.
pub fn shrink(a: &Barcode, delta: f64) -> Result<Barcode> {
    if delta.is_nan() || delta < 0.0 {
        return Err(Error::NegativeShift(delta));
    }
    let bars = a
        .iter()
        .filter_map(|bar| {
            bar.interval.shrink(delta).map(|interval| Bar {
                interval,
                ..*bar
            })
        })
        .collect();
    Barcode::from_bars(bars)
}

/// Maximum sub-barcode matching by augmenting paths on the explicit
/// containment graph. Intended as a reference for small inputs.
pub fn brute_force_max_matching(a: &Arc<Barcode>, b: &Arc<Barcode>) -> Result<Matching> {
    let size = a.len().max(b.len());
    if size > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimit {
            size,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let a_bars = a.bars();
    let b_bars = b.bars();
    let adj: Vec<Vec<usize>> = a_bars
        .iter()
        .map(|x| {
            b_bars
                .iter()
                .enumerate()
                .filter(|(_, y)| x.dim == y.dim && y.interval.contains(&x.interval))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let pairs = maximum_matching(&adj, b_bars.len())
        .into_iter()
        .enumerate()
        .filter_map(|(i, mate)| mate.map(|j| (a_bars[i].id, b_bars[j].id)))
        .collect();
    Ok(Matching::from_valid_pairs(a.clone(), b.clone(), pairs))
}
