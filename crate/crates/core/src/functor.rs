//! Barcode functors over finite interval grids.
//!
//! The barcode functor of `B` sends an interval `I` to the set `B↾I` of bars
//! whose intervals contain `I`, and an inclusion `I ⊆ J` to the inclusion
//! `B↾J ⊆ B↾I`. A matching `M` gives components `M_I = M ∩ (A↾I × B↾I)`.
//!
//! Intervals form an infinite poset. For finitely many bars the restriction
//! sets only change at bar endpoints, so every statement here is checked on
//! the grid of intervals whose endpoints are bar endpoints.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::barcode::{BarId, Barcode};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::matcher::max_subbarcode_matching;
use crate::matching::Matching;

/// Largest barcode (per side) accepted by [`find_natural_mono`].
pub const NATURAL_SEARCH_LIMIT: usize = 6;

/// Finite family of intervals generated by barcode endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalGrid {
    intervals: Vec<Interval>,
}

impl IntervalGrid {
    /// All intervals `[s, t)` and `[s, inf)` with `s < t` drawn from the
    /// finite endpoints of both barcodes.
    pub fn generate(a: &Barcode, b: &Barcode) -> Result<Self> {
        if a.is_empty() && b.is_empty() {
            return Err(Error::EmptyGrid);
        }
        let mut points: Vec<f64> = a
            .iter()
            .chain(b.iter())
            .flat_map(|bar| [bar.birth(), bar.death()])
            .filter(|x| x.is_finite())
            .collect();
        points.sort_by(f64::total_cmp);
        points.dedup();
        let mut intervals = Vec::new();
        for (i, &s) in points.iter().enumerate() {
            for &t in &points[i + 1..] {
                intervals.push(Interval::new(s, t).expect("s < t"));
            }
            intervals.push(Interval::infinite(s).expect("finite endpoint"));
        }
        intervals.sort_by(|x, y| {
            x.birth()
                .total_cmp(&y.birth())
                .then(x.death().total_cmp(&y.death()))
        });
        Ok(IntervalGrid { intervals })
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

pub fn generate_grid(a: &Barcode, b: &Barcode) -> Result<IntervalGrid> {
    IntervalGrid::generate(a, b)
}

/// `B↾I`: ids of the bars whose interval contains `i`.
pub fn restrict(b: &Barcode, i: &Interval) -> BTreeSet<BarId> {
    b.iter()
        .filter(|bar| bar.interval.contains(i))
        .map(|bar| bar.id)
        .collect()
}

/// `M_I`: the pairs of `m` whose bars both contain `i`.
pub fn matching_component(m: &Matching, i: &Interval) -> Matching {
    m.filter(|x, y| x.interval.contains(i) && y.interval.contains(i))
}

/// A barcode functor evaluated on a grid.
#[derive(Debug, Clone)]
pub struct FunctorSlice {
    barcode: Arc<Barcode>,
    grid: IntervalGrid,
    restrictions: Vec<BTreeSet<BarId>>,
}

impl FunctorSlice {
    pub fn new(barcode: Arc<Barcode>, grid: IntervalGrid) -> Self {
        let restrictions = grid
            .intervals()
            .iter()
            .map(|i| restrict(&barcode, i))
            .collect();
        FunctorSlice {
            barcode,
            grid,
            restrictions,
        }
    }

    pub fn barcode(&self) -> &Arc<Barcode> {
        &self.barcode
    }

    pub fn grid(&self) -> &IntervalGrid {
        &self.grid
    }

    /// `B↾I` for the `k`-th grid interval.
    pub fn at(&self, k: usize) -> &BTreeSet<BarId> {
        &self.restrictions[k]
    }

    /// Structure map for grid intervals `I = grid[i] ⊆ J = grid[j]`: the
    /// inclusion `B↾J ⊆ B↾I`, as a set of ids. `None` if `I ⊄ J`.
    pub fn structure_map(&self, i: usize, j: usize) -> Option<&BTreeSet<BarId>> {
        let ints = self.grid.intervals();
        ints[j].contains(&ints[i]).then(|| &self.restrictions[j])
    }

    /// `I ⊆ J` implies `B↾J ⊆ B↾I` for every pair of grid intervals.
    pub fn is_contravariant(&self) -> bool {
        let ints = self.grid.intervals();
        (0..ints.len()).all(|i| {
            (0..ints.len()).all(|j| {
                !ints[j].contains(&ints[i]) || self.restrictions[j].is_subset(&self.restrictions[i])
            })
        })
    }
}

/// Decides `A ⊑ B` through the functor picture: builds a maximum
/// sub-barcode matching and checks that each of its components is total on
/// `A↾I` for every grid interval `I`.
pub fn is_subbarcode_via_functor(a: &Arc<Barcode>, b: &Arc<Barcode>) -> bool {
    let Ok(grid) = IntervalGrid::generate(a, b) else {
        // both empty
        return true;
    };
    let m = max_subbarcode_matching(a, b);
    grid.intervals().iter().all(|i| {
        let component = matching_component(&m, i);
        component.len() == restrict(a, i).len()
    })
}

/// Checks `(n ∘ m)_I = n_I ∘ m_I` on every grid interval, with no
/// restriction on the kind of matchings.
pub fn components_commute(m: &Matching, n: &Matching, grid: &IntervalGrid) -> Result<bool> {
    let composite = m.compose(n)?;
    for i in grid.intervals() {
        let lhs = matching_component(&composite, i);
        let rhs = matching_component(m, i).compose(&matching_component(n, i))?;
        if lhs.pairs() != rhs.pairs() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Functoriality of `M ↦ mch_M` on a grid. Both matchings must be
/// sub-barcode matchings, or both overlap matchings.
pub fn check_functoriality(m: &Matching, n: &Matching, grid: &IntervalGrid) -> Result<bool> {
    let both_sub = m.is_subbarcode_matching() && n.is_subbarcode_matching();
    let both_overlap = m.is_overlap_matching() && n.is_overlap_matching();
    if !(both_sub || both_overlap) {
        return Err(Error::MixedMatchingKinds);
    }
    components_commute(m, n, grid)
}

/// A family of components `M_I : A↾I ↪ B↾I`, one per grid interval, each
/// total on `A↾I` and natural with respect to grid inclusions.
#[derive(Debug, Clone)]
pub struct NaturalFamily {
    pub components: Vec<(Interval, Matching)>,
}

impl NaturalFamily {
    /// The union of all components as a single matching. Fails when two
    /// components send different bars to the same target, which happens
    /// exactly when bars with disjoint intervals share a partner.
    pub fn union(&self, a: &Arc<Barcode>, b: &Arc<Barcode>) -> Result<Matching> {
        let pairs: BTreeSet<(BarId, BarId)> = self
            .components
            .iter()
            .flat_map(|(_, m)| m.pairs().iter().copied())
            .collect();
        Matching::new(a.clone(), b.clone(), pairs)
    }

    /// Checks that every component is total on its restriction and
    /// injective, and that comparable intervals agree on shared bars.
    pub fn is_natural_mono(&self, a: &Barcode) -> bool {
        let totals = self
            .components
            .iter()
            .all(|(i, m)| m.len() == restrict(a, i).len());
        let natural = self.components.iter().all(|(i, mi)| {
            self.components.iter().all(|(j, mj)| {
                !j.contains(i)
                    || mj
                        .pairs()
                        .iter()
                        .all(|&(x, y)| mi.partner_of_left(x) == Some(y))
            })
        });
        totals && natural
    }
}

/// Exhaustive search for a monomorphism of barcode functors on the grid of
/// `a` and `b`: a natural family of components `A↾I ↪ B↾I`, each total on
/// `A↾I`. Only for barcodes with at most [`NATURAL_SEARCH_LIMIT`] bars each.
pub fn find_natural_mono(a: &Arc<Barcode>, b: &Arc<Barcode>) -> Result<Option<NaturalFamily>> {
    let size = a.len().max(b.len());
    if size > NATURAL_SEARCH_LIMIT {
        return Err(Error::SizeLimit {
            size,
            limit: NATURAL_SEARCH_LIMIT,
        });
    }
    let Ok(grid) = IntervalGrid::generate(a, b) else {
        return Ok(Some(NaturalFamily {
            components: Vec::new(),
        }));
    };
    // Larger intervals first, so most choices are forced by an enclosing one.
    let mut order: Vec<Interval> = grid.intervals().to_vec();
    order.sort_by(|x, y| y.length().total_cmp(&x.length()).then(x.birth().total_cmp(&y.birth())));

    let slots: Vec<Slot> = order
        .iter()
        .map(|i| Slot {
            interval: *i,
            sources: with_dims(a, restrict(a, i)),
            targets: with_dims(b, restrict(b, i)),
        })
        .collect();
    if !slots.iter().all(Slot::has_room) {
        return Ok(None);
    }

    let mut chosen: Vec<BTreeMap<BarId, BarId>> = Vec::with_capacity(slots.len());
    if !search(&slots, &mut chosen) {
        return Ok(None);
    }
    let components = slots
        .iter()
        .zip(chosen)
        .map(|(slot, component)| {
            let m = Matching::new(a.clone(), b.clone(), component)?;
            Ok((slot.interval, m))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(NaturalFamily { components }))
}

struct Slot {
    interval: Interval,
    sources: Vec<(BarId, usize)>,
    targets: Vec<(BarId, usize)>,
}

impl Slot {
    /// Every dimension has at least as many targets as sources.
    fn has_room(&self) -> bool {
        let mut room: BTreeMap<usize, isize> = BTreeMap::new();
        for &(_, dim) in &self.targets {
            *room.entry(dim).or_default() += 1;
        }
        for &(_, dim) in &self.sources {
            *room.entry(dim).or_default() -= 1;
        }
        room.values().all(|&r| r >= 0)
    }
}

fn with_dims(barcode: &Barcode, ids: BTreeSet<BarId>) -> Vec<(BarId, usize)> {
    ids.into_iter()
        .map(|id| (id, barcode.get(id).expect("restricted ids exist").dim))
        .collect()
}

fn search(slots: &[Slot], chosen: &mut Vec<BTreeMap<BarId, BarId>>) -> bool {
    let k = chosen.len();
    if k == slots.len() {
        return true;
    }
    let slot = &slots[k];
    // Naturality: a bar in the restriction of two comparable intervals
    // must be sent to the same partner by both components.
    let mut forced: BTreeMap<BarId, BarId> = BTreeMap::new();
    for (prev, component) in slots[..k].iter().zip(chosen.iter()) {
        let comparable =
            prev.interval.contains(&slot.interval) || slot.interval.contains(&prev.interval);
        if !comparable {
            continue;
        }
        for &(alpha, _) in &slot.sources {
            if let Some(&beta) = component.get(&alpha) {
                match forced.insert(alpha, beta) {
                    Some(other) if other != beta => return false,
                    _ => {}
                }
            }
        }
    }
    let mut current = BTreeMap::new();
    let mut used = BTreeSet::new();
    assign(slots, chosen, &forced, 0, &mut current, &mut used)
}

fn assign(
    slots: &[Slot],
    chosen: &mut Vec<BTreeMap<BarId, BarId>>,
    forced: &BTreeMap<BarId, BarId>,
    idx: usize,
    current: &mut BTreeMap<BarId, BarId>,
    used: &mut BTreeSet<BarId>,
) -> bool {
    let slot = &slots[chosen.len()];
    if idx == slot.sources.len() {
        chosen.push(current.clone());
        if search(slots, chosen) {
            return true;
        }
        chosen.pop();
        return false;
    }
    let (alpha, dim) = slot.sources[idx];
    let options: Vec<BarId> = match forced.get(&alpha) {
        Some(&beta) => vec![beta],
        None => slot.targets.iter().filter(|t| t.1 == dim).map(|t| t.0).collect(),
    };
    for beta in options {
        if !slot.targets.contains(&(beta, dim)) || used.contains(&beta) {
            continue;
        }
        current.insert(alpha, beta);
        used.insert(beta);
        if assign(slots, chosen, forced, idx + 1, current, used) {
            return true;
        }
        current.remove(&alpha);
        used.remove(&beta);
    }
    false
}
