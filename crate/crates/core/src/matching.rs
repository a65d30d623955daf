//! Matchings between barcodes and their composition.
//!
//! A [`Matching`] is an injective partial pairing of bar ids. Every pair joins
//! bars of equal dimension whose intervals intersect. Composition follows
//! relational composition and then drops pairs whose end intervals are
//! disjoint, so composites are again matchings.

use std::collections::HashMap;
use std::sync::Arc;

use crate::barcode::{Bar, BarId, Barcode};
use crate::error::{Error, Result};
use crate::interval::{interval_contains, overlaps_above};

#[derive(Debug, Clone)]
pub struct Matching {
    left: Arc<Barcode>,
    right: Arc<Barcode>,
    /// Sorted by left id.
    pairs: Vec<(BarId, BarId)>,
}

impl PartialEq for Matching {
    fn eq(&self, other: &Self) -> bool {
        self.pairs == other.pairs && same_barcode(&self.left, &other.left) && same_barcode(&self.right, &other.right)
    }
}

fn same_barcode(a: &Arc<Barcode>, b: &Arc<Barcode>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Result of a composition together with the number of relational pairs the
/// intersection filter removed.
#[derive(Debug, Clone, PartialEq)]
pub struct Composite {
    pub matching: Matching,
    pub discarded: usize,
}

impl Matching {
    /// Validates and builds a matching. Pairs may be given in any order.
    pub fn new<I>(left: Arc<Barcode>, right: Arc<Barcode>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BarId, BarId)>,
    {
        let mut pairs: Vec<(BarId, BarId)> = pairs.into_iter().collect();
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::NotInjective(w[0].0));
            }
        }
        let mut rights: Vec<BarId> = pairs.iter().map(|p| p.1).collect();
        rights.sort_unstable();
        if let Some(w) = rights.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotInjective(w[0]));
        }
        for &(a, b) in &pairs {
            let bar_a = left.get(a).ok_or(Error::UnknownBarId(a))?;
            let bar_b = right.get(b).ok_or(Error::UnknownBarId(b))?;
            if bar_a.dim != bar_b.dim {
                return Err(Error::DimensionMismatch { left: a, right: b });
            }
            if !bar_a.interval.intersects(&bar_b.interval) {
                return Err(Error::DisjointPair { left: a, right: b });
            }
        }
        Ok(Matching { left, right, pairs })
    }

    /// Callers guarantee the matching invariants.
    pub(crate) fn from_valid_pairs(
        left: Arc<Barcode>,
        right: Arc<Barcode>,
        mut pairs: Vec<(BarId, BarId)>,
    ) -> Self {
        pairs.sort_unstable();
        debug_assert!(Matching::new(left.clone(), right.clone(), pairs.clone()).is_ok());
        Matching { left, right, pairs }
    }

    pub fn empty(left: Arc<Barcode>, right: Arc<Barcode>) -> Self {
        Matching {
            left,
            right,
            pairs: Vec::new(),
        }
    }

    /// The identity matching of a barcode with itself.
    pub fn identity(barcode: Arc<Barcode>) -> Self {
        let pairs = barcode.ids().map(|id| (id, id)).collect();
        Matching {
            left: barcode.clone(),
            right: barcode,
            pairs,
        }
    }

    pub fn left(&self) -> &Arc<Barcode> {
        &self.left
    }

    pub fn right(&self) -> &Arc<Barcode> {
        &self.right
    }

    /// Pairs sorted by left id.
    pub fn pairs(&self) -> &[(BarId, BarId)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, pair: (BarId, BarId)) -> bool {
        self.pairs.binary_search(&pair).is_ok()
    }

    pub fn partner_of_left(&self, id: BarId) -> Option<BarId> {
        self.pairs
            .binary_search_by_key(&id, |p| p.0)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn partner_of_right(&self, id: BarId) -> Option<BarId> {
        self.pairs.iter().find(|p| p.1 == id).map(|p| p.0)
    }

    /// Iterates over matched bar pairs.
    pub fn bar_pairs(&self) -> impl Iterator<Item = (&Bar, &Bar)> + '_ {
        self.pairs.iter().map(move |&(a, b)| {
            (
                self.left.get(a).expect("matched id in left barcode"),
                self.right.get(b).expect("matched id in right barcode"),
            )
        })
    }

    /// Every left bar is matched (an injection).
    pub fn is_total_on_left(&self) -> bool {
        self.pairs.len() == self.left.len()
    }

    /// Every right bar is matched (a coinjection).
    pub fn is_total_on_right(&self) -> bool {
        self.pairs.len() == self.right.len()
    }

    /// Left bars with no partner.
    pub fn unmatched_left(&self) -> Vec<BarId> {
        self.left
            .ids()
            .filter(|&id| self.partner_of_left(id).is_none())
            .collect()
    }

    pub fn is_overlap_matching(&self) -> bool {
        self.bar_pairs()
            .all(|(a, b)| overlaps_above(&a.interval, &b.interval))
    }

    pub fn is_subbarcode_matching(&self) -> bool {
        self.bar_pairs()
            .all(|(a, b)| interval_contains(&b.interval, &a.interval))
    }

    pub fn reverse(&self) -> Matching {
        let pairs = self.pairs.iter().map(|&(a, b)| (b, a)).collect();
        Matching::from_valid_pairs(self.right.clone(), self.left.clone(), pairs)
    }

    /// `self` followed by `next`, dropping pairs with disjoint intervals.
    pub fn compose(&self, next: &Matching) -> Result<Matching> {
        self.compose_counted(next).map(|c| c.matching)
    }

    /// Like [`Matching::compose`], also reporting how many pairs the
    /// intersection filter removed.
    pub fn compose_counted(&self, next: &Matching) -> Result<Composite> {
        if !same_barcode(&self.right, &next.left) {
            return Err(Error::BarcodeMismatch);
        }
        let forward: HashMap<BarId, BarId> = next.pairs.iter().copied().collect();
        let mut pairs = Vec::new();
        let mut discarded = 0;
        for &(a, b) in &self.pairs {
            let Some(&c) = forward.get(&b) else { continue };
            let bar_a = self.left.get(a).expect("matched id in left barcode");
            let bar_c = next.right.get(c).expect("matched id in right barcode");
            if bar_a.interval.intersects(&bar_c.interval) {
                pairs.push((a, c));
            } else {
                discarded += 1;
            }
        }
        Ok(Composite {
            matching: Matching::from_valid_pairs(self.left.clone(), next.right.clone(), pairs),
            discarded,
        })
    }

    /// Keeps the pairs satisfying `keep`.
    pub fn filter<F>(&self, mut keep: F) -> Matching
    where
        F: FnMut(&Bar, &Bar) -> bool,
    {
        let pairs = self
            .pairs
            .iter()
            .copied()
            .filter(|&(a, b)| {
                keep(
                    self.left.get(a).expect("left id"),
                    self.right.get(b).expect("right id"),
                )
            })
            .collect();
        Matching {
            left: self.left.clone(),
            right: self.right.clone(),
            pairs,
        }
    }

    /// `<left-id> -> <right-id>` lines.
    pub fn to_text(&self) -> String {
        self.pairs
            .iter()
            .map(|(a, b)| format!("{a} -> {b}\n"))
            .collect()
    }

    /// Parses `<left-id> -> <right-id>` lines against the given barcodes.
    pub fn parse(text: &str, left: Arc<Barcode>, right: Arc<Barcode>) -> Result<Matching> {
        let mut pairs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parsed = line.split_once("->").and_then(|(a, b)| {
                Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
            });
            let Some((a, b)) = parsed else {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected `<left-id> -> <right-id>`, found `{line}`"),
                });
            };
            pairs.push((BarId(a), BarId(b)));
        }
        Matching::new(left, right, pairs)
    }
}

pub fn is_overlap_matching(m: &Matching) -> bool {
    m.is_overlap_matching()
}

pub fn is_subbarcode_matching(m: &Matching) -> bool {
    m.is_subbarcode_matching()
}

pub fn reverse(m: &Matching) -> Matching {
    m.reverse()
}

/// `n ∘ m`: first `m`, then `n`.
pub fn compose(m: &Matching, n: &Matching) -> Result<Matching> {
    m.compose(n)
}
