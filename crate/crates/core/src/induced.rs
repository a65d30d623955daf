//! Canonical (co)injections and the matchings induced by a factorization.
//!
//! The canonical injection of a monomorphism `V ↪ W` pairs, for each death
//! value, the bars of `V` and of `W` with that death in order of decreasing
//! length. The canonical coinjection of an epimorphism `V ↠ W` does the same
//! for each birth value. Both depend only on the barcodes, so they are built
//! here from barcodes alone and fail when no morphism of the required kind
//! could exist between modules with these barcodes.
//!
//! A factorization `G = φ₂ ∘ F ∘ φ₁` yields four barcodes (see
//! [`FactorizationBarcodes`]). The induced sub-barcode matching is
//!
//! ```text
//! M = J(F_φ) ∘ reverse(Q(φ_*)) : B_G ↪ B_F
//! ```
//!
//! and the induced super-barcode matching is
//!
//! ```text
//! E = reverse(J(φ_*)) ∘ Q(φ_F) : B_F ↠ B_G
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use ordered_float::OrderedFloat;

use crate::barcode::{Bar, BarId, Barcode};
use crate::error::{Error, Result};
use crate::matching::{Composite, Matching};

/// Barcodes of the images in an epi-mono factorization diagram.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorizationBarcodes {
    /// Barcode of `im F`.
    pub b_f: Arc<Barcode>,
    /// Barcode of `im F_φ`, the restriction of `F` to `im φ₁`.
    pub b_fphi: Arc<Barcode>,
    /// Barcode of `im φ_F`, the restriction of `φ₂` to `im F`.
    pub b_phif: Arc<Barcode>,
    /// Barcode of `im G`.
    pub b_g: Arc<Barcode>,
}

impl FactorizationBarcodes {
    pub fn new(b_f: Barcode, b_fphi: Barcode, b_phif: Barcode, b_g: Barcode) -> Self {
        FactorizationBarcodes {
            b_f: Arc::new(b_f),
            b_fphi: Arc::new(b_fphi),
            b_phif: Arc::new(b_phif),
            b_g: Arc::new(b_g),
        }
    }
}

type GroupKey = (usize, OrderedFloat<f64>);

fn group_by<F>(barcode: &Barcode, key: F) -> BTreeMap<GroupKey, Vec<&Bar>>
where
    F: Fn(&Bar) -> f64,
{
    let mut groups: BTreeMap<GroupKey, Vec<&Bar>> = BTreeMap::new();
    for bar in barcode {
        groups
            .entry((bar.dim, OrderedFloat(key(bar))))
            .or_default()
            .push(bar);
    }
    groups
}

/// Canonical injection `a ↪ b`: total on `a`, every pair has equal deaths
/// and the `b` bar contains the `a` bar.
pub fn canonical_injection(a: &Arc<Barcode>, b: &Arc<Barcode>) -> Result<Matching> {
    let by_birth = |x: &&Bar, y: &&Bar| x.birth().total_cmp(&y.birth()).then(x.id.cmp(&y.id));
    let mut b_groups = group_by(b, Bar::death);
    let mut pairs: Vec<(BarId, BarId)> = Vec::with_capacity(a.len());
    for ((dim, death), mut a_group) in group_by(a, Bar::death) {
        let fail = Error::NoCanonicalInjection {
            dim,
            death: death.into_inner(),
        };
        let mut b_group = b_groups.remove(&(dim, death)).ok_or(fail.clone())?;
        if a_group.len() > b_group.len() {
            return Err(fail);
        }
        a_group.sort_by(by_birth);
        b_group.sort_by(by_birth);
        for (x, y) in a_group.iter().zip(&b_group) {
            if y.birth() > x.birth() {
                return Err(fail);
            }
            pairs.push((x.id, y.id));
        }
    }
    Ok(Matching::from_valid_pairs(a.clone(), b.clone(), pairs))
}

/// Canonical coinjection `a ↠ b`: total on `b`, every pair has equal births
/// and the `a` bar contains the `b` bar.
pub fn canonical_coinjection(a: &Arc<Barcode>, b: &Arc<Barcode>) -> Result<Matching> {
    let by_death = |x: &&Bar, y: &&Bar| y.death().total_cmp(&x.death()).then(x.id.cmp(&y.id));
    let mut a_groups = group_by(a, Bar::birth);
    let mut pairs: Vec<(BarId, BarId)> = Vec::with_capacity(b.len());
    for ((dim, birth), mut b_group) in group_by(b, Bar::birth) {
        let fail = Error::NoCanonicalCoinjection {
            dim,
            birth: birth.into_inner(),
        };
        let mut a_group = a_groups.remove(&(dim, birth)).ok_or(fail.clone())?;
        if b_group.len() > a_group.len() {
            return Err(fail);
        }
        a_group.sort_by(by_death);
        b_group.sort_by(by_death);
        for (x, y) in a_group.iter().zip(&b_group) {
            if y.death() > x.death() {
                return Err(fail);
            }
            pairs.push((x.id, y.id));
        }
    }
    Ok(Matching::from_valid_pairs(a.clone(), b.clone(), pairs))
}

/// The composition defining the induced sub-barcode matching, with the
/// number of pairs removed by the intersection filter.
pub fn induced_sub_composite(f: &FactorizationBarcodes) -> Result<Composite> {
    let q = canonical_coinjection(&f.b_fphi, &f.b_g)?;
    let j = canonical_injection(&f.b_fphi, &f.b_f)?;
    q.reverse().compose_counted(&j)
}

/// Induced sub-barcode matching `B_G ↪ B_F`.
pub fn induced_sub_matching(f: &FactorizationBarcodes) -> Result<Matching> {
    induced_sub_composite(f).map(|c| c.matching)
}

/// The composition defining the induced super-barcode matching, with the
/// number of pairs removed by the intersection filter.
pub fn induced_super_composite(f: &FactorizationBarcodes) -> Result<Composite> {
    let q = canonical_coinjection(&f.b_f, &f.b_phif)?;
    let j = canonical_injection(&f.b_g, &f.b_phif)?;
    q.compose_counted(&j.reverse())
}

/// Induced super-barcode matching `B_F ↠ B_G`.
pub fn induced_super_matching(f: &FactorizationBarcodes) -> Result<Matching> {
    induced_super_composite(f).map(|c| c.matching)
}
