//! Persistence and image persistence of lower-star filtrations.
//!
//! Image persistence of `g ≥ l` works on one matrix: rows are simplices in
//! `g`-order, columns are simplices in `l`-order. After reduction, a pivot
//! `(σ, τ)` kills at `l(τ)` the class born at `g(σ)`. The pivot rows are
//! exactly the last simplices of reduced cycles, which are positive in the
//! `g`-filtration; positive simplices that never become pivots carry
//! classes surviving into the full complex.

use crate::barcode::Barcode;
use crate::complex::{build_filtration, check_bounds, Filtration, SimplicialComplex, VertexFunction};
use crate::error::{Error, Result};
use crate::induced::FactorizationBarcodes;
use crate::interval::Interval;
use crate::reduction::Reducer;

/// Birth-death pairs of a filtration and which simplices are positive.
#[derive(Debug, Clone)]
pub struct Pairing {
    /// `(σ, τ)` simplex indices: `τ` kills the class created by `σ`.
    pub pairs: Vec<(usize, usize)>,
    /// Positive (cycle-creating) simplices of dimension at most `max_dim`
    /// that are never paired.
    pub essential: Vec<usize>,
    positive: Vec<bool>,
}

impl Pairing {
    /// Whether the simplex at `idx` creates a cycle. Meaningful up to
    /// dimension `max_dim + 1`.
    pub fn is_positive(&self, idx: usize) -> bool {
        self.positive[idx]
    }
}

/// Boundary of the simplex at `idx` as positions in the `rows` order.
fn boundary_in(rows: &Filtration, idx: usize) -> Vec<usize> {
    let mut col: Vec<usize> = rows
        .complex()
        .boundary(idx)
        .into_iter()
        .map(|face| rows.position(face))
        .collect();
    col.sort_unstable();
    col
}

/// Standard reduction with clearing, from the top dimension down.
pub fn pairing(filt: &Filtration, max_dim: usize) -> Pairing {
    let k = filt.complex();
    let n = k.len();
    let mut positive = vec![true; n];
    let mut cleared = vec![false; n];
    let mut pairs = Vec::new();
    for d in (1..=max_dim + 1).rev() {
        let mut reducer = Reducer::new(n);
        for tau in filt.of_dim(d) {
            if cleared[tau] {
                continue;
            }
            if let Some(low) = reducer.push(boundary_in(filt, tau)) {
                let sigma = filt.order()[low];
                positive[tau] = false;
                cleared[sigma] = true;
                pairs.push((sigma, tau));
            }
        }
    }
    let essential = filt
        .order()
        .iter()
        .copied()
        .filter(|&s| k.dim_of(s) <= max_dim && positive[s] && !cleared[s])
        .collect();
    Pairing {
        pairs,
        essential,
        positive,
    }
}

fn interval(birth: f64, death: f64) -> Interval {
    Interval::new(birth, death).expect("lower-star values are finite and birth < death")
}

/// Barcode of `H_k` for `0 ≤ k ≤ max_dim`, in canonical order.
pub fn persistence(filt: &Filtration, max_dim: usize) -> Barcode {
    let k = filt.complex();
    let p = pairing(filt, max_dim);
    let finite = p.pairs.iter().filter_map(|&(s, t)| {
        let (b, d) = (filt.value(s), filt.value(t));
        (b < d).then(|| (k.dim_of(s), interval(b, d)))
    });
    let essential = p
        .essential
        .iter()
        .map(|&s| (k.dim_of(s), interval(filt.value(s), f64::INFINITY)));
    Barcode::canonical(finite.chain(essential))
}

/// Persistence of the lower-star filtration of `f` on `k`.
pub fn sublevel_persistence(
    k: &SimplicialComplex,
    f: &VertexFunction,
    max_dim: usize,
) -> Result<Barcode> {
    Ok(persistence(&build_filtration(k, f)?, max_dim))
}

/// Barcode of `t ↦ im(H_k(G(t)) → H_k(L(t)))` where `G` and `L` are the
/// sublevel filtrations of `g ≥ l`.
pub fn image_persistence(
    k: &SimplicialComplex,
    g: &VertexFunction,
    l: &VertexFunction,
    max_dim: usize,
) -> Result<Barcode> {
    check_bounds(k, g, l)?;
    let gf = build_filtration(k, g)?;
    let lf = build_filtration(k, l)?;
    let g_pairing = pairing(&gf, max_dim);

    let mut bars = Vec::new();
    let mut killed = vec![false; k.len()];
    for d in 1..=max_dim + 1 {
        let mut reducer = Reducer::new(k.len());
        for tau in lf.of_dim(d) {
            if let Some(low) = reducer.push(boundary_in(&gf, tau)) {
                let sigma = gf.order()[low];
                debug_assert!(g_pairing.is_positive(sigma));
                killed[sigma] = true;
                let (b, dd) = (gf.value(sigma), lf.value(tau));
                if b < dd {
                    bars.push((d - 1, interval(b, dd)));
                }
            }
        }
    }
    for &sigma in gf.order() {
        if k.dim_of(sigma) <= max_dim && g_pairing.is_positive(sigma) && !killed[sigma] {
            bars.push((k.dim_of(sigma), interval(gf.value(sigma), f64::INFINITY)));
        }
    }
    Ok(Barcode::canonical(bars))
}

/// The four barcodes of the factorization `G ↪ F ↪ L` of sublevel
/// filtrations for `g ≥ f ≥ l`.
pub fn factorization_bundle(
    k: &SimplicialComplex,
    g: &VertexFunction,
    f: &VertexFunction,
    l: &VertexFunction,
    max_dim: usize,
) -> Result<FactorizationBarcodes> {
    let mut violations = Vec::new();
    for (hi, lo) in [(g, f), (f, l)] {
        match check_bounds(k, hi, lo) {
            Ok(()) => {}
            Err(Error::BoundViolation(v)) => violations.extend(v),
            Err(e) => return Err(e),
        }
    }
    if !violations.is_empty() {
        violations.sort_unstable();
        violations.dedup();
        return Err(Error::BoundViolation(violations));
    }
    Ok(FactorizationBarcodes::new(
        sublevel_persistence(k, f, max_dim)?,
        image_persistence(k, g, f, max_dim)?,
        image_persistence(k, f, l, max_dim)?,
        image_persistence(k, g, l, max_dim)?,
    ))
}
