//! Random instances shared by the integration tests.
//!
//! Endpoints and vertex values are small integers or halves of them, so
//! every difference and half-length the algorithms form is exact and ties
//! are frequent.

#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use subbar::{Bar, Barcode, Interval, Matching, SimplicialComplex, VertexFunction};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Up to `max_bars` bars in dimensions `0..dims`, endpoints in
/// `0..=span`, a fraction `inf` of them infinite.
pub fn random_barcode(rng: &mut impl Rng, max_bars: usize, dims: usize, span: i32, inf: f64) -> Barcode {
    let n = rng.gen_range(0..=max_bars);
    Barcode::new((0..n).map(|_| {
        let dim = rng.gen_range(0..dims);
        let birth = rng.gen_range(0..span);
        let interval = if rng.gen_bool(inf) {
            Interval::infinite(birth as f64).unwrap()
        } else {
            let death = rng.gen_range(birth + 1..=span);
            Interval::new(birth as f64, death as f64).unwrap()
        };
        (dim, interval)
    }))
}

pub fn random_finite_barcode(rng: &mut impl Rng, max_bars: usize, span: i32) -> Barcode {
    random_barcode(rng, max_bars, 1, span, 0.0)
}

/// Barcode with every bar contained in a bar of `b`, obtained by
/// trimming a random subset of the bars of `b` by up to half a unit.
pub fn random_sub_barcode(rng: &mut impl Rng, b: &Barcode) -> Barcode {
    let mut bars = Vec::new();
    for bar in b.iter() {
        if !rng.gen_bool(0.6) {
            continue;
        }
        let birth = bar.birth() + rng.gen_range(0..2) as f64 * 0.5;
        let death = bar.death() - rng.gen_range(0..2) as f64 * 0.5;
        bars.push((bar.dim, Interval::new(birth, death).unwrap_or(bar.interval)));
    }
    Barcode::new(bars)
}

/// Random injective matching whose pairs all satisfy `admissible`.
pub fn random_matching(
    rng: &mut impl Rng,
    a: &Arc<Barcode>,
    b: &Arc<Barcode>,
    admissible: impl Fn(&Bar, &Bar) -> bool,
) -> Matching {
    let mut used = vec![false; b.len()];
    let mut pairs = Vec::new();
    for x in a.iter() {
        if !rng.gen_bool(0.8) {
            continue;
        }
        let options: Vec<usize> = (0..b.len())
            .filter(|&j| !used[j] && x.dim == b.bars()[j].dim && admissible(x, &b.bars()[j]))
            .collect();
        if options.is_empty() {
            continue;
        }
        let j = options[rng.gen_range(0..options.len())];
        used[j] = true;
        pairs.push((x.id, b.bars()[j].id));
    }
    Matching::new(a.clone(), b.clone(), pairs).unwrap()
}

/// Complex on at most `max_vertices` vertices, generated by a few random
/// simplices of dimension at most `max_dim`.
pub fn random_complex(rng: &mut impl Rng, max_vertices: usize, max_dim: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let generators = rng.gen_range(1..=n);
    let mut simplices: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for _ in 0..generators {
        let size = rng.gen_range(2..=(max_dim + 1).min(n).max(2)).min(n);
        let mut s: Vec<usize> = rand::seq::index::sample(rng, n, size).into_vec();
        s.sort_unstable();
        simplices.push(s);
    }
    SimplicialComplex::from_simplices(simplices).unwrap()
}

/// Vertex values in `{0, 0.5, ..., span/2}`.
pub fn random_values(rng: &mut impl Rng, k: &SimplicialComplex, span: i32) -> VertexFunction {
    VertexFunction::new(
        k.vertices()
            .into_iter()
            .map(|v| (v, rng.gen_range(0..=span) as f64 * 0.5)),
    )
}

/// `values + extra` with `extra >= 0` drawn per vertex.
pub fn raise(rng: &mut impl Rng, f: &VertexFunction, span: i32) -> VertexFunction {
    VertexFunction::new(f.iter().map(|(v, x)| (v, x + rng.gen_range(0..=span) as f64 * 0.5)))
}

/// Random `(g, f, l)` with `g >= f >= l` vertexwise.
pub fn random_triple(
    rng: &mut impl Rng,
    k: &SimplicialComplex,
) -> (VertexFunction, VertexFunction, VertexFunction) {
    let l = random_values(rng, k, 6);
    let f = raise(rng, &l, 3);
    let g = raise(rng, &f, 3);
    (g, f, l)
}

/// Proptest strategy for barcodes with integer endpoints in `0..=span`.
pub fn barcode_strategy(max_bars: usize, dims: usize, span: i32) -> impl Strategy<Value = Arc<Barcode>> {
    prop::collection::vec(
        (0..dims, 0..span, 1..=span, prop::bool::weighted(0.15)),
        0..=max_bars,
    )
    .prop_map(move |raw| {
        Arc::new(Barcode::new(raw.into_iter().map(|(dim, b, len, inf)| {
            let interval = if inf {
                Interval::infinite(b as f64).unwrap()
            } else {
                Interval::new(b as f64, (b + len).min(span + 1) as f64).unwrap()
            };
            (dim, interval)
        })))
    })
}

pub fn finite_barcode_strategy(max_bars: usize, span: i32) -> impl Strategy<Value = Arc<Barcode>> {
    prop::collection::vec((0..span, 1..=span), 0..=max_bars).prop_map(|raw| {
        Arc::new(Barcode::new(raw.into_iter().map(|(b, len)| {
            (0, Interval::new(b as f64, (b + len) as f64).unwrap())
        })))
    })
}
