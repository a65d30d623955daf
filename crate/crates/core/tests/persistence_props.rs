mod common;

use common::*;
use subbar::complex::check_bounds;
use subbar::oracle::{rank_invariant_oracle, sublevel_betti};
use subbar::{
    factorization_bundle, image_persistence, is_subbarcode, persistence, sublevel_persistence,
    Barcode, Filtration, SimplicialComplex, TieBreak, VertexFunction,
};

fn alive_at(b: &Barcode, dim: usize, t: f64) -> usize {
    b.in_dim(dim).filter(|bar| bar.interval.contains_point(t)).count()
}

fn critical_values(k: &SimplicialComplex, f: &VertexFunction) -> Vec<f64> {
    let mut ts: Vec<f64> = k.simplices().iter().map(|s| f.simplex_value(s).unwrap()).collect();
    ts.sort_by(f64::total_cmp);
    ts.dedup();
    ts
}

#[test]
fn image_matches_rank_invariant() {
    let mut rng = rng(11);
    for _ in 0..300 {
        let k = random_complex(&mut rng, 9, 3);
        let l = random_values(&mut rng, &k, 6);
        let g = raise(&mut rng, &l, 4);
        let dim = k.dimension();
        assert_eq!(
            image_persistence(&k, &g, &l, dim).unwrap().multiset(),
            rank_invariant_oracle(&k, &g, &l, dim).unwrap().multiset(),
            "complex {:?}",
            k.simplices()
        );
    }
}

#[test]
fn betti_and_euler_at_critical_values() {
    let mut rng = rng(12);
    for _ in 0..200 {
        let k = random_complex(&mut rng, 10, 3);
        let f = random_values(&mut rng, &k, 8);
        let top = k.dimension();
        let b = sublevel_persistence(&k, &f, top).unwrap();
        for t in critical_values(&k, &f) {
            let mut euler_bars = 0i64;
            let mut euler_cells = 0i64;
            for d in 0..=top {
                let alive = alive_at(&b, d, t);
                assert_eq!(alive, sublevel_betti(&k, &f, t, d).unwrap());
                let cells = k
                    .of_dim(d)
                    .filter(|&s| f.simplex_value(k.simplex(s)).unwrap() <= t)
                    .count();
                let sign = if d % 2 == 0 { 1 } else { -1 };
                euler_bars += sign * alive as i64;
                euler_cells += sign * cells as i64;
            }
            assert_eq!(euler_bars, euler_cells);
        }
    }
}

#[test]
fn tie_break_policies_agree() {
    let mut rng = rng(13);
    for _ in 0..300 {
        let k = random_complex(&mut rng, 10, 3);
        let f = random_values(&mut rng, &k, 3);
        let a = persistence(&Filtration::new(&k, &f, TieBreak::Lexicographic).unwrap(), 3);
        let b = persistence(&Filtration::new(&k, &f, TieBreak::ReverseLexicographic).unwrap(), 3);
        assert_eq!(a, b);
    }
}

#[test]
fn filtration_respects_faces() {
    let mut rng = rng(14);
    for _ in 0..100 {
        let k = random_complex(&mut rng, 10, 3);
        let f = random_values(&mut rng, &k, 4);
        for tie in [TieBreak::Lexicographic, TieBreak::ReverseLexicographic] {
            let filt = Filtration::new(&k, &f, tie).unwrap();
            for s in 0..k.len() {
                for face in k.boundary(s) {
                    assert!(filt.position(face) < filt.position(s));
                    assert!(filt.value(face) <= filt.value(s));
                }
            }
        }
    }
}

#[test]
fn sandwiched_function_contains_the_image() {
    let mut rng = rng(15);
    for _ in 0..300 {
        let k = random_complex(&mut rng, 10, 3);
        let (g, f, l) = random_triple(&mut rng, &k);
        let top = k.dimension();
        let img = image_persistence(&k, &g, &l, top).unwrap();
        assert!(is_subbarcode(&img, &sublevel_persistence(&k, &f, top).unwrap()));
        assert!(is_subbarcode(&img, &sublevel_persistence(&k, &l, top).unwrap()));
        assert!(is_subbarcode(&img, &sublevel_persistence(&k, &g, top).unwrap()));
    }
}

#[test]
fn essential_bars_count_betti_numbers() {
    let mut rng = rng(16);
    for _ in 0..200 {
        let k = random_complex(&mut rng, 10, 3);
        let l = random_values(&mut rng, &k, 6);
        let g = raise(&mut rng, &l, 4);
        let img = image_persistence(&k, &g, &l, k.dimension()).unwrap();
        for d in 0..=k.dimension() {
            let essential = img.in_dim(d).filter(|b| b.interval.is_infinite()).count();
            assert_eq!(essential, sublevel_betti(&k, &l, f64::INFINITY, d).unwrap());
        }
    }
}

#[test]
fn bundle_needs_ordered_functions() {
    let k = SimplicialComplex::from_simplices([[0, 1], [1, 2]]).unwrap();
    let lo = VertexFunction::from_slice(&[0.0, 0.0, 0.0]);
    let hi = VertexFunction::from_slice(&[1.0, 1.0, 1.0]);
    assert!(check_bounds(&k, &hi, &lo).is_ok());
    assert!(factorization_bundle(&k, &lo, &hi, &lo, 1).is_err());
    assert!(factorization_bundle(&k, &hi, &lo, &lo, 1).is_ok());
}
