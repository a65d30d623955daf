//! Tests whether an unknown function `u` can be sandwiched between two
//! measured bounds `g >= u >= l`: a sandwiched `u` must have every image
//! bar contained in one of its own bars.

use subbar::matcher::max_subbarcode_matching;
use subbar::{image_persistence, sublevel_persistence, SimplicialComplex, VertexFunction};

fn report(k: &SimplicialComplex, u: &VertexFunction, g: &VertexFunction, l: &VertexFunction) -> subbar::Result<()> {
    let img = std::sync::Arc::new(image_persistence(k, g, l, 1)?);
    let b_u = std::sync::Arc::new(sublevel_persistence(k, u, 1)?);
    let m = max_subbarcode_matching(&img, &b_u);
    if m.is_total_on_left() {
        println!("consistent: every image bar fits inside a bar of u");
    } else {
        println!("falsified, unmatched image bars:");
        for id in m.unmatched_left() {
            let bar = img.get(id).unwrap();
            println!("  H{} {}", bar.dim, bar.interval);
        }
    }
    Ok(())
}

fn main() -> subbar::Result<()> {
    let k = SimplicialComplex::parse("0 1\n1 2\n2 3\n")?;
    let g = VertexFunction::from_slice(&[1.0, 4.0, 1.0, 2.0]);
    let l = VertexFunction::from_slice(&[0.0, 3.0, 0.0, 1.0]);

    let between = VertexFunction::from_slice(&[0.5, 3.5, 0.5, 1.5]);
    report(&k, &between, &g, &l)?;

    // merges the two components too early to lie between the bounds
    let flat = VertexFunction::from_slice(&[0.0, 0.5, 0.0, 1.0]);
    report(&k, &flat, &g, &l)
}
