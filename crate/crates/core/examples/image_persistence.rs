//! Image persistence of a pair of lower-star filtrations and the rank
//! invariant reference computation.

use subbar::complex::check_bounds;
use subbar::oracle::rank_invariant_oracle;
use subbar::{image_persistence, sublevel_persistence, SimplicialComplex, VertexFunction};

fn main() -> subbar::Result<()> {
    let k = SimplicialComplex::parse("0 1 2\n2 3\n3 4\n4 0\n")?;
    let l = VertexFunction::from_slice(&[0.0, 1.0, 1.0, 2.0, 0.5]);
    let g = VertexFunction::from_slice(&[1.0, 1.0, 3.0, 2.0, 0.5]);

    println!("sublevel barcode of l\n{}", sublevel_persistence(&k, &l, 2)?.to_text());
    println!("sublevel barcode of g\n{}", sublevel_persistence(&k, &g, 2)?.to_text());
    let img = image_persistence(&k, &g, &l, 2)?;
    println!("image barcode\n{}", img.to_text());
    assert_eq!(img.multiset(), rank_invariant_oracle(&k, &g, &l, 2)?.multiset());

    // swapping the functions breaks the required g >= l
    match check_bounds(&k, &l, &g) {
        Ok(()) => println!("bounds hold"),
        Err(e) => println!("rejected: {e}"),
    }
    if let Err(e) = image_persistence(&k, &l, &g, 2) {
        println!("image persistence refuses too: {e}");
    }
    Ok(())
}
