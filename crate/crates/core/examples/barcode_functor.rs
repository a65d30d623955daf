//! The barcode functor view of sub-barcodes, and a pair where a natural
//! family of injective components exists although no sub-barcode matching
//! does.

use std::sync::Arc;

use subbar::functor::{find_natural_mono, is_subbarcode_via_functor, restrict, IntervalGrid};
use subbar::{is_subbarcode, max_subbarcode_matching, Barcode};

fn show(a: &Arc<Barcode>, b: &Arc<Barcode>) -> subbar::Result<()> {
    println!("A = {}", a.to_text().trim().replace('\n', "; "));
    println!("B = {}", b.to_text().trim().replace('\n', "; "));
    println!("  sub-barcode: {}", is_subbarcode(a, b));
    println!("  via functor: {}", is_subbarcode_via_functor(a, b));
    if is_subbarcode(a, b) {
        print!("  sub-barcode matching:\n{}", max_subbarcode_matching(a, b).to_text());
    }
    // the search returns the first family it finds, which need not glue
    match find_natural_mono(a, b)? {
        Some(family) => {
            println!("  natural injective family with {} components", family.components.len());
            match family.union(a, b) {
                Ok(m) => println!("  union is a matching:\n{}", m.to_text()),
                Err(e) => println!("  union is not a matching: {e}"),
            }
        }
        None => println!("  no natural injective family"),
    }
    Ok(())
}

fn main() -> subbar::Result<()> {
    let a: Arc<Barcode> = Arc::new("0 1 2\n0 2 3\n".parse()?);
    let b: Arc<Barcode> = Arc::new("0 0 3\n0 1 4\n".parse()?);
    show(&a, &b)?;

    // both bars of A sit inside the single bar of B but never meet
    let b: Arc<Barcode> = Arc::new("0 0 3\n".parse()?);
    let grid = IntervalGrid::generate(&a, &b)?;
    println!("grid of {} intervals", grid.len());
    for i in grid.intervals() {
        let ids = |x: &Barcode| restrict(x, i).iter().map(|id| id.0).collect::<Vec<_>>();
        println!("  {i}: A {:?} B {:?}", ids(&a), ids(&b));
    }
    show(&a, &b)
}
