//! Builds matchings by hand, composes them and reverses them.

use std::sync::Arc;

use subbar::{Barcode, BarId, Matching};

fn main() -> subbar::Result<()> {
    let a: Arc<Barcode> = Arc::new("0 1 3\n0 4 6\n".parse()?);
    let b: Arc<Barcode> = Arc::new("0 0 5\n0 3 8\n".parse()?);
    let c: Arc<Barcode> = Arc::new("0 0 1\n0 5 9\n".parse()?);

    let m = Matching::new(a.clone(), b.clone(), [(BarId(0), BarId(0)), (BarId(1), BarId(1))])?;
    let n = Matching::new(b.clone(), c.clone(), [(BarId(0), BarId(0)), (BarId(1), BarId(1))])?;
    println!("m: A -> B\n{}", m.to_text());
    println!("n: B -> C\n{}", n.to_text());
    println!("m sub-barcode matching: {}", m.is_subbarcode_matching());
    println!("m overlap matching: {}", m.is_overlap_matching());

    // pairs whose end bars do not meet are dropped and counted
    let composite = m.compose_counted(&n)?;
    println!("n . m: A -> C\n{}", composite.matching.to_text());
    println!("discarded: {}", composite.discarded);

    let back = composite.matching.reverse();
    println!("reverse: C -> A\n{}", back.to_text());
    assert_eq!(back.reverse(), composite.matching);
    Ok(())
}
