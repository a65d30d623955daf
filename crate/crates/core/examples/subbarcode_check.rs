//! Maximum sub-barcode matchings and the two distances.

use std::sync::Arc;

use subbar::distance::{bottleneck_distance, subbarcode_distance};
use subbar::{is_subbarcode, max_subbarcode_matching, Barcode};

fn main() -> subbar::Result<()> {
    let a: Arc<Barcode> = Arc::new("0 1 3\n0 2 5\n1 0 inf\n".parse()?);
    let b: Arc<Barcode> = Arc::new("0 0 4\n0 1 6\n1 0 inf\n0 7 9\n".parse()?);

    let m = max_subbarcode_matching(&a, &b);
    println!("maximum matching A -> B ({} of {} bars)", m.len(), a.len());
    for (x, y) in m.bar_pairs() {
        println!("  H{} {} -> {}", x.dim, x.interval, y.interval);
    }
    println!("A is a sub-barcode of B: {}", is_subbarcode(&a, &b));
    println!("B is a sub-barcode of A: {}", is_subbarcode(&b, &a));

    let shifted: Barcode = "0 0 2\n0 3 7\n".parse()?;
    let target: Barcode = "0 1 3\n0 2 6\n".parse()?;
    let sub = subbarcode_distance(&shifted, &target);
    let bottleneck = bottleneck_distance(&shifted, &target);
    println!("sub-barcode distance: {}", sub.value);
    print!("{}", sub.witness.to_text());
    println!("bottleneck distance: {}", bottleneck.value);
    assert!(sub.value <= bottleneck.value);
    Ok(())
}
