//! Writes an SVG of two barcodes joined by their maximum matching.

use std::sync::Arc;

use subbar::svg::render_svg;
use subbar::{max_subbarcode_matching, Barcode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a: Arc<Barcode> = Arc::new("0 1 3\n0 2 5\n1 3 inf\n".parse()?);
    let b: Arc<Barcode> = Arc::new("0 0 4\n0 1 6\n1 2 inf\n".parse()?);
    let m = max_subbarcode_matching(&a, &b);
    let svg = render_svg(&[("A", &a), ("B", &b)], Some(&m));
    let path = std::env::args().nth(1).unwrap_or_else(|| "matching.svg".into());
    std::fs::write(&path, svg)?;
    println!("wrote {path}");
    Ok(())
}
