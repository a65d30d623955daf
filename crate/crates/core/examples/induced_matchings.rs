//! Induced matchings of a factorization coming from three vertex
//! functions `g >= f >= l` on a small complex.

use subbar::{
    factorization_bundle, induced_sub_matching, induced_super_matching, SimplicialComplex,
    VertexFunction,
};

fn main() -> subbar::Result<()> {
    // a coned square: the loop of the square is born before the cone point
    let k = SimplicialComplex::parse("0 1 4\n1 2 4\n2 3 4\n0 3 4\n")?;
    let l = VertexFunction::from_slice(&[0.0, 1.0, 2.0, 1.0, 4.0]);
    let f = VertexFunction::from_slice(&[0.5, 1.5, 2.0, 1.5, 5.0]);
    let g = VertexFunction::from_slice(&[1.0, 2.0, 3.0, 1.5, 5.0]);

    let bundle = factorization_bundle(&k, &g, &f, &l, 1)?;
    println!("B_G\n{}", bundle.b_g.to_text());
    println!("B_F\n{}", bundle.b_f.to_text());

    let sub = induced_sub_matching(&bundle)?;
    println!("induced sub-barcode matching B_G -> B_F");
    for (x, y) in sub.bar_pairs() {
        println!("  H{} {} -> {}", x.dim, x.interval, y.interval);
    }
    let sup = induced_super_matching(&bundle)?;
    println!("induced super-barcode matching B_F -> B_G");
    for (x, y) in sup.bar_pairs() {
        println!("  H{} {} -> {}", x.dim, x.interval, y.interval);
    }
    assert!(sub.is_total_on_left() && sub.is_subbarcode_matching());
    Ok(())
}
