//! Reference computations by dense linear algebra over GF(2).
//!
//! [`rank_invariant_oracle`] recovers the image barcode from the ranks
//! `r(i, j)` of `H_k(G(t_i)) → H_k(L(t_j))` by inclusion–exclusion, and
//! [`sublevel_betti`] computes Betti numbers from boundary ranks. Both are
//! cubic and meant for small complexes.

use crate::barcode::Barcode;
use crate::complex::{build_filtration, check_bounds, SimplicialComplex, VertexFunction};
use crate::error::{Error, Result};
use crate::interval::Interval;

/// Largest complex accepted by [`rank_invariant_oracle`].
pub const ORACLE_LIMIT: usize = 200;

/// A dense GF(2) vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = BitVec::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Index of the highest set bit.
    pub fn leading(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
    }
}

/// Incrementally built echelon basis of a subspace.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    by_leading: std::collections::BTreeMap<usize, BitVec>,
}

impl EchelonBasis {
    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        while let Some(lead) = v.leading() {
            match self.by_leading.get(&lead) {
                Some(b) => v.xor_assign(b),
                None => {
                    self.by_leading.insert(lead, v);
                    return true;
                }
            }
        }
        false
    }

    pub fn dim(&self) -> usize {
        self.by_leading.len()
    }
}

/// Rank of a set of vectors.
pub fn rank<'a>(vectors: impl IntoIterator<Item = &'a BitVec>) -> usize {
    let mut basis = EchelonBasis::default();
    for v in vectors {
        basis.insert(v.clone());
    }
    basis.dim()
}

/// A basis of the kernel of the linear map sending the `i`-th standard
/// basis vector of `GF(2)^n` to `images[i]`.
pub fn kernel_basis(images: &[BitVec]) -> Vec<BitVec> {
    let n = images.len();
    // reduced image together with the combination of inputs producing it
    let mut pivots: std::collections::BTreeMap<usize, (BitVec, BitVec)> = Default::default();
    let mut kernel = Vec::new();
    for (i, image) in images.iter().enumerate() {
        let mut v = image.clone();
        let mut combo = BitVec::from_ones(n, [i]);
        loop {
            match v.leading() {
                None => {
                    kernel.push(combo);
                    break;
                }
                Some(lead) => match pivots.get(&lead) {
                    Some((pv, pc)) => {
                        v.xor_assign(pv);
                        combo.xor_assign(pc);
                    }
                    None => {
                        pivots.insert(lead, (v, combo));
                        break;
                    }
                },
            }
        }
    }
    kernel
}

/// Simplex indices of each dimension and the position of every simplex in
/// its dimension's list.
struct Chains<'a> {
    k: &'a SimplicialComplex,
    local: Vec<usize>,
}

impl<'a> Chains<'a> {
    fn new(k: &'a SimplicialComplex) -> Self {
        let mut local = vec![0; k.len()];
        for d in 0..=k.dimension() {
            for (i, s) in k.of_dim(d).enumerate() {
                local[s] = i;
            }
        }
        Chains { k, local }
    }

    fn count(&self, dim: usize) -> usize {
        self.k.of_dim(dim).len()
    }

    /// Boundary of a `dim`-simplex as a vector over the `(dim-1)`-simplices.
    fn boundary(&self, simplex: usize) -> BitVec {
        let dim = self.k.dim_of(simplex);
        let n = if dim == 0 { 0 } else { self.count(dim - 1) };
        BitVec::from_ones(n, self.k.boundary(simplex).into_iter().map(|f| self.local[f]))
    }

    /// Cycle space of the `dim`-simplices passing `keep`.
    fn cycles(&self, dim: usize, keep: impl Fn(usize) -> bool) -> Vec<BitVec> {
        let n = self.count(dim);
        let chosen: Vec<usize> = self.k.of_dim(dim).filter(|&s| keep(s)).collect();
        let images: Vec<BitVec> = chosen.iter().map(|&s| self.boundary(s)).collect();
        kernel_basis(&images)
            .into_iter()
            .map(|combo| {
                BitVec::from_ones(
                    n,
                    (0..chosen.len()).filter(|&i| combo.get(i)).map(|i| self.local[chosen[i]]),
                )
            })
            .collect()
    }

    /// Boundaries of the `(dim+1)`-simplices passing `keep`.
    fn boundaries(&self, dim: usize, keep: impl Fn(usize) -> bool) -> Vec<BitVec> {
        self.k
            .of_dim(dim + 1)
            .filter(|&s| keep(s))
            .map(|s| self.boundary(s))
            .collect()
    }
}

/// Image barcode of `G ↪ L` for `g ≥ l`, from the rank invariant.
///
/// # Panics
///
/// Panics if inclusion–exclusion produces a negative multiplicity, which
/// cannot happen for ranks of an actual persistence module.
pub fn rank_invariant_oracle(
    k: &SimplicialComplex,
    g: &VertexFunction,
    l: &VertexFunction,
    max_dim: usize,
) -> Result<Barcode> {
    if k.len() > ORACLE_LIMIT {
        return Err(Error::SizeLimit {
            size: k.len(),
            limit: ORACLE_LIMIT,
        });
    }
    check_bounds(k, g, l)?;
    let gf = build_filtration(k, g)?;
    let lf = build_filtration(k, l)?;
    let mut ts: Vec<f64> = (0..k.len()).flat_map(|s| [gf.value(s), lf.value(s)]).collect();
    ts.sort_by(f64::total_cmp);
    ts.dedup();
    let m = ts.len();
    let chains = Chains::new(k);

    let mut bars = Vec::new();
    for dim in 0..=max_dim.min(k.dimension()) {
        // r[i][j] with 1-based indices; row and column 0 are zero
        let mut r = vec![vec![0i64; m + 1]; m + 1];
        let z: Vec<Vec<BitVec>> = ts
            .iter()
            .map(|&t| chains.cycles(dim, |s| gf.value(s) <= t))
            .collect();
        for j in 1..=m {
            let b = chains.boundaries(dim, |s| lf.value(s) <= ts[j - 1]);
            let mut basis = EchelonBasis::default();
            for v in &b {
                basis.insert(v.clone());
            }
            let dim_b = basis.dim();
            for i in 1..=j {
                let mut sum = basis.clone();
                for v in &z[i - 1] {
                    sum.insert(v.clone());
                }
                r[i][j] = (sum.dim() - dim_b) as i64;
            }
        }
        for i in 1..=m {
            for j in i + 1..=m {
                let mult = r[i][j - 1] - r[i - 1][j - 1] - r[i][j] + r[i - 1][j];
                assert!(mult >= 0, "negative multiplicity {mult} for [{}, {})", ts[i - 1], ts[j - 1]);
                let bar = Interval::new(ts[i - 1], ts[j - 1]).expect("t_i < t_j");
                bars.extend(std::iter::repeat_n((dim, bar), mult as usize));
            }
            let mult = r[i][m] - r[i - 1][m];
            assert!(mult >= 0, "negative multiplicity {mult} for [{}, inf)", ts[i - 1]);
            let bar = Interval::infinite(ts[i - 1]).expect("finite birth");
            bars.extend(std::iter::repeat_n((dim, bar), mult as usize));
        }
    }
    Ok(Barcode::canonical(bars))
}

/// Betti number `β_dim` of the sublevel complex `{σ : f(σ) ≤ t}`, as
/// `#simplices − rank ∂_dim − rank ∂_{dim+1}`.
pub fn sublevel_betti(k: &SimplicialComplex, f: &VertexFunction, t: f64, dim: usize) -> Result<usize> {
    let values = k
        .simplices()
        .iter()
        .map(|s| f.simplex_value(s))
        .collect::<Result<Vec<f64>>>()?;
    let chains = Chains::new(k);
    let alive = |s: usize| values[s] <= t;
    let n = k.of_dim(dim).filter(|&s| alive(s)).count();
    let down: Vec<BitVec> = if dim == 0 {
        Vec::new()
    } else {
        k.of_dim(dim).filter(|&s| alive(s)).map(|s| chains.boundary(s)).collect()
    };
    let up = chains.boundaries(dim, alive);
    Ok(n - rank(&down) - rank(&up))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::persistence::{image_persistence, sublevel_persistence};

    const INF: f64 = f64::INFINITY;

    fn path3() -> SimplicialComplex {
        SimplicialComplex::from_simplices([[0, 1], [1, 2]]).unwrap()
    }

    fn vf(values: &[f64]) -> VertexFunction {
        VertexFunction::from_slice(values)
    }

    #[test]
    fn bitvec_basics() {
        let mut v = BitVec::from_ones(130, [0, 64, 129]);
        assert_eq!(v.leading(), Some(129));
        v.flip(129);
        assert_eq!(v.leading(), Some(64));
        assert!(v.get(0) && !v.get(1));
        assert_eq!(BitVec::zeros(10).leading(), None);
    }

    #[test]
    fn rank_and_kernel() {
        let a = BitVec::from_ones(3, [0, 1]);
        let b = BitVec::from_ones(3, [1, 2]);
        let c = BitVec::from_ones(3, [0, 2]);
        assert_eq!(rank([&a, &b, &c]), 2);
        let ker = kernel_basis(&[a, b, c]);
        assert_eq!(ker, vec![BitVec::from_ones(3, [0, 1, 2])]);
    }

    #[test]
    fn identity_inclusion() {
        let f = vf(&[0.0, 2.0, 1.0]);
        let b = rank_invariant_oracle(&path3(), &f, &f, 1).unwrap();
        assert_eq!(b.multiset(), vec![(0, 0.0, INF), (0, 1.0, 2.0)]);
    }

    #[test]
    fn merged_components() {
        let b = rank_invariant_oracle(&path3(), &vf(&[0.0, 1.0, 0.0]), &vf(&[0.0; 3]), 1).unwrap();
        assert_eq!(b.multiset(), vec![(0, 0.0, INF)]);
    }

    #[test]
    fn agrees_on_a_filled_square() {
        let k = SimplicialComplex::from_simplices([vec![0, 1, 2], vec![0, 2, 3], vec![3, 4], vec![1, 4]]).unwrap();
        let g = vf(&[3.0, 1.0, 4.0, 2.0, 5.0]);
        let l = vf(&[1.0, 0.0, 2.0, 2.0, 1.0]);
        assert_eq!(
            rank_invariant_oracle(&k, &g, &l, 2).unwrap(),
            image_persistence(&k, &g, &l, 2).unwrap()
        );
    }

    #[test]
    fn size_limit() {
        let k = SimplicialComplex::from_simplices((0..201).map(|v| [v])).unwrap();
        let f = VertexFunction::new((0..201).map(|v| (v, 0.0)));
        assert!(matches!(
            rank_invariant_oracle(&k, &f, &f, 0),
            Err(Error::SizeLimit { size: 201, .. })
        ));
    }

    #[test]
    fn betti_of_circle() {
        let k = SimplicialComplex::from_simplices([[0, 1], [1, 2], [0, 2]]).unwrap();
        let f = vf(&[0.0, 1.0, 2.0]);
        assert_eq!(sublevel_betti(&k, &f, 1.0, 0).unwrap(), 1);
        assert_eq!(sublevel_betti(&k, &f, 2.0, 1).unwrap(), 1);
        assert_eq!(sublevel_betti(&k, &f, 1.5, 1).unwrap(), 0);
        let p = sublevel_persistence(&k, &f, 1).unwrap();
        assert_eq!(p.multiset(), vec![(0, 0.0, INF), (1, 2.0, INF)]);
    }
}
