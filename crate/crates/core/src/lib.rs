//! Sub-barcode matchings for one-parameter persistent homology.
//!
//! The crate covers three layers:
//!
//! - barcodes, matchings and their calculus ([`barcode`], [`matching`]),
//!   maximum sub-barcode matchings and distances ([`matcher`],
//!   [`distance`]), and the barcode functor view ([`functor`]);
//! - canonical (co)injections and the matchings induced by a factorization
//!   of persistence modules ([`induced`]);
//! - lower-star filtrations of simplicial complexes, persistence and image
//!   persistence over GF(2) ([`complex`], [`persistence`]), with dense
//!   reference computations in [`oracle`].
//!
//! ```
//! use subbar::{is_subbarcode, Barcode};
//!
//! let a: Barcode = "0 1 3\n".parse().unwrap();
//! let b: Barcode = "0 0 4\n0 2 inf\n".parse().unwrap();
//! assert!(is_subbarcode(&a, &b));
//! assert!(!is_subbarcode(&b, &a));
//! ```

pub mod barcode;
pub mod bipartite;
pub mod cli;
pub mod complex;
pub mod distance;
pub mod error;
pub mod functor;
pub mod induced;
pub mod interval;
pub mod matcher;
pub mod matching;
pub mod oracle;
pub mod persistence;
pub mod reduction;
pub mod svg;

pub use barcode::{Bar, BarId, Barcode};
pub use complex::{build_filtration, Filtration, SimplicialComplex, TieBreak, VertexFunction};
pub use distance::{bottleneck_distance, subbarcode_distance, DistanceResult};
pub use error::{Error, Result};
pub use induced::{
    canonical_coinjection, canonical_injection, induced_sub_matching, induced_super_matching,
    FactorizationBarcodes,
};
pub use interval::Interval;
pub use matcher::{is_subbarcode, max_subbarcode_matching};
pub use matching::Matching;
pub use persistence::{factorization_bundle, image_persistence, persistence, sublevel_persistence};
