//! Homological product constructions for quantum CSS codes.
//!
//! The crate builds CSS codes from chain complexes over GF(2): tensor and
//! hypergraph products, fiber bundles, lifted and balanced products,
//! distance balancing, and Bravyi-Bacon-Shor sandwiches. It computes exact
//! [[n, k, d]] parameters at desk scale, audits sparsity, and estimates
//! logical error rates for lookup, belief-propagation, and small-set-flip
//! decoders under seeded i.i.d. noise.
//!
//! ```
//! use homprod::fixtures;
//! use homprod::distance::{full_distance, Side};
//!
//! let code = fixtures::surface(3);
//! assert_eq!((code.n(), code.k()), (13, 1));
//! let (_, _, d) = full_distance(&code).unwrap();
//! assert_eq!(d, Some(3));
//! ```

pub mod code;
pub mod complex;
pub mod decode;
pub mod distance;
pub mod error;
pub mod f2;
pub mod fixtures;
pub mod mc;
pub mod poly;
pub mod products;
pub mod recipe;

pub use code::CssCode;
pub use complex::ChainComplex;
pub use error::{Error, Result};
pub use f2::{F2Matrix, F2Vector};
