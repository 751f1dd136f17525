//! Interchangeable cost strategies, each registered under a stable name.
//!
//! Block-encoding schemes price one LCU call; product-formula schemes price
//! one Trotter step. The end-to-end engine and the CLI only see the traits,
//! so a new encoding is added by implementing one and registering it.

mod block_encoding;
mod product_formula;
mod registry;

pub use block_encoding::{
    block_encoding_registry, BlockEncodingScheme, QubitProjectorLcu, QuditFixedLcu, QuditHybridLcu,
};
pub use product_formula::{
    product_formula_registry, ProductFormulaScheme, QubitBinaryTrotter, QuditGivensTrotter,
};
pub use registry::{Named, Registry};
