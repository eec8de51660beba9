//! Necklaces, Lyndon words and prenecklaces with fixed content.
//!
//! The crate counts them exactly ([`counting`]), generates them in
//! lexicographic order in constant amortized time ([`generation`]), and
//! checks the Pascal-like bound
//!
//! ```text
//! N_k(n_0, ..., n_{k-1}) <= sum_i L_k(n_0, ..., n_i - 1, ..., n_{k-1})
//! ```
//!
//! through the split into stable and unstable necklaces and an injection of
//! the unstable ones into Lyndon words ([`mapping`]). A brute-force
//! [`oracle`] and the sweeps in [`verify`] back every claim with exhaustive
//! checks at small sizes.
//!
//! ```
//! use necklaces::{counting, generation::{generate, GenKind}, Content};
//!
//! let content = Content::new(vec![3, 3]).unwrap();
//! let words: Vec<String> = generate(&content, GenKind::Necklace)
//!     .unwrap()
//!     .map(|w| w.to_string())
//!     .collect();
//! assert_eq!(words, ["000111", "001011", "001101", "010101"]);
//! assert_eq!(counting::count_necklaces(&content).unwrap(), 4);
//! assert_eq!(counting::bound_rhs(&content).unwrap(), 4);
//! ```

pub mod counting;
pub mod error;
pub mod generation;
pub mod mapping;
pub mod oracle;
pub mod verify;
pub mod word;

pub use counting::BigCount;
pub use error::{Error, Result};
pub use word::{Content, Symbol, Word};
