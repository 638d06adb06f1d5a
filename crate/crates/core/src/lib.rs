//! Alternating permutations with a forbidden pattern, words over {1, 2, 3},
//! and standard Young tableaux, tied together by explicit bijections.
//!
//! The crate has five parts:
//!
//! - [`perm`]: permutations in one-line notation, the up-down and down-up
//!   zigzag classes, pattern containment, the marker set `A`, the prefix
//!   compositions behind the recursive encodings, and an exhaustive
//!   enumerator of pattern-avoiding zigzag permutations.
//! - [`word`]: words over {1, 2, 3}, letter-count types, initial and final
//!   runs, the marker set `B`, the plain/skew/shifted ballot membership
//!   tests, and the reversed complement.
//! - [`tableau`]: ordinary and shifted shapes and standard tableaux, the
//!   row-reading correspondence with words, exhaustive generation, and exact
//!   hook-type counting with big integers.
//! - [`bijection`]: the six maps between 4123-avoiding alternating
//!   permutations and words or tableaux, each with its exact inverse.
//! - [`counting`]: closed-form counts, brute-force cross-checks, and
//!   verification reports that test every identity through independent
//!   routes.
//!
//! Everything is a pure function of immutable values and safe to call from
//! multiple threads.

pub mod bijection;
pub mod counting;
pub mod error;
pub mod perm;
pub mod tableau;
pub mod word;

pub use bijection::{
    delta, delta_inverse, gamma, gamma_inverse, phi, phi_bar, phi_bar_inverse, phi_inverse, psi,
    psi_bar, psi_bar_inverse, psi_inverse,
};
pub use counting::{
    brute_count, brute_count_with_limit, formula_even_1234, formula_odd_1234, verify_all,
    verify_all_with_limit, verify_bijections, verify_bijections_with_limit, verify_theorems,
    verify_theorems_with_limit, CountReport,
};
pub use error::{Error, Result};
pub use num_bigint::BigUint;
pub use perm::{
    enumerate_avoiders, enumerate_avoiders_with_limit, for_each_avoider,
    for_each_avoider_with_limit, AlternationClass, Permutation, StatSet, DEFAULT_LENGTH_LIMIT,
};
pub use tableau::{
    count_shifted_syt, count_syt, enumerate_tableaux, enumerate_tableaux_with_limit, Shape,
    ShapeKind, Tableau, DEFAULT_CELL_LIMIT,
};
pub use word::{Word, WordType};
