//! Plat presentations of links at a fixed level: braid words, Garside normal
//! forms, the Dehornoy order, plat-closure invariants, Hilden moves and the
//! budgeted exploration of Hilden double cosets.

pub mod braid;
pub mod complexity;
pub mod dehornoy;
pub mod error;
pub mod explorer;
pub mod garside;
pub mod hilden;
pub mod plat;
pub mod report;
pub mod union_find;

pub use braid::{format_word, parse_word, BraidWord, Permutation, StrandCount};
pub use complexity::{ball_enumerate, complexity_of, Ball, ComplexityFunction};
pub use dehornoy::{dehornoy_compare, dehornoy_min, handle_reduce, OrderOutcome, CONVENTION};
pub use error::{Error, Result};
pub use explorer::{
    can_plat_search, explore_cell, order_classes, Budget, CosetCell, CosetExplorer,
};
pub use garside::{normal_form, word_problem_equal, BraidElement};
pub use hilden::{hilden_generators, verify_generators};
pub use plat::{kauffman_bracket_plat, plat_signature, LaurentPoly, PlatSignature};
