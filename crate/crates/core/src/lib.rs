//! Monomial algebras `K<X>/(W)` presented by antichains of Lyndon words.
//!
//! Given a finite antichain `W` of Lyndon words over an ordered alphabet, the
//! crate computes the Lyndon atoms, decides polynomial versus exponential
//! growth and, for polynomial growth, the Gelfand-Kirillov dimension, the
//! global dimension, the PBW normal basis and the Hilbert series. Anick
//! chains give the global dimension and the multigraded Betti numbers of the
//! minimal resolution of the residue field for any finite monomial antichain,
//! and the Ufnarovski graph decides growth without the Lyndon hypothesis.
//! The [`fibonacci`] module builds the extremal Fibonacci algebras `F_n`.
//!
//! ```
//! use lyndon_algebra::prelude::*;
//!
//! let w = Antichain::from_relations("xy", "xxy,xyy").unwrap();
//! assert_eq!(decide_growth(&w).unwrap(), GrowthVerdict::Polynomial { degree: 3 });
//! assert_eq!(global_dimension(&w, ChainLimits::default()).unwrap(), 3);
//! ```

pub mod algebra;
pub mod atoms;
pub mod chains;
pub mod cli;
pub mod error;
pub mod fibonacci;
pub mod report;
pub mod ufgraph;
pub mod words;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::algebra::{
        is_normal, normal_words_up_to, normal_words_with_limits, validate_lyndon_antichain,
        Antichain, EnumerationLimits, MatchStrategy, NormalWordSet,
    };
    pub use crate::atoms::{
        analyze, atoms_up_to, check_obstruction_bounds, decide_growth, gk_dim, gl_dim_poly,
        hilbert_series, lyndon_atoms, pbw_decompose, AtomSet, GrowthVerdict, GrowthWitness,
        HilbertSeries,
    };
    pub use crate::chains::{
        betti_table, enumerate_chains, global_dimension, verify_chain_properties, BettiTable,
        Chain, ChainEnumeration, ChainLimits,
    };
    pub use crate::error::{Error, Result};
    pub use crate::fibonacci::{
        extremality_check, fib_antichain, fib_atoms, fib_checks, fib_word, fib_words, FibFamily,
    };
    pub use crate::ufgraph::{build_graph, export_dot, growth_from_graph, UGraph};
    pub use crate::words::{
        cfl_factorization, is_factor, is_lyndon, lyndon_words_up_to, overlaps,
        standard_factorization, Alphabet, Letter, Multidegree, Word,
    };
}
