//! Exact Erdős–Ko–Rado checks for concrete permutation groups.
//!
//! A group is enumerated ([`group`]), turned into its derangement graph
//! ([`dgraph`]) and searched exactly ([`solver`]). [`ekr::check_ekr`]
//! combines these into a report; [`witness`] builds explicit refuting sets,
//! and [`report`] and [`spec`] define the text formats used by the command
//! line.
//!
//! ```
//! use ekrlab::ekr::{check_ekr, EkrOptions, EkrVerdict};
//! use ekrlab::group::young_subgroup;
//!
//! let g = young_subgroup(&[3, 2])?;
//! assert_eq!(check_ekr(&g, &EkrOptions::default())?.ekr, EkrVerdict::Yes);
//! # Ok::<(), ekrlab::Error>(())
//! ```

pub mod bitset;
pub mod dgraph;
pub mod ekr;
pub mod error;
pub mod group;
pub mod perm;
pub mod report;
pub mod solver;
pub mod spec;
pub mod witness;

pub use error::{Error, Result};
pub use perm::Permutation;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/derangement-graphs.md")]
    mod derangement_graphs {}
    #[doc = include_str!("../../../book/src/solver.md")]
    mod solver {}
    #[doc = include_str!("../../../book/src/ekr.md")]
    mod ekr {}
    #[doc = include_str!("../../../book/src/witnesses.md")]
    mod witnesses {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
