//! Boggle logic puzzles played on `n x n` king's-graph boards.
//!
//! A puzzle is a list of words; solving it means recovering the board the
//! words came from, up to rotation and reflection. The crate covers
//!
//! - boards, words and the dihedral symmetries of the square ([`board`],
//!   [`dihedral`], [`paths`], [`words`]),
//! - adjacency graphs, subgraph monomorphisms, automorphisms, canonical forms
//!   and the labeling-subgraph test ([`graph`]),
//! - solving, uniqueness, minimality and the 3x3 minimal-puzzle census
//!   ([`puzzle`], [`census`]),
//! - word-overlap extremes between boards ([`extremal`]),
//! - random-word reconstruction estimates ([`stochastic`]),
//! - repeated-letter boards and their solvability ([`multiset`]),
//! - text formats, reports and reproduction runs ([`io`], [`report`],
//!   [`reproduce`]).

pub mod board;
pub mod census;
pub mod dihedral;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod multiset;
pub mod paths;
pub mod puzzle;
pub mod report;
pub mod reproduce;
pub mod stochastic;
pub mod words;

pub use board::{Board, Cell, Label, Permutation};
pub use error::{Error, Result};
pub use words::{Word, WordSet};
