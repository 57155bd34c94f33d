//! Laplacian permanents of trees and unicyclic graphs.
//!
//! The crate is `no_std` with `alloc`. It provides an undirected simple
//! [`Graph`], exact permanent engines, named graph families, the three
//! edge-grafting moves, closed-form permanent formulas, isomorphism-free
//! enumeration of trees and bipartite unicyclic graphs, and checks of the
//! extremal results built from those pieces.

#![no_std]

extern crate alloc;

pub mod canon;
pub mod charpoly;
pub mod closed_forms;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod matrix;
pub mod permanent;
pub mod transforms;
pub mod verify;

pub use canon::{canonical_form, canonical_graph, is_isomorphic};
pub use charpoly::{char_poly, dominance_compare, spanning_tree_count, CharPoly, Dominance};
pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, GraphKind};
pub use matrix::{laplacian, SquareMatrix};
pub use permanent::laplacian_permanent;
