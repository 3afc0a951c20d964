//! Exact Vertex Cover / Independent Set through bipartite reductions, and the
//! hybrid solver over decompositions mixing bounded-treewidth and bipartite
//! pieces.

mod bipartite;
mod flow;
mod hybrid;

pub use bipartite::{bip_weighted_is, bip_weighted_vc, check_sides, max_bipartite_matching, sides_of, Sides};
pub use flow::{FlowNetwork, MinCut};
pub use hybrid::{hybrid_solve, hybrid_solve_with, Piece, PieceDecomposition, PieceKind, BOUNDARY_CAP};
