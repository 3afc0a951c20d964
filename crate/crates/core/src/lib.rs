//! Optimisation on sparse graph classes: layered approximation, dynamic
//! programming over tree decompositions, vertex cover kernels with regime
//! dispatch, bipartite and piecewise exact solvers, and exact minor search.
//! Every solver is cross-checked against the exhaustive routines in
//! [`oracle`].

pub mod baker;
pub mod bench;
pub mod corpus;
pub mod dp;
pub mod error;
pub mod exec;
pub mod gnc;
pub mod graph;
pub mod io;
pub mod minor;
pub mod oddminor;
pub mod oracle;
pub mod treedec;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::{EdgeWeights, Graph, GraphSpec, LevelMap, TwoColoring, Vertex, VertexWeights, WeightMap};
