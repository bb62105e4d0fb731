//! Combinatorial machinery for iterating fiber thickenings of cube complexes
//! and certifying properties of the resulting right-angled Coxeter groups.

pub mod collapse;
pub mod davis;
pub mod cubical;
pub mod error;
pub mod filtration;
pub mod gf2;
pub mod graph;
pub mod homology;
pub mod io;
pub mod lemmas;
pub mod simplicial;
pub mod thickening;
pub mod moves;
pub mod pipeline;

pub use error::{Error, Result};
pub use graph::Graph;
pub use simplicial::SimplicialComplex;
