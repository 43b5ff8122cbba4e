pub mod book;
pub mod coloring;
pub mod diagpicker;
pub mod embedding;
pub mod error;
pub mod generators;
pub mod io;
pub mod optimal;
pub mod oracle;
mod pairs;
pub mod quad;
mod stnumber;
pub mod verify;

pub use embedding::{EdgeId, FaceId, OuterFace, PlaneEmbedding, VertexId};
pub use error::{Error, Result};
pub use optimal::{build_optimal, extract_quadrangulation, Diag, EdgeRef, OptimalOnePlaneGraph, RawOnePlaneGraph};
pub use quad::{validate_quadrangulation, Color, Quadrangulation, Trust};

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/embeddings.md")]
    mod embeddings {}
    #[doc = include_str!("../../../book/src/book-embedding.md")]
    mod book_embedding {}
    #[doc = include_str!("../../../book/src/picking-diagonals.md")]
    mod picking_diagonals {}
    #[doc = include_str!("../../../book/src/generators.md")]
    mod generators {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
