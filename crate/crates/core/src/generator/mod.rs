//! Corpus generation: canonical forms, exhaustive embedding search of small
//! graphs and growth of quadrangulations by vertex splitting.

mod canonical;
mod grow;
mod search;

pub use canonical::{canonical_form, CanonicalForm, ParseCanonicalError};
pub use grow::{
    children, default_seeds, enumerate_o1ppg, face_subdivision, grow_quadrangulations,
    hemicube_seed, k34_seeds, o1ppg_from_corpus, vertex_split, CorpusMember, MAX_ORDER,
};
pub use search::{exhaustive_small_search, SMALL_SEARCH_MAX_EDGES};

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("graph has {edges} edges, search limit is {limit}")]
    TooLarge { edges: usize, limit: usize },
    #[error("graph is empty or disconnected")]
    Disconnected,
    #[error("order bound {n_max} exceeds {limit}")]
    OrderTooLarge { n_max: usize, limit: usize },
}
