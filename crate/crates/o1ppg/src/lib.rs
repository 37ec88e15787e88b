//! File formats, corpus directories, parallel verification campaigns and the
//! command line for [`o1ppg_core`].

pub mod campaign;
pub mod cli;
pub mod corpus;
pub mod dot;
pub mod fixtures;
pub mod format;
