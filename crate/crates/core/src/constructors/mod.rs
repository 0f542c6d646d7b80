//! Explicit optimal covers for the two graph families.

pub mod base;
pub mod embed;
pub mod hamming;
pub mod multipartite;

pub use base::{base_cover_lookup, base_cover_table, BaseCoverTable, Family};
pub use embed::{embed_cover, SliceEmbedding};
pub use hamming::{cover_hamming, cover_hamming2, cover_hamming3};
pub use multipartite::{cover_multipartite, normalize_multipartite_cover};
