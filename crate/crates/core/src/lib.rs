pub mod catalog;
pub mod cayley;
pub mod cli;
pub mod criteria;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod sl2;
pub mod theta;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/lie-algebras.md")]
    mod lie_algebras {}
    #[doc = include_str!("../../../book/src/symmetric-pairs.md")]
    mod symmetric_pairs {}
    #[doc = include_str!("../../../book/src/sl2-triples.md")]
    mod sl2_triples {}
    #[doc = include_str!("../../../book/src/criteria.md")]
    mod criteria {}
    #[doc = include_str!("../../../book/src/cayley.md")]
    mod cayley {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
