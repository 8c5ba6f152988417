// mdbook cannot run listings against a workspace crate, so every chapter is
// pulled in as module docs and `cargo test --doc` runs them.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/groups.md")]
pub mod groups {}
#[doc = include_str!("../../../book/src/rings.md")]
pub mod rings {}
#[doc = include_str!("../../../book/src/squares.md")]
pub mod squares {}
#[doc = include_str!("../../../book/src/catalog.md")]
pub mod catalog {}
#[doc = include_str!("../../../book/src/deciders.md")]
pub mod deciders {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
