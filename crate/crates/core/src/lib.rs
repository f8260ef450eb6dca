//! Exact computations for semisimple Lie algebras: root systems, Weyl
//! groups, characters, free Lie algebras and the BCH series, structure
//! constants and Lie algebra cohomology, symmetric functions, and real
//! forms via Vogan diagrams.

pub mod chars;
pub mod freelie;
pub mod liealg;
pub mod linalg;
pub mod poly;
pub mod rootsys;
pub mod selftest;
pub mod symfun;
pub mod voganforms;
pub mod weyl;
