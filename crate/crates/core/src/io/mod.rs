//! Text formats: `.mlx` structures, `.mla` algebras, DOT diagrams and
//! JSON reports.

pub mod dot;
pub mod mla;
pub mod mlx;
pub mod report;
