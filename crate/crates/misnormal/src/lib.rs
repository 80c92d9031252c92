//! Host-side companion to `misnormal-core`: file formats, wall-clock
//! budgets, report envelopes, and the corpus runner used by the CLI.

pub mod budget;
pub mod edgelist;
pub mod graph6;
pub mod input;
pub mod report;
pub mod runner;
