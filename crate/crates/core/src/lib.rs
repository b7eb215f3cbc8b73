pub mod cli;
pub mod coloring;
pub mod logic;
pub mod measures;
pub mod rational;
pub mod structures;
pub mod witnesses;
