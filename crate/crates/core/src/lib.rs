pub mod cli;
pub mod count;
pub mod graph;
pub mod poly;
pub mod dc;
pub mod family;
pub mod orient;
pub mod verify;
