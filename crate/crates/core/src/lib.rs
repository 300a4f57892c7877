pub mod builder;
pub mod colimit;
pub mod error;
pub mod homology_engine;
pub mod monoidal;
pub mod phi_global;
pub mod operands;
pub mod phi_local;
pub mod polyforms;
pub mod random;
pub mod rational;
pub mod simplicial_core;
pub mod simplicial_sets;
pub mod verify;
