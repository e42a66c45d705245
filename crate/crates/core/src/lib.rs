pub mod bounds;
pub mod classes;
pub mod cli;
pub mod membership;
pub mod scalar;
pub mod series;
pub mod verify;
