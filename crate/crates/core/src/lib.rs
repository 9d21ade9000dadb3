pub mod field;
pub mod presentation;
pub mod rep;
pub mod homology;
pub mod family;
pub mod selfcheck;
