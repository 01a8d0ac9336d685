//! Irreducible sl2 representations, their fourth exterior powers, and the
//! invariant quaternary algebra structures carried by V(n).

pub mod action;
pub mod basis;
pub mod bracket;
pub mod decompose;
pub mod structure;
