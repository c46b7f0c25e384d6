//! Finite-model workbench for pseudo equality algebras: axiom checking,
//! classification, translations to pseudo BCK-meet-semilattices, deductive
//! systems and quotients, exact rational cones of measures and valuations,
//! internal states, and isomorph-free model search.

pub mod algebra;
pub mod cones;
pub mod dd;
pub mod dedsys;
pub mod cli;
pub mod error;
pub mod fileformat;
pub mod report;
pub mod search;
pub mod states;
pub mod translate;
