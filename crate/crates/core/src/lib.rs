//! Weight combinatorics for the symplectic groups Sp_{2n}(2).
//!
//! The crate decides when elements of Sp_{2n}(2) have eigenvalue 1 on
//! irreducible 2-modular representations. It covers the type C_n weight
//! lattice ([`weights`]), weight sets of modules ([`reps`]), maximal tori
//! ([`tori`]), semisimple elements and their Singer indices ([`elements`]),
//! the closed-form criteria ([`criteria`]) and branching from SL_{2n}
//! ([`branching`]). Every closed form is checked against brute force in
//! [`oracle`] and [`harness`].

pub mod arith;
pub mod branching;
pub mod cli;
pub mod criteria;
pub mod elements;
pub mod harness;
pub mod oracle;
pub mod reps;
pub mod tori;
pub mod weights;
