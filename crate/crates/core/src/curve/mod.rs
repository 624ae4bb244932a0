//! Plane-curve branches and their knots.
//!
//! A branch `y = Σ cᵢ x^{eᵢ}` meets a small 3-sphere in an iterated torus knot
//! determined by its characteristic pairs. The Alexander polynomial of that
//! knot is built stage by stage from torus-knot polynomials, and the linking
//! number of two such knots is the intersection multiplicity of the branches.

pub mod branch;
pub mod knot;
pub mod meet;

pub use branch::{characteristic_pairs, CharacteristicPairs, PuiseuxBranch, PuiseuxTerm};
pub use knot::{alexander_iterated, alexander_torus_knot, cable_presentation, CablePresentation};
pub use meet::{
    intersection_multiplicity, intersection_multiplicity_with, linking_number, BivariatePolynomial,
    MeetOptions,
};
