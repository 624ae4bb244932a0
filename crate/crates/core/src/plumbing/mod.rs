//! Plumbing graphs, their intersection forms, and the homology of the
//! boundary 3-manifold.
//!
//! For a tree of genus-0 vertices, `H₁` of the boundary is the cokernel of the
//! intersection matrix, so the Smith normal form gives it directly.

pub mod graph;
pub mod matrix;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use graph::{PlumbingGraph, Vertex};
pub use matrix::{format_group, IntMatrix, SmithForm};

use crate::error::{Error, Result};

pub fn intersection_matrix(g: &PlumbingGraph) -> IntMatrix {
    let n = g.vertex_count();
    let mut m = IntMatrix::zeros(n, n);
    for (i, v) in g.vertices().iter().enumerate() {
        m.set(i, i, BigInt::from(v.euler));
    }
    for (i, j, w) in g.edges() {
        m.set(i, j, BigInt::from(w));
        m.set(j, i, BigInt::from(w));
    }
    m
}

fn require_supported(g: &PlumbingGraph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidInput("empty plumbing graph".into()));
    }
    if let Some(i) = g.vertices().iter().position(|v| v.genus > 0) {
        return Err(Error::Unsupported(format!("vertex {i} has positive genus")));
    }
    if !g.is_tree() {
        return Err(Error::Unsupported("plumbing graph is not a tree".into()));
    }
    Ok(())
}

/// First homology of the boundary for the boundary of a genus-0 tree plumbing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryHomology {
    pub smith: SmithForm,
    pub determinant: BigInt,
}

impl BoundaryHomology {
    pub fn is_homology_sphere(&self) -> bool {
        self.determinant.abs().is_one()
    }

    pub fn first_betti(&self) -> usize {
        self.smith.free_rank()
    }

    pub fn describe(&self) -> String {
        format_group(&self.smith.cokernel())
    }
}

pub fn boundary_homology(g: &PlumbingGraph) -> Result<BoundaryHomology> {
    require_supported(g)?;
    let m = intersection_matrix(g);
    let smith = m.smith_form();
    let determinant = m.determinant();
    if !determinant.is_zero() && smith.torsion_order() != determinant.abs() {
        return Err(Error::Internal(format!(
            "Smith factors multiply to {} but |det| = {}",
            smith.torsion_order(),
            determinant.abs()
        )));
    }
    Ok(BoundaryHomology { smith, determinant })
}

pub fn is_negative_definite(m: &IntMatrix) -> bool {
    m.is_negative_definite()
}

/// `b₀ − b₁ + b₂ − b₃` of the closed boundary 3-manifold, with `b₁` the free
/// rank of the cokernel and `b₂ = b₁` by Poincaré duality. Always 0.
pub fn euler_characteristic_boundary(g: &PlumbingGraph) -> Result<i64> {
    let h = boundary_homology(g)?;
    let (b0, b3) = (1i64, 1i64);
    let b1 = h.first_betti() as i64;
    let b2 = b1;
    let chi = b0 - b1 + b2 - b3;
    if chi != 0 {
        return Err(Error::Internal(format!(
            "boundary Euler characteristic {chi} is not 0"
        )));
    }
    Ok(chi)
}
