//! Exact structure-constant algebra for finite Hopf group-coalgebras, comodule
//! Poisson algebras and Poisson Hopf modules.
//!
//! Every structure is a family of finite-dimensional rational vector spaces
//! indexed by a finite abelian group, with each multilinear map stored as a
//! dense matrix in fixed bases. Axioms are checked exhaustively on basis
//! tuples and reported with witnesses; the constructive maps around the
//! fundamental isomorphism `A ⊗_B M^{AcoH} ≅ M` are built and certified in
//! exact arithmetic.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod checks;
pub mod coinvariants;
pub mod error;
pub mod fixtures;
pub mod fundamental;
pub mod group;
pub mod hopf;
pub mod linalg;
pub mod poisson;
pub mod report;

pub use error::Error;
pub use group::GroupTable;
pub use hopf::{AlgebraFamily, HopfGCoalgebra};
pub use linalg::{Matrix, Scalar, Subspace};
pub use poisson::{
    Coaction, ColinearUnitMap, ComodulePoissonAlgebra, LieComodule, PoissonAlgebraFamily,
    PoissonHopfModule, PoissonModule,
};
pub use report::{CheckEntry, Report, Status, Witness};

/// The four structures a bundle may carry, in the roles they play.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub hopf: HopfGCoalgebra,
    pub algebra: Option<ComodulePoissonAlgebra>,
    pub module: Option<PoissonHopfModule>,
    pub phi: Option<ColinearUnitMap>,
}

impl Instance {
    pub fn group(&self) -> &GroupTable {
        &self.hopf.algebra.group
    }

    /// Every map has the dimensions its role requires, and every role has
    /// what it depends on.
    pub fn check_shapes(&self) -> Result<(), Error> {
        let h = &self.hopf;
        h.check_shapes()?;
        let Some(a) = &self.algebra else {
            if self.module.is_some() || self.phi.is_some() {
                return Err(Error::InvalidArgument("M and phi need an algebra A"));
            }
            return Ok(());
        };
        if a.group() != h.group() {
            return Err(Error::InvalidArgument(
                "A and H are graded by different groups",
            ));
        }
        a.poisson.check_shapes()?;
        a.coaction.check_shapes("A", a.dims(), h)?;
        if let Some(m) = &self.module {
            m.check_shapes(a.dims(), h)?;
        }
        if let Some(phi) = &self.phi {
            phi.check_shapes(h, a)?;
        }
        Ok(())
    }
}
