//! The constructive side: the projections `p^M_α`, the induced action `⋄′`,
//! the retraction `λ`, balanced tensor products over `B = A^{AcoH}`, the
//! fundamental isomorphism `A ⊗_B M^{AcoH} ≅ M`, morphism spaces, and the
//! adjunction between `(-)^{AcoH}` and `A ⊗_B -`.

mod balanced;
mod hom;
mod iso;
mod lambda;
mod projection;

pub use balanced::{
    relative_tensor, trivial_induction, trivial_induction_over, BalancedTensor, RelativeTensor,
    TrivialBModule,
};
pub use hom::{
    check_adjunction, check_gamma_iso, check_morphism_closure, hom_space, morphism_report, HomKind,
    MorphismSpace, Structure,
};
pub use iso::{
    check_acoinvariants_equal_coinvariants, fundamental_iso, InverseSource, IsoCertificate,
    IsoFlags,
};
pub use lambda::{lambda_map, Lambda, LambdaRoute};
pub use projection::{
    check_p_image, check_projection_identities, diamond_prime, p_map, p_maps, DiamondPrime,
};

use crate::linalg::Matrix;
use crate::report::{Report, Status};
use crate::Error;

/// Records that `m` vanishes and refuses the construction `map` otherwise.
fn certify(
    r: &mut Report,
    law: &str,
    idx: &[usize],
    m: &Matrix,
    dims: &[usize],
    map: &'static str,
    degree: usize,
) -> Result<(), Error> {
    if r.vanishes(law, idx, m, dims) {
        return Ok(());
    }
    match &r.entries.last().map(|e| &e.status) {
        Some(Status::Fail(w)) => Err(Error::IllDefined {
            map,
            degree,
            witness: w.clone(),
        }),
        _ => unreachable!("failed law without witness"),
    }
}
