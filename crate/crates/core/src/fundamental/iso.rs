use alloc::vec::Vec;

use super::balanced::{relative_tensor, RelativeTensor};
use super::hom::{morphism_report, HomKind, Structure};
use super::projection::{diamond_prime, p_maps};
use crate::coinvariants::{acoinvariants, coinvariants, GradedSubspaceFamily};
use crate::hopf::HopfGCoalgebra;
use crate::linalg::{permute_factors, Matrix};
use crate::poisson::{ColinearUnitMap, ComodulePoissonAlgebra, PoissonHopfModule};
use crate::report::{Report, Witness};
use crate::Error;

/// Where the inverse of `Φ` came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InverseSource {
    /// `Ψ_α(m) = φ_α(m_(1,α)) ⊗ p^M_α(m_(0,e))`.
    Formula,
    /// `p^M_α` leaves `M^{AcoH}_α`, so `Ψ` is undefined; `Φ` was inverted directly.
    ExactInversion,
    /// Neither route produced an inverse.
    None,
}

/// The hypotheses under which `Φ` is guaranteed to be an isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoFlags {
    pub phi_algebra_map: bool,
    pub phi_central: bool,
    /// `⋄′` vanishes on `M^{coH}`.
    pub diamond_trivial_on_module: bool,
    /// `⋄′` vanishes on `A^{coH}`.
    pub diamond_trivial_on_algebra: bool,
}

impl IsoFlags {
    pub fn all(&self) -> bool {
        self.phi_algebra_map
            && self.phi_central
            && self.diamond_trivial_on_module
            && self.diamond_trivial_on_algebra
    }
}

/// `Φ: A ⊗_B M^{AcoH} → M`, its inverse when one exists, and every check
/// performed along the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCertificate {
    pub tensor_dims: Vec<usize>,
    pub module_dims: Vec<usize>,
    pub forward: Vec<Matrix>,
    pub inverse: Option<Vec<Matrix>>,
    pub inverse_source: InverseSource,
    pub flags: IsoFlags,
    pub hypotheses_hold: bool,
    /// `Φ` is A-linear, Lie A-linear and colinear.
    pub morphism: bool,
    /// Both composites are identities.
    pub iso_holds: bool,
    pub report: Report,
}

/// `Ψ` from the formula, in the quotient coordinates of `A ⊗_B M^{AcoH}`;
/// `None` when some `p^M_α` leaves `M^{AcoH}_α`.
fn psi_formula(
    rt: &RelativeTensor,
    m: &PoissonHopfModule,
    phi: &ColinearUnitMap,
    h: &HopfGCoalgebra,
    ps: &[Matrix],
) -> Option<Vec<Matrix>> {
    let g = h.group();
    let e = g.identity();
    let me = m.dim(e);
    g.elements()
        .map(|al| {
            let w = rt.acoinvariants.get(al);
            let coords = w.coordinate_matrix(&ps[al])?;
            let swapped = m
                .rho(e, al)
                .permute_rows(&permute_factors(&[me, h.dim(al)], &[1, 0]));
            let lifted = phi.get(al).kron(&coords).compose(&swapped);
            Some(rt.tensor.quotients[al].projector.compose(&lifted))
        })
        .collect()
}

fn compare_acoinvariants(
    m: &PoissonHopfModule,
    w: &GradedSubspaceFamily,
    h: &HopfGCoalgebra,
) -> Result<Report, Error> {
    let co = coinvariants(&m.coaction, &m.dims, h)?;
    let mut r = Report::new();
    for al in h.group().elements() {
        let (x, y) = (w.get(al), co.per_degree.get(al));
        let missing = x.membership_matrix().compose(&y.basis_matrix());
        r.vanishes(
            "iso.acoinvariants_equal_coinvariants",
            &[al],
            &missing,
            &[y.dim()],
        );
    }
    Ok(r)
}

/// `M^{AcoH} = M^{coH}` whenever `φ` is an algebra map and `⋄′` vanishes on
/// `M^{coH}`; skipped otherwise.
pub fn check_acoinvariants_equal_coinvariants(
    m: &PoissonHopfModule,
    a: &ComodulePoissonAlgebra,
    phi: &ColinearUnitMap,
    h: &HopfGCoalgebra,
) -> Result<Report, Error> {
    if phi.flags(h, a).is_algebra_map && diamond_prime(m, a, phi, h)?.0.is_trivial() {
        compare_acoinvariants(m, &acoinvariants(m, a, h)?, h)
    } else {
        let mut r = Report::new();
        r.skip(
            "iso.acoinvariants_equal_coinvariants",
            "phi is not an algebra map or diamond-prime is nontrivial on M",
        );
        Ok(r)
    }
}

pub fn fundamental_iso(
    m: &PoissonHopfModule,
    a: &ComodulePoissonAlgebra,
    phi: &ColinearUnitMap,
    h: &HopfGCoalgebra,
) -> Result<IsoCertificate, Error> {
    let g = h.group();
    let a_dims = a.dims();
    let rt = relative_tensor(m, a, h)?;
    let mut r = rt.tensor.report.clone();

    let mut forward = Vec::new();
    for al in g.elements() {
        let u = rt.acoinvariants.get(al).basis_matrix();
        let lift = m.act[al].compose(&Matrix::identity(a.dim(al)).kron(&u));
        let rel = &rt.tensor.relations[al];
        super::certify(
            &mut r,
            "iso.forward_well_defined",
            &[al],
            &lift.compose(&rel.basis_matrix()),
            &[rel.dim()],
            "fundamental map",
            al,
        )?;
        forward.push(rt.multiplication(m, a, al));
    }
    let morph = morphism_report(
        "iso.forward",
        &Structure::hopf_module(&rt.tensor.module, a_dims),
        &Structure::hopf_module(m, a_dims),
        &forward,
        HomKind::POISSON_HOPF,
        h,
    )?;
    let morphism = morph.passed();
    r.extend(morph);

    let phi_flags = phi.flags(h, a);
    let (dm, _) = diamond_prime(m, a, phi, h)?;
    let (da, _) = diamond_prime(&PoissonHopfModule::regular(a), a, phi, h)?;
    let flags = IsoFlags {
        phi_algebra_map: phi_flags.is_algebra_map,
        phi_central: phi_flags.lands_in_center,
        diamond_trivial_on_module: dm.is_trivial(),
        diamond_trivial_on_algebra: da.is_trivial(),
    };
    r.flag("iso.hypothesis.phi_algebra_map", &[], flags.phi_algebra_map);
    r.flag("iso.hypothesis.phi_central", &[], flags.phi_central);
    r.flag(
        "iso.hypothesis.diamond_trivial_on_module",
        &[],
        flags.diamond_trivial_on_module,
    );
    r.flag(
        "iso.hypothesis.diamond_trivial_on_algebra",
        &[],
        flags.diamond_trivial_on_algebra,
    );

    if flags.phi_algebra_map && flags.diamond_trivial_on_module {
        r.extend(compare_acoinvariants(m, &rt.acoinvariants, h)?);
    } else {
        r.skip(
            "iso.acoinvariants_equal_coinvariants",
            "phi is not an algebra map or diamond-prime is nontrivial on M",
        );
    }

    let ps = p_maps(m, phi, h)?;
    let (inverse, inverse_source) = match psi_formula(&rt, m, phi, h, &ps) {
        Some(psi) => (Some(psi), InverseSource::Formula),
        None => {
            let inv: Option<Vec<Matrix>> = forward.iter().map(Matrix::inverse).collect();
            match inv {
                Some(inv) => (Some(inv), InverseSource::ExactInversion),
                None => (None, InverseSource::None),
            }
        }
    };
    r.flag(
        "iso.inverse_from_formula",
        &[],
        inverse_source == InverseSource::Formula,
    );
    let mut iso_holds = inverse.is_some();
    match &inverse {
        Some(inv) => {
            for al in g.elements() {
                let (q, d) = (rt.tensor.module.dim(al), m.dim(al));
                iso_holds &= r.law(
                    "iso.inverse_after_forward",
                    &[al],
                    &inv[al].compose(&forward[al]),
                    &Matrix::identity(q),
                    &[q],
                );
                iso_holds &= r.law(
                    "iso.forward_after_inverse",
                    &[al],
                    &forward[al].compose(&inv[al]),
                    &Matrix::identity(d),
                    &[d],
                );
            }
        }
        None => r.fail(
            "iso.invertible",
            &[],
            Witness {
                basis: Vec::new(),
                residual: Vec::new(),
            },
        ),
    }
    Ok(IsoCertificate {
        tensor_dims: rt.tensor.module.dims.clone(),
        module_dims: m.dims.clone(),
        forward,
        inverse,
        inverse_source,
        flags,
        hypotheses_hold: flags.all(),
        morphism,
        iso_holds,
        report: r,
    })
}
