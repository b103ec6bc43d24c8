//! Whole-instance validation and the suite of constructive checks.
//!
//! Validation is gated: laws that presuppose a failed structure are reported
//! as skipped, so a broken input fails only where it is broken.

use alloc::vec::Vec;

use crate::coinvariants::{
    acoinvariants, base_algebra_space, check_substructures, coinvariants, poisson_annihilator,
};
use crate::fundamental::{
    check_acoinvariants_equal_coinvariants, check_adjunction, check_gamma_iso,
    check_morphism_closure, check_p_image, check_projection_identities, diamond_prime,
    fundamental_iso, lambda_map, relative_tensor, trivial_induction, IsoCertificate,
    TrivialBModule,
};
use crate::group::check_group;
use crate::hopf::{check_g_coalgebra, check_hopf_g_coalgebra};
use crate::poisson::{
    check_comodule, check_comodule_poisson_algebra, check_phi, check_poisson_family,
    check_poisson_hopf_module_laws,
};
use crate::report::Report;
use crate::{Error, Instance};

const H_LAWS: &str = "the Hopf group-coalgebra failed validation";
const A_LAWS: &str = "the algebra failed validation";

/// Every structural law of every role present in `inst`.
pub fn validate(inst: &Instance) -> Result<Report, Error> {
    let mut r = check_group(inst.group());
    if !r.passed() {
        r.skip("H", "the group table failed validation");
        return Ok(r);
    }
    let h = &inst.hopf;
    let coalg = check_g_coalgebra(h)?;
    let coalg_ok = coalg.passed();
    r.extend_prefixed("H", coalg);
    let h_ok = if coalg_ok {
        let hopf = check_hopf_g_coalgebra(h)?;
        let ok = hopf.passed();
        r.extend_prefixed("H", hopf);
        ok
    } else {
        r.skip("H.hopf", "the coalgebra laws failed");
        false
    };

    let a_ok = match &inst.algebra {
        None => false,
        Some(_) if !h_ok => {
            r.skip("A", H_LAWS);
            false
        }
        Some(a) => {
            let family = check_poisson_family(&a.poisson)?;
            let comodule = check_comodule(&a.coaction, a.dims(), h)?;
            let ok = family.passed() && comodule.passed();
            r.extend_prefixed("A", family);
            r.extend_prefixed("A", comodule);
            if ok {
                let compat = check_comodule_poisson_algebra(a, h)?;
                let ok = compat.passed();
                r.extend_prefixed("A", compat);
                ok
            } else {
                r.skip("A.comodule_poisson", "the Poisson or comodule laws failed");
                false
            }
        }
    };

    if let Some(m) = &inst.module {
        match &inst.algebra {
            Some(a) if a_ok => {
                let comodule = check_comodule(&m.coaction, &m.dims, h)?;
                let ok = comodule.passed();
                r.extend_prefixed("M", comodule);
                if ok {
                    r.extend_prefixed("M", check_poisson_hopf_module_laws(m, a, h)?);
                } else {
                    r.skip("M.hopf_module", "the comodule laws failed");
                }
            }
            _ => r.skip("M", A_LAWS),
        }
    }
    if let Some(phi) = &inst.phi {
        match &inst.algebra {
            Some(a) if a_ok => r.extend(check_phi(phi, h, a)?),
            _ => r.skip("phi", A_LAWS),
        }
    }
    Ok(r)
}

/// Dimensions of the distinguished subspaces of `M` and `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinvariantSummary {
    pub module_coinvariants: Vec<usize>,
    pub module_annihilator: Vec<usize>,
    pub module_acoinvariants: Vec<usize>,
    pub algebra_coinvariants: Vec<usize>,
    pub algebra_center: Vec<usize>,
    pub algebra_base: Vec<usize>,
}

fn parts(
    inst: &Instance,
) -> Result<(&crate::ComodulePoissonAlgebra, &crate::PoissonHopfModule), Error> {
    match (&inst.algebra, &inst.module) {
        (Some(a), Some(m)) => Ok((a, m)),
        _ => Err(Error::InvalidArgument(
            "the instance needs an algebra and a module",
        )),
    }
}

fn phi_of(inst: &Instance) -> Result<&crate::ColinearUnitMap, Error> {
    inst.phi
        .as_ref()
        .ok_or(Error::InvalidArgument("the instance needs phi"))
}

pub fn coinvariant_summary(inst: &Instance) -> Result<CoinvariantSummary, Error> {
    let h = &inst.hopf;
    let (a, m) = parts(inst)?;
    Ok(CoinvariantSummary {
        module_coinvariants: coinvariants(&m.coaction, &m.dims, h)?.per_degree.dims(),
        module_annihilator: poisson_annihilator(&m.dims, &m.lie, a.dims()).dims(),
        module_acoinvariants: acoinvariants(m, a, h)?.dims(),
        algebra_coinvariants: coinvariants(&a.coaction, a.dims(), h)?.per_degree.dims(),
        algebra_center: poisson_annihilator(a.dims(), &a.poisson.bracket, a.dims()).dims(),
        algebra_base: base_algebra_space(a, h)?.dims(),
    })
}

/// Builds `Φ` and its inverse for a validated instance.
pub fn certify_iso(inst: &Instance) -> Result<IsoCertificate, Error> {
    let (a, m) = parts(inst)?;
    fundamental_iso(m, a, phi_of(inst)?, &inst.hopf)
}

/// Runs every constructive check on `M`, `A` and `φ`: substructures, the
/// projection and its identities, `⋄′`, `λ`, `Γ`, the balanced tensor
/// products, the adjunction and closure of morphism spaces.
pub fn lemma_suite(inst: &Instance) -> Result<Report, Error> {
    let h = &inst.hopf;
    let (a, m) = parts(inst)?;
    let phi = phi_of(inst)?;
    let mut r = check_substructures(m, a, h)?;
    r.extend(check_p_image(m, phi, h)?);
    r.extend(diamond_prime(m, a, phi, h)?.1);
    r.extend(check_projection_identities(m, a, phi, h)?);
    r.extend(check_acoinvariants_equal_coinvariants(m, a, phi, h)?);
    r.extend(lambda_map(m, a, phi, h)?.1);
    r.extend(check_gamma_iso(m, &m.as_poisson_module(), a, h)?);
    r.extend(relative_tensor(m, a, h)?.tensor.report);
    let base = base_algebra_space(a, h)?;
    let b = TrivialBModule::regular(a, &base, h)?;
    r.extend(trivial_induction(&b, a, h)?.report);
    r.extend(check_adjunction(&b, m, a, h)?);
    r.extend(check_morphism_closure(m, m, a, h)?);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture, mutant, FIXTURES};

    #[test]
    fn fixtures_validate() {
        for name in FIXTURES {
            let b = fixture(name).unwrap();
            let r = validate(&b.instance).unwrap();
            assert!(r.passed(), "{name}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn mutant_fails_only_at_its_law() {
        let cases = [
            ("F1-bad-antipode", "H.hopf.antipode"),
            ("F1-bad-coaction", "M.comodule.coassociativity"),
            ("F2-leibniz", "A.poisson.leibniz"),
            ("F1-zero-counit", "H.coalgebra.counit"),
            ("F1-noncolinear-phi", "phi.colinear"),
        ];
        for (name, law) in cases {
            let r = validate(&mutant(name).unwrap()).unwrap();
            assert!(!r.passed(), "{name}");
            for f in r.failures() {
                assert!(f.law.starts_with(law), "{name}: {}", f.law);
                assert!(matches!(&f.status, crate::Status::Fail(w) if !w.residual.is_empty()));
            }
        }
    }
}
