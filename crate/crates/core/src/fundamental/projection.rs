use alloc::vec::Vec;

use super::certify;
use crate::coinvariants::coinvariants;
use crate::hopf::HopfGCoalgebra;
use crate::linalg::{kernel, permute_factors, Matrix, Solver, Subspace};
use crate::poisson::{ColinearUnitMap, ComodulePoissonAlgebra, PoissonHopfModule};
use crate::report::Report;
use crate::Error;

/// `p^M_α(m) = φ_α(S⁻¹_α(m_(1,α⁻¹))) · m_(0,α)`, as a matrix `M_e → M_α`.
pub fn p_map(
    m: &PoissonHopfModule,
    phi: &ColinearUnitMap,
    h: &HopfGCoalgebra,
    alpha: usize,
) -> Result<Matrix, Error> {
    let g = h.group();
    let ai = g.inv(alpha);
    let s_inv = &h.antipode_inverse()?[alpha];
    let swap = permute_factors(&[m.dim(alpha), h.dim(ai)], &[1, 0]);
    let coef = phi.get(alpha).compose(s_inv);
    let spread = coef.kron(&Matrix::identity(m.dim(alpha)));
    Ok(m.act[alpha].compose(&spread.compose(&m.rho(alpha, ai).permute_rows(&swap))))
}

pub fn p_maps(
    m: &PoissonHopfModule,
    phi: &ColinearUnitMap,
    h: &HopfGCoalgebra,
) -> Result<Vec<Matrix>, Error> {
    h.group()
        .elements()
        .map(|al| p_map(m, phi, h, al))
        .collect()
}

/// The families `(p^M_α(v))_α`, `v ∈ M_e`, span exactly the coinvariants.
pub fn check_p_image(
    m: &PoissonHopfModule,
    phi: &ColinearUnitMap,
    h: &HopfGCoalgebra,
) -> Result<Report, Error> {
    let e = h.group().identity();
    let ps = p_maps(m, phi, h)?;
    let total: usize = m.dims.iter().sum();
    let refs: Vec<&Matrix> = ps.iter().collect();
    let stacked = Matrix::vstack(m.dim(e), &refs);
    let image = Subspace::column_space(&stacked);
    let co = coinvariants(&m.coaction, &m.dims, h)?;
    debug_assert_eq!(stacked.rows(), total);
    let mut r = Report::new();
    r.vanishes(
        "p_image.within_coinvariants",
        &[],
        &co.family_space.membership_matrix().compose(&stacked),
        &[m.dim(e)],
    );
    let cover = image
        .membership_matrix()
        .compose(&co.family_space.basis_matrix());
    r.vanishes(
        "p_image.covers_coinvariants",
        &[],
        &cover,
        &[co.family_space.dim()],
    );
    Ok(r)
}

/// The Lie action `a ⋄′ p^M_α(m) = p^M_α(a ⋄ m)` of `A_e` on each `M^{coH}_α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondPrime {
    /// Image of `p^M_α`.
    pub spaces: Vec<Subspace>,
    /// `A_e ⊗ W_α → W_α` in the canonical basis of `spaces[α]`.
    pub action: Vec<Matrix>,
}

impl DiamondPrime {
    pub fn is_trivial(&self) -> bool {
        self.action.iter().all(Matrix::is_zero)
    }
}

/// Builds `⋄′`, refusing it when `ker p^M_α ⊄ ker(p^M_α ∘ (a ⋄ ·))` for some
/// basis element `a`. Also certifies the Lie law and colinearity of `⋄′`.
pub fn diamond_prime(
    m: &PoissonHopfModule,
    a: &ComodulePoissonAlgebra,
    phi: &ColinearUnitMap,
    h: &HopfGCoalgebra,
) -> Result<(DiamondPrime, Report), Error> {
    let g = h.group();
    let e = g.identity();
    let (ae, me) = (a.dim(e), m.dim(e));
    let ps = p_maps(m, phi, h)?;
    let lie_e = &m.lie[e];
    let mut r = Report::new();
    let mut spaces = Vec::new();
    let mut action = Vec::new();
    for al in g.elements() {
        let p = &ps[al];
        let w = Subspace::column_space(p);
        let k = kernel(p);
        let test = p.compose(&lie_e.compose(&Matrix::identity(ae).kron(&k.basis_matrix())));
        certify(
            &mut r,
            "diamond_prime.well_defined",
            &[al],
            &test,
            &[ae, k.dim()],
            "diamond_prime",
            al,
        )?;

        let solver = Solver::new(p);
        let section = solver
            .solve_matrix(&w.basis_matrix())
            .expect("image basis lies in the image");
        let moved = p.compose(&lie_e.compose(&Matrix::identity(ae).kron(&section)));
        let coords = w.coordinate_matrix(&moved).expect("p lands in its image");
        spaces.push(w);
        action.push(coords);
    }

    for al in g.elements() {
        let dw = spaces[al].dim();
        let d = &action[al];
        let nested = d.compose(&Matrix::identity(ae).kron(d));
        let flip = permute_factors(&[ae, ae, dw], &[1, 0, 2]);
        let lhs = d.compose(&a.bracket(e).kron(&Matrix::identity(dw)));
        r.law(
            "diamond_prime.lie",
            &[al],
            &lhs,
            &(&nested - &nested.permute_cols(&flip)),
            &[ae, ae, dw],
        );
    }
    for (al, be) in g.pairs() {
        let ab = g.mul(al, be);
        let lhs = m.rho(al, be).compose(&ps[ab]).compose(lie_e);
        let rhs = Matrix::identity(m.dim(al))
            .kron(&h.unit_map(be))
            .compose(&ps[al])
            .compose(lie_e);
        r.law("diamond_prime.colinear", &[al, be], &lhs, &rhs, &[ae, me]);
    }
    let dp = DiamondPrime { spaces, action };
    r.flag("diamond_prime.trivial", &[], dp.is_trivial());
    Ok((dp, r))
}

/// The identities relating `p^M`, `p^A`, `⋄`, `⋄′` and `φ`:
/// multiplicativity, stability under `p^M_e`, `⋄` through `φ` and `⋄′`, and
/// reconstruction of `M_α` from `M_e`.
pub fn check_projection_identities(
    m: &PoissonHopfModule,
    a: &ComodulePoissonAlgebra,
    phi: &ColinearUnitMap,
    h: &HopfGCoalgebra,
) -> Result<Report, Error> {
    let g = h.group();
    let e = g.identity();
    let (ae, me) = (a.dim(e), m.dim(e));
    let ps = p_maps(m, phi, h)?;
    let pa = p_maps(&PoissonHopfModule::regular(a), phi, h)?;
    let lie_e = &m.lie[e];
    let mut r = Report::new();
    for al in g.elements() {
        let (aa, ma) = (a.dim(al), m.dim(al));
        let p = &ps[al];

        let lhs = p.compose(&m.act[e]);
        let rhs = m.act[al].compose(&pa[al].kron(p));
        r.law("projection.multiplicative", &[al], &lhs, &rhs, &[ae, me]);

        let lhs = p.compose(&lie_e.compose(&Matrix::identity(ae).kron(&ps[e])));
        r.law(
            "projection.absorbs_p_e",
            &[al],
            &lhs,
            &p.compose(lie_e),
            &[ae, me],
        );

        // a ⋄ p_α(m) = φ_α(a_(1,α)) · p_α(a_(0,e) ⋄ m)
        let lhs = m.lie[al].compose(&Matrix::identity(aa).kron(p));
        let spread = a
            .rho(e, al)
            .kron(&Matrix::identity(me))
            .permute_rows(&permute_factors(&[ae, h.dim(al), me], &[1, 0, 2]));
        let rhs = m.act[al].compose(&phi.get(al).kron(&p.compose(lie_e)).compose(&spread));
        r.law("projection.lie_through_phi", &[al], &lhs, &rhs, &[aa, me]);

        // φ_α(m_(1,α)) · p_α(m_(0,e)) = m
        let swapped = m
            .rho(e, al)
            .permute_rows(&permute_factors(&[me, h.dim(al)], &[1, 0]));
        let lhs = m.act[al].compose(&phi.get(al).kron(p).compose(&swapped));
        r.law(
            "projection.reconstruction",
            &[al],
            &lhs,
            &Matrix::identity(ma),
            &[ma],
        );
    }
    let flags = phi.flags(h, a);
    r.flag(
        "projection.hypothesis.phi_algebra_map",
        &[],
        flags.is_algebra_map,
    );
    r.flag(
        "projection.hypothesis.phi_central",
        &[],
        flags.lands_in_center,
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    #[test]
    fn p_image_is_the_coinvariants() {
        for name in ["F1", "F4"] {
            let inst = fixture(name).unwrap().instance;
            let (m, phi) = (inst.module.unwrap(), inst.phi.unwrap());
            assert!(
                check_p_image(&m, &phi, &inst.hopf).unwrap().passed(),
                "{name}"
            );
        }
    }

    #[test]
    fn diamond_prime_vanishes_without_bracket() {
        let inst = fixture("F1").unwrap().instance;
        let (a, m, phi) = (
            inst.algebra.unwrap(),
            inst.module.unwrap(),
            inst.phi.unwrap(),
        );
        let (d, r) = diamond_prime(&m, &a, &phi, &inst.hopf).unwrap();
        assert!(r.passed());
        assert!(d.is_trivial());
    }

    #[test]
    fn diamond_prime_sees_the_bracket() {
        let inst = fixture("F2").unwrap().instance;
        let (a, m, phi) = (
            inst.algebra.unwrap(),
            inst.module.unwrap(),
            inst.phi.unwrap(),
        );
        let (d, r) = diamond_prime(&m, &a, &phi, &inst.hopf).unwrap();
        assert!(r.passed());
        assert!(!d.is_trivial());
    }
}
