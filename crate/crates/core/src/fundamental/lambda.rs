use alloc::vec::Vec;

use crate::hopf::HopfGCoalgebra;
use crate::linalg::{permute_factors, Matrix};
use crate::poisson::{
    tensor_with_h_lie, ColinearUnitMap, ComodulePoissonAlgebra, PoissonHopfModule, TensorLayout,
};
use crate::report::Report;
use crate::Error;

/// Which hypothesis makes `λ` Lie `A`-linear.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaRoute {
    HCommutative,
    PhiAlgebraMap,
    /// Neither hypothesis holds; Lie-linearity is not certified.
    Unmet,
}

/// `λ_α: (M ⊗ H)_α → M_α`, `m_e ⊗ h_α ↦ φ_α(h_α S⁻¹_α(m_(1,α⁻¹))) · m_(0,α)`,
/// zero on the other summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lambda {
    pub maps: Vec<Matrix>,
    pub layout: TensorLayout,
    pub route: LambdaRoute,
}

/// `ρ^M_α = ⊕_{μν=α} ρ_{μ,ν}: M_α → (M ⊗ H)_α`.
pub fn total_coaction(
    m: &PoissonHopfModule,
    h: &HopfGCoalgebra,
    layout: &TensorLayout,
    alpha: usize,
) -> Matrix {
    let g = h.group();
    let mut out = Matrix::zeros(layout.dims[alpha], m.dim(alpha));
    for mu in g.elements() {
        let nu = g.mul(g.inv(mu), alpha);
        out.set_block(layout.offsets[alpha][mu], 0, m.rho(mu, nu));
    }
    out
}

/// Builds `λ` and certifies the retraction `λ ∘ ρ^M = id`, colinearity, and
/// Lie `A`-linearity along whichever hypothesis route applies.
pub fn lambda_map(
    m: &PoissonHopfModule,
    a: &ComodulePoissonAlgebra,
    phi: &ColinearUnitMap,
    h: &HopfGCoalgebra,
) -> Result<(Lambda, Report), Error> {
    let g = h.group();
    let e = g.identity();
    let s_inv = h.antipode_inverse()?;
    let (mh, layout) = tensor_with_h_lie(&m.dims, &m.lie, a, h);
    let me = m.dim(e);
    let mut maps = Vec::new();
    for al in g.elements() {
        let (ai, ma, ha) = (g.inv(al), m.dim(al), h.dim(al));
        // m ⊗ h ↦ m_(0,α) ⊗ h ⊗ S⁻¹(m_(1,α⁻¹)) ↦ m_(0,α) ⊗ φ(h S⁻¹(…)) ↦ φ(…) · m_(0,α)
        let coacted = m.rho(al, ai).kron(&Matrix::identity(ha));
        let inverted = Matrix::identity(ma).kron(&s_inv[al].kron(&Matrix::identity(ha)));
        let reorder = permute_factors(&[ma, ha, ha], &[0, 2, 1]);
        let multiplied = Matrix::identity(ma).kron(&phi.get(al).compose(h.mult(al)));
        let swap = permute_factors(&[ma, a.dim(al)], &[1, 0]);
        let summand = m.act[al].compose(
            &multiplied
                .permute_rows(&swap)
                .compose(&inverted.compose(&coacted).permute_rows(&reorder)),
        );
        debug_assert_eq!(summand.cols(), me * ha);
        let mut lam = Matrix::zeros(ma, layout.dims[al]);
        lam.set_block(0, layout.offsets[al][e], &summand);
        maps.push(lam);
    }

    let mut r = Report::new();
    for al in g.elements() {
        let lhs = maps[al].compose(&total_coaction(m, h, &layout, al));
        r.law(
            "lambda.retraction",
            &[al],
            &lhs,
            &Matrix::identity(m.dim(al)),
            &[m.dim(al)],
        );
    }
    for (al, be) in g.pairs() {
        let ab = g.mul(al, be);
        let lhs = m.rho(al, be).compose(&maps[ab]);
        let rhs = maps[al]
            .kron(&Matrix::identity(h.dim(be)))
            .compose(mh.coaction.get(al, be));
        r.law("lambda.colinear", &[al, be], &lhs, &rhs, &[layout.dims[ab]]);
    }
    let route = if h.is_commutative() {
        LambdaRoute::HCommutative
    } else if phi.flags(h, a).is_algebra_map {
        LambdaRoute::PhiAlgebraMap
    } else {
        LambdaRoute::Unmet
    };
    r.flag(
        "lambda.route.h_commutative",
        &[],
        route == LambdaRoute::HCommutative,
    );
    r.flag(
        "lambda.route.phi_algebra_map",
        &[],
        route == LambdaRoute::PhiAlgebraMap,
    );
    if route == LambdaRoute::Unmet {
        r.skip(
            "lambda.lie_linear",
            "H is not commutative and phi is not an algebra map",
        );
    } else {
        for al in g.elements() {
            let lhs = maps[al].compose(&mh.lie[al]);
            let rhs = m.lie[al].compose(&Matrix::identity(a.dim(al)).kron(&maps[al]));
            r.law(
                "lambda.lie_linear",
                &[al],
                &lhs,
                &rhs,
                &[a.dim(al), layout.dims[al]],
            );
        }
    }
    Ok((
        Lambda {
            maps,
            layout,
            route,
        },
        r,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    #[test]
    fn retraction_on_commutative_h() {
        for name in ["F1", "F3", "F4"] {
            let inst = fixture(name).unwrap().instance;
            let (a, m, phi) = (
                inst.algebra.unwrap(),
                inst.module.unwrap(),
                inst.phi.unwrap(),
            );
            let (lam, r) = lambda_map(&m, &a, &phi, &inst.hopf).unwrap();
            assert_eq!(lam.route, LambdaRoute::HCommutative);
            assert!(r.passed(), "{name}");
        }
    }
}
