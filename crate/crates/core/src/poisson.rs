//! Group Poisson algebras, comodules, comodule Poisson algebras, Poisson
//! modules and Poisson (A,H)-Hopf modules, with exhaustive axiom checks.
//!
//! Every bilinear action `A_α × X_α → X_α` is stored as a matrix
//! `A_α ⊗ X_α → X_α`; a coaction is a family `ρ_{α,β}: X_{αβ} → X_α ⊗ H_β`.

use alloc::format;
use alloc::vec::Vec;

use crate::group::GroupTable;
use crate::hopf::{expect_shape, AlgebraFamily, HopfGCoalgebra};
use crate::linalg::{permute_factors, Matrix};
use crate::report::Report;
use crate::Error;

/// Commutative algebras with a Poisson bracket in every degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonAlgebraFamily {
    pub algebra: AlgebraFamily,
    /// `bracket[α]`: `A_α ⊗ A_α → A_α`.
    pub bracket: Vec<Matrix>,
}

impl PoissonAlgebraFamily {
    pub fn group(&self) -> &GroupTable {
        &self.algebra.group
    }

    pub fn dim(&self, a: usize) -> usize {
        self.algebra.dims[a]
    }

    pub fn mult(&self, a: usize) -> &Matrix {
        &self.algebra.mult[a]
    }

    /// The same algebra with the zero bracket.
    pub fn check_shapes(&self) -> Result<(), Error> {
        self.algebra.check_shapes("A")?;
        if self.bracket.len() != self.group().order() {
            return Err(Error::InvalidArgument(
                "bracket does not have one map per degree",
            ));
        }
        for a in self.group().elements() {
            let d = self.dim(a);
            expect_shape(&format!("A.bracket[{a}]"), &self.bracket[a], (d, d * d))?;
        }
        Ok(())
    }

    pub fn with_zero_bracket(algebra: AlgebraFamily) -> Self {
        let bracket = algebra
            .dims
            .iter()
            .map(|&d| Matrix::zeros(d, d * d))
            .collect();
        PoissonAlgebraFamily { algebra, bracket }
    }
}

/// `maps[pair_index(α, β)]`: `X_{αβ} → X_α ⊗ H_β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coaction {
    pub order: usize,
    pub maps: Vec<Matrix>,
}

impl Coaction {
    pub fn get(&self, a: usize, b: usize) -> &Matrix {
        &self.maps[a * self.order + b]
    }

    /// `x ↦ x ⊗ 1_β`, identifying every `X_α` with one space of dimension `dim`.
    pub fn trivial(dim: usize, h: &HopfGCoalgebra) -> Self {
        let g = h.group();
        let maps = g
            .pairs()
            .map(|(_, b)| Matrix::identity(dim).kron(&h.unit_map(b)))
            .collect();
        Coaction {
            order: g.order(),
            maps,
        }
    }

    /// The regular coaction `ρ = Δ` on `H` itself.
    pub fn regular(h: &HopfGCoalgebra) -> Self {
        Coaction {
            order: h.group().order(),
            maps: h.comult.clone(),
        }
    }

    pub fn check_shapes(
        &self,
        name: &str,
        dims: &[usize],
        h: &HopfGCoalgebra,
    ) -> Result<(), Error> {
        let g = h.group();
        if self.order != g.order()
            || self.maps.len() != g.order() * g.order()
            || dims.len() != g.order()
        {
            return Err(Error::InvalidArgument(
                "coaction does not have one map per pair of degrees",
            ));
        }
        for (a, b) in g.pairs() {
            expect_shape(
                &format!("{name}.coaction[{a},{b}]"),
                self.get(a, b),
                (dims[a] * h.dim(b), dims[g.mul(a, b)]),
            )?;
        }
        Ok(())
    }
}

/// Coassociativity `(id ⊗ Δ_{β,γ})ρ_{α,βγ} = (ρ_{α,β} ⊗ id)ρ_{αβ,γ}` and the
/// counit law `(id ⊗ ε)ρ_{α,e} = id`.
pub fn check_comodule(c: &Coaction, dims: &[usize], h: &HopfGCoalgebra) -> Result<Report, Error> {
    c.check_shapes("X", dims, h)?;
    let g = h.group();
    let e = g.identity();
    let mut r = Report::new();
    for (a, b, cc) in g.triples() {
        let lhs = Matrix::identity(dims[a])
            .kron(h.comult(b, cc))
            .compose(c.get(a, g.mul(b, cc)));
        let rhs = c
            .get(a, b)
            .kron(&Matrix::identity(h.dim(cc)))
            .compose(c.get(g.mul(a, b), cc));
        r.law(
            "comodule.coassociativity",
            &[a, b, cc],
            &lhs,
            &rhs,
            &[dims[g.mul(g.mul(a, b), cc)]],
        );
    }
    for a in g.elements() {
        let id = Matrix::identity(dims[a]);
        r.law(
            "comodule.counit",
            &[a],
            &id.kron(&h.counit).compose(c.get(a, e)),
            &id,
            &[dims[a]],
        );
    }
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComodulePoissonAlgebra {
    pub poisson: PoissonAlgebraFamily,
    pub coaction: Coaction,
}

impl ComodulePoissonAlgebra {
    pub fn group(&self) -> &GroupTable {
        self.poisson.group()
    }

    pub fn dim(&self, a: usize) -> usize {
        self.poisson.dim(a)
    }

    pub fn dims(&self) -> &[usize] {
        &self.poisson.algebra.dims
    }

    pub fn mult(&self, a: usize) -> &Matrix {
        self.poisson.mult(a)
    }

    pub fn bracket(&self, a: usize) -> &Matrix {
        &self.poisson.bracket[a]
    }

    pub fn unit_map(&self, a: usize) -> Matrix {
        self.poisson.algebra.unit_map(a)
    }

    pub fn rho(&self, a: usize, b: usize) -> &Matrix {
        self.coaction.get(a, b)
    }
}

/// Antisymmetry, Jacobi and Leibniz on all basis triples, after the
/// commutative algebra laws.
pub fn check_poisson_family(p: &PoissonAlgebraFamily) -> Result<Report, Error> {
    p.check_shapes()?;
    let g = p.group();
    let mut r = p.algebra.check_algebra("poisson.algebra");
    r.extend(p.algebra.check_commutative("poisson.algebra"));
    for a in g.elements() {
        let d = p.dim(a);
        let br = &p.bracket[a];
        let m = p.mult(a);
        let id = Matrix::identity(d);
        let dims3 = [d, d, d];

        let swap = permute_factors(&[d, d], &[1, 0]);
        r.vanishes(
            "poisson.antisymmetry",
            &[a],
            &(br + &br.permute_cols(&swap)),
            &[d, d],
        );

        // {a,{b,c}} + {b,{c,a}} + {c,{a,b}}
        let nested = br.compose(&id.kron(br));
        let jacobi = &(&nested + &nested.permute_cols(&permute_factors(&dims3, &[1, 2, 0])))
            + &nested.permute_cols(&permute_factors(&dims3, &[2, 0, 1]));
        r.vanishes("poisson.jacobi", &[a], &jacobi, &dims3);

        // {a,bc} = {a,b}c + b{a,c}
        let lhs = br.compose(&id.kron(m));
        let first = m.compose(&br.kron(&id));
        let second = m
            .compose(&id.kron(br))
            .permute_cols(&permute_factors(&dims3, &[1, 0, 2]));
        r.law("poisson.leibniz", &[a], &lhs, &(&first + &second), &dims3);
    }
    Ok(r)
}

/// `ρ_{α,β} ∘ op_{αβ}` against `(op_α ⊗ m_β) ∘ σ ∘ (ρ^A ⊗ ρ^X)` for an
/// operation `op: A ⊗ X → X`.
#[allow(clippy::too_many_arguments)]
fn compat_law(
    r: &mut Report,
    law: &str,
    h: &HopfGCoalgebra,
    a_dims: &[usize],
    rho_a: &Coaction,
    x_dims: &[usize],
    rho_x: &Coaction,
    op: &[Matrix],
) {
    let g = h.group();
    for (al, be) in g.pairs() {
        let ab = g.mul(al, be);
        let lhs = rho_x.get(al, be).compose(&op[ab]);
        let map = permute_factors(
            &[a_dims[al], h.dim(be), x_dims[al], h.dim(be)],
            &[0, 2, 1, 3],
        );
        let rhs = op[al]
            .kron(h.mult(be))
            .compose(&rho_a.get(al, be).kron(rho_x.get(al, be)).permute_rows(&map));
        r.law(law, &[al, be], &lhs, &rhs, &[a_dims[ab], x_dims[ab]]);
    }
}

/// Comodule-algebra laws and bracket colinearity
/// `{a,b}_(0)⊗{a,b}_(1) = {a_(0),b_(0)} ⊗ a_(1)b_(1)`.
pub fn check_comodule_poisson_algebra(
    a: &ComodulePoissonAlgebra,
    h: &HopfGCoalgebra,
) -> Result<Report, Error> {
    a.coaction.check_shapes("A", a.dims(), h)?;
    let g = h.group();
    let mut r = Report::new();
    compat_law(
        &mut r,
        "comodule_algebra.multiplicative",
        h,
        a.dims(),
        &a.coaction,
        a.dims(),
        &a.coaction,
        &a.poisson.algebra.mult,
    );
    for (al, be) in g.pairs() {
        let ab = g.mul(al, be);
        let lhs = a.rho(al, be).compose(&a.unit_map(ab));
        r.law(
            "comodule_algebra.unital",
            &[al, be],
            &lhs,
            &a.unit_map(al).kron(&h.unit_map(be)),
            &[1],
        );
    }
    compat_law(
        &mut r,
        "comodule_poisson.bracket_colinear",
        h,
        a.dims(),
        &a.coaction,
        a.dims(),
        &a.coaction,
        &a.poisson.bracket,
    );
    Ok(r)
}

/// A Poisson A-module without coaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonModule {
    pub dims: Vec<usize>,
    pub act: Vec<Matrix>,
    pub lie: Vec<Matrix>,
}

/// A Lie A-module with a compatible H-coaction (an `(A̲,H)`-comodule).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieComodule {
    pub dims: Vec<usize>,
    pub lie: Vec<Matrix>,
    pub coaction: Coaction,
}

/// A Poisson (A,H)-Hopf module: `·`, `⋄` and `ρ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonHopfModule {
    pub dims: Vec<usize>,
    /// `act[α]`: `A_α ⊗ M_α → M_α`.
    pub act: Vec<Matrix>,
    /// `lie[α]`: `A_α ⊗ M_α → M_α`, written `⋄`.
    pub lie: Vec<Matrix>,
    pub coaction: Coaction,
}

impl PoissonHopfModule {
    /// `A` acting on itself by multiplication and bracket.
    pub fn regular(a: &ComodulePoissonAlgebra) -> Self {
        PoissonHopfModule {
            dims: a.dims().to_vec(),
            act: a.poisson.algebra.mult.clone(),
            lie: a.poisson.bracket.clone(),
            coaction: a.coaction.clone(),
        }
    }

    pub fn dim(&self, a: usize) -> usize {
        self.dims[a]
    }

    pub fn rho(&self, a: usize, b: usize) -> &Matrix {
        self.coaction.get(a, b)
    }

    pub fn as_poisson_module(&self) -> PoissonModule {
        PoissonModule {
            dims: self.dims.clone(),
            act: self.act.clone(),
            lie: self.lie.clone(),
        }
    }

    pub fn as_lie_comodule(&self) -> LieComodule {
        LieComodule {
            dims: self.dims.clone(),
            lie: self.lie.clone(),
            coaction: self.coaction.clone(),
        }
    }

    /// `M ⊕ N`, componentwise in every structure map.
    pub fn direct_sum(
        &self,
        other: &PoissonHopfModule,
        a_dims: &[usize],
        h: &HopfGCoalgebra,
    ) -> PoissonHopfModule {
        let g = h.group();
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(x, y)| x + y)
            .collect();
        let act = g
            .elements()
            .map(|al| {
                sum_action(
                    a_dims[al],
                    &self.act[al],
                    self.dims[al],
                    &other.act[al],
                    other.dims[al],
                )
            })
            .collect();
        let lie = g
            .elements()
            .map(|al| {
                sum_action(
                    a_dims[al],
                    &self.lie[al],
                    self.dims[al],
                    &other.lie[al],
                    other.dims[al],
                )
            })
            .collect();
        let maps = g
            .pairs()
            .map(|(al, be)| {
                let ab = g.mul(al, be);
                sum_coaction(
                    self.rho(al, be),
                    self.dims[al],
                    self.dims[ab],
                    other.rho(al, be),
                    other.dims[al],
                    other.dims[ab],
                    h.dim(be),
                )
            })
            .collect();
        PoissonHopfModule {
            dims,
            act,
            lie,
            coaction: Coaction {
                order: g.order(),
                maps,
            },
        }
    }

    pub fn check_shapes(&self, a_dims: &[usize], h: &HopfGCoalgebra) -> Result<(), Error> {
        check_action_shapes("M", &self.dims, a_dims, &self.act, &self.lie)?;
        self.coaction.check_shapes("M", &self.dims, h)
    }
}

fn check_action_shapes(
    name: &str,
    dims: &[usize],
    a_dims: &[usize],
    act: &[Matrix],
    lie: &[Matrix],
) -> Result<(), Error> {
    if dims.len() != a_dims.len() || act.len() != a_dims.len() || lie.len() != a_dims.len() {
        return Err(Error::InvalidArgument(
            "module does not have one action per degree",
        ));
    }
    for (al, (&d, &ad)) in dims.iter().zip(a_dims).enumerate() {
        expect_shape(&format!("{name}.act[{al}]"), &act[al], (d, ad * d))?;
        expect_shape(&format!("{name}.lie[{al}]"), &lie[al], (d, ad * d))?;
    }
    Ok(())
}

/// Action of `A_α` on `X ⊕ Y` from actions on the summands.
pub(crate) fn sum_action(ad: usize, x_op: &Matrix, xd: usize, y_op: &Matrix, yd: usize) -> Matrix {
    let d = xd + yd;
    let mut out = Matrix::zeros(d, ad * d);
    for i in 0..ad {
        out.set_block(0, i * d, &x_op.block(0, i * xd, xd, xd));
        out.set_block(xd, i * d + xd, &y_op.block(0, i * yd, yd, yd));
    }
    out
}

/// `ρ_{α,β}` on `X ⊕ Y` from the summand coactions.
pub(crate) fn sum_coaction(
    rx: &Matrix,
    xa: usize,
    xab: usize,
    ry: &Matrix,
    ya: usize,
    yab: usize,
    hb: usize,
) -> Matrix {
    let mut out = Matrix::zeros((xa + ya) * hb, xab + yab);
    out.set_block(0, 0, rx);
    out.set_block(xa * hb, xab, ry);
    out
}

fn module_laws(
    r: &mut Report,
    a: &ComodulePoissonAlgebra,
    dims: &[usize],
    act: &[Matrix],
    lie: &[Matrix],
) {
    for al in a.group().elements() {
        let (ad, md) = (a.dim(al), dims[al]);
        let (ida, idm) = (Matrix::identity(ad), Matrix::identity(md));
        let (act, lie, m, br) = (&act[al], &lie[al], a.mult(al), a.bracket(al));
        let d3 = [ad, ad, md];
        let flip = permute_factors(&d3, &[1, 0, 2]);

        r.law(
            "module.associativity",
            &[al],
            &act.compose(&m.kron(&idm)),
            &act.compose(&ida.kron(act)),
            &d3,
        );
        r.law(
            "module.unit",
            &[al],
            &act.compose(&a.unit_map(al).kron(&idm)),
            &idm,
            &[md],
        );

        // {a,b}⋄m = a⋄(b⋄m) − b⋄(a⋄m)
        let nested = lie.compose(&ida.kron(lie));
        let lhs = lie.compose(&br.kron(&idm));
        r.law(
            "lie_module.bracket",
            &[al],
            &lhs,
            &(&nested - &nested.permute_cols(&flip)),
            &d3,
        );

        // a⋄(b·m) = {a,b}·m + b·(a⋄m)
        let act_lie = act.compose(&ida.kron(lie));
        let lhs = lie.compose(&ida.kron(act));
        let rhs = &act.compose(&br.kron(&idm)) + &act_lie.permute_cols(&flip);
        r.law("poisson_module.lie_of_product", &[al], &lhs, &rhs, &d3);

        // (ab)⋄m = a·(b⋄m) + b·(a⋄m)
        let lhs = lie.compose(&m.kron(&idm));
        let rhs = &act_lie + &act_lie.permute_cols(&flip);
        r.law("poisson_module.product_of_lie", &[al], &lhs, &rhs, &d3);
    }
}

fn lie_laws(r: &mut Report, a: &ComodulePoissonAlgebra, dims: &[usize], lie: &[Matrix]) {
    for al in a.group().elements() {
        let (ad, md) = (a.dim(al), dims[al]);
        let d3 = [ad, ad, md];
        let flip = permute_factors(&d3, &[1, 0, 2]);
        let lie = &lie[al];
        let nested = lie.compose(&Matrix::identity(ad).kron(lie));
        let lhs = lie.compose(&a.bracket(al).kron(&Matrix::identity(md)));
        r.law(
            "lie_module.bracket",
            &[al],
            &lhs,
            &(&nested - &nested.permute_cols(&flip)),
            &d3,
        );
    }
}

/// Module and Lie-module laws together with both Leibniz-type compatibilities.
pub fn check_poisson_module(
    n: &PoissonModule,
    a: &ComodulePoissonAlgebra,
) -> Result<Report, Error> {
    check_action_shapes("N", &n.dims, a.dims(), &n.act, &n.lie)?;
    let mut r = Report::new();
    module_laws(&mut r, a, &n.dims, &n.act, &n.lie);
    Ok(r)
}

/// Lie-module law, comodule laws and colinearity of `⋄`.
pub fn check_lie_comodule(
    m: &LieComodule,
    a: &ComodulePoissonAlgebra,
    h: &HopfGCoalgebra,
) -> Result<Report, Error> {
    check_action_shapes("M", &m.dims, a.dims(), &m.lie, &m.lie)?;
    let mut r = check_comodule(&m.coaction, &m.dims, h)?;
    lie_laws(&mut r, a, &m.dims, &m.lie);
    compat_law(
        &mut r,
        "hopf_module.lie_colinear",
        h,
        a.dims(),
        &a.coaction,
        &m.dims,
        &m.coaction,
        &m.lie,
    );
    Ok(r)
}

/// Every law of a Poisson (A,H)-Hopf module on all basis tuples: module,
/// Lie-module, the two Leibniz-type compatibilities, comodule, and
/// colinearity of `·` and `⋄`.
pub fn check_poisson_hopf_module(
    m: &PoissonHopfModule,
    a: &ComodulePoissonAlgebra,
    h: &HopfGCoalgebra,
) -> Result<Report, Error> {
    m.check_shapes(a.dims(), h)?;
    let mut r = check_comodule(&m.coaction, &m.dims, h)?;
    r.extend(check_poisson_hopf_module_laws(m, a, h)?);
    Ok(r)
}

/// As [`check_poisson_hopf_module`] without the comodule laws.
pub fn check_poisson_hopf_module_laws(
    m: &PoissonHopfModule,
    a: &ComodulePoissonAlgebra,
    h: &HopfGCoalgebra,
) -> Result<Report, Error> {
    m.check_shapes(a.dims(), h)?;
    let mut r = Report::new();
    module_laws(&mut r, a, &m.dims, &m.act, &m.lie);
    compat_law(
        &mut r,
        "hopf_module.action_colinear",
        h,
        a.dims(),
        &a.coaction,
        &m.dims,
        &m.coaction,
        &m.act,
    );
    compat_law(
        &mut r,
        "hopf_module.lie_colinear",
        h,
        a.dims(),
        &a.coaction,
        &m.dims,
        &m.coaction,
        &m.lie,
    );
    Ok(r)
}

/// `φ_α: H_α → A_α` for every `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColinearUnitMap {
    pub maps: Vec<Matrix>,
}

/// Properties of `φ` that the theorems assume, beyond colinearity and units.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PhiFlags {
    pub is_algebra_map: bool,
    pub lands_in_center: bool,
}

impl ColinearUnitMap {
    pub fn get(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    pub fn check_shapes(
        &self,
        h: &HopfGCoalgebra,
        a: &ComodulePoissonAlgebra,
    ) -> Result<(), Error> {
        if self.maps.len() != h.group().order() {
            return Err(Error::InvalidArgument(
                "phi does not have one map per degree",
            ));
        }
        for al in h.group().elements() {
            expect_shape(&format!("phi[{al}]"), self.get(al), (a.dim(al), h.dim(al)))?;
        }
        Ok(())
    }

    pub fn flags(&self, h: &HopfGCoalgebra, a: &ComodulePoissonAlgebra) -> PhiFlags {
        PhiFlags {
            is_algebra_map: phi_multiplicative(self, h, a),
            lands_in_center: phi_central(self, h, a),
        }
    }
}

fn phi_multiplicative(
    phi: &ColinearUnitMap,
    h: &HopfGCoalgebra,
    a: &ComodulePoissonAlgebra,
) -> bool {
    h.group().elements().all(|al| {
        let f = phi.get(al);
        f.compose(h.mult(al)) == a.mult(al).compose(&f.kron(f))
    })
}

fn phi_central(phi: &ColinearUnitMap, h: &HopfGCoalgebra, a: &ComodulePoissonAlgebra) -> bool {
    h.group().elements().all(|al| {
        a.bracket(al)
            .compose(&Matrix::identity(a.dim(al)).kron(phi.get(al)))
            .is_zero()
    })
}

/// Colinearity, unit preservation, image in the Poisson center, and the
/// multiplicativity flag.
pub fn check_phi(
    phi: &ColinearUnitMap,
    h: &HopfGCoalgebra,
    a: &ComodulePoissonAlgebra,
) -> Result<Report, Error> {
    phi.check_shapes(h, a)?;
    let g = h.group();
    let mut r = Report::new();
    for (al, be) in g.pairs() {
        let ab = g.mul(al, be);
        let lhs = a.rho(al, be).compose(phi.get(ab));
        let rhs = phi
            .get(al)
            .kron(&Matrix::identity(h.dim(be)))
            .compose(h.comult(al, be));
        r.law("phi.colinear", &[al, be], &lhs, &rhs, &[h.dim(ab)]);
    }
    for al in g.elements() {
        r.law(
            "phi.unital",
            &[al],
            &phi.get(al).compose(&h.unit_map(al)),
            &a.unit_map(al),
            &[1],
        );
        let br = a
            .bracket(al)
            .compose(&Matrix::identity(a.dim(al)).kron(phi.get(al)));
        r.vanishes("phi.central", &[al], &br, &[a.dim(al), h.dim(al)]);
    }
    r.flag("phi.algebra_map", &[], phi_multiplicative(phi, h, a));
    Ok(r)
}

/// Direct-sum layout of `(N ⊗ H)_α = ⊕_{μν=α} N_μ ⊗ H_ν`, summands ordered by `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorLayout {
    /// `offsets[α][μ]`: start of the `N_μ ⊗ H_{μ⁻¹α}` summand.
    pub offsets: Vec<Vec<usize>>,
    pub dims: Vec<usize>,
}

impl TensorLayout {
    pub fn new(n_dims: &[usize], h: &HopfGCoalgebra) -> Self {
        let g = h.group();
        let mut offsets = Vec::new();
        let mut dims = Vec::new();
        for al in g.elements() {
            let mut off = Vec::new();
            let mut acc = 0;
            for mu in g.elements() {
                off.push(acc);
                acc += n_dims[mu] * h.dim(g.mul(g.inv(mu), al));
            }
            offsets.push(off);
            dims.push(acc);
        }
        TensorLayout { offsets, dims }
    }
}

fn tensor_coaction(n_dims: &[usize], h: &HopfGCoalgebra, layout: &TensorLayout) -> Coaction {
    let g = h.group();
    let mut maps = Vec::new();
    for (mp, np) in g.pairs() {
        let al = g.mul(mp, np);
        let hb = h.dim(np);
        let mut rho = Matrix::zeros(layout.dims[mp] * hb, layout.dims[al]);
        for mu in g.elements() {
            let nu = g.mul(g.inv(mu), al);
            let left = g.mul(g.inv(mu), mp);
            // n ⊗ h ↦ n ⊗ h_(1, μ⁻¹μ') ⊗ h_(2, ν')
            let block = Matrix::identity(n_dims[mu]).kron(h.comult(left, np));
            rho.set_block(layout.offsets[mp][mu] * hb, layout.offsets[al][mu], &block);
            debug_assert_eq!(block.cols(), n_dims[mu] * h.dim(nu));
        }
        maps.push(rho);
    }
    Coaction {
        order: g.order(),
        maps,
    }
}

/// `a ⊗ (n ⊗ h) ↦ op(a_(0,μ), n) ⊗ a_(1,ν) h` on every summand.
fn tensor_action(
    op: &[Matrix],
    n_dims: &[usize],
    a: &ComodulePoissonAlgebra,
    h: &HopfGCoalgebra,
    layout: &TensorLayout,
) -> Vec<Matrix> {
    let g = h.group();
    g.elements()
        .map(|al| {
            let d = layout.dims[al];
            let ad = a.dim(al);
            let mut out = Matrix::zeros(d, ad * d);
            for mu in g.elements() {
                let nu = g.mul(g.inv(mu), al);
                let (nd, hd) = (n_dims[mu], h.dim(nu));
                let s = nd * hd;
                if s == 0 {
                    continue;
                }
                let spread = a.rho(mu, nu).kron(&Matrix::identity(s));
                let map = permute_factors(&[a.dim(mu), hd, nd, hd], &[0, 2, 1, 3]);
                let block = op[mu].kron(h.mult(nu)).compose(&spread.permute_rows(&map));
                let off = layout.offsets[al][mu];
                for i in 0..ad {
                    out.set_block(off, i * d + off, &block.block(0, i * s, s, s));
                }
            }
            out
        })
        .collect()
}

/// `N ⊗ H` for a Lie A-module `N`: an `(A̲,H)`-comodule.
pub fn tensor_with_h_lie(
    n_dims: &[usize],
    n_lie: &[Matrix],
    a: &ComodulePoissonAlgebra,
    h: &HopfGCoalgebra,
) -> (LieComodule, TensorLayout) {
    let layout = TensorLayout::new(n_dims, h);
    let coaction = tensor_coaction(n_dims, h, &layout);
    let lie = tensor_action(n_lie, n_dims, a, h, &layout);
    (
        LieComodule {
            dims: layout.dims.clone(),
            lie,
            coaction,
        },
        layout,
    )
}

/// `N ⊗ H` for a Poisson A-module `N` over commutative `H`: a Poisson
/// (A,H)-Hopf module.
pub fn tensor_with_h(
    n: &PoissonModule,
    a: &ComodulePoissonAlgebra,
    h: &HopfGCoalgebra,
) -> Result<(PoissonHopfModule, TensorLayout), Error> {
    if let Some(degree) = h
        .group()
        .elements()
        .find(|&al| !h.algebra.is_commutative(al))
    {
        return Err(Error::CommutativityRequired { degree });
    }
    let (lc, layout) = tensor_with_h_lie(&n.dims, &n.lie, a, h);
    let act = tensor_action(&n.act, &n.dims, a, h, &layout);
    Ok((
        PoissonHopfModule {
            dims: lc.dims,
            act,
            lie: lc.lie,
            coaction: lc.coaction,
        },
        layout,
    ))
}
