use alloc::vec::Vec;

use super::certify;
use crate::coinvariants::{acoinvariants, base_algebra_space, GradedSubspaceFamily};
use crate::hopf::HopfGCoalgebra;
use crate::linalg::{permute_factors, quotient, Matrix, Quotient, Subspace};
use crate::poisson::{sum_action, Coaction, ComodulePoissonAlgebra, PoissonHopfModule};
use crate::report::Report;
use crate::Error;

/// A left `B`-module with a trivial `H`-coaction `ρ_{α,β}(n) = τ_{α,β}(n) ⊗ 1_β`.
///
/// `B_α` is given by a subspace of `A_α`; actions are in its canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialBModule {
    pub dims: Vec<usize>,
    /// `action[α]`: `B_α ⊗ N_α → N_α`.
    pub action: Vec<Matrix>,
    /// `transport[pair_index(α, β)]`: `N_{αβ} → N_α`.
    pub transport: Vec<Matrix>,
}

impl TrivialBModule {
    pub fn zero(order: usize) -> Self {
        TrivialBModule {
            dims: alloc::vec![0; order],
            action: (0..order).map(|_| Matrix::zeros(0, 0)).collect(),
            transport: (0..order * order).map(|_| Matrix::zeros(0, 0)).collect(),
        }
    }

    /// Restricts an action of `A` and a coaction on `X` to subspaces
    /// `N_α ⊆ X_α`. Fails with [`Error::NotTrivialComodule`] when some
    /// `ρ_{α,β}(N_{αβ})` is not of the form `N_α ⊗ 1_β`.
    pub fn from_subspaces(
        spaces: &GradedSubspaceFamily,
        act: &[Matrix],
        coaction: &Coaction,
        base: &GradedSubspaceFamily,
        h: &HopfGCoalgebra,
    ) -> Result<Self, Error> {
        let g = h.group();
        let mut action = Vec::new();
        for al in g.elements() {
            let (b, n) = (base.get(al), spaces.get(al));
            let moved = act[al].compose(&b.basis_matrix().kron(&n.basis_matrix()));
            action.push(n.coordinate_matrix(&moved).ok_or(Error::NotClosed {
                what: "base action",
                degree: al,
            })?);
        }
        let mut transport = Vec::new();
        for (al, be) in g.pairs() {
            let ab = g.mul(al, be);
            let (n_a, n_ab) = (spaces.get(al), spaces.get(ab));
            let image = coaction.get(al, be).compose(&n_ab.basis_matrix());
            let not_trivial = Error::NotTrivialComodule {
                alpha: al,
                beta: be,
            };
            let dual = h.unit_dual(be).ok_or(not_trivial.clone())?;
            let first = Matrix::identity(n_a.ambient_dim())
                .kron(&dual)
                .compose(&image);
            let tau = n_a.coordinate_matrix(&first).ok_or(not_trivial.clone())?;
            if n_a.basis_matrix().compose(&tau).kron(&h.unit_map(be)) != image {
                return Err(not_trivial);
            }
            transport.push(tau);
        }
        Ok(TrivialBModule {
            dims: spaces.dims(),
            action,
            transport,
        })
    }

    /// `B` acting on itself.
    pub fn regular(
        a: &ComodulePoissonAlgebra,
        base: &GradedSubspaceFamily,
        h: &HopfGCoalgebra,
    ) -> Result<Self, Error> {
        TrivialBModule::from_subspaces(base, &a.poisson.algebra.mult, &a.coaction, base, h)
    }

    pub fn direct_sum(
        &self,
        other: &TrivialBModule,
        base: &GradedSubspaceFamily,
        order: usize,
    ) -> Self {
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(x, y)| x + y)
            .collect();
        let action = (0..order)
            .map(|al| {
                sum_action(
                    base.get(al).dim(),
                    &self.action[al],
                    self.dims[al],
                    &other.action[al],
                    other.dims[al],
                )
            })
            .collect();
        let transport = (0..order * order)
            .map(|i| {
                let (x, y) = (&self.transport[i], &other.transport[i]);
                let mut t = Matrix::zeros(x.rows() + y.rows(), x.cols() + y.cols());
                t.set_block(0, 0, x);
                t.set_block(x.rows(), x.cols(), y);
                t
            })
            .collect();
        TrivialBModule {
            dims,
            action,
            transport,
        }
    }

    pub fn transport(&self, order: usize, a: usize, b: usize) -> &Matrix {
        &self.transport[a * order + b]
    }

    /// `B`-module laws (with `B`'s product taken from `A`) and the
    /// transport laws making the coaction trivial and coassociative.
    pub fn check(
        &self,
        a: &ComodulePoissonAlgebra,
        base: &GradedSubspaceFamily,
        h: &HopfGCoalgebra,
    ) -> Report {
        let g = h.group();
        let n = g.order();
        let mut r = Report::new();
        for al in g.elements() {
            let b = base.get(al);
            let (bd, nd) = (b.dim(), self.dims[al]);
            let ub = b.basis_matrix();
            let Some(mb) = b.coordinate_matrix(&a.mult(al).compose(&ub.kron(&ub))) else {
                r.skip(
                    "b_module.associativity",
                    "B is not closed under the product",
                );
                continue;
            };
            let act = &self.action[al];
            let idn = Matrix::identity(nd);
            let lhs = act.compose(&mb.kron(&idn));
            let rhs = act.compose(&Matrix::identity(bd).kron(act));
            r.law("b_module.associativity", &[al], &lhs, &rhs, &[bd, bd, nd]);
            match b.coordinates(&a.unit_map(al).column(0)) {
                Some(one) => {
                    let unit = Matrix::column_vector(&one).kron(&idn);
                    r.law("b_module.unit", &[al], &act.compose(&unit), &idn, &[nd]);
                }
                None => r.skip("b_module.unit", "B does not contain the unit"),
            }
        }
        for (al, be, ga) in g.triples() {
            let lhs = self.transport(n, al, g.mul(be, ga));
            let rhs = self
                .transport(n, al, be)
                .compose(self.transport(n, g.mul(al, be), ga));
            r.law(
                "trivial_comodule.transport",
                &[al, be, ga],
                lhs,
                &rhs,
                &[self.dims[g.mul(g.mul(al, be), ga)]],
            );
        }
        for al in g.elements() {
            let id = Matrix::identity(self.dims[al]);
            r.law(
                "trivial_comodule.counit",
                &[al],
                self.transport(n, al, g.identity()),
                &id,
                &[self.dims[al]],
            );
        }
        r
    }
}

/// `A ⊗_B N = {A_α ⊗_{B_α} N_α}` with its induced Poisson Hopf module
/// structure and the certificates that every induced map is well defined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedTensor {
    pub quotients: Vec<Quotient>,
    /// Spans of `a·b ⊗ n − a ⊗ b·n` in each `A_α ⊗ N_α`.
    pub relations: Vec<Subspace>,
    pub module: PoissonHopfModule,
    pub report: Report,
}

impl BalancedTensor {
    /// `n ↦ 1 ⊗ n`, as a matrix `N_α → (A ⊗_B N)_α`.
    pub fn unit_embedding(&self, a: &ComodulePoissonAlgebra, n_dim: usize, alpha: usize) -> Matrix {
        self.quotients[alpha]
            .projector
            .compose(&a.unit_map(alpha).kron(&Matrix::identity(n_dim)))
    }
}

/// `A ⊗_B N` for a trivial `B`-module `N`; refuses any induced map that does
/// not annihilate the balancing relations.
pub fn trivial_induction_over(
    n: &TrivialBModule,
    a: &ComodulePoissonAlgebra,
    h: &HopfGCoalgebra,
    base: &GradedSubspaceFamily,
) -> Result<BalancedTensor, Error> {
    let g = h.group();
    let order = g.order();
    let mut relations = Vec::new();
    let mut quotients = Vec::new();
    for al in g.elements() {
        let (ad, nd) = (a.dim(al), n.dims[al]);
        let b = base.get(al);
        let ub = b.basis_matrix();
        // columns (i, j, k): a_i b_j ⊗ n_k − a_i ⊗ b_j n_k
        let right = a
            .mult(al)
            .compose(&Matrix::identity(ad).kron(&ub))
            .kron(&Matrix::identity(nd));
        let left = Matrix::identity(ad).kron(&n.action[al]);
        let rel = Subspace::column_space(&(&right - &left));
        quotients.push(quotient(ad * nd, &rel)?);
        relations.push(rel);
    }

    let mut r = Report::new();
    let mut act = Vec::new();
    let mut lie = Vec::new();
    for al in g.elements() {
        let (ad, nd) = (a.dim(al), n.dims[al]);
        let q = &quotients[al];
        let rel = relations[al].basis_matrix();
        let dims = [ad, relations[al].dim()];
        let idn = Matrix::identity(nd);
        let ida = Matrix::identity(ad);

        let lift = a.mult(al).kron(&idn);
        certify(
            &mut r,
            "balanced.action_well_defined",
            &[al],
            &q.projector.compose(&lift.compose(&ida.kron(&rel))),
            &dims,
            "balanced action",
            al,
        )?;
        act.push(q.projector.compose(&lift.compose(&ida.kron(&q.section))));

        let lift = a.bracket(al).kron(&idn);
        certify(
            &mut r,
            "balanced.lie_well_defined",
            &[al],
            &q.projector.compose(&lift.compose(&ida.kron(&rel))),
            &dims,
            "balanced Lie action",
            al,
        )?;
        lie.push(q.projector.compose(&lift.compose(&ida.kron(&q.section))));
    }

    let mut maps = Vec::new();
    for (al, be) in g.pairs() {
        let ab = g.mul(al, be);
        let hb = h.dim(be);
        // b ⊗ n ↦ b_(0,α) ⊗ τ(n) ⊗ b_(1,β)
        let moved = a.rho(al, be).kron(n.transport(order, al, be));
        let reorder = permute_factors(&[a.dim(al), hb, n.dims[al]], &[0, 2, 1]);
        let lift = quotients[al]
            .projector
            .kron(&Matrix::identity(hb))
            .compose(&moved.permute_rows(&reorder));
        let rel = relations[ab].basis_matrix();
        certify(
            &mut r,
            "balanced.coaction_well_defined",
            &[al, be],
            &lift.compose(&rel),
            &[relations[ab].dim()],
            "balanced coaction",
            al,
        )?;
        maps.push(lift.compose(&quotients[ab].section));
    }
    let module = PoissonHopfModule {
        dims: quotients.iter().map(|q| q.dim).collect(),
        act,
        lie,
        coaction: Coaction { order, maps },
    };
    Ok(BalancedTensor {
        quotients,
        relations,
        module,
        report: r,
    })
}

/// `A ⊗_B N` over `B = A^{AcoH}`.
pub fn trivial_induction(
    n: &TrivialBModule,
    a: &ComodulePoissonAlgebra,
    h: &HopfGCoalgebra,
) -> Result<BalancedTensor, Error> {
    trivial_induction_over(n, a, h, &base_algebra_space(a, h)?)
}

/// `A ⊗_B M^{AcoH}` together with the data it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeTensor {
    pub base: GradedSubspaceFamily,
    /// `M^{AcoH}` inside `M`.
    pub acoinvariants: GradedSubspaceFamily,
    /// `M^{AcoH}` as a trivial `B`-module, in its canonical basis.
    pub coefficients: TrivialBModule,
    pub tensor: BalancedTensor,
}

impl RelativeTensor {
    /// `Φ_α(a ⊗ m) = a · m`, as a matrix `(A ⊗_B M^{AcoH})_α → M_α`.
    pub fn multiplication(
        &self,
        m: &PoissonHopfModule,
        a: &ComodulePoissonAlgebra,
        alpha: usize,
    ) -> Matrix {
        let u = self.acoinvariants.get(alpha).basis_matrix();
        let lift = m.act[alpha].compose(&Matrix::identity(a.dim(alpha)).kron(&u));
        lift.compose(&self.tensor.quotients[alpha].section)
    }
}

pub fn relative_tensor(
    m: &PoissonHopfModule,
    a: &ComodulePoissonAlgebra,
    h: &HopfGCoalgebra,
) -> Result<RelativeTensor, Error> {
    let base = base_algebra_space(a, h)?;
    let w = acoinvariants(m, a, h)?;
    let coefficients = TrivialBModule::from_subspaces(&w, &m.act, &m.coaction, &base, h)?;
    let tensor = trivial_induction_over(&coefficients, a, h, &base)?;
    Ok(RelativeTensor {
        base,
        acoinvariants: w,
        coefficients,
        tensor,
    })
}
