//! Coinvariants `M^{coH}`, Poisson annihilators `M^A`, their intersection
//! `M^{AcoH}`, and closure checks for these substructures.

use alloc::vec::Vec;

use crate::hopf::HopfGCoalgebra;
use crate::linalg::{intersect, kernel, Matrix, Subspace};
use crate::poisson::{Coaction, ComodulePoissonAlgebra, PoissonHopfModule};
use crate::report::Report;
use crate::Error;

/// One subspace `S_α ⊆ X_α` per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspaceFamily {
    pub per_degree: Vec<Subspace>,
}

impl GradedSubspaceFamily {
    pub fn dims(&self) -> Vec<usize> {
        self.per_degree.iter().map(Subspace::dim).collect()
    }

    pub fn get(&self, a: usize) -> &Subspace {
        &self.per_degree[a]
    }

    pub fn is_subfamily_of(&self, other: &GradedSubspaceFamily) -> bool {
        self.per_degree.len() == other.per_degree.len()
            && self
                .per_degree
                .iter()
                .zip(&other.per_degree)
                .all(|(s, t)| s.is_subspace_of(t))
    }
}

/// Families `(m_α)` with `ρ_{α,β}(m_{αβ}) = m_α ⊗ 1_β`, inside `⊕_α M_α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinvariantFamily {
    pub family_space: Subspace,
    /// Projection of `family_space` onto each `M_α`.
    pub per_degree: GradedSubspaceFamily,
}

/// Start of each `M_α` block in `⊕_α M_α`.
pub fn block_offsets(dims: &[usize]) -> Vec<usize> {
    dims.iter()
        .scan(0, |acc, &d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect()
}

pub fn coinvariants(
    c: &Coaction,
    dims: &[usize],
    h: &HopfGCoalgebra,
) -> Result<CoinvariantFamily, Error> {
    c.check_shapes("M", dims, h)?;
    let g = h.group();
    let offsets = block_offsets(dims);
    let total: usize = dims.iter().sum();
    let mut blocks = Vec::new();
    for (a, b) in g.pairs() {
        let ab = g.mul(a, b);
        let mut rows = Matrix::zeros(dims[a] * h.dim(b), total);
        rows.set_block(0, offsets[ab], c.get(a, b));
        let trivial = Matrix::identity(dims[a]).kron(&h.unit_map(b));
        let current = rows.block(0, offsets[a], rows.rows(), dims[a]);
        rows.set_block(0, offsets[a], &(&current - &trivial));
        blocks.push(rows);
    }
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let family_space = kernel(&Matrix::vstack(total, &refs));
    let per_degree = g
        .elements()
        .map(|a| {
            let proj: Vec<_> = family_space
                .basis()
                .iter()
                .map(|v| v[offsets[a]..offsets[a] + dims[a]].to_vec())
                .collect();
            Subspace::span(dims[a], &proj)
        })
        .collect();
    Ok(CoinvariantFamily {
        family_space,
        per_degree: GradedSubspaceFamily { per_degree },
    })
}

/// Vectors killed by every `a ⋄ ·` for `a` in a basis of `A_α`.
pub fn poisson_annihilator(
    dims: &[usize],
    lie: &[Matrix],
    a_dims: &[usize],
) -> GradedSubspaceFamily {
    let per_degree = dims
        .iter()
        .zip(a_dims)
        .zip(lie)
        .map(|((&d, &ad), lie)| {
            let blocks: Vec<Matrix> = (0..ad).map(|i| lie.block(0, i * d, d, d)).collect();
            let refs: Vec<&Matrix> = blocks.iter().collect();
            kernel(&Matrix::vstack(d, &refs))
        })
        .collect();
    GradedSubspaceFamily { per_degree }
}

/// `M^{AcoH}_α = M^{coH}_α ∩ M^{A_α}_α`.
pub fn acoinvariants(
    m: &PoissonHopfModule,
    a: &ComodulePoissonAlgebra,
    h: &HopfGCoalgebra,
) -> Result<GradedSubspaceFamily, Error> {
    let co = coinvariants(&m.coaction, &m.dims, h)?;
    let ann = poisson_annihilator(&m.dims, &m.lie, a.dims());
    let per_degree = co
        .per_degree
        .per_degree
        .iter()
        .zip(&ann.per_degree)
        .map(|(x, y)| intersect(x, y))
        .collect::<Result<_, _>>()?;
    Ok(GradedSubspaceFamily { per_degree })
}

/// `B = A^{AcoH}`.
pub fn base_algebra_space(
    a: &ComodulePoissonAlgebra,
    h: &HopfGCoalgebra,
) -> Result<GradedSubspaceFamily, Error> {
    acoinvariants(&PoissonHopfModule::regular(a), a, h)
}

/// `op(S ⊗ T) ⊆ U` for a bilinear `op`, with witness indices into the bases.
fn bilinear_closed(
    r: &mut Report,
    law: &str,
    idx: &[usize],
    op: &Matrix,
    s: &Subspace,
    t: &Subspace,
    u: &Subspace,
) {
    let m = u
        .membership_matrix()
        .compose(&op.compose(&s.basis_matrix().kron(&t.basis_matrix())));
    r.vanishes(law, idx, &m, &[s.dim(), t.dim()]);
}

/// `ρ_{α,β}(S_{αβ}) ⊆ S_α ⊗ H_β` for every pair.
fn subcomodule(
    r: &mut Report,
    law: &str,
    c: &Coaction,
    family: &GradedSubspaceFamily,
    h: &HopfGCoalgebra,
) {
    let g = h.group();
    for (al, be) in g.pairs() {
        let ab = g.mul(al, be);
        let q = family
            .get(al)
            .membership_matrix()
            .kron(&Matrix::identity(h.dim(be)));
        let s = family.get(ab);
        r.vanishes(
            law,
            &[al, be],
            &q.compose(&c.get(al, be).compose(&s.basis_matrix())),
            &[s.dim()],
        );
    }
}

/// Closure of `S ⊆ A` under unit, product and bracket, plus subcomodule.
fn poisson_subalgebra(
    r: &mut Report,
    prefix: &str,
    a: &ComodulePoissonAlgebra,
    s: &GradedSubspaceFamily,
    h: &HopfGCoalgebra,
) {
    for al in h.group().elements() {
        let sub = s.get(al);
        r.vanishes(
            &alloc::format!("{prefix}.unit"),
            &[al],
            &sub.membership_matrix().compose(&a.unit_map(al)),
            &[1],
        );
        bilinear_closed(
            r,
            &alloc::format!("{prefix}.product"),
            &[al],
            a.mult(al),
            sub,
            sub,
            sub,
        );
        bilinear_closed(
            r,
            &alloc::format!("{prefix}.bracket"),
            &[al],
            a.bracket(al),
            sub,
            sub,
            sub,
        );
    }
    subcomodule(
        r,
        &alloc::format!("{prefix}.subcomodule"),
        &a.coaction,
        s,
        h,
    );
}

/// Subcomodule and subalgebra claims for `M^A`, `A^A`, `B` and `M^{AcoH}`.
pub fn check_substructures(
    m: &PoissonHopfModule,
    a: &ComodulePoissonAlgebra,
    h: &HopfGCoalgebra,
) -> Result<Report, Error> {
    let g = h.group();
    let mut r = Report::new();
    let m_ann = poisson_annihilator(&m.dims, &m.lie, a.dims());
    subcomodule(
        &mut r,
        "substructure.annihilator_subcomodule",
        &m.coaction,
        &m_ann,
        h,
    );

    let center = poisson_annihilator(a.dims(), &a.poisson.bracket, a.dims());
    poisson_subalgebra(&mut r, "substructure.center", a, &center, h);

    let base = base_algebra_space(a, h)?;
    for al in g.elements() {
        let inside = center
            .get(al)
            .membership_matrix()
            .compose(&base.get(al).basis_matrix());
        r.vanishes(
            "substructure.base_in_center",
            &[al],
            &inside,
            &[base.get(al).dim()],
        );
    }
    poisson_subalgebra(&mut r, "substructure.base", a, &base, h);

    let w = acoinvariants(m, a, h)?;
    for al in g.elements() {
        bilinear_closed(
            &mut r,
            "substructure.module_base_action",
            &[al],
            &m.act[al],
            base.get(al),
            w.get(al),
            w.get(al),
        );
        bilinear_closed(
            &mut r,
            "substructure.module_base_lie",
            &[al],
            &m.lie[al],
            base.get(al),
            w.get(al),
            w.get(al),
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::build_group_algebra;

    #[test]
    fn trivial_coaction_has_everything_coinvariant() {
        let h = build_group_algebra(2).unwrap();
        let c = Coaction::trivial(3, &h);
        let co = coinvariants(&c, &[3], &h).unwrap();
        assert_eq!(co.per_degree.dims(), [3]);
        assert_eq!(co.family_space.dim(), 3);
    }

    #[test]
    fn regular_coaction_of_group_algebra() {
        // Δ(x) = x ⊗ x, so only the unit is coinvariant
        let h = build_group_algebra(3).unwrap();
        let co = coinvariants(&Coaction::regular(&h), &[3], &h).unwrap();
        assert_eq!(co.per_degree.dims(), [1]);
        assert_eq!(
            co.per_degree.get(0).basis()[0],
            Matrix::identity(3).column(0)
        );
    }

    #[test]
    fn zero_lie_action_annihilator_is_everything() {
        let ann = poisson_annihilator(&[3], &[Matrix::zeros(3, 6)], &[2]);
        assert_eq!(ann.dims(), [3]);
    }

    #[test]
    fn offsets() {
        assert_eq!(block_offsets(&[2, 0, 3]), [0, 2, 2]);
    }
}
