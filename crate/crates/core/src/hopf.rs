//! Graded algebra families, G-coalgebras and Hopf G-coalgebras.
//!
//! A Hopf G-coalgebra is a family `{H_alpha}` of algebras with
//! comultiplications `Δ_{α,β}: H_{αβ} → H_α ⊗ H_β`, a counit `ε: H_e → k` and
//! antipodes `S_α: H_α → H_{α⁻¹}`. The antipode axiom is checked in the form
//! `m_α(S_{α⁻¹} ⊗ id)Δ_{α⁻¹,α} = ε(·)1_α = m_α(id ⊗ S_{α⁻¹})Δ_{α,α⁻¹}`,
//! both sides maps `H_e → H_α`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::group::GroupTable;
use crate::linalg::{permute_factors, Matrix, Scalar};
use crate::report::Report;
use crate::Error;

/// A family of unital associative algebras indexed by a finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFamily {
    pub group: GroupTable,
    pub dims: Vec<usize>,
    /// `mult[α]`: `H_α ⊗ H_α → H_α`, shape `d x d²`.
    pub mult: Vec<Matrix>,
    /// `unit[α]`: coordinates of `1_α`.
    pub unit: Vec<Vec<Scalar>>,
}

impl AlgebraFamily {
    pub fn dim(&self, a: usize) -> usize {
        self.dims[a]
    }

    /// `1_α` as a `d x 1` matrix.
    pub fn unit_map(&self, a: usize) -> Matrix {
        Matrix::column_vector(&self.unit[a])
    }

    pub fn identity(&self, a: usize) -> Matrix {
        Matrix::identity(self.dims[a])
    }

    /// `m_α` restricted to `e_i ⊗ -`, i.e. left multiplication by basis vector `i`.
    pub fn left_mult(&self, a: usize, i: usize) -> Matrix {
        let d = self.dims[a];
        self.mult[a].block(0, i * d, d, d)
    }

    /// Product of two coordinate vectors in `H_α`.
    pub fn product(&self, a: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let xy = Matrix::column_vector(x).kron(&Matrix::column_vector(y));
        self.mult[a].apply(&xy.column(0))
    }

    pub fn is_commutative(&self, a: usize) -> bool {
        let d = self.dims[a];
        let swap = permute_factors(&[d, d], &[1, 0]);
        self.mult[a].permute_cols(&swap) == self.mult[a]
    }

    pub(crate) fn check_shapes(&self, name: &str) -> Result<(), Error> {
        let n = self.group.order();
        if self.dims.len() != n || self.mult.len() != n || self.unit.len() != n {
            return Err(Error::InvalidArgument(
                "algebra family does not have one entry per degree",
            ));
        }
        for a in 0..n {
            let d = self.dims[a];
            expect_shape(&format!("{name}.mult[{a}]"), &self.mult[a], (d, d * d))?;
            if self.unit[a].len() != d {
                return Err(Error::Shape {
                    map: format!("{name}.unit[{a}]"),
                    expected: (d, 1),
                    found: (self.unit[a].len(), 1),
                });
            }
        }
        Ok(())
    }

    /// Associativity and two-sided unit law in every degree.
    pub fn check_algebra(&self, prefix: &str) -> Report {
        let mut r = Report::new();
        for a in self.group.elements() {
            let d = self.dims[a];
            let id = self.identity(a);
            let m = &self.mult[a];
            let lhs = m.compose(&m.kron(&id));
            let rhs = m.compose(&id.kron(m));
            r.law(
                &format!("{prefix}.associativity"),
                &[a],
                &lhs,
                &rhs,
                &[d, d, d],
            );
            let one = self.unit_map(a);
            let left = m.compose(&one.kron(&id));
            let right = m.compose(&id.kron(&one));
            r.law(&format!("{prefix}.unit_left"), &[a], &left, &id, &[d]);
            r.law(&format!("{prefix}.unit_right"), &[a], &right, &id, &[d]);
        }
        r
    }

    pub fn check_commutative(&self, prefix: &str) -> Report {
        let mut r = Report::new();
        for a in self.group.elements() {
            let d = self.dims[a];
            let swap = permute_factors(&[d, d], &[1, 0]);
            r.law(
                &format!("{prefix}.commutativity"),
                &[a],
                &self.mult[a],
                &self.mult[a].permute_cols(&swap),
                &[d, d],
            );
        }
        r
    }
}

pub(crate) fn expect_shape(name: &str, m: &Matrix, expected: (usize, usize)) -> Result<(), Error> {
    if m.shape() != expected {
        return Err(Error::Shape {
            map: name.into(),
            expected,
            found: m.shape(),
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfGCoalgebra {
    pub algebra: AlgebraFamily,
    /// Indexed by `group.pair_index(α, β)`: `H_{αβ} → H_α ⊗ H_β`.
    pub comult: Vec<Matrix>,
    /// `1 x dim(H_e)`.
    pub counit: Matrix,
    /// `antipode[α]`: `H_α → H_{α⁻¹}`.
    pub antipode: Vec<Matrix>,
    /// `antipode_inverse[α] = S_α⁻¹`: `H_{α⁻¹} → H_α`, filled by [`invert_antipode`].
    pub antipode_inverse: Option<Vec<Matrix>>,
}

impl HopfGCoalgebra {
    pub fn group(&self) -> &GroupTable {
        &self.algebra.group
    }

    pub fn dim(&self, a: usize) -> usize {
        self.algebra.dims[a]
    }

    pub fn dims(&self) -> &[usize] {
        &self.algebra.dims
    }

    pub fn comult(&self, a: usize, b: usize) -> &Matrix {
        &self.comult[self.group().pair_index(a, b)]
    }

    pub fn mult(&self, a: usize) -> &Matrix {
        &self.algebra.mult[a]
    }

    pub fn unit_map(&self, a: usize) -> Matrix {
        self.algebra.unit_map(a)
    }

    pub fn is_commutative(&self) -> bool {
        self.group()
            .elements()
            .all(|a| self.algebra.is_commutative(a))
    }

    pub fn antipode_inverse(&self) -> Result<&[Matrix], Error> {
        self.antipode_inverse
            .as_deref()
            .ok_or(Error::MissingAntipodeInverse)
    }

    /// Computes and stores `S⁻¹`.
    pub fn with_antipode_inverse(mut self) -> Result<Self, Error> {
        self.antipode_inverse = Some(invert_antipode(&self)?);
        Ok(self)
    }

    /// A functional `f` on `H_β` with `f(1_β) = 1`, used to read off `n` from `n ⊗ 1_β`.
    pub fn unit_dual(&self, b: usize) -> Option<Matrix> {
        let u = &self.algebra.unit[b];
        let k = u.iter().position(|x| !x.is_zero())?;
        let mut f = Matrix::zeros(1, u.len());
        f[(0, k)] = Scalar::one() / &u[k];
        Some(f)
    }

    pub fn check_shapes(&self) -> Result<(), Error> {
        self.algebra.check_shapes("H")?;
        let g = self.group();
        let n = g.order();
        if self.comult.len() != n * n || self.antipode.len() != n {
            return Err(Error::InvalidArgument(
                "Hopf G-coalgebra does not have one map per degree (pair)",
            ));
        }
        for (a, b) in g.pairs() {
            let shape = (self.dim(a) * self.dim(b), self.dim(g.mul(a, b)));
            expect_shape(&format!("H.comult[{a},{b}]"), self.comult(a, b), shape)?;
        }
        expect_shape("H.counit", &self.counit, (1, self.dim(g.identity())))?;
        for a in g.elements() {
            expect_shape(
                &format!("H.antipode[{a}]"),
                &self.antipode[a],
                (self.dim(g.inv(a)), self.dim(a)),
            )?;
        }
        if let Some(inv) = &self.antipode_inverse {
            for (a, s) in inv.iter().enumerate() {
                expect_shape(
                    &format!("H.antipode_inverse[{a}]"),
                    s,
                    (self.dim(a), self.dim(g.inv(a))),
                )?;
            }
        }
        Ok(())
    }
}

/// Coassociativity `(Δ_{α,β} ⊗ id)Δ_{αβ,γ} = (id ⊗ Δ_{β,γ})Δ_{α,βγ}` and the
/// counit laws `(id ⊗ ε)Δ_{α,e} = id = (ε ⊗ id)Δ_{e,α}`.
pub fn check_g_coalgebra(h: &HopfGCoalgebra) -> Result<Report, Error> {
    h.check_shapes()?;
    let g = h.group();
    let e = g.identity();
    let mut r = Report::new();
    for (a, b, c) in g.triples() {
        let lhs = h
            .comult(a, b)
            .kron(&h.algebra.identity(c))
            .compose(h.comult(g.mul(a, b), c));
        let rhs = h
            .algebra
            .identity(a)
            .kron(h.comult(b, c))
            .compose(h.comult(a, g.mul(b, c)));
        r.law(
            "coalgebra.coassociativity",
            &[a, b, c],
            &lhs,
            &rhs,
            &[h.dim(g.mul(g.mul(a, b), c))],
        );
    }
    for a in g.elements() {
        let id = h.algebra.identity(a);
        let right = id.kron(&h.counit).compose(h.comult(a, e));
        r.law("coalgebra.counit_right", &[a], &right, &id, &[h.dim(a)]);
        let left = h.counit.kron(&id).compose(h.comult(e, a));
        r.law("coalgebra.counit_left", &[a], &left, &id, &[h.dim(a)]);
    }
    Ok(r)
}

/// Algebra laws, multiplicativity of `Δ` and `ε`, the antipode axiom, and the
/// derived antipode identities (reported under `hopf.derived.*`).
pub fn check_hopf_g_coalgebra(h: &HopfGCoalgebra) -> Result<Report, Error> {
    h.check_shapes()?;
    let g = h.group();
    let e = g.identity();
    let mut r = h.algebra.check_algebra("hopf.algebra");
    for (a, b) in g.pairs() {
        let ab = g.mul(a, b);
        let (da, db, dab) = (h.dim(a), h.dim(b), h.dim(ab));
        let delta = h.comult(a, b);
        let lhs = delta.compose(h.mult(ab));
        let map = permute_factors(&[da, db, da, db], &[0, 2, 1, 3]);
        let rhs = h
            .mult(a)
            .kron(h.mult(b))
            .compose(&delta.kron(delta).permute_rows(&map));
        r.law(
            "hopf.comult_multiplicative",
            &[a, b],
            &lhs,
            &rhs,
            &[dab, dab],
        );
        let unit = delta.compose(&h.unit_map(ab));
        r.law(
            "hopf.comult_unital",
            &[a, b],
            &unit,
            &h.unit_map(a).kron(&h.unit_map(b)),
            &[1],
        );
    }
    let de = h.dim(e);
    let lhs = h.counit.compose(h.mult(e));
    r.law(
        "hopf.counit_multiplicative",
        &[e],
        &lhs,
        &h.counit.kron(&h.counit),
        &[de, de],
    );
    r.law(
        "hopf.counit_unital",
        &[e],
        &h.counit.compose(&h.unit_map(e)),
        &Matrix::identity(1),
        &[1],
    );
    for a in g.elements() {
        let ai = g.inv(a);
        let da = h.dim(a);
        let rhs = h.unit_map(a).compose(&h.counit);
        let left = h
            .mult(a)
            .compose(&h.antipode[ai].kron(&h.algebra.identity(a)))
            .compose(h.comult(ai, a));
        r.law("hopf.antipode_left", &[a], &left, &rhs, &[de]);
        let right = h
            .mult(a)
            .compose(&h.algebra.identity(a).kron(&h.antipode[ai]))
            .compose(h.comult(a, ai));
        r.law("hopf.antipode_right", &[a], &right, &rhs, &[de]);

        // S_α(ab) = S_α(b)S_α(a)
        let s = &h.antipode[a];
        let lhs = s.compose(h.mult(a));
        let swap = permute_factors(&[da, da], &[1, 0]);
        let rhs = h.mult(ai).compose(&s.kron(s)).permute_cols(&swap);
        r.law(
            "hopf.derived.antimultiplicative",
            &[a],
            &lhs,
            &rhs,
            &[da, da],
        );
        r.law(
            "hopf.derived.antipode_unit",
            &[a],
            &s.compose(&h.unit_map(a)),
            &h.unit_map(ai),
            &[1],
        );
    }
    for (a, b) in g.pairs() {
        let (ai, bi) = (g.inv(a), g.inv(b));
        let ab = g.mul(a, b);
        let lhs = h.comult(bi, ai).compose(&h.antipode[ab]);
        let swap = permute_factors(&[h.dim(ai), h.dim(bi)], &[1, 0]);
        let rhs = h.antipode[a]
            .kron(&h.antipode[b])
            .compose(h.comult(a, b))
            .permute_rows(&swap);
        r.law(
            "hopf.derived.comult_antipode",
            &[a, b],
            &lhs,
            &rhs,
            &[h.dim(ab)],
        );
    }
    r.law(
        "hopf.derived.counit_antipode",
        &[e],
        &h.counit.compose(&h.antipode[e]),
        &h.counit,
        &[de],
    );
    Ok(r)
}

/// `S_α⁻¹: H_{α⁻¹} → H_α` for every `α`, checked against both composites.
pub fn invert_antipode(h: &HopfGCoalgebra) -> Result<Vec<Matrix>, Error> {
    let g = h.group();
    let mut out = Vec::with_capacity(g.order());
    for a in g.elements() {
        let s = &h.antipode[a];
        let inv = s
            .inverse()
            .ok_or(Error::NonInvertibleAntipode { degree: a })?;
        debug_assert_eq!(inv.compose(s), h.algebra.identity(a));
        out.push(inv);
    }
    Ok(out)
}

/// The group algebra `k[C_n]` as a Hopf algebra over the trivial group, with
/// basis `1, x, ..., x^{n-1}`.
pub fn build_group_algebra(n: usize) -> Result<HopfGCoalgebra, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument("group algebra of C_0 requested"));
    }
    let one = Scalar::one;
    let mut mult = Matrix::zeros(n, n * n);
    for i in 0..n {
        for j in 0..n {
            mult[((i + j) % n, i * n + j)] = one();
        }
    }
    let mut unit = alloc::vec![Scalar::zero(); n];
    unit[0] = one();
    let mut comult = Matrix::zeros(n * n, n);
    let mut antipode = Matrix::zeros(n, n);
    for i in 0..n {
        comult[(i * n + i, i)] = one();
        antipode[((n - i) % n, i)] = one();
    }
    let counit = Matrix::from_fn(1, n, |_, _| one());
    let algebra = AlgebraFamily {
        group: GroupTable::trivial(),
        dims: alloc::vec![n],
        mult: alloc::vec![mult],
        unit: alloc::vec![unit],
    };
    HopfGCoalgebra {
        algebra,
        comult: alloc::vec![comult],
        counit,
        antipode: alloc::vec![antipode],
        antipode_inverse: None,
    }
    .with_antipode_inverse()
}

/// Every `H_α` equal to the given Hopf algebra, `Δ_{α,β} = Δ`, `S_α = S`.
pub fn build_trivial_hopf_g(
    hopf: &HopfGCoalgebra,
    g: &GroupTable,
) -> Result<HopfGCoalgebra, Error> {
    if hopf.group().order() != 1 {
        return Err(Error::InvalidArgument(
            "expected a Hopf algebra over the trivial group",
        ));
    }
    if !check_g_coalgebra(hopf)?.passed() || !check_hopf_g_coalgebra(hopf)?.passed() {
        return Err(Error::Uncertified {
            what: "input Hopf algebra axioms",
        });
    }
    let inv = invert_antipode(hopf)?;
    let n = g.order();
    let d = hopf.dim(0);
    let algebra = AlgebraFamily {
        group: g.clone(),
        dims: alloc::vec![d; n],
        mult: alloc::vec![hopf.algebra.mult[0].clone(); n],
        unit: alloc::vec![hopf.algebra.unit[0].clone(); n],
    };
    Ok(HopfGCoalgebra {
        algebra,
        comult: alloc::vec![hopf.comult[0].clone(); n * n],
        counit: hopf.counit.clone(),
        antipode: alloc::vec![hopf.antipode[0].clone(); n],
        antipode_inverse: Some(alloc::vec![inv[0].clone(); n]),
    })
}
