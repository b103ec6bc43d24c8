//! The named example instances, their expected invariants, and deliberately
//! broken variants used to exercise the checkers.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::coinvariants::{acoinvariants, base_algebra_space, coinvariants, poisson_annihilator};
use crate::fundamental::{diamond_prime, fundamental_iso};
use crate::group::GroupTable;
use crate::hopf::{build_group_algebra, build_trivial_hopf_g, AlgebraFamily, HopfGCoalgebra};
use crate::linalg::{int, permute_factors, Matrix};
use crate::poisson::{
    Coaction, ColinearUnitMap, ComodulePoissonAlgebra, PoissonAlgebraFamily, PoissonHopfModule,
};
use crate::report::{Report, Witness};
use crate::{Error, Instance};

pub const FIXTURES: [&str; 4] = ["F1", "F2", "F3", "F4"];

/// Broken variants, each violating exactly one law family.
pub const MUTANTS: [&str; 5] = [
    "F1-bad-antipode",
    "F1-bad-coaction",
    "F2-leibniz",
    "F1-zero-counit",
    "F1-noncolinear-phi",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExpectedValue {
    Dims(Vec<usize>),
    Flag(bool),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureBundle {
    pub name: String,
    pub instance: Instance,
    pub expected: BTreeMap<String, ExpectedValue>,
}

fn dims(xs: &[usize]) -> ExpectedValue {
    ExpectedValue::Dims(xs.to_vec())
}

/// `k[C₂]` in every degree of `C₂`.
fn c2_hopf() -> HopfGCoalgebra {
    build_trivial_hopf_g(
        &build_group_algebra(2).expect("k[C2]"),
        &GroupTable::cyclic(2),
    )
    .expect("k[C2] is a Hopf algebra")
}

/// `k[x,y]/(x², y²)` with basis `1, x, y, xy`.
fn dual_numbers_mult() -> Matrix {
    let mut m = Matrix::zeros(4, 16);
    // products of monomials x^a y^b, encoded as bit masks a + 2b
    for i in 0..4 {
        for j in 0..4 {
            if i & j == 0 {
                m[(i | j, i * 4 + j)] = int(1);
            }
        }
    }
    m
}

/// `{x, y} = xy`, extended by the Leibniz rule (all other basis brackets vanish).
fn dual_numbers_bracket(value: &[(usize, i64)]) -> Matrix {
    let mut b = Matrix::zeros(4, 16);
    for &(row, v) in value {
        b[(row, 4 + 2)] = int(v);
        b[(row, 2 * 4 + 1)] = int(-v);
    }
    b
}

fn f1_parts() -> (HopfGCoalgebra, ComodulePoissonAlgebra, ColinearUnitMap) {
    let h = c2_hopf();
    let a = ComodulePoissonAlgebra {
        poisson: PoissonAlgebraFamily::with_zero_bracket(h.algebra.clone()),
        coaction: Coaction::regular(&h),
    };
    let phi = ColinearUnitMap {
        maps: alloc::vec![Matrix::identity(2); 2],
    };
    (h, a, phi)
}

fn f2_parts(bracket: Matrix) -> (HopfGCoalgebra, ComodulePoissonAlgebra, ColinearUnitMap) {
    let h = build_group_algebra(1).expect("k");
    let algebra = AlgebraFamily {
        group: GroupTable::trivial(),
        dims: alloc::vec![4],
        mult: alloc::vec![dual_numbers_mult()],
        unit: alloc::vec![Matrix::identity(4).column(0)],
    };
    let a = ComodulePoissonAlgebra {
        poisson: PoissonAlgebraFamily {
            algebra,
            bracket: alloc::vec![bracket],
        },
        coaction: Coaction::trivial(4, &h),
    };
    let phi = ColinearUnitMap {
        maps: alloc::vec![Matrix::column_vector(&Matrix::identity(4).column(0))],
    };
    (h, a, phi)
}

fn f4_parts() -> (HopfGCoalgebra, ComodulePoissonAlgebra, ColinearUnitMap) {
    let h = c2_hopf();
    let g = h.group().clone();
    let reorder = permute_factors(&[2, 4, 2, 4], &[0, 2, 1, 3]);
    let m1 = h.mult(0).clone();
    let mult = m1
        .kron(&dual_numbers_mult())
        .compose(&Matrix::identity(64).permute_rows(&reorder));
    let bracket = m1
        .kron(&dual_numbers_bracket(&[(3, 1)]))
        .compose(&Matrix::identity(64).permute_rows(&reorder));
    let algebra = AlgebraFamily {
        group: g.clone(),
        dims: alloc::vec![8; 2],
        mult: alloc::vec![mult; 2],
        unit: alloc::vec![Matrix::identity(8).column(0); 2],
    };
    // u ⊗ p ↦ u_(1) ⊗ p ⊗ u_(2)
    let move_h = permute_factors(&[2, 2, 4], &[0, 2, 1]);
    let maps = g
        .pairs()
        .map(|(al, be)| {
            h.comult(al, be)
                .kron(&Matrix::identity(4))
                .permute_rows(&move_h)
        })
        .collect();
    let a = ComodulePoissonAlgebra {
        poisson: PoissonAlgebraFamily {
            algebra,
            bracket: alloc::vec![bracket; 2],
        },
        coaction: Coaction { order: 2, maps },
    };
    let one = Matrix::column_vector(&Matrix::identity(4).column(0));
    let phi = ColinearUnitMap {
        maps: alloc::vec![Matrix::identity(2).kron(&one); 2],
    };
    (h, a, phi)
}

fn full(
    h: HopfGCoalgebra,
    a: ComodulePoissonAlgebra,
    m: PoissonHopfModule,
    phi: ColinearUnitMap,
) -> Instance {
    Instance {
        hopf: h,
        algebra: Some(a),
        module: Some(m),
        phi: Some(phi),
    }
}

pub fn fixture(name: &str) -> Result<FixtureBundle, Error> {
    let mut expected = BTreeMap::new();
    let instance = match name {
        "F1" => {
            let (h, a, phi) = f1_parts();
            expected.insert("module.coinvariants".into(), dims(&[1, 1]));
            expected.insert("algebra.base".into(), dims(&[1, 1]));
            expected.insert("iso.hypotheses".into(), ExpectedValue::Flag(true));
            expected.insert("iso.holds".into(), ExpectedValue::Flag(true));
            let m = PoissonHopfModule::regular(&a);
            full(h, a, m, phi)
        }
        "F2" => {
            let (h, a, phi) = f2_parts(dual_numbers_bracket(&[(3, 1)]));
            expected.insert("algebra.center".into(), dims(&[2]));
            expected.insert("algebra.base".into(), dims(&[2]));
            expected.insert("diamond_prime.trivial".into(), ExpectedValue::Flag(false));
            expected.insert("iso.hypotheses".into(), ExpectedValue::Flag(false));
            expected.insert("iso.holds".into(), ExpectedValue::Flag(true));
            let m = PoissonHopfModule::regular(&a);
            full(h, a, m, phi)
        }
        "F3" => {
            let (h, a, phi) = f1_parts();
            expected.insert("module.acoinvariants".into(), dims(&[2, 2]));
            expected.insert("tensor.dims".into(), dims(&[4, 4]));
            expected.insert("iso.hypotheses".into(), ExpectedValue::Flag(true));
            expected.insert("iso.holds".into(), ExpectedValue::Flag(true));
            let r = PoissonHopfModule::regular(&a);
            let m = r.direct_sum(&r, a.dims(), &h);
            full(h, a, m, phi)
        }
        "F4" => {
            let (h, a, phi) = f4_parts();
            expected.insert("module.coinvariants".into(), dims(&[4, 4]));
            expected.insert("algebra.center".into(), dims(&[4, 4]));
            expected.insert("algebra.base".into(), dims(&[2, 2]));
            expected.insert("diamond_prime.trivial".into(), ExpectedValue::Flag(false));
            expected.insert("iso.hypotheses".into(), ExpectedValue::Flag(false));
            let m = PoissonHopfModule::regular(&a);
            full(h, a, m, phi)
        }
        _ => {
            return mutant(name).map(|instance| FixtureBundle {
                name: name.to_string(),
                instance,
                expected,
            })
        }
    };
    Ok(FixtureBundle {
        name: name.to_string(),
        instance,
        expected,
    })
}

/// The broken variants listed in [`MUTANTS`].
pub fn mutant(name: &str) -> Result<Instance, Error> {
    match name {
        "F1-bad-antipode" => {
            let (mut h, a, phi) = f1_parts();
            // S(1) = S(x) = 1: singular, and the antipode axiom fails at x
            h.antipode = alloc::vec![Matrix::from_i64(&[&[1, 1], &[0, 0]]); 2];
            h.antipode_inverse = None;
            let m = PoissonHopfModule::regular(&a);
            Ok(full(h, a, m, phi))
        }
        "F1-bad-coaction" => {
            let (h, a, phi) = f1_parts();
            let mut m = PoissonHopfModule::regular(&a);
            // ρ_{g,g}(x) = 1 ⊗ x breaks coassociativity but keeps the counit law
            m.coaction.maps[3] = Matrix::from_i64(&[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]);
            Ok(full(h, a, m, phi))
        }
        "F2-leibniz" => {
            let (h, a, _) = f2_parts(dual_numbers_bracket(&[(0, 1)]));
            Ok(Instance {
                hopf: h,
                algebra: Some(a),
                module: None,
                phi: None,
            })
        }
        "F1-zero-counit" => {
            let (mut h, a, phi) = f1_parts();
            h.counit = Matrix::zeros(1, 2);
            let m = PoissonHopfModule::regular(&a);
            Ok(full(h, a, m, phi))
        }
        "F1-noncolinear-phi" => {
            let (h, a, mut phi) = f1_parts();
            phi.maps = alloc::vec![Matrix::from_i64(&[&[1, 1], &[0, 0]]); 2];
            let m = PoissonHopfModule::regular(&a);
            Ok(full(h, a, m, phi))
        }
        _ => Err(Error::UnknownFixture(name.into())),
    }
}

fn value_of(key: &str, inst: &Instance) -> Result<Option<ExpectedValue>, Error> {
    let h = &inst.hopf;
    let (Some(a), Some(m)) = (&inst.algebra, &inst.module) else {
        return Ok(None);
    };
    Ok(Some(match key {
        "module.coinvariants" => {
            ExpectedValue::Dims(coinvariants(&m.coaction, &m.dims, h)?.per_degree.dims())
        }
        "module.annihilator" => {
            ExpectedValue::Dims(poisson_annihilator(&m.dims, &m.lie, a.dims()).dims())
        }
        "module.acoinvariants" => ExpectedValue::Dims(acoinvariants(m, a, h)?.dims()),
        "algebra.center" => {
            ExpectedValue::Dims(poisson_annihilator(a.dims(), &a.poisson.bracket, a.dims()).dims())
        }
        "algebra.base" => ExpectedValue::Dims(base_algebra_space(a, h)?.dims()),
        "diamond_prime.trivial" => {
            let phi = inst
                .phi
                .as_ref()
                .ok_or(Error::InvalidArgument("diamond-prime needs phi"))?;
            ExpectedValue::Flag(diamond_prime(m, a, phi, h)?.0.is_trivial())
        }
        "tensor.dims" | "iso.hypotheses" | "iso.holds" => {
            let phi = inst
                .phi
                .as_ref()
                .ok_or(Error::InvalidArgument("the fundamental map needs phi"))?;
            let cert = fundamental_iso(m, a, phi, h)?;
            match key {
                "tensor.dims" => ExpectedValue::Dims(cert.tensor_dims),
                "iso.hypotheses" => ExpectedValue::Flag(cert.hypotheses_hold),
                _ => ExpectedValue::Flag(cert.iso_holds),
            }
        }
        _ => return Ok(None),
    }))
}

/// Recomputes every expected value of a bundle; unknown keys fail.
pub fn verify_expected(
    expected: &BTreeMap<String, ExpectedValue>,
    inst: &Instance,
) -> Result<Report, Error> {
    let mut r = Report::new();
    for (key, want) in expected {
        let law = alloc::format!("expected.{key}");
        match value_of(key, inst)? {
            Some(got) if &got == want => r.pass(&law, &[]),
            _ => r.fail(
                &law,
                &[],
                Witness {
                    basis: Vec::new(),
                    residual: Vec::new(),
                },
            ),
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_numbers_products() {
        let m = dual_numbers_mult();
        // x * y = xy, y * x = xy, x * x = 0
        assert_eq!(m.column(4 + 2), Matrix::identity(4).column(3));
        assert_eq!(m.column(2 * 4 + 1), Matrix::identity(4).column(3));
        assert!(m.column(4 + 1).iter().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(fixture("F9"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn fixtures_build() {
        for name in FIXTURES.iter().chain(MUTANTS.iter()) {
            fixture(name).unwrap();
        }
    }
}
