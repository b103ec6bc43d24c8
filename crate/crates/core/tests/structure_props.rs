use phm_core::checks::{certify_iso, coinvariant_summary, validate};
use phm_core::fixtures::fixture;
use phm_core::hopf::{
    build_group_algebra, build_trivial_hopf_g, check_g_coalgebra, check_hopf_g_coalgebra,
};
use phm_core::linalg::frac;
use phm_core::{GroupTable, Instance, Matrix, PoissonHopfModule, Scalar};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

/// Unit lower triangular matrices, one per size in `dims`.
fn changes_of_basis(dims: Vec<usize>) -> impl Strategy<Value = Vec<Matrix>> {
    let total: usize = dims.iter().map(|d| d * d).sum();
    prop::collection::vec(scalar(), total).prop_map(move |v| {
        let mut offset = 0;
        dims.iter()
            .map(|&d| {
                let t = Matrix::from_fn(d, d, |r, c| match r.cmp(&c) {
                    std::cmp::Ordering::Greater => v[offset + r * d + c].clone(),
                    std::cmp::Ordering::Equal => frac(1, 1),
                    std::cmp::Ordering::Less => frac(0, 1),
                });
                offset += d * d;
                t
            })
            .collect()
    })
}

/// The same module written in the basis given by the columns of `t[α]⁻¹`.
fn transport(
    m: &PoissonHopfModule,
    a_dims: &[usize],
    h_dims: &[usize],
    t: &[Matrix],
) -> PoissonHopfModule {
    let order = t.len();
    let inv: Vec<Matrix> = t.iter().map(|x| x.inverse().unwrap()).collect();
    let conj = |ops: &[Matrix]| -> Vec<Matrix> {
        (0..order)
            .map(|al| {
                t[al]
                    .compose(&ops[al])
                    .compose(&Matrix::identity(a_dims[al]).kron(&inv[al]))
            })
            .collect()
    };
    let g = GroupTable::cyclic(order);
    let mut coaction = m.coaction.clone();
    for (al, be) in g.pairs() {
        let idx = g.pair_index(al, be);
        coaction.maps[idx] = t[al]
            .kron(&Matrix::identity(h_dims[be]))
            .compose(&m.coaction.maps[idx])
            .compose(&inv[g.mul(al, be)]);
    }
    PoissonHopfModule {
        dims: m.dims.clone(),
        act: conj(&m.act),
        lie: conj(&m.lie),
        coaction,
    }
}

fn cyclic_fixture_with_basis_change() -> impl Strategy<Value = (&'static str, Vec<Matrix>)> {
    prop::sample::select(vec!["F1", "F3"]).prop_flat_map(|name| {
        let dims = fixture(name).unwrap().instance.module.unwrap().dims;
        (Just(name), changes_of_basis(dims))
    })
}

fn with_module(inst: &Instance, m: PoissonHopfModule) -> Instance {
    Instance {
        module: Some(m),
        ..inst.clone()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn group_algebras_are_hopf(n in 1usize..6) {
        let h = build_group_algebra(n).unwrap();
        prop_assert!(check_g_coalgebra(&h).unwrap().passed());
        prop_assert!(check_hopf_g_coalgebra(&h).unwrap().passed());
    }

    #[test]
    fn constant_families_are_hopf_g_coalgebras(n in 1usize..4, k in 1usize..4) {
        let h = build_trivial_hopf_g(&build_group_algebra(n).unwrap(), &GroupTable::cyclic(k)).unwrap();
        prop_assert!(check_g_coalgebra(&h).unwrap().passed());
        prop_assert!(check_hopf_g_coalgebra(&h).unwrap().passed());
    }

    #[test]
    fn change_of_basis_preserves_certificates((name, t) in cyclic_fixture_with_basis_change()) {
        let inst = fixture(name).unwrap().instance;
        let (a, m) = (inst.algebra.as_ref().unwrap(), inst.module.as_ref().unwrap());
        let moved = with_module(&inst, transport(m, a.dims(), inst.hopf.dims(), &t));
        prop_assert!(validate(&moved).unwrap().passed());
        prop_assert_eq!(coinvariant_summary(&moved).unwrap(), coinvariant_summary(&inst).unwrap());
        let cert = certify_iso(&moved).unwrap();
        prop_assert!(cert.iso_holds && cert.morphism && cert.hypotheses_hold);
    }

    #[test]
    fn perturbed_action_is_detected(deg in 0usize..2, r in 0usize..2, c in 0usize..4, n in 1i64..4) {
        let b = fixture("F1").unwrap();
        let mut m = b.instance.module.clone().unwrap();
        m.act[deg][(r, c)] += frac(n, 1);
        prop_assert!(!validate(&with_module(&b.instance, m)).unwrap().passed());
    }

    #[test]
    fn perturbed_coaction_is_detected(pair in 0usize..4, r in 0usize..4, c in 0usize..2, n in 1i64..4) {
        let b = fixture("F1").unwrap();
        let mut m = b.instance.module.clone().unwrap();
        m.coaction.maps[pair][(r, c)] += frac(n, 1);
        prop_assert!(!validate(&with_module(&b.instance, m)).unwrap().passed());
    }
}
