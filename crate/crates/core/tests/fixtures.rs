use phm_core::checks::{certify_iso, lemma_suite, validate};
use phm_core::coinvariants::{base_algebra_space, GradedSubspaceFamily};
use phm_core::fixtures::{fixture, verify_expected, FIXTURES};
use phm_core::fundamental::{
    check_adjunction, trivial_induction_over, InverseSource, TrivialBModule,
};
use phm_core::linalg::int;
use phm_core::{Error, Status, Subspace};

#[test]
fn expected_values_recompute() {
    for name in FIXTURES {
        let b = fixture(name).unwrap();
        let r = verify_expected(&b.expected, &b.instance).unwrap();
        assert!(!r.entries.is_empty(), "{name}");
        assert!(r.passed(), "{name}: {:?}", r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn fixtures_validate_without_skips() {
    for name in FIXTURES {
        let r = validate(&fixture(name).unwrap().instance).unwrap();
        assert!(r.passed(), "{name}");
        assert!(
            r.entries
                .iter()
                .all(|e| !matches!(e.status, Status::Skipped(_))),
            "{name}"
        );
    }
}

#[test]
fn lemma_suite_passes() {
    for name in FIXTURES {
        let r = lemma_suite(&fixture(name).unwrap().instance).unwrap();
        assert!(r.passed(), "{name}: {:?}", r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn certificates_by_fixture() {
    for (name, hypotheses, source) in [
        ("F1", true, InverseSource::Formula),
        ("F2", false, InverseSource::ExactInversion),
        ("F3", true, InverseSource::Formula),
        ("F4", false, InverseSource::ExactInversion),
    ] {
        let c = certify_iso(&fixture(name).unwrap().instance).unwrap();
        assert!(c.report.passed(), "{name}");
        assert!(c.morphism && c.iso_holds, "{name}");
        assert_eq!(c.hypotheses_hold, hypotheses, "{name}");
        assert_eq!(c.inverse_source, source, "{name}");
        assert_eq!(c.tensor_dims, c.module_dims, "{name}");
    }
}

#[test]
fn non_central_base_is_refused() {
    // span{1, x} is a subalgebra of k[x,y]/(x², y²) but {x, y} = xy ≠ 0
    let inst = fixture("F2").unwrap().instance;
    let (a, h) = (inst.algebra.as_ref().unwrap(), &inst.hopf);
    let e = |i: usize| (0..4).map(|j| int((i == j) as i64)).collect::<Vec<_>>();
    let base = GradedSubspaceFamily {
        per_degree: vec![Subspace::span(4, &[e(0), e(1)])],
    };
    let n = TrivialBModule::regular(a, &base, h).unwrap();
    match trivial_induction_over(&n, a, h, &base) {
        Err(Error::IllDefined {
            map,
            degree: 0,
            witness,
        }) => {
            assert_eq!(map, "balanced Lie action");
            assert!(!witness.residual.is_empty());
        }
        other => panic!("expected a refusal, got {other:?}"),
    }
}

#[test]
fn adjunction_on_base_and_its_double() {
    let inst = fixture("F1").unwrap().instance;
    let (a, m, h) = (
        inst.algebra.as_ref().unwrap(),
        inst.module.as_ref().unwrap(),
        &inst.hopf,
    );
    let base = base_algebra_space(a, h).unwrap();
    let b = TrivialBModule::regular(a, &base, h).unwrap();
    let bb = b.direct_sum(&b, &base, h.group().order());
    for n in [&b, &bb] {
        let r = check_adjunction(n, m, a, h).unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        for law in [
            "adjunction.triangle_induced",
            "adjunction.triangle_acoinvariants",
        ] {
            assert!(
                r.entries
                    .iter()
                    .any(|e| e.law == law && e.status == Status::Pass),
                "{law}"
            );
        }
    }
}
