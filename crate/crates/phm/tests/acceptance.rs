//! Acceptance criteria, one pass/fail line each.

use std::process::Command;

use phm::bundle::{parse_bundle, to_json, Bundle};
use phm::{cli, records};
use phm_core::checks::{certify_iso, coinvariant_summary, lemma_suite, validate};
use phm_core::coinvariants::{base_algebra_space, GradedSubspaceFamily};
use phm_core::fixtures::{fixture, mutant, ExpectedValue, FIXTURES};
use phm_core::fundamental::{check_adjunction, trivial_induction_over, TrivialBModule};
use phm_core::linalg::int;
use phm_core::{Coaction, Error, HopfGCoalgebra, Instance, Report, Status, Subspace};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn instance(name: &str) -> Instance {
    fixture(name).unwrap().instance
}

fn passes(r: &Report, law: &str) -> bool {
    let mut hits = r.entries.iter().filter(|e| e.law == law).peekable();
    hits.peek().is_some() && hits.all(|e| e.status == Status::Pass)
}

fn prefix_passes(r: &Report, prefix: &str) -> bool {
    let mut hits = r
        .entries
        .iter()
        .filter(|e| e.law.starts_with(prefix))
        .peekable();
    hits.peek().is_some() && hits.all(|e| matches!(e.status, Status::Pass | Status::Flag(_)))
}

fn require(r: &Report, laws: &[&str], context: &str) -> Outcome {
    for law in laws {
        ensure(passes(r, law), || format!("{context}: {law} did not pass"))?;
    }
    Ok(())
}

// 1. Axiom closure, and mutants that fail only at their own law.
fn axiom_closure() -> Outcome {
    for name in FIXTURES {
        let r = validate(&instance(name)).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{name}: {}", records::tally(&r)))?;
        ensure(
            !r.entries
                .iter()
                .any(|e| matches!(e.status, Status::Skipped(_))),
            || format!("{name}: a checker was skipped"),
        )?;
        for family in [
            "group.",
            "H.coalgebra.",
            "H.hopf.antipode_",
            "H.hopf.derived.",
            "A.poisson.",
            "A.comodule_poisson.bracket_colinear",
            "M.comodule.",
            "M.poisson_module.",
            "M.hopf_module.",
            "phi.",
        ] {
            ensure(prefix_passes(&r, family), || {
                format!("{name}: {family}* missing or failing")
            })?;
        }
    }
    for (name, law) in [
        ("F1-bad-antipode", "H.hopf.antipode_"),
        ("F1-bad-coaction", "M.comodule.coassociativity"),
        ("F2-leibniz", "A.poisson.leibniz"),
        ("F1-zero-counit", "H.coalgebra.counit_"),
        ("F1-noncolinear-phi", "phi.colinear"),
    ] {
        let r = validate(&mutant(name).unwrap()).map_err(|e| e.to_string())?;
        ensure(!r.passed(), || format!("{name} was not detected"))?;
        for f in r.failures() {
            ensure(f.law.starts_with(law), || {
                format!("{name}: stray failure {}", f.law)
            })?;
            ensure(
                matches!(&f.status, Status::Fail(w) if !w.residual.is_empty()),
                || format!("{name}: failure without witness"),
            )?;
        }
    }
    Ok(())
}

/// Rank over ℚ of an integer matrix by fraction-free elimination.
fn bareiss_rank(mut rows: Vec<Vec<i128>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        for r in rank + 1..rows.len() {
            for k in c + 1..cols {
                rows[r][k] = (rows[rank][c] * rows[r][k] - rows[r][c] * rows[rank][k]) / prev;
            }
            rows[r][c] = 0;
        }
        prev = rows[rank][c];
        rank += 1;
    }
    rank
}

fn integer(x: &phm_core::Scalar) -> i128 {
    assert!(
        num_traits::One::is_one(x.denom()),
        "oracle expects integral structure constants"
    );
    x.numer().try_into().unwrap()
}

/// Variables `x_{γ,i}` for every degree and basis vector of a comodule, and
/// one row per coordinate of `ρ_{α,β}(x_{αβ}) − x_α ⊗ 1_β`.
fn coinvariant_rows(
    c: &Coaction,
    dims: &[usize],
    h: &HopfGCoalgebra,
) -> (Vec<Vec<i128>>, Vec<usize>) {
    let g = h.group();
    let mut offsets = vec![0];
    for d in dims {
        offsets.push(offsets.last().unwrap() + d);
    }
    let n = offsets[dims.len()];
    let mut rows = Vec::new();
    for al in g.elements() {
        for be in g.elements() {
            let ab = g.mul(al, be);
            let rho = c.get(al, be);
            let unit = &h.algebra.unit[be];
            for i in 0..dims[al] {
                for j in 0..h.dim(be) {
                    let mut row = vec![0i128; n];
                    for k in 0..dims[ab] {
                        row[offsets[ab] + k] += integer(&rho[(i * h.dim(be) + j, k)]);
                    }
                    row[offsets[al] + i] -= integer(&unit[j]);
                    rows.push(row);
                }
            }
        }
    }
    (rows, offsets)
}

fn selector(offsets: &[usize], n: usize, al: usize) -> Vec<Vec<i128>> {
    (offsets[al]..offsets[al + 1])
        .map(|v| (0..n).map(|k| (k == v) as i128).collect())
        .collect()
}

/// Rows forcing `x_α` into the Poisson center of `A_α`.
fn center_rows(
    a: &phm_core::ComodulePoissonAlgebra,
    offsets: &[usize],
    n: usize,
    al: usize,
) -> Vec<Vec<i128>> {
    let d = a.dim(al);
    let br = a.bracket(al);
    let mut rows = Vec::new();
    for i in 0..d {
        for l in 0..d {
            let mut row = vec![0i128; n];
            for k in 0..d {
                row[offsets[al] + k] = integer(&br[(l, i * d + k)]);
            }
            rows.push(row);
        }
    }
    rows
}

/// Dimension of the projection to degree `α` of the solutions of `base`.
fn projected_dim(base: &[Vec<i128>], offsets: &[usize], n: usize, al: usize) -> usize {
    let mut with = base.to_vec();
    with.extend(selector(offsets, n, al));
    bareiss_rank(with) - bareiss_rank(base.to_vec())
}

struct OracleDims {
    module_coinvariants: Vec<usize>,
    algebra_center: Vec<usize>,
    algebra_base: Vec<usize>,
}

fn oracle(inst: &Instance) -> OracleDims {
    let h = &inst.hopf;
    let (a, m) = (
        inst.algebra.as_ref().unwrap(),
        inst.module.as_ref().unwrap(),
    );
    let degrees: Vec<usize> = h.group().elements().collect();
    let (m_rows, m_off) = coinvariant_rows(&m.coaction, &m.dims, h);
    let mn = m_off[m.dims.len()];
    let (a_rows, a_off) = coinvariant_rows(&a.coaction, a.dims(), h);
    let an = a_off[a.dims().len()];
    OracleDims {
        module_coinvariants: degrees
            .iter()
            .map(|&al| projected_dim(&m_rows, &m_off, mn, al))
            .collect(),
        algebra_center: degrees
            .iter()
            .map(|&al| a.dim(al) - bareiss_rank(center_rows(a, &a_off, an, al)))
            .collect(),
        algebra_base: degrees
            .iter()
            .map(|&al| {
                let mut rows = a_rows.clone();
                rows.extend(center_rows(a, &a_off, an, al));
                projected_dim(&rows, &a_off, an, al)
            })
            .collect(),
    }
}

// 2. Coinvariant dimensions against a brute-force oracle and the frozen table.
fn coinvariants_oracle() -> Outcome {
    let table: [(&str, &str, Vec<usize>); 6] = [
        ("F1", "module.coinvariants", vec![1, 1]),
        ("F1", "algebra.base", vec![1, 1]),
        ("F2", "algebra.center", vec![2]),
        ("F2", "algebra.base", vec![2]),
        ("F4", "module.coinvariants", vec![4, 4]),
        ("F4", "algebra.base", vec![2, 2]),
    ];
    for (name, key, want) in table {
        let b = fixture(name).unwrap();
        let o = oracle(&b.instance);
        let s = coinvariant_summary(&b.instance).map_err(|e| e.to_string())?;
        let (from_oracle, from_library) = match key {
            "module.coinvariants" => (&o.module_coinvariants, &s.module_coinvariants),
            "algebra.center" => (&o.algebra_center, &s.algebra_center),
            _ => (&o.algebra_base, &s.algebra_base),
        };
        ensure(from_oracle == &want, || {
            format!("{name} {key}: oracle {from_oracle:?}, table {want:?}")
        })?;
        ensure(from_library == &want, || {
            format!("{name} {key}: library {from_library:?}")
        })?;
        ensure(
            b.expected.get(key) == Some(&ExpectedValue::Dims(want.clone())),
            || format!("{name} {key}: embedded expected value differs"),
        )?;
    }
    Ok(())
}

// 3. The lemma suite certifies exactly on every fixture.
fn lemma_suite_certifies() -> Outcome {
    for name in FIXTURES {
        let r = lemma_suite(&instance(name)).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.passed(), || format!("{name}: {}", records::tally(&r)))?;
        ensure(prefix_passes(&r, "substructure."), || {
            format!("{name}: closure checks missing")
        })?;
        require(
            &r,
            &[
                "p_image.within_coinvariants",
                "p_image.covers_coinvariants",
                "projection.multiplicative",
                "projection.absorbs_p_e",
                "projection.lie_through_phi",
                "projection.reconstruction",
                "gamma.lie.backward_after_forward",
                "gamma.lie.forward_after_backward",
                "gamma.poisson.backward_after_forward",
                "gamma.poisson.forward_after_backward",
            ],
            name,
        )?;
        if r.flag_value("diamond_prime.trivial") == Some(true) {
            require(&r, &["iso.acoinvariants_equal_coinvariants"], name)?;
        }
    }
    Ok(())
}

// 4. λ retracts the coaction and is Lie A-linear via commutativity of H.
fn retraction() -> Outcome {
    for name in FIXTURES {
        let r = lemma_suite(&instance(name)).map_err(|e| e.to_string())?;
        require(
            &r,
            &["lambda.retraction", "lambda.lie_linear", "lambda.colinear"],
            name,
        )?;
        ensure(
            r.flag_value("lambda.route.h_commutative") == Some(true),
            || format!("{name}: not on the commutative route"),
        )?;
    }
    Ok(())
}

// 5. The fundamental map and its certificate.
fn fundamental_theorem() -> Outcome {
    for name in FIXTURES {
        let c = certify_iso(&instance(name)).map_err(|e| e.to_string())?;
        ensure(c.report.passed() && c.morphism, || {
            format!("{name}: morphism certification failed")
        })?;
        match name {
            "F1" | "F3" => {
                ensure(c.hypotheses_hold && c.flags.all(), || {
                    format!("{name}: hypotheses false")
                })?;
                ensure(c.iso_holds, || format!("{name}: not inverse"))?;
                require(
                    &c.report,
                    &[
                        "iso.inverse_after_forward",
                        "iso.forward_after_inverse",
                        "iso.acoinvariants_equal_coinvariants",
                    ],
                    name,
                )?;
                ensure(
                    c.report.flag_value("iso.inverse_from_formula") == Some(true),
                    || format!("{name}: inverse not from the formula"),
                )?;
            }
            _ => ensure(!c.hypotheses_hold, || {
                format!("{name}: hypotheses unexpectedly true")
            })?,
        }
        if name == "F3" {
            ensure(
                c.tensor_dims == vec![4, 4] && c.module_dims == vec![4, 4],
                || format!("F3: tensor dims {:?}", c.tensor_dims),
            )?;
        }
    }
    Ok(())
}

// 6. The adjunction on F1 with N = B and N = B ⊕ B.
fn adjunction() -> Outcome {
    let inst = instance("F1");
    let (a, m, h) = (
        inst.algebra.as_ref().unwrap(),
        inst.module.as_ref().unwrap(),
        &inst.hopf,
    );
    let base = base_algebra_space(a, h).map_err(|e| e.to_string())?;
    let b = TrivialBModule::regular(a, &base, h).map_err(|e| e.to_string())?;
    let bb = b.direct_sum(&b, &base, h.group().order());
    for (label, n) in [("B", &b), ("B+B", &bb)] {
        let r = check_adjunction(n, m, a, h).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{label}: {}", records::tally(&r)))?;
        require(
            &r,
            &[
                "adjunction.psi.backward_after_forward",
                "adjunction.psi.forward_after_backward",
                "adjunction.triangle_induced",
                "adjunction.triangle_acoinvariants",
            ],
            label,
        )?;
        for prefix in ["adjunction.unit_morphism.", "adjunction.counit_morphism."] {
            ensure(prefix_passes(&r, prefix), || {
                format!("{label}: {prefix}* failed")
            })?;
        }
    }
    Ok(())
}

// 7. Quotient-induced maps are certified, and an ill-defined one is refused.
fn well_definedness() -> Outcome {
    for name in FIXTURES {
        let inst = instance(name);
        let r = lemma_suite(&inst).map_err(|e| e.to_string())?;
        require(
            &r,
            &[
                "balanced.action_well_defined",
                "balanced.lie_well_defined",
                "balanced.coaction_well_defined",
                "diamond_prime.well_defined",
                "adjunction.psi_prime_well_defined",
            ],
            name,
        )?;
        let c = certify_iso(&inst).map_err(|e| e.to_string())?;
        require(&c.report, &["iso.forward_well_defined"], name)?;
    }
    let inst = instance("F2");
    let (a, h) = (inst.algebra.as_ref().unwrap(), &inst.hopf);
    let e = |i: usize| (0..4).map(|j| int((i == j) as i64)).collect::<Vec<_>>();
    // span{1, x}: a subalgebra, but {x, y} = xy, so not central
    let base = GradedSubspaceFamily {
        per_degree: vec![Subspace::span(4, &[e(0), e(1)])],
    };
    let n = TrivialBModule::regular(a, &base, h).map_err(|e| e.to_string())?;
    match trivial_induction_over(&n, a, h, &base) {
        Err(Error::IllDefined {
            map: "balanced Lie action",
            ..
        }) => Ok(()),
        Err(other) => Err(format!("wrong diagnostic: {other}")),
        Ok(_) => Err("ill-defined Lie action was accepted".into()),
    }
}

fn phm(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_phm"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!(
            "phm {args:?} exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        )
    })?;
    Ok(out.stdout)
}

// 8. Export, parse and re-certify reproduce the same reports byte for byte.
fn round_trip() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for name in FIXTURES {
        let original = Bundle::from(fixture(name).unwrap());
        let path = dir.path().join(format!("{name}.json"));
        let p = path.to_str().unwrap();
        phm(&["fixtures", "export", name, "-o", p])?;
        let parsed = parse_bundle(&path).map_err(|e| e.to_string())?;
        ensure(parsed == original, || {
            format!("{name}: parsed bundle differs")
        })?;
        ensure(
            to_json(&parsed) == std::fs::read_to_string(&path).unwrap(),
            || format!("{name}: re-export differs"),
        )?;
        let inst = &original.instance;
        let direct = [
            (
                "validate",
                records::report_lines(&cli::validation_report(&original).unwrap()),
            ),
            ("coinvariants", cli::coinvariant_text(inst).unwrap().0),
            (
                "fundamental",
                records::certificate_lines(&certify_iso(inst).unwrap()),
            ),
            ("lemmas", records::report_lines(&lemma_suite(inst).unwrap())),
        ];
        for (cmd, want) in direct {
            let got = phm(&[cmd, p])?;
            ensure(got == want.as_bytes(), || {
                format!("{name}: {cmd} report differs after round trip")
            })?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("axiom closure and mutant detection", axiom_closure),
        (
            "coinvariant dimensions match the oracle",
            coinvariants_oracle,
        ),
        ("lemma suite certifies exactly", lemma_suite_certifies),
        ("lambda retracts the coaction", retraction),
        ("fundamental map certificates", fundamental_theorem),
        ("adjunction with N = B and B+B", adjunction),
        ("well-definedness guards", well_definedness),
        ("export/parse round trip", round_trip),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("criterion {} ({label}): PASS", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({label}): FAIL: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
