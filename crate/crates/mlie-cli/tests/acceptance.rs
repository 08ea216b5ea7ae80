//! The acceptance suite: ten standalone criteria, one test and one printed
//! verdict line each. All comparisons are exact; runtime bounds are
//! asserted where stated.

use std::process::Command;
use std::time::{Duration, Instant};

use mlie::classical::{osp_closure_defect, verify_superization};
use mlie::instances::{
    fan_quiver, gl11_z2, gl1111_z4, gl21_z2, gl2_trivial, gl_z3_dense, isolated_vertices_quiver,
    monomial_algebra_cyclotomic, monomial_algebra_generic, single_arrow_quiver, two_arrow_quiver,
    ClassicalInstance,
};
use mlie::rep::{OperatorRep, Representation};
use mlie::sampler::Sampler;
use mlie::{Bicharacter, FieldElement, FieldSpec};
use mlie_cli::report::Report;

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn tmp(name: &str) -> String {
    format!("{}/{name}", env!("CARGO_TARGET_TMPDIR"))
}

/// Runs the CLI and returns (exit code, parsed report).
fn mlie_with_report(args: &[&str], report_name: &str) -> (i32, Report) {
    let report_path = tmp(report_name);
    let out = Command::new(env!("CARGO_BIN_EXE_mlie"))
        .args(args)
        .args(["--witnesses", "--report", &report_path])
        .output()
        .expect("binary runs");
    let report = serde_json::from_str(&std::fs::read_to_string(&report_path).expect("report written"))
        .expect("report parses");
    (out.status.code().expect("no signal"), report)
}

fn verdict(report: &Report, name: &str) -> (bool, Option<(Vec<String>, String)>) {
    let entry = report
        .checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("check {name} missing from report"));
    (
        entry.verdict == "pass",
        entry.witness.as_ref().map(|w| (w.labels.clone(), w.defect.clone())),
    )
}

/// `3 q (1 - q - q^2 + q^3)` over the given field, rendered as the defect
/// term on `x3`.
fn cubic_jacobi_defect(spec: FieldSpec) -> String {
    let q = FieldElement::generator(spec).expect("field has a generator");
    let one = FieldElement::one(spec);
    let q2 = &q * &q;
    let q3 = &q2 * &q;
    let inner = &(&(&one - &q) - &q2) + &q3;
    let c = &(&FieldElement::from_int(spec, 3) * &q) * &inner;
    assert!(!c.is_zero());
    format!("({c})*x3")
}

#[test]
fn criterion_01_truncated_monomial_jacobi_failure() {
    for n in [4u32, 5, 6] {
        let start = Instant::now();
        let (code, report) = mlie_with_report(
            &["check", "bji", "bas", &fixture(&format!("monomial_n{n}.json"))],
            &format!("c1_n{n}.json"),
        );
        assert_eq!(code, 1);
        let (pass, witness) = verdict(&report, "bji");
        assert!(!pass);
        let (labels, defect) = witness.expect("witness requested");
        assert_eq!(labels, vec!["x", "x", "x"]);
        assert_eq!(defect, cubic_jacobi_defect(FieldSpec::Cyclotomic(n)));
        let (pass, _) = verdict(&report, "bas");
        assert!(!pass);
        assert!(start.elapsed() < Duration::from_secs(1), "n = {n} took {:?}", start.elapsed());
    }
    println!("criterion 1 (truncated monomial Jacobi failure, n = 4, 5, 6): pass");
}

#[test]
fn criterion_02_cubic_truncation_is_jacobi_but_not_strict() {
    let start = Instant::now();
    let (code, report) = mlie_with_report(&["check", "bji", &fixture("monomial_n3.json")], "c2_bji.json");
    assert_eq!(code, 0);
    assert!(verdict(&report, "bji").0);
    let (code, report) = mlie_with_report(
        &["check", "bas", "strict", &fixture("monomial_n3.json")],
        "c2_bas_strict.json",
    );
    assert_eq!(code, 1);
    assert!(!verdict(&report, "bas").0);
    assert!(!verdict(&report, "strict").0);
    assert!(start.elapsed() < Duration::from_secs(1), "took {:?}", start.elapsed());
    println!("criterion 2 (cubic truncation satisfies Jacobi, fails antisymmetry and strictness): pass");
}

#[test]
fn criterion_03_generic_coefficients_reproduce_the_verdicts() {
    for n in [4u32, 5, 6] {
        let (code, report) = mlie_with_report(
            &[
                "check",
                "bji",
                "bas",
                &fixture(&format!("monomial_n{n}_generic.json")),
                "--field",
                "generic",
            ],
            &format!("c3_n{n}.json"),
        );
        assert_eq!(code, 1);
        let (pass, witness) = verdict(&report, "bji");
        assert!(!pass);
        let (labels, defect) = witness.expect("witness requested");
        assert_eq!(labels, vec!["x", "x", "x"]);
        assert_eq!(defect, cubic_jacobi_defect(FieldSpec::Generic));
        assert!(!verdict(&report, "bas").0);
    }
    println!("criterion 3 (generic symbolic coefficients reproduce the cyclotomic verdicts): pass");
}

#[test]
fn criterion_04_path_algebra_dimension_table() {
    let start = Instant::now();
    let braiding = Bicharacter::cyclic_root(3).unwrap();
    let field = braiding.field();
    let mut built = Vec::new();
    for k in 1..=3 {
        built.push((k, isolated_vertices_quiver(k).unwrap()));
    }
    built.push((4, single_arrow_quiver().unwrap()));
    built.push((5, two_arrow_quiver().unwrap()));
    for n in 0..=4 {
        built.push((n + 6, fan_quiver(n).unwrap()));
    }
    for (expected_dim, quiver) in built {
        let gm = quiver.path_algebra(field, None).unwrap();
        assert_eq!(gm.dim(), expected_dim);
        gm.check_associative().expect_pass();
        let flat = gm.to_graded(&braiding).unwrap();
        flat.check_graded().expect_pass();
        flat.check_associative().expect_pass();
    }
    assert!(start.elapsed() < Duration::from_secs(1), "took {:?}", start.elapsed());
    println!("criterion 4 (path algebra dimensions 1, 2, 3, 4, 5, n+6 with graded associative tables): pass");
}

#[test]
fn criterion_05_randomized_implication_suite() {
    let start = Instant::now();
    let mut sampler = Sampler::new(0xac5);
    let mut skew_seen = 0usize;
    for _ in 0..120 {
        let inst = sampler.next_instance().unwrap();
        let alg = &inst.algebra;
        let bas = alg.check_bas();
        let bji = alg.check_bji();
        let strict = alg.check_strict();
        let sym = alg.check_product_symmetry();
        if bas.pass {
            assert!(bji.pass, "antisymmetry without Jacobi on a sampled instance");
        }
        assert_eq!(strict.pass, sym.pass, "strictness differs from product symmetry");
        if inst.skew {
            skew_seen += 1;
            assert!(strict.pass, "skew braiding without strictness");
        }
    }
    assert!(skew_seen >= 30, "only {skew_seen} skew instances sampled");
    assert!(start.elapsed() < Duration::from_secs(30), "took {:?}", start.elapsed());
    println!("criterion 5 (120 randomized algebras: antisymmetry implies Jacobi, strict = product symmetry, skew implies strict): pass");
}

#[test]
fn criterion_06_trace_kernel_closure_and_its_obstruction() {
    for (label, inst) in [("gl(1,1)", gl11_z2().unwrap()), ("gl(2,1)", gl21_z2().unwrap())] {
        let tr = inst.trace().unwrap();
        let alg = &inst.algebra;
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let a = alg.basis_element(i);
                let b = alg.basis_element(j);
                let br = alg.bracket(&inst.braiding, &a, &b);
                assert!(
                    tr.qtrace(&br).iter().all(FieldElement::is_zero),
                    "{label}: bracket of basis pair ({i}, {j}) has nonzero quantum trace"
                );
                let (u, v) = (alg.degree_of(&a).unwrap(), alg.degree_of(&b).unwrap());
                if v == alg.group().neg(&u) {
                    let defect = tr.trace_closure_defect(&a, &b).unwrap();
                    assert!(
                        defect.iter().all(FieldElement::is_zero),
                        "{label}: closure defect at opposite-degree pair ({i}, {j})"
                    );
                }
            }
        }
    }

    let inst = gl_z3_dense().unwrap();
    let tr = inst.trace().unwrap();
    let alg = &inst.algebra;
    let mut nonzero_found = false;
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let a = alg.basis_element(i);
            let b = alg.basis_element(j);
            let (u, v) = (alg.degree_of(&a).unwrap(), alg.degree_of(&b).unwrap());
            if v == alg.group().neg(&u) {
                let defect = tr.trace_closure_defect(&a, &b).unwrap();
                nonzero_found |= defect.iter().any(|c| !c.is_zero());
            }
        }
    }
    assert!(nonzero_found, "no nonzero closure defect on the dense non-skew instance");
    println!("criterion 6 (quantum trace kills brackets on skew instances; non-skew instance shows a nonzero closure defect): pass");
}

#[test]
fn criterion_07_orthogonal_subalgebra_and_closure_defect() {
    let inst = gl2_trivial().unwrap();
    let t = inst.transpose().unwrap();
    let osp = t.compute_osp(&inst.identity(), &inst.braiding).unwrap();
    assert_eq!(osp.dim(), 1);
    let flat = inst.algebra.to_graded(&inst.braiding).unwrap();
    osp.check_bracket_closed(&flat).unwrap().expect_pass();

    for (label, inst) in [
        ("gl(1,1)", gl11_z2().unwrap()),
        ("gl(2,1)", gl21_z2().unwrap()),
        ("gl(1,1,1,1)", gl1111_z4().unwrap()),
        ("gl(2)", gl2_trivial().unwrap()),
    ] {
        let m = inst.identity();
        let alg = &inst.algebra;
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let defect =
                    osp_closure_defect(alg, &inst.braiding, &m, &alg.basis_element(i), &alg.basis_element(j))
                        .unwrap();
                assert!(defect.is_zero(), "{label}: nonzero closure obstruction at pair ({i}, {j})");
            }
        }
    }
    println!("criterion 7 (identity-form solution space of gl(2) is so(2), bracket-closed; skew closure obstruction vanishes): pass");
}

#[test]
fn criterion_08_superization_commutes_with_both_constructions() {
    let start = Instant::now();
    for (label, inst) in [("gl(1,1)", gl11_z2().unwrap()), ("gl(1,1,1,1)", gl1111_z4().unwrap())] {
        let tr = inst.trace().unwrap();
        let t = inst.transpose().unwrap();
        let check = verify_superization(&tr, &t, &inst.identity()).unwrap();
        assert!(check.pass, "{label}: {check}");
    }
    // The same verdict through the CLI on the shipped documents.
    for name in ["gl11_z2.json", "gl1111_z4.json"] {
        let (code, report) = mlie_with_report(&["verify-superization", &fixture(name)], &format!("c8_{name}"));
        assert_eq!(code, 0, "{name}");
        assert!(report.all_pass(), "{name}");
    }
    assert!(start.elapsed() < Duration::from_secs(5), "took {:?}", start.elapsed());
    println!("criterion 8 (superization transports the trace kernel and the orthosymplectic space to the direct computations): pass");
}

#[test]
fn criterion_09_representation_checks() {
    for n in 3..=6 {
        for alg in [
            monomial_algebra_cyclotomic(n).unwrap(),
            monomial_algebra_generic(n).unwrap(),
        ] {
            let rep = Representation::regular(&alg).unwrap();
            rep.check_rep().expect_pass();
            rep.check_module().expect_pass();

            // Restriction to the span of the non-unit monomials.
            let sub: Vec<_> = (1..alg.dim()).map(|i| alg.basis_element(i)).collect();
            let restricted = rep.restrict(&sub).unwrap();
            restricted.check_rep().expect_pass();

            // Composition with the left regular operator representation of
            // the carrier matrix algebra.
            let sigma = OperatorRep::left_regular(alg.field(), alg.group(), rep.carrier_degrees()).unwrap();
            let composed = rep.compose_faithful(&sigma).unwrap();
            composed.check_rep().expect_pass();
        }
    }

    let (code, report) = mlie_with_report(&["rep-check", &fixture("rep_regular_n3.json")], "c9_regular.json");
    assert_eq!(code, 0);
    assert!(report.all_pass());
    let (code, report) = mlie_with_report(&["rep-check", &fixture("rep_perturbed_n3.json")], "c9_perturbed.json");
    assert_eq!(code, 1);
    let (pass, witness) = verdict(&report, "rep");
    assert!(!pass);
    let (labels, _) = witness.expect("witness requested");
    assert_eq!(labels, vec!["x", "x"]);
    let (pass, witness) = verdict(&report, "module");
    assert!(!pass);
    assert_eq!(witness.expect("witness requested").0, vec!["x", "x", "1"]);
    println!("criterion 9 (regular representations pass; restriction and faithful composition pass; the perturbed document fails at (x, x)): pass");
}

#[test]
fn criterion_10_superization_soundness() {
    let skew_fixtures: [(&str, ClassicalInstance); 4] = [
        ("gl(1,1)", gl11_z2().unwrap()),
        ("gl(2,1)", gl21_z2().unwrap()),
        ("gl(1,1,1,1)", gl1111_z4().unwrap()),
        ("gl(2)", gl2_trivial().unwrap()),
    ];
    for (label, inst) in skew_fixtures {
        assert!(inst.braiding.is_skew_symmetric().pass, "{label} fixture must be skew");
        let s = mlie::classical::superize(&inst.algebra, &inst.braiding).unwrap();
        // Multiplicativity of the regrouping on every basis pair.
        s.check_multiplicative().expect_pass();

        // The induced parity braiding is a fixed point of the construction
        // and extends the sign-of-parities rule over all block labels.
        let r0 = inst.braiding.super_quotient().unwrap();
        let r00 = r0.super_quotient().unwrap();
        assert_eq!(r0.generator_values(), r00.generator_values(), "{label}");
        for g in inst.algebra.index_set() {
            for h in inst.algebra.index_set() {
                assert_eq!(
                    inst.braiding.super_value(g, h).unwrap(),
                    r0.eval(g, h),
                    "{label}: parity braiding disagrees at ({g}, {h})"
                );
            }
        }
    }
    println!("criterion 10 (superized products agree on all basis pairs; the parity braiding is its own parity quotient): pass");
}
