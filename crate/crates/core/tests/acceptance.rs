//! Acceptance suite: one test per verification criterion, each printing a
//! pass/fail line. All comparisons are exact; there are no tolerances
//! anywhere in this file.

use std::collections::BTreeMap;
use superw22::algebra::{
    gen, generation_closure, jacobi_check, skew_check, standard_seed, BracketTable, Element,
    Family::*,
};
use superw22::classify::{
    assemble_stage1, classify, degenerate_samples, generic_samples, ClassifyFamilies, FinalClass,
};
use superw22::involution::{axiom_check, unitary_weights, InvolutionSpec, UnitaryOutcome, Variant};
use superw22::repmod::{
    act, module_axiom_check, CoeffFn, ModuleVector, SuperModuleSpec, VirasoroFamily,
};
use superw22::Scalar;

fn s(t: &str) -> Scalar {
    t.parse().unwrap()
}

struct Criterion(&'static str);

impl Criterion {
    fn pass(self) {
        println!("acceptance {}: pass", self.0);
    }
}

#[test]
fn criterion_1_algebra_soundness() {
    let c = Criterion("1 (algebra soundness: skew + jacobi windows, mutation sensitivity)");
    let table = BracketTable::standard();
    for n in 1..=6 {
        let jacobi = jacobi_check(&table, n);
        assert!(
            jacobi.passed(),
            "jacobi violations at N={}: {:?}",
            n,
            jacobi.violations.first()
        );
        assert!(
            jacobi.notes.iter().any(|note| note.contains("degree")),
            "degree-bound certification note missing"
        );
        let skew = skew_check(&table, n);
        assert!(skew.passed(), "skew violations at N={}", n);
    }

    // Scaling any single structure constant by 2 must be detected at N = 3.
    let mutations = [
        (gen(L, 1), gen(L, 2)),
        (gen(L, 1), gen(I, 2)),
        (gen(L, 1), gen(G, 2)),
        (gen(L, 1), gen(H, 2)),
        (gen(G, 1), gen(G, 1)),
        (gen(I, 1), gen(G, 2)),
    ];
    for (x, y) in mutations {
        let mutated = BracketTable::standard().with_scaled_pair(x, y, Scalar::from_int(2));
        let total =
            jacobi_check(&mutated, 3).violations.len() + skew_check(&mutated, 3).violations.len();
        assert!(total >= 1, "mutation of [{},{}] went undetected", x, y);
    }
    c.pass();
}

#[test]
fn criterion_2_generator_set() {
    let c = Criterion("2 (generation closure of the ten-generator seed)");
    let report = generation_closure(&standard_seed(), 6);
    assert!(report.complete(), "missing: {:?}", report.missing);
    assert_eq!(report.reached.len(), 4 * 13);
    c.pass();
}

#[test]
fn criterion_3_virasoro_families() {
    let c = Criterion("3 (module axioms for the three Virasoro families)");
    let samples = [
        VirasoroFamily::Aab {
            a: s("2/3"),
            b: s("5/7"),
        },
        VirasoroFamily::Aab {
            a: s("1/3"),
            b: s("-1/2+2/5i"),
        },
        VirasoroFamily::Aalpha {
            alpha: Scalar::one(),
        },
        VirasoroFamily::Aalpha { alpha: s("-3/7") },
        VirasoroFamily::Bbeta { beta: s("2/5") },
    ];
    for family in samples {
        let spec = SuperModuleSpec::with_zero_table(family.clone(), family.clone(), 15);
        let report = module_axiom_check(&spec, 5).unwrap();
        assert!(
            report.passed(),
            "module axioms fail for {:?}: {:?}",
            family,
            report.violations.first()
        );
    }

    // The action formulas themselves, evaluated exactly.
    let aab = SuperModuleSpec::trivial_extension(s("2/3"), s("5/7"), 15);
    let out = act(&Element::generator(gen(L, 2)), &ModuleVector::u(1), &aab).unwrap();
    assert_eq!(out.even_coefficient(3), s("23/21"));

    let flat = SuperModuleSpec::trivial_extension(Scalar::zero(), Scalar::zero(), 15);
    assert!(
        act(&Element::generator(gen(L, 1)), &ModuleVector::u(0), &flat)
            .unwrap()
            .is_zero()
    );

    let aalpha = SuperModuleSpec::with_zero_table(
        VirasoroFamily::Aalpha {
            alpha: Scalar::one(),
        },
        VirasoroFamily::Aalpha {
            alpha: Scalar::one(),
        },
        15,
    );
    let out = act(&Element::generator(gen(L, 1)), &ModuleVector::u(0), &aalpha).unwrap();
    assert_eq!(out.even_coefficient(1), Scalar::from_int(-3));

    let bbeta = SuperModuleSpec::with_zero_table(
        VirasoroFamily::Bbeta {
            beta: Scalar::zero(),
        },
        VirasoroFamily::Bbeta {
            beta: Scalar::zero(),
        },
        15,
    );
    let out = act(&Element::generator(gen(L, 2)), &ModuleVector::u(-2), &bbeta).unwrap();
    assert_eq!(out.even_coefficient(0), Scalar::from_int(2));

    assert!(
        act(&Element::generator(gen(G, 1)), &ModuleVector::u(0), &aab)
            .unwrap()
            .is_zero()
    );
    c.pass();
}

#[test]
fn criterion_4_classification_stage_1() {
    let c = Criterion("4 (stage-1 nullspace dimensions and closed forms)");

    // I-on-even system at generic (a,b): dimension exactly 1, basis equal to
    // (a + b*i - j)/a on the whole core window (normalized at (0,0)).
    let (a, b) = (s("2/3"), s("5/7"));
    let fam = ClassifyFamilies::aab(a.clone(), b.clone(), a.clone(), b.clone());
    let sol = assemble_stage1(CoeffFn::IEven, &fam, 6).solve();
    assert_eq!(sol.dim(), 1);
    for i in -sol.core..=sol.core {
        for j in -sol.core..=sol.core {
            let expected = (&(&a + &(&b * &Scalar::from_int(i))) - &Scalar::from_int(j))
                .checked_div(&a)
                .unwrap();
            let got = sol.basis[0]
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(Scalar::zero);
            assert_eq!(got, expected, "f sample at ({}, {})", i, j);
        }
    }

    // G-on-even with b2 = b + 1/2: dimension 1, constant basis.
    let fam = ClassifyFamilies::aab(s("2/3"), s("5/7"), s("2/3"), s("17/14"));
    let sol = assemble_stage1(CoeffFn::GEven, &fam, 6).solve();
    assert_eq!(sol.dim(), 1);
    for i in -sol.core..=sol.core {
        for j in -sol.core..=sol.core {
            assert_eq!(
                sol.basis[0]
                    .get(&(i, j))
                    .cloned()
                    .unwrap_or_else(Scalar::zero),
                Scalar::one(),
                "g sample at ({}, {})",
                i,
                j
            );
        }
    }

    // G-on-even with (b, b2) = (-3/2, 0): dimension 1, basis 1/(a-i-j).
    let fam = ClassifyFamilies::aab(s("2/3"), s("-3/2"), s("2/3"), s("0"));
    let sol = assemble_stage1(CoeffFn::GEven, &fam, 6).solve();
    assert_eq!(sol.dim(), 1);
    let a = s("2/3");
    assert!(sol.matches_pattern(|i, j| (&a - &Scalar::from_int(i + j)).checked_inv().ok()));

    // Unrelated (b, b2): dimension 0.
    let fam = ClassifyFamilies::aab(s("2/3"), s("5/7"), s("2/3"), s("1/3"));
    let sol = assemble_stage1(CoeffFn::GEven, &fam, 6).solve();
    assert_eq!(sol.dim(), 0);
    c.pass();
}

#[test]
fn criterion_5_classification_stage_2() {
    let c = Criterion("5 (classify returns trivial-IGH on generic and degenerate samples)");
    let mut samples = generic_samples();
    samples.extend(degenerate_samples());
    assert_eq!(samples.len(), 10);
    for (idx, fam) in samples.iter().enumerate() {
        let outcome = classify(fam, 6);
        assert_eq!(
            outcome.verdict.final_class,
            FinalClass::TrivialIgh,
            "sample {} gave {:?}",
            idx,
            outcome.verdict
        );
        assert!(outcome.verdict.out_of_case_table.is_none());
        for f in ["f", "ft", "h", "ht"] {
            assert!(
                outcome.verdict.dims[f] == 0
                    || outcome.verdict.forced_zero.contains(&f.to_string()),
                "sample {}: {} not forced to zero",
                idx,
                f
            );
        }
    }
    c.pass();
}

fn shipped_involutions() -> Vec<InvolutionSpec> {
    vec![
        InvolutionSpec::new(
            Variant::Plus,
            Scalar::one(),
            Scalar::one(),
            Scalar::from_int(3),
            Scalar::from_int(5),
            s("0+7i"),
            0,
        )
        .unwrap(),
        InvolutionSpec::new(
            Variant::Plus,
            Scalar::from_int(2),
            Scalar::i(),
            s("0+3i"),
            s("1-1i"),
            s("0-2i"),
            0,
        )
        .unwrap(),
        InvolutionSpec::new(
            Variant::Minus,
            Scalar::one(),
            Scalar::one(),
            Scalar::from_int(2),
            s("0+3i"),
            Scalar::from_int(5),
            0,
        )
        .unwrap(),
        InvolutionSpec::new(
            Variant::Minus,
            s("3/5+4/5i"),
            Scalar::one(),
            s("6/5+8/5i"),
            s("-4/5+3/5i"),
            Scalar::from_int(3),
            0,
        )
        .unwrap(),
    ]
}

fn perturbed_involutions() -> Vec<InvolutionSpec> {
    let zero = Scalar::zero;
    vec![
        // plus, b1L off the real ray
        InvolutionSpec::new(
            Variant::Plus,
            Scalar::one(),
            Scalar::one(),
            Scalar::i(),
            zero(),
            zero(),
            0,
        )
        .unwrap(),
        // plus, d1L with d1L^2 conj(c)^3 negative
        InvolutionSpec::new(
            Variant::Plus,
            Scalar::one(),
            Scalar::one(),
            zero(),
            Scalar::i(),
            zero(),
            0,
        )
        .unwrap(),
        // plus, d0G real (must be purely imaginary)
        InvolutionSpec::new(
            Variant::Plus,
            Scalar::one(),
            Scalar::one(),
            zero(),
            zero(),
            Scalar::from_int(7),
            0,
        )
        .unwrap(),
        // minus, b1L off the real ray
        InvolutionSpec::new(
            Variant::Minus,
            Scalar::one(),
            Scalar::one(),
            Scalar::i(),
            zero(),
            zero(),
            0,
        )
        .unwrap(),
        // minus, d0G imaginary (must be real)
        InvolutionSpec::new(
            Variant::Minus,
            Scalar::one(),
            Scalar::one(),
            zero(),
            zero(),
            s("0+7i"),
            0,
        )
        .unwrap(),
        // minus, d1L real (must satisfy d1L^2 conj(alpha^2 c^3) <= 0)
        InvolutionSpec::new(
            Variant::Minus,
            Scalar::one(),
            Scalar::one(),
            zero(),
            Scalar::from_int(5),
            zero(),
            0,
        )
        .unwrap(),
    ]
}

#[test]
fn criterion_6_involutions() {
    let c = Criterion("6 (anti-involution axioms: shipped specs pass, perturbations fail)");
    let shipped = shipped_involutions();
    assert_eq!(shipped.len(), 4);
    let alphas: Vec<String> = shipped.iter().map(|i| i.alpha().to_string()).collect();
    assert_eq!(alphas, vec!["1", "2", "1", "3/5+4/5i"]);
    for spec in &shipped {
        assert!(
            spec.validate().is_empty(),
            "shipped spec flagged: {:?}",
            spec.validate()
        );
        let report = axiom_check(spec, 5);
        assert!(
            report.passed(),
            "axioms fail for alpha={}: {:?}",
            spec.alpha(),
            report.violations.first()
        );
    }

    let perturbed = perturbed_involutions();
    assert_eq!(perturbed.len(), 6);
    for (idx, spec) in perturbed.iter().enumerate() {
        assert!(
            !spec.validate().is_empty(),
            "perturbation {} not flagged by the constraint validator",
            idx
        );
        let report = axiom_check(spec, 3);
        assert!(
            !report.passed(),
            "perturbation {} produced no C3/C4 violation",
            idx
        );
    }
    c.pass();
}

/// Committed once, determined by the brute-force oracle in
/// `tests/unitary_oracle.rs`.
const COMMITTED_SIGMA: i64 = -1;

#[test]
fn criterion_7_unitarity() {
    let c = Criterion("7 (diagonal unitary weights on the trivial extension)");
    let spec = InvolutionSpec::new(
        Variant::Plus,
        Scalar::one(),
        Scalar::one(),
        Scalar::zero(),
        Scalar::zero(),
        Scalar::zero(),
        0,
    )
    .unwrap();
    let b = &Scalar::ratio(COMMITTED_SIGMA, 2) + &s("0+2/5i");
    match unitary_weights(&spec, &s("1/3"), &b, 6) {
        UnitaryOutcome::Weights(w) => {
            assert!(w.all_one(), "weights: {:?}", w.weights);
            assert!(w.notes.is_empty());
            assert!(w.weights.values().all(Scalar::is_positive_real));
            assert_eq!(w.weights.len(), 13);
        }
        UnitaryOutcome::Infeasible(w) => panic!("unexpected witness: {:?}", w),
    }

    match unitary_weights(&spec, &s("1/3"), &s("5/7"), 6) {
        UnitaryOutcome::Weights(w) => panic!("unexpected weights: {:?}", w),
        UnitaryOutcome::Infeasible(w) => {
            assert!(!w.reason.is_empty());
        }
    }
    c.pass();
}

#[test]
fn module_axiom_check_trivial_extension_window_6() {
    // Trivial extensions satisfy the axioms out to the largest desk window.
    let samples: [(Scalar, Scalar); 2] = [(s("2/3"), s("5/7")), (s("1/3"), s("-1/2+2/5i"))];
    for (a, b) in samples {
        let spec = SuperModuleSpec::trivial_extension(a, b, 18);
        let report = module_axiom_check(&spec, 6).unwrap();
        assert!(report.passed());
    }
}

#[test]
fn classify_verdict_reports_case_tags_and_patterns() {
    let fam = ClassifyFamilies::aab(s("2/3"), s("-1"), s("2/3"), s("1/2"));
    let outcome = classify(&fam, 6);
    assert_eq!(outcome.verdict.case_tags, vec!["b2=-(b+1/2)".to_string()]);
    let patterns: BTreeMap<String, String> = outcome.verdict.patterns.clone();
    assert_eq!(patterns["g"], "1/(a-j)");
    assert_eq!(outcome.verdict.final_class, FinalClass::TrivialIgh);
}
