//! Acceptance gate: one criterion per test, each printing a pass/fail line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::One;

use eqalg::algebra::{chain, fixtures::diamond, FiniteEqAlgebra};
use eqalg::cli;
use eqalg::cones;
use eqalg::dedsys;
use eqalg::search;
use eqalg::states;
use eqalg::translate;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["eqalg".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    cli::execute(&argv)
}

/// All algebras of sizes 1–4 up to isomorphism, enumerated once.
fn corpus() -> &'static [FiniteEqAlgebra] {
    static CORPUS: OnceLock<Vec<FiniteEqAlgebra>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        (1..=4)
            .flat_map(|n| search::enumerate_algebras(n).unwrap())
            .collect()
    })
}

fn conclude(criterion: usize, what: &str, ok: bool) {
    println!("criterion {criterion} ({what}): {}", if ok { "pass" } else { "FAIL" });
    assert!(ok, "criterion {criterion} ({what}) failed");
}

#[test]
fn criterion_01_golden_fixture() {
    let (check_code, check_out) = run_cli(&["check", &fixture("diamond.alg")]);
    let (analyze_code, analyze_out) = run_cli(&["analyze", &fixture("diamond.alg")]);
    let ok = check_code == 0
        && check_out.contains("passed: true")
        && analyze_code == 0
        && ["invariant: true", "commutative: true", "symmetric: true",
            "distributive_lattice: true", "simple: false"]
            .iter()
            .all(|k| analyze_out.contains(k));
    conclude(1, "golden fixture check + analyze", ok);
}

#[test]
fn criterion_02_ds_list() {
    let (code, out) = run_cli(&["ds", &fixture("diamond.alg")]);
    let ok = code == 0
        && out.contains("count: 4")
        && ["{1}", "{a,1}", "{b,1}", "{0,a,b,1}"].iter().all(|s| out.contains(s))
        && out.lines().filter(|l| l.contains(": ")).all(|l| {
            !l.contains('{') || (l.contains("normal") && l.contains("commutative"))
        });
    conclude(2, "deductive systems of the golden fixture", ok);
}

#[test]
fn criterion_03_measure_cone() {
    let alg = diamond();
    let cone = cones::measure_cone(&alg);
    let one = BigRational::one;
    let zero = BigRational::default;
    let expected = [
        vec![one(), zero(), one(), zero()],
        vec![one(), one(), zero(), zero()],
    ];
    let rays_match = cone.lineality.is_empty()
        && cone.rays.len() == 2
        && expected.iter().all(|e| cone.rays.contains(e));
    // Extreme rays are measure-morphisms; interior points such as the ray
    // sum (2, 1, 1, 0) are not (they would need m(a ∧ b) = max of the two
    // values), so the generator check covers exactly the rays.
    let morphisms = cone
        .rays
        .iter()
        .all(|r| cones::is_measure_morphism(&alg, &cones::RationalFn::new(r.clone())));
    conclude(3, "measure cone rays and morphism generators", rays_match && morphisms);
}

#[test]
fn criterion_04_roundtrip_theorems() {
    let ok = corpus().iter().all(|alg| {
        let b = translate::psi(alg).unwrap();
        let back = translate::phi(&b).unwrap();
        let idempotent = translate::psi(&back).unwrap() == b;
        let invariance =
            translate::check_invariant(alg).unwrap().holds == (back == *alg);
        idempotent && invariance
    });
    conclude(4, "round-trip theorems on sizes 1-4", ok);
}

#[test]
fn criterion_05_commutativity_theorems() {
    let ok = corpus()
        .iter()
        .all(|alg| translate::commutativity_suite(alg).unwrap().passed());
    conclude(5, "equivalence and commutativity theorems on sizes 1-4", ok);
}

#[test]
fn criterion_06_quotient_commutativity() {
    let ok = corpus()
        .iter()
        .all(|alg| dedsys::check_quotient_commutativity_theorem(alg).unwrap().passed());
    conclude(6, "quotient commutativity on sizes 1-4", ok);
}

#[test]
fn criterion_07_commutative_ds_characterizations() {
    let ok = corpus()
        .iter()
        .all(|alg| dedsys::commutative_ds_suite(alg).unwrap().passed());
    conclude(7, "commutative-DS characterizations on sizes 1-4", ok);
}

#[test]
fn criterion_08_measure_theorems() {
    let ok = corpus().iter().all(|alg| cones::measure_suite(alg).unwrap().passed());
    conclude(8, "measure theorems on the corpus", ok);
}

#[test]
fn criterion_09_state_theorems() {
    let brute_force_agrees = corpus().iter().all(|alg| {
        let pruned = states::enumerate_states(alg).unwrap();
        let n = alg.n;
        let mut maps = vec![vec![0usize; n]];
        for _ in 0..n {
            maps = maps
                .into_iter()
                .flat_map(|m| {
                    (0..n).map(move |v| {
                        let mut m2 = m.clone();
                        m2.remove(0);
                        m2.push(v);
                        m2
                    })
                })
                .collect();
        }
        // `maps` now holds all n^n self-maps.
        let brute: Vec<_> = maps
            .iter()
            .filter_map(|m| {
                let c = states::check_state(alg, m).ok()?;
                (c.type_one.holds || c.type_two.holds).then_some(m.clone())
            })
            .collect();
        let mut pruned_maps: Vec<_> = pruned.iter().map(|op| op.map.clone()).collect();
        pruned_maps.sort();
        let mut brute_sorted = brute;
        brute_sorted.sort();
        pruned_maps == brute_sorted
    });
    let suites = corpus()
        .iter()
        .all(|alg| states::state_properties_suite(alg).unwrap().passed());
    let chain4 = states::state_properties_suite(&chain(4)).unwrap().passed();
    conclude(9, "state theorems at n <= 4", brute_force_agrees && suites && chain4);
}

#[test]
fn criterion_10_valuation_suite() {
    // The suite itself runs the step-valuation construction for every DS and
    // a in {1, 2, 7/2}, plus the kernel and cone-equality theorems.
    let ok = corpus().iter().all(|alg| cones::valuation_suite(alg).unwrap().passed());
    let explicit = {
        let alg = diamond();
        let records = dedsys::enumerate_ds(&alg).unwrap();
        let values = ["1", "2", "7/2"];
        records.iter().all(|rec| {
            values.iter().all(|a| {
                let a: BigRational = a.parse().unwrap();
                let f = cones::ds_valuation(&alg, &rec.set, a).unwrap();
                cones::is_valuation(&alg, &f)
            })
        })
    };
    conclude(10, "valuation suite with a in {1, 2, 7/2}", ok && explicit);
}

#[test]
fn criterion_11_search_determinism_and_counts() {
    let (c1, s1) = run_cli(&["search", "--size", "4"]);
    let (c2, s2) = run_cli(&["search", "--size", "4"]);
    let deterministic = c1 == 0 && c2 == 0 && s1 == s2 && !s1.is_empty();
    let size1 = search::enumerate_algebras(1).unwrap().len();
    let size2 = search::enumerate_algebras(2).unwrap().len();
    // Brute-force oracle over every pair of operation tables on the 2-chain.
    let mut brute2 = 0usize;
    for code in 0u32..(1 << 8) {
        let bit = |i: u32| ((code >> i) & 1) as usize;
        let alg = FiniteEqAlgebra {
            n: 2,
            names: vec!["0".into(), "1".into()],
            top: 1,
            meet: vec![vec![0, 0], vec![0, 1]],
            sim: vec![vec![bit(0), bit(1)], vec![bit(2), bit(3)]],
            bsim: vec![vec![bit(4), bit(5)], vec![bit(6), bit(7)]],
        };
        if alg.verify_axioms().unwrap().passed() {
            brute2 += 1;
        }
    }
    // Two non-isomorphic two-element algebras exist: the invariant 2-chain
    // and the symmetric biimplication model. A2/A3 pin all cells except
    // sim(1,0) and bsim(0,1), which A6 forces to be equal; both completions
    // satisfy every axiom, so the correct count is 2, not 1.
    let counts = size1 == 1 && size2 == 2 && brute2 == size2;
    conclude(11, "search determinism and small counts", deterministic && counts);
}
