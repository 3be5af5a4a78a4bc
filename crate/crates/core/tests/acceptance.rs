//! Acceptance suite: one test per criterion, each printing a pass line.
//! Everything is exact arithmetic; sampled checks are deterministic for
//! the fixed seeds used here.

use std::collections::BTreeSet;

use lie_cartan::cartan::{
    cartan_class, cartan_class_wedge_oracle, characteristic_space_abelian_check,
    class_spectrum_sample, index, max_class_witness, orbit_dimension, verify_class_upper_bound,
};
use lie_cartan::catalog::{self, Params};
use lie_cartan::charseq;
use lie_cartan::deform;
use lie_cartan::dsl;
use lie_cartan::forms::{ce_differential, KForm};
use lie_cartan::lie::LieAlgebra;
use lie_cartan::rational::Rational;
use lie_cartan::sample;

const SEED: u64 = 0;

fn pass(id: &str, what: &str) {
    println!("[{id}] {what}: PASS");
}

fn entry(id: &str) -> LieAlgebra {
    catalog::build_default(id).unwrap().algebra
}

fn entry_with(id: &str, params: Params) -> LieAlgebra {
    catalog::build(id, &params).unwrap().algebra
}

fn p(key: &str, value: &str) -> Params {
    Params::new().set(key, value)
}

/// Every algebra instance the sweeping criteria run over, with its id.
fn catalog_instances() -> Vec<(String, LieAlgebra)> {
    let mut out = Vec::new();
    for info in catalog::list_entries() {
        out.push((info.id.to_string(), entry(info.id)));
    }
    for pp in [1usize, 3, 4] {
        out.push((
            format!("heisenberg p={pp}"),
            entry_with("heisenberg", p("p", &pp.to_string())),
        ));
    }
    for n in [4usize, 6, 7, 8] {
        out.push((format!("L n={n}"), entry_with("L", p("n", &n.to_string()))));
    }
    for d in [4usize, 6] {
        out.push((
            format!("Q dim={d}"),
            entry_with("Q", p("dim", &d.to_string())),
        ));
    }
    out.push((
        "strict_decreasing n2 l=3".into(),
        entry_with("strict_decreasing", p("variant", "n2")),
    ));
    out.push((
        "strict_decreasing n1 l=4".into(),
        entry_with("strict_decreasing", p("variant", "n1").set("l", "4")),
    ));
    out.push((
        "strict_decreasing n2 l=4".into(),
        entry_with("strict_decreasing", p("variant", "n2").set("l", "4")),
    ));
    out.push(("h_p2 p=3".into(), entry_with("h_p2", p("p", "3"))));
    out.push((
        "nilp5_contact v=3".into(),
        entry_with("nilp5_contact", p("variant", "3")),
    ));
    out.push((
        "nilp5_contact v=6".into(),
        entry_with("nilp5_contact", p("variant", "6")),
    ));
    out
}

fn sampled_forms(l: &LieAlgebra, budget: usize) -> Vec<KForm> {
    sample::candidates(l.dim(), budget, SEED)
        .into_iter()
        .map(|v| KForm::one_form(&v))
        .filter(|f| !f.is_zero())
        .collect()
}

// Criterion 1: Heisenberg algebras, p = 1..4.
#[test]
fn c01_heisenberg_class_index_orbits() {
    for pp in 1..=4usize {
        let n = 2 * pp + 1;
        let l = entry_with("heisenberg", p("p", &pp.to_string()));
        let contact = cartan_class(&l, &KForm::dual(n, n - 1)).unwrap();
        assert_eq!(contact.class, n, "cl(w_{n}) on heisenberg p={pp}");
        assert_eq!(index(&l).index, 1, "index of heisenberg p={pp}");
        for f in sampled_forms(&l, 100) {
            let d = orbit_dimension(&l, &f).unwrap();
            assert!(d == 0 || d == 2 * pp, "orbit dim {d} on heisenberg p={pp}");
        }
    }
    pass(
        "C01",
        "heisenberg: contact class 2p+1, index 1, orbits in {0, 2p}",
    );
}

// Criterion 2: filiform models L(n), n = 4..8.
#[test]
fn c02_filiform_spectrum_index() {
    for n in 4..=8usize {
        let l = entry_with("L", p("n", &n.to_string()));
        let spectrum = class_spectrum_sample(&l, 200, SEED);
        assert_eq!(spectrum, BTreeSet::from([1, 3]), "spectrum of L({n})");
        assert_eq!(index(&l).index, n - 2, "index of L({n})");
    }
    pass("C02", "L(n) n=4..8: spectrum {1,3}, index n-2");
}

// Criterion 3: Q(2p), p = 2..4.
#[test]
fn c03_graded_q_spectrum_index() {
    for pp in 2..=4usize {
        let l = entry_with("Q", p("dim", &(2 * pp).to_string()));
        let spectrum = class_spectrum_sample(&l, 200, SEED);
        let expect: BTreeSet<usize> = [1, 3, 2 * pp - 1].into_iter().collect();
        assert_eq!(spectrum, expect, "spectrum of Q({})", 2 * pp);
        assert_eq!(index(&l).index, 2, "index of Q({})", 2 * pp);
    }
    pass("C03", "Q(2p) p=2..4: spectrum {1,3,2p-1}, index 2");
}

// Criterion 4: rank-1 simple algebras. On so(3) every sampled nonzero form
// has class exactly 3; on sl(2,R) every dual has class exactly 3, every
// sampled form has orbit dimension exactly 2 and class in {2,3} (the
// class-2 locus is the isotropic cone, nonempty over Q for any basis).
#[test]
fn c04_rank_one_simple() {
    let so3 = entry("so3");
    for i in 0..3 {
        let r = cartan_class(&so3, &KForm::dual(3, i)).unwrap();
        assert_eq!(r.class, 3);
        assert_eq!(r.orbit_dim, 2);
    }
    for v in sample::random_vectors(3, 100, SEED) {
        let r = cartan_class(&so3, &KForm::one_form(&v)).unwrap();
        assert_eq!(r.class, 3, "so3 random form class");
        assert_eq!(r.orbit_dim, 2);
    }

    let sl2 = entry("sl2");
    for i in 0..3 {
        let r = cartan_class(&sl2, &KForm::dual(3, i)).unwrap();
        assert_eq!(r.class, 3, "sl2 dual class");
        assert_eq!(r.orbit_dim, 2);
    }
    for v in sample::random_vectors(3, 100, SEED) {
        let r = cartan_class(&sl2, &KForm::one_form(&v)).unwrap();
        assert_eq!(r.orbit_dim, 2, "sl2 orbit dimension");
        assert!(r.class == 2 || r.class == 3);
    }
    assert_eq!(index(&sl2).max_class, 3);
    assert_eq!(index(&so3).max_class, 3);
    pass(
        "C04",
        "sl(2,R), so(3): orbit dimension 2 everywhere; so(3) class exactly 3",
    );
}

// Criterion 5: so(4).
#[test]
fn c05_so4() {
    let l = entry("so4");
    let (_, witness) = max_class_witness(&l);
    assert_eq!(witness.class, 5);
    let f = dsl::one_form_from_expr(&l, "X1 + X6").unwrap();
    assert_eq!(cartan_class(&l, &f).unwrap().class, 3);
    assert_eq!(index(&l).index, 2);
    pass("C05", "so(4): witness class 5, cl(w1+w6) = 3, index 2");
}

// Criterion 6: families with orbits of dimension at most 2. The upper
// bound is certified via symbolic minors; the orbit-dimension check on
// nonclosed forms is sampled.
#[test]
fn c06_dimension_two_orbit_families() {
    let mut members: Vec<(String, LieAlgebra)> = vec![
        ("dim4_family v=1".into(), entry("dim4_family")),
        (
            "dim4_family v=2".into(),
            entry_with("dim4_family", p("variant", "2")),
        ),
        ("dim5_family".into(), entry("dim5_family")),
        ("dim6_family".into(), entry("dim6_family")),
        ("L_model (3,2,1)".into(), entry("L_model")),
        (
            "L_model (2,2,1,1)".into(),
            entry_with("L_model", p("c", "2,2,1,1")),
        ),
    ];
    for (name, l) in members.drain(..) {
        assert!(verify_class_upper_bound(&l, 3), "{name}: certified bound 3");
        for f in sampled_forms(&l, 100) {
            if ce_differential(&l, &f).is_zero() {
                continue;
            }
            assert_eq!(
                orbit_dimension(&l, &f).unwrap(),
                2,
                "{name}: nonclosed orbit dim"
            );
        }
    }
    pass(
        "C06",
        "dim-2-orbit families: bound 3 certified, sampled nonclosed orbits = 2",
    );
}

// Criterion 7: families with orbits of dimension 4.
#[test]
fn c07_dimension_four_orbit_families() {
    let mut members: Vec<(String, LieAlgebra)> = vec![
        ("kaplan7".into(), entry("kaplan7")),
        ("n81".into(), entry("n81")),
        ("n91".into(), entry("n91")),
        ("n82".into(), entry("n82")),
        ("n92".into(), entry("n92")),
        ("n83".into(), entry("n83")),
        ("n84".into(), entry("n84")),
        ("g9".into(), entry("g9")),
        ("h_p2 p=2".into(), entry("h_p2")),
        ("h_p2 p=3".into(), entry_with("h_p2", p("p", "3"))),
    ];
    for variant in ["n1", "n2"] {
        for l in [3usize, 4] {
            members.push((
                format!("strict_decreasing {variant} l={l}"),
                entry_with(
                    "strict_decreasing",
                    p("variant", variant).set("l", &l.to_string()),
                ),
            ));
        }
    }
    let allowed: BTreeSet<usize> = [4, 5].into_iter().collect();
    let mut failures = Vec::new();
    for (name, l) in &members {
        if !verify_class_upper_bound(l, 5) {
            let got = index(l).max_class;
            failures.push(format!(
                "{name}: certified max class is {got}, not <= 5 (the printed presentation does not have all orbits of dimension <= 4)"
            ));
            continue;
        }
        let mut bad_classes = BTreeSet::new();
        for f in sampled_forms(l, 100) {
            if ce_differential(l, &f).is_zero() {
                continue;
            }
            let r = cartan_class(l, &f).unwrap();
            if !allowed.contains(&r.class) {
                bad_classes.insert(r.class);
            }
        }
        if !bad_classes.is_empty() {
            failures.push(format!(
                "{name}: sampled nonclosed forms of class {bad_classes:?} found (claimed {{4,5}})"
            ));
        }
        if l.is_nilpotent() {
            assert!(charseq::check_c1_bound(l).unwrap(), "{name}: c1 bound");
        }
    }
    let kaplan = entry("kaplan7");
    assert_eq!(
        charseq::characteristic_sequence(&kaplan)
            .unwrap()
            .sequence
            .parts(),
        &[2, 2, 2, 1]
    );
    for pp in [2usize, 3] {
        let l = entry_with("h_p2", p("p", &pp.to_string()));
        let mut expect = vec![2usize; pp];
        expect.extend(std::iter::repeat_n(1, pp + 2));
        assert_eq!(
            charseq::characteristic_sequence(&l)
                .unwrap()
                .sequence
                .parts(),
            &expect[..],
            "h({pp},2) characteristic sequence"
        );
    }
    assert!(
        failures.is_empty(),
        "[C07] dim-4-orbit families: FAIL\n{}",
        failures.join("\n")
    );
    pass(
        "C07",
        "dim-4-orbit families: bound 5 certified, classes in {4,5}, sequences, c1 bound",
    );
}

// Criterion 8: classes on nilpotent algebras are odd, 200 samples each.
#[test]
fn c08_nilpotent_parity() {
    for (name, l) in catalog_instances() {
        if !l.is_nilpotent() {
            continue;
        }
        for v in sample::random_vectors(l.dim(), 200, SEED) {
            let r = cartan_class(&l, &KForm::one_form(&v)).unwrap();
            assert_eq!(r.class % 2, 1, "{name}: even class {} found", r.class);
        }
    }
    pass(
        "C08",
        "nilpotent parity: 200 seeded samples per entry, all classes odd",
    );
}

// Criterion 9: the rank/kernel route and the wedge-power oracle agree.
#[test]
fn c09_oracle_equivalence() {
    for (name, l) in catalog_instances() {
        for f in sampled_forms(&l, 100) {
            let a = cartan_class(&l, &f).unwrap().class;
            let b = cartan_class_wedge_oracle(&l, &f).unwrap();
            assert_eq!(a, b, "{name}: routes disagree");
        }
    }
    pass(
        "C09",
        "oracle equivalence: rank/kernel class = wedge class on all samples",
    );
}

// Criterion 10: the characteristic space of a maximal-class form is abelian.
#[test]
fn c10_characteristic_space_abelian() {
    for (name, l) in catalog_instances() {
        assert!(characteristic_space_abelian_check(&l), "{name}");
    }
    pass(
        "C10",
        "maximal-class characteristic spaces are abelian on every entry",
    );
}

// Criterion 11: central extensions.
#[test]
fn c11_central_extensions() {
    for pp in 1..=3usize {
        let ab = LieAlgebra::abelian(2 * pp);
        let mut theta = KForm::zero(2 * pp, 2);
        for i in 0..pp {
            theta.add_term(&[2 * i, 2 * i + 1], Rational::one());
        }
        let ext = deform::central_extension(&ab, &theta).unwrap();
        let h = entry_with("heisenberg", p("p", &pp.to_string()));
        assert!(
            ext.same_structure(&h),
            "extension is h_{} bit-exactly",
            2 * pp + 1
        );
    }

    // Rebuild the three 5-dimensional contact nilpotent algebras from
    // symplectic 4-dimensional bases.
    let filiform4 = {
        let names = (1..=4).map(|i| format!("e{i}")).collect();
        lie_cartan::lie::algebra_from_triples(
            names,
            &[
                (0, 1, vec![(2, Rational::one())]),
                (0, 2, vec![(3, Rational::one())]),
            ],
        )
        .unwrap()
    };
    let h3_plus_line = {
        let names = (1..=4).map(|i| format!("e{i}")).collect();
        lie_cartan::lie::algebra_from_triples(names, &[(0, 1, vec![(2, Rational::one())])]).unwrap()
    };
    type ExtensionCase = (&'static str, LieAlgebra, Vec<(usize, usize)>);
    let cases: Vec<ExtensionCase> = vec![
        ("1", filiform4, vec![(0, 3), (1, 2)]),
        ("3", h3_plus_line, vec![(0, 2), (1, 3)]),
        ("6", LieAlgebra::abelian(4), vec![(0, 1), (2, 3)]),
    ];
    for (variant, base, pairs) in cases {
        let mut theta = KForm::zero(4, 2);
        for (i, j) in pairs {
            theta.add_term(&[i, j], Rational::one());
        }
        assert!(deform::is_symplectic(&base, &theta).unwrap());
        let ext = deform::central_extension(&base, &theta).unwrap();
        let target = entry_with("nilp5_contact", p("variant", variant));
        assert!(
            deform::match_by_scaled_permutation(&ext, &target).is_some(),
            "extension matches contact algebra variant {variant}"
        );
        let r = cartan_class(&ext, &deform::extension_contact_form(&ext)).unwrap();
        assert_eq!(r.class, 5);
    }
    pass(
        "C11",
        "central extensions rebuild h_(2p+1) bit-exactly and the 5-dim contact list",
    );
}

// Criterion 12: the quadratic deformation taking h3 to sl(2,R).
#[test]
fn c12_deformation_identities() {
    let h3 = entry_with("heisenberg", p("p", "1"));
    let mu0 = deform::Cochain2::from_algebra(&h3);
    let mut phi1 = deform::Cochain2::zero(3);
    let mut v1 = vec![Rational::zero(); 3];
    v1[0] = Rational::from_int(2);
    phi1.set(2, 0, v1);
    let mut v2 = vec![Rational::zero(); 3];
    v2[1] = Rational::from_int(-2);
    phi1.set(2, 1, v2);
    let phi2 = deform::Cochain2::zero(3);
    let check = deform::verify_quadratic_deformation(&mu0, &phi1, &phi2).unwrap();
    assert!(check.is_pass());
    let at_one = deform::specialize(&mu0, &phi1, &phi2, &Rational::one())
        .into_algebra_unchecked(h3.basis_names().to_vec());
    assert!(at_one.jacobi_check().is_pass());
    assert!(!at_one.is_solvable());
    assert!(at_one.center().is_zero());
    assert!(at_one.same_structure(&entry("sl2_chevalley")));
    pass(
        "C12",
        "quadratic deformation h3 -> sl(2,R): identities pass, t=1 non-solvable, center 0",
    );
}

// Criterion 13: contractions.
#[test]
fn c13_contractions() {
    let sl2 = entry("sl2_chevalley");
    let f = deform::ScalingMap::diagonal_powers(&[1, 1, 2]);
    match deform::contract(&sl2, &f).unwrap() {
        deform::Contraction::Limit(l) => {
            assert!(l.same_structure(&entry_with("heisenberg", p("p", "1"))));
        }
        deform::Contraction::NoLimit(_) => panic!("sl2 -> h3 limit must exist"),
    }

    // Frobenius normal forms are fixed points of the weighted rescaling
    // w(X1)=2, w(X2)=0, w(pairs)=1.
    let frob = entry("frobenius_complex");
    let mut weights = vec![2i64, 0];
    weights.extend(std::iter::repeat_n(1, frob.dim() - 2));
    let f = deform::ScalingMap::diagonal_powers(&weights);
    match deform::contract(&frob, &f).unwrap() {
        deform::Contraction::Limit(l) => assert!(l.same_structure(&frob), "fixed point"),
        deform::Contraction::NoLimit(_) => panic!("fixed-point scaling has a limit"),
    }

    let bad = deform::ScalingMap::diagonal_powers(&[1, 1, 3]);
    match deform::contract(&sl2, &bad).unwrap() {
        deform::Contraction::NoLimit(offending) => assert!(!offending.is_empty()),
        deform::Contraction::Limit(_) => panic!("expected NoLimit"),
    }
    pass(
        "C13",
        "contractions: sl(2,R) -> h3 bit-exact, Frobenius fixed point, NoLimit case",
    );
}

// Criterion 14: contact/Frobenius flags across the catalog.
#[test]
fn c14_contact_frobenius_flags() {
    let contact_ids: BTreeSet<&str> = [
        "heisenberg",
        "heisenberg p=1",
        "heisenberg p=3",
        "heisenberg p=4",
        "nilp5_contact",
        "nilp5_contact v=3",
        "nilp5_contact v=6",
        "contact7_a",
        "contact7_b",
        "contact9",
        "sl2",
        "sl2_chevalley",
        "so3",
    ]
    .into_iter()
    .collect();
    for (name, l) in catalog_instances() {
        if l.is_nilpotent() {
            assert!(
                !lie_cartan::cartan::is_frobenius(&l),
                "{name}: nilpotent never Frobenius"
            );
        }
        let expected_contact = contact_ids.contains(name.as_str());
        assert_eq!(
            lie_cartan::cartan::is_contact(&l),
            expected_contact,
            "{name}: contact flag"
        );
    }
    pass(
        "C14",
        "flags: no nilpotent Frobenius entry; contact exactly on the claimed entries",
    );
}

// Criterion 15: parser round-trips, cross-syntax consistency, fuzz corpus.
#[test]
fn c15_parser() {
    // Golden round-trips for 10 entries in both syntaxes.
    let golden_ids = [
        "heisenberg",
        "L",
        "Q",
        "kaplan7",
        "n84",
        "g9",
        "g4",
        "nilp5_contact",
        "so4",
        "frobenius_complex",
    ];
    for id in golden_ids {
        let algebra = entry(id);
        for (syntax, suffix) in [
            (dsl::Syntax::Bracket, "bracket"),
            (dsl::Syntax::MaurerCartan, "mc"),
        ] {
            let doc = dsl::document_from_algebra(&algebra, id, syntax);
            let text = dsl::render_document(&doc);
            let golden_path = format!(
                "{}/tests/golden/{id}.{suffix}.lie",
                env!("CARGO_MANIFEST_DIR")
            );
            let golden = std::fs::read_to_string(&golden_path)
                .unwrap_or_else(|e| panic!("{golden_path}: {e}"));
            assert_eq!(text, golden, "golden file drift for {id} ({suffix})");
            let reparsed = dsl::parse_document(&text).unwrap();
            assert_eq!(reparsed, doc, "round-trip for {id} ({suffix})");
            assert!(reparsed.to_algebra().unwrap().same_structure(&algebra));
        }
    }

    // Bracket and MC descriptions of the same algebra agree.
    for id in ["heisenberg p=1", "kaplan7"] {
        let algebra = if id == "kaplan7" {
            entry("kaplan7")
        } else {
            entry_with("heisenberg", p("p", "1"))
        };
        let b = dsl::render_document(&dsl::document_from_algebra(
            &algebra,
            "x",
            dsl::Syntax::Bracket,
        ));
        let m = dsl::render_document(&dsl::document_from_algebra(
            &algebra,
            "x",
            dsl::Syntax::MaurerCartan,
        ));
        let lb = dsl::parse_document(&b).unwrap().to_algebra().unwrap();
        let lm = dsl::parse_document(&m).unwrap().to_algebra().unwrap();
        assert!(lb.same_structure(&lm), "{id}: bracket/mc cross-consistency");
    }

    // Fuzz corpus: 1000 mutated inputs must produce diagnostics, not panics.
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    let seeds: Vec<String> = vec![
        dsl::render_document(&dsl::document_from_algebra(
            &entry("kaplan7"),
            "k",
            dsl::Syntax::Bracket,
        )),
        dsl::render_document(&dsl::document_from_algebra(
            &entry("heisenberg"),
            "h",
            dsl::Syntax::MaurerCartan,
        )),
        "algebra a dim 2 basis X1 X2\n[X1,X2] = 0\n".to_string(),
    ];
    let alphabet: Vec<char> = "abwX123456789[],=+-*/^#\n ._".chars().collect();
    for i in 0..1000 {
        let mut text: Vec<char> = seeds[i % seeds.len()].chars().collect();
        for _ in 0..=rng.gen_range(0..6) {
            match rng.gen_range(0..3) {
                0 if !text.is_empty() => {
                    let at = rng.gen_range(0..text.len());
                    text.remove(at);
                }
                1 => {
                    let at = rng.gen_range(0..=text.len());
                    let c = alphabet[rng.gen_range(0..alphabet.len())];
                    text.insert(at, c);
                }
                _ if !text.is_empty() => {
                    let at = rng.gen_range(0..text.len());
                    text[at] = alphabet[rng.gen_range(0..alphabet.len())];
                }
                _ => {}
            }
        }
        let mutated: String = text.into_iter().collect();
        if let Err(e) = dsl::parse_document(&mutated) {
            assert!(e.span.line >= 1, "diagnostic must carry a span");
        }
    }
    pass(
        "C15",
        "parser: 10x2 golden round-trips, cross-syntax equality, 1000-input fuzz",
    );
}

// Criterion 16: contact entries have center of dimension <= 1.
#[test]
fn c16_contact_center_bound() {
    for (name, l) in catalog_instances() {
        if lie_cartan::cartan::is_contact(&l) {
            assert!(l.center().dim() <= 1, "{name}: contact center bound");
        }
    }
    pass(
        "C16",
        "contact center bound: dim Z(g) <= 1 on every contact entry",
    );
}
