use symcomvar::commvar::{
    c0_tangent_dim, d1, d1_equivariance_check, d1_equivariance_identity, d1_symbolic_rank, d1_witness,
    generic_cartan_d1, is_commuting_pair, membership_evidence, reducibility_certificate, spadesuit_check,
    verify_certificate, verify_evidence, verify_json, BaseTag, EvidenceNode, G0Element, MembershipEvidence,
    ReducibilityCertificate, SpadesuitReport, Step,
};
use symcomvar::exactlin::{combine, jordan_chevalley, rank_q, Matrix};
use symcomvar::liealg::centralizer_in;
use symcomvar::nilpotent::{representative, AbDiagram};
use symcomvar::sampling::RunConfig;
use symcomvar::scalar::{q, Q};
use symcomvar::sympair::{make_pair, PairSpec, SymPair};

fn pair(spec: PairSpec) -> SymPair {
    make_pair(spec).unwrap()
}

fn cfg() -> RunConfig {
    RunConfig::default()
}

fn d1_cert(cert: &ReducibilityCertificate) -> &symcomvar::commvar::D1Certificate {
    match cert {
        ReducibilityCertificate::D1(c) => c,
        other => panic!("expected a D1 certificate, got {other:?}"),
    }
}

#[test]
fn commuting_pair_examples() {
    let p = pair(PairSpec::so_so(3, 2));
    let x = combine(&[q(1), q(-2), q(3), q(0), q(5), q(1)], p.g1().basis());
    assert!(is_commuting_pair(&x, &x, &p).unwrap());
    let t = p.cartan_element(&[q(2), q(-3)]);
    let h = p.cartan_element(&[q(7), q(1)]);
    assert!(is_commuting_pair(&t, &h, &p).unwrap());

    let gl = pair(PairSpec::gl_gl(2, 3));
    let w = d1_witness(&gl).unwrap();
    assert!(is_commuting_pair(&w.x, &w.y, &gl).unwrap());
}

#[test]
fn c0_tangent_dim_examples() {
    assert_eq!(c0_tangent_dim(&pair(PairSpec::so_so(2, 3)), &cfg()).unwrap(), 8);
    assert_eq!(c0_tangent_dim(&pair(PairSpec::gl_gl(2, 3)), &cfg()).unwrap(), 14);
    assert_eq!(c0_tangent_dim(&pair(PairSpec::so_so(3, 0)), &cfg()).unwrap(), 0);
}

#[test]
fn c0_tangent_dim_is_dim_g1_plus_rank_on_catalog() {
    let mut specs = Vec::new();
    for n in 0..=9usize {
        for m in 0..=9 - n {
            if n + m >= 2 {
                specs.push(PairSpec::so_so(n, m));
            }
        }
    }
    for n in 1..=5usize {
        for m in 1..=6 - n {
            specs.push(PairSpec::gl_gl(n, m));
        }
    }
    for n in 1..=4 {
        specs.push(PairSpec::so2n_gln(n));
    }
    for spec in specs {
        let p = pair(spec);
        if p.algebra().dim() > 36 {
            continue;
        }
        let expected = if p.rank() == 0 { 0 } else { p.g1().dim() + p.rank() };
        assert_eq!(c0_tangent_dim(&p, &cfg()).unwrap(), expected, "{spec}");
    }
}

#[test]
fn d1_examples() {
    let gl = pair(PairSpec::gl_gl(2, 3));
    let zero = Matrix::<Q>::zeros(5, 5);
    assert_eq!(rank_q(&d1(&zero, &zero, &gl).unwrap()), 0);
    for (n, m) in [(1, 2), (2, 3), (2, 4), (3, 4)] {
        assert_eq!(d1_symbolic_rank(&pair(PairSpec::gl_gl(n, m))).unwrap(), n);
    }
    assert_eq!(d1_symbolic_rank(&pair(PairSpec::so2n_gln(3))).unwrap(), 2);
}

#[test]
fn d1_equivariance() {
    let gl = pair(PairSpec::gl_gl(2, 3));
    let id = G0Element::Gl { b: Matrix::identity(2), c: Matrix::identity(3) };
    assert!(d1_equivariance_identity(&id, &gl).unwrap());
    let config = cfg();
    for spec in [PairSpec::gl_gl(2, 3), PairSpec::so2n_gln(3)] {
        let p = pair(spec);
        let mut rng = config.rng("test-equivariance");
        for _ in 0..10 {
            let g = G0Element::random(&p, &mut rng, 10).unwrap();
            assert!(d1_equivariance_identity(&g, &p).unwrap());
            let xi = combine(&rng.rationals(p.g1().dim(), 10), p.g1().basis());
            let eta = combine(&rng.rationals(p.g1().dim(), 10), p.g1().basis());
            assert!(d1_equivariance_check(&g, &xi, &eta, &p).unwrap());
            let (gm, gi) = g.ambient(&p).unwrap();
            let moved = d1(&gm.mul(&xi).mul(&gi), &gm.mul(&eta).mul(&gi), &p).unwrap();
            assert_eq!(rank_q(&moved), rank_q(&d1(&xi, &eta, &p).unwrap()));
        }
    }
}

#[test]
fn symbolic_rank_dominates_specializations() {
    let config = cfg();
    for spec in [PairSpec::gl_gl(2, 3), PairSpec::gl_gl(1, 2), PairSpec::so2n_gln(3), PairSpec::so2n_gln(5)] {
        let p = pair(spec);
        let generic = generic_cartan_d1(&p).unwrap();
        let bound = d1_symbolic_rank(&p).unwrap();
        let mut rng = config.rng("test-dominance");
        for _ in 0..20 {
            let values = rng.rationals(2 * p.rank(), 10);
            let special = generic.map(|c| c.eval(&values));
            assert!(rank_q(&special) <= bound, "{spec}");
        }
    }
}

#[test]
fn certificate_examples() {
    let cases = [(PairSpec::gl_gl(2, 3), 2, 3), (PairSpec::so2n_gln(3), 2, 3), (PairSpec::gl_gl(1, 2), 1, 2)];
    for (spec, bound, value) in cases {
        let cert = reducibility_certificate(spec, &cfg()).unwrap();
        let c = d1_cert(&cert);
        assert_eq!((c.bound, c.witness_value), (bound, value), "{spec}");
        assert!(verify_certificate(&cert).passed());
        let text = cert.to_json_string(true);
        assert!(verify_json(&text).unwrap().passed());
    }
}

#[test]
fn so2n_witness_matches_example() {
    let p = pair(PairSpec::so2n_gln(3));
    let w = d1_witness(&p).unwrap();
    let gr = p.short_grading().unwrap();
    let x = Matrix::from_rows(vec![vec![q(0), q(1), q(0)], vec![q(-1), q(0), q(0)], vec![q(0), q(0), q(0)]]).unwrap();
    let z = Matrix::from_rows(vec![vec![q(0), q(0), q(0)], vec![q(0), q(0), q(1)], vec![q(0), q(-1), q(0)]]).unwrap();
    assert_eq!(gr.plus_block(&w.x), x);
    assert_eq!(gr.plus_block(&w.y), z);
}

#[test]
fn rejected_certificate_parameters() {
    assert!(reducibility_certificate(PairSpec::gl_gl(2, 2), &cfg()).is_err());
    assert!(reducibility_certificate(PairSpec::so2n_gln(4), &cfg()).is_err());
    assert!(reducibility_certificate(PairSpec::so_so(2, 3), &cfg()).is_err());
}

#[test]
fn tampered_certificate_fails() {
    let cert = reducibility_certificate(PairSpec::gl_gl(2, 3), &cfg()).unwrap();
    let mut c = d1_cert(&cert).clone();
    c.witness_value = 4;
    assert!(!verify_certificate(&ReducibilityCertificate::D1(c.clone())).passed());
    c = d1_cert(&cert).clone();
    c.bound = 3;
    assert!(!verify_certificate(&ReducibilityCertificate::D1(c.clone())).passed());
    c = d1_cert(&cert).clone();
    c.witness.x.set(2, 0, q(5));
    assert!(!verify_certificate(&ReducibilityCertificate::D1(c)).passed());
    assert!(verify_json("{\"invariant\": \"D1\"}").is_err());
}

#[test]
fn spadesuit_examples() {
    for spec in [PairSpec::gl_gl(2, 3), PairSpec::so2n_gln(3)] {
        let report = spadesuit_check(&pair(spec), &cfg()).unwrap();
        assert_eq!(report.status(), "fails_certificate", "{spec}");
    }
    match spadesuit_check(&pair(PairSpec::gl_gl(2, 2)), &cfg()).unwrap() {
        SpadesuitReport::HoldsEvidence { tangent_dim, target } => assert_eq!((tangent_dim, target), (8, 8)),
        other => panic!("unexpected {other:?}"),
    }
}

fn nilpotent_in_centralizer(x: &Matrix<Q>, p: &SymPair) -> Matrix<Q> {
    let cent = centralizer_in(p.g1().basis(), x);
    let mut rng = cfg().rng("test-centralizer");
    loop {
        let z = combine(&rng.rationals(cent.len(), 5), &cent);
        let (_, nil) = jordan_chevalley(&z).unwrap();
        if !nil.is_zero() {
            return nil;
        }
    }
}

fn evidence_tree(x: &Matrix<Q>, y: &Matrix<Q>, p: &SymPair) -> EvidenceNode {
    match membership_evidence(x, y, p, 12, &cfg()).unwrap() {
        MembershipEvidence::Evidence { tree } => {
            verify_evidence(&tree, p, &cfg()).unwrap();
            tree
        }
        MembershipEvidence::Unknown { reason, .. } => panic!("unknown: {reason}"),
    }
}

#[test]
fn evidence_for_cartan_pair() {
    let p = pair(PairSpec::so_so(3, 2));
    let t = p.cartan_element(&[q(2), q(-3)]);
    let h = p.cartan_element(&[q(7), q(1)]);
    let tree = evidence_tree(&t, &h, &p);
    assert_eq!(tree.step, Step::BaseCase { tag: BaseTag::InCartanProduct });
}

#[test]
fn evidence_for_semisimple_reduction() {
    let p = pair(PairSpec::so_so(3, 2));
    let x = p.cartan_element(&[q(2), q(0)]);
    let y = nilpotent_in_centralizer(&x, &p);
    let tree = evidence_tree(&x, &y, &p);
    match &tree.step {
        Step::SemisimpleReduction { h, child, .. } => {
            assert_eq!(*h, x);
            assert_eq!(child.depth(), 0);
            assert_eq!(tree.depth(), 1);
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn evidence_for_even_nilpotent() {
    let p = pair(PairSpec::so_so(2, 1));
    let e = representative(&AbDiagram::new(vec!["aba".into()]).unwrap(), &p).unwrap();
    let tree = evidence_tree(&e, &e, &p);
    assert!(matches!(tree.step, Step::SheetStep { even: true, deformation_passed: true, limit_equal: true }));

    let p = pair(PairSpec::so_so(3, 2));
    let e = representative(&AbDiagram::new(vec!["ab".into(), "ba".into(), "a".into()]).unwrap(), &p).unwrap();
    let y = centralizer_in(p.g1().basis(), &e).into_iter().next().unwrap();
    let tree = evidence_tree(&e, &y, &p);
    assert!(tree.is_complete());
}

#[test]
fn evidence_on_random_commuting_pairs() {
    let config = cfg();
    for spec in [PairSpec::so_so(2, 2), PairSpec::so_so(3, 2), PairSpec::so_so(3, 3)] {
        let p = pair(spec);
        let mut rng = config.rng("test-evidence");
        for _ in 0..4 {
            let x = combine(&rng.rationals(p.g1().dim(), 3), p.g1().basis());
            let cent = centralizer_in(p.g1().basis(), &x);
            let y = combine(&rng.rationals(cent.len(), 3), &cent);
            evidence_tree(&x, &y, &p);
        }
    }
}

#[test]
fn tampered_evidence_is_rejected() {
    let p = pair(PairSpec::so_so(3, 2));
    let x = p.cartan_element(&[q(2), q(0)]);
    let y = nilpotent_in_centralizer(&x, &p);
    let mut tree = evidence_tree(&x, &y, &p);
    let mut scaled = tree.clone();
    if let Step::SemisimpleReduction { h, .. } = &mut scaled.step {
        *h = h.scale(&q(2));
    }
    verify_evidence(&scaled, &p, &cfg()).unwrap();
    if let Step::SemisimpleReduction { child, .. } = &mut tree.step {
        child.y = child.y.scale(&q(2));
    }
    assert!(verify_evidence(&tree, &p, &cfg()).is_err());
    let z = combine(&[q(1), q(2), q(0), q(-1), q(3), q(1)], p.g1().basis());
    assert!(!x.comm(&z).is_zero());
    assert!(membership_evidence(&x, &z, &p, 5, &cfg()).is_err());
}

#[test]
fn evidence_for_every_nilpotent_representative() {
    use symcomvar::nilpotent::enumerate_ab_diagrams;
    for n in 1..=3usize {
        for m in 1..=(5 - n).min(3) {
            let p = pair(PairSpec::so_so(n, m));
            let mut rng = cfg().rng("test-sweep");
            for d in enumerate_ab_diagrams(n, m) {
                let e = representative(&d, &p).unwrap();
                let cent = centralizer_in(p.g1().basis(), &e);
                let y = combine(&rng.rationals(cent.len(), 3), &cent);
                let tree = evidence_tree(&e, &y, &p);
                assert!(tree.is_complete(), "{d} in SO_SO({n},{m})");
            }
        }
    }
}
