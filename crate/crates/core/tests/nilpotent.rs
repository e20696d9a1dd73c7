use symcomvar::nilpotent::{
    centralizer_limit, diagram_from_ranks, enumerate_ab_diagrams, is_even, is_sigma_distinguished, kr_triple, ad_eigenvalues,
    representative, semisimple_deformation, sigma_adapted_jordan, AbDiagram, DecisionMode,
};
use symcomvar::exactlin::{char_poly, rank_q};
use symcomvar::sampling::RunConfig;
use symcomvar::scalar::q;
use symcomvar::sympair::{make_pair, PairSpec, SymPair};
use symcomvar::{QMatrix, UniPoly};

fn so_so(n: usize, m: usize) -> SymPair {
    make_pair(PairSpec::so_so(n, m)).unwrap()
}

fn diagram(rows: &[&str]) -> AbDiagram {
    AbDiagram::new(rows.iter().map(|s| s.to_string()).collect()).unwrap()
}

fn spectrum_poly(eigenvalues: &[i64]) -> UniPoly<symcomvar::Q> {
    eigenvalues
        .iter()
        .fold(UniPoly::one(), |acc, l| acc.mul(&UniPoly::new(vec![q(-l), q(1)])))
}

#[test]
fn singleton_diagram_gives_zero() {
    let pair = so_so(2, 3);
    let e = representative(&diagram(&["a", "a", "b", "b", "b"]), &pair).unwrap();
    assert!(e.is_zero());
    let data = sigma_adapted_jordan(&e, &pair).unwrap();
    assert_eq!(data.len(), 5);
    assert_eq!(data.types, vec!["a", "a", "b", "b", "b"]);
}

#[test]
fn aba_in_so_so_2_1() {
    let pair = so_so(2, 1);
    let d = diagram(&["aba"]);
    let e = representative(&d, &pair).unwrap();
    assert!(!e.pow(2).is_zero());
    assert!(e.pow(3).is_zero());
    assert_eq!(rank_q(&e), 2);
    assert_eq!(sigma_adapted_jordan(&e, &pair).unwrap().diagram().unwrap(), d);
    let t = kr_triple(&e, &pair).unwrap();
    assert_eq!(char_poly(&t.h).unwrap(), spectrum_poly(&[2, 0, -2]));
    assert!(t.f.pow(3).is_zero() && pair.g1().contains(&t.f));
    assert!(is_even(&e, &pair).unwrap());
    let report = semisimple_deformation(&e, &pair).unwrap();
    assert!(report.passed() && report.sheet_condition());
    assert!(centralizer_limit(&e, &pair).unwrap().equal);
}

#[test]
fn even_pair_in_so_so_2_2() {
    let pair = so_so(2, 2);
    let d = diagram(&["ab", "ba"]);
    let e = representative(&d, &pair).unwrap();
    assert!(e.pow(2).is_zero());
    assert_eq!(rank_q(&e), 2);
    let data = sigma_adapted_jordan(&e, &pair).unwrap();
    assert_eq!(data.diagram().unwrap(), d);
    let inv = pair.involution().conjugator();
    for (w, ty) in data.cyclic_vectors.iter().zip(&data.types) {
        let image = inv.mul_vec(w);
        let expected: Vec<_> = if ty.starts_with('a') { w.iter().map(|x| -x).collect() } else { w.clone() };
        assert_eq!(image, expected);
    }
    let t = kr_triple(&e, &pair).unwrap();
    assert_eq!(char_poly(&t.h).unwrap(), spectrum_poly(&[1, -1, 1, -1]));
    // ad(h) on so_4 = Λ²V has eigenvalues λ_i + λ_j for V-eigenvalues ±1, 1, -1
    let expected: Vec<i64> = {
        let v = [1, -1, 1, -1];
        let mut sums: Vec<i64> = (0..4).flat_map(|i| (i + 1..4).map(move |j| v[i] + v[j])).collect();
        sums.sort_unstable();
        sums
    };
    assert_eq!(ad_eigenvalues(&t.h, &pair).unwrap(), expected);
    assert!(is_even(&e, &pair).unwrap());
    let cfg = RunConfig::default();
    assert!(!is_sigma_distinguished(&e, &pair, &cfg).unwrap().distinguished);
}

#[test]
fn zero_is_even_and_not_distinguished() {
    let pair = so_so(2, 1);
    let zero = QMatrix::zeros(3, 3);
    assert!(is_even(&zero, &pair).unwrap());
    let report = is_sigma_distinguished(&zero, &pair, &RunConfig::default()).unwrap();
    assert!(!report.distinguished);
    assert!(kr_triple(&zero, &pair).is_err());
    assert!(centralizer_limit(&zero, &pair).unwrap().equal);
}

#[test]
fn regular_odd_diagram_is_distinguished() {
    let pair = so_so(2, 2);
    let e = representative(&diagram(&["aba", "b"]), &pair).unwrap();
    let report = is_sigma_distinguished(&e, &pair, &RunConfig::default()).unwrap();
    assert_eq!(report.mode, DecisionMode::ExactSymbolic);
    let deformation = semisimple_deformation(&e, &pair).unwrap();
    assert_eq!(deformation.even, is_even(&e, &pair).unwrap());
    assert!(deformation.passed());
}

#[test]
fn limit_for_aba_bab_in_so_so_3_3() {
    let pair = so_so(3, 3);
    let e = representative(&diagram(&["aba", "bab"]), &pair).unwrap();
    assert!(centralizer_limit(&e, &pair).unwrap().equal);
}

#[test]
fn mismatched_diagram_is_rejected() {
    assert!(representative(&diagram(&["aba"]), &so_so(1, 2)).is_err());
    let gl = make_pair(PairSpec::gl_gl(1, 1)).unwrap();
    assert!(representative(&diagram(&["a", "b"]), &gl).is_err());
}

#[test]
fn non_nilpotent_input_is_rejected() {
    let pair = so_so(2, 1);
    let h = pair.cartan()[0].clone();
    assert!(sigma_adapted_jordan(&h, &pair).is_err());
}

#[test]
fn round_trip_and_rank_oracle() {
    for total in 0..=6 {
        for n in 0..=total {
            let m = total - n;
            if n + m == 0 {
                continue;
            }
            let pair = so_so(n, m);
            for d in enumerate_ab_diagrams(n, m) {
                let e = representative(&d, &pair).unwrap();
                let data = sigma_adapted_jordan(&e, &pair).unwrap();
                assert_eq!(data.diagram().unwrap(), d, "round trip in SO_SO({n},{m})");
                assert_eq!(diagram_from_ranks(&e, &pair).unwrap(), d, "rank oracle in SO_SO({n},{m})");
            }
        }
    }
}

#[test]
fn orbit_invariance_under_g0() {
    let cfg = RunConfig::default();
    for (n, m) in [(2, 2), (3, 2), (3, 3)] {
        let pair = so_so(n, m);
        let mut rng = cfg.rng("orbit-invariance");
        for d in enumerate_ab_diagrams(n, m) {
            let e = representative(&d, &pair).unwrap();
            for _ in 0..3 {
                let (g, g_inv) = pair.random_g0_element(&mut rng, 3);
                let conj = g.mul(&e).mul(&g_inv);
                assert_eq!(sigma_adapted_jordan(&conj, &pair).unwrap().diagram().unwrap(), d);
            }
        }
    }
}
