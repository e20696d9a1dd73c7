use std::sync::OnceLock;

use num_traits::Zero;
use symcomvar::commvar::{verify_certificate, verify_json, ReducibilityCertificate};
use symcomvar::exactlin::Matrix;
use symcomvar::liealg::Subspace;
use symcomvar::sampling::RunConfig;
use symcomvar::scalar::{q, qf, Q};
use symcomvar::spinor::{
    build_c1, build_clifford10, dual_index, e6_spadesuit_obstruction, solve_equivariant_quadratic, CliffordModel,
    QuarticInvariant, HALF_DIM, SO10_DIM, SPIN_DIM, VECTOR_DIM,
};

fn model() -> &'static (CliffordModel, QuarticInvariant) {
    static MODEL: OnceLock<(CliffordModel, QuarticInvariant)> = OnceLock::new();
    MODEL.get_or_init(|| {
        let m = build_clifford10().unwrap();
        let inv = solve_equivariant_quadratic(&m).unwrap();
        (m, inv)
    })
}

fn dot_metric(inv: &QuarticInvariant, v: &[Q]) -> Q {
    let g = &inv.metric;
    (0..VECTOR_DIM).flat_map(|i| (0..VECTOR_DIM).map(move |j| (i, j))).map(|(i, j)| g.get(i, j) * &v[i] * &v[j]).sum()
}

#[test]
fn clifford_relations() {
    let (m, _) = model();
    let g = m.gammas();
    let id = Matrix::<Q>::identity(SPIN_DIM);
    assert!(g[0].mul(&g[1]).add(&g[1].mul(&g[0])).is_zero());
    for i in 0..VECTOR_DIM {
        assert_eq!(g[i].mul(&g[i]), id.scale(m.metric().get(i, i)));
        assert_eq!(g[i].mul(&g[dual_index(i)]).add(&g[dual_index(i)].mul(&g[i])), id);
        assert!(g[i].entries().iter().all(|x| *x == q(0) || *x == q(1) || *x == q(-1)));
    }
    m.check().unwrap();
}

#[test]
fn so10_structure_constants_solve() {
    let (m, _) = model();
    let span = Subspace::new(HALF_DIM, m.so10_plus().to_vec()).unwrap();
    assert_eq!(span.dim(), SO10_DIM);
    for a in m.so10_plus() {
        for b in m.so10_plus() {
            let coeffs = span.coordinates(&a.comm(b)).unwrap();
            assert_eq!(span.element(&coeffs), a.comm(b));
        }
    }
}

fn sign_vectors(even_minus: bool) -> Vec<Vec<Q>> {
    let mut out: Vec<Vec<Q>> = (0..32u32)
        .filter(|mask| (mask.count_ones() % 2 == 0) == even_minus)
        .map(|mask| (0..5).map(|k| if mask >> k & 1 == 1 { qf(-1, 2) } else { qf(1, 2) }).collect())
        .collect();
    out.sort();
    out
}

#[test]
fn half_spinor_weights() {
    let (m, _) = model();
    for (plus, even) in [(true, true), (false, false)] {
        let mut ws: Vec<Vec<Q>> = m.weights(plus).unwrap().into_iter().map(|w| w.coordinates).collect();
        ws.sort();
        assert_eq!(ws, sign_vectors(even));
    }
}

#[test]
fn quadratic_maps_are_unique_and_equivariant() {
    let (m, inv) = model();
    assert_eq!(inv.kernel_dims, [1, 1]);
    for plus in [true, false] {
        let gens = if plus { m.so10_plus() } else { m.so10_minus() };
        for (rho, pi) in gens.iter().zip(m.vector_action()) {
            assert!(inv.equivariance_residual(rho, pi, plus).iter().all(Matrix::is_zero));
        }
    }
}

#[test]
fn quadratic_map_on_c1() {
    let (m, inv) = model();
    let [w1, w2] = build_c1(m).unwrap();
    assert_eq!(w1.coordinates, vec![qf(1, 2); 5]);
    assert_eq!(w2.coordinates, vec![qf(1, 2), qf(-1, 2), qf(-1, 2), qf(-1, 2), qf(-1, 2)]);
    // 2 * weight is never a weight of V, so q vanishes on single weight vectors
    assert!(inv.quadratic(&w1.vector, true).iter().all(Zero::is_zero));
    let sum: Vec<Q> = w1.vector.iter().zip(&w2.vector).map(|(a, b)| a + b).collect();
    let image = inv.quadratic(&sum, true);
    assert!(image.iter().any(|c| !c.is_zero()));
    assert!(dot_metric(inv, &image).is_zero());
    // the image has weight e1, so it is a multiple of the first basis vector
    assert!(image.iter().skip(1).all(Zero::is_zero));
}

#[test]
fn quartic_invariant_properties() {
    let (m, inv) = model();
    let [w1, w2] = build_c1(m).unwrap();
    let (restricted, monomials) = inv.restricted_to_span(&w1.vector, &w2.vector);
    assert!(restricted.is_zero());
    assert_eq!(monomials, 9);
    assert!(m.so10_plus().iter().all(|rho| inv.infinitesimal_invariance(rho)));
    assert!(inv.is_bihomogeneous());
    assert!(!inv.infinitesimal_invariance(&Matrix::unit(HALF_DIM, HALF_DIM, 0, 1)));
    let unit = |i: usize| (0..HALF_DIM).map(|j| if i == j { q(1) } else { q(0) }).collect::<Vec<Q>>();
    for i in 0..HALF_DIM {
        for j in 0..HALF_DIM {
            assert!(inv.f(&unit(i), &unit(j)).is_zero());
        }
    }
}

#[test]
fn e6_certificate() {
    let cfg = RunConfig::default();
    let cert = e6_spadesuit_obstruction(&cfg).unwrap();
    let ReducibilityCertificate::QuarticSpinor(c) = &cert else { panic!("wrong variant") };
    assert_ne!(c.witness_value, q(0));
    assert_eq!(c.witness_search, "two_term_sums");
    assert_eq!(c.contraction.weight_pairings, vec![qf(-1, 2), qf(-1, 2)]);
    assert_eq!(c.c1.len(), 2);
    assert!(verify_certificate(&cert).passed());
    let text = cert.to_json_string(false);
    assert!(verify_json(&text).unwrap().passed());

    let mut bad = (**c).clone();
    bad.witness_value = bad.witness_value.clone() + q(1);
    assert!(!verify_certificate(&ReducibilityCertificate::QuarticSpinor(Box::new(bad))).passed());
    let mut bad = (**c).clone();
    bad.witness_vector_minus = vec![q(0); HALF_DIM];
    assert!(!verify_certificate(&ReducibilityCertificate::QuarticSpinor(Box::new(bad))).passed());
    let mut bad = (**c).clone();
    bad.c1[1].coordinates[0] = qf(-1, 2);
    assert!(!verify_certificate(&ReducibilityCertificate::QuarticSpinor(Box::new(bad))).passed());
}
