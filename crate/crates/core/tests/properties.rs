use momgauge::fieldsolve::{
    laplacian_residual, poisson_solve_1d, transverse_current, BoundaryCondition, MomentumSource1D, PiecewiseField1D,
    Sheet, SheetKind,
};
use momgauge::gaugefield::{apply_gauge_transform, field_strength, GaugeTransform, MomentumGaugeConfig, Monomial};
use momgauge::landau::{
    assemble_fock_hamiltonian, assemble_grid_hamiltonian, diagonalize, effective_params, lz_fock, CMatrix,
    HamiltonianMatrix, OscillatorParams, QuadraticForm, Reference,
};
use momgauge::phasegrid::{gaussian_state, parity, reciprocity_map, MomentumGrid, StateVector};
use momgauge::{Error, FourVector};
use proptest::prelude::*;
use std::sync::Arc;

fn params() -> impl Strategy<Value = OscillatorParams> {
    (0.3..3.0f64, 0.3..3.0f64, -2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64, 0.5..2.0f64)
        .prop_map(|(m, omega, e, g, b, bm, hbar)| OscillatorParams { m, omega, e, g, b, bm, hbar })
}

fn monomial() -> impl Strategy<Value = Monomial> {
    (-1.0..1.0f64, 0u32..=4, 0u32..=4, 0u32..=4).prop_filter_map("degree at most 4", |(c, a, b, d)| {
        (a + b + d <= 4).then_some(Monomial { coeff: c, powers: [a, b, d] })
    })
}

fn four_vector(r: f64) -> impl Strategy<Value = FourVector> {
    [-r..r, -r..r, -r..r, -r..r].prop_map(FourVector)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn effective_parameters_are_consistent(p in params()) {
        let eff = effective_params(&p).unwrap();
        prop_assert!(eff.kinetic_factor >= 1.0 && eff.potential_factor >= 1.0);
        prop_assert!((eff.m_eff * eff.kinetic_factor - p.m).abs() <= 1e-12 * p.m);
        // the gap ω_eff² - λ² factorizes as ω²(1 + uv)²
        let u = p.e * p.b / (2.0 * p.m * p.omega);
        let v = p.g * p.m * p.omega * p.bm / 2.0;
        let gap = eff.omega_eff.powi(2) - eff.lz_coupling.powi(2);
        let want = (p.omega * (1.0 + u * v)).powi(2);
        prop_assert!((gap - want).abs() <= 1e-10 * eff.omega_eff.powi(2));
        if let Some(mix) = eff.mixing {
            prop_assert!((mix.cos_theta.powi(2) + mix.sin_theta.powi(2) - 1.0).abs() <= 1e-14);
            let lhs = mix.b_eff.powi(2) + mix.b_nc.powi(2);
            prop_assert!((lhs - p.b * p.b - p.bm * p.bm).abs() <= 1e-12 * lhs.max(1.0));
            // λ is the B_eff component scaled by the coupling norm
            prop_assert!((eff.lz_coupling - mix.b_eff * eff.g1.hypot(eff.g2)).abs() <= 1e-12 * eff.lz_coupling.abs().max(1.0));
        }
    }

    #[test]
    fn expanded_squares_equal_closed_form(p in params()) {
        let expanded = QuadraticForm::doubly_gauged(&p);
        let closed = QuadraticForm::closed_form(&p).unwrap();
        let scale = expanded.q.iter().flatten().fold(1.0f64, |m, v| m.max(v.abs()));
        prop_assert!(expanded.max_abs_diff(&closed) <= 1e-13 * scale);
    }

    #[test]
    fn gauge_transforms_leave_field_strength_alone(
        terms in prop::collection::vec(monomial(), 1..6),
        g in prop_oneof![-3.0..-0.1f64, 0.1..3.0f64],
        p in four_vector(3.0),
        b in [-2.0..2.0f64, -2.0..2.0, -2.0..2.0],
    ) {
        let eta = GaugeTransform::new(terms).unwrap();
        let config = MomentumGaugeConfig::ConstantMagnetic { b };
        let moved = apply_gauge_transform(&config, &eta, g).unwrap();
        let a = field_strength(&config, &p).unwrap().g;
        let c = field_strength(&moved, &p).unwrap().g;
        for mu in 0..4 {
            for nu in 0..4 {
                prop_assert!((a[mu][nu] - c[mu][nu]).abs() <= 1e-9 * a[mu][nu].abs().max(1.0));
            }
        }
        // the potential itself does move, by ∇η/g
        let grad = eta.gradient(p.space());
        let (c0, c1) = (config.eval(&p).unwrap(), moved.eval(&p).unwrap());
        for k in 0..3 {
            prop_assert!((c1[k + 1] - c0[k + 1] - grad[k] / g).abs() <= 1e-12 * (1.0 + grad[k].abs() / g.abs()));
        }
    }

    #[test]
    fn transverse_projection_is_orthogonal_and_idempotent(v in four_vector(10.0), x in four_vector(10.0)) {
        prop_assume!(x.square().abs() > 1e-3 * x.euclidean_norm().powi(2));
        let t = transverse_current(&v, &x).unwrap();
        prop_assert!(t.dot(&x).abs() <= 1e-11 * x.euclidean_norm() * v.euclidean_norm());
        let tt = transverse_current(&t, &x).unwrap();
        for k in 0..4 {
            prop_assert!((tt[k] - t[k]).abs() <= 1e-9 * v.euclidean_norm().max(1.0));
        }
    }

    #[test]
    fn poisson_matches_superposed_sheets(
        sheets in prop::collection::vec((-3.0..3.0f64, -2.0..2.0f64), 1..4),
        current in any::<bool>(),
    ) {
        let kind = if current { SheetKind::CurrentY } else { SheetKind::Charge };
        let sheets: Vec<Sheet> = sheets.into_iter().map(|(position, strength)| Sheet { position, strength, kind }).collect();
        let source = MomentumSource1D::new(sheets).unwrap();
        let sol = poisson_solve_1d(&source, 400, 8.0, BoundaryCondition::AnalyticFarField).unwrap();
        let exact = PiecewiseField1D::from_source(&source).unwrap();
        let scale = source.sheets.iter().map(|s| s.strength.abs()).sum::<f64>().max(1.0);
        prop_assert!(laplacian_residual(&sol, &source).unwrap().max_abs_residual <= 1e-11 * scale);
        for (p, c) in sol.nodes.iter().zip(&sol.potential) {
            prop_assert!((c - exact.potential_at(*p)).abs() <= 1e-9 * scale);
        }
        // every jump is 4π times the sheet strength
        let jumps = exact.jumps();
        let mut sorted = source.sheets.clone();
        sorted.sort_by(|a, b| a.position.total_cmp(&b.position));
        for (j, s) in jumps.iter().zip(&sorted) {
            prop_assert!((j - 4.0 * std::f64::consts::PI * s.strength).abs() <= 1e-12 * scale);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn reciprocity_map_is_unitary_with_parity_square(
        cx in -1.0..1.0f64, cy in -1.0..1.0f64, w in 0.7..1.2f64,
    ) {
        let grid = Arc::new(MomentumGrid::self_dual(2, 32, 1.0).unwrap());
        let psi = gaussian_state(&grid, &[cx, cy], w).unwrap();
        let r = reciprocity_map(&grid).unwrap();
        let once = r.apply(&psi).unwrap();
        prop_assert!((once.norm() - 1.0).abs() <= 1e-12);
        let back = r.apply_inverse(&once).unwrap();
        prop_assert!(back.sub(&psi).unwrap().norm() <= 1e-12);
        let twice = r.apply(&once).unwrap();
        prop_assert!(twice.sub(&parity(&psi).unwrap()).unwrap().norm() <= 1e-12);
    }
}

fn lowest(h: &HamiltonianMatrix, k: usize) -> Vec<f64> {
    diagonalize(h).unwrap().eigenvalues[..k].to_vec()
}

fn grid_levels(p: &OscillatorParams, k: usize) -> Vec<f64> {
    let grid = MomentumGrid::new(2, 32, 8.0, None).unwrap();
    lowest(&assemble_grid_hamiltonian(&grid, p).unwrap(), k)
}

#[test]
fn grid_bare_oscillator_ground_state() {
    let e = grid_levels(&OscillatorParams::default(), 1);
    assert!((e[0] - 1.0).abs() <= 1e-6, "{e:?}");
}

#[test]
fn grid_fock_darwin_levels() {
    let p = OscillatorParams { e: 1.0, b: 1.0, ..Default::default() };
    let omega = 1.25f64.sqrt();
    // Ω(2n + |m| + 1) - m/2 with Ω = √(ω² + ω_c²/4)
    let mut want: Vec<f64> = (0..10)
        .flat_map(|n| (-10i32..=10).map(move |m| omega * (2 * n + m.abs() + 1) as f64 - 0.5 * m as f64))
        .collect();
    want.sort_by(f64::total_cmp);
    for (a, b) in grid_levels(&p, 5).iter().zip(&want) {
        assert!((a - b).abs() <= 1e-5, "{a} vs {b}");
    }
}

#[test]
fn grid_and_fock_bases_agree() {
    for p in [
        OscillatorParams { e: 1.0, b: 0.8, g: 1.0, bm: -0.4, ..Default::default() },
        OscillatorParams { m: 1.3, omega: 0.9, e: -0.5, b: 1.0, g: 0.7, bm: 0.6, hbar: 1.0 },
    ] {
        let fock = lowest(&assemble_fock_hamiltonian(&p, 30, Reference::Bare).unwrap(), 5);
        for (a, b) in grid_levels(&p, 5).iter().zip(&fock) {
            assert!((a - b).abs() <= 1e-4, "{p:?}: {a} vs {b}");
        }
    }
}

#[test]
fn angular_momentum_on_lowest_two_quanta() {
    let lz = lz_fock(2, 1.0).unwrap();
    // |00>, |01>, |10>, |11> in the (n_max + 1)-stride layout
    let idx = [0usize, 1, 3, 4];
    let sub = CMatrix::from_fn(4, |i, j| lz.matrix[(idx[i], idx[j])]);
    let e = lowest(&HamiltonianMatrix::dense(sub), 4);
    for (a, b) in e.iter().zip([-1.0, 0.0, 0.0, 1.0]) {
        assert!((a - b).abs() <= 1e-12, "{e:?}");
    }
}

#[test]
fn collapsed_gap_is_unbounded() {
    // uv = -1 with u = eB/2mω and v = gmω𝓑/2
    let p = OscillatorParams { e: 1.0, b: 2.0, g: 1.0, bm: -2.0, ..Default::default() };
    let err = momgauge::landau::analytic_spectrum(&p, 5).unwrap_err();
    assert!(matches!(err, Error::UnboundedSpectrum { .. }));
}

#[test]
fn parity_states_round_trip() {
    let grid = Arc::new(MomentumGrid::new(2, 32, 6.0, None).unwrap());
    let psi: StateVector = gaussian_state(&grid, &[0.4, -0.9], 0.7).unwrap();
    let back = parity(&parity(&psi).unwrap()).unwrap();
    assert!(back.sub(&psi).unwrap().norm() <= 1e-15);
}
