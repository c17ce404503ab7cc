mod common;

use common::{entangled_reductions, pt_lower_bound, purity_defect, PurificationOracle, RoofOracle};
use gaussian_tangle::StandardForm;
use nalgebra::SymmetricEigen;

#[test]
fn roof_oracle_reproduces_symmetric_closed_form() {
    // For a = b the roof equals ((ν̃ + 1/ν̃)/2)², with ν̃ the smallest
    // symplectic eigenvalue of the partial transpose.
    for &(a, cp, cm) in &[(2.0, 1.5, -1.0), (2.0, 1.2, -1.2), (1.6, 1.1, -0.9), (3.0, 2.5, -2.0)] {
        let sf = StandardForm::new(a, a, cp, cm);
        assert!(sf.is_entangled(1e-9).unwrap(), "{sf:?}");
        let exact = pt_lower_bound(&sf);
        let oracle = RoofOracle::new(&sf.to_cm()).minimize(8, 11);
        assert!((oracle - exact).abs() < 1e-6 * exact, "{sf:?}: oracle {oracle} exact {exact}");
    }
}

#[test]
fn purification_oracle_witnesses_are_pure_and_dominated() {
    for (state, i, j) in entangled_reductions(20, 1.0, 900) {
        let sf = StandardForm::of_pair(&state, i, j).unwrap();
        let oracle = PurificationOracle::new(&state, i, j);
        let (value, phi, mu) = oracle.minimize();
        let witness = oracle.conditional(phi, mu);
        assert!(purity_defect(&witness) < 1e-9);
        assert!(value >= pt_lower_bound(&sf) - 1e-9);
        let gamma = common::to_matrix4(state.reduce(&[i, j]).unwrap().cm());
        let gap = SymmetricEigen::new(gamma - witness).eigenvalues.min();
        assert!(gap > -1e-9, "witness exceeds the reduction by {gap}");
    }
}

#[test]
fn purification_oracle_matches_closed_form_on_pure_pairs() {
    let state = gaussian_tangle::GaussianState::two_mode_squeezed_vacuum(0.4);
    let pure3 = {
        let vac = gaussian_tangle::GaussianState::vacuum(1).unwrap();
        let mut cm = nalgebra::DMatrix::<f64>::identity(6, 6);
        cm.view_mut((0, 0), (4, 4)).copy_from(state.cm());
        cm.view_mut((4, 4), (2, 2)).copy_from(vac.cm());
        gaussian_tangle::GaussianState::from_cm(cm).unwrap()
    };
    let (value, _, _) = PurificationOracle::new(&pure3, 0, 1).minimize();
    let a = (0.8f64).cosh();
    assert!((value - a * a).abs() < 1e-10, "{value}");
}
