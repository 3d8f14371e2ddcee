//! Published error levels for the analytic test functions, within a factor of 3.

use ppinterp::harness::{
    run_approximation, ExperimentKind, ExperimentSpec, Scheme, TestFunctionId,
};
use ppinterp::InterpConfig;

fn l2(function: TestFunctionId, n: usize, scheme: Scheme) -> f64 {
    run_approximation(&ExperimentSpec {
        function,
        n,
        scheme,
        kind: ExperimentKind::Approximation,
    })
    .unwrap()
    .l2
}

fn assert_within_3x(value: f64, reference: f64) {
    assert!(
        value <= 3.0 * reference && value >= reference / 3.0,
        "{value:e} not within x3 of {reference:e}"
    );
}

#[test]
fn runge_ppi_degree_8() {
    assert_within_3x(
        l2(
            TestFunctionId::F1,
            257,
            Scheme::Adaptive(InterpConfig::ppi(8)),
        ),
        9.89e-8,
    );
}

#[test]
fn logistic_dbi_degree_8() {
    assert_within_3x(
        l2(
            TestFunctionId::F2,
            257,
            Scheme::Adaptive(InterpConfig::dbi(8)),
        ),
        5.22e-9,
    );
}

#[test]
fn logistic_error_falls_with_degree() {
    let e: Vec<f64> = [3, 4, 8]
        .iter()
        .map(|&d| {
            l2(
                TestFunctionId::F2,
                257,
                Scheme::Adaptive(InterpConfig::ppi(d)),
            )
        })
        .collect();
    assert!(e[1] <= e[0] && e[2] <= e[1], "{e:?}");
}

#[test]
fn runge_2d_ppi_and_pchip() {
    assert_within_3x(
        l2(
            TestFunctionId::F4,
            257,
            Scheme::Adaptive(InterpConfig::ppi(8)),
        ),
        2.91e-8,
    );
    assert_within_3x(l2(TestFunctionId::F4, 257, Scheme::Pchip), 4.19e-5);
}

#[test]
fn logistic_2d_ppi_degree_8() {
    assert_within_3x(
        l2(
            TestFunctionId::F5,
            257,
            Scheme::Adaptive(InterpConfig::ppi(8)),
        ),
        5.39e-10,
    );
}

#[test]
fn piecewise_surface_is_method_insensitive() {
    assert_within_3x(l2(TestFunctionId::F6, 17, Scheme::Pchip), 1.91e-2);
    assert_within_3x(
        l2(
            TestFunctionId::F6,
            257,
            Scheme::Adaptive(InterpConfig::ppi(8)),
        ),
        2.76e-4,
    );
}
