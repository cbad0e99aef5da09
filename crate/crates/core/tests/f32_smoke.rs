//! Single-precision smoke test: the whole stack is generic over the scalar,
//! so the basic identities must also hold at f32 with its looser tolerances.

use num_complex::Complex;

use tensorframe_core::linalg::{hermitian_eigen, ComplexMatrix};
use tensorframe_core::modframe::ModuleFrame;

#[test]
fn single_precision_end_to_end() {
    let m = ComplexMatrix::<f32>::from_real_rows(&[&[2.0, 1.0], &[1.0, 2.0]]);
    let eig = hermitian_eigen(&m).unwrap();
    assert!((eig.eigenvalues()[0] - 1.0).abs() <= 1e-5);
    assert!((eig.eigenvalues()[1] - 3.0).abs() <= 1e-5);

    let h = 3f32.sqrt() / 2.0;
    let re = |x: f32| Complex::new(x, 0.0f32);
    let mercedes = ModuleFrame::<f32>::from_scalar_vectors(vec![
        vec![re(0.0), re(1.0)],
        vec![re(-h), re(-0.5)],
        vec![re(h), re(-0.5)],
    ])
    .unwrap();
    let bounds = mercedes.frame_bounds(1e-5).unwrap();
    assert!((bounds.lower() - 1.5).abs() <= 1e-5);
    assert!((bounds.upper() - 1.5).abs() <= 1e-5);
    assert!(mercedes.verify_pointwise(&bounds, 10, 3));

    let tensored = mercedes.tensor(&mercedes);
    let bt = tensored.frame_bounds(1e-5).unwrap();
    assert!((bt.lower() - 2.25).abs() <= 1e-4);
    assert!((bt.upper() - 2.25).abs() <= 1e-4);
}
