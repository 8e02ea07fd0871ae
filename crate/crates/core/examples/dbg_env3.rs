use biminimal_core::curves::*;
use biminimal_core::surfaces::*;
use biminimal_core::grid::GridSpec;

fn main() {
    let grid = GridSpec::new(1.0, 3.0, 401).unwrap();
    let kf = move |s: f64| 1.0 / s;
    let gamma = reconstruct_space_curve(&kf, &kf, &grid, &FrameInit::standard()).unwrap();
    let fiber = FiberParams { s_min: 0.05, s_max: 0.55, n_s: 101 };
    let surf = build_catalog_surface(CatalogKind::R3Envelope, &gamma, &fiber).unwrap();
    let sd = shape_data(&surf).unwrap();
    let r = biminimal_residual_surface(&surf, &sd, 0.0).unwrap();
    // profile of max |r| per t-row and per s-col
    let mut row_max = vec![0.0f64; r.nt];
    let mut col_max = vec![0.0f64; r.ns];
    for it in 0..r.nt { for is in 0..r.ns {
        let v = r.get(it, is).abs();
        row_max[it] = row_max[it].max(v);
        col_max[is] = col_max[is].max(v);
    }}
    println!("t rows 0..8: {:?}", &row_max[..8].iter().map(|v| format!("{v:.2e}")).collect::<Vec<_>>());
    println!("t rows last: {:?}", &row_max[r.nt-8..].iter().map(|v| format!("{v:.2e}")).collect::<Vec<_>>());
    println!("s cols 0..8: {:?}", &col_max[..8].iter().map(|v| format!("{v:.2e}")).collect::<Vec<_>>());
    println!("s cols last: {:?}", &col_max[r.ns-8..].iter().map(|v| format!("{v:.2e}")).collect::<Vec<_>>());
    let mid = row_max[r.nt/2];
    println!("row mid max: {mid:.3e}");
}
