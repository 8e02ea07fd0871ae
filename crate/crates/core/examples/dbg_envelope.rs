use biminimal_core::curves::*;
use biminimal_core::surfaces::*;
use biminimal_core::grid::GridSpec;

fn run(c: f64, label: &str) {
    // slope curve with k = tau = c/s
    let grid = GridSpec::new(1.0, 3.0, 401).unwrap();
    let kf = move |s: f64| c / s;
    let gamma = reconstruct_space_curve(&kf, &kf, &grid, &FrameInit::standard()).unwrap();
    let fiber = FiberParams { s_min: 0.05, s_max: 0.55, n_s: 201 };
    let surf = match build_catalog_surface(CatalogKind::R3Envelope, &gamma, &fiber) { Ok(s) => s, Err(e) => { println!("{label}: build error {e:?}"); return; } };
    let sd = shape_data(&surf).unwrap();
    // H vs k comparison
    let mut h_dev: f64 = 0.0;
    for it in 4..surf.nt()-4 {
        for is in 4..surf.ns()-4 {
            let n = sd.idx(it, is);
            let k = kf(grid.value(it));
            h_dev = h_dev.max((sd.h[n] - k).abs());
        }
    }
    // residual Delta H - 4 H^3 (eq5 with lambda=0 equals eq6 free; flat ambient Ric=0)
    let r = biminimal_residual_surface(&surf, &sd, 0.0).unwrap();
    // also raw Delta H vs k'' comparison at center
    let lap = laplacian_of(&surf, &sd.h).unwrap();
    let itc = surf.nt()/2 - lap.t_offset;
    let isc = surf.ns()/2 - lap.s_offset;
    let t_mid = grid.value(surf.nt()/2);
    let kpp = 2.0*c/t_mid.powi(3);
    println!("{label}: max|H-k|={h_dev:.2e}  max|res(l=0)|={:.3e}  DeltaH(center)={:.6}  k''={kpp:.6}  2k''={:.6}", r.max_abs(), lap.get(itc, isc), 2.0*kpp);
}

fn main() {
    run(1.0, "k=1/s      (k''=2k^3)");
    run(1.0/core::f64::consts::SQRT_2, "k=1/(s*sqrt2) (k''=4k^3)");
}
