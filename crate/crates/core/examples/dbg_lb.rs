use biminimal_core::curves::*;
use biminimal_core::surfaces::*;
use biminimal_core::grid::GridSpec;

fn main() {
    let grid = GridSpec::new(1.0, 3.0, 2001).unwrap();
    let kf = move |s: f64| 1.0 / s;
    let gamma = reconstruct_space_curve(&kf, &kf, &grid, &FrameInit::standard()).unwrap();
    let fiber = FiberParams { s_min: 0.05, s_max: 0.55, n_s: 201 };
    let surf = build_catalog_surface(CatalogKind::R3Envelope, &gamma, &fiber).unwrap();
    let (nt, ns) = (surf.nt(), surf.ns());
    // analytic field u = k(t) = 1/t
    let mut field = vec![0.0; nt * ns];
    for it in 0..nt { for is in 0..ns { field[it*ns+is] = 1.0 / grid.value(it); } }
    let lap = laplacian_of(&surf, &field).unwrap();
    let (itc, isc) = (nt/2 - lap.t_offset, ns/2 - lap.s_offset);
    let t_mid = grid.value(nt/2);
    println!("analytic-field LB at center = {:.6}, want 2k'' = {:.6}", lap.get(itc, isc), 4.0/t_mid.powi(3));
    // now the shape H field
    let sd = shape_data(&surf).unwrap();
    // H variation along s at fixed t
    let it0 = nt/2;
    let mut hmin = f64::MAX; let mut hmax = f64::MIN;
    for is in 0..ns { let v = sd.h[it0*ns+is]; hmin = hmin.min(v); hmax = hmax.max(v); }
    println!("H(t_mid, s): range [{hmin:.10}, {hmax:.10}]");
    // H variation along t: second difference
    let ht = surf.t_grid.h();
    let mut worst: f64 = 0.0; let mut at = 0;
    for it in 3..nt-3 {
        let d2 = (sd.h[(it+1)*ns+ns/2] - 2.0*sd.h[it*ns+ns/2] + sd.h[(it-1)*ns+ns/2])/(ht*ht);
        let want = 2.0/grid.value(it).powi(3);
        if (d2-want).abs() > worst { worst = (d2-want).abs(); at = it; }
    }
    println!("worst |H_tt - k''| = {worst:.4e} at it={at}");
}
