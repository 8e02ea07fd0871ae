use biminimal_core::curves::*;
use biminimal_core::grid::GridSpec;

fn main() {
    let grid = GridSpec::new(1.0, 3.0, 2001).unwrap();
    let kf = move |s: f64| 1.0 / s;
    let gamma = reconstruct_space_curve(&kf, &kf, &grid, &FrameInit::standard()).unwrap();
    let fr = frenet(&gamma).unwrap();
    let k1 = fr.k1();
    let k2 = fr.k2().unwrap();
    let mut worst: f64 = 0.0;
    let mut masked = 0;
    for i in 2..grid.n-2 {
        if fr.degeneracy_mask[i] { masked += 1; continue; }
        worst = worst.max((k1[i] - k2[i]).abs());
    }
    println!("masked={masked} worst |k1-k2| = {worst:.3e}");
    for i in [2, 3, 500, 1000, 1998] {
        println!("i={i} k={:.8} tau={:.8} want={:.8}", k1[i], k2[i], 1.0/grid.value(i));
    }
}
