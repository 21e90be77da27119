//! Numerical wall trajectories of the Toda curve.
use num_complex::Complex64;
use toda_core::network::trace_trajectory;
use toda_core::network::trajectory::start_grid;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let phi = -std::f64::consts::FRAC_PI_2;
    let t = trace_trajectory(3, phi, Complex64::new(0.3, 0.4), 0.01, 10.0)?;
    println!("{} samples, ended by {:?}, branch residual {:.2e}", t.z.len(), t.termination, t.branch_residual());
    print!("{}", t.to_csv().lines().take(4).collect::<Vec<_>>().join("\n"));
    println!();

    for n in 2..=4 {
        let mut entering = 0;
        let mut conforming = 0;
        for z0 in start_grid(20, 2.0) {
            let Ok(t) = trace_trajectory(n, phi, z0, 0.01, 10.0) else { continue };
            if t.entry_index().is_some() {
                entering += 1;
                conforming += t.conforms(1e-9) as usize;
            }
        }
        println!("N={n}: {conforming}/{entering} entering trajectories shrink monotonically");
    }
    Ok(())
}
