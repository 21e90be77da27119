//! Nonabelianized holonomy around the unit circle equals H_k.
use toda_core::network::{crossing_sequence, holonomy_trace_for, lift_path, theta_scan};
use toda_core::toda::{hamiltonian_matrix, Coords};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (_, s) = theta_scan(3)?.remove(0);
    let seq = crossing_sequence(&s)?;
    println!("N=3 {}: {} wall crossings", s.fingerprint(), seq.wall_count());
    let m = lift_path(&s)?;
    println!("lifted transport is {}x{}", m.size(), m.size());
    for n in 2..=5 {
        for (theta, s) in theta_scan(n)? {
            let ok = (1..n).all(|k| holonomy_trace_for(&s, k).ok() == hamiltonian_matrix(n - 1, k, Coords::X).ok());
            println!("N={n} theta={theta:.3} {}: traces = H_k: {ok}", s.fingerprint());
        }
    }
    Ok(())
}
