//! Cluster characters of M_i reproduce the Hamiltonians H_i.
use toda_core::jacobian::cluster_character;
use toda_core::toda::{hamiltonian_matrix, Coords};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("CC(M_1), n=1: {}", cluster_character(1, 1)?);
    for n in 1..=5 {
        for i in 1..=n {
            let ok = cluster_character(n, i)? == hamiltonian_matrix(n, i, Coords::X)?;
            println!("n={n} i={i}: CC(M_i) = H_i: {ok}");
        }
    }
    Ok(())
}
