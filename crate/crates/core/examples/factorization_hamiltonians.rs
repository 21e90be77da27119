//! H_k as traces of exterior powers of the Coxeter factorization matrix.
use toda_core::toda::{factorization_matrix, hamiltonian_matrix, Coords, TodaRing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tr = TodaRing::new(1)?;
    let m = factorization_matrix(&tr)?;
    for i in 0..2 {
        let row: Vec<String> = (0..2).map(|j| m.get(i, j).to_string()).collect();
        println!("[ {} ]", row.join(" | "));
    }
    println!("n=1  H1 (y) = {}", hamiltonian_matrix(1, 1, Coords::Y)?);
    println!("n=1  H1 (x) = {}", hamiltonian_matrix(1, 1, Coords::X)?);
    for k in 1..=2 {
        println!("n=2  H{k} (x) = {}", hamiltonian_matrix(2, k, Coords::X)?);
    }
    for n in 1..=5 {
        let counts: Vec<usize> =
            (1..=n).map(|k| hamiltonian_matrix(n, k, Coords::X).map(|h| h.len())).collect::<Result<_, _>>()?;
        println!("n={n} term counts {counts:?}");
    }
    Ok(())
}
