//! H_k as a sum over nonintersecting closed paths on the annular graph.
use toda_core::annular::{build_ni, hamiltonian_paths, mtuple_oracle};
use toda_core::toda::{hamiltonian_matrix, Coords, TodaRing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 3;
    let g = build_ni(n)?;
    let paths = g.enumerate_closed_paths()?;
    println!("N_i for n={n}: {} rows, {} verticals, {} closed paths", g.rows(), g.verticals().len(), paths.len());

    let tr = TodaRing::new(n)?;
    for k in 1..=n {
        let h = hamiltonian_paths(n, k)?;
        let same = tr.to_x(&h)? == hamiltonian_matrix(n, k, Coords::X)?;
        println!("k={k}: {} tuples, {} m-tuples, matches factorization: {same}", h.len(), mtuple_oracle(n, k).len());
    }
    print!("{}", build_ni(2)?.to_dot("N_i"));
    Ok(())
}
