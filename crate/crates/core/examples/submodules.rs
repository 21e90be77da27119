//! Submodules of M_i over the Jacobian algebra, from the coefficient quiver
//! and from concrete matrices at several values of lambda.
use toda_core::annular::mtuple_oracle;
use toda_core::jacobian::{build_coefficient_quiver, build_module_matrices, enumerate_submodules, Lambda};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (n, i) = (3, 2);
    let g = build_coefficient_quiver(n, i)?;
    let subs = enumerate_submodules(&g);
    println!(
        "M_{i} for n={n}: dimension {}, {} submodules, {} m-tuples",
        g.vertices.len(),
        subs.len(),
        mtuple_oracle(n, i).len()
    );
    for l in Lambda::samples() {
        let m = build_module_matrices(n, i, l)?;
        println!(
            "lambda={l}: relations hold {}, {} submodule dimension vectors",
            m.relations_hold(),
            m.submodule_dimension_vectors().len()
        );
    }
    let (n, i) = (5, 3);
    let g = build_coefficient_quiver(n, i)?;
    println!("M_{i} for n={n}: dimension {}, {} submodules", g.vertices.len(), enumerate_submodules(&g).len());
    Ok(())
}
