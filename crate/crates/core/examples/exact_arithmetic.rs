//! Laurent polynomials with rational exponents and big-integer coefficients.
use num_bigint::BigInt;
use toda_core::exactalg::{exterior_trace, LaurentPoly, PolyMatrix, Ring};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Exponents live in (1/3)Z.
    let ring = Ring::indexed("y", 2, 3);
    let y1 = LaurentPoly::var(&ring, 0);
    let y2 = LaurentPoly::var(&ring, 1);
    let cube_root = LaurentPoly::monomial(&ring, vec![1, -2], BigInt::from(1));
    println!("y1^(1/3) y2^(-2/3) = {cube_root}");

    let sum = y1.add(&y2)?;
    let square = sum.mul(&sum)?;
    println!("(y1 + y2)^2 = {square}");
    println!("divided back = {}", square.exact_divide(&sum)?);
    println!("canonical JSON: {}", square.to_json());

    let m =
        PolyMatrix::from_rows(&ring, vec![vec![y1.clone(), y2.clone()], vec![LaurentPoly::one(&ring), y1.clone()]])?;
    println!("tr = {}", exterior_trace(&m, 1)?);
    println!("det = {}", exterior_trace(&m, 2)?);
    Ok(())
}
