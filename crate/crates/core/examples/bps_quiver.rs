//! BPS states of the Toda curve and their intersection quiver.
use toda_core::cluster::build_qn;
use toda_core::network::bps_spectrum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spectrum = bps_spectrum(4, 0.1)?;
    for b in &spectrum.basis {
        println!("{} = {}  -> vertex {}", b.name, b.class, b.vertex);
    }
    println!("{} positive states", spectrum.positive.len());
    print!("{}", spectrum.quiver.to_dot("bps"));
    for n in 2..=8 {
        println!("N={n}: quiver is Q_{} : {}", n - 1, bps_spectrum(n, 0.1)?.quiver == build_qn(n - 1)?);
    }
    Ok(())
}
