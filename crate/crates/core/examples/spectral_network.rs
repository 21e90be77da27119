//! The local wall model at the nonsimple branch point and its splittings.
use toda_core::network::{standard_network, theta_scan, toda_splitting};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let model = standard_network(3)?;
    for (phase, roots) in model.multiwalls() {
        let labels: Vec<String> = roots.iter().map(|(i, j)| format!("{i}{j}")).collect();
        println!("{:>7.2} deg  {}", model.degrees(phase), labels.join(" "));
    }
    for n in 2..=5 {
        println!("N={n}");
        for (theta, s) in theta_scan(n)? {
            println!("  theta={theta:.4}  {}  sigma={:?}", s.fingerprint(), s.sigma);
        }
    }
    let s = toda_splitting(4, 0.1)?;
    println!("{}", serde_json::to_string(&s)?);
    Ok(())
}
