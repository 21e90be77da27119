//! Local moves on annular graphs preserve the path generating functions.
use toda_core::annular::build_ni;
use toda_core::toda::TodaRing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 3;
    let g = build_ni(n)?;
    let base = TodaRing::new(n)?.base_weight();
    let sites = g.movable_sites();
    println!("movable sites: {sites:?}");
    for &(u, v) in &sites {
        let h = g.apply_move(u, v)?;
        let kept = (1..=n).all(|k| g.generating_function(k, &base).ok() == h.generating_function(k, &base).ok());
        println!("move ({u},{v}): normal form {:?}, generating functions kept: {kept}", h.normal_form());
    }
    Ok(())
}
