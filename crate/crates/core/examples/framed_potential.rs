//! Framed generating functions agree with cluster characters after the
//! Nakayama twist.
use toda_core::jacobian::{cluster_character, framed_generating_function};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=4 {
        for k in 1..=n {
            let f = framed_generating_function(n, k)?;
            let ok = f == cluster_character(n, n + 1 - k)?;
            println!("n={n} k={k}: {} terms, equals CC(M_{}): {ok}", f.len(), n + 1 - k);
        }
    }
    Ok(())
}
