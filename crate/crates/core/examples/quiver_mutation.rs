//! Mutating Q_n together with its A- and X-seeds.
use toda_core::cluster::{build_qn, laurent_closure, SeedA, SeedX};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = build_qn(2)?;
    print!("{}", q.to_dot("Q2"));

    let mut a = SeedA::initial(&q);
    let mut x = SeedX::initial(&q);
    for k in [1, 3, 2] {
        a = a.mutate(k)?;
        x = x.mutate(k)?;
        println!("after mu_{k}: x{k} = {}", a.vars[k - 1]);
    }
    println!("X-seed: {}", x.to_json());

    let back = q.mutate(2)?.mutate(2)?;
    assert_eq!(back, q);
    println!("mu_2 mu_2 = id on Q2");

    let seeds = laurent_closure(&q, 4)?;
    println!("{seeds} seeds within depth 4, every cluster variable Laurent");
    Ok(())
}
