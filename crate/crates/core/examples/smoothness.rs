//! Where the arrow gaps `α_t − α_h` clear the bound `2g − 2`.

use quiver_moduli::rational::ratio;
use quiver_moduli::stability::smoothness_region_check;
use quiver_moduli::{GenusContext, Quiver, StabilityParameter};

pub fn run_example() -> quiver_moduli::Result<()> {
    let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("l", "2", "2")])?;
    let g = GenusContext::new(2);
    for alpha in [
        StabilityParameter::new(vec![ratio(5, 2), ratio(0, 1)]),
        StabilityParameter::from_ints(&[4, 2]),
    ] {
        let r = smoothness_region_check(&q, &alpha, g);
        let gaps: Vec<String> = r
            .arrows
            .iter()
            .map(|a| format!("{}={}", a.arrow, a.gap))
            .collect();
        println!(
            "alpha {alpha}: smooth {} (gaps {}; bound {})",
            r.smooth,
            gaps.join(", "),
            r.bound
        );
    }

    let a2 = Quiver::chain(2);
    let r = smoothness_region_check(
        &a2,
        &StabilityParameter::from_ints(&[0, 2]),
        GenusContext::new(0),
    );
    println!(
        "A2 at the boundary: smooth {}, on boundary {}",
        r.smooth,
        r.on_boundary()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> quiver_moduli::Result<()> {
    run_example()
}
