//! Euler form and expected dimension for a few small quivers.

use quiver_moduli::euler::{euler_form, expected_dimension};
use quiver_moduli::{GenusContext, Quiver, TypeVector};

pub fn run_example() -> quiver_moduli::Result<()> {
    let a2 = Quiver::chain(2);
    let t = TypeVector::from_pairs(&[(1, 0), (1, 1)])?;
    for g in 0..3 {
        let g = GenusContext::new(g);
        let chi = euler_form(&a2, &t, &t, g)?.chi;
        println!(
            "A2 type {t} genus {}: chi = {chi}, expected dimension = {}",
            g.genus(),
            expected_dimension(&a2, &t, g)?
        );
    }

    let point = Quiver::from_indices(1, &[])?;
    let t = TypeVector::from_pairs(&[(2, 3)])?;
    let g = GenusContext::new(2);
    println!(
        "single vertex type {t} genus 2: expected dimension = {}",
        expected_dimension(&point, &t, g)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> quiver_moduli::Result<()> {
    run_example()
}
