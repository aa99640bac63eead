//! The genus-0 Čech oracle on a hand-built bundle, checked against the Euler form.

use quiver_moduli::euler::euler_form;
use quiver_moduli::p1::{
    hom_intertwiners, hypercoh_profile, serre_dual_pa, HomogPoly, PolyMatrix, QuiverBundleP1,
};
use quiver_moduli::rational::int;
use quiver_moduli::{GenusContext, Quiver};

pub fn run_example() -> quiver_moduli::Result<()> {
    // O ⊕ O -> O(1) ⊕ O(1) on A2, with linear entries.
    let lin = |a: i64, b: i64| HomogPoly::new(1, vec![int(a), int(b)]).expect("two coefficients");
    let phi = PolyMatrix::from_rows(
        vec![vec![lin(1, 0), lin(0, 1)], vec![lin(0, 1), lin(1, 1)]],
        2,
    );
    let e = QuiverBundleP1::new(Quiver::chain(2), vec![vec![0, 0], vec![1, 1]], vec![phi])?;

    let p = hypercoh_profile(&e, &e)?;
    let rr = euler_form(
        e.quiver(),
        &e.type_vector(),
        &e.type_vector(),
        GenusContext::new(0),
    )?;
    println!("H = {:?}, chi = {} (Euler form {})", p.h(), p.chi, rr.chi);
    println!(
        "alternating sum of the six-term sequence: {}",
        p.alternating_sum()
    );
    println!(
        "dim Hom by point evaluation: {}",
        hom_intertwiners(&e, &e)?.dim
    );
    let d = serre_dual_pa(&e, &e, 0)?;
    println!(
        "arrow 0: dim ker P = {}, dim coker d1 = {}",
        d.kernel_pa, d.coker_d1
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> quiver_moduli::Result<()> {
    run_example()
}
