//! Exact rank-one stability and the split destabilizer search.

use quiver_moduli::p1::{
    rank_one_stability, split_destabilizer_search, HomogPoly, PolyMatrix, QuiverBundleP1,
};
use quiver_moduli::rational::int;
use quiver_moduli::{Quiver, StabilityParameter};

pub fn run_example() -> quiver_moduli::Result<()> {
    // O -> O(1) by x0 on A2.
    let e = QuiverBundleP1::new(
        Quiver::chain(2),
        vec![vec![0], vec![1]],
        vec![PolyMatrix::from_rows(
            vec![vec![
                HomogPoly::new(1, vec![int(1), int(0)]).expect("two coefficients")
            ]],
            1,
        )],
    )?;
    for w in [0, 1, 2] {
        let alpha = StabilityParameter::from_ints(&[w, 0]);
        let v = rank_one_stability(&e, &alpha)?;
        let witness = v
            .witness
            .map(|s| format!("{:?} slope {}", s.vertices, s.slope))
            .unwrap_or_default();
        println!(
            "alpha {alpha}: {:?} (slope {}) {witness}",
            v.stability, v.slope
        );
    }

    // Rank two: the search can only find split subobjects.
    let e = QuiverBundleP1::with_zero_maps(Quiver::chain(2), vec![vec![2, 0], vec![1]])?;
    let alpha = StabilityParameter::from_ints(&[1, 0]);
    match split_destabilizer_search(&e, &alpha)? {
        Some(w) => println!("split destabilizer of slope {}", w.slope),
        None => println!("no split destabilizer"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> quiver_moduli::Result<()> {
    run_example()
}
