//! Walls for a type inside a degree window, and where a parameter sits.

use quiver_moduli::stability::{
    classify_parameter, enumerate_walls, potential_destabilizers, ParameterClass,
};
use quiver_moduli::{DegreeWindow, StabilityParameter, TypeVector};

pub fn run_example() -> quiver_moduli::Result<()> {
    let t = TypeVector::from_pairs(&[(1, 0), (2, 3), (1, 1)])?;
    let window = DegreeWindow::uniform(3, -1, 2);
    let set = enumerate_walls(&t, &window)?;
    let names = ["1".to_owned(), "2".to_owned(), "3".to_owned()];
    println!(
        "{} walls, {} degenerate",
        set.walls.len(),
        set.degenerate.len()
    );
    for w in set.walls.iter().take(5) {
        println!("  {} [witness {}]", w.equation(&names), w.witness_subtype);
    }

    for alpha in [
        StabilityParameter::from_ints(&[3, 1, 0]),
        StabilityParameter::from_ints(&[1, 0, 0]),
    ] {
        match classify_parameter(&alpha, &set.walls) {
            ParameterClass::ChamberInterior => println!("alpha {alpha}: chamber interior"),
            ParameterClass::OnWall(ws) => println!("alpha {alpha}: on {} wall(s)", ws.len()),
        }
        let d = potential_destabilizers(&t, &alpha, &window)?;
        println!(
            "  slope {}: {} numerically destabilizing subtypes, {} ties",
            d.slope,
            d.strict.len(),
            d.ties.len()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> quiver_moduli::Result<()> {
    run_example()
}
