//! Cube unions of Boolean functions: ball recognition and shelling orders.

use semimonotone::boolean::{cube_union, is_regular};
use semimonotone::cubical::{find_shelling, is_pl_ball, pinch_faces};
use semimonotone::BooleanFunction;

fn show(name: &str, psi: &BooleanFunction) -> semimonotone::Result<()> {
    let c = cube_union(psi);
    let ball = !c.is_empty() && is_pl_ball(&c)?;
    println!("{name}: regular={} ball={ball}", is_regular(psi));
    if c.is_empty() {
        return Ok(());
    }
    for f in pinch_faces(&c)? {
        println!("  pinch at {f}");
    }
    match find_shelling(&c)? {
        Some(order) => {
            let names: Vec<String> = order.iter().map(|f| f.to_string()).collect();
            println!("  shelling: {}", names.join(" | "));
        }
        None => println!("  no shelling"),
    }
    Ok(())
}

fn main() -> semimonotone::Result<()> {
    show("or of 2", &BooleanFunction::or(2)?)?;
    show("xor of 2", &BooleanFunction::xor(2)?)?;
    show("and of 3", &BooleanFunction::and(3)?)?;
    // three corners of the 3-cube with no two adjacent
    show(
        "three corners",
        &BooleanFunction::indicator(3, &[&[0, 0, 0], &[1, 1, 0], &[0, 1, 1]])?,
    )?;
    Ok(())
}
