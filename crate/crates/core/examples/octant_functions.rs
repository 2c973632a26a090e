//! Octant functions at every half-grid point around a shape.

use semimonotone::boolean::is_regular;
use semimonotone::semimonotone::octant_function;
use semimonotone::voxel::{half_grid_values, shapes, Half};

fn main() -> semimonotone::Result<()> {
    let u = shapes::u_pentomino();
    let bbox = u.bounding_box().expect("non-empty");
    let xs = half_grid_values(bbox[0].0, bbox[0].1);
    let ys = half_grid_values(bbox[1].0, bbox[1].1);
    println!("U pentomino: octant functions at points outside the set");
    for y in ys.iter().rev() {
        let row: Vec<String> = xs
            .iter()
            .map(|x| {
                let p: [Half; 2] = [*x, *y];
                if u.contains_point(&p) {
                    return "  U ".to_string();
                }
                let psi = octant_function(&u, &p).expect("point is outside");
                let bits: String = (0..4).map(|i| if psi.value(i) { '1' } else { '0' }).collect();
                let mark = if psi.is_constant() || !is_regular(&psi) {
                    '!'
                } else {
                    ' '
                };
                format!("{bits}{mark}")
            })
            .collect();
        println!("y={y:>4}  {}", row.join(" "));
    }
    println!("'!' marks a constant or non-regular octant function");
    Ok(())
}
