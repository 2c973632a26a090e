//! Running the four semi-monotonicity checkers on a few shapes, and
//! replaying the witness of each failure.

use semimonotone::semimonotone::check;
use semimonotone::voxel::shapes;
use semimonotone::{Method, VoxelSet};

fn main() -> semimonotone::Result<()> {
    let shapes: [(&str, VoxelSet); 4] = [
        ("L tromino", shapes::l_tromino()),
        ("U pentomino", shapes::u_pentomino()),
        ("diagonal pair", shapes::diagonal_pair()),
        ("staircase", shapes::staircase()),
    ];
    for (name, u) in &shapes {
        println!("{name} ({} cells)", u.len());
        for m in Method::ALL {
            let r = check(u, m)?;
            match &r.witness {
                None => println!("  {m:<10} semi-monotone"),
                Some(w) => println!("  {m:<10} fails: {w} (replays: {})", w.replay(u)?),
            }
        }
    }

    let text = "dim 2\n# a plus sign\n1 0\n0 1\n1 1\n2 1\n1 2\n";
    let plus: VoxelSet = text.parse()?;
    println!("plus sign: {}", check(&plus, Method::Octant)?.verdict);
    Ok(())
}
