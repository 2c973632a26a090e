//! Homology of a voxel set, its closure and its frontier.

use semimonotone::cubical::{closure_complex, frontier_complex};
use semimonotone::semimonotone::{is_regular_cell_evidence, regular_cell_evidence};
use semimonotone::voxel::shapes;
use semimonotone::VoxelSet;

fn main() -> semimonotone::Result<()> {
    let mut ring = Vec::new();
    for x in 0..3 {
        for y in 0..3 {
            if (x, y) != (1, 1) {
                ring.push([x, y]);
            }
        }
    }
    let cases = [
        ("unit cube", shapes::unit_cell(3)),
        ("staircase", shapes::staircase()),
        ("diagonal pair", shapes::diagonal_pair()),
        ("annulus", VoxelSet::new(2, ring)?),
    ];
    for (name, u) in &cases {
        let ev = regular_cell_evidence(u)?;
        println!(
            "{name}: open [{}] closure [{}] frontier [{}] regular-cell evidence: {}",
            ev.0,
            closure_complex(u)?.betti_z2(true)?,
            frontier_complex(u)?.betti_z2(true)?,
            is_regular_cell_evidence(u.dim(), &ev)
        );
    }
    Ok(())
}
