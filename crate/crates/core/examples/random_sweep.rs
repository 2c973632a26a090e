//! A seeded random sweep: generate 3D sets, run every cross-check suite.

use semimonotone::generate;
use semimonotone::verify::voxel_suites;

fn main() -> semimonotone::Result<()> {
    let seed = std::env::args().nth(1).map_or(7, |s| s.parse().expect("seed"));
    let mut sets = generate::random(seed, 3, 3, 300, 0.6)?;
    sets.extend(generate::exhaustive(2, 3)?);
    for s in voxel_suites(&sets) {
        println!("{s}");
        for f in &s.failures {
            println!("    {f}");
        }
    }
    Ok(())
}
