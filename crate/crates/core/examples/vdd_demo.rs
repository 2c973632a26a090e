//! The level set {h > t} of h = (x/z)^2 + (y/z)^2 on x + y < z, voxelized.
//! Pass a resolution and a threshold, e.g. `cargo run --example vdd_demo 64 3/4`.

use semimonotone::vdd::{demo_vdd, write_slices, Ratio};

fn main() -> semimonotone::Result<()> {
    let mut args = std::env::args().skip(1);
    let resolution: usize = args.next().map_or(Ok(32), |s| s.parse()).expect("resolution");
    let t: Ratio = args.next().as_deref().unwrap_or("3/4").parse()?;
    let demo = demo_vdd(resolution, t)?;
    println!(
        "resolution {resolution}, t = {t}: {} cells, {} components (expected {}), {} interior pieces, {}",
        demo.region.len(),
        demo.components,
        demo.expected_components,
        demo.open_components,
        demo.outcome
    );
    for r in &demo.reports {
        let w = r.witness.as_ref().map_or("none".to_string(), |w| w.to_string());
        println!("  {:<10} semi-monotone={} witness {w}", r.method, r.verdict);
    }
    let dir = std::env::temp_dir().join("vdd_slices");
    for p in write_slices(&demo, &dir)? {
        println!("wrote {}", p.display());
    }
    Ok(())
}
