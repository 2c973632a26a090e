//! Acyclic subcomplexes of small simplices and the six-vertex exception.

use semimonotone::simplicial::{build_counterexample_5, monotone_count, verify_acyclic_link};

fn main() -> semimonotone::Result<()> {
    for n in 1..=4 {
        let r = verify_acyclic_link(n)?;
        println!(
            "simplex of dim {n}: {} subcomplexes (expected {}), {} acyclic, {} without an acyclic vertex link",
            r.families,
            r.expected_families,
            r.acyclic,
            r.violations.len()
        );
    }
    println!(
        "monotone functions of 0..=5 variables: {:?}",
        (0..=5).map(monotone_count).collect::<Vec<_>>()
    );

    let x = build_counterexample_5();
    println!("six-vertex complex {x}: acyclic={}", x.is_acyclic());
    for v in x.vertices() {
        let l = x.link(v)?;
        println!(
            "  link({v}) = {l}  betti [{}]  girth {:?}",
            l.betti_z2(true)?,
            l.girth()
        );
    }
    Ok(())
}
