//! Regular Boolean functions: counts per arity, an order-dependent
//! function, and quantifier words applied to a truth table.

use semimonotone::boolean::{all_functions, is_order_independent, is_regular, symmetry_orbit};
use semimonotone::{BooleanFunction, Quantifier, QuantifierWord};

fn main() -> semimonotone::Result<()> {
    for n in 1..=4 {
        let regular = all_functions(n).filter(is_regular).count();
        println!("n={n}: {regular} regular of {}", 1u64 << (1 << n));
    }

    // x1 xor x2 is not regular, and eliminating in different orders disagrees
    let xor = BooleanFunction::xor(2)?;
    let ea = QuantifierWord::new(vec![(Quantifier::Exists, 0), (Quantifier::Forall, 0)]);
    let ae = QuantifierWord::new(vec![(Quantifier::Forall, 1), (Quantifier::Exists, 0)]);
    println!(
        "xor: regular={} order_independent={} E1A2={} A2E1={}",
        is_regular(&xor),
        is_order_independent(&xor)?,
        ea.apply(&xor)?.value(0),
        ae.apply(&xor)?.value(0),
    );

    let and = BooleanFunction::and(3)?;
    let orbit = symmetry_orbit(&and)?;
    println!("and of 3: regular={} orbit size {}", is_regular(&and), orbit.len());
    println!("{}", and.exists_elim(2)?);
    Ok(())
}
