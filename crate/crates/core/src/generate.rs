//! Seeded random and exhaustive streams of voxel sets in a box.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::voxel::VoxelSet;

pub const MAX_GENERATE_DIM: usize = 4;
pub const MAX_BOX_CELLS: usize = 4096;
pub const MAX_EXHAUSTIVE_CELLS: usize = 20;

/// Lower corners of the cells of `{0..side-1}^dim`, first axis fastest.
pub fn box_cells(dim: usize, side: usize) -> Result<Vec<Vec<i32>>> {
    if dim == 0 || dim > MAX_GENERATE_DIM {
        return Err(Error::CapExceeded {
            what: "generator dimension",
            value: dim,
            cap: MAX_GENERATE_DIM,
        });
    }
    let total = side
        .checked_pow(dim as u32)
        .filter(|&t| t <= MAX_BOX_CELLS)
        .ok_or(Error::CapExceeded {
            what: "cells in box",
            value: side.saturating_pow(dim as u32),
            cap: MAX_BOX_CELLS,
        })?;
    Ok((0..total)
        .map(|mut i| {
            (0..dim)
                .map(|_| {
                    let c = (i % side) as i32;
                    i /= side;
                    c
                })
                .collect()
        })
        .collect())
}

/// Every subset of the box, indexed by bit masks over [`box_cells`].
pub fn exhaustive(dim: usize, side: usize) -> Result<impl Iterator<Item = VoxelSet>> {
    let cells = box_cells(dim, side)?;
    if cells.len() > MAX_EXHAUSTIVE_CELLS {
        return Err(Error::CapExceeded {
            what: "cells for exhaustive generation",
            value: cells.len(),
            cap: MAX_EXHAUSTIVE_CELLS,
        });
    }
    Ok((0u64..1 << cells.len()).map(move |mask| {
        let chosen = cells
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, c)| c);
        VoxelSet::new(dim, chosen).expect("box cells fit the dimension")
    }))
}

/// `count` sets, each cell of the box kept with probability `bias`; the
/// stream is a pure function of the arguments.
pub fn random(seed: u64, dim: usize, side: usize, count: usize, bias: f64) -> Result<Vec<VoxelSet>> {
    if !(0.0..=1.0).contains(&bias) {
        return Err(Error::InvalidArgument(format!("bias {bias} outside [0, 1]")));
    }
    let cells = box_cells(dim, side)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| {
            let chosen: Vec<&Vec<i32>> = cells.iter().filter(|_| rng.gen_bool(bias)).collect();
            VoxelSet::new(dim, chosen).expect("box cells fit the dimension")
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts() {
        assert_eq!(exhaustive(2, 3).unwrap().count(), 512);
        assert_eq!(exhaustive(3, 2).unwrap().count(), 256);
        assert!(exhaustive(3, 3).is_err());
    }

    #[test]
    fn seeded_streams_repeat() {
        let a = random(7, 3, 3, 20, 0.5).unwrap();
        let b = random(7, 3, 3, 20, 0.5).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random(8, 3, 3, 20, 0.5).unwrap());
        assert!(random(1, 2, 3, 1, 1.5).is_err());
        assert_eq!(random(1, 2, 3, 1, 1.0).unwrap()[0].len(), 9);
    }
}
