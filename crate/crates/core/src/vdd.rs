//! A voxelized definable family whose superlevel sets disconnect.
//!
//! On `X = {0 < x, 0 < y, 0 < z < 1, x + y < z}` let
//! `h(x, y, z) = (x/z)^2 + (y/z)^2`. In the coordinates `x/z, y/z` the
//! set `X` is the open triangle `u, v > 0, u + v < 1`, where `u^2 + v^2`
//! stays below `1/2` along the segment between the midpoints of the legs.
//! Hence `{h > t}` is connected for `t < 1/2` and splits into two
//! components near the corners `(1, 0)` and `(0, 1)` for `1/2 <= t < 1`.
//!
//! Both components are cones with apex at the origin, so near the apex
//! they are thinner than any grid cell. Cells sampled at their centers
//! there touch only along edges or corners, and the open interior of the
//! voxelized region falls apart into many pieces at every resolution. The
//! demo therefore counts components of the closed cells (joined through
//! shared faces of any dimension), and reports the interior count
//! alongside.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::cubical::closure_complex;
use crate::error::{Error, Result};
use crate::semimonotone::{check, CheckReport, Method};
use crate::voxel::VoxelSet;

pub const MIN_RESOLUTION: usize = 8;
pub const MAX_RESOLUTION: usize = 256;

/// A positive fraction `num / den` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Ratio {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den <= 0 {
            return Err(Error::InvalidArgument(format!("denominator {den} must be positive")));
        }
        let g = gcd(num, den).max(1);
        Ok(Ratio {
            num: num / g,
            den: den / g,
        })
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// `p/q` or a finite decimal such as `0.75`.
impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("not a rational number: {s:?}"));
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            return Ratio::new(
                p.trim().parse().map_err(|_| bad())?,
                q.trim().parse().map_err(|_| bad())?,
            );
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if frac.len() > 9 || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let den = 10i64.pow(frac.len() as u32);
        let int: i64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let frac: i64 = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| bad())?
        };
        Ratio::new(int * den + frac, den)
    }
}

/// Cells of the `resolution^3` grid on the unit cube whose centers lie in
/// `X ∩ {h > t}`, decided in exact integer arithmetic.
pub fn voxelize(resolution: usize, t: Ratio) -> Result<VoxelSet> {
    if resolution == 0 || resolution > MAX_RESOLUTION {
        return Err(Error::CapExceeded {
            what: "resolution",
            value: resolution,
            cap: MAX_RESOLUTION,
        });
    }
    let r = resolution as i64;
    let mut cells = Vec::new();
    for k in 0..r {
        let z = 2 * k + 1;
        for j in 0..r {
            let y = 2 * j + 1;
            for i in 0..r {
                let x = 2 * i + 1;
                if x + y < z && t.den * (x * x + y * y) > t.num * z * z {
                    cells.push([i as i32, j as i32, k as i32]);
                }
            }
        }
    }
    VoxelSet::new(3, cells)
}

/// Cells of the voxelized domain `X` alone.
pub fn voxelize_domain(resolution: usize) -> Result<VoxelSet> {
    voxelize(resolution, Ratio { num: -1, den: 1 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The component count matches the continuous picture.
    Confirmed,
    /// The grid is too coarse to say anything.
    Inconclusive,
    /// Enough resolution, but the count differs.
    Unexpected,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Confirmed => "confirmed",
            Outcome::Inconclusive => "inconclusive",
            Outcome::Unexpected => "unexpected",
        })
    }
}

#[derive(Clone, Debug)]
pub struct VddDemo {
    pub resolution: usize,
    pub t: Ratio,
    pub region: VoxelSet,
    /// Components of the union of the closed cells.
    pub components: usize,
    /// Components of the interior of that union.
    pub open_components: usize,
    pub expected_components: usize,
    pub outcome: Outcome,
    pub reports: Vec<CheckReport>,
}

/// Voxelizes `{h > t}` for `0 < t < 1`, counts its components and runs the
/// semi-monotonicity checkers on it.
pub fn demo_vdd(resolution: usize, t: Ratio) -> Result<VddDemo> {
    if t.num <= 0 || t.num >= t.den {
        return Err(Error::InvalidArgument(format!(
            "t = {t} must lie strictly between 0 and 1"
        )));
    }
    let region = voxelize(resolution, t)?;
    let components = if region.is_empty() {
        0
    } else {
        closure_complex(&region)?.connected_components()
    };
    let open_components = region.component_count();
    let expected_components = if 2 * t.num >= t.den { 2 } else { 1 };
    let outcome = if resolution < MIN_RESOLUTION || region.is_empty() {
        Outcome::Inconclusive
    } else if components == expected_components {
        Outcome::Confirmed
    } else {
        Outcome::Unexpected
    };
    let reports = Method::ALL.iter().map(|&m| check(&region, m)).collect::<Result<_>>()?;
    Ok(VddDemo {
        resolution,
        t,
        region,
        components,
        open_components,
        expected_components,
        outcome,
        reports,
    })
}

/// Plain (ASCII) PGM of one axis-aligned slice: 255 for the region, 96 for
/// the rest of the domain, 0 outside. `axis` is held at `index`; rows run
/// along the higher remaining axis, top row highest.
pub fn slice_pgm(region: &VoxelSet, domain: &VoxelSet, resolution: usize, axis: usize, index: i32) -> String {
    let (a, b) = match axis {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let r = resolution as i32;
    let mut out = format!("P2\n{r} {r}\n255\n");
    for row in (0..r).rev() {
        let line: Vec<String> = (0..r)
            .map(|col| {
                let mut c = [0i32; 3];
                c[axis] = index;
                c[a] = col;
                c[b] = row;
                if region.contains_cell(&c) {
                    "255"
                } else if domain.contains_cell(&c) {
                    "96"
                } else {
                    "0"
                }
                .to_string()
            })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Writes slices at `z = 1/4, 1/2, 3/4` and the mid slices in `x` and `y`.
pub fn write_slices(demo: &VddDemo, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let domain = voxelize_domain(demo.resolution)?;
    let r = demo.resolution as i32;
    let picks = [
        (2, r / 4, "z"),
        (2, r / 2, "z"),
        (2, 3 * r / 4, "z"),
        (0, r / 2, "x"),
        (1, r / 2, "y"),
    ];
    let mut paths = Vec::new();
    for (axis, index, name) in picks {
        let path = dir.join(format!("vdd_{name}{index:03}.pgm"));
        fs::write(&path, slice_pgm(&demo.region, &domain, demo.resolution, axis, index))?;
        paths.push(path);
    }
    Ok(paths)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_parsing() {
        assert_eq!("3/4".parse::<Ratio>().unwrap(), Ratio { num: 3, den: 4 });
        assert_eq!("0.75".parse::<Ratio>().unwrap(), Ratio { num: 3, den: 4 });
        assert_eq!("6/8".parse::<Ratio>().unwrap().to_string(), "3/4");
        assert!("3/0".parse::<Ratio>().is_err());
        assert!("x".parse::<Ratio>().is_err());
    }

    #[test]
    fn coarse_grid_is_inconclusive() {
        let d = demo_vdd(4, Ratio::new(3, 4).unwrap()).unwrap();
        assert!(d.region.is_empty());
        assert_eq!(d.outcome, Outcome::Inconclusive);
    }

    #[test]
    fn out_of_range_threshold() {
        assert!(demo_vdd(16, Ratio::new(1, 1).unwrap()).is_err());
        assert!(demo_vdd(16, Ratio::new(0, 1).unwrap()).is_err());
    }

    #[test]
    fn pgm_shape() {
        let region = voxelize(8, Ratio::new(1, 4).unwrap()).unwrap();
        let domain = voxelize_domain(8).unwrap();
        let img = slice_pgm(&region, &domain, 8, 2, 6);
        let lines: Vec<&str> = img.lines().collect();
        assert_eq!(&lines[..3], &["P2", "8 8", "255"]);
        assert_eq!(lines.len(), 3 + 8);
        assert!(img.contains("255 "));
    }
}
