//! Batch evaluation of Nielsen reports over fixture grids.
//!
//! Cells are independent pure computations, so with the `parallel` feature
//! (on by default) [`evaluate`] fans out over rayon; results keep the input
//! order either way. [`evaluate_sequential`] is always available for
//! comparison and as the fallback.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Error;
use crate::maps::{self, MapClass, MapDescriptor};
use crate::nielsen::{self, NielsenReport};

/// The two explicit descriptor families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixtureFamily {
    /// alpha -> (b2^{-1} a2 b2 a2) a1^x sigma, beta -> (b2^{-1} a2 b2 a2)^l a1^y b1^z.
    B0Even,
    /// alpha -> a2^{-1} a1^{x+1} sigma, beta -> a2^{-1} a1^y b1^z.
    B0Odd,
}

impl FixtureFamily {
    pub fn label(self) -> &'static str {
        match self {
            FixtureFamily::B0Even => "b0-even",
            FixtureFamily::B0Odd => "b0-odd",
        }
    }
}

/// One grid point of a fixture family. `l` is unused by the odd family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SweepCell {
    pub family: FixtureFamily,
    pub x: i64,
    pub y: i64,
    pub z: i64,
    pub l: Option<i64>,
}

impl SweepCell {
    pub fn descriptor(&self) -> Result<MapDescriptor, Error> {
        match self.family {
            FixtureFamily::B0Even => {
                maps::fixture_b0_even(self.x, self.y, self.z, self.l.unwrap_or(0))
            }
            FixtureFamily::B0Odd => maps::fixture_b0_odd(self.x, self.y, self.z),
        }
    }
}

/// The evaluated report for one cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub cell: SweepCell,
    pub class: MapClass,
    pub n_formula: u64,
    pub n_coincidence: u64,
    pub agree: bool,
    pub zero: bool,
}

/// Cells of one family over the given parameter ranges, in grid order.
/// Every z must be odd.
pub fn grid(
    family: FixtureFamily,
    xs: &[i64],
    ys: &[i64],
    zs: &[i64],
    ls: &[i64],
) -> Result<Vec<SweepCell>, Error> {
    if zs.iter().any(|z| z % 2 == 0) {
        return Err(Error::BadParity);
    }
    let mut cells = Vec::new();
    for &x in xs {
        for &y in ys {
            for &z in zs {
                match family {
                    FixtureFamily::B0Even => {
                        for &l in ls {
                            cells.push(SweepCell { family, x, y, z, l: Some(l) });
                        }
                    }
                    FixtureFamily::B0Odd => {
                        cells.push(SweepCell { family, x, y, z, l: None });
                    }
                }
            }
        }
    }
    Ok(cells)
}

fn evaluate_cell(cell: &SweepCell) -> Result<SweepRow, Error> {
    let descriptor = cell.descriptor()?;
    let NielsenReport { class, n_formula, n_coincidence, agree, zero, .. } =
        nielsen::analyze(&descriptor)?;
    Ok(SweepRow { cell: *cell, class, n_formula, n_coincidence, agree, zero })
}

/// Evaluate all cells, in parallel when the `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn evaluate(cells: &[SweepCell]) -> Result<Vec<SweepRow>, Error> {
    cells.par_iter().map(evaluate_cell).collect()
}

/// Evaluate all cells (sequential build).
#[cfg(not(feature = "parallel"))]
pub fn evaluate(cells: &[SweepCell]) -> Result<Vec<SweepRow>, Error> {
    evaluate_sequential(cells)
}

/// Evaluate all cells one by one, in input order.
pub fn evaluate_sequential(cells: &[SweepCell]) -> Result<Vec<SweepRow>, Error> {
    cells.iter().map(evaluate_cell).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranges() -> (Vec<i64>, Vec<i64>, Vec<i64>, Vec<i64>) {
        (
            (-2..=2).collect(),
            (-2..=2).collect(),
            vec![-3, -1, 1, 3],
            (-2..=2).collect(),
        )
    }

    #[test]
    fn grid_shapes() {
        let (xs, ys, zs, ls) = ranges();
        let even = grid(FixtureFamily::B0Even, &xs, &ys, &zs, &ls).unwrap();
        assert_eq!(even.len(), 5 * 5 * 4 * 5);
        let odd = grid(FixtureFamily::B0Odd, &xs, &ys, &zs, &ls).unwrap();
        assert_eq!(odd.len(), 5 * 5 * 4);
        assert_eq!(
            grid(FixtureFamily::B0Even, &xs, &ys, &[2], &ls),
            Err(Error::BadParity)
        );
    }

    #[test]
    fn all_rows_agree_and_match_sequential() {
        let (xs, ys, zs, ls) = ranges();
        let mut cells = grid(FixtureFamily::B0Even, &xs, &ys, &zs, &ls).unwrap();
        cells.extend(grid(FixtureFamily::B0Odd, &xs, &ys, &zs, &ls).unwrap());

        let rows = evaluate(&cells).unwrap();
        assert_eq!(rows, evaluate_sequential(&cells).unwrap());
        assert_eq!(rows.len(), cells.len());
        for row in &rows {
            assert!(row.agree, "cell {:?}", row.cell);
            assert_eq!(row.class, MapClass::TypeB0);
            assert_eq!(row.zero, row.n_formula == 0);
        }
        // rows come back in grid order
        for (row, cell) in rows.iter().zip(&cells) {
            assert_eq!(&row.cell, cell);
        }
    }
}
