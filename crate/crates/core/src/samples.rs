//! Small arrangements with known answers, used in tests, the CLI, and the
//! README.

use crate::arrangement::{Arrangement, Kind};
use crate::exactmath::{int, ints};

fn build(dim: usize, rows: &[(&[i64], i64)], kind: Kind) -> Arrangement {
    let equations = rows.iter().map(|(a, b)| (ints(a), int(*b))).collect();
    Arrangement::from_equations(dim, equations)
        .expect("sample arrangements are valid")
        .with_kind(kind)
}

/// Five hyperplanes in `R^3`:
/// `x1-x2=0, x1-x2=1, x2-x3=0, x1-x3=1, x1-x3=0`.
pub fn type_a_example() -> Arrangement {
    build(
        3,
        &[
            (&[1, -1, 0], 0),
            (&[1, -1, 0], 1),
            (&[0, 1, -1], 0),
            (&[1, 0, -1], 1),
            (&[1, 0, -1], 0),
        ],
        Kind::TypeA,
    )
}

/// Four hyperplanes in `R^2`: `x1=0, x1-x2=0, x2=0, x1+x2=1`.
pub fn type_b_example() -> Arrangement {
    build(
        2,
        &[(&[1, 0], 0), (&[1, -1], 0), (&[0, 1], 0), (&[1, 1], 1)],
        Kind::TypeB,
    )
}

/// Four lines in the plane: `x=0, y=0, x+y=1, y=1`. One bounded triangle,
/// two strips and six unbounded regions.
pub fn level_example() -> Arrangement {
    build(
        2,
        &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 1), (&[0, 1], 1)],
        Kind::General,
    )
}
