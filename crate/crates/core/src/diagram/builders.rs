//! Standard small tangles.

use super::{BoundaryCycle, Crossing, TangleDiagram};

/// The two crossingless ball tangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fundamental {
    /// Arcs NW-SW and NE-SE; invariant `[1, 0]`.
    One,
    /// Arcs NW-NE and SW-SE; invariant `[0, 1]`.
    Two,
}

impl Fundamental {
    pub fn index(self) -> u8 {
        match self {
            Fundamental::One => 1,
            Fundamental::Two => 2,
        }
    }
}

impl TryFrom<u8> for Fundamental {
    type Error = u8;

    fn try_from(j: u8) -> Result<Self, u8> {
        match j {
            1 => Ok(Fundamental::One),
            2 => Ok(Fundamental::Two),
            other => Err(other),
        }
    }
}

pub fn fundamental(j: Fundamental) -> TangleDiagram {
    let outer = match j {
        Fundamental::One => [0, 0, 1, 1],
        Fundamental::Two => [0, 1, 1, 0],
    };
    TangleDiagram::new(BoundaryCycle(outer), vec![], vec![], 0).expect("valid builder")
}

/// `|p|` half twists in a horizontal row; invariant `[p, 1]`.
///
/// Crossing `i` sits between the vertical lines `i` and `i + 1` of the row,
/// with `top_i`/`bot_i` the arcs on its left and `top_{i+1}`/`bot_{i+1}` on
/// its right. `twist(0)` is `fundamental(Two)`.
pub fn twist(p: i64) -> TangleDiagram {
    let k = p.unsigned_abs() as u32;
    let top = |i: u32| 2 * i;
    let bot = |i: u32| 2 * i + 1;
    let crossings = (0..k)
        .map(|i| {
            let (nw, sw, se, ne) = (top(i), bot(i), bot(i + 1), top(i + 1));
            if p > 0 {
                Crossing([nw, sw, se, ne])
            } else {
                Crossing([sw, se, ne, nw])
            }
        })
        .collect();
    let outer = BoundaryCycle([top(0), bot(0), bot(k), top(k)]);
    TangleDiagram::new(outer, vec![], crossings, 0).expect("valid builder")
}

/// A single crossing, `twist(1)`; invariant `[1, 1]`.
pub fn crossing() -> TangleDiagram {
    twist(1)
}

/// The spherical tangle with four radial arcs; invariant the identity.
pub fn identity_spherical() -> TangleDiagram {
    TangleDiagram::new(
        BoundaryCycle([0, 1, 2, 3]),
        vec![BoundaryCycle([0, 1, 2, 3])],
        vec![],
        0,
    )
    .expect("valid builder")
}
