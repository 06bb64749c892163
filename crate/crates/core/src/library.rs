//! The six built-in reducible patterns.
//!
//! Each pattern is drawn with its central path horizontal. Frontier indices
//! follow the outer face clockwise starting from the leftmost half-edge, so
//! the cyclic order is pinned independently of vertex numbering.
//!
//! ```text
//! P22      0 - 1                         frontier: [0, 1]
//! P232     0 - 1 - 2                     frontier: [0, 1, 2]
//!
//! P323     3   4   5      u' v' w'       frontier: [u, u', v', w', w]
//!          |   |   |                               [0, 3,  4,  5,  2]
//!          0 - 1 - 2      u  v  w        reflection u <-> w
//!
//! P23322       4   5      v' w'          frontier: [u', u, v', w', w]
//!              |   |                               [3,  0, 4,  5,  2]
//!      3 - 0 - 1 - 2      u' u v w       no symmetry
//!
//! P32332   4   5       6     v1 v2    v4 frontier: [u1, v1, v2, u3, v4, u4]
//!          |   |   ^   |                           [0,  4,  5,  2,  6,  3]
//!          0 - 1 - 2 - 3     u1 u2 u3 u4 u3's half-edge points up, beside v2 and v4
//!
//! P7       cycle 0..6 (u1..u7), u1 = 0 of degree 2,
//!          pendants 7 (v4, on u4 = 3) and 8 (v5, on u5 = 4)
//!          frontier: [u2, u3, v4, v5, u6, u7] = [1, 2, 7, 8, 5, 6]
//!          reflection u_i <-> u_{9-i}
//! ```
//!
//! In P23322 and P32332 the unlabelled half-edges leave the pattern along
//! the face under the path; every other half-edge points away from it.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::pattern::{Pattern, Symmetry};

pub const BUILTIN_NAMES: [&str; 6] = ["P22", "P232", "P323", "P23322", "P32332", "P7"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownPattern(pub String);

impl fmt::Display for UnknownPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown built-in pattern {:?}; available: {}", self.0, BUILTIN_NAMES.join(", "))
    }
}

impl core::error::Error for UnknownPattern {}

fn reversal(m: usize) -> Symmetry {
    Symmetry::from_images((0..m).rev().collect())
}

/// Looks up a built-in by name (case-insensitive).
pub fn builtin(name: &str) -> Result<Pattern, UnknownPattern> {
    let canonical = BUILTIN_NAMES
        .iter()
        .find(|n| n.eq_ignore_ascii_case(name))
        .ok_or_else(|| UnknownPattern(name.into()))?;
    let (vertices, edges, frontier, reflect): (usize, Vec<(usize, usize)>, Vec<usize>, bool) = match *canonical {
        "P22" => (2, vec![(0, 1)], vec![0, 1], true),
        "P232" => (3, vec![(0, 1), (1, 2)], vec![0, 1, 2], true),
        "P323" => (6, vec![(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)], vec![0, 3, 4, 5, 2], true),
        "P23322" => (6, vec![(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)], vec![3, 0, 4, 5, 2], false),
        "P32332" => (
            7,
            vec![(0, 1), (1, 2), (2, 3), (0, 4), (1, 5), (3, 6)],
            vec![0, 4, 5, 2, 6, 3],
            false,
        ),
        "P7" => (
            9,
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (3, 7), (4, 8)],
            vec![1, 2, 7, 8, 5, 6],
            true,
        ),
        _ => unreachable!("every catalog name has an entry"),
    };
    let m = frontier.len();
    let mut symmetries = vec![Symmetry::identity(m)];
    if reflect {
        symmetries.push(reversal(m));
    }
    Ok(Pattern::new(*canonical, vertices, edges, frontier, symmetries).expect("built-in patterns are valid"))
}

/// All built-ins in catalog order.
pub fn builtins() -> Vec<Pattern> {
    BUILTIN_NAMES.iter().map(|n| builtin(n).expect("catalog name")).collect()
}
