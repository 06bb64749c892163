//! Equivalence classes of frontier colorings modulo color permutations and
//! pattern symmetries. The representative of a class is its lexicographically
//! smallest member.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{ColorPermutation, ColoringError, FrontierColoring};
use crate::pattern::Pattern;

/// Lexicographically smallest coloring among all `σ ∘ γ ∘ π`.
pub fn canonical_representative(pattern: &Pattern, coloring: &FrontierColoring) -> Result<FrontierColoring, ColoringError> {
    check_len(pattern, coloring)?;
    Ok(minimize(pattern, coloring))
}

/// Sorted list of all class representatives.
pub fn enumerate_class_representatives(pattern: &Pattern) -> Vec<FrontierColoring> {
    ClassTable::new(pattern).representatives().to_vec()
}

fn check_len(pattern: &Pattern, coloring: &FrontierColoring) -> Result<(), ColoringError> {
    if coloring.len() != pattern.frontier_len() {
        return Err(ColoringError::LengthMismatch { expected: pattern.frontier_len(), found: coloring.len() });
    }
    Ok(())
}

fn minimize(pattern: &Pattern, coloring: &FrontierColoring) -> FrontierColoring {
    let mut best = coloring.clone();
    for sym in pattern.symmetries() {
        for sigma in ColorPermutation::ALL {
            let candidate = coloring.act(sigma, sym.image());
            if candidate < best {
                best = candidate;
            }
        }
    }
    best
}

/// Precomputed class structure of `{1,2,3}^frontier`.
///
/// Every coloring is addressed by its base-3 index; `class_of` maps it to a
/// position in the sorted representative list.
#[derive(Debug, Clone)]
pub struct ClassTable {
    frontier_len: usize,
    class_of: Vec<u32>,
    representatives: Vec<FrontierColoring>,
    orbit_sizes: Vec<usize>,
}

impl ClassTable {
    pub fn new(pattern: &Pattern) -> ClassTable {
        let m = pattern.frontier_len();
        let total = 3u32.pow(m as u32);
        let mut rep_index = vec![u32::MAX; total as usize];
        for idx in 0..total {
            if rep_index[idx as usize] != u32::MAX {
                continue;
            }
            // Smallest unvisited index is the smallest member of its orbit.
            let coloring = FrontierColoring::from_index(m, idx);
            for sym in pattern.symmetries() {
                for sigma in ColorPermutation::ALL {
                    rep_index[coloring.act(sigma, sym.image()).index() as usize] = idx;
                }
            }
        }

        let mut rep_ids: Vec<u32> = rep_index.iter().enumerate().filter(|&(i, &r)| i as u32 == r).map(|(_, &r)| r).collect();
        rep_ids.sort_unstable();
        let mut class_of = vec![0u32; total as usize];
        let mut orbit_sizes = vec![0usize; rep_ids.len()];
        for (idx, &r) in rep_index.iter().enumerate() {
            let class = rep_ids.binary_search(&r).expect("representative is its own image") as u32;
            class_of[idx] = class;
            orbit_sizes[class as usize] += 1;
        }
        ClassTable {
            frontier_len: m,
            class_of,
            representatives: rep_ids.into_iter().map(|r| FrontierColoring::from_index(m, r)).collect(),
            orbit_sizes,
        }
    }

    pub fn frontier_len(&self) -> usize {
        self.frontier_len
    }

    /// Number of colorings, `3^frontier_len`.
    pub fn coloring_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[FrontierColoring] {
        &self.representatives
    }

    pub fn orbit_sizes(&self) -> &[usize] {
        &self.orbit_sizes
    }

    /// Class id of a coloring of matching length.
    pub fn class_of(&self, coloring: &FrontierColoring) -> usize {
        debug_assert_eq!(coloring.len(), self.frontier_len);
        self.class_of[coloring.index() as usize] as usize
    }

    pub fn class_of_index(&self, index: u32) -> usize {
        self.class_of[index as usize] as usize
    }

    pub fn representative_of(&self, coloring: &FrontierColoring) -> &FrontierColoring {
        &self.representatives[self.class_of(coloring)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::builtin;
    use alloc::string::ToString;

    #[test]
    fn p22_reduces_constant_colorings() {
        let p = builtin("P22").unwrap();
        let rep = canonical_representative(&p, &FrontierColoring::from_digits("33").unwrap()).unwrap();
        assert_eq!(rep.to_string(), "11");
        assert_eq!(enumerate_class_representatives(&p).len(), 2);
    }

    #[test]
    fn length_mismatch() {
        let p = builtin("P22").unwrap();
        assert_eq!(
            canonical_representative(&p, &FrontierColoring::from_digits("123").unwrap()),
            Err(ColoringError::LengthMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn p232_classes() {
        let p = builtin("P232").unwrap();
        let table = ClassTable::new(&p);
        let reps: Vec<_> = table.representatives().iter().map(|r| r.to_string()).collect();
        assert_eq!(reps, ["111", "112", "121", "123"]);
        assert_eq!(table.orbit_sizes(), &[3, 12, 6, 6]);
    }

    #[test]
    fn table_agrees_with_direct_minimization() {
        for p in crate::library::builtins() {
            let table = ClassTable::new(&p);
            for idx in (0..table.coloring_count() as u32).step_by(7) {
                let c = FrontierColoring::from_index(p.frontier_len(), idx);
                assert_eq!(table.representative_of(&c), &canonical_representative(&p, &c).unwrap());
            }
        }
    }
}
