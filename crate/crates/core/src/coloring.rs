use alloc::vec::Vec;
use core::fmt;

/// The three edge colors.
pub const COLORS: [u8; 3] = [1, 2, 3];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    /// A color outside `1..=3`.
    InvalidColor { position: usize, color: u8 },
    /// A coloring whose length does not match the frontier it is applied to.
    LengthMismatch { expected: usize, found: usize },
    /// A character in a digit string that is not `1`, `2` or `3`.
    InvalidDigit { position: usize, found: char },
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::InvalidColor { position, color } => {
                write!(f, "color {color} at frontier position {position} is not in 1..=3")
            }
            ColoringError::LengthMismatch { expected, found } => {
                write!(f, "coloring has length {found}, frontier has {expected} edges")
            }
            ColoringError::InvalidDigit { position, found } => {
                write!(f, "unexpected character {found:?} at position {position}, expected 1, 2 or 3")
            }
        }
    }
}

impl core::error::Error for ColoringError {}

/// An assignment of colors `1..=3` to the frontier edges of a pattern,
/// indexed by cyclic frontier position.
///
/// Ordering is lexicographic by position with `1 < 2 < 3`. For colorings of
/// equal length this agrees with the order of [`FrontierColoring::index`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FrontierColoring(Vec<u8>);

impl FrontierColoring {
    pub fn new(colors: Vec<u8>) -> Result<Self, ColoringError> {
        if let Some((position, &color)) = colors.iter().enumerate().find(|(_, c)| !(1..=3).contains(*c)) {
            return Err(ColoringError::InvalidColor { position, color });
        }
        Ok(FrontierColoring(colors))
    }

    /// Parses a digit string such as `"121"`.
    pub fn from_digits(digits: &str) -> Result<Self, ColoringError> {
        digits
            .chars()
            .enumerate()
            .map(|(position, ch)| match ch {
                '1' => Ok(1),
                '2' => Ok(2),
                '3' => Ok(3),
                found => Err(ColoringError::InvalidDigit { position, found }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(FrontierColoring)
    }

    /// Decodes a base-3 index; position 0 is the most significant digit.
    pub fn from_index(len: usize, mut index: u32) -> Self {
        let mut colors = alloc::vec![1u8; len];
        for slot in colors.iter_mut().rev() {
            *slot = (index % 3) as u8 + 1;
            index /= 3;
        }
        FrontierColoring(colors)
    }

    /// Base-3 index of the coloring, position 0 most significant, color `c`
    /// contributing digit `c - 1`.
    pub fn index(&self) -> u32 {
        self.0.iter().fold(0u32, |acc, &c| acc * 3 + u32::from(c - 1))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, position: usize) -> u8 {
        self.0[position]
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub(crate) fn set(&mut self, position: usize, color: u8) {
        debug_assert!((1..=3).contains(&color));
        self.0[position] = color;
    }

    /// Colors `σ ∘ γ ∘ π`: position `x` of the result is `sigma(self[image[x]])`.
    pub fn act(&self, sigma: ColorPermutation, image: &[usize]) -> FrontierColoring {
        FrontierColoring(image.iter().map(|&x| sigma.apply(self.0[x])).collect())
    }
}

impl fmt::Display for FrontierColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A bijection on `{1, 2, 3}`, stored as the images of `1`, `2` and `3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColorPermutation([u8; 3]);

impl ColorPermutation {
    pub const IDENTITY: ColorPermutation = ColorPermutation([1, 2, 3]);

    /// All six permutations, identity first.
    pub const ALL: [ColorPermutation; 6] = [
        ColorPermutation([1, 2, 3]),
        ColorPermutation([1, 3, 2]),
        ColorPermutation([2, 1, 3]),
        ColorPermutation([2, 3, 1]),
        ColorPermutation([3, 1, 2]),
        ColorPermutation([3, 2, 1]),
    ];

    /// Returns `None` unless `images` is a permutation of `[1, 2, 3]`.
    pub fn new(images: [u8; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &c in &images {
            if !(1..=3).contains(&c) || seen[usize::from(c - 1)] {
                return None;
            }
            seen[usize::from(c - 1)] = true;
        }
        Some(ColorPermutation(images))
    }

    #[inline]
    pub fn apply(self, color: u8) -> u8 {
        self.0[usize::from(color - 1)]
    }

    pub fn inverse(self) -> ColorPermutation {
        let mut out = [0u8; 3];
        for c in COLORS {
            out[usize::from(self.apply(c) - 1)] = c;
        }
        ColorPermutation(out)
    }

    /// `self ∘ other`.
    pub fn compose(self, other: ColorPermutation) -> ColorPermutation {
        ColorPermutation([self.apply(other.apply(1)), self.apply(other.apply(2)), self.apply(other.apply(3))])
    }
}

/// An unordered pair of distinct colors, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorPair {
    lo: u8,
    hi: u8,
}

impl ColorPair {
    /// The three pairs in iteration order `(1,2)`, `(1,3)`, `(2,3)`.
    pub const ALL: [ColorPair; 3] = [
        ColorPair { lo: 1, hi: 2 },
        ColorPair { lo: 1, hi: 3 },
        ColorPair { lo: 2, hi: 3 },
    ];

    pub fn new(a: u8, b: u8) -> Option<Self> {
        if a == b || !(1..=3).contains(&a) || !(1..=3).contains(&b) {
            return None;
        }
        Some(ColorPair { lo: a.min(b), hi: a.max(b) })
    }

    pub fn lo(self) -> u8 {
        self.lo
    }

    pub fn hi(self) -> u8 {
        self.hi
    }

    pub fn contains(self, color: u8) -> bool {
        color == self.lo || color == self.hi
    }

    /// Swaps `lo` and `hi`; other colors are returned unchanged.
    pub fn swap(self, color: u8) -> u8 {
        if color == self.lo {
            self.hi
        } else if color == self.hi {
            self.lo
        } else {
            color
        }
    }
}

impl fmt::Display for ColorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip_and_order() {
        let all: Vec<_> = (0..27).map(|i| FrontierColoring::from_index(3, i)).collect();
        for (i, c) in all.iter().enumerate() {
            assert_eq!(c.index(), i as u32);
        }
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0].as_slice(), &[1, 1, 1]);
        assert_eq!(all[26].as_slice(), &[3, 3, 3]);
    }

    #[test]
    fn rejects_bad_colors() {
        assert_eq!(
            FrontierColoring::new(alloc::vec![1, 4]),
            Err(ColoringError::InvalidColor { position: 1, color: 4 })
        );
        assert!(FrontierColoring::from_digits("120").is_err());
        assert_eq!(FrontierColoring::from_digits("312").unwrap().as_slice(), &[3, 1, 2]);
    }

    #[test]
    fn color_permutations_form_s3() {
        for a in ColorPermutation::ALL {
            assert_eq!(a.compose(a.inverse()), ColorPermutation::IDENTITY);
            for b in ColorPermutation::ALL {
                assert!(ColorPermutation::ALL.contains(&a.compose(b)));
            }
        }
        assert!(ColorPermutation::new([1, 1, 2]).is_none());
    }

    #[test]
    fn pair_display_is_ordered() {
        let p = ColorPair::new(3, 1).unwrap();
        assert_eq!(std::format!("{p}"), "(1,3)");
        assert_eq!(p.swap(1), 3);
        assert_eq!(p.swap(2), 2);
        assert!(ColorPair::new(2, 2).is_none());
    }
}
