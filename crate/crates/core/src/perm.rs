//! The symmetric group on the three movable boundary positions, presented as
//! `⟨a, b | a² = b² = (ab)³ = id⟩`.
//!
//! Positions are numbered 1 (upper left), 2 (lower left), 3 (lower right);
//! position 4 (upper right) is always fixed. `a` swaps the two lower
//! positions and `b` swaps the two left positions. Words are read left to
//! right as the order in which the swaps are met going inwards, so `ab`
//! means "swap 2,3 then swap 1,2".

use std::fmt;
use std::ops::Mul;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Perm3 {
    Id,
    A,
    B,
    AB,
    BA,
    ABA,
}

impl Perm3 {
    pub const ALL: [Perm3; 6] = [Perm3::Id, Perm3::A, Perm3::B, Perm3::AB, Perm3::BA, Perm3::ABA];

    /// Where positions 1, 2, 3 end up after the swaps of the word.
    pub const fn images(self) -> [u8; 3] {
        match self {
            Perm3::Id => [1, 2, 3],
            Perm3::A => [1, 3, 2],
            Perm3::B => [2, 1, 3],
            // 1 -a-> 1 -b-> 2, 2 -a-> 3 -b-> 3, 3 -a-> 2 -b-> 1
            Perm3::AB => [2, 3, 1],
            Perm3::BA => [3, 1, 2],
            Perm3::ABA => [3, 2, 1],
        }
    }

    fn from_images(images: [u8; 3]) -> Perm3 {
        Perm3::ALL
            .into_iter()
            .find(|p| p.images() == images)
            .expect("every bijection of three points is one of the six elements")
    }

    /// Image of a position in `1..=4`.
    pub fn apply(self, position: u8) -> u8 {
        match position {
            1..=3 => self.images()[usize::from(position - 1)],
            4 => 4,
            _ => panic!("boundary position {position} out of range"),
        }
    }

    /// Position that `apply` sends to `position`.
    pub fn preimage(self, position: u8) -> u8 {
        self.inverse().apply(position)
    }

    pub fn inverse(self) -> Perm3 {
        let img = self.images();
        let mut inv = [0u8; 3];
        for (i, &j) in img.iter().enumerate() {
            inv[usize::from(j - 1)] = i as u8 + 1;
        }
        Perm3::from_images(inv)
    }

    /// Word concatenation: `self` first, then `next`.
    pub fn then(self, next: Perm3) -> Perm3 {
        let a = self.images();
        let b = next.images();
        Perm3::from_images([
            b[usize::from(a[0] - 1)],
            b[usize::from(a[1] - 1)],
            b[usize::from(a[2] - 1)],
        ])
    }

    /// Reduces a word over `{a, b}`; `1`, `e` and `id` stand for the identity.
    pub fn from_word(word: &str) -> Option<Perm3> {
        let w = word.trim();
        if w == "id" || w == "1" || w == "e" || w.is_empty() {
            return Some(Perm3::Id);
        }
        w.chars().try_fold(Perm3::Id, |acc, ch| match ch {
            'a' => Some(acc.then(Perm3::A)),
            'b' => Some(acc.then(Perm3::B)),
            _ => None,
        })
    }

    pub fn word(self) -> &'static str {
        match self {
            Perm3::Id => "id",
            Perm3::A => "a",
            Perm3::B => "b",
            Perm3::AB => "ab",
            Perm3::BA => "ba",
            Perm3::ABA => "aba",
        }
    }
}

impl Mul for Perm3 {
    type Output = Perm3;

    fn mul(self, rhs: Perm3) -> Perm3 {
        self.then(rhs)
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.word())
    }
}
