//! BIPASS strips: liveness normalisation, move generation and classifiers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::game::Outcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stone {
    Black,
    White,
}

impl Stone {
    pub fn flip(self) -> Stone {
        match self {
            Stone::Black => Stone::White,
            Stone::White => Stone::Black,
        }
    }

    fn as_char(self) -> char {
        match self {
            Stone::Black => 'b',
            Stone::White => 'w',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Player {
    Left,
    Right,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Left => Player::Right,
            Player::Right => Player::Left,
        }
    }

    /// The stone colour this player moves.
    pub fn stone(self) -> Stone {
        match self {
            Player::Left => Stone::Black,
            Player::Right => Stone::White,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Larva {
    BlackHeaded,
    WhiteHeaded,
    Both,
    Neither,
}

/// A strip in alive form: empty, or starting with a black stone and ending
/// with a white one. Construction always normalises.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Strip(Vec<Stone>);

impl Strip {
    pub fn empty() -> Strip {
        Strip(Vec::new())
    }

    /// Drops every black stone with no white stone to its right and every
    /// white stone with no black stone to its left.
    pub fn normalize(raw: &[Stone]) -> Strip {
        let first_black = raw.iter().position(|&s| s == Stone::Black);
        let last_white = raw.iter().rposition(|&s| s == Stone::White);
        let stones = match (first_black, last_white) {
            (Some(b), Some(w)) => raw
                .iter()
                .enumerate()
                .filter(|&(i, &s)| match s {
                    Stone::Black => i < w,
                    Stone::White => i > b,
                })
                .map(|(_, &s)| s)
                .collect(),
            _ => Vec::new(),
        };
        let strip = Strip(stones);
        debug_assert!(strip.is_alive());
        strip
    }

    pub fn from_stones(raw: &[Stone]) -> Strip {
        Strip::normalize(raw)
    }

    fn is_alive(&self) -> bool {
        self.0.is_empty() || (self.0[0] == Stone::Black && self.0[self.0.len() - 1] == Stone::White)
    }

    pub fn stones(&self) -> &[Stone] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, stone: Stone) -> usize {
        self.0.iter().filter(|&&s| s == stone).count()
    }

    pub fn blacks(&self) -> usize {
        self.count(Stone::Black)
    }

    pub fn whites(&self) -> usize {
        self.count(Stone::White)
    }

    /// Excess of white stones over black stones.
    pub fn delta(&self) -> i64 {
        self.whites() as i64 - self.blacks() as i64
    }

    /// All distinct strips reachable in one move by `player`.
    ///
    /// Left picks a black stone at `i` and a white stone at `j > i` with only
    /// white stones strictly between; the black lands on `j` and the jumped
    /// whites shift one step left. Right mirrors this with a white stone
    /// jumping leftwards over blacks.
    pub fn options(&self, player: Player) -> Vec<Strip> {
        let own = player.stone();
        let other = own.flip();
        let s = &self.0;
        let mut out: Vec<Strip> = Vec::new();
        for i in 0..s.len() {
            if s[i] != own {
                continue;
            }
            let targets: Vec<usize> = match player {
                Player::Left => (i + 1..s.len()).take_while(|&j| s[j] == other).collect(),
                Player::Right => (0..i).rev().take_while(|&j| s[j] == other).collect(),
            };
            for j in targets {
                let mut next = s.clone();
                let stone = next.remove(i);
                next.insert(j, stone);
                let strip = Strip::normalize(&next);
                if !out.contains(&strip) {
                    out.push(strip);
                }
            }
        }
        out.sort();
        out
    }

    /// Reverse the strip and swap colours.
    pub fn conjugate(&self) -> Strip {
        Strip(self.0.iter().rev().map(|s| s.flip()).collect())
    }

    /// The player can move the last of at least two own stones to the far end.
    pub fn has_unit_bypass(&self, player: Player) -> bool {
        self.count(player.stone()) >= 2
    }

    /// The option produced by the unit-bypass, if there is one.
    pub fn unit_bypass(&self, player: Player) -> Option<Strip> {
        if !self.has_unit_bypass(player) {
            return None;
        }
        let mut next = self.0.clone();
        match player {
            Player::Left => {
                let i = next.iter().rposition(|&s| s == Stone::Black)?;
                let stone = next.remove(i);
                next.push(stone);
            }
            Player::Right => {
                let i = next.iter().position(|&s| s == Stone::White)?;
                let stone = next.remove(i);
                next.insert(0, stone);
            }
        }
        Some(Strip::normalize(&next))
    }

    pub fn classify_larva(&self) -> Result<Larva> {
        if self.is_empty() {
            return Err(Error::EmptyStrip);
        }
        Ok(match (self.blacks() == 1, self.whites() == 1) {
            (true, true) => Larva::Both,
            (true, false) => Larva::BlackHeaded,
            (false, true) => Larva::WhiteHeaded,
            (false, false) => Larva::Neither,
        })
    }

    pub fn is_larva(&self) -> bool {
        !self.is_empty() && (self.blacks() == 1 || self.whites() == 1)
    }

    /// Outcome of a lone strip, read off from its length and excess.
    pub fn single_strip_outcome(&self) -> Outcome {
        match self.delta() {
            _ if self.is_empty() => Outcome::P,
            0 => Outcome::N,
            d if d > 0 => Outcome::L,
            _ => Outcome::R,
        }
    }

    /// The strip `b w^(n+k) b^n w`.
    pub fn family(n: usize, k: usize) -> Strip {
        let mut stones = vec![Stone::Black];
        stones.extend(std::iter::repeat_n(Stone::White, n + k));
        stones.extend(std::iter::repeat_n(Stone::Black, n));
        stones.push(Stone::White);
        Strip(stones)
    }

    /// The strip `b w^n b^(n+k) w`, conjugate of [`Strip::family`].
    pub fn mirror_family(n: usize, k: usize) -> Strip {
        Strip::family(n, k).conjugate()
    }

    /// `Some((n, k))` when the strip is literally `b w^(n+k) b^n w`.
    pub fn family_parameters(&self) -> Option<(usize, usize)> {
        let s = &self.0;
        if s.len() < 2 {
            return None;
        }
        let inner = &s[1..s.len() - 1];
        let whites = inner.iter().take_while(|&&x| x == Stone::White).count();
        let n = inner.len() - whites;
        if whites < n {
            return None;
        }
        let k = whites - n;
        (Strip::family(n, k) == *self).then_some((n, k))
    }
}

impl fmt::Display for Strip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Strip {
    type Err = Error;

    /// Case-insensitive `b`/`w` text; the result is normalised.
    fn from_str(text: &str) -> Result<Strip> {
        let mut raw = Vec::with_capacity(text.len());
        for (pos, c) in text.chars().enumerate() {
            match c {
                'b' | 'B' => raw.push(Stone::Black),
                'w' | 'W' => raw.push(Stone::White),
                _ => {
                    return Err(Error::Syntax {
                        pos,
                        msg: format!("unexpected character {c:?} in strip"),
                    })
                }
            }
        }
        Ok(Strip::normalize(&raw))
    }
}

pub fn parse_strip(text: &str) -> Result<Strip> {
    text.parse()
}

/// A disjunctive sum of nonempty strips, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Position(Vec<Strip>);

impl Position {
    pub fn new(strips: impl IntoIterator<Item = Strip>) -> Position {
        let mut v: Vec<Strip> = strips.into_iter().filter(|s| !s.is_empty()).collect();
        v.sort();
        Position(v)
    }

    pub fn strips(&self) -> &[Strip] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of strips in the sum.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn stones(&self) -> usize {
        self.0.iter().map(Strip::len).sum()
    }

    pub fn delta(&self) -> i64 {
        self.0.iter().map(Strip::delta).sum()
    }

    /// All positions reachable by one move of `player` in any component.
    pub fn options(&self, player: Player) -> Vec<Position> {
        let mut out: Vec<Position> = Vec::new();
        for (i, strip) in self.0.iter().enumerate() {
            if i > 0 && self.0[i - 1] == *strip {
                continue;
            }
            for opt in strip.options(player) {
                let mut strips = self.0.clone();
                strips[i] = opt;
                let p = Position::new(strips);
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    pub fn has_unit_bypass(&self, player: Player) -> bool {
        self.0.iter().any(|s| s.has_unit_bypass(player))
    }
}

impl From<Strip> for Position {
    fn from(s: Strip) -> Position {
        Position::new([s])
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for Position {
    type Err = Error;

    /// Strips joined by `+`; `0` is the empty position.
    fn from_str(text: &str) -> Result<Position> {
        if text == "0" {
            return Ok(Position::default());
        }
        let mut strips = Vec::new();
        let mut offset = 0;
        for part in text.split('+') {
            let strip = part.parse::<Strip>().map_err(|e| match e {
                Error::Syntax { pos, msg } => Error::Syntax {
                    pos: pos + offset,
                    msg,
                },
                other => other,
            })?;
            if part.is_empty() {
                return Err(Error::Syntax {
                    pos: offset,
                    msg: "empty strip in position".to_string(),
                });
            }
            strips.push(strip);
            offset += part.chars().count() + 1;
        }
        Ok(Position::new(strips))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Strip {
        text.parse().unwrap()
    }

    #[test]
    fn parse_and_normalize() {
        assert_eq!(s("bw").to_string(), "bw");
        assert_eq!(s("wbbbw").to_string(), "bbbw");
        assert_eq!(s("WBbbW").to_string(), "bbbw");
        assert!(s("wwbb").is_empty());
        assert!(s("wbbb").is_empty());
        assert!(matches!(
            "bxw".parse::<Strip>(),
            Err(Error::Syntax { pos: 1, .. })
        ));
    }

    #[test]
    fn options_of_example_strip() {
        let g = s("bwwwbw");
        let mut right: Vec<String> = g
            .options(Player::Right)
            .iter()
            .map(|x| x.to_string())
            .collect();
        right.sort();
        assert_eq!(right, ["bwwbw", "bwwww"]);
        let mut left: Vec<String> = g
            .options(Player::Left)
            .iter()
            .map(|x| x.to_string())
            .collect();
        left.sort();
        assert_eq!(left, ["bbw", "bwbw", "bwwbw", "bwwww"]);
        assert_eq!(s("bw").options(Player::Left), vec![Strip::empty()]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(s("bw").conjugate(), s("bw"));
        assert_eq!(s("bww").conjugate(), s("bbw"));
        assert_eq!(Strip::empty().conjugate(), Strip::empty());
    }

    #[test]
    fn deltas_and_bypass() {
        assert_eq!(s("bwww").delta(), 2);
        assert_eq!(s("bbww").delta(), 0);
        assert_eq!(s("bwwww").delta(), 3);
        assert!(s("bwbw").has_unit_bypass(Player::Left));
        assert_eq!(s("bwbw").unit_bypass(Player::Left), Some(s("bww")));
        assert!(!s("bww").has_unit_bypass(Player::Left));
        assert!(!s("bw").has_unit_bypass(Player::Left));
        assert!(!s("bw").has_unit_bypass(Player::Right));
        assert_eq!(s("bwwbw").unit_bypass(Player::Right), Some(s("bwbw")));
    }

    #[test]
    fn larvae() {
        assert_eq!(s("bwww").classify_larva().unwrap(), Larva::BlackHeaded);
        assert_eq!(s("bbbw").classify_larva().unwrap(), Larva::WhiteHeaded);
        assert_eq!(s("bbww").classify_larva().unwrap(), Larva::Neither);
        assert_eq!(s("bw").classify_larva().unwrap(), Larva::Both);
        assert_eq!(Strip::empty().classify_larva(), Err(Error::EmptyStrip));
    }

    #[test]
    fn single_strip_outcomes() {
        assert_eq!(Strip::empty().single_strip_outcome(), Outcome::P);
        assert_eq!(s("bwbw").single_strip_outcome(), Outcome::N);
        assert_eq!(s("bww").single_strip_outcome(), Outcome::L);
        assert_eq!(s("bbw").single_strip_outcome(), Outcome::R);
    }

    #[test]
    fn family_strips() {
        assert_eq!(Strip::family(0, 0), s("bw"));
        assert_eq!(Strip::family(1, 0), s("bwbw"));
        assert_eq!(Strip::family(0, 2), s("bwww"));
        assert_eq!(Strip::family(2, 1), s("bwwwbbw"));
        assert_eq!(s("bwwwbbw").family_parameters(), Some((2, 1)));
        assert_eq!(s("bbww").family_parameters(), None);
        assert_eq!(s("bw").family_parameters(), Some((0, 0)));
        assert_eq!(s("bwww").family_parameters(), Some((0, 2)));
        assert_eq!(s("bwbbw").family_parameters(), None);
        assert_eq!(Strip::mirror_family(1, 1), s("bwbbw"));
    }

    #[test]
    fn positions() {
        let p: Position = "bbww+bw".parse().unwrap();
        assert_eq!(p.to_string(), "bbww+bw");
        assert_eq!(p.len(), 2);
        assert_eq!(p.stones(), 6);
        let q: Position = "bw+bbww".parse().unwrap();
        assert_eq!(p, q);
        assert!("0".parse::<Position>().unwrap().is_empty());
        assert!("bw++bw".parse::<Position>().is_err());
        assert!(matches!(
            "bw+bx".parse::<Position>(),
            Err(Error::Syntax { pos: 4, .. })
        ));
        // options collapse duplicates from identical components
        let twins: Position = "bw+bw".parse().unwrap();
        assert_eq!(
            twins.options(Player::Left),
            vec!["bw".parse::<Position>().unwrap()]
        );
    }
}
