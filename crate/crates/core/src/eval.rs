use std::collections::HashMap;
use std::ops::{Deref, DerefMut};

use crate::game::{Arena, GameId};
use crate::strip::{Player, Position, Strip};

/// An [`Arena`] together with the memo of strip values computed in it.
#[derive(Default)]
pub struct Evaluator {
    arena: Arena,
    strip_values: HashMap<Strip, GameId>,
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn arena(&mut self) -> &mut Arena {
        &mut self.arena
    }

    /// Canonical value of a single strip.
    pub fn strip_value(&mut self, strip: &Strip) -> GameId {
        if let Some(&g) = self.strip_values.get(strip) {
            return g;
        }
        let left: Vec<GameId> = strip
            .options(Player::Left)
            .iter()
            .map(|s| self.strip_value(s))
            .collect();
        let right: Vec<GameId> = strip
            .options(Player::Right)
            .iter()
            .map(|s| self.strip_value(s))
            .collect();
        let g = self.arena.construct(left, right);
        self.strip_values.insert(strip.clone(), g);
        g
    }

    /// Canonical value of a disjunctive sum of strips.
    pub fn value(&mut self, position: &Position) -> GameId {
        let parts: Vec<GameId> = position
            .strips()
            .iter()
            .map(|s| self.strip_value(s))
            .collect();
        self.arena.sum(parts)
    }
}

impl Deref for Evaluator {
    type Target = Arena;

    fn deref(&self) -> &Arena {
        &self.arena
    }
}

impl DerefMut for Evaluator {
    fn deref_mut(&mut self) -> &mut Arena {
        &mut self.arena
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Outcome;

    fn value(ev: &mut Evaluator, text: &str) -> GameId {
        let p: Position = text.parse().unwrap();
        ev.value(&p)
    }

    #[test]
    fn table_values() {
        let mut ev = Evaluator::new();
        let bw = value(&mut ev, "bw");
        assert_eq!(bw, ev.star());
        let up = ev.up();
        assert_eq!(value(&mut ev, "bwwbw"), up);
        assert_eq!(value(&mut ev, "bww"), up);
        let (star, down) = (ev.star(), ev.down());
        let pm = ev.construct([star, up], [star, down]);
        assert_eq!(value(&mut ev, "bbww"), pm);
        assert_eq!(ev.format_value(pm, false), "{*,{0|*}|*,{*|0}}");
    }

    #[test]
    fn empty_position_is_zero() {
        let mut ev = Evaluator::new();
        assert_eq!(value(&mut ev, "0"), ev.zero());
        let g = value(&mut ev, "wwbb");
        assert_eq!(g, ev.zero());
        assert_eq!(ev.outcome(g), Outcome::P);
    }

    #[test]
    fn sum_of_stars() {
        let mut ev = Evaluator::new();
        let g = value(&mut ev, "bw+bw");
        assert_eq!(g, ev.zero());
        let g = value(&mut ev, "bww+bw");
        assert_eq!(ev.outcome(g), Outcome::N);
    }
}
