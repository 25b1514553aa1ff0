use std::collections::HashMap;

use crate::game::Outcome;
use crate::strip::{Player, Position};

use super::enumerate::enumerate_positions;
use super::Report;

/// Who wins when the player to move has no move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// The player unable to move loses.
    Normal,
    /// The player unable to move wins.
    Misere,
}

/// Memoised win search on literal positions, with no value theory.
pub struct LiteralSolver {
    convention: Convention,
    memo: HashMap<Position, (bool, bool)>,
}

impl LiteralSolver {
    pub fn new(convention: Convention) -> Self {
        LiteralSolver {
            convention,
            memo: HashMap::new(),
        }
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Win flags `(left moving first, right moving first)`.
    fn wins(&mut self, p: &Position) -> (bool, bool) {
        if let Some(&w) = self.memo.get(p) {
            return w;
        }
        let stuck = self.convention == Convention::Misere;
        let left = self.mover_wins(p, Player::Left, stuck);
        let right = self.mover_wins(p, Player::Right, stuck);
        self.memo.insert(p.clone(), (left, right));
        (left, right)
    }

    fn mover_wins(&mut self, p: &Position, player: Player, stuck: bool) -> bool {
        let options = p.options(player);
        if options.is_empty() {
            return stuck;
        }
        options.iter().any(|q| {
            let (l, r) = self.wins(q);
            match player {
                Player::Left => !r,
                Player::Right => !l,
            }
        })
    }

    pub fn outcome(&mut self, p: &Position) -> Outcome {
        let (l, r) = self.wins(p);
        Outcome::from_wins(l, r)
    }
}

/// Misère outcome of a single position with a throwaway solver.
pub fn misere_outcome(p: &Position) -> Outcome {
    LiteralSolver::new(Convention::Misere).outcome(p)
}

/// In misère play an excess of at least two wins for the side ahead, and
/// adding `bw + bw` never changes a misère outcome.
pub fn verify_misere_two_ahead(max_stones: usize) -> Report {
    let mut report = Report::new(
        "misere two-ahead",
        format!("positions of <= {max_stones} stones"),
    );
    let mut solver = LiteralSolver::new(Convention::Misere);
    let positions = enumerate_positions(max_stones);
    for p in &positions {
        let delta = p.delta();
        let expected = match delta {
            d if d >= 2 => Outcome::L,
            d if d <= -2 => Outcome::R,
            _ => continue,
        };
        let o = solver.outcome(p);
        report.check(o == expected, || {
            format!("{p}: misere outcome {o} with delta {delta}")
        });
    }

    for (text, expected) in [
        ("bwww", Outcome::L),
        ("bww", Outcome::N),
        ("0", Outcome::N),
        ("bww+bww", Outcome::L),
    ] {
        let p: Position = text.parse().expect("fixture position");
        let o = solver.outcome(&p);
        report.check(o == expected, || {
            format!("{text}: misere outcome {o}, expected {expected}")
        });
    }

    let pair: Position = "bw+bw".parse().expect("fixture position");
    let smaller = std::iter::once(Position::default()).chain(
        positions
            .iter()
            .filter(|p| p.stones() + 4 <= max_stones)
            .cloned(),
    );
    for x in smaller {
        let with_pair = Position::new(x.strips().iter().chain(pair.strips()).cloned());
        let (a, b) = (solver.outcome(&x), solver.outcome(&with_pair));
        report.check(a == b, || {
            format!("{x}: misere outcome {a}, but {b} after adding bw+bw")
        });
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos(text: &str) -> Position {
        text.parse().unwrap()
    }

    #[test]
    fn empty_position() {
        assert_eq!(misere_outcome(&pos("0")), Outcome::N);
        let mut normal = LiteralSolver::new(Convention::Normal);
        assert_eq!(normal.outcome(&pos("0")), Outcome::P);
    }

    #[test]
    fn fixtures() {
        assert_eq!(misere_outcome(&pos("bwww")), Outcome::L);
        assert_eq!(misere_outcome(&pos("bww")), Outcome::N);
        assert_eq!(misere_outcome(&pos("bw")), Outcome::P);
        assert_eq!(misere_outcome(&pos("bw+bw")), Outcome::N);
    }

    #[test]
    fn normal_solver_matches_values() {
        let mut normal = LiteralSolver::new(Convention::Normal);
        let mut ev = crate::Evaluator::new();
        for p in enumerate_positions(6) {
            let g = ev.value(&p);
            assert_eq!(normal.outcome(&p), ev.outcome(g), "{p}");
        }
    }

    #[test]
    fn small_range_passes() {
        let report = verify_misere_two_ahead(6);
        assert!(report.passed(), "{report}");
    }
}
